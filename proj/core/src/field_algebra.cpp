#include "homlab/field_algebra.hpp"

#include <fmt/format.h>

#include "homlab/errors.hpp"

namespace homlab {

FieldHomAlgebra::FieldHomAlgebra(std::uint32_t p, std::size_t dim, std::vector<Scalar> constants, Matrix alpha,
                                 ProductKind kind, std::optional<Vector> unit)
    : field_(p), dim_(dim), constants_(std::move(constants)), alpha_(std::move(alpha)), kind_(kind),
      unit_(std::move(unit)) {
  if (dim_ == 0) throw InvalidAlgebra("algebra dimension must be positive");
  if (constants_.size() != dim_ * dim_ * dim_) {
    throw InvalidAlgebra(fmt::format("expected {} structure constants, got {}", dim_ * dim_ * dim_, constants_.size()));
  }
  for (std::size_t i = 0; i < constants_.size(); ++i) {
    if (constants_[i] >= p) throw InvalidAlgebra(fmt::format("structure constant #{} not reduced mod {}", i, p));
  }
  if (alpha_.size() != dim_) throw InvalidAlgebra("alpha must be a dim x dim matrix");
  for (std::size_t i = 0; i < dim_; ++i) {
    if (alpha_[i].size() != dim_) throw InvalidAlgebra("alpha must be a dim x dim matrix");
    for (auto s : alpha_[i]) {
      if (s >= p) throw InvalidAlgebra(fmt::format("alpha row {} not reduced mod {}", i, p));
    }
  }
  if (kind_ == ProductKind::Skew) {
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = 0; j < dim_; ++j) {
        for (std::size_t k = 0; k < dim_; ++k) {
          if (i == j && constant(i, i, k) != 0) {
            throw SkewViolation(fmt::format("c[{}][{}][{}] must be 0 for a skew product", i, i, k));
          }
          if (constant(i, j, k) != field_.neg(constant(j, i, k))) {
            throw SkewViolation(fmt::format("c[{}][{}][{}] != -c[{}][{}][{}]", i, j, k, j, i, k));
          }
        }
      }
    }
  }
  if (unit_) {
    if (unit_->size() != dim_) throw InvalidAlgebra("unit vector has the wrong length");
    for (auto s : *unit_) {
      if (s >= p) throw InvalidAlgebra("unit vector not reduced");
    }
    for (std::size_t i = 0; i < dim_; ++i) {
      const auto e = basis(i);
      if (mul(e, *unit_) != e || mul(*unit_, e) != e) {
        throw InvalidAlgebra(fmt::format("unit law fails at basis vector e{}", i + 1));
      }
    }
  }
}

Vector FieldHomAlgebra::mul(std::span<const Scalar> a, std::span<const Scalar> b) const {
  Vector out(dim_, 0);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (b[j] == 0) continue;
      field_.axpy(out, field_.mul(a[i], b[j]), basis_product(i, j));
    }
  }
  return out;
}

Vector FieldHomAlgebra::alpha(std::span<const Scalar> v) const { return apply_rows(field_, alpha_, v); }

FieldHomAlgebra FieldHomAlgebra::with_alpha(Matrix alpha) const {
  return FieldHomAlgebra(prime(), dim_, constants_, std::move(alpha), kind_, unit_);
}

FieldHomAlgebra linearize(const FiniteHomMagma& m, std::uint32_t p) {
  const std::size_t d = m.nonzero_count();
  auto coord = [&](Element e) -> std::optional<std::size_t> {
    if (m.zero() && e == *m.zero()) return std::nullopt;
    return e;
  };
  std::vector<Scalar> c(d * d * d, 0);
  for (Element i = 0; i < d; ++i) {
    for (Element j = 0; j < d; ++j) {
      if (auto k = coord(m.mul(i, j))) c[(i * d + j) * d + *k] = 1;
    }
  }
  Matrix alpha(d, Vector(d, 0));
  for (Element i = 0; i < d; ++i) {
    if (auto k = coord(m.alpha(i))) alpha[i][*k] = 1;
  }
  Vector unit(d, 0);
  unit[FiniteHomMagma::unit()] = 1;
  return FieldHomAlgebra(p, d, std::move(c), std::move(alpha), ProductKind::General, std::move(unit));
}

std::optional<Element> weak_left_unit(const FiniteHomMagma& m) {
  for (Element c = 0; c < m.size(); ++c) {
    bool ok = true;
    for (Element x = 0; x < m.size() && ok; ++x) ok = m.alpha(x) == m.mul(c, x);
    if (ok) return c;
  }
  return std::nullopt;
}

std::optional<Vector> weak_left_unit(const FieldHomAlgebra& a) {
  const std::size_t d = a.dim();
  // unknown i contributes e_i * e_j to the equation block for e_j
  Matrix columns(d, Vector(d * d, 0));
  Vector rhs(d * d, 0);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) {
      auto prod = a.basis_product(i, j);
      for (std::size_t k = 0; k < d; ++k) columns[i][j * d + k] = prod[k];
    }
    for (std::size_t k = 0; k < d; ++k) rhs[j * d + k] = a.alpha_matrix()[j][k];
  }
  return solve(a.field(), columns, rhs);
}

}  // namespace homlab
