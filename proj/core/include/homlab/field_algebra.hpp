#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "homlab/magma.hpp"
#include "homlab/prime_field.hpp"

namespace homlab {

enum class ProductKind { General, Skew };

/// Finite-dimensional algebra over Z/p given by structure constants
/// e_i * e_j = sum_k c[i][j][k] e_k and a linear twist alpha.
///
/// `alpha` is stored row-wise: row i holds the coordinates of alpha(e_i).
/// Constants are stored in full even for skew brackets; antisymmetry is validated.
class FieldHomAlgebra {
 public:
  /// `constants` is the flattened c[i][j][k] (index (i*d + j)*d + k).
  /// Throws InvalidAlgebra for unreduced entries or shape errors, SkewViolation
  /// when a skew product is not alternating, InvalidAlgebra for a bad unit.
  FieldHomAlgebra(std::uint32_t p, std::size_t dim, std::vector<Scalar> constants, Matrix alpha, ProductKind kind,
                  std::optional<Vector> unit = std::nullopt);

  const PrimeField& field() const noexcept { return field_; }
  std::uint32_t prime() const noexcept { return field_.modulus(); }
  std::size_t dim() const noexcept { return dim_; }
  ProductKind kind() const noexcept { return kind_; }
  const Matrix& alpha_matrix() const noexcept { return alpha_; }
  const std::optional<Vector>& unit_vector() const noexcept { return unit_; }
  std::span<const Scalar> constants() const noexcept { return constants_; }

  Scalar constant(std::size_t i, std::size_t j, std::size_t k) const { return constants_[(i * dim_ + j) * dim_ + k]; }
  /// Coordinates of e_i * e_j.
  std::span<const Scalar> basis_product(std::size_t i, std::size_t j) const {
    return std::span<const Scalar>(constants_).subspan((i * dim_ + j) * dim_, dim_);
  }

  Vector mul(std::span<const Scalar> a, std::span<const Scalar> b) const;
  Vector alpha(std::span<const Scalar> v) const;
  Vector basis(std::size_t i) const { return field_.basis(dim_, i); }

  /// Same product, different twist.
  FieldHomAlgebra with_alpha(Matrix alpha) const;

  friend bool operator==(const FieldHomAlgebra& a, const FieldHomAlgebra& b) {
    return a.prime() == b.prime() && a.dim_ == b.dim_ && a.kind_ == b.kind_ && a.constants_ == b.constants_ &&
           a.alpha_ == b.alpha_ && a.unit_ == b.unit_;
  }

 private:
  PrimeField field_;
  std::size_t dim_;
  std::vector<Scalar> constants_;
  Matrix alpha_;
  ProductKind kind_;
  std::optional<Vector> unit_;
};

/// k[S]/(k*0): basis indexed by the nonzero elements of S, product and twist
/// extended linearly, the zero element killed. The unit vector is e1.
FieldHomAlgebra linearize(const FiniteHomMagma& m, std::uint32_t p);

/// Some c with alpha(x) = c * x for every x (left multiplication), smallest index first.
std::optional<Element> weak_left_unit(const FiniteHomMagma& m);
/// Solves alpha(e_j) = c * e_j for all j; free coordinates are set to zero.
std::optional<Vector> weak_left_unit(const FieldHomAlgebra& a);

}  // namespace homlab
