#include "homlab/prime_field.hpp"

#include <cassert>
#include <fmt/format.h>
#include <utility>

#include "homlab/errors.hpp"

namespace homlab {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw InvalidAlgebra(fmt::format("modulus {} is not a prime below 2^31", p));
  }
}

Scalar PrimeField::inv(Scalar a) const {
  if (a == 0) throw InvalidAlgebra("division by zero in Z/p");
  // Fermat: a^(p-2)
  std::uint64_t result = 1, base = a, e = p_ - 2;
  while (e) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<Scalar>(result);
}

Vector PrimeField::basis(std::size_t d, std::size_t i) const {
  Vector v(d, 0);
  v.at(i) = 1;
  return v;
}

Vector PrimeField::add(std::span<const Scalar> a, std::span<const Scalar> b) const {
  assert(a.size() == b.size());
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = add(a[i], b[i]);
  return r;
}

Vector PrimeField::sub(std::span<const Scalar> a, std::span<const Scalar> b) const {
  assert(a.size() == b.size());
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = sub(a[i], b[i]);
  return r;
}

Vector PrimeField::scale(Scalar s, std::span<const Scalar> a) const {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mul(s, a[i]);
  return r;
}

void PrimeField::axpy(Vector& a, Scalar s, std::span<const Scalar> b) const {
  assert(a.size() == b.size());
  if (s == 0) return;
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = add(a[i], mul(s, b[i]));
}

bool is_zero(std::span<const Scalar> v) {
  for (auto s : v) {
    if (s != 0) return false;
  }
  return true;
}

Matrix identity_matrix(std::size_t d) {
  Matrix m(d, Vector(d, 0));
  for (std::size_t i = 0; i < d; ++i) m[i][i] = 1;
  return m;
}

Vector apply_rows(const PrimeField& f, const Matrix& rows, std::span<const Scalar> v) {
  assert(rows.size() == v.size());
  Vector out(rows.empty() ? 0 : rows.front().size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) f.axpy(out, v[i], rows[i]);
  return out;
}

namespace {

// In-place Gauss-Jordan elimination; returns pivot columns.
std::vector<std::size_t> eliminate(const PrimeField& f, Matrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m.front().size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    const Scalar inv = f.inv(m[row][col]);
    for (auto& s : m[row]) s = f.mul(s, inv);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r != row && m[r][col] != 0) f.axpy(m[r], f.neg(m[r][col]), m[row]);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Matrix row_reduce(const PrimeField& f, Matrix rows) {
  auto pivots = eliminate(f, rows);
  rows.resize(pivots.size());
  return rows;
}

std::size_t rank(const PrimeField& f, const Matrix& rows) { return row_reduce(f, rows).size(); }

std::optional<Matrix> invert(const PrimeField& f, const Matrix& m) {
  const std::size_t d = m.size();
  Matrix aug(d, Vector(2 * d, 0));
  for (std::size_t i = 0; i < d; ++i) {
    if (m[i].size() != d) throw InvalidAlgebra("invert: matrix is not square");
    for (std::size_t j = 0; j < d; ++j) aug[i][j] = m[i][j];
    aug[i][d + i] = 1;
  }
  auto pivots = eliminate(f, aug);
  if (d != 0 && (pivots.size() < d || pivots[d - 1] != d - 1)) return std::nullopt;
  Matrix out(d, Vector(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) out[i][j] = aug[i][d + j];
  }
  return out;
}

std::optional<Vector> solve(const PrimeField& f, const Matrix& columns, std::span<const Scalar> rhs) {
  const std::size_t unknowns = columns.size();
  const std::size_t eqs = rhs.size();
  Matrix aug(eqs, Vector(unknowns + 1, 0));
  for (std::size_t r = 0; r < eqs; ++r) {
    for (std::size_t c = 0; c < unknowns; ++c) aug[r][c] = columns[c].at(r);
    aug[r][unknowns] = rhs[r];
  }
  auto pivots = eliminate(f, aug);
  if (!pivots.empty() && pivots.back() == unknowns) return std::nullopt;
  Vector sol(unknowns, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) sol[pivots[r]] = aug[r][unknowns];
  return sol;
}

}  // namespace homlab
