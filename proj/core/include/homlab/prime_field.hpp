#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace homlab {

using Scalar = std::uint32_t;
using Vector = std::vector<Scalar>;
/// Row-major dense matrix; rows()[i] is a coordinate vector.
using Matrix = std::vector<Vector>;

bool is_prime(std::uint32_t n);

/// Exact arithmetic in Z/p for a prime p < 2^31. All inputs are assumed reduced.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const noexcept { return p_; }

  Scalar reduce(std::int64_t v) const noexcept {
    auto r = v % static_cast<std::int64_t>(p_);
    return static_cast<Scalar>(r < 0 ? r + p_ : r);
  }
  Scalar add(Scalar a, Scalar b) const noexcept {
    auto s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Scalar sub(Scalar a, Scalar b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Scalar neg(Scalar a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Scalar mul(Scalar a, Scalar b) const noexcept { return static_cast<Scalar>((std::uint64_t{a} * b) % p_); }
  Scalar inv(Scalar a) const;

  Vector zero(std::size_t d) const { return Vector(d, 0); }
  Vector basis(std::size_t d, std::size_t i) const;
  Vector add(std::span<const Scalar> a, std::span<const Scalar> b) const;
  Vector sub(std::span<const Scalar> a, std::span<const Scalar> b) const;
  Vector scale(Scalar s, std::span<const Scalar> a) const;
  /// a += s * b
  void axpy(Vector& a, Scalar s, std::span<const Scalar> b) const;

 private:
  std::uint32_t p_;
};

bool is_zero(std::span<const Scalar> v);

Matrix identity_matrix(std::size_t d);

/// Image of v under the map whose i-th row is the image of e_i: sum_i v_i * rows[i].
Vector apply_rows(const PrimeField& f, const Matrix& rows, std::span<const Scalar> v);

/// Reduced row echelon form of the span of `rows`; zero rows dropped.
Matrix row_reduce(const PrimeField& f, Matrix rows);

std::size_t rank(const PrimeField& f, const Matrix& rows);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> invert(const PrimeField& f, const Matrix& m);

/// One solution c of sum_i c_i * columns[i] = rhs (free variables set to 0), or nullopt.
/// `columns[i]` is the coefficient column of unknown i; all columns share rhs's length.
std::optional<Vector> solve(const PrimeField& f, const Matrix& columns, std::span<const Scalar> rhs);

}  // namespace homlab
