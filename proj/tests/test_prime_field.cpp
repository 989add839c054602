#include <doctest.h>

#include "homlab/errors.hpp"
#include "homlab/prime_field.hpp"

using namespace homlab;

TEST_CASE("field arithmetic agrees with integer arithmetic mod p") {
  PrimeField f(7);
  for (Scalar a = 0; a < 7; ++a) {
    for (Scalar b = 0; b < 7; ++b) {
      CHECK(f.add(a, b) == (a + b) % 7);
      CHECK(f.sub(a, b) == (a + 7 - b) % 7);
      CHECK(f.mul(a, b) == (a * b) % 7);
    }
    if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
  }
  CHECK(f.reduce(-1) == 6);
  CHECK(f.reduce(-15) == 6);
}

TEST_CASE("non-prime modulus is rejected") {
  CHECK_THROWS(PrimeField(8));
  CHECK_THROWS(PrimeField(1));
  CHECK(is_prime(2147483647u));
  CHECK_FALSE(is_prime(91));
}

TEST_CASE("rank, inverse and solve") {
  PrimeField f(5);
  Matrix m{{1, 2, 0}, {2, 4, 0}, {0, 0, 3}};
  CHECK(rank(f, m) == 2);
  CHECK_FALSE(invert(f, m).has_value());

  Matrix g{{2, 1, 0}, {0, 1, 4}, {3, 0, 1}};
  auto inv = invert(f, g);
  REQUIRE(inv.has_value());
  // g * inv = identity, rows as images
  for (std::size_t i = 0; i < 3; ++i) {
    const Vector row = apply_rows(f, *inv, g[i]);
    CHECK(row == f.basis(3, i));
  }

  // 2*c0 + 1*c1 = (1, 3) with columns c0 = (1, 0), c1 = (4, 3)
  Matrix cols{{1, 0}, {4, 3}};
  auto sol = solve(f, cols, Vector{1, 3});
  REQUIRE(sol.has_value());
  CHECK(f.add(f.mul((*sol)[0], 1), f.mul((*sol)[1], 4)) == 1);
  CHECK(f.mul((*sol)[1], 3) == 3);
  CHECK_FALSE(solve(f, Matrix{{1, 1}}, Vector{0, 1}).has_value());

  CHECK(invert(f, Matrix{}).has_value());
}
