#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "homlab/field_algebra.hpp"

namespace homlab {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed2024;
using Rng = std::mt19937_64;

// --- example algebras (all skew) ----------------------------------------------

/// d = 3, [l,m] = (l1 m3 - l3 m1, 0, l2 m3 - l3 m2), alpha(l) = (l2, l3, 0).
/// Requires p not in {2, 3}.
FieldHomAlgebra example_K3(std::uint32_t p);
/// d = 2, [l,m] = (0, l1 m2 - l2 m1), alpha(l) = (l1 + l2, l2). Requires p != 2.
FieldHomAlgebra example_K2(std::uint32_t p);
/// Zero bracket on dimension d, alpha = identity.
FieldHomAlgebra abelian_lie(std::uint32_t p, std::size_t d);
/// [e1,e2] = e2 with alpha = diag(1, c), a morphism for every c.
FieldHomAlgebra solvable_lie(std::uint32_t p, Scalar c = 1);
/// [e1,e2] = e3, [e2,e3] = e1, [e3,e1] = e2, alpha = identity.
FieldHomAlgebra sl2_lie(std::uint32_t p);
/// [e1,e2] = e3, alpha = identity.
FieldHomAlgebra heisenberg_lie(std::uint32_t p);

Matrix random_matrix(const PrimeField& f, std::size_t d, Rng& rng);
/// Skew structure constants with uniformly random entries above the diagonal.
FieldHomAlgebra random_skew(std::uint32_t p, std::size_t d, Rng& rng);
/// Random alpha whose kernel contains V^1 = [V, V].
Matrix random_alpha_killing_square(const FieldHomAlgebra& a, Rng& rng);

// --- reports -------------------------------------------------------------------

enum class Status { Pass, Fail, Refuted, Skipped, Info };
std::string_view status_name(Status s);

struct Check {
  std::string name;
  Status status = Status::Pass;
  std::string detail;
};

struct SuiteReport {
  std::uint64_t seed = kDefaultSeed;
  std::vector<Check> checks;

  void add(std::string name, bool ok, std::string detail = {});
  /// No check failed or was refuted.
  bool passed() const;
  std::string to_text() const;
  std::string to_json(int indent = 2) const;
};

// --- checks on a single algebra ------------------------------------------------

/// J^I1 + J^I2 + J^I3 = 0 and J^II1 + J^II2 + J^II3 = 0 on all basis triples.
/// Throws HypothesisNotMet if the bracket is not Lie.
bool verify_property9(const FieldHomAlgebra& a);

struct Prop11Result {
  bool i1 = false, i2 = false, ii1 = false, ii2 = false;
  /// (I2 => I1) and (II2 => II1).
  bool consistent() const { return (!i2 || i1) && (!ii2 || ii1); }
};
/// Throws HypothesisNotMet if the bracket is not Lie.
Prop11Result verify_prop11(const FieldHomAlgebra& a);

struct SweepCounts {
  std::size_t samples = 0;
  std::size_t premise = 0;
  std::size_t counterexamples = 0;
};
/// Random alpha on the bracket of `a`: property (9) failures, in `counterexamples`.
SweepCounts property9_sweep(const FieldHomAlgebra& a, std::size_t samples, Rng& rng);
/// Random alpha: premise = alpha with I2 or II2, counterexamples = Prop11Result inconsistent.
SweepCounts prop11_sweep(const FieldHomAlgebra& a, std::size_t samples, Rng& rng);

struct ExpansionResult {
  std::size_t triples = 0;
  /// Twisted Jacobiator computed directly equals the nine-term expansion.
  bool direct_equals_expansion = true;
  /// Direct minus the six-Jacobiator right-hand side is zero everywhere.
  bool residual_zero = true;
  /// ... and equals cyc [x,a([a(y),z])] + cyc [x,a([y,a(z)])] everywhere.
  bool residual_equals_omitted = true;
};
/// Requires a skew product (throws HypothesisNotMet otherwise); Jacobi not needed.
ExpansionResult expansion_residuals(const FieldHomAlgebra& a);

enum class Outcome { Confirmed, Refuted, HypothesisNotMet };
std::string_view outcome_name(Outcome o);
struct TwistedLieResult {
  bool morphism = false;
  bool hom_ii_and_ii1 = false;
  bool twisted_is_lie = false;
  Outcome outcome = Outcome::HypothesisNotMet;
};
/// When alpha is a morphism, or the twist is of Lie types II and II1, checks
/// whether the twisted bracket is Lie. Throws HypothesisNotMet if not Lie.
TwistedLieResult verify_prop13_14(const FieldHomAlgebra& a);

struct TwistClassCounts {
  std::size_t alphas = 0;
  bool exhaustive = false;
  std::size_t morphisms = 0;
  std::size_t morphisms_non_lie = 0;
  std::size_t ii_and_ii1 = 0;
  std::size_t ii_and_ii1_non_lie = 0;
  /// Alphas satisfying all ten Lie types.
  std::size_t hom_star = 0;
  Matrix first_morphism_non_lie;
  Matrix first_ii_non_lie;
};
/// Every alpha when p^(d^2) <= max_alphas, otherwise max_alphas random ones.
TwistClassCounts twist_class_sweep(const FieldHomAlgebra& a, std::size_t max_alphas, Rng& rng);

struct SelfAdjointResult {
  bool self_adjoint = false;
  bool sum_zero = false;
  bool i2_zero = false;
  bool i3_zero = false;
  /// [alpha(x), x] = 0 on every sampled x.
  bool alpha_x_x_zero = false;
  /// Meaningful only when self_adjoint.
  bool holds() const { return !self_adjoint || ((!sum_zero || (i2_zero && i3_zero)) && alpha_x_x_zero); }
};
/// Requires p odd (throws HypothesisNotMet).
SelfAdjointResult self_adjointness_probe(const FieldHomAlgebra& a, Rng& rng, std::size_t samples = 100);

// --- batch ---------------------------------------------------------------------

/// Runs every applicable check on one skew algebra.
SuiteReport lie_verify(const FieldHomAlgebra& a, std::uint64_t seed = kDefaultSeed);

/// The example fixtures with their claims, the property (9) sweeps, the
/// expansion oracle and the twisted-bracket sweeps over Z/p.
SuiteReport run_lie_suite(std::uint32_t p = 7, std::uint64_t seed = kDefaultSeed);

}  // namespace homlab
