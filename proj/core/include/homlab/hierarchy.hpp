#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "homlab/evaluator.hpp"
#include "homlab/field_algebra.hpp"
#include "homlab/identity.hpp"
#include "homlab/magma.hpp"
#include "homlab/search.hpp"

namespace homlab {

/// A small unital magma with zero, given in relation shorthand, together with
/// the types it is claimed to satisfy and to violate.
struct Fixture {
  std::string id;
  std::string relations;
  std::vector<TypeTag> claimed_satisfied;
  std::vector<TypeTag> claimed_violated;
  /// Corrected relations when the literal ones do not meet the claims.
  std::optional<std::string> repair;
};

/// The sixteen countermodel fixtures ("1".."15" and "inline-I3"), relations
/// transcribed literally.
const std::vector<Fixture>& builtin_fixtures();
const Fixture& builtin_fixture(std::string_view id);

struct Mismatch {
  TypeTag tag;
  /// True when the tag was claimed satisfied but fails.
  bool claimed_satisfied = false;
};

struct FixtureReport {
  std::string id;
  std::string relations;
  TypeProfile profile;
  std::vector<Mismatch> mismatches;

  bool passed() const { return mismatches.empty(); }
};

/// Only the named claims are asserted; the rest of the profile is reported.
FixtureReport verify_fixture(const Fixture& f);

enum class Lemma { I1OrII, ImAssoc, Bis, Lemma3 };
/// Accepts "I1-or-II", "imassoc", "bis", "lemma3".
Lemma parse_lemma(std::string_view name);
std::string_view lemma_name(Lemma l);
/// The lemma's equalities, in the identity grammar.
const std::vector<Identity>& lemma_identities(Lemma l);
/// The lemma's hypothesis: any-of (I1-or-II) or all-of (the others).
std::vector<TypeTag> lemma_hypothesis(Lemma l);

/// True iff every equality of the lemma holds. Throws HypothesisNotMet when
/// the magma lacks the hypothesis types.
bool lemma_equalities(const FiniteHomMagma& m, Lemma l);

struct Edge {
  std::vector<TypeTag> premises;
  TypeTag conclusion;
  std::string note;
};

/// The positive implications between unital associative types. Conditional
/// equivalence of II1 and II3 under I2 is two directed edges.
const std::vector<Edge>& implication_graph();
/// {III, III', III''} => I1, the reverse of a proved edge family; probed, not assumed.
Edge printed_direction_probe();

struct EdgeResult {
  Edge edge;
  Verdict verdict;
};

struct FixtureSearch {
  std::string id;
  std::size_t bound = 0;
  Verdict verdict;
};

struct HierarchyReport {
  std::size_t max_n = 0;
  std::vector<EdgeResult> edges;
  std::vector<FixtureReport> fixtures;
  /// Reports for the repaired relations of fixtures that carry one.
  std::vector<FixtureReport> repairs;
  /// Independent search for a model of each fixture's claims.
  std::vector<FixtureSearch> searches;
  EdgeResult printed_direction;
  std::vector<std::string> warnings;

  bool edges_exhausted() const;
  bool fixtures_pass() const;
  bool passed() const { return edges_exhausted() && fixtures_pass(); }
  std::string to_text() const;
  /// Deterministic (no timings).
  std::string to_json(int indent = 2) const;
};

/// Runs every edge search, every fixture check and the probes. A warning is
/// recorded for bounds above 4.
HierarchyReport verify_hierarchy(std::size_t max_n = 3, SearchOptions options = {},
                                 const std::vector<Edge>& extra_edges = {});

struct InverseTwistReport {
  Vector weak_unit;
  Matrix beta;
  bool type_i3 = false;
  bool type_ii = false;

  bool passed() const { return type_i3 && type_ii; }
};

/// For a type-I1, weakly left unital algebra with invertible twist, checks
/// that the product with beta = alpha^-1 is of types I3 and II.
/// Throws HypothesisNotMet, NotWeaklyUnital or AlphaNotInvertible.
InverseTwistReport inverse_twist_check(const FieldHomAlgebra& a);

/// Group algebra of Z/3 over Z/p with alpha = left multiplication by the generator.
FieldHomAlgebra cyclic_group_algebra(std::uint32_t p);

}  // namespace homlab
