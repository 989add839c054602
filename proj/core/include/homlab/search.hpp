#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "homlab/identity.hpp"
#include "homlab/magma.hpp"

namespace homlab {

/// A named equation the search must satisfy or refute.
struct Constraint {
  std::string label;
  Identity identity;

  static Constraint from_tag(TypeTag tag);
  /// Parses `source` with parse_identity; the label is the source text.
  static Constraint from_source(std::string_view source);
};

struct SearchSpec {
  /// Bound on the number of nonzero elements (unit included).
  std::size_t max_nonzero = 3;
  std::vector<Constraint> require;
  std::vector<Constraint> violate;
  bool with_zero = true;
  bool unital = true;
  bool prune_isomorphs = true;

  static SearchSpec from_tags(const std::vector<TypeTag>& require, const std::vector<TypeTag>& violate,
                              std::size_t max_nonzero);
  /// Throws InvalidSpec (empty bound, overlapping sets, non-unital request) or
  /// CyclicNotSupportedOnMagma.
  void validate() const;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t models_tested = 0;
  double seconds = 0.0;
};

struct Verdict {
  /// Set when a countermodel exists within the bound.
  std::optional<FiniteHomMagma> countermodel;
  /// Bound that was exhausted (equals the spec bound when nothing was found).
  std::size_t exhausted_up_to = 0;
  SearchStats stats;

  bool found() const { return countermodel.has_value(); }
};

struct SearchOptions {
  unsigned workers = 1;
};

/// Backtracking search over unital magmas (with zero unless disabled), sizes
/// ascending. Table cells among non-unit nonzero elements are assigned
/// row-major, then alpha values. Values are tried in the order zero, e1, e2, ...
/// (the search order), so the first model reached is the least on
/// (size, table, alpha) under that order, which favours sparse tables. It is also its
/// own canonical form, so the answer does not depend on pruning or on the
/// worker count. The returned model is re-verified against every constraint.
Verdict find_model(const SearchSpec& spec, SearchOptions options = {});

/// Up to `limit` pairwise non-isomorphic models, each in canonical form,
/// ordered by (size, table, alpha) in the search order.
std::vector<FiniteHomMagma> enumerate_models(const SearchSpec& spec, std::size_t limit,
                                             SearchOptions options = {});

/// Least relabeling, in the search order, under permutations fixing the unit and the zero.
FiniteHomMagma canonical_form(const FiniteHomMagma& m);
bool isomorphic(const FiniteHomMagma& a, const FiniteHomMagma& b);

/// find_model(require = premises, violate = {conclusion}); an exhausted
/// verdict means no countermodel exists within the bound.
Verdict verify_implication(const std::vector<TypeTag>& premises, TypeTag conclusion, std::size_t max_nonzero,
                           SearchOptions options = {});

// JSON spec files: {"max_n":3,"require":["I2"],"violate":["I3"],"custom":["..."],
//                   "custom_violate":["..."],"with_zero":true,"prune":true}
// "custom" entries are extra required identities in the identity grammar.
SearchSpec search_spec_from_json(std::string_view text);
std::string search_spec_to_json(const SearchSpec& spec, int indent = 2);
/// Deterministic: statistics are only included when `with_stats` is set.
std::string verdict_to_json(const SearchSpec& spec, const Verdict& v, bool with_stats = false, int indent = 2);

}  // namespace homlab
