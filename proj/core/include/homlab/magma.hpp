#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace homlab {

using Element = std::uint32_t;
using Table = std::vector<std::vector<Element>>;

/// Finite unital hom-magma (S, *, alpha, 1) with an optional absorbing zero.
///
/// Storage is canonical: the unit is index 0 and the zero, when present, is the
/// last index. Nonzero elements are displayed as e1..ek (e1 is the unit) and
/// the zero as "0". Values are immutable once constructed.
class FiniteHomMagma {
 public:
  /// Validates and relabels an arbitrary presentation into canonical storage.
  /// Non-unit, non-zero elements keep their relative order.
  /// Throws IndexOutOfRange, UnitLawViolation or ZeroLawViolation naming the
  /// first offending cell (in the caller's labels).
  static FiniteHomMagma create(std::size_t n, const Table& table, std::span<const Element> alpha, Element unit,
                               std::optional<Element> zero);

  /// Builds from canonical storage (unit 0, zero last) given flattened tables.
  static FiniteHomMagma from_canonical(std::size_t n, bool has_zero, std::vector<Element> table,
                                       std::vector<Element> alpha);

  std::size_t size() const noexcept { return n_; }
  std::size_t nonzero_count() const noexcept { return has_zero_ ? n_ - 1 : n_; }
  Element mul(Element a, Element b) const noexcept { return table_[a * n_ + b]; }
  Element alpha(Element a) const noexcept { return alpha_[a]; }
  static constexpr Element unit() noexcept { return 0; }
  bool has_zero() const noexcept { return has_zero_; }
  std::optional<Element> zero() const noexcept {
    return has_zero_ ? std::optional<Element>(static_cast<Element>(n_ - 1)) : std::nullopt;
  }

  /// Row-major n*n multiplication table.
  std::span<const Element> table() const noexcept { return table_; }
  std::span<const Element> alpha_map() const noexcept { return alpha_; }

  /// "e1".."ek" for nonzero elements, "0" for the zero.
  std::string name(Element a) const;

  /// Relabels by a permutation of all elements (perm[old] = new). The result is
  /// validated, so perm must keep the unit at 0 and the zero last.
  FiniteHomMagma relabel(std::span<const Element> perm) const;

  friend bool operator==(const FiniteHomMagma&, const FiniteHomMagma&) = default;
  /// Lexicographic on (size, flattened table, alpha map), then has_zero.
  friend std::strong_ordering operator<=>(const FiniteHomMagma& a, const FiniteHomMagma& b);

 private:
  FiniteHomMagma(std::size_t n, bool has_zero, std::vector<Element> table, std::vector<Element> alpha)
      : n_(n), has_zero_(has_zero), table_(std::move(table)), alpha_(std::move(alpha)) {}
  void validate() const;

  std::size_t n_ = 0;
  bool has_zero_ = false;
  std::vector<Element> table_;
  std::vector<Element> alpha_;
};

/// Validating constructor (see FiniteHomMagma::create).
FiniteHomMagma new_magma(std::size_t n, const Table& table, std::span<const Element> alpha, Element unit,
                         std::optional<Element> zero);

/// Builds a hom-monoid with zero from the counterexample shorthand, e.g.
///
///     "e2*e2=e1; e3*e3=e2; alpha: e1->e3"
///
/// e1 is the unit; the zero is adjoined after the highest-numbered element.
/// Unlisted products among e2..en are zero, unlisted alpha values are zero.
/// An optional clause "elements: e1..ek" declares elements no relation mentions.
/// Throws ParseError on malformed text and ConflictingRelation when a product
/// or alpha value is stated twice inconsistently or contradicts the unit law.
FiniteHomMagma from_relations(std::string_view text);

/// Inverse of from_relations for magmas with a zero.
std::string to_relations(const FiniteHomMagma& m);

}  // namespace homlab
