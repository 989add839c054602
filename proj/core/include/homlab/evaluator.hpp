#pragma once

#include <array>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "homlab/field_algebra.hpp"
#include "homlab/identity.hpp"
#include "homlab/magma.hpp"

namespace homlab {

enum class CarrierFamily { AssocOnly, Both };

struct TypeProfile {
  std::set<TypeTag> satisfied;
  CarrierFamily carrier = CarrierFamily::AssocOnly;

  bool contains(TypeTag t) const { return satisfied.contains(t); }
  /// Evaluated tags that do not hold.
  std::vector<TypeTag> violated() const;
  /// Restriction to the associative family (what a magma can be compared on).
  TypeProfile assoc_part() const;
  friend bool operator==(const TypeProfile&, const TypeProfile&) = default;
};

// --- magmas -----------------------------------------------------------------

/// True iff the equation holds for every assignment of elements to x, y, z.
/// Throws CyclicNotSupportedOnMagma for cyclic identities.
bool holds(const FiniteHomMagma& m, const Identity& id);
/// First (x, y, z) in lexicographic order where the equation fails.
std::optional<std::array<Element, 3>> find_violation(const FiniteHomMagma& m, const Identity& id);
Element evaluate(const FiniteHomMagma& m, const Term& t, Element x, Element y, Element z);

// --- field algebras ---------------------------------------------------------

/// Value of the identity at (x, y, z): lhs - rhs for equations, the three-term
/// cyclic sum for cyclic identities. Throws UnitUnavailable when the identity
/// uses 1 and the algebra has no unit vector.
Vector identity_value(const FieldHomAlgebra& a, const Identity& id, std::span<const Scalar> x,
                      std::span<const Scalar> y, std::span<const Scalar> z);
Vector evaluate(const FieldHomAlgebra& a, const Term& t, std::span<const Scalar> x, std::span<const Scalar> y,
                std::span<const Scalar> z);

/// True iff the identity vanishes on all d^3 basis triples, which decides it on
/// all of V because every side is multilinear. Throws NotMultilinear for
/// identities where a side repeats a variable or the sides use different variables.
bool holds_multilinear(const FieldHomAlgebra& a, const Identity& id);
/// Basis indices of the first failing triple.
std::optional<std::array<std::size_t, 3>> find_violation(const FieldHomAlgebra& a, const Identity& id);

/// Magmas get the 10 associative tags; field algebras all 20.
TypeProfile type_profile(const FiniteHomMagma& m);
TypeProfile type_profile(const FieldHomAlgebra& a);

// --- bracket calculus (skew products) ---------------------------------------

/// J^tag_alpha(x, y, z) for a Lie-family tag.
Vector jacobiator(const FieldHomAlgebra& a, TypeTag tag, std::span<const Scalar> x, std::span<const Scalar> y,
                  std::span<const Scalar> z);
/// Untwisted Jacobiator: cyclic sum of [x,[y,z]].
Vector jacobi(const FieldHomAlgebra& a, std::span<const Scalar> x, std::span<const Scalar> y,
              std::span<const Scalar> z);

/// Same twist, bracket [a,b] + [alpha(a),b] + [a,alpha(b)].
FieldHomAlgebra twisted_bracket(const FieldHomAlgebra& a);

/// [alpha(a),alpha(b)] - alpha([a,b])
Vector morphism_defect(const FieldHomAlgebra& alg, std::span<const Scalar> a, std::span<const Scalar> b);
bool is_morphism(const FieldHomAlgebra& alg);

/// Cyclic sum of [x,alpha([y,z])] - [x,[alpha(y),alpha(z)]].
Vector type_defect(const FieldHomAlgebra& a, std::span<const Scalar> x, std::span<const Scalar> y,
                   std::span<const Scalar> z);

/// Row-reduced bases of V^0 = V, V^k = [V, V^(k-1)] for k = 0..depth.
std::vector<Matrix> central_series(const FieldHomAlgebra& a, std::size_t depth);

/// Jacobi identity on all basis triples (the twist is ignored).
bool is_lie(const FieldHomAlgebra& a);

}  // namespace homlab
