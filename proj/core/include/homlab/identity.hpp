#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace homlab {

enum class Var : std::uint8_t { X = 0, Y = 1, Z = 2 };

/// Immutable term tree over x, y, z, the unit constant 1, the twist a(.) and
/// one binary product. Copies share structure.
class Term {
 public:
  enum class Kind : std::uint8_t { Var, Unit, Twist, Prod };

  static Term var(Var v);
  static Term unit();
  static Term twist(Term child);
  static Term prod(Term left, Term right);

  Kind kind() const;
  Var variable() const;
  /// Operand of a Twist.
  const Term& child() const;
  const Term& left() const;
  const Term& right() const;

  /// Number of nodes.
  std::size_t size() const;

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node;
  Term() = default;
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

enum class ProductSymbol : std::uint8_t { Star, Bracket };

struct Equation {
  Term lhs;
  Term rhs;
  friend bool operator==(const Equation&, const Equation&) = default;
};

/// body(x,y,z) + body(y,z,x) + body(z,x,y) = 0
struct CyclicZero {
  Term body;
  friend bool operator==(const CyclicZero&, const CyclicZero&) = default;
};

struct Identity {
  std::variant<Equation, CyclicZero> form;
  ProductSymbol symbol = ProductSymbol::Star;

  bool is_cyclic() const { return std::holds_alternative<CyclicZero>(form); }
  friend bool operator==(const Identity&, const Identity&) = default;
};

enum class Family : std::uint8_t { Assoc, Lie };
enum class TypeName : std::uint8_t { I1, I2, I3, II, II1, II2, II3, III, IIIp, IIIpp };

inline constexpr std::array<TypeName, 10> kAllTypeNames = {
    TypeName::I1,  TypeName::I2,  TypeName::I3,  TypeName::II,  TypeName::II1,
    TypeName::II2, TypeName::II3, TypeName::III, TypeName::IIIp, TypeName::IIIpp};

struct TypeTag {
  Family family;
  TypeName name;
  friend auto operator<=>(const TypeTag&, const TypeTag&) = default;
};

/// "I1", ..., "III'", "III''"
std::string_view type_name_string(TypeName n);
/// "assoc:I2", "lie:III'"
std::string to_string(TypeTag tag);
/// Accepts "I2", "assoc:I2", "lie:III'", and the prime characters U+2032/U+2033.
/// A missing family prefix selects `default_family`. Throws ParseError.
TypeTag parse_type_tag(std::string_view text, Family default_family = Family::Assoc);
std::vector<TypeTag> all_tags(Family family);
/// All 20 tags, associative family first.
std::vector<TypeTag> all_tags();

/// Grammar (whitespace insignificant):
///
///     identity := ["cyc"] side "=" (side | "0")
///     side     := term ["*" term]
///     term     := var | "1" | "a(" side ")" | "(" term "*" term ")" | "[" term "," term "]"
///     var      := "x" | "y" | "z"
///
/// A single product may stay unparenthesized at the top of a side or directly
/// inside a(...); everything else must be grouped. "= 0" requires "cyc" and
/// "cyc" requires "= 0". Throws ParseError / UnknownVariable with an offset.
Identity parse_identity(std::string_view text);

std::string render(const Term& t, ProductSymbol symbol);
std::string render(const Identity& id);

/// Catalog identity for a type, built from its canonical source string.
const Identity& builtin(TypeTag tag);
std::string_view builtin_source(TypeTag tag);

/// Exchanges the twist and the identity at variable positions: a(v) -> v and
/// v -> a(v). Throws NotSApplicable when a twist wraps anything but a variable.
Identity s_transform(const Identity& id);

/// Bitmask of variables occurring in t (bit 0 = x).
unsigned variable_mask(const Term& t);
bool contains_unit(const Term& t);

}  // namespace homlab
