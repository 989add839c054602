#include "homlab/identity.hpp"

#include <cctype>
#include <fmt/format.h>
#include <map>
#include <optional>

#include "homlab/errors.hpp"

namespace homlab {

struct Term::Node {
  Kind kind;
  Var var = Var::X;
  Term a;
  Term b;
};

Term Term::var(Var v) { return Term(std::make_shared<const Node>(Node{Kind::Var, v, {}, {}})); }
Term Term::unit() { return Term(std::make_shared<const Node>(Node{Kind::Unit, Var::X, {}, {}})); }
Term Term::twist(Term child) {
  return Term(std::make_shared<const Node>(Node{Kind::Twist, Var::X, std::move(child), {}}));
}
Term Term::prod(Term left, Term right) {
  return Term(std::make_shared<const Node>(Node{Kind::Prod, Var::X, std::move(left), std::move(right)}));
}

Term::Kind Term::kind() const { return node_->kind; }
Var Term::variable() const { return node_->var; }
const Term& Term::child() const { return node_->a; }
const Term& Term::left() const { return node_->a; }
const Term& Term::right() const { return node_->b; }

std::size_t Term::size() const {
  switch (kind()) {
    case Kind::Var:
    case Kind::Unit:
      return 1;
    case Kind::Twist:
      return 1 + child().size();
    case Kind::Prod:
      return 1 + left().size() + right().size();
  }
  return 0;
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::Var:
      return a.variable() == b.variable();
    case Term::Kind::Unit:
      return true;
    case Term::Kind::Twist:
      return a.child() == b.child();
    case Term::Kind::Prod:
      return a.left() == b.left() && a.right() == b.right();
  }
  return false;
}

std::string_view type_name_string(TypeName n) {
  switch (n) {
    case TypeName::I1: return "I1";
    case TypeName::I2: return "I2";
    case TypeName::I3: return "I3";
    case TypeName::II: return "II";
    case TypeName::II1: return "II1";
    case TypeName::II2: return "II2";
    case TypeName::II3: return "II3";
    case TypeName::III: return "III";
    case TypeName::IIIp: return "III'";
    case TypeName::IIIpp: return "III''";
  }
  return "?";
}

std::string to_string(TypeTag tag) {
  return fmt::format("{}:{}", tag.family == Family::Assoc ? "assoc" : "lie", type_name_string(tag.name));
}

TypeTag parse_type_tag(std::string_view text, Family default_family) {
  Family family = default_family;
  std::string_view rest = text;
  if (auto colon = text.find(':'); colon != std::string_view::npos) {
    auto prefix = text.substr(0, colon);
    if (prefix == "assoc") {
      family = Family::Assoc;
    } else if (prefix == "lie") {
      family = Family::Lie;
    } else {
      throw ParseError(0, fmt::format("unknown type family '{}'", prefix));
    }
    rest = text.substr(colon + 1);
  }
  std::string norm;
  for (std::size_t i = 0; i < rest.size();) {
    if (rest.substr(i, 3) == "′") {
      norm += '\'';
      i += 3;
    } else if (rest.substr(i, 3) == "″") {
      norm += "''";
      i += 3;
    } else {
      norm += rest[i++];
    }
  }
  for (auto n : kAllTypeNames) {
    if (type_name_string(n) == norm) return {family, n};
  }
  throw ParseError(static_cast<std::size_t>(rest.data() - text.data()), fmt::format("unknown type '{}'", text));
}

std::vector<TypeTag> all_tags(Family family) {
  std::vector<TypeTag> out;
  for (auto n : kAllTypeNames) out.push_back({family, n});
  return out;
}

std::vector<TypeTag> all_tags() {
  auto out = all_tags(Family::Assoc);
  auto lie = all_tags(Family::Lie);
  out.insert(out.end(), lie.begin(), lie.end());
  return out;
}

namespace {

class IdentityParser {
 public:
  explicit IdentityParser(std::string_view text) : text_(text) {}

  Identity parse() {
    skip_ws();
    bool cyclic = false;
    if (text_.substr(pos_, 3) == "cyc") {
      auto after = pos_ + 3;
      if (after == text_.size() || !std::isalnum(static_cast<unsigned char>(text_[after]))) {
        cyclic = true;
        pos_ = after;
      }
    }
    Term lhs = side();
    expect('=');
    skip_ws();
    std::size_t rhs_at = pos_;
    if (pos_ < text_.size() && text_[pos_] == '0') {
      ++pos_;
      if (!cyclic) throw ParseError(rhs_at, "'= 0' requires the 'cyc' prefix");
      finish();
      return Identity{CyclicZero{std::move(lhs)}, symbol()};
    }
    if (cyclic) throw ParseError(rhs_at, "a 'cyc' identity must have right-hand side 0");
    Term rhs = side();
    finish();
    return Identity{Equation{std::move(lhs), std::move(rhs)}, symbol()};
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) { throw ParseError(pos_, what); }
  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(fmt::format("expected '{}'", c));
  }
  void finish() {
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
  }
  void saw(ProductSymbol s, std::size_t at) {
    if (symbol_ && *symbol_ != s) throw ParseError(at, "identity mixes '*' and '[,]' products");
    symbol_ = s;
  }
  ProductSymbol symbol() const { return symbol_.value_or(ProductSymbol::Star); }

  Term side() {
    Term left = term();
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '*') {
      saw(ProductSymbol::Star, pos_);
      ++pos_;
      return Term::prod(std::move(left), term());
    }
    return left;
  }

  Term term() {
    skip_ws();
    if (pos_ >= text_.size()) fail("expected a term");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Term l = term();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != '*') fail("expected '*'");
      saw(ProductSymbol::Star, pos_);
      ++pos_;
      Term r = term();
      expect(')');
      return Term::prod(std::move(l), std::move(r));
    }
    if (c == '[') {
      saw(ProductSymbol::Bracket, pos_);
      ++pos_;
      Term l = term();
      expect(',');
      Term r = term();
      expect(']');
      return Term::prod(std::move(l), std::move(r));
    }
    if (c == '1') {
      ++pos_;
      return Term::unit();
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      auto word = text_.substr(start, pos_ - start);
      if (word == "a") {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '(') {
          ++pos_;
          Term inner = side();
          expect(')');
          return Term::twist(std::move(inner));
        }
      }
      if (word == "x") return Term::var(Var::X);
      if (word == "y") return Term::var(Var::Y);
      if (word == "z") return Term::var(Var::Z);
      throw UnknownVariable(start, fmt::format("unknown variable '{}'", word));
    }
    fail(fmt::format("unexpected character '{}'", c));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::optional<ProductSymbol> symbol_;
};

std::string render_term(const Term& t, ProductSymbol s, bool top) {
  switch (t.kind()) {
    case Term::Kind::Var:
      return std::string(1, "xyz"[static_cast<int>(t.variable())]);
    case Term::Kind::Unit:
      return "1";
    case Term::Kind::Twist:
      return "a(" + render_term(t.child(), s, true) + ")";
    case Term::Kind::Prod: {
      auto l = render_term(t.left(), s, false);
      auto r = render_term(t.right(), s, false);
      if (s == ProductSymbol::Bracket) return "[" + l + "," + r + "]";
      return top ? l + "*" + r : "(" + l + "*" + r + ")";
    }
  }
  return {};
}

constexpr std::array<std::string_view, 10> kAssocSources = {
    "a(x)*(y*z) = (x*y)*a(z)",                // I1
    "x*(a(y)*z) = (x*a(y))*z",                // I2
    "x*(y*a(z)) = (a(x)*y)*z",                // I3
    "x*a(y*z) = a(x*y)*z",                    // II
    "x*(a(y)*a(z)) = (a(x)*a(y))*z",          // II1
    "a(x)*(y*a(z)) = (a(x)*y)*a(z)",          // II2
    "a(x)*(a(y)*z) = (x*a(y))*a(z)",          // II3
    "a(x*(y*z)) = a((x*y)*z)",                // III
    "a(x)*a(y*z) = a(x*y)*a(z)",              // III'
    "a(x)*(a(y)*a(z)) = (a(x)*a(y))*a(z)",    // III''
};

constexpr std::array<std::string_view, 10> kLieSources = {
    "cyc [a(x),[y,z]] = 0",         // I1
    "cyc [x,[a(y),z]] = 0",         // I2
    "cyc [x,[y,a(z)]] = 0",         // I3
    "cyc [x,a([y,z])] = 0",         // II
    "cyc [x,[a(y),a(z)]] = 0",      // II1
    "cyc [a(x),[y,a(z)]] = 0",      // II2
    "cyc [a(x),[a(y),z]] = 0",      // II3
    "cyc a([x,[y,z]]) = 0",         // III
    "cyc [a(x),a([y,z])] = 0",      // III'
    "cyc [a(x),[a(y),a(z)]] = 0",   // III''
};

Term s_term(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Var:
      return Term::twist(t);
    case Term::Kind::Unit:
      return t;
    case Term::Kind::Twist:
      if (t.child().kind() != Term::Kind::Var) {
        throw NotSApplicable("S-transform needs every twist applied directly to a variable");
      }
      return t.child();
    case Term::Kind::Prod:
      return Term::prod(s_term(t.left()), s_term(t.right()));
  }
  return t;
}

}  // namespace

Identity parse_identity(std::string_view text) { return IdentityParser(text).parse(); }

std::string render(const Term& t, ProductSymbol symbol) { return render_term(t, symbol, true); }

std::string render(const Identity& id) {
  if (const auto* eq = std::get_if<Equation>(&id.form)) {
    return render(eq->lhs, id.symbol) + " = " + render(eq->rhs, id.symbol);
  }
  return "cyc " + render(std::get<CyclicZero>(id.form).body, id.symbol) + " = 0";
}

std::string_view builtin_source(TypeTag tag) {
  const auto i = static_cast<std::size_t>(tag.name);
  return tag.family == Family::Assoc ? kAssocSources[i] : kLieSources[i];
}

const Identity& builtin(TypeTag tag) {
  static const auto catalog = [] {
    std::map<TypeTag, Identity> m;
    for (auto t : all_tags()) m.emplace(t, parse_identity(builtin_source(t)));
    return m;
  }();
  return catalog.at(tag);
}

Identity s_transform(const Identity& id) {
  if (const auto* eq = std::get_if<Equation>(&id.form)) {
    return Identity{Equation{s_term(eq->lhs), s_term(eq->rhs)}, id.symbol};
  }
  return Identity{CyclicZero{s_term(std::get<CyclicZero>(id.form).body)}, id.symbol};
}

unsigned variable_mask(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Var:
      return 1u << static_cast<unsigned>(t.variable());
    case Term::Kind::Unit:
      return 0;
    case Term::Kind::Twist:
      return variable_mask(t.child());
    case Term::Kind::Prod:
      return variable_mask(t.left()) | variable_mask(t.right());
  }
  return 0;
}

bool contains_unit(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Var:
      return false;
    case Term::Kind::Unit:
      return true;
    case Term::Kind::Twist:
      return contains_unit(t.child());
    case Term::Kind::Prod:
      return contains_unit(t.left()) || contains_unit(t.right());
  }
  return false;
}

}  // namespace homlab
