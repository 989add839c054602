#include "homlab/evaluator.hpp"

#include <fmt/format.h>

#include "homlab/errors.hpp"
#include "program.hpp"

namespace homlab {

std::vector<TypeTag> TypeProfile::violated() const {
  std::vector<TypeTag> out;
  for (auto t : all_tags(Family::Assoc)) {
    if (!contains(t)) out.push_back(t);
  }
  if (carrier == CarrierFamily::Both) {
    for (auto t : all_tags(Family::Lie)) {
      if (!contains(t)) out.push_back(t);
    }
  }
  return out;
}

TypeProfile TypeProfile::assoc_part() const {
  TypeProfile p;
  for (auto t : satisfied) {
    if (t.family == Family::Assoc) p.satisfied.insert(t);
  }
  return p;
}

namespace {

Element run(const FiniteHomMagma& m, const detail::Program& prog, Element x, Element y, Element z) {
  Element stack[32];
  int sp = 0;
  for (auto op : prog) {
    switch (op) {
      case detail::OpCode::PushX: stack[sp++] = x; break;
      case detail::OpCode::PushY: stack[sp++] = y; break;
      case detail::OpCode::PushZ: stack[sp++] = z; break;
      case detail::OpCode::PushUnit: stack[sp++] = FiniteHomMagma::unit(); break;
      case detail::OpCode::Alpha: stack[sp - 1] = m.alpha(stack[sp - 1]); break;
      case detail::OpCode::Mul:
        --sp;
        stack[sp - 1] = m.mul(stack[sp - 1], stack[sp]);
        break;
    }
  }
  return stack[0];
}

const Equation& equation_of(const Identity& id) {
  if (id.is_cyclic()) throw CyclicNotSupportedOnMagma("cyclic identities need an additive carrier: " + render(id));
  return std::get<Equation>(id.form);
}

void check_depth(const Term& t) {
  if (t.size() > 31) throw Error("term too large to evaluate");
}

// Number of occurrences of each variable.
void count_vars(const Term& t, std::array<int, 3>& counts) {
  switch (t.kind()) {
    case Term::Kind::Var: ++counts[static_cast<int>(t.variable())]; break;
    case Term::Kind::Unit: break;
    case Term::Kind::Twist: count_vars(t.child(), counts); break;
    case Term::Kind::Prod:
      count_vars(t.left(), counts);
      count_vars(t.right(), counts);
      break;
  }
}

void require_multilinear(const Identity& id) {
  auto linear_in = [](const Term& t) {
    std::array<int, 3> c{};
    count_vars(t, c);
    for (int k : c) {
      if (k > 1) return -1;
    }
    return c[0] | (c[1] << 1) | (c[2] << 2);
  };
  if (const auto* eq = std::get_if<Equation>(&id.form)) {
    auto l = linear_in(eq->lhs), r = linear_in(eq->rhs);
    if (l < 0 || r < 0 || l != r) throw NotMultilinear("identity is not multilinear: " + render(id));
  } else if (linear_in(std::get<CyclicZero>(id.form).body) != 7) {
    throw NotMultilinear("cyclic body must use each of x, y, z exactly once: " + render(id));
  }
}

void require_skew(const FieldHomAlgebra& a, const char* what) {
  if (a.kind() != ProductKind::Skew) throw SkewViolation(fmt::format("{} requires a skew product", what));
}

}  // namespace

Element evaluate(const FiniteHomMagma& m, const Term& t, Element x, Element y, Element z) {
  check_depth(t);
  return run(m, detail::compile(t), x, y, z);
}

std::optional<std::array<Element, 3>> find_violation(const FiniteHomMagma& m, const Identity& id) {
  const auto& eq = equation_of(id);
  check_depth(eq.lhs);
  check_depth(eq.rhs);
  const auto lhs = detail::compile(eq.lhs);
  const auto rhs = detail::compile(eq.rhs);
  const auto n = static_cast<Element>(m.size());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        if (run(m, lhs, x, y, z) != run(m, rhs, x, y, z)) return std::array{x, y, z};
      }
    }
  }
  return std::nullopt;
}

bool holds(const FiniteHomMagma& m, const Identity& id) { return !find_violation(m, id).has_value(); }

Vector evaluate(const FieldHomAlgebra& a, const Term& t, std::span<const Scalar> x, std::span<const Scalar> y,
                std::span<const Scalar> z) {
  switch (t.kind()) {
    case Term::Kind::Var: {
      auto v = t.variable() == Var::X ? x : t.variable() == Var::Y ? y : z;
      return Vector(v.begin(), v.end());
    }
    case Term::Kind::Unit:
      if (!a.unit_vector()) throw UnitUnavailable("identity uses 1 but the algebra has no unit vector");
      return *a.unit_vector();
    case Term::Kind::Twist:
      return a.alpha(evaluate(a, t.child(), x, y, z));
    case Term::Kind::Prod:
      return a.mul(evaluate(a, t.left(), x, y, z), evaluate(a, t.right(), x, y, z));
  }
  return {};
}

Vector identity_value(const FieldHomAlgebra& a, const Identity& id, std::span<const Scalar> x,
                      std::span<const Scalar> y, std::span<const Scalar> z) {
  if (const auto* eq = std::get_if<Equation>(&id.form)) {
    return a.field().sub(evaluate(a, eq->lhs, x, y, z), evaluate(a, eq->rhs, x, y, z));
  }
  const auto& body = std::get<CyclicZero>(id.form).body;
  auto sum = evaluate(a, body, x, y, z);
  sum = a.field().add(sum, evaluate(a, body, y, z, x));
  return a.field().add(sum, evaluate(a, body, z, x, y));
}

std::optional<std::array<std::size_t, 3>> find_violation(const FieldHomAlgebra& a, const Identity& id) {
  require_multilinear(id);
  const std::size_t d = a.dim();
  for (std::size_t i = 0; i < d; ++i) {
    const auto x = a.basis(i);
    for (std::size_t j = 0; j < d; ++j) {
      const auto y = a.basis(j);
      for (std::size_t k = 0; k < d; ++k) {
        if (!is_zero(identity_value(a, id, x, y, a.basis(k)))) return std::array{i, j, k};
      }
    }
  }
  return std::nullopt;
}

bool holds_multilinear(const FieldHomAlgebra& a, const Identity& id) { return !find_violation(a, id).has_value(); }

TypeProfile type_profile(const FiniteHomMagma& m) {
  TypeProfile p;
  p.carrier = CarrierFamily::AssocOnly;
  for (auto t : all_tags(Family::Assoc)) {
    if (holds(m, builtin(t))) p.satisfied.insert(t);
  }
  return p;
}

TypeProfile type_profile(const FieldHomAlgebra& a) {
  TypeProfile p;
  p.carrier = CarrierFamily::Both;
  for (auto t : all_tags()) {
    if (holds_multilinear(a, builtin(t))) p.satisfied.insert(t);
  }
  return p;
}

Vector jacobiator(const FieldHomAlgebra& a, TypeTag tag, std::span<const Scalar> x, std::span<const Scalar> y,
                  std::span<const Scalar> z) {
  require_skew(a, "jacobiator");
  if (tag.family != Family::Lie) throw Error("jacobiator needs a Lie-family tag, got " + to_string(tag));
  return identity_value(a, builtin(tag), x, y, z);
}

Vector jacobi(const FieldHomAlgebra& a, std::span<const Scalar> x, std::span<const Scalar> y,
              std::span<const Scalar> z) {
  const auto& f = a.field();
  auto s = a.mul(x, a.mul(y, z));
  s = f.add(s, a.mul(y, a.mul(z, x)));
  return f.add(s, a.mul(z, a.mul(x, y)));
}

FieldHomAlgebra twisted_bracket(const FieldHomAlgebra& a) {
  require_skew(a, "twisted_bracket");
  const std::size_t d = a.dim();
  const auto& f = a.field();
  std::vector<Scalar> c(d * d * d);
  for (std::size_t i = 0; i < d; ++i) {
    const auto ei = a.basis(i);
    const auto ai = a.alpha(ei);
    for (std::size_t j = 0; j < d; ++j) {
      const auto ej = a.basis(j);
      auto v = a.mul(ei, ej);
      v = f.add(v, a.mul(ai, ej));
      v = f.add(v, a.mul(ei, a.alpha(ej)));
      std::copy(v.begin(), v.end(), c.begin() + static_cast<std::ptrdiff_t>((i * d + j) * d));
    }
  }
  // the constructor re-validates antisymmetry and throws SkewViolation
  return FieldHomAlgebra(a.prime(), d, std::move(c), a.alpha_matrix(), ProductKind::Skew, std::nullopt);
}

Vector morphism_defect(const FieldHomAlgebra& alg, std::span<const Scalar> a, std::span<const Scalar> b) {
  return alg.field().sub(alg.mul(alg.alpha(a), alg.alpha(b)), alg.alpha(alg.mul(a, b)));
}

bool is_morphism(const FieldHomAlgebra& alg) {
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    for (std::size_t j = 0; j < alg.dim(); ++j) {
      if (!is_zero(morphism_defect(alg, alg.basis(i), alg.basis(j)))) return false;
    }
  }
  return true;
}

Vector type_defect(const FieldHomAlgebra& a, std::span<const Scalar> x, std::span<const Scalar> y,
                   std::span<const Scalar> z) {
  const auto& f = a.field();
  auto term = [&](std::span<const Scalar> u, std::span<const Scalar> v, std::span<const Scalar> w) {
    return f.sub(a.mul(u, a.alpha(a.mul(v, w))), a.mul(u, a.mul(a.alpha(v), a.alpha(w))));
  };
  auto s = term(x, y, z);
  s = f.add(s, term(y, z, x));
  return f.add(s, term(z, x, y));
}

std::vector<Matrix> central_series(const FieldHomAlgebra& a, std::size_t depth) {
  require_skew(a, "central_series");
  std::vector<Matrix> series;
  series.push_back(identity_matrix(a.dim()));
  for (std::size_t level = 1; level <= depth; ++level) {
    Matrix gens;
    for (std::size_t i = 0; i < a.dim(); ++i) {
      for (const auto& v : series.back()) gens.push_back(a.mul(a.basis(i), v));
    }
    series.push_back(row_reduce(a.field(), std::move(gens)));
  }
  return series;
}

bool is_lie(const FieldHomAlgebra& a) {
  require_skew(a, "is_lie");
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      for (std::size_t k = 0; k < a.dim(); ++k) {
        if (!is_zero(jacobi(a, a.basis(i), a.basis(j), a.basis(k)))) return false;
      }
    }
  }
  return true;
}

}  // namespace homlab
