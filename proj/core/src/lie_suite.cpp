#include "homlab/lie_suite.hpp"

#include <algorithm>
#include <fmt/format.h>
#include <fmt/ranges.h>

#include "homlab/errors.hpp"
#include "homlab/evaluator.hpp"
#include "homlab/identity.hpp"
#include "json_util.hpp"

namespace homlab {

using detail::ojson;

namespace {

struct BracketTerm {
  std::size_t i, j, k;
  std::int64_t coef;
};

// Skew constants from [e_i, e_j] entries with i < j (0-based).
FieldHomAlgebra make_skew(std::uint32_t p, std::size_t d, std::initializer_list<BracketTerm> terms, Matrix alpha) {
  PrimeField f(p);
  std::vector<Scalar> c(d * d * d, 0);
  for (const auto& t : terms) {
    c[(t.i * d + t.j) * d + t.k] = f.add(c[(t.i * d + t.j) * d + t.k], f.reduce(t.coef));
    c[(t.j * d + t.i) * d + t.k] = f.sub(c[(t.j * d + t.i) * d + t.k], f.reduce(t.coef));
  }
  return FieldHomAlgebra(p, d, std::move(c), std::move(alpha), ProductKind::Skew);
}

TypeTag lie(TypeName n) { return TypeTag{Family::Lie, n}; }

bool lie_holds(const FieldHomAlgebra& a, TypeName n) { return holds_multilinear(a, builtin(lie(n))); }

template <class F>
void for_basis_triples(std::size_t d, F&& f) {
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) f(i, j, k);
}

Vector sum3(const PrimeField& f, const Vector& a, const Vector& b, const Vector& c) { return f.add(f.add(a, b), c); }

// Null space of the span of `rows`: vectors v with r . v = 0 for every row r.
Matrix annihilator(const PrimeField& f, const Matrix& rows, std::size_t d) {
  const Matrix r = row_reduce(f, rows);
  std::vector<std::size_t> pivot_col;
  for (const auto& row : r) {
    std::size_t c = 0;
    while (row[c] == 0) ++c;
    pivot_col.push_back(c);
  }
  Matrix out;
  for (std::size_t free = 0; free < d; ++free) {
    if (std::find(pivot_col.begin(), pivot_col.end(), free) != pivot_col.end()) continue;
    Vector v(d, 0);
    v[free] = 1;
    for (std::size_t k = 0; k < r.size(); ++k) v[pivot_col[k]] = f.neg(r[k][free]);
    out.push_back(std::move(v));
  }
  return out;
}

Matrix decode_matrix(std::uint64_t code, std::uint32_t p, std::size_t d) {
  Matrix m(d, Vector(d, 0));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      m[i][j] = static_cast<Scalar>(code % p);
      code /= p;
    }
  }
  return m;
}

std::string matrix_text(const Matrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += ",";
    out += "[";
    for (std::size_t j = 0; j < m[i].size(); ++j) out += fmt::format("{}{}", j ? "," : "", m[i][j]);
    out += "]";
  }
  return out + "]";
}

void require_lie(const FieldHomAlgebra& a, std::string_view what) {
  if (a.kind() != ProductKind::Skew || !is_lie(a)) {
    throw HypothesisNotMet(fmt::format("{} needs a Lie bracket", what));
  }
}

}  // namespace

FieldHomAlgebra example_K3(std::uint32_t p) {
  if (p == 2 || p == 3) throw InvalidSpec("example_K3 needs p not in {2, 3}");
  return make_skew(p, 3, {{0, 2, 0, 1}, {1, 2, 2, 1}}, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}});
}

FieldHomAlgebra example_K2(std::uint32_t p) {
  if (p == 2) throw InvalidSpec("example_K2 needs p != 2");
  return make_skew(p, 2, {{0, 1, 1, 1}}, {{1, 0}, {1, 1}});
}

FieldHomAlgebra abelian_lie(std::uint32_t p, std::size_t d) { return make_skew(p, d, {}, identity_matrix(d)); }

FieldHomAlgebra solvable_lie(std::uint32_t p, Scalar c) {
  PrimeField f(p);
  return make_skew(p, 2, {{0, 1, 1, 1}}, {{1, 0}, {0, f.reduce(c)}});
}

FieldHomAlgebra sl2_lie(std::uint32_t p) {
  return make_skew(p, 3, {{0, 1, 2, 1}, {1, 2, 0, 1}, {0, 2, 1, -1}}, identity_matrix(3));
}

FieldHomAlgebra heisenberg_lie(std::uint32_t p) { return make_skew(p, 3, {{0, 1, 2, 1}}, identity_matrix(3)); }

Matrix random_matrix(const PrimeField& f, std::size_t d, Rng& rng) {
  std::uniform_int_distribution<Scalar> dist(0, f.modulus() - 1);
  Matrix m(d, Vector(d, 0));
  for (auto& row : m)
    for (auto& x : row) x = dist(rng);
  return m;
}

FieldHomAlgebra random_skew(std::uint32_t p, std::size_t d, Rng& rng) {
  PrimeField f(p);
  std::uniform_int_distribution<Scalar> dist(0, p - 1);
  std::vector<Scalar> c(d * d * d, 0);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        const Scalar v = dist(rng);
        c[(i * d + j) * d + k] = v;
        c[(j * d + i) * d + k] = f.neg(v);
      }
    }
  }
  return FieldHomAlgebra(p, d, std::move(c), random_matrix(f, d, rng), ProductKind::Skew);
}

Matrix random_alpha_killing_square(const FieldHomAlgebra& a, Rng& rng) {
  const auto& f = a.field();
  const std::size_t d = a.dim();
  const auto series = central_series(a, 1);
  // alpha(x) = sum_k (g_k . x) r_k with every g_k vanishing on V^1
  const Matrix g = annihilator(f, series[1], d);
  std::uniform_int_distribution<Scalar> dist(0, f.modulus() - 1);
  Matrix alpha(d, Vector(d, 0));
  for (std::size_t k = 0; k < g.size(); ++k) {
    Vector target(d);
    for (auto& x : target) x = dist(rng);
    for (std::size_t i = 0; i < d; ++i) f.axpy(alpha[i], g[k][i], target);
  }
  return alpha;
}

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "FAIL";
    case Status::Refuted: return "refuted";
    case Status::Skipped: return "skipped";
    case Status::Info: return "info";
  }
  return "";
}

void SuiteReport::add(std::string name, bool ok, std::string detail) {
  checks.push_back({std::move(name), ok ? Status::Pass : Status::Fail, std::move(detail)});
}

bool SuiteReport::passed() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const Check& c) { return c.status == Status::Fail || c.status == Status::Refuted; });
}

std::string SuiteReport::to_text() const {
  std::string out = fmt::format("seed {:#x}\n", seed);
  for (const auto& c : checks) {
    out += fmt::format("  {:<8} {}", status_name(c.status), c.name);
    if (!c.detail.empty()) out += fmt::format(": {}", c.detail);
    out += '\n';
  }
  return out;
}

std::string SuiteReport::to_json(int indent) const {
  ojson j;
  j["seed"] = seed;
  ojson arr = ojson::array();
  for (const auto& c : checks) arr.push_back({{"name", c.name}, {"status", status_name(c.status)}, {"detail", c.detail}});
  j["checks"] = arr;
  j["passed"] = passed();
  return j.dump(indent);
}

bool verify_property9(const FieldHomAlgebra& a) {
  require_lie(a, "property (9)");
  const auto& f = a.field();
  bool ok = true;
  for_basis_triples(a.dim(), [&](std::size_t i, std::size_t j, std::size_t k) {
    if (!ok) return;
    const auto x = a.basis(i), y = a.basis(j), z = a.basis(k);
    auto J = [&](TypeName n) { return jacobiator(a, lie(n), x, y, z); };
    ok = is_zero(sum3(f, J(TypeName::I1), J(TypeName::I2), J(TypeName::I3))) &&
         is_zero(sum3(f, J(TypeName::II1), J(TypeName::II2), J(TypeName::II3)));
  });
  return ok;
}

Prop11Result verify_prop11(const FieldHomAlgebra& a) {
  require_lie(a, "the I2 => I1 check");
  return {lie_holds(a, TypeName::I1), lie_holds(a, TypeName::I2), lie_holds(a, TypeName::II1),
          lie_holds(a, TypeName::II2)};
}

SweepCounts property9_sweep(const FieldHomAlgebra& a, std::size_t samples, Rng& rng) {
  require_lie(a, "property (9)");
  SweepCounts s;
  for (; s.samples < samples; ++s.samples) {
    if (!verify_property9(a.with_alpha(random_matrix(a.field(), a.dim(), rng)))) ++s.counterexamples;
  }
  s.premise = s.samples;
  return s;
}

SweepCounts prop11_sweep(const FieldHomAlgebra& a, std::size_t samples, Rng& rng) {
  require_lie(a, "the I2 => I1 check");
  SweepCounts s;
  for (; s.samples < samples; ++s.samples) {
    const auto r = verify_prop11(a.with_alpha(random_matrix(a.field(), a.dim(), rng)));
    if (r.i2 || r.ii2) ++s.premise;
    if (!r.consistent()) ++s.counterexamples;
  }
  return s;
}

ExpansionResult expansion_residuals(const FieldHomAlgebra& a) {
  if (a.kind() != ProductKind::Skew) throw HypothesisNotMet("expansion check needs a skew bracket");
  const auto& f = a.field();
  const auto twisted = twisted_bracket(a);
  ExpansionResult r;
  auto br = [&](const Vector& u, const Vector& v) { return a.mul(u, v); };
  auto al = [&](const Vector& u) { return a.alpha(u); };
  for_basis_triples(a.dim(), [&](std::size_t i, std::size_t j, std::size_t k) {
    ++r.triples;
    const Vector x = a.basis(i), y = a.basis(j), z = a.basis(k);
    const Vector direct = jacobi(twisted, x, y, z);

    auto nine = [&](const Vector& x, const Vector& y, const Vector& z) {
      Vector s = f.zero(a.dim());
      for (const auto& t : {br(x, br(y, z)), br(x, br(al(y), z)), br(x, br(y, al(z))), br(al(x), br(y, z)),
                            br(al(x), br(al(y), z)), br(al(x), br(y, al(z))), br(x, al(br(y, z))),
                            br(x, al(br(al(y), z))), br(x, al(br(y, al(z))))}) {
        s = f.add(s, t);
      }
      return s;
    };
    auto omitted = [&](const Vector& x, const Vector& y, const Vector& z) {
      return f.add(br(x, al(br(al(y), z))), br(x, al(br(y, al(z)))));
    };
    const Vector expansion = sum3(f, nine(x, y, z), nine(y, z, x), nine(z, x, y));
    const Vector omitted_sum = sum3(f, omitted(x, y, z), omitted(y, z, x), omitted(z, x, y));

    Vector six = jacobi(a, x, y, z);
    for (auto n : {TypeName::I1, TypeName::I2, TypeName::I3, TypeName::II, TypeName::II2, TypeName::II3}) {
      six = f.add(six, jacobiator(a, lie(n), x, y, z));
    }
    const Vector residual = f.sub(direct, six);
    if (direct != expansion) r.direct_equals_expansion = false;
    if (!is_zero(residual)) r.residual_zero = false;
    if (residual != omitted_sum) r.residual_equals_omitted = false;
  });
  return r;
}

std::string_view outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Confirmed: return "confirmed";
    case Outcome::Refuted: return "refuted";
    case Outcome::HypothesisNotMet: return "hypothesis not met";
  }
  return "";
}

TwistedLieResult verify_prop13_14(const FieldHomAlgebra& a) {
  require_lie(a, "the twisted bracket check");
  TwistedLieResult r;
  r.morphism = is_morphism(a);
  r.hom_ii_and_ii1 = lie_holds(a, TypeName::II) && lie_holds(a, TypeName::II1);
  if (!r.morphism && !r.hom_ii_and_ii1) return r;
  r.twisted_is_lie = is_lie(twisted_bracket(a));
  r.outcome = r.twisted_is_lie ? Outcome::Confirmed : Outcome::Refuted;
  return r;
}

TwistClassCounts twist_class_sweep(const FieldHomAlgebra& a, std::size_t max_alphas, Rng& rng) {
  require_lie(a, "the twist sweep");
  const std::size_t d = a.dim();
  const std::uint32_t p = a.prime();
  TwistClassCounts c;
  double space = 1;
  for (std::size_t i = 0; i < d * d; ++i) space *= p;
  c.exhaustive = space <= static_cast<double>(max_alphas);
  const std::uint64_t total = c.exhaustive ? static_cast<std::uint64_t>(space) : max_alphas;
  for (std::uint64_t code = 0; code < total; ++code) {
    const Matrix alpha = c.exhaustive ? decode_matrix(code, p, d) : random_matrix(a.field(), d, rng);
    const auto t = a.with_alpha(alpha);
    ++c.alphas;
    const bool morphism = is_morphism(t);
    const bool ii = lie_holds(t, TypeName::II) && lie_holds(t, TypeName::II1);
    if (morphism || ii) {
      const bool twisted_lie = is_lie(twisted_bracket(t));
      if (morphism) {
        ++c.morphisms;
        if (!twisted_lie && c.morphisms_non_lie++ == 0) c.first_morphism_non_lie = alpha;
      }
      if (ii) {
        ++c.ii_and_ii1;
        if (!twisted_lie && c.ii_and_ii1_non_lie++ == 0) c.first_ii_non_lie = alpha;
      }
    }
    bool all = ii;
    for (auto n : kAllTypeNames) {
      if (!all) break;
      all = lie_holds(t, n);
    }
    if (all) ++c.hom_star;
  }
  return c;
}

SelfAdjointResult self_adjointness_probe(const FieldHomAlgebra& a, Rng& rng, std::size_t samples) {
  if (a.prime() == 2) throw HypothesisNotMet("self-adjointness probe needs p odd");
  if (a.kind() != ProductKind::Skew) throw HypothesisNotMet("self-adjointness probe needs a skew bracket");
  const auto& f = a.field();
  const std::size_t d = a.dim();
  SelfAdjointResult r;
  r.self_adjoint = true;
  for (std::size_t i = 0; i < d && r.self_adjoint; ++i) {
    for (std::size_t j = 0; j < d && r.self_adjoint; ++j) {
      const auto x = a.basis(i), y = a.basis(j);
      r.self_adjoint = a.mul(a.alpha(x), y) == a.mul(x, a.alpha(y));
    }
  }
  r.i2_zero = lie_holds(a, TypeName::I2);
  r.i3_zero = lie_holds(a, TypeName::I3);
  r.sum_zero = true;
  for_basis_triples(d, [&](std::size_t i, std::size_t j, std::size_t k) {
    const auto x = a.basis(i), y = a.basis(j), z = a.basis(k);
    if (!is_zero(f.add(jacobiator(a, lie(TypeName::I2), x, y, z), jacobiator(a, lie(TypeName::I3), x, y, z)))) {
      r.sum_zero = false;
    }
  });
  std::uniform_int_distribution<Scalar> dist(0, a.prime() - 1);
  r.alpha_x_x_zero = true;
  for (std::size_t s = 0; s < samples; ++s) {
    Vector x(d);
    for (auto& v : x) v = dist(rng);
    if (!is_zero(a.mul(a.alpha(x), x))) r.alpha_x_x_zero = false;
  }
  return r;
}

SuiteReport lie_verify(const FieldHomAlgebra& a, std::uint64_t seed) {
  SuiteReport rep;
  rep.seed = seed;
  Rng rng(seed);
  if (a.kind() != ProductKind::Skew) {
    rep.checks.push_back({"bracket checks", Status::Skipped, "product is not skew"});
    return rep;
  }
  const bool lie_bracket = is_lie(a);
  rep.checks.push_back({"Jacobi identity", Status::Info, lie_bracket ? "holds" : "fails"});
  std::vector<std::string> types;
  for (auto n : kAllTypeNames) {
    if (lie_holds(a, n)) types.emplace_back(type_name_string(n));
  }
  rep.checks.push_back({"Lie types", Status::Info, fmt::format("{}", fmt::join(types, " "))});

  const auto e = expansion_residuals(a);
  rep.add("twisted Jacobiator equals nine-term expansion", e.direct_equals_expansion,
          fmt::format("{} basis triples", e.triples));
  rep.add("six-term residual equals the two omitted cyclic sums", e.residual_equals_omitted,
          e.residual_zero ? "residual zero" : "residual nonzero");

  if (!lie_bracket) {
    for (auto name : {"property (9)", "I2 => I1 and II2 => II1", "twisted bracket is Lie"}) {
      rep.checks.push_back({name, Status::Skipped, "bracket is not Lie"});
    }
  } else {
    rep.add("property (9)", verify_property9(a));
    const auto p11 = verify_prop11(a);
    rep.add("I2 => I1 and II2 => II1", p11.consistent(),
            fmt::format("I1 {} I2 {} II1 {} II2 {}", p11.i1, p11.i2, p11.ii1, p11.ii2));
    const auto t = verify_prop13_14(a);
    const auto status = t.outcome == Outcome::Confirmed  ? Status::Pass
                        : t.outcome == Outcome::Refuted ? Status::Refuted
                                                         : Status::Skipped;
    rep.checks.push_back({"twisted bracket is Lie", status,
                          fmt::format("{} (morphism {}, II and II1 {})", outcome_name(t.outcome), t.morphism,
                                      t.hom_ii_and_ii1)});
  }
  if (a.prime() != 2) {
    const auto s = self_adjointness_probe(a, rng);
    if (s.self_adjoint) {
      rep.add("self-adjoint twist consequences", s.holds());
    } else {
      rep.checks.push_back({"self-adjoint twist consequences", Status::Skipped, "alpha is not self-adjoint"});
    }
  }
  return rep;
}

SuiteReport run_lie_suite(std::uint32_t p, std::uint64_t seed) {
  SuiteReport rep;
  rep.seed = seed;
  Rng rng(seed);
  const PrimeField f(p);

  {
    const auto k3 = example_K3(p);
    const auto e1 = k3.basis(0), e2 = k3.basis(1), e3 = k3.basis(2);
    rep.add("K3 example: not Lie", !is_lie(k3));
    rep.add("K3 example: Jacobi(e1,e2,e3) = e1", jacobi(k3, e1, e2, e3) == e1);
    rep.add("K3 example: Lie type III", lie_holds(k3, TypeName::III));
    const auto series = central_series(k3, 1);
    rep.add("K3 example: V^1 basis {e1, e3}", series[1] == Matrix{{1, 0, 0}, {0, 0, 1}}, matrix_text(series[1]));
    bool nonzero = false;
    for (const auto& v : series[1]) nonzero = nonzero || !is_zero(k3.alpha(v));
    rep.add("K3 example: alpha does not vanish on V^1", nonzero);
  }
  {
    const auto k2 = example_K2(p);
    const auto e1 = k2.basis(0), e2 = k2.basis(1);
    rep.add("K2 example: Lie type I1", lie_holds(k2, TypeName::I1));
    rep.add("K2 example: not Lie type I2", !lie_holds(k2, TypeName::I2));
    rep.add("K2 example: [e1,[alpha(e2),e2]] != 0", !is_zero(k2.mul(e1, k2.mul(k2.alpha(e2), e2))));
    rep.add("K2 example: Lie", is_lie(k2));
    Rng local(seed);
    rep.add("K2 example: alpha not self-adjoint", !self_adjointness_probe(k2, local).self_adjoint);
  }
  {
    bool all_iii = true, monotone = true;
    for (int s = 0; s < 20; ++s) {
      const auto base = random_skew(p, 3 + s % 2, rng);
      const auto a = base.with_alpha(random_alpha_killing_square(base, rng));
      all_iii = all_iii && lie_holds(a, TypeName::III);
      const auto series = central_series(a, a.dim() + 1);
      for (std::size_t k = 1; k < series.size(); ++k) {
        if (series[k].size() > series[k - 1].size()) monotone = false;
      }
      if (series[a.dim()].size() != series[a.dim() + 1].size()) monotone = false;
    }
    rep.add("alpha killing V^1 gives Lie type III", all_iii, "20 random brackets");
    rep.add("central series decreases and stabilizes", monotone, "20 random brackets");
  }
  {
    bool ok = true;
    for (Scalar c = 0; c < p; ++c) {
      const auto t = verify_prop13_14(solvable_lie(p, c));
      ok = ok && t.morphism && t.outcome == Outcome::Confirmed;
    }
    rep.add("solvable, alpha = diag(1,c): morphism with Lie twisted bracket", ok, fmt::format("c = 0..{}", p - 1));
  }
  for (const auto& [name, alg] : {std::pair{"abelian", abelian_lie(p, 3)}, std::pair{"solvable", solvable_lie(p)},
                                  std::pair{"sl2", sl2_lie(p)}}) {
    const auto s = property9_sweep(alg, 1000, rng);
    rep.add(fmt::format("property (9) on {}", name), s.counterexamples == 0,
            fmt::format("{} random alphas, {} failures", s.samples, s.counterexamples));
  }
  {
    bool threw = false;
    try {
      verify_property9(example_K3(p));
    } catch (const HypothesisNotMet&) {
      threw = true;
    }
    rep.add("property (9) rejects the non-Lie K3 example", threw);
  }
  {
    const auto s = prop11_sweep(heisenberg_lie(5), 1000, rng);
    rep.add("Heisenberg over Z/5: I2 => I1, II2 => II1", s.counterexamples == 0,
            fmt::format("{} random alphas, {} with a premise, {} counterexamples", s.samples, s.premise,
                        s.counterexamples));
    const auto k2 = verify_prop11(example_K2(p));
    rep.add("K2 example: I1 does not imply I2", k2.i1 && !k2.i2);
  }
  {
    std::size_t agree = 0, nonzero = 0, explained = 0, tested = 0;
    while (tested < 200) {
      const auto a = random_skew(p, 3, rng);
      if (is_lie(a)) continue;
      ++tested;
      const auto e = expansion_residuals(a);
      agree += e.direct_equals_expansion;
      nonzero += !e.residual_zero;
      explained += e.residual_equals_omitted;
    }
    rep.add("twisted Jacobiator equals nine-term expansion", agree == tested,
            fmt::format("{}/{} random non-Lie brackets", agree, tested));
    rep.add("six-term residual equals the two omitted cyclic sums", explained == tested,
            fmt::format("{}/{} instances, residual nonzero on {}", explained, tested, nonzero));
    const auto zero = expansion_residuals(random_skew(p, 3, rng).with_alpha(Matrix(3, Vector(3, 0))));
    rep.add("alpha = 0: residual vanishes", zero.direct_equals_expansion && zero.residual_zero);
  }
  {
    const auto s = sl2_lie(p);
    const auto id = verify_prop13_14(s);
    const auto zero = verify_prop13_14(s.with_alpha(Matrix(3, Vector(3, 0))));
    rep.add("sl2, alpha = id: twisted bracket Lie", id.outcome == Outcome::Confirmed);
    rep.add("sl2, alpha = 0: twisted bracket Lie", zero.outcome == Outcome::Confirmed && zero.hom_ii_and_ii1);
  }
  {
    const auto c = twist_class_sweep(sl2_lie(3), 20000, rng);
    std::string detail = fmt::format(
        "sl2 over Z/3, {} alphas{}: {} morphisms ({} with non-Lie twisted bracket), {} of types II and II1 "
        "({} non-Lie), {} satisfy all ten types",
        c.alphas, c.exhaustive ? " (all)" : "", c.morphisms, c.morphisms_non_lie, c.ii_and_ii1,
        c.ii_and_ii1_non_lie, c.hom_star);
    if (c.morphisms_non_lie) detail += fmt::format("; first morphism failure alpha = {}", matrix_text(c.first_morphism_non_lie));
    if (c.ii_and_ii1_non_lie) detail += fmt::format("; first II/II1 failure alpha = {}", matrix_text(c.first_ii_non_lie));
    rep.checks.push_back({"twisted bracket sweep", Status::Info, std::move(detail)});
  }
  {
    Rng local(seed);
    const auto lam = heisenberg_lie(p).with_alpha(Matrix{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}});
    const auto s = self_adjointness_probe(lam, local);
    rep.add("alpha = 2 id: self-adjoint consequences", s.self_adjoint && s.holds());
    const auto z = self_adjointness_probe(sl2_lie(p).with_alpha(Matrix(3, Vector(3, 0))), local);
    rep.add("alpha = 0: self-adjoint consequences", z.self_adjoint && z.holds());
  }
  return rep;
}

}  // namespace homlab
