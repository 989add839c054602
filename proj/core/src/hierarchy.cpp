#include "homlab/hierarchy.hpp"

#include <algorithm>
#include <fmt/format.h>
#include <fmt/ranges.h>

#include "homlab/errors.hpp"
#include "json_util.hpp"

namespace homlab {

using detail::ojson;

namespace {

std::vector<TypeTag> tags(std::initializer_list<std::string_view> names) {
  std::vector<TypeTag> out;
  for (auto n : names) out.push_back(parse_type_tag(n));
  return out;
}

std::string short_name(TypeTag t) { return std::string(type_name_string(t.name)); }

std::string join_names(const std::vector<TypeTag>& ts) {
  std::vector<std::string> names;
  for (auto t : ts) names.push_back(short_name(t));
  return fmt::format("{}", fmt::join(names, ","));
}

ojson name_array(const std::vector<TypeTag>& ts) {
  ojson a = ojson::array();
  for (auto t : ts) a.push_back(short_name(t));
  return a;
}

}  // namespace

const std::vector<Fixture>& builtin_fixtures() {
  static const std::vector<Fixture> fixtures = {
      {"1", "alpha: e2->e1", tags({"I2"}), tags({"I3"}), std::nullopt},
      {"2", "alpha: e1->e1", tags({"I2", "II2"}), tags({"II3"}), "elements: e1..e2; alpha: e1->e1"},
      {"3", "alpha: e2->e2", tags({"II1", "II2", "II3", "I2"}), tags({"I3"}), std::nullopt},
      {"4", "e2*e2=e1; alpha: e2->e3, e3->e3", tags({"I3"}), tags({"I1"}),
       "e2*e2=e1; e3*e3=e3; alpha: e1->e3, e3->e3"},
      {"5", "e2*e2=e2; e2*e3=e2; alpha: e1->e3, e2->e3", tags({"I2"}), tags({"II2"}),
       "e2*e2=e2; e2*e3=e2; alpha: e1->e2, e2->e2"},
      {"6", "e2*e3=e3; alpha: e1->e2", tags({"II2"}), tags({"I2"}), std::nullopt},
      {"7", "e2*e3=e1; e3*e2=e1; alpha: e1->e3", tags({"II1", "II2"}), tags({"II3"}), std::nullopt},
      {"8", "e2*e3=e1; alpha: e1->e2", tags({"II1"}), tags({"II2"}), std::nullopt},
      {"9", "e2*e3=e1; e3*e2=e1; alpha: e2->e3", tags({"II1", "II2", "II3"}), tags({"I2"}), std::nullopt},
      {"10", "e2*e2=e1; e3*e3=e2; alpha: e1->e3", tags({"II2", "II3"}), tags({"II1"}), std::nullopt},
      {"11", "e3*e2=e4; e4*e3=e2; alpha: e1->e3", tags({"I2", "II1", "II3"}), tags({"II2"}), std::nullopt},
      {"12", "alpha: e2->e1", tags({"III", "III''"}), tags({"III'"}), std::nullopt},
      {"13", "e2*e2=e3; e3*e2=e2; alpha: e1->e2", tags({"III", "III'"}), tags({"III''"}), std::nullopt},
      {"14", "e2*e2=e3; e3*e2=e3; alpha: e3->e3", tags({"III'", "III''"}), tags({"III"}), std::nullopt},
      {"15", "e2*e2=e1; e2*e3=e1; e3*e2=e2; e3*e3=e1; alpha: e1->e3, e2->e3, e3->e3",
       tags({"III", "III'", "III''"}), tags({"I2", "II1", "II2", "II3"}), std::nullopt},
      {"inline-I3", "e2*e2=e1; e3*e3=e3; alpha: e1->e3, e3->e3", tags({"I3"}), tags({"III", "III'"}),
       std::nullopt},
  };
  return fixtures;
}

const Fixture& builtin_fixture(std::string_view id) {
  for (const auto& f : builtin_fixtures()) {
    if (f.id == id) return f;
  }
  throw InvalidSpec(fmt::format("no fixture '{}'", id));
}

FixtureReport verify_fixture(const Fixture& f) {
  FixtureReport r;
  r.id = f.id;
  r.relations = f.relations;
  r.profile = type_profile(from_relations(f.relations));
  for (auto t : f.claimed_satisfied) {
    if (!r.profile.contains(t)) r.mismatches.push_back({t, true});
  }
  for (auto t : f.claimed_violated) {
    if (r.profile.contains(t)) r.mismatches.push_back({t, false});
  }
  return r;
}

Lemma parse_lemma(std::string_view name) {
  if (name == "I1-or-II") return Lemma::I1OrII;
  if (name == "imassoc") return Lemma::ImAssoc;
  if (name == "bis") return Lemma::Bis;
  if (name == "lemma3") return Lemma::Lemma3;
  throw InvalidSpec(fmt::format("unknown lemma '{}'", name));
}

std::string_view lemma_name(Lemma l) {
  switch (l) {
    case Lemma::I1OrII: return "I1-or-II";
    case Lemma::ImAssoc: return "imassoc";
    case Lemma::Bis: return "bis";
    case Lemma::Lemma3: return "lemma3";
  }
  return "";
}

const std::vector<Identity>& lemma_identities(Lemma l) {
  auto parse_all = [](std::initializer_list<std::string_view> srcs) {
    std::vector<Identity> out;
    for (auto s : srcs) out.push_back(parse_identity(s));
    return out;
  };
  static const std::vector<Identity> i1_or_ii =
      parse_all({"a(x)*y = x*a(y)", "x*a(1) = a(x)", "a(x*y) = x*a(y)"});
  static const std::vector<Identity> imassoc = parse_all({"a(x)*(y*z) = (a(x)*y)*z", "x*(y*a(z)) = (x*y)*a(z)"});
  static const std::vector<Identity> bis = parse_all({"a(x) = x*a(1)", "x*a(y) = a(x)*y"});
  static const std::vector<Identity> lemma3 =
      parse_all({"a(1)*a(x) = a(x)*a(1)", "a(a(x))*a(1) = a(x)*a(a(1))", "a(x)*(a(1)*a(y)) = (a(x)*a(1))*a(y)",
                 "a(a(x))*a(y) = a(x)*a(a(y))"});
  switch (l) {
    case Lemma::I1OrII: return i1_or_ii;
    case Lemma::ImAssoc: return imassoc;
    case Lemma::Bis: return bis;
    case Lemma::Lemma3: return lemma3;
  }
  return bis;
}

std::vector<TypeTag> lemma_hypothesis(Lemma l) {
  switch (l) {
    case Lemma::I1OrII: return tags({"I1", "II"});
    case Lemma::ImAssoc: return tags({"I1"});
    case Lemma::Bis: return tags({"I3"});
    case Lemma::Lemma3: return tags({"II1", "II3"});
  }
  return {};
}

bool lemma_equalities(const FiniteHomMagma& m, Lemma l) {
  const auto hyp = lemma_hypothesis(l);
  auto has = [&](TypeTag t) { return holds(m, builtin(t)); };
  const bool met = l == Lemma::I1OrII ? std::any_of(hyp.begin(), hyp.end(), has) : std::all_of(hyp.begin(), hyp.end(), has);
  if (!met) {
    throw HypothesisNotMet(fmt::format("lemma {} needs types {} ({})", lemma_name(l), join_names(hyp),
                                       l == Lemma::I1OrII ? "any of" : "all of"));
  }
  const auto& ids = lemma_identities(l);
  return std::all_of(ids.begin(), ids.end(), [&](const Identity& id) { return holds(m, id); });
}

const std::vector<Edge>& implication_graph() {
  static const std::vector<Edge> edges = {
      {tags({"I1"}), parse_type_tag("II"), "I1 and II are equivalent"},
      {tags({"II"}), parse_type_tag("I1"), "I1 and II are equivalent"},
      {tags({"I1"}), parse_type_tag("I3"), "I1 implies I3"},
      {tags({"I3"}), parse_type_tag("I2"), "consequences of I3"},
      {tags({"I3"}), parse_type_tag("II2"), "consequences of I3"},
      {tags({"I3"}), parse_type_tag("II3"), "consequences of I3"},
      {tags({"I1"}), parse_type_tag("III"), "I1 implies the order-three types"},
      {tags({"I1"}), parse_type_tag("III'"), "I1 implies the order-three types"},
      {tags({"I1"}), parse_type_tag("III''"), "I1 implies the order-three types"},
      {tags({"I3"}), parse_type_tag("III''"), "sources of III''"},
      {tags({"I2"}), parse_type_tag("III''"), "sources of III''"},
      {tags({"II2"}), parse_type_tag("III''"), "sources of III''"},
      {tags({"II1", "II3"}), parse_type_tag("III''"), "sources of III''"},
      {tags({"I2", "II3"}), parse_type_tag("II1"), "II1 and II3 are equivalent under I2"},
      {tags({"I2", "II1"}), parse_type_tag("II3"), "II1 and II3 are equivalent under I2"},
      {tags({"I1"}), parse_type_tag("II1"), "I1 implies II1"},
  };
  return edges;
}

Edge printed_direction_probe() {
  return {tags({"III", "III'", "III''"}), parse_type_tag("I1"),
          "reverse of the I1 => order-three edges as sometimes printed; suspected typo"};
}

bool HierarchyReport::edges_exhausted() const {
  return std::none_of(edges.begin(), edges.end(), [](const EdgeResult& e) { return e.verdict.found(); });
}

bool HierarchyReport::fixtures_pass() const {
  return std::all_of(fixtures.begin(), fixtures.end(), [](const FixtureReport& f) { return f.passed(); });
}

HierarchyReport verify_hierarchy(std::size_t max_n, SearchOptions options, const std::vector<Edge>& extra_edges) {
  HierarchyReport r;
  r.max_n = max_n;
  if (max_n > 4) {
    r.warnings.push_back(fmt::format("bound {} is above 4; the searches may take a long time", max_n));
  }
  auto run_edge = [&](const Edge& e) {
    if (max_n == 0) return EdgeResult{e, Verdict{}};
    return EdgeResult{e, verify_implication(e.premises, e.conclusion, max_n, options)};
  };
  for (const auto& e : implication_graph()) r.edges.push_back(run_edge(e));
  for (const auto& e : extra_edges) r.edges.push_back(run_edge(e));
  for (const auto& f : builtin_fixtures()) {
    r.fixtures.push_back(verify_fixture(f));
    if (f.repair) {
      Fixture repaired = f;
      repaired.relations = *f.repair;
      r.repairs.push_back(verify_fixture(repaired));
    }
    const auto bound = std::max<std::size_t>(max_n, from_relations(f.relations).nonzero_count());
    r.searches.push_back({f.id, bound, find_model(SearchSpec::from_tags(f.claimed_satisfied, f.claimed_violated, bound), options)});
  }
  r.printed_direction = run_edge(printed_direction_probe());
  return r;
}

namespace {

std::string verdict_word(const Verdict& v) { return v.found() ? "countermodel" : "exhausted"; }

ojson model_json(const Verdict& v) {
  if (!v.found()) return nullptr;
  return to_relations(*v.countermodel);
}

ojson fixture_json(const FixtureReport& f) {
  ojson j;
  j["id"] = f.id;
  j["relations"] = f.relations;
  j["pass"] = f.passed();
  std::vector<TypeTag> sat;
  for (auto t : f.profile.assoc_part().satisfied) sat.push_back(t);
  j["satisfied"] = name_array(sat);
  ojson mm = ojson::array();
  for (const auto& m : f.mismatches) {
    mm.push_back({{"type", short_name(m.tag)}, {"claimed", m.claimed_satisfied ? "satisfied" : "violated"}});
  }
  j["mismatches"] = mm;
  return j;
}

ojson edge_json(const EdgeResult& e) {
  ojson j;
  j["premises"] = name_array(e.edge.premises);
  j["conclusion"] = short_name(e.edge.conclusion);
  j["note"] = e.edge.note;
  j["result"] = verdict_word(e.verdict);
  j["exhausted_up_to"] = e.verdict.exhausted_up_to;
  j["model"] = model_json(e.verdict);
  return j;
}

std::string mismatch_text(const FixtureReport& f) {
  std::vector<std::string> parts;
  for (const auto& m : f.mismatches) {
    parts.push_back(fmt::format("{} claimed {}", short_name(m.tag), m.claimed_satisfied ? "satisfied" : "violated"));
  }
  return fmt::format("{}", fmt::join(parts, "; "));
}

}  // namespace

std::string HierarchyReport::to_json(int indent) const {
  ojson j;
  j["max_n"] = max_n;
  ojson es = ojson::array();
  for (const auto& e : edges) es.push_back(edge_json(e));
  j["edges"] = es;
  ojson fs = ojson::array();
  for (const auto& f : fixtures) fs.push_back(fixture_json(f));
  j["fixtures"] = fs;
  ojson rs = ojson::array();
  for (const auto& f : repairs) rs.push_back(fixture_json(f));
  j["repairs"] = rs;
  ojson ss = ojson::array();
  for (const auto& s : searches) {
    ss.push_back({{"id", s.id}, {"bound", s.bound}, {"result", s.verdict.found() ? "model" : "none"},
                  {"model", model_json(s.verdict)}});
  }
  j["fixture_searches"] = ss;
  j["printed_direction"] = edge_json(printed_direction);
  j["warnings"] = warnings;
  j["edges_exhausted"] = edges_exhausted();
  j["fixtures_pass"] = fixtures_pass();
  j["passed"] = passed();
  return j.dump(indent);
}

std::string HierarchyReport::to_text() const {
  std::string out;
  for (const auto& w : warnings) out += fmt::format("warning: {}\n", w);
  out += fmt::format("implications (bound {} nonzero elements)\n", max_n);
  for (const auto& e : edges) {
    out += fmt::format("  {:<12} => {:<6} {}", join_names(e.edge.premises), short_name(e.edge.conclusion),
                       verdict_word(e.verdict));
    if (e.verdict.found()) out += fmt::format("  [{}]", to_relations(*e.verdict.countermodel));
    out += '\n';
  }
  out += "fixtures\n";
  for (const auto& f : fixtures) {
    out += fmt::format("  {:<10} {}", f.id, f.passed() ? "pass" : "FAIL");
    if (!f.passed()) out += fmt::format("  ({})", mismatch_text(f));
    out += '\n';
  }
  if (!repairs.empty()) {
    out += "repaired fixtures\n";
    for (const auto& f : repairs) {
      out += fmt::format("  {:<10} {}  [{}]\n", f.id, f.passed() ? "pass" : "FAIL", f.relations);
    }
  }
  out += "searches for models of each fixture's claims\n";
  for (const auto& s : searches) {
    out += fmt::format("  {:<10} bound {}  {}\n", s.id, s.bound,
                       s.verdict.found() ? "model: " + to_relations(*s.verdict.countermodel) : std::string("none"));
  }
  out += fmt::format("printed direction {} => {}: {}", join_names(printed_direction.edge.premises),
                     short_name(printed_direction.edge.conclusion), verdict_word(printed_direction.verdict));
  if (printed_direction.verdict.found()) {
    out += fmt::format(" [{}]; the arrow as printed is refuted, the proved direction is an edge above",
                       to_relations(*printed_direction.verdict.countermodel));
  }
  out += '\n';
  out += fmt::format("edges {}, fixtures {}\n", edges_exhausted() ? "all exhausted" : "REFUTED",
                     fixtures_pass() ? "all pass" : "FAILING");
  return out;
}

InverseTwistReport inverse_twist_check(const FieldHomAlgebra& a) {
  if (!holds_multilinear(a, builtin(parse_type_tag("I1")))) {
    throw HypothesisNotMet("inverse twist check needs an algebra of type I1");
  }
  auto c = weak_left_unit(a);
  if (!c) throw NotWeaklyUnital("no c with alpha(x) = c*x for all x");
  auto beta = invert(a.field(), a.alpha_matrix());
  if (!beta) throw AlphaNotInvertible("alpha is singular");
  const auto twisted = a.with_alpha(*beta);
  InverseTwistReport r;
  r.weak_unit = std::move(*c);
  r.beta = std::move(*beta);
  r.type_i3 = holds_multilinear(twisted, builtin(parse_type_tag("I3")));
  r.type_ii = holds_multilinear(twisted, builtin(parse_type_tag("II")));
  return r;
}

FieldHomAlgebra cyclic_group_algebra(std::uint32_t p) {
  constexpr std::size_t d = 3;
  std::vector<Scalar> c(d * d * d, 0);
  Matrix alpha(d, Vector(d, 0));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) c[(i * d + j) * d + (i + j) % d] = 1;
    alpha[i][(i + 1) % d] = 1;
  }
  Vector unit(d, 0);
  unit[0] = 1;
  return FieldHomAlgebra(p, d, std::move(c), std::move(alpha), ProductKind::General, std::move(unit));
}

}  // namespace homlab
