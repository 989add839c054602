// Acceptance suite: one line per criterion, exit status 0 only if all pass.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fmt/format.h>
#include <fstream>
#include <functional>
#include <sstream>
#include <unistd.h>
#include <fmt/ranges.h>

#include "cli.hpp"
#include "homlab/errors.hpp"
#include "homlab/evaluator.hpp"
#include "homlab/hierarchy.hpp"
#include "homlab/lie_suite.hpp"
#include "homlab/search.hpp"
#include "oracle.hpp"

using namespace homlab;

namespace {

// Pinned limits.
constexpr double kFixtureSeconds = 1.0;
constexpr double kEdgesSerialSeconds = 600.0;
constexpr double kEdgesParallelSeconds = 180.0;
constexpr unsigned kParallelWorkers = 4;
constexpr std::size_t kEdgeBound = 3;
constexpr int kLemmaBound = 2;
constexpr std::uint32_t kPrime = 7;
constexpr std::size_t kAlphasPerAlgebra = 1000;
constexpr std::size_t kExpansionInstances = 200;
constexpr std::size_t kRandomSpecs = 500;
constexpr std::size_t kRandomSpecBound = 2;
constexpr std::uint64_t kSeed = 0xacce97;

using Clock = std::chrono::steady_clock;
double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

int failures = 0;

void report(int n, bool ok, const std::string& title, const std::string& detail) {
  if (!ok) ++failures;
  std::printf("criterion %2d [%s] %s: %s\n", n, ok ? "PASS" : "FAIL", title.c_str(), detail.c_str());
  std::fflush(stdout);
}

void guard(int n, const std::string& title, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report(n, false, title, std::string("exception: ") + e.what());
  }
}

std::string short_name(TypeTag t) { return std::string(type_name_string(t.name)); }

oracle::Raw to_raw(const FiniteHomMagma& m) {
  oracle::Raw r{int(m.size()), m.has_zero(), {}, {}};
  for (auto v : m.table()) r.t.push_back(int(v));
  for (auto v : m.alpha_map()) r.a.push_back(int(v));
  return r;
}

FiniteHomMagma to_magma(const oracle::Raw& r) {
  std::vector<Element> t(r.t.begin(), r.t.end()), a(r.a.begin(), r.a.end());
  return FiniteHomMagma::from_canonical(std::size_t(r.n), r.zero, t, a);
}

void criterion1() {
  const auto start = Clock::now();
  std::vector<FixtureReport> reports;
  for (const auto& f : builtin_fixtures()) reports.push_back(verify_fixture(f));
  const double secs = since(start);
  std::size_t pass = 0;
  std::string bad;
  for (const auto& r : reports) {
    if (r.passed()) {
      ++pass;
      continue;
    }
    std::vector<std::string> parts;
    for (const auto& m : r.mismatches) {
      parts.push_back(fmt::format("{} claimed {}", short_name(m.tag), m.claimed_satisfied ? "satisfied" : "violated"));
    }
    bad += fmt::format("; item {}: {}", r.id, fmt::join(parts, ", "));
  }
  std::size_t repaired = 0, repairs = 0;
  for (const auto& f : builtin_fixtures()) {
    if (!f.repair) continue;
    ++repairs;
    Fixture g = f;
    g.relations = *f.repair;
    repaired += verify_fixture(g).passed();
  }
  report(1, pass == reports.size() && secs < kFixtureSeconds, "fixture regression",
         fmt::format("{}/{} literal fixtures match their claims in {:.3f} s (limit {} s){}; repaired relations pass {}/{}",
                     pass, reports.size(), secs, kFixtureSeconds, bad, repaired, repairs));
}

void criterion2() {
  auto run_all = [](unsigned workers, std::size_t& exhausted) {
    exhausted = 0;
    const auto start = Clock::now();
    for (const auto& e : implication_graph()) {
      const auto v = verify_implication(e.premises, e.conclusion, kEdgeBound, {workers});
      exhausted += !v.found() && v.exhausted_up_to == kEdgeBound;
    }
    return since(start);
  };
  std::size_t serial_ok = 0, parallel_ok = 0;
  const double serial = run_all(1, serial_ok);
  const double parallel = run_all(kParallelWorkers, parallel_ok);
  const std::size_t n = implication_graph().size();
  report(2, serial_ok == n && parallel_ok == n && serial < kEdgesSerialSeconds && parallel < kEdgesParallelSeconds,
         "positive hierarchy exhaustion",
         fmt::format("{}/{} edges exhausted at bound {}; {:.2f} s with 1 worker (limit {} s), {:.2f} s with {} "
                     "workers (limit {} s)",
                     serial_ok, n, kEdgeBound, serial, kEdgesSerialSeconds, parallel, kParallelWorkers,
                     kEdgesParallelSeconds));
}

void criterion3() {
  const auto i1 = parse_type_tag("I1"), ii = parse_type_tag("II");
  const auto a = verify_implication({i1}, ii, kEdgeBound);
  const auto b = verify_implication({ii}, i1, kEdgeBound);
  const bool ok = !a.found() && !b.found() && a.exhausted_up_to == kEdgeBound && b.exhausted_up_to == kEdgeBound;
  report(3, ok, "I1 <=> II", fmt::format("I1 => II exhausted up to {}, II => I1 exhausted up to {}", a.exhausted_up_to,
                                         b.exhausted_up_to));
}

void criterion4() {
  std::map<Lemma, std::pair<std::size_t, std::size_t>> tally;  // applicable, violations
  std::size_t total = 0;
  for (int k = 1; k <= kLemmaBound; ++k) {
    for (const auto& raw : oracle::all_magmas(k)) {
      ++total;
      const auto m = to_magma(raw);
      for (auto l : {Lemma::I1OrII, Lemma::ImAssoc, Lemma::Bis, Lemma::Lemma3}) {
        try {
          const bool ok = lemma_equalities(m, l);
          ++tally[l].first;
          tally[l].second += !ok;
        } catch (const HypothesisNotMet&) {
        }
      }
    }
  }
  bool ok = true;
  std::vector<std::string> parts;
  for (const auto& [l, c] : tally) {
    ok = ok && c.second == 0;
    parts.push_back(fmt::format("{}: {} applicable, {} violations", lemma_name(l), c.first, c.second));
  }
  ok = ok && tally.size() == 4;
  report(4, ok, "lemma suites",
         fmt::format("{} labelled magmas with <= {} nonzero elements; {}", total, kLemmaBound, fmt::join(parts, "; ")));
}

void criterion5() {
  Rng rng(kSeed);
  bool ok = true;
  std::vector<std::string> parts;
  for (const auto& [name, alg] : {std::pair{"abelian", abelian_lie(kPrime, 3)},
                                  std::pair{"solvable", solvable_lie(kPrime)}, std::pair{"sl2", sl2_lie(kPrime)}}) {
    const auto s = property9_sweep(alg, kAlphasPerAlgebra, rng);
    ok = ok && s.counterexamples == 0 && s.samples == kAlphasPerAlgebra;
    parts.push_back(fmt::format("{} {} failures in {}", name, s.counterexamples, s.samples));
  }
  report(5, ok, "Lie identity (9) over Z/7", fmt::format("{}", fmt::join(parts, "; ")));
}

void criterion6() {
  Rng rng(kSeed);
  std::size_t tested = 0, agree = 0, nonzero = 0, explained = 0;
  while (tested < kExpansionInstances) {
    const auto a = random_skew(kPrime, 3, rng);
    if (is_lie(a)) continue;
    ++tested;
    const auto e = expansion_residuals(a);
    agree += e.direct_equals_expansion;
    nonzero += !e.residual_zero;
    explained += e.residual_equals_omitted;
  }
  report(6, agree == tested && explained == tested, "bilinear expansion oracle",
         fmt::format("direct = nine-term on {}/{} non-Lie brackets; six-term residual nonzero on {}, equal to the two "
                     "omitted cyclic sums on {}/{}",
                     agree, tested, nonzero, explained, tested));
}

void criterion7() {
  const auto k3 = example_K3(kPrime);
  const auto e1 = k3.basis(0), e2 = k3.basis(1), e3 = k3.basis(2);
  const auto v2 = central_series(k3, 1)[1];
  bool alpha_nonzero = false;
  for (const auto& v : v2) alpha_nonzero = alpha_nonzero || !is_zero(k3.alpha(v));
  const bool k3_ok = !is_lie(k3) && jacobi(k3, e1, e2, e3) == e1 &&
                     holds_multilinear(k3, builtin({Family::Lie, TypeName::III})) && alpha_nonzero &&
                     v2 == Matrix{{1, 0, 0}, {0, 0, 1}};
  const auto k2 = example_K2(kPrime);
  const bool k2_ok = holds_multilinear(k2, builtin({Family::Lie, TypeName::I1})) &&
                     !holds_multilinear(k2, builtin({Family::Lie, TypeName::I2})) && is_lie(k2);
  report(7, k3_ok && k2_ok, "example reproduction",
         fmt::format("K3 example {}, K2 example {}", k3_ok ? "matches" : "differs", k2_ok ? "matches" : "differs"));
}

void criterion8() {
  const auto a = cyclic_group_algebra(kPrime);
  const bool i1 = holds_multilinear(a, builtin(parse_type_tag("I1")));
  const bool weak = weak_left_unit(a).has_value();
  const auto r = inverse_twist_check(a);
  report(8, i1 && weak && r.passed(), "inverse-twist lemma",
         fmt::format("type I1 {}, weakly left unital {}, beta-twist I3 {} II {}", i1, weak, r.type_i3, r.type_ii));
}

void criterion9() {
  const auto dir = std::filesystem::temp_directory_path() / fmt::format("homlab-accept-{}", ::getpid());
  std::filesystem::create_directories(dir);
  const auto spec = dir / "spec.json";
  std::ofstream(spec) << R"({"max_n": 3, "require": ["II2", "II3"], "violate": ["II1"]})";
  auto capture = [](std::vector<std::string> args) {
    std::ostringstream out, err;
    cli::run(args, out, err);
    return out.str();
  };
  bool same = true;
  std::string base_search, base_reproduce;
  for (const char* w : {"1", "2", "8"}) {
    const auto s = capture({"search", spec.string(), "--json", "--workers", w});
    const auto r = capture({"reproduce", "--json", "--workers", w});
    if (base_search.empty()) {
      base_search = s;
      base_reproduce = r;
    }
    same = same && s == base_search && r == base_reproduce && !s.empty() && !r.empty();
  }
  std::filesystem::remove_all(dir);
  report(9, same, "determinism",
         fmt::format("search and reproduce JSON {} for 1, 2, 8 workers ({} and {} bytes)",
                     same ? "byte-identical" : "DIFFER", base_search.size(), base_reproduce.size()));
}

void criterion10() {
  std::mt19937_64 rng(kSeed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::size_t found = 0, verified = 0, agree = 0;
  for (std::size_t i = 0; i < kRandomSpecs; ++i) {
    SearchSpec spec;
    spec.max_nonzero = kRandomSpecBound;
    std::vector<std::string> req, vio;
    for (auto n : kAllTypeNames) {
      const double u = coin(rng);
      const TypeTag t{Family::Assoc, n};
      if (u < 0.2) {
        spec.require.push_back(Constraint::from_tag(t));
        req.push_back(short_name(t));
      } else if (u < 0.3) {
        spec.violate.push_back(Constraint::from_tag(t));
        vio.push_back(short_name(t));
      }
    }
    const auto v = find_model(spec);
    if (v.found()) {
      ++found;
      const auto raw = to_raw(*v.countermodel);
      bool ok = true;
      for (const auto& r : req) ok = ok && oracle::law_holds(raw, r);
      for (const auto& r : vio) ok = ok && !oracle::law_holds(raw, r);
      verified += ok;
    }
    const auto pruned = enumerate_models(spec, 1'000'000);
    auto unpruned_spec = spec;
    unpruned_spec.prune_isomorphs = false;
    const auto unpruned = enumerate_models(unpruned_spec, 1'000'000);
    agree += pruned == unpruned;
  }
  report(10, verified == found && agree == kRandomSpecs, "soundness property test",
         fmt::format("{} random specs at bound {}: {} models found, {} re-verified independently; pruned and unpruned "
                     "enumerations agree on {}",
                     kRandomSpecs, kRandomSpecBound, found, verified, agree));
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, void (*)()>> criteria = {
      {"fixture regression", criterion1},       {"positive hierarchy exhaustion", criterion2},
      {"I1 <=> II", criterion3},                {"lemma suites", criterion4},
      {"Lie identity (9) over Z/7", criterion5}, {"bilinear expansion oracle", criterion6},
      {"example reproduction", criterion7},     {"inverse-twist lemma", criterion8},
      {"determinism", criterion9},              {"soundness property test", criterion10},
  };
  for (std::size_t i = 0; i < criteria.size(); ++i) guard(int(i + 1), criteria[i].first, criteria[i].second);
  std::printf("%zu/%zu criteria pass\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
