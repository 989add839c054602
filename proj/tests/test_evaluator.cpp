#include <doctest.h>

#include <random>

#include "homlab/errors.hpp"
#include "homlab/evaluator.hpp"
#include "homlab/lie_suite.hpp"
#include "homlab/structure_io.hpp"
#include "oracle.hpp"

using namespace homlab;

namespace {

FiniteHomMagma to_magma(const oracle::Raw& r) {
  std::vector<Element> t(r.t.begin(), r.t.end()), a(r.a.begin(), r.a.end());
  return FiniteHomMagma::from_canonical(static_cast<std::size_t>(r.n), r.zero, t, a);
}

std::set<std::string> assoc_names(const TypeProfile& p) {
  std::set<std::string> out;
  for (auto t : p.satisfied)
    if (t.family == Family::Assoc) out.emplace(type_name_string(t.name));
  return out;
}

oracle::Alg to_oracle(const FieldHomAlgebra& a) {
  oracle::Alg o{a.prime(), static_cast<int>(a.dim()), {}, {}};
  for (auto c : a.constants()) o.c.push_back(c);
  for (const auto& row : a.alpha_matrix()) o.alpha.emplace_back(row.begin(), row.end());
  return o;
}

oracle::Vec lift(const Vector& v) { return oracle::Vec(v.begin(), v.end()); }

}  // namespace

TEST_CASE("magma type profiles match the hand-written laws") {
  for (int k = 1; k <= 3; ++k) {
    std::size_t checked = 0;
    for (const auto& raw : oracle::all_magmas(k)) {
      const auto m = to_magma(raw);
      REQUIRE(assoc_names(type_profile(m)) == oracle::profile(raw));
      ++checked;
    }
    CHECK(checked > 0);
  }
}

TEST_CASE("find_violation returns the first failing triple") {
  const auto raws = oracle::all_magmas(2);
  for (const auto& raw : raws) {
    const auto m = to_magma(raw);
    for (const auto& [name, law] : oracle::assoc_laws()) {
      std::optional<std::array<Element, 3>> expect;
      for (int x = 0; x < raw.n && !expect; ++x)
        for (int y = 0; y < raw.n && !expect; ++y)
          for (int z = 0; z < raw.n && !expect; ++z)
            if (!law(raw, x, y, z)) expect = std::array<Element, 3>{Element(x), Element(y), Element(z)};
      CHECK(find_violation(m, builtin(parse_type_tag(name))) == expect);
    }
  }
}

TEST_CASE("linearization preserves and reflects every associative type") {
  std::mt19937 rng(11);
  auto raws = oracle::all_magmas(3);
  std::shuffle(raws.begin(), raws.end(), rng);
  raws.resize(300);
  for (const auto& r : oracle::all_magmas(2)) raws.push_back(r);
  for (const auto& raw : raws) {
    const auto m = to_magma(raw);
    const auto lin = linearize(m, 5);
    CHECK(assoc_names(type_profile(lin)) == oracle::profile(raw));
  }
}

TEST_CASE("evaluation errors") {
  const auto m = from_relations("alpha: e2->e1");
  CHECK_THROWS_AS(holds(m, builtin(parse_type_tag("lie:I1"))), CyclicNotSupportedOnMagma);
  const auto a = sl2_lie(7);
  CHECK_THROWS_AS(holds_multilinear(a, parse_identity("x*x = x")), NotMultilinear);
  CHECK_THROWS_AS(holds_multilinear(a, parse_identity("x*y = y*z")), NotMultilinear);
  CHECK_THROWS_AS(holds_multilinear(a, parse_identity("cyc [x,[x,z]] = 0")), NotMultilinear);
  CHECK_THROWS_AS(holds_multilinear(a, parse_identity("a(x) = x*a(1)")), UnitUnavailable);
  CHECK(holds(m, parse_identity("a(x) = a(x)")));
}

TEST_CASE("Lie-family Jacobiators match direct bracket sums") {
  Rng rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    const auto a = random_skew(7, 2 + trial % 3, rng);
    const auto o = to_oracle(a);
    using V = oracle::Vec;
    auto br = [&](const V& u, const V& v) { return o.br(u, v); };
    auto al = [&](const V& u) { return o.al(u); };
    const std::map<TypeName, std::function<V(const V&, const V&, const V&)>> terms = {
        {TypeName::I1, [&](const V& x, const V& y, const V& z) { return br(al(x), br(y, z)); }},
        {TypeName::I2, [&](const V& x, const V& y, const V& z) { return br(x, br(al(y), z)); }},
        {TypeName::I3, [&](const V& x, const V& y, const V& z) { return br(x, br(y, al(z))); }},
        {TypeName::II, [&](const V& x, const V& y, const V& z) { return br(x, al(br(y, z))); }},
        {TypeName::II1, [&](const V& x, const V& y, const V& z) { return br(x, br(al(y), al(z))); }},
        {TypeName::II2, [&](const V& x, const V& y, const V& z) { return br(al(x), br(y, al(z))); }},
        {TypeName::II3, [&](const V& x, const V& y, const V& z) { return br(al(x), br(al(y), z)); }},
        {TypeName::III, [&](const V& x, const V& y, const V& z) { return al(br(x, br(y, z))); }},
        {TypeName::IIIp, [&](const V& x, const V& y, const V& z) { return br(al(x), al(br(y, z))); }},
        {TypeName::IIIpp, [&](const V& x, const V& y, const V& z) { return br(al(x), br(al(y), al(z))); }},
    };
    const auto d = a.dim();
    for (const auto& [name, f] : terms) {
      bool all_zero = true;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
          for (std::size_t k = 0; k < d; ++k) {
            const auto got = jacobiator(a, {Family::Lie, name}, a.basis(i), a.basis(j), a.basis(k));
            const auto want = o.cyc(f, o.e(int(i)), o.e(int(j)), o.e(int(k)));
            CHECK(lift(got) == want);
            all_zero = all_zero && oracle::zero(want);
          }
      CHECK(holds_multilinear(a, builtin({Family::Lie, name})) == all_zero);
    }
    // twisted bracket and morphism defect
    const auto t = twisted_bracket(a);
    CHECK(t.kind() == ProductKind::Skew);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        const V x = o.e(int(i)), y = o.e(int(j));
        CHECK(lift(t.mul(a.basis(i), a.basis(j))) == o.add(o.add(br(x, y), br(al(x), y)), br(x, al(y))));
        V defect = br(al(x), al(y));
        const V image = al(br(x, y));
        for (int c = 0; c < o.d; ++c) defect[c] = o.md(defect[c] - image[c]);
        CHECK(lift(morphism_defect(a, a.basis(i), a.basis(j))) == defect);
      }
  }
}

TEST_CASE("Jacobi, morphisms and central series on known algebras") {
  CHECK(is_lie(sl2_lie(7)));
  CHECK(is_lie(heisenberg_lie(5)));
  CHECK_FALSE(is_lie(example_K3(7)));
  CHECK(is_morphism(sl2_lie(7)));
  CHECK(is_morphism(solvable_lie(7, 4)));
  CHECK_FALSE(is_morphism(example_K2(7)));

  const auto series = central_series(heisenberg_lie(5), 3);
  REQUIRE(series.size() == 4);
  CHECK(series[0].size() == 3);
  CHECK(series[1] == Matrix{{0, 0, 1}});
  CHECK(series[2].empty());
  CHECK(series[3].empty());
  const auto s2 = central_series(sl2_lie(7), 2);
  CHECK(s2[1].size() == 3);
  CHECK(s2[2].size() == 3);
}

TEST_CASE("type defect is the cyclic sum of [x,a([y,z])] - [x,[a(y),a(z)]]") {
  Rng rng(5);
  const auto a = random_skew(7, 3, rng);
  const auto& f = a.field();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) {
        const auto x = a.basis(i), y = a.basis(j), z = a.basis(k);
        const auto want = f.sub(jacobiator(a, {Family::Lie, TypeName::II}, x, y, z),
                                jacobiator(a, {Family::Lie, TypeName::II1}, x, y, z));
        CHECK(type_defect(a, x, y, z) == want);
      }
}

TEST_CASE("weak left units") {
  // alpha(x) = e2 * x
  const auto m = from_relations("e2*e2=e3; e2*e3=e3; alpha: e1->e2, e2->e3, e3->e3");
  const auto c = weak_left_unit(m);
  REQUIRE(c.has_value());
  CHECK(*c == 1);
  CHECK_FALSE(weak_left_unit(from_relations("alpha: e2->e1")).has_value());
}

TEST_CASE("algebra JSON round-trip") {
  const auto a = example_K3(7);
  CHECK(algebra_from_json(algebra_to_json(a)) == a);
  const auto b = algebra_from_json(R"({"p":5,"dim":2,"c":[[[0,0],[0,-1]],[[0,1],[0,0]]],"kind":"skew","unit":null})");
  CHECK(b.constant(0, 1, 1) == 4);
  CHECK(b.alpha_matrix() == identity_matrix(2));
  CHECK_THROWS_AS(algebra_from_json(R"({"p":5,"dim":2,"c":[[[1,0],[0,0]],[[0,0],[0,0]]],"kind":"skew"})"),
                  SkewViolation);
  CHECK_THROWS_AS(algebra_from_json(R"({"p":6,"dim":1,"c":[[[0]]]})"), Error);
}
