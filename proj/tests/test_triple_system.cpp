#include "ctri/error.hpp"
#include "ctri/generators.hpp"
#include "ctri/triple_system.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace ctri;
using ctri::testing::det_points;
using ctri::testing::rand_point;

namespace {

std::shared_ptr<LabeledSets> sets_of(std::vector<HPoint> a, std::vector<HPoint> b, std::vector<HPoint> c) {
  auto s = std::make_shared<LabeledSets>();
  s->a = std::move(a);
  s->b = std::move(b);
  s->c = std::move(c);
  return s;
}

// Cubic oracle written against raw affine coordinates.
std::vector<Edge> oracle_triples(const LabeledSets& s) {
  std::vector<Edge> out;
  for (Index i = 0; i < s.a.size(); ++i)
    for (Index j = 0; j < s.b.size(); ++j)
      for (Index k = 0; k < s.c.size(); ++k) {
        const auto& a = s.a[i];
        const auto& b = s.b[j];
        const auto& c = s.c[k];
        if (det_points(a.ax(), a.ay(), b.ax(), b.ay(), c.ax(), c.ay()) == 0) out.push_back(Edge{i, j, k});
      }
  return out;
}

}  // namespace

TEST_CASE("build_triples examples") {
  auto one = build_triples(sets_of({HPoint(0, 2)}, {HPoint(1, 1)}, {HPoint(2, 0)}));
  REQUIRE(one.num_edges() == 1);
  CHECK(one.edges()[0] == Edge{0, 0, 0});
  CHECK(build_triples(sets_of({HPoint(0, 2)}, {HPoint(1, 1)}, {HPoint(3, 0)})).num_edges() == 0);
  CHECK(build_triples(gen_ksystem(3).sets).num_edges() == 27);
}

TEST_CASE("build_triples agrees with the cubic oracle") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    Rng rng(seed);
    const std::size_t n = 5 + rng.below(26);
    std::set<HPoint> used;
    auto pick = [&] {
      for (;;) {
        HPoint p = rand_point(rng, 6, 2);
        if (used.insert(p).second) return p;
      }
    };
    std::vector<HPoint> a, b, c;
    for (std::size_t i = 0; i < n; ++i) {
      a.push_back(pick());
      b.push_back(pick());
      c.push_back(pick());
    }
    auto s = sets_of(a, b, c);
    const auto fast = build_triples(s, 1 + seed % 4);
    const auto brute = build_triples_brute_force(s);
    const auto expected = oracle_triples(*s);
    CHECK(std::vector<Edge>(fast.edges().begin(), fast.edges().end()) == expected);
    CHECK(std::vector<Edge>(brute.edges().begin(), brute.edges().end()) == expected);
  }
}

TEST_CASE("build_triples is projectively invariant") {
  const auto base = gen_mutually_avoiding(15, 4);
  const auto count = build_triples(base).num_edges();
  const ProjMap m({{{1, 2, 0}, {0, 1, 1}, {0, 0, 3}}});
  auto moved = std::make_shared<LabeledSets>();
  for (const auto& p : base->a) moved->a.push_back(m.apply(p));
  for (const auto& p : base->b) moved->b.push_back(m.apply(p));
  for (const auto& p : base->c) moved->c.push_back(m.apply(p));
  CHECK(build_triples(moved).num_edges() == count);
}

TEST_CASE("directions at infinity take part in triples") {
  auto s = sets_of({HPoint(0, 0), HPoint(0, 1)}, {HPoint(1, 1), HPoint(2, 1)}, {HPoint::homogeneous(1, 1, 0)});
  s->c_at_infinity = true;
  const auto sys = build_triples(s);
  REQUIRE(sys.num_edges() == 1);
  CHECK(sys.edges()[0] == Edge{0, 0, 0});
}

TEST_CASE("build_triples_from_selection") {
  const auto inst = gen_ksystem(2);
  const auto full = build_triples(inst.sets);
  std::vector<Edge> all(full.edges().begin(), full.edges().end());
  auto same = build_triples_from_selection(inst.sets, all);
  CHECK(std::vector<Edge>(same.edges().begin(), same.edges().end()) == all);
  CHECK(build_triples_from_selection(inst.sets, {}).num_edges() == 0);
  std::vector<Edge> half(all.begin(), all.begin() + all.size() / 2);
  CHECK(build_triples_from_selection(inst.sets, half).num_edges() == half.size());
  std::optional<Edge> stray;
  for (Index c = 0; c < inst.sets->c.size() && !stray; ++c)
    if (!is_collinear_edge(*inst.sets, Edge{0, 0, c})) stray = Edge{0, 0, c};
  REQUIRE(stray.has_value());
  try {
    build_triples_from_selection(inst.sets, {*stray});
    FAIL("expected a non-collinear selection error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNonCollinearSelection);
  }
}

TEST_CASE("mutually avoiding predicate") {
  CHECK_FALSE(mutually_avoiding(*sets_of({HPoint(0, 0), HPoint(1, 0)}, {HPoint(2, 0)}, {HPoint(5, 7)})));
  CHECK(mutually_avoiding(*sets_of({HPoint(0, 0)}, {HPoint(100, 0)}, {HPoint(0, 100)})));
  CHECK(mutually_avoiding(*gen_mutually_avoiding(20, 1)));
  CHECK(avoiding_one_sided(*gen_ksystem(3).sets));
  auto bad = sets_of({HPoint(0, 2), HPoint(2, 2)}, {HPoint(1, 2), HPoint(7, 1)}, {HPoint(0, 0)});
  const auto r = avoiding_one_sided(*bad);
  CHECK_FALSE(r.ok);
  CHECK_FALSE(r.violation.empty());
  auto inf = sets_of({HPoint(0, 0), HPoint(1, 3)}, {HPoint(10, 0), HPoint(11, 1)}, {HPoint::homogeneous(1, 0, 0)});
  inf->c_at_infinity = true;
  CHECK(avoiding_one_sided(*inf));
}

TEST_CASE("verify_order examples") {
  CHECK(verify_order(Hypergraph3(3, 3, 3, {})).ok);
  const auto bad = verify_order(Hypergraph3(3, 3, 3, {Edge{1, 1, 2}, Edge{1, 2, 1}}));
  CHECK_FALSE(bad.ok);
  CHECK(bad.bullet == 1);
  CHECK(verify_order(Hypergraph3(3, 3, 3, {Edge{1, 1, 1}, Edge{1, 2, 2}})).ok);
}

TEST_CASE("canonical_order on generated instances") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto sets = gen_mutually_avoiding(5 + seed * 3, seed);
    const auto sys = build_triples(sets);
    CHECK(sys.graph().linear());
    const auto ordered = canonical_order(sys);
    CHECK(ordered.certificate.report.ok);
    CHECK(verify_order(ordered.system.graph()).ok);
    CHECK(ordered.system.num_edges() == sys.num_edges());
    // The certificate maps new indices back to the original points.
    for (int p = 0; p < 3; ++p) {
      const Part part = static_cast<Part>(p);
      const auto& perm = ordered.certificate.permutation[p];
      for (Index i = 0; i < perm.size(); ++i)
        CHECK(ordered.system.sets().set(part)[i] == sys.sets().set(part)[perm[i]]);
    }
  }
}

TEST_CASE("canonical_order on a single edge") {
  const auto sys = build_triples(sets_of({HPoint(0, 2)}, {HPoint(1, 1)}, {HPoint(2, 0)}));
  CHECK(canonical_order(sys).certificate.report.ok);
}

TEST_CASE("validate rejects repeated points") {
  auto s = sets_of({HPoint(0, 0), HPoint(0, 0)}, {HPoint(1, 1)}, {HPoint(2, 2)});
  CHECK_THROWS_AS(s->validate(), Error);
}
