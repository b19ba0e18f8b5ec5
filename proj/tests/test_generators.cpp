#include "ctri/error.hpp"
#include "ctri/generators.hpp"
#include "support.hpp"

#include <doctest.h>

#include <set>

using namespace ctri;

TEST_CASE("grid with directions") {
  const auto sets = gen_grid_with_directions(5);
  CHECK(sets->c_at_infinity);
  CHECK(sets->a.size() + sets->b.size() == 25);
  CHECK_NOTHROW(sets->validate());
  const auto sys = build_triples(sets);
  CHECK(sys.num_edges() == build_triples_brute_force(sets).num_edges());
  CHECK(sys.num_edges() > 0);
}

TEST_CASE("k-system generator") {
  for (std::size_t k = 1; k <= 4; ++k) {
    const auto inst = gen_ksystem(k);
    CHECK(inst.expected.edges.size() == k * k * k);
    const auto sys = build_triples(inst.sets);
    CHECK(k_system_violation(inst.expected, sys.graph()).empty());
    CHECK(avoiding_one_sided(*inst.sets));
  }
  const auto scaled = gen_ksystem(2, Rat(1, 3));
  CHECK(k_system_violation(scaled.expected, build_triples(scaled.sets).graph()).empty());
}

TEST_CASE("conic instance plants every sample on the conic") {
  Rng rng(9);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto t = random_triple(rng);
    CHECK_FALSE(degenerate_witness(t, NormalMode::kT1).has_value());
    CHECK_FALSE(degenerate_witness(t, NormalMode::kT2).has_value());
    const auto inst = gen_conic_instance(t, 25, seed);
    CHECK(inst.samples.size() == 25);
    CHECK_NOTHROW(inst.sets->validate());
    for (Index b : inst.samples) CHECK(on_conic(inst.conic, inst.sets->b[b]));
    const auto sys = build_triples(inst.sets);
    CHECK(sys.num_edges() == 6 * 25);
    CHECK(sys.graph().linear());
  }
  CHECK_THROWS_AS(gen_conic_instance(kFigure8Triple, 5, 0), Error);
}

TEST_CASE("rational points on conics") {
  const auto p = find_rational_point(Conic({1, 0, 1, 0, 0, -25}));
  REQUIRE(p.has_value());
  CHECK(on_conic(Conic({1, 0, 1, 0, 0, -25}), *p));
  CHECK_FALSE(find_rational_point(Conic({1, 0, 1, 0, 0, 1})).has_value());
}

TEST_CASE("Pascal instances") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto inst = gen_pascal_ttt(seed);
    CHECK_NOTHROW(inst.sets->validate());
    for (const auto& p : inst.hexagon) CHECK(on_conic(inst.conic, p));
    const auto sys = build_triples(inst.sets);
    CHECK(tictactoe_violation(inst.expected, sys.graph()).empty());
    // The Pascal line carries X, Y, Z.
    CHECK(collinear(inst.sets->c[0], inst.sets->c[1], inst.sets->c[2]));
  }
}

TEST_CASE("mutually avoiding generator") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const auto sets = gen_mutually_avoiding(10 + 5 * seed, seed);
    CHECK(sets->a.size() == 10 + 5 * seed);
    CHECK(mutually_avoiding(*sets));
    CHECK_NOTHROW(sets->validate());
    CHECK(build_triples(sets).num_edges() > 0);
  }
}

TEST_CASE("parallel dense generator matches its collinearity rule") {
  const auto sets = gen_parallel_dense(20, 3);
  const auto sys = build_triples(sets);
  std::size_t expected = 0;
  for (const auto& a : sets->a)
    for (const auto& b : sets->b)
      for (const auto& c : sets->c) expected += a.ax() + c.ax() == 2 * b.ax();
  CHECK(sys.num_edges() == expected);
}

TEST_CASE("circle points") {
  const auto pts = gen_circle_points(12);
  std::set<HPoint> distinct(pts.begin(), pts.end());
  CHECK(distinct.size() == 12);
  for (const auto& p : pts) CHECK(p.ax() * p.ax() + p.ay() * p.ay() == 1);
  CHECK(in_convex_position(pts));
}

TEST_CASE("random linear systems") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = gen_random_linear(10, seed);
    CHECK(g.linear());
    CHECK(g.size_a() <= 10);
  }
}

TEST_CASE("generators are deterministic") {
  CHECK(gen_mutually_avoiding(12, 7)->a == gen_mutually_avoiding(12, 7)->a);
  CHECK(gen_pascal_ttt(3).hexagon == gen_pascal_ttt(3).hexagon);
  const PointTriple t{HPoint(3, 2), HPoint(4, 5), HPoint(6, 7)};
  const auto x = gen_conic_instance(t, 8, 4);
  const auto y = gen_conic_instance(t, 8, 4);
  CHECK(x.sets->b == y.sets->b);
}
