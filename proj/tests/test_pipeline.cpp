#include "ctri/conic_pipeline.hpp"
#include "ctri/error.hpp"
#include "ctri/generators.hpp"

#include <doctest.h>

#include <algorithm>

using namespace ctri;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kInput;
}

std::shared_ptr<LabeledSets> mapped(const LabeledSets& s, const ProjMap& m) {
  auto out = std::make_shared<LabeledSets>();
  for (const auto& p : s.a) out->a.push_back(m.apply(p));
  for (const auto& p : s.b) out->b.push_back(m.apply(p));
  for (const auto& p : s.c) out->c.push_back(m.apply(p));
  out->c_at_infinity = s.c_at_infinity;
  return out;
}

}  // namespace

TEST_CASE("conic round trip") {
  Rng rng(1);
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const auto triple = random_triple(rng);
    const auto inst = gen_conic_instance(triple, 10 + 5 * seed, seed);
    const auto sys = build_triples(inst.sets);
    const auto r = extract_conic(sys, SearchParams{}, seed);
    REQUIRE(r.conic.has_value());
    CHECK(*r.conic == inst.conic);
    for (Index b : inst.samples) CHECK(std::binary_search(r.on_conic.begin(), r.on_conic.end(), b));
    CHECK(r.rank >= 2);
  }
}

TEST_CASE("fixed conic instance") {
  const PointTriple t{HPoint(3, 2), HPoint(4, 5), HPoint(6, 7)};
  const auto inst = gen_conic_instance(t, 50, 0);
  const auto sys = build_triples(inst.sets);
  CHECK(sys.num_edges() == 300);
  const auto r = extract_conic(sys, SearchParams{}, 0);
  REQUIRE(r.conic.has_value());
  CHECK(r.conic->str() == "25 62 49 -87 -147 98");
  CHECK(r.mode == NormalMode::kT1);
  CHECK(r.on_conic.size() >= 50);
}

TEST_CASE("extraction is projectively equivariant") {
  const PointTriple t{HPoint(3, 2), HPoint(4, 5), HPoint(6, 7)};
  const auto inst = gen_conic_instance(t, 20, 3);
  const ProjMap m({{{2, 1, 0}, {0, 1, 0}, {0, 0, 1}}});
  const auto moved = mapped(*inst.sets, m);
  const auto r = extract_conic(build_triples(moved), SearchParams{}, 3);
  REQUIRE(r.conic.has_value());
  CHECK(*r.conic == m.apply(inst.conic));
}

TEST_CASE("Figure 8 instance reports the degeneracy") {
  const auto sets = gen_degenerate_family({{Rat(1), Rat(3)}, {Rat(5), Rat(-2)}});
  const auto sys = build_triples(sets);
  try {
    extract_conic(sys, SearchParams{}, 0);
    FAIL("expected a degenerate similar triples error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDegenerateSimilarTriples);
    const std::string msg = e.what();
    CHECK(msg.find("(0, 0)") != std::string::npos);
    CHECK(msg.find("(2, 0)") != std::string::npos);
  }
  const auto rep = extract_conic_report(sys, SearchParams{}, 0);
  CHECK(rep.degeneracy.has_value());
  CHECK_FALSE(rep.conic.has_value());
  CHECK(rep.polynomial.is_zero());
}

TEST_CASE("empty system has no branch pair") {
  auto sets = std::make_shared<LabeledSets>();
  sets->a = {HPoint(0, 5), HPoint(1, 7)};
  sets->b = {HPoint(3, 3), HPoint(9, 4)};
  sets->c = {HPoint(0, 0), HPoint(11, 0)};
  CHECK(code_of([&] { extract_conic(build_triples(sets), SearchParams{}, 0); }) == ErrorCode::kNoBranchPair);
}

TEST_CASE("c_line") {
  const PointTriple t{HPoint(3, 2), HPoint(4, 5), HPoint(6, 7)};
  const auto inst = gen_conic_instance(t, 5, 0);
  CHECK(c_line(*inst.sets) == HLine::x_axis());
  auto off = std::make_shared<LabeledSets>(*inst.sets);
  off->c.push_back(HPoint(1, 1));
  CHECK(code_of([&] { c_line(*off); }) == ErrorCode::kInvalidArgument);
  CHECK(c_line(*gen_grid_with_directions(4)) == HLine::at_infinity());
}

TEST_CASE("best branch pair on a planted instance") {
  const PointTriple t{HPoint(3, 2), HPoint(4, 5), HPoint(6, 7)};
  const auto inst = gen_conic_instance(t, 30, 2);
  const auto sys = build_triples(inst.sets);
  const auto bp = best_branch_pair(sys.graph(), partition_blocks(sys, sys.size(Part::kA)));
  REQUIRE(bp.has_value());
  CHECK(bp->first == IndexTriple{0, 1, 2});
  CHECK(bp->second == IndexTriple{3, 4, 5});
  CHECK(bp->support() == 30);
  CHECK(bp->first_centres.size() == bp->support());
}

TEST_CASE("direction instance on a square") {
  const std::vector<HPoint> square{HPoint(0, 0), HPoint(1, 0), HPoint(1, 1), HPoint(0, 1)};
  const auto inst = direction_instance(square, {{0, 1}, {3, 2}});
  CHECK(inst.near.size() == 2);
  CHECK(inst.far.size() == 2);
  CHECK(inst.crossing.size() == 2);
  CHECK(inst.e_directions == 1);
  CHECK(inst.directions.size() == 1);
  const auto full = direction_instance(square, all_pairs(4));
  CHECK(full.e_directions == 4);
  CHECK(full.directions.size() == 3);
  for (const auto& d : inst.directions) CHECK_FALSE(d.is_finite());
  std::vector<HPoint> inner = square;
  inner.push_back(HPoint(Rat(1, 2), Rat(1, 3)));
  CHECK(code_of([&] { direction_instance(inner, all_pairs(5)); }) == ErrorCode::kNotConvex);
}

TEST_CASE("direction instance is affine invariant") {
  const auto pts = gen_circle_points(9);
  const auto inst = direction_instance(pts, all_pairs(pts.size()));
  const ProjMap m({{{3, 1, 5}, {-1, 2, 7}, {0, 0, 1}}});
  std::vector<HPoint> moved;
  for (const auto& p : pts) moved.push_back(m.apply(p));
  const auto other = direction_instance(moved, all_pairs(moved.size()));
  CHECK(other.near == inst.near);
  CHECK(other.crossing == inst.crossing);
  CHECK(other.directions.size() == inst.directions.size());
  CHECK(other.e_directions == inst.e_directions);
}

TEST_CASE("circle points: few directions, conic recovered") {
  const auto pts = gen_circle_points(16);
  CHECK(in_convex_position(pts));
  const auto r = convex_few_directions(pts, all_pairs(16), SearchParams{}, 0);
  CHECK(r.instance.e_directions == 2 * 16 - 3);
  REQUIRE(r.conic.has_value());
  CHECK(r.conic->str() == "1 0 1 0 0 -1");
  for (Index i : r.a_star) CHECK(on_conic(*r.conic, pts[i]));
  CHECK(r.h.size() == 64);
}

TEST_CASE("grid is not in convex position") {
  std::vector<HPoint> grid;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) grid.push_back(HPoint(i, j));
  CHECK(code_of([&] { convex_few_directions(grid, all_pairs(9), SearchParams{}, 0); }) == ErrorCode::kNotConvex);
}

TEST_CASE("half of the B points planted") {
  const PointTriple t{HPoint(3, 2), HPoint(4, 5), HPoint(6, 7)};
  const auto inst = gen_conic_instance(t, 20, 5);
  auto noisy = std::make_shared<LabeledSets>(*inst.sets);
  Rng rng(5);
  for (int i = 0; i < 20; ++i) {
    HPoint p(Rat(std::int64_t(rng.below(400)) - 200, 7), Rat(std::int64_t(rng.below(400)) + 1, 11));
    if (std::find(noisy->b.begin(), noisy->b.end(), p) == noisy->b.end() &&
        std::find(noisy->a.begin(), noisy->a.end(), p) == noisy->a.end())
      noisy->b.push_back(p);
  }
  const auto r = extract_conic(build_triples(noisy), SearchParams{}, 5);
  REQUIRE(r.conic.has_value());
  CHECK(*r.conic == inst.conic);
  for (Index b : inst.samples) CHECK(std::binary_search(r.on_conic.begin(), r.on_conic.end(), b));
}

TEST_CASE("forced modes") {
  const PointTriple t{HPoint(3, 2), HPoint(4, 5), HPoint(6, 7)};
  const auto inst = gen_conic_instance(t, 15, 1);
  const auto sys = build_triples(inst.sets);
  const auto r1 = extract_conic(sys, SearchParams{}, 1, ModeChoice::kT1);
  const auto r2 = extract_conic(sys, SearchParams{}, 1, ModeChoice::kT2);
  CHECK(r1.mode == NormalMode::kT1);
  CHECK(r2.mode == NormalMode::kT2);
  REQUIRE(r1.conic.has_value());
  REQUIRE(r2.conic.has_value());
  CHECK(*r1.conic == *r2.conic);
}
