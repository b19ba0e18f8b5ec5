#include "ctri/error.hpp"
#include "ctri/geometry.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>

using namespace ctri;
using ctri::testing::det_points;
using ctri::testing::rand_point;

TEST_CASE("rational parsing") {
  CHECK(parse_rat("3") == 3);
  CHECK(parse_rat("-2/6") == Rat(-1, 3));
  CHECK(parse_rat("2.5") == Rat(5, 2));
  CHECK(parse_rat("-0.125") == Rat(-1, 8));
  CHECK_THROWS_AS(parse_rat("1/0"), Error);
  CHECK_THROWS_AS(parse_rat("abc"), Error);
  Rat r;
  CHECK(rational_sqrt(Rat(9, 4), r));
  CHECK(r == Rat(3, 2));
  CHECK_FALSE(rational_sqrt(Rat(2), r));
}

TEST_CASE("canonical points") {
  CHECK(HPoint::homogeneous(2, 4, 2) == HPoint(1, 2));
  CHECK(HPoint::homogeneous(-2, -4, -2) == HPoint(1, 2));
  const HPoint d = HPoint::homogeneous(-3, 6, 0);
  CHECK_FALSE(d.is_finite());
  CHECK(d.x() == 1);
  CHECK(d.y() == -2);
  CHECK_THROWS_AS(HPoint::homogeneous(0, 0, 0), Error);
}

TEST_CASE("orient") {
  CHECK(orient(HPoint(0, 0), HPoint(1, 1), HPoint(2, 2)) == 0);
  CHECK(orient(HPoint(0, 0), HPoint(1, 0), HPoint(0, 1)) == 1);
  CHECK(orient(HPoint(0, 0), HPoint(Rat(5, 2), Rat(3, 2)), HPoint(5, 3)) == 0);

  Rng rng(11);
  for (int t = 0; t < 300; ++t) {
    const HPoint p = rand_point(rng), q = rand_point(rng), r = rand_point(rng);
    const int s = orient(p, q, r);
    CHECK(s == sign(det_points(p.ax(), p.ay(), q.ax(), q.ay(), r.ax(), r.ay())));
    CHECK(orient(q, p, r) == -s);
    CHECK(orient(q, r, p) == s);
  }
}

TEST_CASE("lines and meets") {
  CHECK(line_through(HPoint(0, 0), HPoint(1, 0)) == HLine::x_axis());
  CHECK(line_through(HPoint(0, 1), HPoint(0, 2)) == HLine(1, 0, 0));
  const HLine l = line_through(HPoint(5, 3), HPoint(Rat(7, 2), Rat(3, 2)));
  CHECK(meet(l, HLine::x_axis()) == HPoint(2, 0));
  CHECK(meet(HLine::x_axis(), HLine(1, 0, 0)) == HPoint(0, 0));
  const HPoint par = meet(HLine(0, 1, -1), HLine(0, 1, -3));
  CHECK_FALSE(par.is_finite());
  CHECK_THROWS_AS(line_through(HPoint(1, 1), HPoint(1, 1)), Error);
  CHECK_THROWS_AS(meet(HLine::x_axis(), HLine::x_axis()), Error);

  Rng rng(5);
  for (int t = 0; t < 200; ++t) {
    const HPoint p = rand_point(rng), q = rand_point(rng);
    if (p == q) continue;
    const HLine pq = line_through(p, q);
    CHECK(incident(pq, p));
    CHECK(incident(pq, q));
    CHECK(incident(pq, direction_of(p, q)));
  }
}

TEST_CASE("conic through five points") {
  // Points on x^2 + y^2 = 25.
  std::vector<HPoint> pts{HPoint(5, 0), HPoint(3, 4), HPoint(-4, 3), HPoint(0, -5), HPoint(-3, -4)};
  const ConicFit fit = conic_through_five(pts);
  CHECK(fit.unique);
  CHECK(fit.conic == Conic({1, 0, 1, 0, 0, -25}));
  CHECK(on_conic(fit.conic, HPoint(4, -3)));
  CHECK_FALSE(on_conic(fit.conic, HPoint(1, 1)));
  CHECK(conic_rank(fit.conic) == 3);

  // Two lines: xy = 0.
  std::vector<HPoint> cross{HPoint(1, 0), HPoint(2, 0), HPoint(3, 0), HPoint(0, 1), HPoint(0, 2)};
  const ConicFit lines = conic_through_five(cross);
  CHECK(lines.unique);
  CHECK(conic_rank(lines.conic) == 2);
  CHECK(conic_rank(Conic({1, 0, 0, 0, 0, 0})) == 1);

  // Four collinear points leave a pencil.
  std::vector<HPoint> pencil{HPoint(0, 0), HPoint(1, 0), HPoint(2, 0), HPoint(3, 0), HPoint(0, 1)};
  CHECK_FALSE(conic_through_five(pencil).unique);
}

TEST_CASE("projective maps") {
  const ProjMap m({{{2, 1, 0}, {0, 1, 3}, {1, 0, 1}}});
  const ProjMap inv = m.inverse();
  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    const HPoint p = rand_point(rng);
    CHECK(inv.apply(m.apply(p)) == p);
  }
  CHECK(m.compose(inv) == ProjMap::identity());
  CHECK_THROWS_AS(ProjMap({{{1, 2, 3}, {2, 4, 6}, {0, 0, 1}}}), Error);

  // Transported conic and line keep incidences.
  const Conic circle({1, 0, 1, 0, 0, -25});
  const Conic image = m.apply(circle);
  CHECK(on_conic(image, m.apply(HPoint(3, 4))));
  const HLine l = line_through(HPoint(1, 2), HPoint(3, -1));
  CHECK(incident(m.apply(l), m.apply(HPoint(1, 2))));
  CHECK(incident(m.apply(l), m.apply(HPoint(3, -1))));
}

TEST_CASE("normalizing map") {
  const std::array<HPoint, 3> src{HPoint(2, 5), HPoint(-1, 4), HPoint(3, 7)};
  const std::array<HPoint, 3> dst{HPoint(0, 1), HPoint(0, 2), HPoint(1, 1)};
  const HLine line(1, 1, 20);
  const ProjMap m = proj_map_normalizing(src, dst, line, HLine::x_axis());
  for (int i = 0; i < 3; ++i) CHECK(m.apply(src[i]) == dst[i]);
  CHECK(m.apply(line) == HLine::x_axis());
  const ProjMap inf = proj_map_normalizing(src, dst, HLine::at_infinity(), HLine::x_axis());
  CHECK(inf.apply(HLine::at_infinity()) == HLine::x_axis());
  // A source point on the line cannot be normalized.
  const std::array<HPoint, 3> bad{HPoint(-20, 0), HPoint(-1, 4), HPoint(3, 7)};
  CHECK_THROWS_AS(proj_map_normalizing(bad, dst, line, HLine::x_axis()), Error);
}

TEST_CASE("similar triples relative to a line") {
  const Triangle base{HPoint(1, 1), HPoint(0, 1), HPoint(0, 2)};
  const Triangle fig{HPoint(Rat(7, 2), Rat(3, 2)), HPoint(Rat(5, 2), Rat(3, 2)), HPoint(5, 3)};
  const auto w = similar_rel_line(base, fig, HLine::x_axis());
  REQUIRE(w.has_value());
  CHECK(w->meets[0] == HPoint::homogeneous(1, 0, 0));
  CHECK(w->meets[1] == HPoint(0, 0));
  CHECK(w->meets[2] == HPoint(2, 0));
  for (int k = 0; k < 3; ++k) {
    CHECK(incident(w->carrier, w->meets[k]));
    CHECK(meet(w->sides[k].first, w->sides[k].second) == w->meets[k]);
  }
  const Triangle other{HPoint(3, 2), HPoint(4, 5), HPoint(6, 7)};
  CHECK_FALSE(similar_rel_line(base, other, HLine::x_axis()).has_value());
  CHECK_FALSE(similar_any_correspondence(base, other, HLine::x_axis()).has_value());
  const auto any = similar_any_correspondence(base, Triangle{fig[2], fig[0], fig[1]}, HLine::x_axis());
  REQUIRE(any.has_value());
  CHECK(any->permutation == std::array<int, 3>{1, 2, 0});
}

TEST_CASE("convex position") {
  std::vector<HPoint> square{HPoint(0, 0), HPoint(1, 0), HPoint(1, 1), HPoint(0, 1)};
  CHECK(in_convex_position(square));
  CHECK(convex_hull(square).size() == 4);
  square.push_back(HPoint(Rat(1, 2), Rat(1, 2)));
  CHECK_FALSE(in_convex_position(square));
  std::vector<HPoint> edge{HPoint(0, 0), HPoint(2, 0), HPoint(1, 0), HPoint(0, 1)};
  CHECK_FALSE(in_convex_position(edge));
  const auto hull = convex_hull(std::vector<HPoint>{HPoint(0, 0), HPoint(4, 0), HPoint(0, 4)});
  CHECK(line_meets_hull(HLine(1, 1, -4), hull));
  CHECK_FALSE(line_meets_hull(HLine(1, 1, -5), hull));
  CHECK(line_meets_hull(HLine(1, 0, 0), hull));
}

TEST_CASE("approximate direction counting") {
  for (std::size_t n : {5u, 6u, 17u}) {
    std::vector<ApproxPoint> pts;
    for (std::size_t k = 0; k < n; ++k) {
      const double a = 2 * M_PI * double(k) / double(n);
      pts.push_back({std::cos(a), std::sin(a)});
    }
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    CHECK(count_directions_approx(pts, pairs) == n);
  }
}
