#include "ctri/curve.hpp"
#include "ctri/error.hpp"
#include "ctri/generators.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace ctri;
using ctri::testing::rand_rat;

namespace {

Rat det3(const std::array<std::array<Rat, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// Value of the concurrency determinant at (x, y), computed from the lines
// joining base point r to the triple point r through the same foot.
// Each line is scaled by the denominator-cleared k_r = d (q - y).
Rat oracle_value(const PointTriple& t, NormalMode mode, const Rat& x, const Rat& y) {
  const auto base = base_triple(mode);
  std::array<std::array<Rat, 3>, 3> m;
  for (int r = 0; r < 3; ++r) {
    const Rat p = base[r].ax(), q = base[r].ay();
    const Rat d = Rat(q.get_den());
    const Rat k = d * (q - y);
    const Rat f = d * (q * x - p * y);
    const Rat a = t[r].ax(), b = t[r].ay();
    m[r] = {k * b, k * a - f, b * f};
  }
  return det3(m);
}

// Polynomial of degree <= 3 in each variable, recovered from values on a 4 x 4 grid.
bool matches_oracle(const CurvePoly& poly, const PointTriple& t, NormalMode mode) {
  for (int xi : {-3, 0, 4, 7})
    for (int yi : {-2, 3, 5, 9})
      if (poly.evaluate(xi, yi) != oracle_value(t, mode, xi, yi)) return false;
  return true;
}

PointTriple random_nonzero_triple(Rng& rng) {
  PointTriple t;
  for (auto& p : t) {
    Rat b;
    do b = rand_rat(rng, 9, 4);
    while (b == 0);
    p = HPoint(rand_rat(rng, 9, 4), b);
  }
  return t;
}

PointTriple degenerate_t1(const Rat& a1, const Rat& b2, const Rat& c) {
  const Rat b1 = c * b2;
  return {HPoint(a1, b1), HPoint(a1 / c, b2), HPoint(a1 - 2 * c + 2, b1)};
}

PointTriple degenerate_t2(const Rat& a1, const Rat& b2, const Rat& c) {
  const Rat b1 = c * b2;
  const Rat a2 = a1 / c;
  return {HPoint(a1, b1), HPoint(a2, b2), HPoint(a2 + 1 / c - 1, b2)};
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  const auto x = CurvePoly::x(), y = CurvePoly::y();
  const auto p = (x + y) * (x - y);
  CHECK(p.coeff(2, 0) == 1);
  CHECK(p.coeff(0, 2) == -1);
  CHECK(p.coeff(1, 1) == 0);
  CHECK(p.total_degree() == 2);
  CHECK(p.evaluate(3, 2) == 5);
  CHECK(CurvePoly().total_degree() == -1);
  CHECK_THROWS_AS(p * p, Error);
  CHECK(p.str() == "x^2 - y^2");
}

TEST_CASE("feet on the axis") {
  const Feet f = feet_on_axis(3, 5, NormalMode::kT1);
  // Line from (3,5) through (0,1) meets y = 0 at x = -3/4.
  CHECK(f.u == Rat(-3, 4));
  CHECK(f.t == Rat(-2));
  CHECK(f.s == Rat(1, 2));
  for (const Rat& y : {Rat(1), Rat(2)}) CHECK_THROWS_AS(feet_on_axis(0, y, NormalMode::kT1), Error);
  for (const Rat& y : {Rat(1), Rat(1, 2)}) CHECK_THROWS_AS(feet_on_axis(0, y, NormalMode::kT2), Error);
  CHECK_NOTHROW(feet_on_axis(0, 2, NormalMode::kT2));
}

TEST_CASE("curve determinant matches the direct expansion") {
  Rng rng(101);
  for (int trial = 0; trial < 100; ++trial) {
    const auto t = random_nonzero_triple(rng);
    for (auto mode : {NormalMode::kT1, NormalMode::kT2}) {
      const auto poly = curve_determinant(t, mode);
      CHECK(matches_oracle(poly, t, mode));
      CHECK(poly.total_degree() <= 3);
      // The x-axis is a component.
      for (int j = 0; j < 4; ++j) CHECK(poly.coeff(j, 0) == 0);
    }
  }
}

TEST_CASE("factored quadratic coefficients") {
  Rng rng(202);
  const auto y = CurvePoly::y();
  const auto one = CurvePoly::constant(1);
  for (int trial = 0; trial < 100; ++trial) {
    const auto t = random_nonzero_triple(rng);
    const Rat a1 = t[0].ax(), a2 = t[1].ax();
    const Rat b1 = t[0].ay(), b2 = t[1].ay(), b3 = t[2].ay();
    if (degenerate_witness(t, NormalMode::kT1) || degenerate_witness(t, NormalMode::kT2)) continue;

    const auto q1 = divide_by_y(curve_determinant(t, NormalMode::kT1));
    CHECK(q1.coeff(2, 0) == b2 * (b3 - b1));
    const auto c1 = (b3 * (a1 * b2 - a2 * b1)) * ((y - one) * (y - CurvePoly::constant(2)));
    CHECK(q1.coefficient_of_x(0) == c1);

    const auto q2 = divide_by_y(curve_determinant(t, NormalMode::kT2));
    CHECK(q2.coeff(2, 0) == b1 * (b3 - b2));
    const auto c2 = (b3 * (a1 * b2 - a2 * b1)) * ((y - one) * (Rat(2) * y - one));
    CHECK(q2.coefficient_of_x(0) == c2);
  }
}

TEST_CASE("points of the conic have concurrent lines") {
  Rng rng(303);
  for (int trial = 0; trial < 20; ++trial) {
    const auto t = random_triple(rng);
    const Conic conic = factor_out_axis(curve_determinant(t, NormalMode::kT1));
    const auto start = find_rational_point(conic);
    if (!start) continue;
    const HPoint p = *start;
    if (!p.is_finite() || p.ay() == 0 || p.ay() == 1 || p.ay() == 2) continue;
    const Feet f = feet_on_axis(p.ax(), p.ay(), NormalMode::kT1);
    const std::array<Rat, 3> feet{f.u, f.t, f.s};
    std::vector<HLine> lines;
    for (int r = 0; r < 3; ++r) lines.push_back(line_through(t[r], HPoint(feet[r], 0)));
    CHECK(concurrent(lines[0], lines[1], lines[2]));
  }
}

TEST_CASE("Figure 8 triple is degenerate") {
  const auto poly = curve_determinant(kFigure8Triple, NormalMode::kT1);
  CHECK(poly.is_zero());
  const auto w = degenerate_witness(kFigure8Triple, NormalMode::kT1);
  REQUIRE(w.has_value());
  CHECK(w->c == Rat(1, 2));
  CHECK(w->str() == "mode=t1 c=1/2");
  try {
    divide_by_y(poly);
    FAIL("expected a degenerate triple error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDegenerateTriple);
  }
}

TEST_CASE("degeneracy: witness, vanishing polynomial and similarity agree") {
  Rng rng(404);
  const HLine axis = HLine::x_axis();
  int degenerate_seen = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto mode = trial % 2 ? NormalMode::kT2 : NormalMode::kT1;
    PointTriple t;
    if (trial % 4 < 2) {
      Rat c;
      do c = rand_rat(rng, 6, 3);
      while (c == 0);
      Rat b2;
      do b2 = rand_rat(rng, 6, 3);
      while (b2 == 0);
      t = mode == NormalMode::kT1 ? degenerate_t1(rand_rat(rng), b2, c) : degenerate_t2(rand_rat(rng), b2, c);
    } else {
      t = random_nonzero_triple(rng);
    }
    if (orient(t[0], t[1], t[2]) == 0) continue;
    const bool witness = degenerate_witness(t, mode).has_value();
    const bool zero = curve_determinant(t, mode).is_zero();
    const auto base = base_triple(mode);
    const bool similar = similar_rel_line(Triangle{base[0], base[1], base[2]}, Triangle{t[0], t[1], t[2]}, axis)
                             .has_value();
    CHECK(witness == zero);
    CHECK(similar == zero);
    degenerate_seen += zero;
  }
  CHECK(degenerate_seen > 50);
}

TEST_CASE("T1 with b1 = b3 but not similar is a genuine conic") {
  const PointTriple t{HPoint(1, 3), HPoint(4, 5), HPoint(6, 3)};
  const auto poly = curve_determinant(t, NormalMode::kT1);
  CHECK_FALSE(poly.is_zero());
  const Conic c = factor_out_axis(poly);
  // The x^2 coefficient vanishes, so the conic is a hyperbola or parabola.
  CHECK(c[Conic::kXX] == 0);
  CHECK_FALSE(degenerate_witness(t, NormalMode::kT1).has_value());
}

TEST_CASE("curve determinant rejects points on the axis") {
  const PointTriple t{HPoint(1, 0), HPoint(4, 5), HPoint(6, 3)};
  CHECK_THROWS_AS(curve_determinant(t, NormalMode::kT1), Error);
  CurvePoly p;
  p.set(1, 0, 1);
  try {
    divide_by_y(p);
    FAIL("expected not divisible");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotDivisible);
  }
}
