#pragma once

#include "ctri/geometry.hpp"
#include "ctri/rational.hpp"

#include <array>
#include <optional>
#include <string>

namespace ctri {

/// Bivariate polynomial in (x, y) of total degree at most 3, dense.
class CurvePoly {
 public:
  static constexpr int kMaxDegree = 3;

  CurvePoly() = default;
  static CurvePoly constant(const Rat& c);
  static CurvePoly x();
  static CurvePoly y();

  const Rat& coeff(int i, int j) const { return c_[i][j]; }  // x^i y^j
  void set(int i, int j, const Rat& v);

  bool is_zero() const;
  int total_degree() const;  // -1 for the zero polynomial
  Rat evaluate(const Rat& x, const Rat& y) const;
  // Coefficient of x^i as a polynomial in y.
  CurvePoly coefficient_of_x(int i) const;

  std::string str() const;

  friend CurvePoly operator+(const CurvePoly& p, const CurvePoly& q);
  friend CurvePoly operator-(const CurvePoly& p, const CurvePoly& q);
  friend CurvePoly operator*(const CurvePoly& p, const CurvePoly& q);
  friend CurvePoly operator*(const Rat& s, const CurvePoly& p);
  friend bool operator==(const CurvePoly& p, const CurvePoly& q) { return p.c_ == q.c_; }

 private:
  std::array<std::array<Rat, kMaxDegree + 1>, kMaxDegree + 1> c_{};
};

enum class NormalMode { kT1, kT2 };

const char* mode_name(NormalMode mode);

// Targets of the normalization in determinant row order:
// T1: (0,1), (0,2), (1,1); T2: (0,1/2), (0,1), (1,1).
std::array<HPoint, 3> base_triple(NormalMode mode);

struct Feet {
  Rat u;
  Rat t;
  Rat s;
};

// Where the lines from (x, y) through the base points meet the x-axis.
Feet feet_on_axis(const Rat& x, const Rat& y, NormalMode mode);

using PointTriple = std::array<HPoint, 3>;

// Concurrency determinant of the lines joining the triple to the feet of (x, y).
CurvePoly curve_determinant(const PointTriple& a_triple, NormalMode mode);

// Exact quotient by y; throws kNotDivisible or kDegenerateTriple (zero input).
CurvePoly divide_by_y(const CurvePoly& p);
Conic factor_out_axis(const CurvePoly& p);
// Quadratic with coefficients read off the affine polynomial.
Conic conic_from_quadratic(const CurvePoly& q);

struct DegeneracyWitness {
  NormalMode mode = NormalMode::kT1;
  Rat c;  // b1 / b2
  std::string str() const;
};

// T1: a1 b2 = a2 b1, b1 = b3, a3 = a1 - 2c + 2.
// T2: a1 b2 = a2 b1, b2 = b3, a3 = a2 + 1/c - 1.
std::optional<DegeneracyWitness> degenerate_witness(const PointTriple& a_triple, NormalMode mode);

}  // namespace ctri
