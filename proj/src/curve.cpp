#include "ctri/curve.hpp"

#include "ctri/error.hpp"

#include <sstream>

namespace ctri {

CurvePoly CurvePoly::constant(const Rat& c) {
  CurvePoly p;
  p.c_[0][0] = c;
  return p;
}

CurvePoly CurvePoly::x() {
  CurvePoly p;
  p.c_[1][0] = 1;
  return p;
}

CurvePoly CurvePoly::y() {
  CurvePoly p;
  p.c_[0][1] = 1;
  return p;
}

void CurvePoly::set(int i, int j, const Rat& v) {
  if (i < 0 || j < 0 || i + j > kMaxDegree) throw Error(ErrorCode::kInvalidArgument, "monomial degree exceeds 3");
  c_[i][j] = v;
}

bool CurvePoly::is_zero() const {
  for (const auto& row : c_)
    for (const auto& v : row)
      if (v != 0) return false;
  return true;
}

int CurvePoly::total_degree() const {
  int d = -1;
  for (int i = 0; i <= kMaxDegree; ++i)
    for (int j = 0; j <= kMaxDegree; ++j)
      if (c_[i][j] != 0) d = std::max(d, i + j);
  return d;
}

Rat CurvePoly::evaluate(const Rat& x, const Rat& y) const {
  Rat total = 0;
  Rat xi = 1;
  for (int i = 0; i <= kMaxDegree; ++i) {
    Rat yj = 1;
    for (int j = 0; j <= kMaxDegree; ++j) {
      if (c_[i][j] != 0) total += c_[i][j] * xi * yj;
      yj *= y;
    }
    xi *= x;
  }
  return total;
}

CurvePoly CurvePoly::coefficient_of_x(int i) const {
  CurvePoly p;
  for (int j = 0; j <= kMaxDegree; ++j) p.c_[0][j] = c_[i][j];
  return p;
}

std::string CurvePoly::str() const {
  std::ostringstream out;
  bool first = true;
  for (int d = kMaxDegree; d >= 0; --d) {
    for (int i = d; i >= 0; --i) {
      const int j = d - i;
      const Rat& v = c_[i][j];
      if (v == 0) continue;
      if (!first) out << (sign(v) < 0 ? " - " : " + ");
      else if (sign(v) < 0) out << "-";
      first = false;
      const Rat mag = abs(v);
      const bool unit = mag == 1 && d > 0;
      if (!unit) out << to_string(mag);
      if (i > 0) out << (unit ? "" : "*") << "x" << (i > 1 ? "^" + std::to_string(i) : "");
      if (j > 0) out << ((unit && i == 0) ? "" : "*") << "y" << (j > 1 ? "^" + std::to_string(j) : "");
    }
  }
  if (first) out << "0";
  return out.str();
}

CurvePoly operator+(const CurvePoly& p, const CurvePoly& q) {
  CurvePoly r;
  for (int i = 0; i <= CurvePoly::kMaxDegree; ++i)
    for (int j = 0; j <= CurvePoly::kMaxDegree; ++j) r.c_[i][j] = p.c_[i][j] + q.c_[i][j];
  return r;
}

CurvePoly operator-(const CurvePoly& p, const CurvePoly& q) {
  CurvePoly r;
  for (int i = 0; i <= CurvePoly::kMaxDegree; ++i)
    for (int j = 0; j <= CurvePoly::kMaxDegree; ++j) r.c_[i][j] = p.c_[i][j] - q.c_[i][j];
  return r;
}

CurvePoly operator*(const CurvePoly& p, const CurvePoly& q) {
  CurvePoly r;
  constexpr int D = CurvePoly::kMaxDegree;
  for (int i1 = 0; i1 <= D; ++i1)
    for (int j1 = 0; j1 <= D; ++j1) {
      if (p.c_[i1][j1] == 0) continue;
      for (int i2 = 0; i2 <= D; ++i2)
        for (int j2 = 0; j2 <= D; ++j2) {
          if (q.c_[i2][j2] == 0) continue;
          if (i1 + i2 + j1 + j2 > D) throw Error(ErrorCode::kInvalidArgument, "product exceeds degree 3");
          r.c_[i1 + i2][j1 + j2] += p.c_[i1][j1] * q.c_[i2][j2];
        }
    }
  return r;
}

CurvePoly operator*(const Rat& s, const CurvePoly& p) {
  CurvePoly r;
  for (int i = 0; i <= CurvePoly::kMaxDegree; ++i)
    for (int j = 0; j <= CurvePoly::kMaxDegree; ++j) r.c_[i][j] = s * p.c_[i][j];
  return r;
}

const char* mode_name(NormalMode mode) { return mode == NormalMode::kT1 ? "t1" : "t2"; }

std::array<HPoint, 3> base_triple(NormalMode mode) {
  if (mode == NormalMode::kT1) return {HPoint(0, 1), HPoint(0, 2), HPoint(1, 1)};
  return {HPoint(0, Rat(1, 2)), HPoint(0, 1), HPoint(1, 1)};
}

namespace {

// Foot r of (x, y) is f_r / k_r with k_r linear in y and f_r linear in (x, y).
struct FootForm {
  CurvePoly k;
  CurvePoly f;
};

std::array<FootForm, 3> foot_forms(NormalMode mode) {
  const CurvePoly one = CurvePoly::constant(1);
  const CurvePoly x = CurvePoly::x();
  const CurvePoly y = CurvePoly::y();
  if (mode == NormalMode::kT1)
    return {FootForm{one - y, x}, FootForm{CurvePoly::constant(2) - y, Rat(2) * x}, FootForm{one - y, x - y}};
  return {FootForm{one - Rat(2) * y, x}, FootForm{one - y, x}, FootForm{one - y, x - y}};
}

}  // namespace

Feet feet_on_axis(const Rat& x, const Rat& y, NormalMode mode) {
  const bool bad = mode == NormalMode::kT1 ? (y == 1 || y == 2) : (y == 1 || y == Rat(1, 2));
  if (bad)
    throw Error(ErrorCode::kForbiddenOrdinate,
                "y = " + to_string(y) + " is excluded in mode " + mode_name(mode));
  const auto forms = foot_forms(mode);
  std::array<Rat, 3> v;
  for (int r = 0; r < 3; ++r) v[r] = forms[r].f.evaluate(x, y) / forms[r].k.evaluate(x, y);
  return Feet{v[0], v[1], v[2]};
}

CurvePoly curve_determinant(const PointTriple& a_triple, NormalMode mode) {
  const auto forms = foot_forms(mode);
  std::array<std::array<CurvePoly, 3>, 3> m;
  for (int r = 0; r < 3; ++r) {
    const HPoint& p = a_triple[r];
    if (!p.is_finite()) throw Error(ErrorCode::kPointOnAxis, "triple point " + p.str() + " is at infinity");
    const Rat a = p.ax();
    const Rat b = p.ay();
    if (b == 0) throw Error(ErrorCode::kPointOnAxis, "triple point " + p.str() + " lies on the x-axis");
    m[r][0] = b * forms[r].k;
    m[r][1] = a * forms[r].k - forms[r].f;
    m[r][2] = b * forms[r].f;
  }
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

CurvePoly divide_by_y(const CurvePoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::kDegenerateTriple, "determinant polynomial is identically zero");
  CurvePoly q;
  for (int i = 0; i <= CurvePoly::kMaxDegree; ++i) {
    if (p.coeff(i, 0) != 0) throw Error(ErrorCode::kNotDivisible, "polynomial is not divisible by y");
    for (int j = 1; i + j <= CurvePoly::kMaxDegree; ++j) q.set(i, j - 1, p.coeff(i, j));
  }
  return q;
}

Conic conic_from_quadratic(const CurvePoly& q) {
  if (q.total_degree() > 2) throw Error(ErrorCode::kInvalidArgument, "polynomial has degree above 2");
  return Conic({q.coeff(2, 0), q.coeff(1, 1), q.coeff(0, 2), q.coeff(1, 0), q.coeff(0, 1), q.coeff(0, 0)});
}

Conic factor_out_axis(const CurvePoly& p) { return conic_from_quadratic(divide_by_y(p)); }

std::string DegeneracyWitness::str() const {
  return std::string("mode=") + mode_name(mode) + " c=" + to_string(c);
}

std::optional<DegeneracyWitness> degenerate_witness(const PointTriple& a_triple, NormalMode mode) {
  std::array<Rat, 3> a;
  std::array<Rat, 3> b;
  for (int r = 0; r < 3; ++r) {
    if (!a_triple[r].is_finite()) return std::nullopt;
    a[r] = a_triple[r].ax();
    b[r] = a_triple[r].ay();
    if (b[r] == 0) return std::nullopt;
  }
  if (a[0] * b[1] != a[1] * b[0]) return std::nullopt;
  const Rat c = b[0] / b[1];
  if (mode == NormalMode::kT1) {
    if (b[0] != b[2] || a[2] != a[0] - 2 * c + 2) return std::nullopt;
  } else {
    if (b[1] != b[2] || a[2] != a[1] + 1 / c - 1) return std::nullopt;
  }
  return DegeneracyWitness{mode, c};
}

}  // namespace ctri
