#include "ctri/geometry.hpp"

#include "ctri/error.hpp"
#include "ctri/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace ctri {

bool canonicalize(Vec3& v) {
  Int g = gcd(gcd(v[0], v[1]), v[2]);
  if (g == 0) return false;
  for (auto& x : v) x /= g;
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : v) y = -y;
    break;
  }
  return true;
}

Vec3 canonical_from(const Rat& x, const Rat& y, const Rat& w) {
  Int l = lcm(lcm(x.get_den(), y.get_den()), w.get_den());
  Vec3 v{Int(x.get_num() * (l / x.get_den())), Int(y.get_num() * (l / y.get_den())),
         Int(w.get_num() * (l / w.get_den()))};
  if (!canonicalize(v)) throw Error(ErrorCode::kInvalidArgument, "all homogeneous coordinates are zero");
  return v;
}

Vec3 cross(const Vec3& u, const Vec3& v) {
  return {Int(u[1] * v[2] - u[2] * v[1]), Int(u[2] * v[0] - u[0] * v[2]), Int(u[0] * v[1] - u[1] * v[0])};
}

Int dot(const Vec3& u, const Vec3& v) { return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]; }

Int det3(const Vec3& r0, const Vec3& r1, const Vec3& r2) { return dot(r0, cross(r1, r2)); }

std::size_t Vec3Hash::operator()(const Vec3& v) const noexcept {
  std::size_t h = hash_value(v[0]);
  h = h * 1000003u ^ hash_value(v[1]);
  h = h * 1000003u ^ hash_value(v[2]);
  return h;
}

// ---------------------------------------------------------------------------

HPoint::HPoint(const Rat& x, const Rat& y) : v_(canonical_from(x, y, Rat(1))) {}

HPoint HPoint::homogeneous(const Rat& x, const Rat& y, const Rat& w) {
  HPoint p;
  p.v_ = canonical_from(x, y, w);
  return p;
}

HPoint HPoint::from_canonical(Vec3 v) {
  if (!canonicalize(v)) throw Error(ErrorCode::kInvalidArgument, "all homogeneous coordinates are zero");
  HPoint p;
  p.v_ = std::move(v);
  return p;
}

Rat HPoint::ax() const {
  Rat r(v_[0], v_[2]);
  r.canonicalize();
  return r;
}

Rat HPoint::ay() const {
  Rat r(v_[1], v_[2]);
  r.canonicalize();
  return r;
}

std::string HPoint::str() const {
  if (is_finite()) return "(" + to_string(ax()) + ", " + to_string(ay()) + ")";
  return "[" + to_string(v_[0]) + ":" + to_string(v_[1]) + ":" + to_string(v_[2]) + "]";
}

HLine::HLine(const Rat& a, const Rat& b, const Rat& c) : v_(canonical_from(a, b, c)) {}

HLine HLine::from_canonical(Vec3 v) {
  if (!canonicalize(v)) throw Error(ErrorCode::kInvalidArgument, "all line coefficients are zero");
  HLine l;
  l.v_ = std::move(v);
  return l;
}

std::string HLine::str() const {
  return "[" + to_string(v_[0]) + "," + to_string(v_[1]) + "," + to_string(v_[2]) + "]";
}

bool incident(const HLine& line, const HPoint& p) { return dot(line.coords(), p.coords()) == 0; }

int side(const HLine& line, const HPoint& p) {
  int s = sgn(dot(line.coords(), p.coords()));
  return p.w() < 0 ? -s : s;
}

int orient(const HPoint& p, const HPoint& q, const HPoint& r) {
  int s = sgn(det3(p.coords(), q.coords(), r.coords()));
  for (const HPoint* h : {&p, &q, &r})
    if (h->w() < 0) s = -s;
  return s;
}

bool collinear(const HPoint& p, const HPoint& q, const HPoint& r) {
  return det3(p.coords(), q.coords(), r.coords()) == 0;
}

HLine line_through(const HPoint& p, const HPoint& q) {
  Vec3 l = cross(p.coords(), q.coords());
  if (l[0] == 0 && l[1] == 0 && l[2] == 0)
    throw Error(ErrorCode::kIdenticalPoints, "no unique line through " + p.str() + " and " + q.str());
  return HLine::from_canonical(std::move(l));
}

HPoint meet(const HLine& l1, const HLine& l2) {
  Vec3 p = cross(l1.coords(), l2.coords());
  if (p[0] == 0 && p[1] == 0 && p[2] == 0)
    throw Error(ErrorCode::kIdenticalLines, "lines " + l1.str() + " and " + l2.str() + " coincide");
  return HPoint::from_canonical(std::move(p));
}

bool concurrent(const HLine& l1, const HLine& l2, const HLine& l3) {
  return det3(l1.coords(), l2.coords(), l3.coords()) == 0;
}

HPoint direction_of(const HPoint& p, const HPoint& q) {
  if (!p.is_finite() || !q.is_finite())
    throw Error(ErrorCode::kInvalidArgument, "direction_of needs finite points");
  Vec3 d{Int(q.x() * p.w() - p.x() * q.w()), Int(q.y() * p.w() - p.y() * q.w()), Int(0)};
  if (d[0] == 0 && d[1] == 0)
    throw Error(ErrorCode::kIdenticalPoints, "direction of identical points " + p.str());
  return HPoint::from_canonical(std::move(d));
}

// ---------------------------------------------------------------------------

Conic::Conic(const std::array<Rat, 6>& coefficients) {
  Int l = 1;
  for (const auto& q : coefficients) l = lcm(l, q.get_den());
  Int g = 0;
  for (std::size_t i = 0; i < 6; ++i) {
    c_[i] = coefficients[i].get_num() * (l / coefficients[i].get_den());
    g = gcd(g, c_[i]);
  }
  if (g == 0) throw Error(ErrorCode::kInvalidArgument, "zero conic");
  for (auto& x : c_) x /= g;
  for (const auto& x : c_) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : c_) y = -y;
    break;
  }
}

Conic Conic::from_canonical(std::array<Int, 6> c) {
  std::array<Rat, 6> r;
  for (std::size_t i = 0; i < 6; ++i) r[i] = Rat(c[i]);
  return Conic(r);
}

Int Conic::evaluate(const HPoint& p) const {
  const Int& x = p.x();
  const Int& y = p.y();
  const Int& w = p.w();
  return c_[kXX] * x * x + c_[kXY] * x * y + c_[kYY] * y * y + c_[kXW] * x * w + c_[kYW] * y * w +
         c_[kWW] * w * w;
}

std::array<Vec3, 3> Conic::doubled_matrix() const {
  return {Vec3{Int(2 * c_[kXX]), c_[kXY], c_[kXW]}, Vec3{c_[kXY], Int(2 * c_[kYY]), c_[kYW]},
          Vec3{c_[kXW], c_[kYW], Int(2 * c_[kWW])}};
}

Conic Conic::from_doubled_matrix(const std::array<Vec3, 3>& m) {
  std::array<Rat, 6> r{Rat(m[0][0], 2), Rat(m[0][1] + m[1][0], 2), Rat(m[1][1], 2),
                       Rat(m[0][2] + m[2][0], 2), Rat(m[1][2] + m[2][1], 2), Rat(m[2][2], 2)};
  for (auto& x : r) x.canonicalize();
  return Conic(r);
}

std::string Conic::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < 6; ++i) os << (i ? " " : "") << c_[i].get_str();
  return os.str();
}

ConicFit conic_through_five(std::span<const HPoint> points) {
  if (points.size() != 5) throw Error(ErrorCode::kInvalidArgument, "conic_through_five needs five points");
  RatMatrix m;
  for (const auto& p : points) {
    const Int &x = p.x(), &y = p.y(), &w = p.w();
    m.push_back({Rat(x * x), Rat(x * y), Rat(y * y), Rat(x * w), Rat(y * w), Rat(w * w)});
  }
  std::size_t r = rank(m, 6);
  auto basis = nullspace(std::move(m), 6);
  std::array<Rat, 6> coef;
  for (std::size_t i = 0; i < 6; ++i) coef[i] = basis.front()[i];
  return ConicFit{Conic(coef), r == 5, static_cast<int>(r)};
}

bool on_conic(const Conic& c, const HPoint& p) { return c.evaluate(p) == 0; }

int conic_rank(const Conic& c) {
  auto d = c.doubled_matrix();
  RatMatrix m(3, std::vector<Rat>(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = d[i][j];
  return static_cast<int>(rank(std::move(m), 3));
}

// ---------------------------------------------------------------------------

namespace {

ProjMap::Matrix integer_matrix(const std::array<std::array<Rat, 3>, 3>& m) {
  Int l = 1;
  for (const auto& row : m)
    for (const auto& x : row) l = lcm(l, x.get_den());
  ProjMap::Matrix out;
  Int g = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      out[i][j] = m[i][j].get_num() * (l / m[i][j].get_den());
      g = gcd(g, out[i][j]);
    }
  if (g == 0) throw Error(ErrorCode::kSingularMap, "zero matrix");
  bool flip = false;
  bool seen = false;
  for (auto& row : out)
    for (auto& x : row) {
      x /= g;
      if (!seen && x != 0) {
        seen = true;
        flip = x < 0;
      }
    }
  if (flip)
    for (auto& row : out)
      for (auto& x : row) x = -x;
  return out;
}

Vec3 mul(const ProjMap::Matrix& m, const Vec3& v) {
  return {dot(m[0], v), dot(m[1], v), dot(m[2], v)};
}

ProjMap::Matrix transpose(const ProjMap::Matrix& m) {
  ProjMap::Matrix t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t[i][j] = m[j][i];
  return t;
}

ProjMap::Matrix mul(const ProjMap::Matrix& a, const ProjMap::Matrix& b) {
  ProjMap::Matrix r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
  return r;
}

}  // namespace

ProjMap::ProjMap(const std::array<std::array<Rat, 3>, 3>& m) : m_(integer_matrix(m)) {
  if (determinant() == 0) throw Error(ErrorCode::kSingularMap, "singular matrix");
}

ProjMap ProjMap::identity() {
  std::array<std::array<Rat, 3>, 3> m{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = (i == j) ? 1 : 0;
  return ProjMap(m);
}

ProjMap ProjMap::from_integer(Matrix m) {
  std::array<std::array<Rat, 3>, 3> r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = Rat(m[i][j]);
  return ProjMap(r);
}

Int ProjMap::determinant() const { return det3(m_[0], m_[1], m_[2]); }

ProjMap::Matrix ProjMap::adjugate() const {
  // adj(M) = transpose of the cofactor matrix; cofactor rows are cross products of columns.
  Matrix cols = transpose(m_);
  Matrix adj;
  adj[0] = cross(cols[1], cols[2]);
  adj[1] = cross(cols[2], cols[0]);
  adj[2] = cross(cols[0], cols[1]);
  return adj;
}

HPoint ProjMap::apply(const HPoint& p) const { return HPoint::from_canonical(mul(m_, p.coords())); }

HLine ProjMap::apply(const HLine& l) const {
  // l' ∝ M^{-T} l = adj(M)^T l
  return HLine::from_canonical(mul(transpose(adjugate()), l.coords()));
}

Conic ProjMap::apply(const Conic& c) const {
  Matrix adj = adjugate();
  Matrix q = c.doubled_matrix();
  return Conic::from_doubled_matrix(mul(mul(transpose(adj), q), adj));
}

ProjMap ProjMap::inverse() const { return from_integer(adjugate()); }

ProjMap ProjMap::compose(const ProjMap& inner) const { return from_integer(mul(m_, inner.m_)); }

std::string ProjMap::str() const {
  std::ostringstream os;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) os << (i + j ? " " : "") << m_[i][j].get_str();
  return os.str();
}

ProjMap proj_map_normalizing(std::span<const HPoint, 3> src, std::span<const HPoint, 3> targets,
                             const HLine& src_line, const HLine& target_line) {
  auto check = [](std::span<const HPoint, 3> pts, const HLine& line, const char* what) {
    if (collinear(pts[0], pts[1], pts[2]))
      throw Error(ErrorCode::kSingularMap, std::string(what) + " points are not in general position");
    for (const auto& p : pts)
      if (incident(line, p)) throw Error(ErrorCode::kSingularMap, std::string(what) + " point lies on its line");
  };
  check(src, src_line, "source");
  check(targets, target_line, "target");

  // Unknown m[r][c] is column 3r + c.
  RatMatrix rows;
  for (int i = 0; i < 3; ++i) {
    const Vec3& s = src[i].coords();
    const Vec3& t = targets[i].coords();
    // (M s) x t = 0
    for (int comp = 0; comp < 3; ++comp) {
      int r1 = (comp + 1) % 3, r2 = (comp + 2) % 3;
      std::vector<Rat> row(9, Rat(0));
      for (int c = 0; c < 3; ++c) {
        row[3 * r1 + c] += Rat(s[c] * t[r2]);
        row[3 * r2 + c] -= Rat(s[c] * t[r1]);
      }
      rows.push_back(std::move(row));
    }
  }
  // (M^T L') x L = 0
  const Vec3& lt = target_line.coords();
  const Vec3& ls = src_line.coords();
  for (int comp = 0; comp < 3; ++comp) {
    int c1 = (comp + 1) % 3, c2 = (comp + 2) % 3;
    std::vector<Rat> row(9, Rat(0));
    for (int r = 0; r < 3; ++r) {
      row[3 * r + c1] += Rat(lt[r] * ls[c2]);
      row[3 * r + c2] -= Rat(lt[r] * ls[c1]);
    }
    rows.push_back(std::move(row));
  }
  auto basis = nullspace(std::move(rows), 9);
  if (basis.size() != 1)
    throw Error(ErrorCode::kSingularMap,
                "normalizing constraints have a solution space of dimension " + std::to_string(basis.size()));
  std::array<std::array<Rat, 3>, 3> m;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m[r][c] = basis[0][3 * r + c];
  return ProjMap(m);
}

// ---------------------------------------------------------------------------

std::optional<SimilarityWitness> similar_rel_line(const Triangle& t1, const Triangle& t2, const HLine& line) {
  for (const Triangle* t : {&t1, &t2})
    if (collinear((*t)[0], (*t)[1], (*t)[2]))
      throw Error(ErrorCode::kDegenerateTriangle, "collinear triple " + (*t)[0].str() + " " + (*t)[1].str() +
                                                      " " + (*t)[2].str());
  SimilarityWitness w{{std::pair{line, line}, std::pair{line, line}, std::pair{line, line}}, {}, line};
  for (int k = 0; k < 3; ++k) {
    HLine s1 = line_through(t1[k], t1[(k + 1) % 3]);
    HLine s2 = line_through(t2[k], t2[(k + 1) % 3]);
    HPoint m;
    if (s1 == s2) {
      // Coinciding sides meet L where that common line does.
      m = (s1 == line) ? t1[k] : meet(s1, line);
    } else {
      m = meet(s1, s2);
      if (!incident(line, m)) return std::nullopt;
    }
    w.sides[k] = {s1, s2};
    w.meets[k] = m;
  }
  return w;
}

std::optional<SimilarityMatch> similar_any_correspondence(const Triangle& t1, const Triangle& t2,
                                                          const HLine& line) {
  std::array<int, 3> perm{0, 1, 2};
  do {
    Triangle p{t2[perm[0]], t2[perm[1]], t2[perm[2]]};
    if (auto w = similar_rel_line(t1, p, line)) return SimilarityMatch{perm, *w};
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

// ---------------------------------------------------------------------------

bool same_point(const HPoint& p, const HPoint& q) { return p == q; }

std::vector<HPoint> convex_hull(std::span<const HPoint> points) {
  std::vector<HPoint> pts;
  for (const auto& p : points) {
    if (!p.is_finite()) throw Error(ErrorCode::kInvalidArgument, "convex hull of a point at infinity");
    pts.push_back(p);
  }
  std::sort(pts.begin(), pts.end(), [](const HPoint& a, const HPoint& b) {
    Rat ax = a.ax(), bx = b.ax();
    if (ax != bx) return ax < bx;
    return a.ay() < b.ay();
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<HPoint> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && orient(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
    while (k >= t && orient(hull[k - 2], hull[k - 1], pts[i - 1]) <= 0) --k;
    hull[k++] = pts[i - 1];
  }
  hull.resize(k - 1);
  return hull;
}

bool in_convex_position(std::span<const HPoint> points) {
  std::vector<HPoint> distinct(points.begin(), points.end());
  std::sort(distinct.begin(), distinct.end());
  if (std::adjacent_find(distinct.begin(), distinct.end()) != distinct.end()) return false;
  if (points.size() <= 2) return true;
  return convex_hull(points).size() == points.size();
}

bool line_meets_hull(const HLine& line, std::span<const HPoint> hull) {
  int seen = 0;
  for (const auto& p : hull) {
    int s = side(line, p);
    if (s == 0) return true;
    if (seen == 0) seen = s;
    else if (s != seen) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------

std::size_t count_directions_approx(std::span<const ApproxPoint> points,
                                    std::span<const std::pair<std::size_t, std::size_t>> pairs, double tol) {
  std::vector<double> angles;
  angles.reserve(pairs.size());
  for (auto [i, j] : pairs) {
    double dx = points[j].x - points[i].x;
    double dy = points[j].y - points[i].y;
    if (std::hypot(dx, dy) <= tol) continue;
    double a = std::atan2(dy, dx);
    if (a < 0) a += std::numbers::pi;
    if (a >= std::numbers::pi) a -= std::numbers::pi;
    angles.push_back(a);
  }
  if (angles.empty()) return 0;
  std::sort(angles.begin(), angles.end());
  std::size_t count = 1;
  for (std::size_t i = 1; i < angles.size(); ++i)
    if (angles[i] - angles[i - 1] > tol) ++count;
  // Angles near 0 and near pi are the same direction.
  if (count > 1 && angles.front() + std::numbers::pi - angles.back() <= tol) --count;
  return count;
}

}  // namespace ctri
