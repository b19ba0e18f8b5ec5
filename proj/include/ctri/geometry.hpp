#pragma once

#include "ctri/rational.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ctri {

using Vec3 = std::array<Int, 3>;

// Scales an integer or rational triple to coprime integers whose first
// nonzero entry is positive. Returns false for the zero vector.
bool canonicalize(Vec3& v);
Vec3 canonical_from(const Rat& x, const Rat& y, const Rat& w);

Vec3 cross(const Vec3& u, const Vec3& v);
Int dot(const Vec3& u, const Vec3& v);
Int det3(const Vec3& r0, const Vec3& r1, const Vec3& r2);

/// Point of the real projective plane in canonical homogeneous coordinates
/// [x : y : w]. Points with w == 0 are directions (points at infinity).
class HPoint {
 public:
  HPoint() : v_{Int(0), Int(0), Int(1)} {}
  HPoint(const Rat& x, const Rat& y);
  static HPoint homogeneous(const Rat& x, const Rat& y, const Rat& w);
  static HPoint from_canonical(Vec3 v);

  const Int& x() const { return v_[0]; }
  const Int& y() const { return v_[1]; }
  const Int& w() const { return v_[2]; }
  const Vec3& coords() const { return v_; }

  bool is_finite() const { return v_[2] != 0; }
  // Affine coordinates; only meaningful for finite points.
  Rat ax() const;
  Rat ay() const;

  std::string str() const;

  friend bool operator==(const HPoint&, const HPoint&) = default;
  friend auto operator<=>(const HPoint& a, const HPoint& b) { return a.v_ <=> b.v_; }

 private:
  Vec3 v_;
};

/// Line aX + bY + cW = 0 in canonical form.
class HLine {
 public:
  HLine(const Rat& a, const Rat& b, const Rat& c);
  static HLine from_canonical(Vec3 v);

  const Int& a() const { return v_[0]; }
  const Int& b() const { return v_[1]; }
  const Int& c() const { return v_[2]; }
  const Vec3& coords() const { return v_; }

  static HLine x_axis() { return HLine(0, 1, 0); }
  static HLine at_infinity() { return HLine(0, 0, 1); }

  bool is_at_infinity() const { return v_[0] == 0 && v_[1] == 0; }
  std::string str() const;

  friend bool operator==(const HLine&, const HLine&) = default;
  friend auto operator<=>(const HLine& a, const HLine& b) { return a.v_ <=> b.v_; }

 private:
  HLine() = default;
  Vec3 v_;
};

struct Vec3Hash {
  std::size_t operator()(const Vec3& v) const noexcept;
};
struct HPointHash {
  std::size_t operator()(const HPoint& p) const noexcept { return Vec3Hash{}(p.coords()); }
};
struct HLineHash {
  std::size_t operator()(const HLine& l) const noexcept { return Vec3Hash{}(l.coords()); }
};

bool incident(const HLine& line, const HPoint& p);
// Sign of the line form at p, with finite points taken with w > 0.
int side(const HLine& line, const HPoint& p);

// Orientation of (p, q, r): determinant sign with finite points normalized to w > 0.
int orient(const HPoint& p, const HPoint& q, const HPoint& r);
bool collinear(const HPoint& p, const HPoint& q, const HPoint& r);

HLine line_through(const HPoint& p, const HPoint& q);
HPoint meet(const HLine& l1, const HLine& l2);
bool concurrent(const HLine& l1, const HLine& l2, const HLine& l3);

// Point at infinity of the line pq (both finite, distinct).
HPoint direction_of(const HPoint& p, const HPoint& q);

// ---------------------------------------------------------------------------
// Conics

/// q_xx X^2 + q_xy XY + q_yy Y^2 + q_xw XW + q_yw YW + q_ww W^2, canonical.
class Conic {
 public:
  enum Coef { kXX = 0, kXY, kYY, kXW, kYW, kWW };

  explicit Conic(const std::array<Rat, 6>& coefficients);
  static Conic from_canonical(std::array<Int, 6> c);

  const std::array<Int, 6>& coefficients() const { return c_; }
  const Int& operator[](std::size_t i) const { return c_[i]; }

  Int evaluate(const HPoint& p) const;
  // Symmetric matrix scaled by 2 so that all entries are integers.
  std::array<Vec3, 3> doubled_matrix() const;
  static Conic from_doubled_matrix(const std::array<Vec3, 3>& m);

  std::string str() const;

  friend bool operator==(const Conic&, const Conic&) = default;

 private:
  Conic() = default;
  std::array<Int, 6> c_;
};

struct ConicFit {
  Conic conic;
  bool unique = true;  // false when the five incidences have rank < 5
  int incidence_rank = 5;
};

ConicFit conic_through_five(std::span<const HPoint> points);
bool on_conic(const Conic& c, const HPoint& p);
int conic_rank(const Conic& c);

// ---------------------------------------------------------------------------
// Projective maps

class ProjMap {
 public:
  using Matrix = std::array<Vec3, 3>;

  explicit ProjMap(const std::array<std::array<Rat, 3>, 3>& m);
  static ProjMap identity();
  static ProjMap from_integer(Matrix m);

  const Matrix& matrix() const { return m_; }
  Int determinant() const;

  HPoint apply(const HPoint& p) const;
  HLine apply(const HLine& l) const;
  Conic apply(const Conic& c) const;

  ProjMap inverse() const;
  ProjMap compose(const ProjMap& inner) const;  // this ∘ inner

  std::string str() const;

  friend bool operator==(const ProjMap&, const ProjMap&) = default;

 private:
  ProjMap() = default;
  Matrix adjugate() const;
  Matrix m_;
};

// The unique map sending src[i] -> targets[i] and src_line -> target_line.
ProjMap proj_map_normalizing(std::span<const HPoint, 3> src, std::span<const HPoint, 3> targets,
                             const HLine& src_line, const HLine& target_line);

// ---------------------------------------------------------------------------
// Similar triples relative to a line

using Triangle = std::array<HPoint, 3>;

struct SimilarityWitness {
  // Side k joins vertices k and (k + 1) % 3.
  std::array<std::pair<HLine, HLine>, 3> sides;
  std::array<HPoint, 3> meets;
  HLine carrier;
};

std::optional<SimilarityWitness> similar_rel_line(const Triangle& t1, const Triangle& t2, const HLine& line);

struct SimilarityMatch {
  std::array<int, 3> permutation;  // t1[i] corresponds to t2[permutation[i]]
  SimilarityWitness witness;
};
// Tries all six vertex correspondences.
std::optional<SimilarityMatch> similar_any_correspondence(const Triangle& t1, const Triangle& t2,
                                                          const HLine& line);

// ---------------------------------------------------------------------------
// Finite-point helpers

bool same_point(const HPoint& p, const HPoint& q);
// Counter-clockwise hull vertices with collinear boundary points removed.
std::vector<HPoint> convex_hull(std::span<const HPoint> points);
// True iff every point is a vertex of the convex hull of the set.
bool in_convex_position(std::span<const HPoint> points);
// True iff the line meets the convex hull of the points (touching counts).
bool line_meets_hull(const HLine& line, std::span<const HPoint> hull);

// ---------------------------------------------------------------------------
// Approximate mode, for inputs without rational coordinates.

struct ApproxPoint {
  double x = 0.0;
  double y = 0.0;
};

inline constexpr double kDefaultApproxTolerance = 1e-9;

// Number of distinct directions of the given index pairs; directions closer
// than tol (as angles modulo pi) are merged.
std::size_t count_directions_approx(std::span<const ApproxPoint> points,
                                    std::span<const std::pair<std::size_t, std::size_t>> pairs,
                                    double tol = kDefaultApproxTolerance);

}  // namespace ctri
