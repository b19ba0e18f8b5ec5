#include "ctri/generators.hpp"

#include "ctri/error.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace ctri {

namespace {

// k distinct values from [0, range), in draw order.
std::vector<std::int64_t> sample_distinct(Rng& rng, std::size_t k, std::int64_t range) {
  std::vector<std::int64_t> pool(static_cast<std::size_t>(range));
  for (std::int64_t i = 0; i < range; ++i) pool[i] = i;
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(pool.size() - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  return pool;
}

Rat small_rat(Rng& rng, std::int64_t num, std::int64_t den) {
  return Rat(rng.between(-num, num), rng.between(1, den));
}

void check_edges(const LabeledSets& sets, const std::vector<Edge>& expected, bool exact, const char* what) {
  const TripleSystem sys = build_triples(sets);
  for (const Edge& e : expected)
    if (!sys.graph().find(e)) throw Error(ErrorCode::kConstructionFailure, std::string(what) + ": planted triple missing");
  if (exact && sys.num_edges() != expected.size())
    throw Error(ErrorCode::kConstructionFailure, std::string(what) + ": unexpected extra collinear triples");
}

}  // namespace

SetsPtr gen_grid_with_directions(std::size_t m) {
  if (m < 2) throw Error(ErrorCode::kInvalidArgument, "grid size must be at least 2");
  auto sets = std::make_shared<LabeledSets>();
  sets->c_at_infinity = true;
  const std::size_t left = (m + 1) / 2;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      HPoint p(Rat(static_cast<long>(i)), Rat(static_cast<long>(j)));
      (i < left ? sets->a : sets->b).push_back(p);
    }
  std::unordered_set<HPoint, HPointHash> seen;
  for (const auto& a : sets->a)
    for (const auto& b : sets->b) {
      HPoint d = direction_of(a, b);
      if (seen.insert(d).second) sets->c.push_back(d);
    }
  sets->validate();
  return sets;
}

KSystemInstance gen_ksystem(std::size_t k, const Rat& d, std::optional<std::vector<Rat>> s,
                            std::optional<std::vector<Rat>> t) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be at least 1");
  if (d == 0) throw Error(ErrorCode::kInvalidArgument, "spacing must be nonzero");
  auto defaults = [&] {
    std::vector<Rat> v(k);
    for (std::size_t i = 0; i < k; ++i) v[i] = Rat(static_cast<long>(3 * k * i)) * d;
    return v;
  };
  const std::vector<Rat> so = s ? *s : defaults();
  const std::vector<Rat> to = t ? *t : defaults();
  if (so.size() != k || to.size() != k) throw Error(ErrorCode::kInvalidArgument, "need k offsets per side");

  auto check_disjoint = [&](const std::vector<Rat>& off, const char* side) {
    std::vector<std::pair<Rat, Rat>> iv;
    for (const Rat& o : off) {
      Rat lo = o + d;
      Rat hi = o + Rat(static_cast<long>(k)) * d;
      if (lo > hi) std::swap(lo, hi);
      iv.emplace_back(lo, hi);
    }
    std::sort(iv.begin(), iv.end());
    for (std::size_t i = 1; i < iv.size(); ++i)
      if (iv[i].first <= iv[i - 1].second)
        throw Error(ErrorCode::kOverlappingBlocks, std::string(side) + " blocks overlap");
  };
  check_disjoint(so, "A");
  check_disjoint(to, "C");

  KSystemInstance out;
  auto sets = std::make_shared<LabeledSets>();
  KSystem& ks = out.expected;
  ks.k = k;
  ks.a_blocks.assign(k, {});
  ks.c_blocks.assign(k, {});
  ks.centers.assign(k, std::vector<Index>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t l = 1; l <= k; ++l) {
      ks.a_blocks[i].push_back(static_cast<Index>(sets->a.size()));
      sets->a.emplace_back(so[i] + Rat(static_cast<long>(l)) * d, Rat(2));
    }
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t m = 1; m <= k; ++m) {
      ks.c_blocks[j].push_back(static_cast<Index>(sets->c.size()));
      sets->c.emplace_back(to[j] + Rat(static_cast<long>(m)) * d, Rat(0));
    }
  std::map<Rat, Index> centre_of;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const Rat p = (so[i] + to[j] + Rat(static_cast<long>(k + 1)) * d) / 2;
      auto [it, fresh] = centre_of.emplace(p, static_cast<Index>(sets->b.size()));
      if (fresh) sets->b.emplace_back(p, Rat(1));
      ks.centers[i][j] = it->second;
    }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l)
        ks.edges.push_back(Edge{ks.a_blocks[i][l], ks.centers[i][j], ks.c_blocks[j][k - 1 - l]});
  std::sort(ks.edges.begin(), ks.edges.end());
  sets->validate();

  const TripleSystem sys = build_triples(*sets);
  const std::string bad = k_system_violation(ks, sys.graph());
  if (!bad.empty()) throw Error(ErrorCode::kConstructionFailure, "k-system: " + bad);
  out.sets = sets;
  return out;
}

// ---------------------------------------------------------------------------
// Conic instances

std::optional<HPoint> find_rational_point(const Conic& q) {
  const Rat A(q[Conic::kXX]), B(q[Conic::kXY]), C(q[Conic::kYY]), D(q[Conic::kXW]), E(q[Conic::kYW]),
      F(q[Conic::kWW]);
  // Solve a t^2 + b t + c = 0 for rational t.
  auto roots = [](const Rat& a, const Rat& b, const Rat& c) -> std::optional<Rat> {
    if (a == 0) {
      if (b == 0) return std::nullopt;
      return Rat(-c / b);
    }
    Rat disc = b * b - 4 * a * c;
    Rat r;
    if (sign(disc) < 0 || !rational_sqrt(disc, r)) return std::nullopt;
    return Rat((-b + r) / (2 * a));
  };
  for (long h = 1; h <= 24; ++h)
    for (long den = 1; den <= h; ++den)
      for (long num = -h; num <= h; ++num) {
        if (std::max(std::abs(num), den) != h) continue;
        const Rat v(num, den);
        if (auto x = roots(A, B * v + D, C * v * v + E * v + F)) return HPoint(*x, v);
        if (auto y = roots(C, B * v + E, A * v * v + D * v + F)) return HPoint(v, *y);
      }
  return std::nullopt;
}

PointTriple random_triple(Rng& rng) {
  for (;;) {
    PointTriple t;
    for (auto& p : t) {
      Rat b;
      do b = small_rat(rng, 9, 3);
      while (b == 0);
      p = HPoint(small_rat(rng, 9, 3), b);
    }
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2] || collinear(t[0], t[1], t[2])) continue;
    if (degenerate_witness(t, NormalMode::kT1) || degenerate_witness(t, NormalMode::kT2)) continue;
    bool on_base = false;
    for (const auto& p : t)
      for (const auto& q : base_triple(NormalMode::kT1)) on_base = on_base || p == q;
    if (on_base) continue;
    if (conic_rank(factor_out_axis(curve_determinant(t, NormalMode::kT1))) < 3 ||
        conic_rank(factor_out_axis(curve_determinant(t, NormalMode::kT2))) < 3)
      continue;
    return t;
  }
}

namespace {

// Per A point, the lines through it and the B / C points they carry.
class LineIndex {
 public:
  explicit LineIndex(const std::vector<HPoint>& a) : a_(a), lines_(a.size()) {}

  void add(Part part, Index idx, const HPoint& p) {
    for (std::size_t i = 0; i < a_.size(); ++i) {
      auto& slot = lines_[i][line_through(a_[i], p)];
      (part == Part::kB ? slot.first : slot.second).push_back(idx);
    }
  }

  // Edges (a, b, c) through a point p of the given part, against the current contents.
  std::vector<Edge> edges_through(Part part, Index idx, const HPoint& p) const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < a_.size(); ++i) {
      auto it = lines_[i].find(line_through(a_[i], p));
      if (it == lines_[i].end()) continue;
      const auto& others = part == Part::kB ? it->second.second : it->second.first;
      for (Index o : others)
        out.push_back(part == Part::kB ? Edge{static_cast<Index>(i), idx, o} : Edge{static_cast<Index>(i), o, idx});
    }
    return out;
  }

 private:
  std::vector<HPoint> a_;
  std::vector<std::unordered_map<HLine, std::pair<std::vector<Index>, std::vector<Index>>, HLineHash>> lines_;
};

}  // namespace

ConicInstance gen_conic_instance(const PointTriple& a_triple, std::size_t n_b, std::uint64_t seed) {
  if (n_b < 1) throw Error(ErrorCode::kInvalidArgument, "need at least one B point");
  if (auto w = degenerate_witness(a_triple, NormalMode::kT1))
    throw Error(ErrorCode::kDegenerateTriple, "triple is similar to the base triple: " + w->str());
  const Conic conic = factor_out_axis(curve_determinant(a_triple, NormalMode::kT1));
  if (const int rank = conic_rank(conic); rank < 3)
    throw Error(ErrorCode::kDegenerateTriple,
                "conic " + conic.str() + " is reducible (rank " + std::to_string(rank) + "); try another triple");
  const auto start = find_rational_point(conic);
  if (!start)
    throw Error(ErrorCode::kNoRationalPoint, "no small-height rational point on " + conic.str() +
                                                 "; try another triple");

  auto sets = std::make_shared<LabeledSets>();
  for (const auto& p : base_triple(NormalMode::kT1)) sets->a.push_back(p);
  for (const auto& p : a_triple) sets->a.push_back(p);
  std::unordered_set<HPoint, HPointHash> used(sets->a.begin(), sets->a.end());
  if (used.size() != 6) throw Error(ErrorCode::kInvalidArgument, "triple repeats a base point");

  const Rat A(conic[Conic::kXX]), B(conic[Conic::kXY]), C(conic[Conic::kYY]), D(conic[Conic::kXW]),
      E(conic[Conic::kYW]);
  const Rat x0 = start->ax();
  const Rat y0 = start->ay();
  const Rat gx = 2 * A * x0 + B * y0 + D;
  const Rat gy = B * x0 + 2 * C * y0 + E;

  ConicInstance out;
  out.a_triple = a_triple;
  LineIndex index(sets->a);
  std::vector<std::array<Index, 3>> sample_feet;
  std::vector<HPoint> seconds;
  Rng rng(seed);
  const std::size_t max_tries = 200 * n_b + 2000;
  // Enough primitive slopes for n_b distinct samples, keeping heights small.
  const auto range = static_cast<std::int64_t>(std::max(12.0, 2 * std::sqrt(double(n_b)) + 4));
  std::size_t tries = 0;
  while (out.samples.size() < n_b) {
    if (++tries > max_tries) throw Error(ErrorCode::kConstructionFailure, "could not place enough conic points");
    // Second intersection of the conic with the line through the start point of slope dy/dx.
    const Rat dx(rng.between(-range, range));
    const Rat dy(rng.between(-range, range));
    if (dx == 0 && dy == 0) continue;
    const Rat quad = A * dx * dx + B * dx * dy + C * dy * dy;
    if (quad == 0) continue;
    const Rat s = -(gx * dx + gy * dy) / quad;
    if (s == 0) continue;
    const Rat x = x0 + s * dx;
    const Rat y = y0 + s * dy;
    if (y == 0 || y == 1 || y == 2) continue;
    const HPoint p(x, y);
    if (used.count(p)) continue;
    const Feet f = feet_on_axis(x, y, NormalMode::kT1);
    const std::array<HPoint, 3> feet{HPoint(f.u, 0), HPoint(f.t, 0), HPoint(f.s, 0)};
    if (feet[0] == feet[1] || feet[1] == feet[2] || feet[0] == feet[2]) continue;
    if (used.count(feet[0]) || used.count(feet[1]) || used.count(feet[2])) continue;
    std::optional<HPoint> second;
    try {
      const HLine l1 = line_through(a_triple[0], feet[0]);
      const HLine l2 = line_through(a_triple[1], feet[1]);
      const HLine l3 = line_through(a_triple[2], feet[2]);
      if (!concurrent(l1, l2, l3)) throw Error(ErrorCode::kConstructionFailure, "conic point without concurrency");
      second = meet(l1, l2);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kConstructionFailure) throw;
      continue;
    }
    if (!second->is_finite() || second->y() == 0 || used.count(*second) || *second == p) continue;

    // Tentatively add and require exactly the six planted triples through the new points.
    const Index pb = static_cast<Index>(sets->b.size());
    const Index sb = pb + 1;
    const Index c0 = static_cast<Index>(sets->c.size());
    LineIndex trial = index;
    trial.add(Part::kB, pb, p);
    trial.add(Part::kB, sb, *second);
    for (Index r = 0; r < 3; ++r) trial.add(Part::kC, c0 + r, feet[r]);
    std::set<Edge> found;
    for (const auto& e : trial.edges_through(Part::kB, pb, p)) found.insert(e);
    for (const auto& e : trial.edges_through(Part::kB, sb, *second)) found.insert(e);
    for (Index r = 0; r < 3; ++r)
      for (const auto& e : trial.edges_through(Part::kC, c0 + r, feet[r])) found.insert(e);
    std::set<Edge> expected;
    for (Index r = 0; r < 3; ++r) {
      expected.insert(Edge{r, pb, c0 + r});
      expected.insert(Edge{r + 3, sb, c0 + r});
    }
    if (found != expected) continue;

    index = std::move(trial);
    sets->b.push_back(p);
    sets->b.push_back(*second);
    for (const auto& q : feet) sets->c.push_back(q);
    used.insert(p);
    used.insert(*second);
    for (const auto& q : feet) used.insert(q);
    out.samples.push_back(pb);
    out.second_centres.push_back(sb);
  }
  sets->validate();

  std::vector<Edge> planted;
  for (std::size_t i = 0; i < out.samples.size(); ++i)
    for (Index r = 0; r < 3; ++r) {
      planted.push_back(Edge{r, out.samples[i], static_cast<Index>(3 * i + r)});
      planted.push_back(Edge{r + 3, out.second_centres[i], static_cast<Index>(3 * i + r)});
    }
  check_edges(*sets, planted, true, "conic instance");
  for (Index b : out.samples)
    if (!on_conic(conic, sets->b[b])) throw Error(ErrorCode::kConstructionFailure, "sample off the planted conic");
  out.sets = sets;
  out.conic = conic;
  return out;
}

SetsPtr gen_degenerate_family(const std::vector<std::pair<Rat, Rat>>& positions, const PointTriple& second) {
  if (positions.empty()) throw Error(ErrorCode::kInvalidArgument, "need at least one position");
  auto sets = std::make_shared<LabeledSets>();
  for (const auto& p : base_triple(NormalMode::kT1)) sets->a.push_back(p);
  for (const auto& p : second) sets->a.push_back(p);
  std::unordered_map<HPoint, Index, HPointHash> c_index;
  std::vector<Edge> planted;
  for (const auto& [x, y] : positions) {
    if (y == 0) throw Error(ErrorCode::kForbiddenOrdinate, "position on the x-axis");
    const Feet f = feet_on_axis(x, y, NormalMode::kT1);
    const std::array<HPoint, 3> feet{HPoint(f.u, 0), HPoint(f.t, 0), HPoint(f.s, 0)};
    if (feet[0] == feet[1] || feet[1] == feet[2] || feet[0] == feet[2])
      throw Error(ErrorCode::kInvalidArgument, "position (" + to_string(x) + "," + to_string(y) + ") has coinciding feet");
    const HLine l1 = line_through(second[0], feet[0]);
    const HLine l2 = line_through(second[1], feet[1]);
    const HLine l3 = line_through(second[2], feet[2]);
    if (!concurrent(l1, l2, l3))
      throw Error(ErrorCode::kConstructionFailure, "second triple lines are not concurrent");
    const HPoint q = meet(l1, l2);
    if (!q.is_finite()) throw Error(ErrorCode::kConstructionFailure, "concurrency point at infinity");
    const Index pb = static_cast<Index>(sets->b.size());
    sets->b.push_back(HPoint(x, y));
    sets->b.push_back(q);
    for (Index r = 0; r < 3; ++r) {
      auto [it, fresh] = c_index.emplace(feet[r], static_cast<Index>(sets->c.size()));
      if (fresh) sets->c.push_back(feet[r]);
      planted.push_back(Edge{r, pb, it->second});
      planted.push_back(Edge{r + 3, pb + 1, it->second});
    }
  }
  sets->validate();
  check_edges(*sets, planted, false, "degenerate family");
  return sets;
}

// ---------------------------------------------------------------------------

PascalInstance gen_pascal_ttt(std::uint64_t seed) {
  Rng rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::array<std::array<Rat, 3>, 3> m;
    for (auto& row : m)
      for (auto& v : row) v = Rat(rng.between(-3, 3));
    std::array<Rat, 6> ts;
    std::set<Rat> seen;
    bool ok = true;
    for (auto& t : ts) {
      t = small_rat(rng, 7, 4);
      ok = ok && seen.insert(t).second;
    }
    if (!ok) continue;
    std::optional<ProjMap> map;
    try {
      map.emplace(m);
    } catch (const Error&) {
      continue;
    }
    std::array<HPoint, 6> hex;
    for (std::size_t i = 0; i < 6; ++i) {
      const Rat& t = ts[i];
      hex[i] = map->apply(HPoint::homogeneous(1 - t * t, 2 * t, 1 + t * t));
      ok = ok && hex[i].is_finite();
    }
    if (!ok) continue;
    try {
      const auto& P = hex;
      const HPoint X = meet(line_through(P[0], P[1]), line_through(P[3], P[4]));
      const HPoint Y = meet(line_through(P[1], P[2]), line_through(P[4], P[5]));
      const HPoint Z = meet(line_through(P[2], P[3]), line_through(P[5], P[0]));
      if (!X.is_finite() || !Y.is_finite() || !Z.is_finite()) continue;
      if (!collinear(X, Y, Z)) throw Error(ErrorCode::kConstructionFailure, "Pascal line failed");
      auto sets = std::make_shared<LabeledSets>();
      sets->a = {P[1], P[3], P[5]};
      sets->b = {P[0], P[2], P[4]};
      sets->c = {X, Y, Z};
      std::set<HPoint> all;
      for (const auto* s : {&sets->a, &sets->b, &sets->c}) all.insert(s->begin(), s->end());
      if (all.size() != 9) continue;
      PascalInstance out;
      out.expected.rows = {Edge{0, 0, 0}, Edge{1, 1, 2}, Edge{2, 2, 1}};
      out.expected.cols = {Edge{0, 1, 1}, Edge{1, 2, 0}, Edge{2, 0, 2}};
      std::vector<Edge> planted(out.expected.rows.begin(), out.expected.rows.end());
      planted.insert(planted.end(), out.expected.cols.begin(), out.expected.cols.end());
      std::sort(planted.begin(), planted.end());
      const TripleSystem sys = build_triples(*sets);
      if (std::vector<Edge>(sys.edges().begin(), sys.edges().end()) != planted) continue;
      if (!tictactoe_violation(out.expected, sys.graph()).empty())
        throw Error(ErrorCode::kConstructionFailure, "planted tic-tac-toe rejected");
      const ConicFit fit = conic_through_five(std::span<const HPoint>(hex.data(), 5));
      if (!fit.unique || !on_conic(fit.conic, hex[5])) continue;
      out.sets = sets;
      out.conic = fit.conic;
      out.hexagon = hex;
      return out;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kConstructionFailure) throw;
    }
  }
  throw Error(ErrorCode::kConstructionFailure, "no Pascal instance for this seed; reseed");
}

// ---------------------------------------------------------------------------

namespace {

// Projective map whose exceptional line stays away from |x| <= xmax, 0 <= y <= 2.
ProjMap gentle_projective(Rng& rng, std::int64_t xmax) {
  for (;;) {
    std::array<std::array<Rat, 3>, 3> m;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 3; ++j) m[i][j] = Rat(rng.between(-4, 4));
    m[2][0] = Rat(rng.between(-2, 2), 16 * std::max<std::int64_t>(xmax, 1));
    m[2][1] = Rat(rng.between(-2, 2), 16);
    m[2][2] = 1;
    try {
      return ProjMap(m);
    } catch (const Error&) {
    }
  }
}

}  // namespace

SetsPtr gen_mutually_avoiding(std::size_t n, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "n must be at least 1");
  Rng rng(seed);
  const std::int64_t range = static_cast<std::int64_t>(3 * n);
  for (int attempt = 0; attempt < 100; ++attempt) {
    auto xa = sample_distinct(rng, n, range);
    auto xc = sample_distinct(rng, n, range);
    std::map<std::int64_t, std::size_t> mids;  // doubled midpoint -> multiplicity
    for (auto a : xa)
      for (auto c : xc) ++mids[a + c];
    std::vector<std::pair<std::size_t, std::int64_t>> ranked;
    for (auto [v, cnt] : mids) ranked.emplace_back(cnt, v);
    std::stable_sort(ranked.begin(), ranked.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
    const ProjMap g = gentle_projective(rng, range);
    auto sets = std::make_shared<LabeledSets>();
    for (auto a : xa) sets->a.push_back(g.apply(HPoint(Rat(a), 2)));
    for (std::size_t i = 0; i < n; ++i) sets->b.push_back(g.apply(HPoint(Rat(ranked[i].second, 2), 1)));
    for (auto c : xc) sets->c.push_back(g.apply(HPoint(Rat(c), 0)));
    bool finite = true;
    for (const auto* s : {&sets->a, &sets->b, &sets->c})
      for (const auto& p : *s) finite = finite && p.is_finite();
    if (!finite) continue;
    sets->validate();
    if (mutually_avoiding(*sets)) return sets;
  }
  throw Error(ErrorCode::kConstructionFailure, "could not certify a mutually avoiding instance");
}

SetsPtr gen_parallel_dense(std::size_t n, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "n must be at least 1");
  Rng rng(seed);
  const auto range = static_cast<std::int64_t>(2 * n);
  auto sets = std::make_shared<LabeledSets>();
  auto xa = sample_distinct(rng, n, range);
  auto xb = sample_distinct(rng, n, 2 * range);
  auto xc = sample_distinct(rng, n, range);
  std::sort(xa.begin(), xa.end());
  std::sort(xb.begin(), xb.end());
  std::sort(xc.begin(), xc.end());
  for (auto a : xa) sets->a.emplace_back(Rat(a), 2);
  for (auto b : xb) sets->b.emplace_back(Rat(b, 2), 1);
  for (auto c : xc) sets->c.emplace_back(Rat(c), 0);
  sets->validate();
  return sets;
}

std::vector<ApproxPoint> gen_ngon(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::kInvalidArgument, "n-gon needs n >= 3");
  std::vector<ApproxPoint> out;
  for (std::size_t k = 0; k < n; ++k) {
    const double a = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    out.push_back(ApproxPoint{std::cos(a), std::sin(a)});
  }
  return out;
}

std::vector<HPoint> gen_circle_points(std::size_t n) {
  std::vector<HPoint> out;
  Rat re = 1;
  Rat im = 0;
  const Rat zr(3, 5);
  const Rat zi(4, 5);
  for (std::size_t k = 0; k < n; ++k) {
    out.emplace_back(re, im);
    const Rat nr = re * zr - im * zi;
    im = re * zi + im * zr;
    re = nr;
  }
  return out;
}

Hypergraph3 gen_random_linear(std::size_t max_class, std::uint64_t seed) {
  Rng rng(seed);
  const auto hi = static_cast<std::int64_t>(std::max<std::size_t>(max_class, 1));
  const auto na = static_cast<std::size_t>(rng.between(1, hi));
  const auto nb = static_cast<std::size_t>(rng.between(1, hi));
  const auto nc = static_cast<std::size_t>(rng.between(1, hi));
  const std::size_t attempts = static_cast<std::size_t>(rng.between(0, static_cast<std::int64_t>(na * nb * nc)));
  std::set<std::pair<Index, Index>> ab, bc, ac;
  std::vector<Edge> edges;
  for (std::size_t t = 0; t < attempts; ++t) {
    const Edge e{static_cast<Index>(rng.below(na)), static_cast<Index>(rng.below(nb)),
                 static_cast<Index>(rng.below(nc))};
    if (ab.count({e.a, e.b}) || bc.count({e.b, e.c}) || ac.count({e.a, e.c})) continue;
    ab.insert({e.a, e.b});
    bc.insert({e.b, e.c});
    ac.insert({e.a, e.c});
    edges.push_back(e);
  }
  return Hypergraph3(na, nb, nc, std::move(edges));
}

}  // namespace ctri
