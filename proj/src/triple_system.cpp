#include "ctri/triple_system.hpp"

#include "ctri/error.hpp"
#include "ctri/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <set>
#include <unordered_map>

namespace ctri {

const std::vector<HPoint>& LabeledSets::set(Part p) const {
  switch (p) {
    case Part::kA: return a;
    case Part::kB: return b;
    case Part::kC: return c;
  }
  return a;
}

std::vector<HPoint>& LabeledSets::set(Part p) {
  return const_cast<std::vector<HPoint>&>(static_cast<const LabeledSets&>(*this).set(p));
}

namespace {

const char* part_name(Part p) {
  switch (p) {
    case Part::kA: return "A";
    case Part::kB: return "B";
    case Part::kC: return "C";
  }
  return "?";
}

constexpr std::array<Part, 3> kParts{Part::kA, Part::kB, Part::kC};

}  // namespace

void LabeledSets::validate() const {
  for (Part p : kParts) {
    const auto& pts = set(p);
    std::vector<HPoint> sorted(pts.begin(), pts.end());
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end())
      throw Error(ErrorCode::kInvalidArgument, std::string("repeated point ") + dup->str() + " in set " + part_name(p));
    bool want_infinite = (p == Part::kC) && c_at_infinity;
    for (const auto& q : pts)
      if (q.is_finite() == want_infinite)
        throw Error(ErrorCode::kInvalidArgument, std::string("point ") + q.str() + " in set " + part_name(p) +
                                                     (want_infinite ? " is not at infinity" : " is at infinity"));
  }
}

TripleSystem::TripleSystem(std::shared_ptr<const LabeledSets> sets, Hypergraph3 graph)
    : sets_(std::move(sets)), graph_(std::move(graph)) {
  if (graph_.size_a() != sets_->a.size() || graph_.size_b() != sets_->b.size() || graph_.size_c() != sets_->c.size())
    throw Error(ErrorCode::kInvalidArgument, "hypergraph does not match the point sets");
}

TripleSystem TripleSystem::with_edges(std::vector<Edge> edges) const {
  return TripleSystem(sets_, Hypergraph3(sets_->a.size(), sets_->b.size(), sets_->c.size(), std::move(edges)));
}

// ---------------------------------------------------------------------------

bool is_collinear_edge(const LabeledSets& sets, const Edge& e) {
  if (e.a >= sets.a.size() || e.b >= sets.b.size() || e.c >= sets.c.size()) return false;
  const HPoint& a = sets.a[e.a];
  const HPoint& b = sets.b[e.b];
  const HPoint& c = sets.c[e.c];
  if (a == b || a == c || b == c) return false;
  return collinear(a, b, c);
}

TripleSystem build_triples(std::shared_ptr<const LabeledSets> sets, unsigned threads) {
  sets->validate();
  const auto& A = sets->a;
  const auto& B = sets->b;
  const auto& C = sets->c;
  std::vector<std::vector<Edge>> per_a(A.size());
  parallel_for(A.size(), threads, [&](std::size_t i) {
    const HPoint& a = A[i];
    std::unordered_map<HLine, std::vector<Index>, HLineHash> pencil;
    pencil.reserve(C.size());
    for (Index k = 0; k < C.size(); ++k)
      if (C[k] != a) pencil[line_through(a, C[k])].push_back(k);
    auto& out = per_a[i];
    for (Index j = 0; j < B.size(); ++j) {
      if (B[j] == a) continue;
      auto it = pencil.find(line_through(a, B[j]));
      if (it == pencil.end()) continue;
      for (Index k : it->second)
        if (C[k] != B[j]) out.push_back({static_cast<Index>(i), j, k});
    }
  });
  std::vector<Edge> edges;
  for (auto& v : per_a) edges.insert(edges.end(), v.begin(), v.end());
  return TripleSystem(sets, Hypergraph3(A.size(), B.size(), C.size(), std::move(edges)));
}

TripleSystem build_triples(const LabeledSets& sets, unsigned threads) {
  return build_triples(std::make_shared<const LabeledSets>(sets), threads);
}

TripleSystem build_triples_brute_force(std::shared_ptr<const LabeledSets> sets) {
  sets->validate();
  std::vector<Edge> edges;
  for (Index i = 0; i < sets->a.size(); ++i)
    for (Index j = 0; j < sets->b.size(); ++j)
      for (Index k = 0; k < sets->c.size(); ++k)
        if (is_collinear_edge(*sets, {i, j, k})) edges.push_back({i, j, k});
  return TripleSystem(sets, Hypergraph3(sets->a.size(), sets->b.size(), sets->c.size(), std::move(edges)));
}

TripleSystem build_triples_from_selection(std::shared_ptr<const LabeledSets> sets, std::vector<Edge> selection) {
  sets->validate();
  for (const auto& e : selection)
    if (!is_collinear_edge(*sets, e))
      throw Error(ErrorCode::kNonCollinearSelection, "triple (" + std::to_string(e.a) + "," + std::to_string(e.b) +
                                                         "," + std::to_string(e.c) + ") is not collinear");
  return TripleSystem(sets, Hypergraph3(sets->a.size(), sets->b.size(), sets->c.size(), std::move(selection)));
}

// ---------------------------------------------------------------------------

namespace {

// A line meets a set at infinity when it passes through one of its directions.
bool line_meets(const HLine& line, const std::vector<HPoint>& pts, const std::vector<HPoint>& hull, bool at_infinity) {
  if (at_infinity) {
    for (const auto& p : pts)
      if (incident(line, p)) return true;
    return false;
  }
  return line_meets_hull(line, hull);
}

struct SetView {
  Part part;
  const std::vector<HPoint>* points;
  std::vector<HPoint> hull;
  bool at_infinity;
};

std::array<SetView, 3> views(const LabeledSets& sets) {
  std::array<SetView, 3> v;
  for (int p = 0; p < 3; ++p) {
    Part part = kParts[p];
    bool inf = part == Part::kC && sets.c_at_infinity;
    v[p] = SetView{part, &sets.set(part), inf ? std::vector<HPoint>{} : convex_hull(sets.set(part)), inf};
  }
  return v;
}

// Lines spanned by `from` tested against each set in `against`.
std::optional<std::string> first_crossing(const SetView& from, std::initializer_list<const SetView*> against) {
  if (from.at_infinity) return std::nullopt;  // its only line is the line at infinity
  const auto& pts = *from.points;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      HLine l = line_through(pts[i], pts[j]);
      for (const SetView* t : against)
        if (line_meets(l, *t->points, t->hull, t->at_infinity))
          return std::string("line through ") + part_name(from.part) + "[" + std::to_string(i) + "] " +
                 pts[i].str() + " and " + part_name(from.part) + "[" + std::to_string(j) + "] " + pts[j].str() +
                 " meets the hull of " + part_name(t->part);
    }
  return std::nullopt;
}

AvoidanceReport from_violation(std::optional<std::string> v) {
  if (!v) return {};
  return AvoidanceReport{false, std::move(*v)};
}

}  // namespace

AvoidanceReport mutually_avoiding(const LabeledSets& sets) {
  sets.validate();
  auto v = views(sets);
  for (int p = 0; p < 3; ++p) {
    auto hit = first_crossing(v[p], {&v[(p + 1) % 3], &v[(p + 2) % 3]});
    if (hit) return from_violation(hit);
  }
  return {};
}

AvoidanceReport avoiding_one_sided(const LabeledSets& sets) {
  sets.validate();
  auto v = views(sets);
  // With C at infinity only the finite-hull conditions remain.
  if (sets.c_at_infinity) return from_violation(first_crossing(v[0], {&v[1]}));
  if (auto hit = first_crossing(v[0], {&v[1], &v[2]})) return from_violation(hit);
  return from_violation(first_crossing(v[2], {&v[0], &v[1]}));
}

// ---------------------------------------------------------------------------

OrderReport verify_order(const Hypergraph3& graph) {
  auto check = [](int bullet, const Edge& e1, const Edge& e2) {
    switch (bullet) {
      case 1:
        if (e1.b < e2.b) return e1.c < e2.c;
        if (e2.b < e1.b) return e2.c < e1.c;
        return true;
      case 2:
        if (e1.a > e2.a) return e1.c < e2.c;
        if (e2.a > e1.a) return e2.c < e1.c;
        return true;
      default:
        if (e1.a < e2.a) return e1.b < e2.b;
        if (e2.a < e1.a) return e2.b < e1.b;
        return true;
    }
  };
  for (int p = 0; p < 3; ++p) {
    for (Index v = 0; v < graph.size(kParts[p]); ++v) {
      auto inc = graph.incident(kParts[p], v);
      for (std::size_t x = 0; x < inc.size(); ++x)
        for (std::size_t y = x + 1; y < inc.size(); ++y) {
          const Edge& e1 = graph.edge(inc[x]);
          const Edge& e2 = graph.edge(inc[y]);
          if (!check(p + 1, e1, e2)) return OrderReport{false, p + 1, std::pair{e1, e2}};
        }
    }
  }
  return {};
}

namespace {

Index coord(const Edge& e, int p) { return p == 0 ? e.a : p == 1 ? e.b : e.c; }

// Sort-based equivalent of verify_order for candidate screening.
bool order_holds(std::vector<Edge>& edges) {
  // (group, sort key, value, value must increase)
  static constexpr std::array<std::array<int, 3>, 3> kRules{{{0, 1, 2}, {1, 0, 2}, {2, 0, 1}}};
  static constexpr std::array<bool, 3> kIncreasing{true, false, true};
  for (int r = 0; r < 3; ++r) {
    auto [g, s, v] = kRules[r];
    std::sort(edges.begin(), edges.end(), [&](const Edge& x, const Edge& y) {
      return std::pair(coord(x, g), coord(x, s)) < std::pair(coord(y, g), coord(y, s));
    });
    std::size_t start = 0;
    while (start < edges.size()) {
      std::size_t end = start;
      while (end < edges.size() && coord(edges[end], g) == coord(edges[start], g)) ++end;
      // Extreme value over items with strictly smaller sort key.
      bool have = false;
      Index extreme = 0;
      std::size_t run = start;
      while (run < end) {
        std::size_t run_end = run;
        while (run_end < end && coord(edges[run_end], s) == coord(edges[run], s)) ++run_end;
        for (std::size_t t = run; t < run_end; ++t) {
          Index val = coord(edges[t], v);
          if (have && (kIncreasing[r] ? extreme >= val : extreme <= val)) return false;
        }
        for (std::size_t t = run; t < run_end; ++t) {
          Index val = coord(edges[t], v);
          if (!have || (kIncreasing[r] ? val > extreme : val < extreme)) extreme = val;
          have = true;
        }
        run = run_end;
      }
      start = end;
    }
  }
  return true;
}

Rat centroid_coord(const std::vector<HPoint>& pts, bool x) {
  Rat s = 0;
  for (const auto& p : pts) s += x ? p.ax() : p.ay();
  return s / Rat(static_cast<long>(pts.size()));
}

bool inside_closed_hull(const HPoint& ref, const std::vector<HPoint>& hull) {
  if (hull.empty()) return false;
  if (hull.size() == 1) return ref == hull[0];
  if (hull.size() == 2) {
    if (orient(hull[0], hull[1], ref) != 0) return false;
    Rat lo_x = std::min(hull[0].ax(), hull[1].ax()), hi_x = std::max(hull[0].ax(), hull[1].ax());
    Rat lo_y = std::min(hull[0].ay(), hull[1].ay()), hi_y = std::max(hull[0].ay(), hull[1].ay());
    return ref.ax() >= lo_x && ref.ax() <= hi_x && ref.ay() >= lo_y && ref.ay() <= hi_y;
  }
  for (std::size_t i = 0; i < hull.size(); ++i)
    if (orient(hull[i], hull[(i + 1) % hull.size()], ref) < 0) return false;
  return true;
}

std::vector<Index> iota_order(std::size_t n) {
  std::vector<Index> o(n);
  for (Index i = 0; i < n; ++i) o[i] = i;
  return o;
}

// Angular order of finite points as seen from ref (finite or a direction).
std::vector<Index> angular_order(const std::vector<HPoint>& pts, const HPoint& ref) {
  auto order = iota_order(pts.size());
  auto dist_key = [&](const HPoint& p) {
    if (ref.is_finite()) {
      Rat dx = p.ax() - ref.ax(), dy = p.ay() - ref.ay();
      return Rat(dx * dx + dy * dy);
    }
    return Rat(p.ax() * Rat(ref.x()) + p.ay() * Rat(ref.y()));
  };
  std::stable_sort(order.begin(), order.end(), [&](Index i, Index j) {
    int o = orient(ref, pts[i], pts[j]);
    if (o != 0) return o > 0;
    return dist_key(pts[i]) < dist_key(pts[j]);
  });
  return order;
}

std::vector<Index> principal_order(const std::vector<HPoint>& pts) {
  auto order = iota_order(pts.size());
  if (pts.size() < 2) return order;
  std::size_t bi = 0, bj = 1;
  Rat best = -1;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      Rat dx = pts[j].ax() - pts[i].ax(), dy = pts[j].ay() - pts[i].ay();
      Rat d = dx * dx + dy * dy;
      if (d > best) best = d, bi = i, bj = j;
    }
  Rat ux = pts[bj].ax() - pts[bi].ax(), uy = pts[bj].ay() - pts[bi].ay();
  std::vector<std::pair<Rat, Rat>> key(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i)
    key[i] = {pts[i].ax() * ux + pts[i].ay() * uy, pts[i].ay() * ux - pts[i].ax() * uy};
  std::stable_sort(order.begin(), order.end(), [&](Index i, Index j) { return key[i] < key[j]; });
  return order;
}

// Directions by canonical slope, plus the rotation that starts after the largest angular gap.
std::vector<std::vector<Index>> direction_orders(const std::vector<HPoint>& dirs) {
  auto order = iota_order(dirs.size());
  const HPoint origin(0, 0);
  std::stable_sort(order.begin(), order.end(), [&](Index i, Index j) { return orient(origin, dirs[i], dirs[j]) > 0; });
  std::vector<std::vector<Index>> out{order};
  if (dirs.size() < 2) return out;
  std::vector<double> angle(order.size());
  for (std::size_t t = 0; t < order.size(); ++t)
    angle[t] = std::atan2(dirs[order[t]].y().get_d(), dirs[order[t]].x().get_d());
  std::size_t cut = 0;
  double gap = angle.front() + std::numbers::pi - angle.back();
  for (std::size_t t = 1; t < order.size(); ++t)
    if (angle[t] - angle[t - 1] > gap) gap = angle[t] - angle[t - 1], cut = t;
  if (cut != 0) {
    std::vector<Index> rotated(order.begin() + cut, order.end());
    rotated.insert(rotated.end(), order.begin(), order.begin() + cut);
    out.push_back(std::move(rotated));
  }
  return out;
}

std::vector<std::vector<Index>> candidate_orders(const LabeledSets& sets, int p) {
  const auto& pts = sets.set(kParts[p]);
  std::vector<std::vector<Index>> base;
  if (kParts[p] == Part::kC && sets.c_at_infinity) {
    base = direction_orders(pts);
  } else {
    auto hull = convex_hull(pts);
    for (int q : {(p + 1) % 3, (p + 2) % 3}) {
      const auto& other = sets.set(kParts[q]);
      if (other.empty()) continue;
      HPoint ref = (kParts[q] == Part::kC && sets.c_at_infinity)
                       ? other.front()
                       : HPoint(centroid_coord(other, true), centroid_coord(other, false));
      if (ref.is_finite() && inside_closed_hull(ref, hull)) continue;
      base.push_back(angular_order(pts, ref));
    }
    base.push_back(principal_order(pts));
  }
  std::vector<std::vector<Index>> out;
  std::set<std::vector<Index>> seen;
  for (auto& o : base) {
    std::vector<Index> rev(o.rbegin(), o.rend());
    for (auto* cand : {&o, &rev})
      if (seen.insert(*cand).second) out.push_back(*cand);
  }
  return out;
}

std::vector<Index> inverse_permutation(const std::vector<Index>& perm) {
  std::vector<Index> inv(perm.size());
  for (Index i = 0; i < perm.size(); ++i) inv[perm[i]] = i;
  return inv;
}

}  // namespace

OrderedSystem canonical_order(const TripleSystem& system) {
  const LabeledSets& sets = system.sets();
  std::array<std::vector<std::vector<Index>>, 3> cands;
  for (int p = 0; p < 3; ++p) cands[p] = candidate_orders(sets, p);

  std::vector<Edge> scratch;
  for (const auto& oa : cands[0]) {
    auto ia = inverse_permutation(oa);
    for (const auto& ob : cands[1]) {
      auto ib = inverse_permutation(ob);
      for (const auto& oc : cands[2]) {
        auto ic = inverse_permutation(oc);
        scratch.clear();
        for (const auto& e : system.edges()) scratch.push_back({ia[e.a], ib[e.b], ic[e.c]});
        if (!order_holds(scratch)) continue;

        auto reordered = std::make_shared<LabeledSets>();
        reordered->c_at_infinity = sets.c_at_infinity;
        for (Index i : oa) reordered->a.push_back(sets.a[i]);
        for (Index i : ob) reordered->b.push_back(sets.b[i]);
        for (Index i : oc) reordered->c.push_back(sets.c[i]);
        TripleSystem out(reordered, Hypergraph3(oa.size(), ob.size(), oc.size(), scratch));
        OrderReport report = verify_order(out.graph());
        if (!report.ok) continue;
        return OrderedSystem{std::move(out), OrderingCertificate{{oa, ob, oc}, report}};
      }
    }
  }
  throw Error(ErrorCode::kNoValidOrdering, "no candidate ordering satisfies the monotonicity conditions");
}

}  // namespace ctri
