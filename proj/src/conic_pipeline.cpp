#include "ctri/conic_pipeline.hpp"

#include "ctri/error.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

namespace ctri {

HLine c_line(const LabeledSets& sets) {
  if (sets.c_at_infinity) return HLine::at_infinity();
  if (sets.c.size() < 2) throw Error(ErrorCode::kInvalidArgument, "C needs two points to determine its line");
  const HLine line = line_through(sets.c[0], sets.c[1]);
  for (std::size_t k = 2; k < sets.c.size(); ++k)
    if (!incident(line, sets.c[k]))
      throw Error(ErrorCode::kInvalidArgument, "C is not collinear: c" + std::to_string(k) + " is off " + line.str());
  return line;
}

namespace {

struct BranchRec {
  IndexTriple a;   // ascending
  IndexTriple cs;  // C index matched to a[r]
  IndexTriple c;   // cs sorted
  Index b;
};

struct PairKey {
  IndexTriple first;
  IndexTriple second;
  std::array<int, 3> sigma;  // first[r] <-> second[sigma[r]]

  friend auto operator<=>(const PairKey&, const PairKey&) = default;
};

struct PairEntry {
  IndexTriple cs;
  Index first_centre;
  Index second_centre;

  friend auto operator<=>(const PairEntry&, const PairEntry&) = default;
};

bool disjoint(const IndexTriple& x, const IndexTriple& y) {
  for (Index u : x)
    for (Index v : y)
      if (u == v) return false;
  return true;
}

}  // namespace

std::optional<BranchPair> best_branch_pair(const Hypergraph3& graph, const BlockPartition& partition) {
  std::map<IndexTriple, std::vector<BranchRec>> by_c;
  for (Index b = 0; b < graph.size_b(); ++b) {
    std::map<std::pair<std::size_t, std::size_t>, std::vector<Edge>> groups;
    for (EdgeId id : graph.incident(Part::kB, b)) {
      const Edge& e = graph.edge(id);
      groups[{partition.a_block(e.a), partition.c_block(e.c)}].push_back(e);
    }
    for (auto& [blocks, es] : groups) {
      if (es.size() < 3) continue;
      std::sort(es.begin(), es.end(), [](const Edge& x, const Edge& y) { return x.a < y.a; });
      for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j)
          for (std::size_t k = j + 1; k < es.size(); ++k) {
            BranchRec r;
            r.a = {es[i].a, es[j].a, es[k].a};
            r.cs = {es[i].c, es[j].c, es[k].c};
            if (r.a[0] == r.a[1] || r.a[1] == r.a[2]) continue;
            r.c = r.cs;
            std::sort(r.c.begin(), r.c.end());
            if (r.c[0] == r.c[1] || r.c[1] == r.c[2]) continue;
            r.b = b;
            by_c[r.c].push_back(r);
          }
    }
  }

  std::map<PairKey, std::vector<PairEntry>> pairs;
  for (const auto& [c, recs] : by_c) {
    for (std::size_t i = 0; i < recs.size(); ++i)
      for (std::size_t j = 0; j < recs.size(); ++j) {
        const BranchRec& x = recs[i];
        const BranchRec& y = recs[j];
        if (!(x.a < y.a) || !disjoint(x.a, y.a)) continue;
        PairKey key{x.a, y.a, {}};
        for (int r = 0; r < 3; ++r)
          key.sigma[r] = static_cast<int>(std::find(y.cs.begin(), y.cs.end(), x.cs[r]) - y.cs.begin());
        pairs[key].push_back(PairEntry{x.cs, x.b, y.b});
      }
  }
  if (pairs.empty()) return std::nullopt;

  auto best = pairs.begin();
  for (auto it = pairs.begin(); it != pairs.end(); ++it)
    if (it->second.size() > best->second.size()) best = it;

  BranchPair out;
  out.first = best->first.first;
  for (int r = 0; r < 3; ++r) out.second[r] = best->first.second[best->first.sigma[r]];
  auto entries = best->second;
  std::sort(entries.begin(), entries.end());
  for (const auto& e : entries) {
    out.c_triples.push_back(e.cs);
    out.first_centres.push_back(e.first_centre);
    out.second_centres.push_back(e.second_centre);
  }
  return out;
}

namespace {

bool forbidden_ordinate(const Rat& y, NormalMode mode) {
  if (y == 0 || y == 1) return true;
  return mode == NormalMode::kT1 ? y == 2 : y == Rat(1, 2);
}

struct Attempt {
  ConicExtraction result;
  bool clean = true;  // no centre at a forbidden ordinate
};

Attempt attempt_mode(const TripleSystem& system, const HLine& cl, const BranchPair& pair, NormalMode mode) {
  const LabeledSets& sets = system.sets();
  Attempt at;
  ConicExtraction& x = at.result;
  x.mode = mode;
  x.pair = pair;

  const std::array<HPoint, 3> src{sets.a[pair.first[0]], sets.a[pair.first[1]], sets.a[pair.first[2]]};
  const auto targets = base_triple(mode);
  x.normalizing = proj_map_normalizing(src, targets, cl, HLine::x_axis());

  for (int r = 0; r < 3; ++r) {
    const HPoint p = x.normalizing.apply(sets.a[pair.second[r]]);
    if (!p.is_finite() || p.y() == 0)
      throw Error(ErrorCode::kPointOnAxis, "second triple point a" + std::to_string(pair.second[r]) +
                                               " maps onto the axis or to infinity");
    x.normalized_second[r] = p;
  }
  for (Index b : pair.first_centres) {
    const HPoint p = x.normalizing.apply(sets.b[b]);
    if (!p.is_finite() || forbidden_ordinate(p.ay(), mode)) at.clean = false;
  }

  x.polynomial = curve_determinant(x.normalized_second, mode);
  x.degeneracy = degenerate_witness(x.normalized_second, mode);
  if (x.degeneracy.has_value() != x.polynomial.is_zero())
    throw Error(ErrorCode::kVerificationFailure, "degeneracy test disagrees with the determinant polynomial");
  if (x.degeneracy) return at;

  x.normalized_conic = factor_out_axis(x.polynomial);
  x.conic = x.normalizing.inverse().apply(*x.normalized_conic);
  x.rank = conic_rank(*x.conic);
  for (Index b = 0; b < sets.b.size(); ++b)
    if (on_conic(*x.conic, sets.b[b])) x.on_conic.push_back(b);
  for (Index b : pair.first_centres)
    if (!std::binary_search(x.on_conic.begin(), x.on_conic.end(), b))
      throw Error(ErrorCode::kVerificationFailure, "branch centre b" + std::to_string(b) + " is off the conic");
  return at;
}

bool recoverable(ErrorCode code) {
  return code == ErrorCode::kSingularMap || code == ErrorCode::kPointOnAxis ||
         code == ErrorCode::kForbiddenOrdinate || code == ErrorCode::kVerificationFailure ||
         code == ErrorCode::kDegenerateTriangle;
}

ConicExtraction run_extraction(const TripleSystem& system, const SearchParams& params, std::uint64_t seed,
                               ModeChoice choice) {
  if (system.num_edges() == 0) throw Error(ErrorCode::kNoBranchPair, "the triple system is empty");
  const AvoidanceReport hyp = avoiding_one_sided(system.sets());
  const ResolvedParams resolved = resolve_params(system, params);
  PruneResult pruned = prune(system, resolved);
  const BlockPartition partition = partition_blocks(pruned.system, resolved.M);
  const auto pair = best_branch_pair(pruned.system.graph(), partition);
  if (!pair) throw Error(ErrorCode::kNoBranchPair, "no two A-triples share a common C-triple neighbour");
  const HLine cl = c_line(system.sets());

  std::vector<NormalMode> modes;
  if (choice != ModeChoice::kT2) modes.push_back(NormalMode::kT1);
  if (choice != ModeChoice::kT1) modes.push_back(NormalMode::kT2);

  std::optional<Attempt> fallback;
  std::optional<Error> last_error;
  std::optional<Attempt> chosen;
  for (NormalMode mode : modes) {
    try {
      Attempt at = attempt_mode(system, cl, *pair, mode);
      if (at.clean || at.result.degeneracy) {
        chosen = std::move(at);
        break;
      }
      if (!fallback) fallback = std::move(at);
    } catch (const Error& e) {
      if (!recoverable(e.code())) throw;
      last_error = e;
    }
  }
  if (!chosen) chosen = std::move(fallback);
  if (!chosen) throw *last_error;

  ConicExtraction out = std::move(chosen->result);
  out.hypotheses = hyp;
  out.prune_report = pruned.report;
  out.branch_edges = pruned.system.num_edges();
  out.seed = seed;
  out.params = resolved.str();
  return out;
}

std::string degeneracy_message(const ConicExtraction& x, const LabeledSets& sets) {
  std::string msg = "A-triples (a" + std::to_string(x.pair.first[0]) + ",a" + std::to_string(x.pair.first[1]) + ",a" +
                    std::to_string(x.pair.first[2]) + ") and (a" + std::to_string(x.pair.second[0]) + ",a" +
                    std::to_string(x.pair.second[1]) + ",a" + std::to_string(x.pair.second[2]) +
                    ") are similar relative to the C line; " + x.degeneracy->str();
  const Triangle t1{sets.a[x.pair.first[0]], sets.a[x.pair.first[1]], sets.a[x.pair.first[2]]};
  const Triangle t2{sets.a[x.pair.second[0]], sets.a[x.pair.second[1]], sets.a[x.pair.second[2]]};
  if (auto w = similar_rel_line(t1, t2, c_line(sets)))
    msg += " meets=" + w->meets[0].str() + "," + w->meets[1].str() + "," + w->meets[2].str();
  return msg;
}

}  // namespace

ConicExtraction extract_conic_report(const TripleSystem& system, const SearchParams& params, std::uint64_t seed,
                                     ModeChoice mode) {
  return run_extraction(system, params, seed, mode);
}

ConicExtraction extract_conic(const TripleSystem& system, const SearchParams& params, std::uint64_t seed,
                              ModeChoice mode) {
  ConicExtraction x = run_extraction(system, params, seed, mode);
  if (x.degeneracy) throw Error(ErrorCode::kDegenerateSimilarTriples, degeneracy_message(x, system.sets()));
  return x;
}

// ---------------------------------------------------------------------------
// Directions

std::vector<IndexPair> all_pairs(std::size_t n) {
  std::vector<IndexPair> out;
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) out.emplace_back(i, j);
  return out;
}

namespace {

std::vector<IndexPair> normalize_pairs(const std::vector<IndexPair>& pairs, std::size_t n) {
  std::vector<IndexPair> out;
  out.reserve(pairs.size());
  for (auto [i, j] : pairs) {
    if (i >= n || j >= n) throw Error(ErrorCode::kInvalidArgument, "pair index out of range");
    if (i == j) throw Error(ErrorCode::kInvalidArgument, "pair with equal endpoints");
    out.emplace_back(std::min(i, j), std::max(i, j));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

HPoint midpoint(const HPoint& p, const HPoint& q) { return HPoint((p.ax() + q.ax()) / 2, (p.ay() + q.ay()) / 2); }

struct DirectionSystem {
  std::shared_ptr<const LabeledSets> sets;
  TripleSystem system;
  std::vector<IndexPair> used;  // (A-side index, B-side index) into the original points
};

// A := points[a_idx], B := points[b_idx], C := directions of the pairs of E
// joining them, in order of first appearance.
DirectionSystem direction_system(const std::vector<HPoint>& points, const std::vector<Index>& a_idx,
                                 const std::vector<Index>& b_idx, const std::vector<IndexPair>& sorted_pairs) {
  std::unordered_map<Index, Index> a_pos;
  std::unordered_map<Index, Index> b_pos;
  for (Index i = 0; i < a_idx.size(); ++i) a_pos[a_idx[i]] = i;
  for (Index i = 0; i < b_idx.size(); ++i) b_pos[b_idx[i]] = i;

  auto sets = std::make_shared<LabeledSets>();
  sets->c_at_infinity = true;
  for (Index i : a_idx) sets->a.push_back(points[i]);
  for (Index i : b_idx) sets->b.push_back(points[i]);

  DirectionSystem out;
  std::unordered_map<HPoint, Index, HPointHash> dir_pos;
  std::vector<Edge> edges;
  for (auto [i, j] : sorted_pairs) {
    Index u = i;
    Index v = j;
    if (!a_pos.count(u) || !b_pos.count(v)) std::swap(u, v);
    if (!a_pos.count(u) || !b_pos.count(v)) continue;
    const HPoint d = direction_of(points[u], points[v]);
    auto [it, fresh] = dir_pos.emplace(d, static_cast<Index>(sets->c.size()));
    if (fresh) sets->c.push_back(d);
    edges.push_back(Edge{a_pos[u], b_pos[v], it->second});
    out.used.emplace_back(u, v);
  }
  out.sets = sets;
  out.system = build_triples_from_selection(sets, std::move(edges));
  return out;
}

}  // namespace

DirectionInstance direction_instance(const std::vector<HPoint>& points, const std::vector<IndexPair>& pairs) {
  const std::size_t n = points.size();
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "need at least two points");
  for (const auto& p : points)
    if (!p.is_finite()) throw Error(ErrorCode::kInvalidArgument, "points must be finite");
  if (!in_convex_position(points)) throw Error(ErrorCode::kNotConvex, "points are not in convex position");
  const auto e = normalize_pairs(pairs, n);

  DirectionInstance inst;
  std::unordered_map<HPoint, Index, HPointHash> index_of;
  for (Index i = 0; i < n; ++i)
    if (!index_of.emplace(points[i], i).second)
      throw Error(ErrorCode::kInvalidArgument, "repeated point " + points[i].str());
  for (const auto& p : convex_hull(points)) inst.hull_order.push_back(index_of.at(p));

  const std::size_t m = n / 2;
  std::size_t best_count = 0;
  std::vector<Index> best_near;
  std::size_t best_r = 0;
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<Index> near;
    std::vector<bool> in(n, false);
    for (std::size_t t = 0; t < m; ++t) {
      const Index v = inst.hull_order[(r + t) % n];
      near.push_back(v);
      in[v] = true;
    }
    std::sort(near.begin(), near.end());
    std::size_t count = 0;
    for (auto [i, j] : e)
      if (in[i] != in[j]) ++count;
    if (r == 0 || count > best_count || (count == best_count && near < best_near)) {
      best_count = count;
      best_near = near;
      best_r = r;
    }
  }
  inst.near = best_near;
  std::vector<bool> in_near(n, false);
  for (Index v : inst.near) in_near[v] = true;
  for (Index v = 0; v < n; ++v)
    if (!in_near[v]) inst.far.push_back(v);

  const auto& h = inst.hull_order;
  const HPoint m1 = midpoint(points[h[(best_r + m - 1) % n]], points[h[(best_r + m) % n]]);
  const HPoint m2 = midpoint(points[h[(best_r + n - 1) % n]], points[h[best_r]]);
  if (m1 != m2) {
    inst.split = line_through(m1, m2);
  } else {
    const HPoint& p = points[h[best_r]];
    const HPoint& q = points[h[(best_r + 1) % n]];
    const Rat dx = q.ax() - p.ax();
    const Rat dy = q.ay() - p.ay();
    inst.split = HLine(dx, dy, -(dx * m1.ax() + dy * m1.ay()));
  }

  std::set<HPoint> all_dirs;
  for (auto [i, j] : e) all_dirs.insert(direction_of(points[i], points[j]));
  inst.e_directions = all_dirs.size();

  DirectionSystem ds = direction_system(points, inst.near, inst.far, e);
  inst.crossing = ds.used;
  inst.directions = ds.sets->c;
  inst.sets = ds.sets;
  inst.system = ds.system;
  return inst;
}

FewDirectionsResult convex_few_directions(const std::vector<HPoint>& points, const std::vector<IndexPair>& pairs,
                                          const SearchParams& params, std::uint64_t seed, ModeChoice mode) {
  FewDirectionsResult out;
  out.instance = direction_instance(points, pairs);
  const std::size_t n = points.size();
  const auto e = normalize_pairs(pairs, n);

  std::map<Index, std::size_t> degree;
  for (auto [u, v] : out.instance.crossing) ++degree[v];
  const std::size_t crossing = out.instance.crossing.size();
  for (Index v : out.instance.far)
    if (2 * n * degree[v] >= crossing) out.filtered.push_back(v);

  DirectionSystem first = direction_system(points, out.instance.near, out.filtered, e);
  out.first = extract_conic(first.system, params, seed, mode);
  for (Index b : out.first.on_conic) out.a_star.push_back(out.filtered[b]);

  DirectionSystem second = direction_system(points, out.a_star, out.instance.near, e);
  out.second = extract_conic(second.system, params, seed, mode);
  for (Index b : out.second.on_conic) out.a_star_star.push_back(out.instance.near[b]);

  if (*out.first.conic != *out.second.conic)
    throw Error(ErrorCode::kConicMismatch,
                "first conic " + out.first.conic->str() + " differs from second " + out.second.conic->str());
  out.conic = *out.first.conic;

  std::vector<bool> in_star(n, false);
  std::vector<bool> in_star2(n, false);
  for (Index v : out.a_star) in_star[v] = true;
  for (Index v : out.a_star_star) in_star2[v] = true;
  for (auto [i, j] : e)
    if ((in_star[i] && in_star2[j]) || (in_star2[i] && in_star[j])) out.h.emplace_back(i, j);
  return out;
}

}  // namespace ctri
