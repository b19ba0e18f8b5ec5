#include "ctri/search.hpp"

#include "ctri/error.hpp"
#include "ctri/parallel.hpp"
#include "ctri/random.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ctri {

namespace {

Rat ceil_rat(const Rat& x) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return Rat(q);
}

std::size_t capped(const Rat& x, std::size_t cap) {
  Rat c = ceil_rat(x);
  if (c >= Rat(static_cast<unsigned long>(cap))) return cap;
  return std::max<std::size_t>(1, c.get_num().get_ui());
}

std::string edge_str(const Edge& e) {
  return "(" + std::to_string(e.a) + "," + std::to_string(e.b) + "," + std::to_string(e.c) + ")";
}

}  // namespace

std::string ResolvedParams::str() const {
  std::ostringstream os;
  os << "delta=" << to_string(delta) << " M=" << M << " N=" << N << " epsilon=" << to_string(epsilon) << " k=" << k;
  return os.str();
}

ResolvedParams resolve_params(const TripleSystem& system, const SearchParams& params) {
  ResolvedParams r;
  r.n = std::max({system.size(Part::kA), system.size(Part::kB), system.size(Part::kC), std::size_t{1}});
  Rat n2(static_cast<unsigned long>(r.n * r.n));
  if (params.delta) {
    if (*params.delta <= 0 || *params.delta > 1) throw Error(ErrorCode::kInvalidArgument, "delta must lie in (0, 1]");
    r.delta = *params.delta;
  } else {
    std::size_t e = std::max<std::size_t>(system.num_edges(), 1);
    r.delta = std::min<Rat>(Rat(static_cast<unsigned long>(e)) / n2, Rat(1));
  }
  if (params.block_size) {
    if (*params.block_size < 1) throw Error(ErrorCode::kInvalidArgument, "block size must be at least 1");
    r.M = *params.block_size;
  } else {
    r.M = capped(Rat(24) / r.delta, r.n);
  }
  if (params.skinny_bound) {
    if (*params.skinny_bound < 1) throw Error(ErrorCode::kInvalidArgument, "skinny bound must be at least 1");
    r.N = *params.skinny_bound;
  } else {
    Rat m(static_cast<unsigned long>(r.M));
    r.N = capped(Rat(32) * m * m * m / r.delta, r.n);
  }
  if (params.epsilon) {
    if (*params.epsilon <= 0 || *params.epsilon > 1)
      throw Error(ErrorCode::kInvalidArgument, "epsilon must lie in (0, 1]");
    r.epsilon = *params.epsilon;
  } else {
    r.epsilon = r.delta / 8;
  }
  if (params.k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be at least 1");
  r.k = params.k;
  r.threads = params.threads;
  return r;
}

// ---------------------------------------------------------------------------

BlockPartition::BlockPartition(std::size_t n_a, std::size_t n_c, std::size_t M) : n_a_(n_a), n_c_(n_c), M_(M) {
  if (M < 1) throw Error(ErrorCode::kInvalidArgument, "block size must be at least 1");
}

std::pair<Index, Index> BlockPartition::a_range(std::size_t i) const {
  return {static_cast<Index>(i * M_), static_cast<Index>(std::min(n_a_, (i + 1) * M_))};
}

std::pair<Index, Index> BlockPartition::c_range(std::size_t j) const {
  return {static_cast<Index>(j * M_), static_cast<Index>(std::min(n_c_, (j + 1) * M_))};
}

BlockPartition partition_blocks(const TripleSystem& system, std::size_t M) {
  return BlockPartition(system.size(Part::kA), system.size(Part::kC), M);
}

BranchCounts branch_counts(const Hypergraph3& graph, const BlockPartition& partition) {
  BranchCounts counts;
  for (const auto& e : graph.edges()) ++counts[{e.b, partition.a_block(e.a), partition.c_block(e.c)}];
  return counts;
}

Goodness classify_good(const Hypergraph3& graph, const BlockPartition& partition, const Rat& epsilon) {
  Goodness g;
  g.counts = branch_counts(graph, partition);
  Rat threshold = epsilon * Rat(static_cast<unsigned long>(partition.block_size()));
  g.good.reserve(graph.num_edges());
  for (const auto& e : graph.edges()) {
    std::size_t c = g.counts.at({e.b, partition.a_block(e.a), partition.c_block(e.c)});
    g.good.push_back(Rat(static_cast<unsigned long>(c)) >= threshold);
  }
  return g;
}

// ---------------------------------------------------------------------------

Rat PruneReport::removal_bound() const {
  Rat nn(static_cast<unsigned long>(n));
  return Rat(3, 4) * delta * nn * nn + delta / 8 * Rat(static_cast<unsigned long>(M)) * nn;
}

PruneResult prune(const TripleSystem& system, const ResolvedParams& params) {
  const Hypergraph3& g = system.graph();
  BlockPartition part = partition_blocks(system, params.M);
  const Rat m(static_cast<unsigned long>(params.M));
  const Rat stage1 = params.delta * m / 4;
  const Rat stage2 = params.delta * m / 8;
  const Rat stage3 = params.delta * m * m / 8;
  auto below = [](std::size_t count, const Rat& t) { return Rat(static_cast<unsigned long>(count)) < t; };

  std::vector<char> alive(g.num_edges(), 1);
  PruneReport report;
  report.delta = params.delta;
  report.M = params.M;
  report.n = params.n;

  for (;;) {
    ++report.rounds;
    std::size_t removed_this_round = 0;

    // Stage 1: per b, drop sparse A blocks then sparse C blocks, alternating.
    for (Index b = 0; b < g.size_b(); ++b) {
      auto inc = g.incident(Part::kB, b);
      for (;;) {
        std::size_t removed = 0;
        for (bool a_side : {true, false}) {
          std::map<std::size_t, std::size_t> counts;
          for (EdgeId id : inc)
            if (alive[id]) ++counts[a_side ? part.a_block(g.edge(id).a) : part.c_block(g.edge(id).c)];
          for (EdgeId id : inc) {
            if (!alive[id]) continue;
            std::size_t blk = a_side ? part.a_block(g.edge(id).a) : part.c_block(g.edge(id).c);
            if (below(counts[blk], stage1)) alive[id] = 0, ++removed;
          }
        }
        report.removed_stage1 += removed;
        removed_this_round += removed;
        if (removed == 0) break;
      }
      if (report.rounds == 1) {
        std::size_t left = 0;
        for (EdgeId id : inc) left += alive[id];
        if (!inc.empty()) report.gamma[b] = left;
      }
    }

    // Stage 2: weak triples.
    BranchCounts counts;
    for (EdgeId id = 0; id < g.num_edges(); ++id)
      if (alive[id]) ++counts[{g.edge(id).b, part.a_block(g.edge(id).a), part.c_block(g.edge(id).c)}];
    for (EdgeId id = 0; id < g.num_edges(); ++id) {
      if (!alive[id]) continue;
      const Edge& e = g.edge(id);
      if (below(counts[{e.b, part.a_block(e.a), part.c_block(e.c)}], stage2)) {
        alive[id] = 0;
        ++report.removed_stage2;
        ++removed_this_round;
      }
    }

    // Stage 3: sparse block pairs.
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> pair_counts;
    for (EdgeId id = 0; id < g.num_edges(); ++id)
      if (alive[id]) ++pair_counts[{part.a_block(g.edge(id).a), part.c_block(g.edge(id).c)}];
    for (EdgeId id = 0; id < g.num_edges(); ++id) {
      if (!alive[id]) continue;
      if (below(pair_counts[{part.a_block(g.edge(id).a), part.c_block(g.edge(id).c)}], stage3)) {
        alive[id] = 0;
        ++report.removed_stage3;
        ++removed_this_round;
      }
    }

    if (removed_this_round == 0) break;
  }

  std::vector<Edge> kept;
  for (EdgeId id = 0; id < g.num_edges(); ++id)
    if (alive[id]) kept.push_back(g.edge(id));
  return PruneResult{system.with_edges(std::move(kept)), std::move(report)};
}

// ---------------------------------------------------------------------------

std::optional<Config63> make_config63(const Edge& e1, const Edge& e2, const Edge& e3) {
  if (shared_vertices(e1, e2) != 1 || shared_vertices(e2, e3) != 1 || shared_vertices(e1, e3) != 1)
    return std::nullopt;
  auto two = [](Index x, Index y, Index z, std::array<Index, 2>& out, Index& dbl) {
    std::array<Index, 3> v{x, y, z};
    std::sort(v.begin(), v.end());
    if (v[0] == v[2] || (v[0] != v[1] && v[1] != v[2])) return false;
    dbl = v[1];
    out = {v[0], v[2]};
    return true;
  };
  Config63 c;
  Index da, db, dc;
  if (!two(e1.a, e2.a, e3.a, c.a, da) || !two(e1.b, e2.b, e3.b, c.b, db) || !two(e1.c, e2.c, e3.c, c.c, dc))
    return std::nullopt;
  c.double_b = db;
  c.edges = {e1, e2, e3};
  std::sort(c.edges.begin(), c.edges.end());
  return c;
}

std::vector<Config63> find_663(const Hypergraph3& graph) {
  std::vector<Config63> out;
  const bool lin = graph.linear();
  auto with_ac = [&](Index a, Index c, Index not_b, auto&& emit) {
    if (lin) {
      auto id = graph.edge_with({Part::kA, a}, {Part::kC, c});
      if (id && graph.edge(*id).b != not_b) emit(graph.edge(*id));
      return;
    }
    for (EdgeId id : graph.incident(Part::kA, a)) {
      const Edge& e = graph.edge(id);
      if (e.c == c && e.b != not_b) emit(e);
    }
  };
  for (Index b = 0; b < graph.size_b(); ++b) {
    auto inc = graph.incident(Part::kB, b);
    for (std::size_t x = 0; x < inc.size(); ++x)
      for (std::size_t y = x + 1; y < inc.size(); ++y) {
        const Edge& e2 = graph.edge(inc[x]);
        const Edge& e3 = graph.edge(inc[y]);
        if (e2.a == e3.a || e2.c == e3.c) continue;
        auto emit = [&](const Edge& e1) {
          if (auto c = make_config63(e1, e2, e3)) out.push_back(*c);
        };
        with_ac(e2.a, e3.c, b, emit);
        with_ac(e3.a, e2.c, b, emit);
      }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Config63> find_663_in_block(const Hypergraph3& graph, const BlockPartition& partition, std::size_t i,
                                        std::size_t j) {
  return find_663(graph.filter(
      [&](const Edge& e) { return partition.a_block(e.a) == i && partition.c_block(e.c) == j; }));
}

bool is_skinny(const Config63& config, std::size_t N) {
  std::size_t gap = std::max({config.a[1] - config.a[0], config.b[1] - config.b[0], config.c[1] - config.c[0]});
  return gap <= N;
}

// ---------------------------------------------------------------------------

namespace {

using IndexPair = std::array<Index, 2>;

IndexPair choose_pair(const std::map<IndexPair, std::size_t>& freq, Selection selection, Rng rng) {
  if (selection == Selection::kBest) {
    IndexPair best = freq.begin()->first;
    std::size_t count = 0;
    for (const auto& [p, c] : freq)
      if (c > count) best = p, count = c;
    return best;
  }
  auto it = freq.begin();
  std::advance(it, static_cast<long>(rng.below(freq.size())));
  return it->first;
}

}  // namespace

SkinnyResult find_skinny_663(const TripleSystem& system, const ResolvedParams& params, std::uint64_t seed,
                             Selection selection) {
  SkinnyResult result;
  result.N = params.N;
  PruneResult pruned = prune(system, params);
  result.prune_report = pruned.report;
  const Hypergraph3& g = pruned.system.graph();
  BlockPartition part = partition_blocks(pruned.system, params.M);

  std::set<std::pair<std::size_t, std::size_t>> pair_set;
  for (const auto& e : g.edges()) pair_set.insert({part.a_block(e.a), part.c_block(e.c)});
  std::vector<std::pair<std::size_t, std::size_t>> pairs(pair_set.begin(), pair_set.end());
  std::vector<std::vector<Config63>> per_pair(pairs.size());
  parallel_for(pairs.size(), params.threads,
               [&](std::size_t t) { per_pair[t] = find_663_in_block(g, part, pairs[t].first, pairs[t].second); });

  std::vector<Config63> all;
  std::map<std::size_t, std::map<IndexPair, std::size_t>> a_freq, c_freq;
  for (const auto& v : per_pair) {
    if (!v.empty()) ++result.found_in_blocks;
    for (const auto& c : v) {
      all.push_back(c);
      ++a_freq[part.a_block(c.a[0])][c.a];
      ++c_freq[part.c_block(c.c[0])][c.c];
    }
  }
  for (const auto& [blk, freq] : a_freq) result.a_pairs[blk] = choose_pair(freq, selection, Rng(seed, 2 * blk));
  for (const auto& [blk, freq] : c_freq) result.c_pairs[blk] = choose_pair(freq, selection, Rng(seed, 2 * blk + 1));

  std::vector<Config63> chosen;
  for (const auto& c : all)
    if (result.a_pairs[part.a_block(c.a[0])] == c.a && result.c_pairs[part.c_block(c.c[0])] == c.c)
      chosen.push_back(c);

  std::size_t smaller = 0;
  for (const auto& c : chosen) smaller += c.double_b == c.b[0];
  result.double_point_smaller = 2 * smaller >= chosen.size();

  std::set<Edge> used;
  for (const auto& c : chosen) {
    if ((c.double_b == c.b[0]) != result.double_point_smaller) continue;
    if (c.b[1] - c.b[0] > params.N) continue;
    if (std::any_of(c.edges.begin(), c.edges.end(), [&](const Edge& e) { return used.count(e) > 0; })) continue;
    for (const auto& e : c.edges) used.insert(e);
    result.configs.push_back(c);
  }
  return result;
}

std::vector<PairCount> greedy_pair_select(std::vector<PairCount> pairs, std::size_t N) {
  for (auto& p : pairs) {
    if (p.lo > p.hi) std::swap(p.lo, p.hi);
    if (p.hi - p.lo > N)
      throw Error(ErrorCode::kInvalidArgument,
                  "pair (" + std::to_string(p.lo) + "," + std::to_string(p.hi) + ") is farther apart than N");
  }
  std::sort(pairs.begin(), pairs.end(), [](const PairCount& x, const PairCount& y) {
    if (x.count != y.count) return x.count > y.count;
    return std::pair(x.lo, x.hi) < std::pair(y.lo, y.hi);
  });
  std::set<Index> used;
  std::vector<PairCount> out;
  for (const auto& p : pairs) {
    if (used.count(p.lo) || used.count(p.hi)) continue;
    used.insert(p.lo);
    used.insert(p.hi);
    out.push_back(p);
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

template <class F>
std::array<Index, 3> sorted_coords(const std::array<Edge, 3>& rows, F get) {
  std::array<Index, 3> v{get(rows[0]), get(rows[1]), get(rows[2])};
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

std::array<Index, 3> TicTacToe::a_vertices() const { return sorted_coords(rows, [](const Edge& e) { return e.a; }); }
std::array<Index, 3> TicTacToe::b_vertices() const { return sorted_coords(rows, [](const Edge& e) { return e.b; }); }
std::array<Index, 3> TicTacToe::c_vertices() const { return sorted_coords(rows, [](const Edge& e) { return e.c; }); }

std::string tictactoe_violation(const TicTacToe& t, const Hypergraph3& graph) {
  for (const auto* group : {&t.rows, &t.cols})
    for (const auto& e : *group)
      if (!graph.find(e)) return "edge " + edge_str(e) + " is not in the system";
  for (int x = 0; x < 3; ++x)
    for (int y = x + 1; y < 3; ++y) {
      if (shared_vertices(t.rows[x], t.rows[y]) != 0) return "rows " + std::to_string(x) + " and " + std::to_string(y) + " intersect";
      if (shared_vertices(t.cols[x], t.cols[y]) != 0) return "columns " + std::to_string(x) + " and " + std::to_string(y) + " intersect";
    }
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      if (shared_vertices(t.rows[r], t.cols[c]) != 1)
        return "row " + std::to_string(r) + " and column " + std::to_string(c) + " do not share exactly one vertex";
  return {};
}

std::optional<TicTacToe> find_tictactoe_exhaustive(const Hypergraph3& graph) {
  auto edges_ac = [&](Index a, Index c, auto&& f) {
    for (EdgeId id : graph.incident(Part::kA, a))
      if (graph.edge(id).c == c && f(graph.edge(id))) return true;
    return false;
  };
  auto edges_bc = [&](Index b, Index c, auto&& f) {
    for (EdgeId id : graph.incident(Part::kB, b))
      if (graph.edge(id).c == c && f(graph.edge(id))) return true;
    return false;
  };
  std::optional<TicTacToe> found;
  for (const Edge& r1 : graph.edges()) {
    for (EdgeId ia : graph.incident(Part::kA, r1.a)) {
      const Edge& ca = graph.edge(ia);
      if (shared_vertices(ca, r1) != 1) continue;
      for (EdgeId ib : graph.incident(Part::kB, r1.b)) {
        const Edge& cb = graph.edge(ib);
        if (shared_vertices(cb, r1) != 1 || shared_vertices(cb, ca) != 0) continue;
        // Rows two and three are forced: (cb.a, x, ca.c) and (y, ca.b, cb.c); the last column is (y, x, r1.c).
        bool done = edges_ac(cb.a, ca.c, [&](const Edge& r2) {
          return edges_bc(ca.b, cb.c, [&](const Edge& r3) {
            Edge cc{r3.a, r2.b, r1.c};
            if (!graph.find(cc)) return false;
            TicTacToe t{{r1, r2, r3}, {ca, cb, cc}};
            if (!tictactoe_violation(t, graph).empty()) return false;
            found = t;
            return true;
          });
        });
        if (done) return found;
      }
    }
  }
  return std::nullopt;
}

namespace {

std::size_t exhaustive_work(const Hypergraph3& g) {
  std::size_t work = 0;
  for (const auto& e : g.edges()) work += g.incident(Part::kA, e.a).size() * g.incident(Part::kB, e.b).size();
  return work;
}

constexpr std::size_t kExhaustiveWorkLimit = 20'000'000;

}  // namespace

TicTacToeResult find_tictactoe(const TripleSystem& system, const ResolvedParams& params, std::uint64_t seed,
                               TttStrategy strategy, Selection selection) {
  TicTacToeResult result;
  const Hypergraph3& g = system.graph();
  if (g.num_edges() < 6) return result;
  if (strategy == TttStrategy::kAuto)
    strategy = exhaustive_work(g) <= kExhaustiveWorkLimit ? TttStrategy::kExhaustive : TttStrategy::kPipeline;
  result.used = strategy;
  if (strategy == TttStrategy::kExhaustive) {
    result.tictactoe = find_tictactoe_exhaustive(g);
    return result;
  }

  SkinnyResult skinny = find_skinny_663(system, params, seed, selection);
  result.skinny_configs = skinny.configs.size();

  std::map<IndexPair, std::size_t> b_counts;
  for (const auto& c : skinny.configs) ++b_counts[c.b];
  std::vector<PairCount> pool;
  for (const auto& [p, n] : b_counts) pool.push_back({p[0], p[1], n});
  auto selected = greedy_pair_select(pool, params.N);

  std::map<IndexPair, Index> a_id, b_id, c_id;
  for (const auto& p : selected) b_id.emplace(IndexPair{p.lo, p.hi}, static_cast<Index>(b_id.size()));
  for (const auto& c : skinny.configs) {
    if (!b_id.count(c.b)) continue;
    a_id.emplace(c.a, static_cast<Index>(a_id.size()));
    c_id.emplace(c.c, static_cast<Index>(c_id.size()));
  }
  std::map<Edge, std::size_t> config_of;
  for (std::size_t t = 0; t < skinny.configs.size(); ++t) {
    const auto& c = skinny.configs[t];
    if (!b_id.count(c.b)) continue;
    config_of.emplace(Edge{a_id[c.a], b_id[c.b], c_id[c.c]}, t);
  }
  std::vector<Edge> level2;
  for (const auto& [e, t] : config_of) level2.push_back(e);
  Hypergraph3 g2(a_id.size(), b_id.size(), c_id.size(), std::move(level2));
  result.level2_edges = g2.num_edges();

  for (const auto& top : find_663(g2)) {
    Config129 big;
    for (int t = 0; t < 3; ++t) {
      big.parts[t] = skinny.configs[config_of.at(top.edges[t])];
      big.edges.insert(big.edges.end(), big.parts[t].edges.begin(), big.parts[t].edges.end());
    }
    std::sort(big.edges.begin(), big.edges.end());
    Hypergraph3 local(g.size_a(), g.size_b(), g.size_c(), big.edges);
    if (auto t = find_tictactoe_exhaustive(local)) {
      if (!tictactoe_violation(*t, g).empty())
        throw Error(ErrorCode::kVerificationFailure, "pipeline produced an invalid tic-tac-toe");
      result.tictactoe = t;
      result.config129 = std::move(big);
      return result;
    }
  }
  return result;
}

// ---------------------------------------------------------------------------

std::vector<Index> KBranch::a_tuple() const {
  std::vector<Index> v;
  for (const auto& e : edges) v.push_back(e.a);
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<Index> KBranch::c_tuple() const {
  std::vector<Index> v;
  for (const auto& e : edges) v.push_back(e.c);
  std::sort(v.begin(), v.end());
  return v;
}

BranchSearch find_k_branches(const Hypergraph3& graph, const BlockPartition& partition, std::size_t k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be at least 1");
  std::map<BranchKey, std::vector<Edge>> groups;
  for (const auto& e : graph.edges()) groups[{e.b, partition.a_block(e.a), partition.c_block(e.c)}].push_back(e);
  BranchSearch out;
  for (auto& [key, edges] : groups) {
    out.counts[key] = edges.size();
    if (edges.size() < k) continue;
    std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) { return std::pair(x.a, x.c) < std::pair(y.a, y.c); });
    KBranch br;
    std::tie(br.b, br.i, br.j) = key;
    br.edges.assign(edges.begin(), edges.begin() + static_cast<long>(k));
    out.branches.push_back(std::move(br));
  }
  return out;
}

namespace {

using TupleFreq = std::map<std::size_t, std::map<std::vector<Index>, std::size_t>>;

std::pair<TupleFreq, TupleFreq> tuple_frequencies(const std::vector<KBranch>& branches) {
  TupleFreq a, c;
  for (const auto& br : branches) {
    ++a[br.i][br.a_tuple()];
    ++c[br.j][br.c_tuple()];
  }
  return {a, c};
}

}  // namespace

TupleSelections natural_selection(const std::vector<KBranch>& branches) {
  auto [af, cf] = tuple_frequencies(branches);
  auto pick = [](const TupleFreq& f) {
    TupleSelection s;
    for (const auto& [blk, freq] : f) {
      std::size_t best = 0;
      for (const auto& [tuple, n] : freq)
        if (n > best) best = n, s[blk] = tuple;
    }
    return s;
  };
  return {pick(af), pick(cf)};
}

TupleSelections random_selection(const std::vector<KBranch>& branches, std::uint64_t seed) {
  auto [af, cf] = tuple_frequencies(branches);
  auto pick = [seed](const TupleFreq& f, std::uint64_t salt) {
    TupleSelection s;
    for (const auto& [blk, freq] : f) {
      Rng rng(seed, 2 * blk + salt);
      auto it = freq.begin();
      std::advance(it, static_cast<long>(rng.below(freq.size())));
      s[blk] = it->first;
    }
    return s;
  };
  return {pick(af, 0), pick(cf, 1)};
}

std::size_t BipartiteGraph::num_edges() const {
  std::size_t n = 0;
  for (const auto& v : adj) n += v.size();
  return n;
}

bool BipartiteGraph::has_edge(std::size_t l, std::size_t r) const {
  return l < adj.size() && std::binary_search(adj[l].begin(), adj[l].end(), r);
}

BipartiteGraph BipartiteGraph::from_edges(std::size_t nl, std::size_t nr,
                                          const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  BipartiteGraph g;
  for (std::size_t i = 0; i < nl; ++i) g.left.push_back(i);
  for (std::size_t j = 0; j < nr; ++j) g.right.push_back(j);
  g.adj.assign(nl, {});
  for (auto [l, r] : edges) {
    if (l >= nl || r >= nr) throw Error(ErrorCode::kInvalidArgument, "bipartite edge out of range");
    g.adj[l].push_back(r);
  }
  for (auto& v : g.adj) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  return g;
}

BipartiteGraph branch_bipartite_graph(const std::vector<KBranch>& branches, const TupleSelection& a_sel,
                                      const TupleSelection& c_sel) {
  BipartiteGraph g;
  std::map<std::size_t, std::size_t> lpos, rpos;
  for (const auto& [blk, t] : a_sel) lpos[blk] = g.left.size(), g.left.push_back(blk);
  for (const auto& [blk, t] : c_sel) rpos[blk] = g.right.size(), g.right.push_back(blk);
  g.adj.assign(g.left.size(), {});
  for (std::size_t id = 0; id < branches.size(); ++id) {
    const auto& br = branches[id];
    auto ai = a_sel.find(br.i);
    auto ci = c_sel.find(br.j);
    if (ai == a_sel.end() || ci == c_sel.end()) continue;
    if (ai->second != br.a_tuple() || ci->second != br.c_tuple()) continue;
    std::size_t l = lpos[br.i], r = rpos[br.j];
    if (g.branch_of.emplace(std::pair{l, r}, id).second) g.adj[l].push_back(r);
  }
  for (auto& v : g.adj) std::sort(v.begin(), v.end());
  return g;
}

std::optional<Biclique> find_biclique(const BipartiteGraph& graph, std::size_t s, std::size_t t) {
  if (s < 1 || t < 1) throw Error(ErrorCode::kInvalidArgument, "biclique sides must be at least 1");
  std::vector<std::size_t> candidates;
  for (std::size_t l = 0; l < graph.adj.size(); ++l)
    if (graph.adj[l].size() >= t) candidates.push_back(l);
  std::vector<std::size_t> chosen;
  std::optional<Biclique> found;
  auto dfs = [&](auto&& self, std::size_t from, const std::vector<std::size_t>& common) -> bool {
    if (chosen.size() == s) {
      found = Biclique{chosen, std::vector<std::size_t>(common.begin(), common.begin() + static_cast<long>(t))};
      return true;
    }
    for (std::size_t x = from; x + (s - chosen.size()) <= candidates.size(); ++x) {
      const auto& nb = graph.adj[candidates[x]];
      std::vector<std::size_t> next;
      std::set_intersection(common.begin(), common.end(), nb.begin(), nb.end(), std::back_inserter(next));
      if (next.size() < t) continue;
      chosen.push_back(candidates[x]);
      if (self(self, x + 1, next)) return true;
      chosen.pop_back();
    }
    return false;
  };
  std::vector<std::size_t> all;
  for (std::size_t r = 0; r < graph.right.size(); ++r) all.push_back(r);
  dfs(dfs, 0, all);
  return found;
}

KSystem assemble_k_system(const Biclique& biclique, const BipartiteGraph& graph, const std::vector<KBranch>& branches,
                          const Hypergraph3& graph3) {
  const std::size_t k = biclique.left.size();
  if (k == 0 || biclique.right.size() != k)
    throw Error(ErrorCode::kInvalidArgument, "k-system assembly needs a k x k biclique");
  KSystem ks;
  ks.k = k;
  ks.centers.assign(k, std::vector<Index>(k));
  ks.a_blocks.resize(k);
  ks.c_blocks.resize(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      auto it = graph.branch_of.find({biclique.left[i], biclique.right[j]});
      if (it == graph.branch_of.end())
        throw Error(ErrorCode::kInvalidArgument, "biclique edge without a branch");
      const KBranch& br = branches.at(it->second);
      if (br.edges.size() != k) throw Error(ErrorCode::kInvalidArgument, "branch size differs from k");
      ks.centers[i][j] = br.b;
      if (j == 0) ks.a_blocks[i] = br.a_tuple();
      if (i == 0) ks.c_blocks[j] = br.c_tuple();
    }

  std::optional<std::array<std::size_t, 3>> first_missing;
  for (bool reversed : {false, true}) {
    auto c_blocks = ks.c_blocks;
    if (reversed)
      for (auto& c : c_blocks) std::reverse(c.begin(), c.end());
    std::vector<Edge> edges;
    std::optional<std::array<std::size_t, 3>> missing;
    for (std::size_t i = 0; i < k && !missing; ++i)
      for (std::size_t j = 0; j < k && !missing; ++j)
        for (std::size_t l = 0; l < k; ++l) {
          Edge e{ks.a_blocks[i][l], ks.centers[i][j], c_blocks[j][k - 1 - l]};
          if (!graph3.find(e)) {
            missing = std::array<std::size_t, 3>{i + 1, j + 1, l + 1};
            break;
          }
          edges.push_back(e);
        }
    if (!missing) {
      ks.c_blocks = std::move(c_blocks);
      ks.edges = std::move(edges);
      ks.c_reversed = reversed;
      return ks;
    }
    if (!first_missing) first_missing = missing;
  }
  auto [i, j, l] = *first_missing;
  throw Error(ErrorCode::kVerificationFailure, "missing k-system edge for (i,j,l) = (" + std::to_string(i) + "," +
                                                   std::to_string(j) + "," + std::to_string(l) + ")");
}

std::string k_system_violation(const KSystem& s, const Hypergraph3& graph) {
  const std::size_t k = s.k;
  if (k == 0 || s.a_blocks.size() != k || s.c_blocks.size() != k || s.centers.size() != k)
    return "dimensions do not match k";
  std::set<Index> a_seen, c_seen;
  for (std::size_t i = 0; i < k; ++i) {
    if (s.a_blocks[i].size() != k || s.c_blocks[i].size() != k || s.centers[i].size() != k)
      return "block " + std::to_string(i + 1) + " does not have k entries";
    for (Index a : s.a_blocks[i])
      if (!a_seen.insert(a).second) return "A blocks are not disjoint";
    for (Index c : s.c_blocks[i])
      if (!c_seen.insert(c).second) return "C blocks are not disjoint";
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l) {
        Edge e{s.a_blocks[i][l], s.centers[i][j], s.c_blocks[j][k - 1 - l]};
        if (!graph.find(e))
          return "edge " + edge_str(e) + " for (i,j,l) = (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                 "," + std::to_string(l + 1) + ") is missing";
      }
  return {};
}

KSystemSearch find_k_system(const TripleSystem& system, std::size_t k, std::size_t block_size,
                            std::optional<std::uint64_t> random_seed) {
  KSystemSearch out;
  BlockPartition part = partition_blocks(system, block_size);
  auto br = find_k_branches(system.graph(), part, k);
  out.branches = br.branches.size();
  auto sel = random_seed ? random_selection(br.branches, *random_seed) : natural_selection(br.branches);
  auto g = branch_bipartite_graph(br.branches, sel.a, sel.c);
  out.graph_edges = g.num_edges();
  auto bc = find_biclique(g, k, k);
  if (!bc) return out;
  out.system = assemble_k_system(*bc, g, br.branches, system.graph());
  return out;
}

}  // namespace ctri
