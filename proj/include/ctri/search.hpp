#pragma once

#include "ctri/hypergraph.hpp"
#include "ctri/rational.hpp"
#include "ctri/triple_system.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace ctri {

// Unset fields are derived from the system by resolve_params.
struct SearchParams {
  std::optional<Rat> delta;
  std::optional<std::size_t> block_size;
  std::optional<std::size_t> skinny_bound;
  std::optional<Rat> epsilon;
  std::size_t k = 3;
  unsigned threads = 0;
};

struct ResolvedParams {
  Rat delta;
  std::size_t M = 1;
  std::size_t N = 1;
  Rat epsilon;
  std::size_t k = 3;
  std::size_t n = 0;  // largest class size
  unsigned threads = 0;

  std::string str() const;
};

// delta = |T| / n^2; M = least integer with floor(delta M / 8) >= 3; N = 32 M^3 / delta;
// epsilon = delta / 8. M and N are capped at n.
ResolvedParams resolve_params(const TripleSystem& system, const SearchParams& params);

class BlockPartition {
 public:
  BlockPartition(std::size_t n_a, std::size_t n_c, std::size_t M);

  std::size_t block_size() const { return M_; }
  std::size_t num_a_blocks() const { return (n_a_ + M_ - 1) / M_; }
  std::size_t num_c_blocks() const { return (n_c_ + M_ - 1) / M_; }
  std::size_t a_block(Index a) const { return a / M_; }
  std::size_t c_block(Index c) const { return c / M_; }
  // Half-open index range of a block.
  std::pair<Index, Index> a_range(std::size_t i) const;
  std::pair<Index, Index> c_range(std::size_t j) const;

 private:
  std::size_t n_a_;
  std::size_t n_c_;
  std::size_t M_;
};

BlockPartition partition_blocks(const TripleSystem& system, std::size_t M);

// (b, i, j) -> number of edges through b between P_i and Q_j.
using BranchKey = std::tuple<Index, std::size_t, std::size_t>;
using BranchCounts = std::map<BranchKey, std::size_t>;

BranchCounts branch_counts(const Hypergraph3& graph, const BlockPartition& partition);

struct Goodness {
  std::vector<bool> good;  // per edge id
  BranchCounts counts;
};

Goodness classify_good(const Hypergraph3& graph, const BlockPartition& partition, const Rat& epsilon);

struct PruneReport {
  std::size_t removed_stage1 = 0;
  std::size_t removed_stage2 = 0;
  std::size_t removed_stage3 = 0;
  std::size_t rounds = 0;
  std::map<Index, std::size_t> gamma;  // triples through b after the first stage-1 pass
  Rat delta;
  std::size_t M = 1;
  std::size_t n = 0;

  // (3 delta / 4) n^2 + (delta / 8) M n
  Rat removal_bound() const;
  bool within_bound() const { return Rat(removed_stage1 + removed_stage2) <= removal_bound(); }
};

struct PruneResult {
  TripleSystem system;
  PruneReport report;
};

// Repeats the three stages until nothing changes.
PruneResult prune(const TripleSystem& system, const ResolvedParams& params);

// ---------------------------------------------------------------------------
// (6,3) configurations

struct Config63 {
  std::array<Edge, 3> edges;  // sorted
  std::array<Index, 2> a;     // sorted
  std::array<Index, 2> b;
  std::array<Index, 2> c;
  Index double_b = 0;  // the B vertex lying on two edges

  friend bool operator==(const Config63& x, const Config63& y) { return x.edges == y.edges; }
  friend auto operator<=>(const Config63& x, const Config63& y) { return x.edges <=> y.edges; }
};

// Three edges pairwise sharing exactly one vertex, on six vertices.
std::optional<Config63> make_config63(const Edge& e1, const Edge& e2, const Edge& e3);

std::vector<Config63> find_663(const Hypergraph3& graph);
std::vector<Config63> find_663_in_block(const Hypergraph3& graph, const BlockPartition& partition, std::size_t i,
                                        std::size_t j);

bool is_skinny(const Config63& config, std::size_t N);

enum class Selection { kRandom, kBest };

struct SkinnyResult {
  std::vector<Config63> configs;
  PruneReport prune_report;
  std::map<std::size_t, std::array<Index, 2>> a_pairs;  // block -> selected pair
  std::map<std::size_t, std::array<Index, 2>> c_pairs;
  bool double_point_smaller = true;
  std::size_t found_in_blocks = 0;
  std::size_t N = 1;
};

SkinnyResult find_skinny_663(const TripleSystem& system, const ResolvedParams& params, std::uint64_t seed,
                             Selection selection = Selection::kRandom);

struct PairCount {
  Index lo = 0;
  Index hi = 0;
  std::size_t count = 0;

  friend bool operator==(const PairCount&, const PairCount&) = default;
};

std::vector<PairCount> greedy_pair_select(std::vector<PairCount> pairs, std::size_t N);

// ---------------------------------------------------------------------------
// Tic-tac-toe and (12,9)

struct TicTacToe {
  std::array<Edge, 3> rows;
  std::array<Edge, 3> cols;

  std::array<Index, 3> a_vertices() const;
  std::array<Index, 3> b_vertices() const;
  std::array<Index, 3> c_vertices() const;
};

// Empty string when the six edges form a tic-tac-toe inside the graph.
std::string tictactoe_violation(const TicTacToe& t, const Hypergraph3& graph);

struct Config129 {
  std::vector<Edge> edges;  // 9, sorted
  std::array<Config63, 3> parts;
};

enum class TttStrategy { kAuto, kExhaustive, kPipeline };

struct TicTacToeResult {
  std::optional<TicTacToe> tictactoe;
  std::optional<Config129> config129;
  TttStrategy used = TttStrategy::kExhaustive;
  std::size_t skinny_configs = 0;
  std::size_t level2_edges = 0;
};

std::optional<TicTacToe> find_tictactoe_exhaustive(const Hypergraph3& graph);

TicTacToeResult find_tictactoe(const TripleSystem& system, const ResolvedParams& params, std::uint64_t seed,
                               TttStrategy strategy = TttStrategy::kAuto, Selection selection = Selection::kRandom);

// ---------------------------------------------------------------------------
// k-systems

struct KBranch {
  Index b = 0;
  std::size_t i = 0;  // A block
  std::size_t j = 0;  // C block
  std::vector<Edge> edges;  // ascending by A index

  std::vector<Index> a_tuple() const;  // ascending
  std::vector<Index> c_tuple() const;  // ascending
};

struct BranchSearch {
  std::vector<KBranch> branches;
  BranchCounts counts;  // all (b, i, j) with at least one edge
};

// One branch per (b, i, j) with at least k edges: the k edges with smallest A indices.
BranchSearch find_k_branches(const Hypergraph3& graph, const BlockPartition& partition, std::size_t k);

// block -> selected k-tuple (ascending)
using TupleSelection = std::map<std::size_t, std::vector<Index>>;

struct TupleSelections {
  TupleSelection a;
  TupleSelection c;
};

// Per block, the tuple used by the most branches (ties: lexicographic).
TupleSelections natural_selection(const std::vector<KBranch>& branches);
// Per block, a seeded uniform choice among the tuples used by some branch.
TupleSelections random_selection(const std::vector<KBranch>& branches, std::uint64_t seed);

struct BipartiteGraph {
  std::vector<std::size_t> left;   // A blocks
  std::vector<std::size_t> right;  // C blocks
  std::vector<std::vector<std::size_t>> adj;  // left position -> sorted right positions
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> branch_of;  // (left pos, right pos) -> branch

  std::size_t num_edges() const;
  bool has_edge(std::size_t l, std::size_t r) const;
  static BipartiteGraph from_edges(std::size_t nl, std::size_t nr,
                                   const std::vector<std::pair<std::size_t, std::size_t>>& edges);
};

BipartiteGraph branch_bipartite_graph(const std::vector<KBranch>& branches, const TupleSelection& a_sel,
                                      const TupleSelection& c_sel);

struct Biclique {
  std::vector<std::size_t> left;   // positions in the graph
  std::vector<std::size_t> right;
};

std::optional<Biclique> find_biclique(const BipartiteGraph& graph, std::size_t s, std::size_t t);

struct KSystem {
  std::size_t k = 0;
  std::vector<std::vector<Index>> a_blocks;  // A_i, in pairing order
  std::vector<std::vector<Index>> c_blocks;  // C_j, in pairing order
  std::vector<std::vector<Index>> centers;   // b_{i,j}
  std::vector<Edge> edges;                   // (a_l^(i), b_ij, c_{k-l+1}^(j)), i, j, l ascending
  bool c_reversed = false;
};

KSystem assemble_k_system(const Biclique& biclique, const BipartiteGraph& graph, const std::vector<KBranch>& branches,
                          const Hypergraph3& graph3);

// Empty string when the record satisfies the k-system definition against the graph.
std::string k_system_violation(const KSystem& system, const Hypergraph3& graph);

struct KSystemSearch {
  std::optional<KSystem> system;
  std::size_t branches = 0;
  std::size_t graph_edges = 0;
};

KSystemSearch find_k_system(const TripleSystem& system, std::size_t k, std::size_t block_size,
                            std::optional<std::uint64_t> random_seed = std::nullopt);

}  // namespace ctri
