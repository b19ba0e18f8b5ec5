#pragma once

#include "ctri/curve.hpp"
#include "ctri/geometry.hpp"
#include "ctri/search.hpp"
#include "ctri/triple_system.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ctri {

enum class ModeChoice { kT1, kT2, kAuto };

using IndexTriple = std::array<Index, 3>;

struct BranchPair {
  IndexTriple first;   // A indices, ascending
  IndexTriple second;  // A indices; second[r] corresponds to first[r]
  // Per common C-triple: C indices in the order matching `first`, and the
  // B centres of the two 3-branches.
  std::vector<IndexTriple> c_triples;
  std::vector<Index> first_centres;
  std::vector<Index> second_centres;

  std::size_t support() const { return c_triples.size(); }
};

struct ConicExtraction {
  NormalMode mode = NormalMode::kT1;
  ProjMap normalizing = ProjMap::identity();
  BranchPair pair;
  PointTriple normalized_second;  // images of the second triple
  CurvePoly polynomial;
  std::optional<Conic> normalized_conic;
  std::optional<Conic> conic;  // in input coordinates
  int rank = 0;
  std::vector<Index> on_conic;  // B indices
  std::optional<DegeneracyWitness> degeneracy;
  AvoidanceReport hypotheses;
  PruneReport prune_report;
  std::size_t branch_edges = 0;
  std::uint64_t seed = 0;
  std::string params;
};

// Line carrying C, or the line at infinity when C consists of directions.
HLine c_line(const LabeledSets& sets);

// Best pair of A-triples by number of common C-triple neighbours in the 3-branch graph.
std::optional<BranchPair> best_branch_pair(const Hypergraph3& graph, const BlockPartition& partition);

// Throws kNoBranchPair, kDegenerateSimilarTriples (witness in the message) and
// normalization errors when no mode applies.
ConicExtraction extract_conic(const TripleSystem& system, const SearchParams& params, std::uint64_t seed,
                              ModeChoice mode = ModeChoice::kAuto);

// Same pipeline, returning the degenerate outcome instead of throwing it.
ConicExtraction extract_conic_report(const TripleSystem& system, const SearchParams& params, std::uint64_t seed,
                                     ModeChoice mode = ModeChoice::kAuto);

using IndexPair = std::pair<Index, Index>;

struct DirectionInstance {
  std::vector<Index> hull_order;  // indices of A in counter-clockwise order
  std::vector<Index> near;        // A' (indices into A, ascending)
  std::vector<Index> far;         // A''
  HLine split = HLine::x_axis();
  std::vector<IndexPair> crossing;  // (index in A', index in A'') pairs of E, as A indices
  std::vector<HPoint> directions;   // C, in order of first appearance
  std::size_t e_directions = 0;     // distinct directions over all of E
  std::shared_ptr<const LabeledSets> sets;  // A := near, B := far, C := directions
  TripleSystem system;
};

// Throws kNotConvex.
DirectionInstance direction_instance(const std::vector<HPoint>& points, const std::vector<IndexPair>& pairs);

std::vector<IndexPair> all_pairs(std::size_t n);

struct FewDirectionsResult {
  DirectionInstance instance;
  std::vector<Index> filtered;  // A''' after the degree filter
  ConicExtraction first;
  ConicExtraction second;
  std::optional<Conic> conic;
  std::vector<Index> a_star;       // subset of A''' on the first conic
  std::vector<Index> a_star_star;  // subset of A' on the second conic
  std::vector<IndexPair> h;        // E restricted to A** x A*
};

// Throws kConicMismatch when the two extracted conics differ.
FewDirectionsResult convex_few_directions(const std::vector<HPoint>& points, const std::vector<IndexPair>& pairs,
                                          const SearchParams& params, std::uint64_t seed,
                                          ModeChoice mode = ModeChoice::kAuto);

}  // namespace ctri
