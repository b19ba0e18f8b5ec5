#pragma once

#include "ctri/geometry.hpp"
#include "ctri/hypergraph.hpp"

#include <array>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ctri {

/// Three labeled pointsets. A and B are finite; C is finite unless
/// c_at_infinity is set, in which case every C point is a direction.
struct LabeledSets {
  std::vector<HPoint> a;
  std::vector<HPoint> b;
  std::vector<HPoint> c;
  bool c_at_infinity = false;

  const std::vector<HPoint>& set(Part p) const;
  std::vector<HPoint>& set(Part p);
  const HPoint& point(const Vertex& v) const { return set(v.part)[v.index]; }

  // Throws kInvalidArgument on repeated points or misplaced points at infinity.
  void validate() const;
};

class TripleSystem {
 public:
  TripleSystem() : sets_(std::make_shared<LabeledSets>()) {}
  TripleSystem(std::shared_ptr<const LabeledSets> sets, Hypergraph3 graph);

  const LabeledSets& sets() const { return *sets_; }
  const std::shared_ptr<const LabeledSets>& sets_ptr() const { return sets_; }
  const Hypergraph3& graph() const { return graph_; }

  std::span<const Edge> edges() const { return graph_.edges(); }
  std::size_t num_edges() const { return graph_.num_edges(); }
  std::size_t size(Part p) const { return graph_.size(p); }

  // Same point sets, different edges.
  TripleSystem with_edges(std::vector<Edge> edges) const;

 private:
  std::shared_ptr<const LabeledSets> sets_;
  Hypergraph3 graph_;
};

// All collinear (a, b, c) triples via a per-a line index; O(|A|(|B|+|C|)) lookups.
TripleSystem build_triples(std::shared_ptr<const LabeledSets> sets, unsigned threads = 0);
TripleSystem build_triples(const LabeledSets& sets, unsigned threads = 0);
// Cubic reference enumeration.
TripleSystem build_triples_brute_force(std::shared_ptr<const LabeledSets> sets);

// Restricts to a chosen subset of geometric triples; throws
// kNonCollinearSelection naming the first non-collinear one.
TripleSystem build_triples_from_selection(std::shared_ptr<const LabeledSets> sets, std::vector<Edge> selection);

bool is_collinear_edge(const LabeledSets& sets, const Edge& e);

struct AvoidanceReport {
  bool ok = true;
  std::string violation;  // empty when ok

  explicit operator bool() const { return ok; }
};

AvoidanceReport mutually_avoiding(const LabeledSets& sets);
AvoidanceReport avoiding_one_sided(const LabeledSets& sets);

struct OrderReport {
  bool ok = true;
  int bullet = 0;  // 1: shared a, 2: shared b, 3: shared c
  std::optional<std::pair<Edge, Edge>> violation;

  explicit operator bool() const { return ok; }
};

// Brute force over all pairs of edges sharing a vertex:
//   shared a: j1 < j2 => k1 < k2
//   shared b: i1 > i2 => k1 < k2
//   shared c: i1 < i2 => j1 < j2
OrderReport verify_order(const Hypergraph3& graph);

struct OrderingCertificate {
  // permutation[p][new_index] = old_index
  std::array<std::vector<Index>, 3> permutation;
  OrderReport report;
};

struct OrderedSystem {
  TripleSystem system;
  OrderingCertificate certificate;
};

// Reorders the three sets so verify_order holds; throws kNoValidOrdering.
OrderedSystem canonical_order(const TripleSystem& system);

}  // namespace ctri
