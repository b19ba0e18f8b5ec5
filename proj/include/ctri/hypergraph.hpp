#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ctri {

using Index = std::uint32_t;
using EdgeId = std::uint32_t;

/// One vertex per class: (a_i, b_j, c_k).
struct Edge {
  Index a = 0;
  Index b = 0;
  Index c = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class Part { kA = 0, kB = 1, kC = 2 };

/// Vertex of a 3-partite hypergraph: class plus index within the class.
struct Vertex {
  Part part = Part::kA;
  Index index = 0;

  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

inline Vertex vertex_of(const Edge& e, Part p) {
  switch (p) {
    case Part::kA: return {p, e.a};
    case Part::kB: return {p, e.b};
    case Part::kC: return {p, e.c};
  }
  return {p, e.a};
}

inline std::array<Vertex, 3> vertices_of(const Edge& e) {
  return {Vertex{Part::kA, e.a}, Vertex{Part::kB, e.b}, Vertex{Part::kC, e.c}};
}

inline bool contains(const Edge& e, const Vertex& v) { return vertex_of(e, v.part).index == v.index; }

// Number of vertices two edges share.
inline int shared_vertices(const Edge& x, const Edge& y) {
  return int(x.a == y.a) + int(x.b == y.b) + int(x.c == y.c);
}

/// 3-partite 3-uniform hypergraph with sorted, deduplicated edges and
/// per-vertex incidence lists. Immutable after construction.
class Hypergraph3 {
 public:
  Hypergraph3() = default;
  Hypergraph3(std::size_t na, std::size_t nb, std::size_t nc, std::vector<Edge> edges);

  std::size_t size_a() const { return n_[0]; }
  std::size_t size_b() const { return n_[1]; }
  std::size_t size_c() const { return n_[2]; }
  std::size_t size(Part p) const { return n_[static_cast<int>(p)]; }
  std::size_t num_edges() const { return edges_.size(); }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_[id]; }

  // Edge ids incident to a vertex, ascending.
  std::span<const EdgeId> incident(Part p, Index v) const;
  std::span<const EdgeId> incident(const Vertex& v) const { return incident(v.part, v.index); }

  // First edge containing both vertices, if any.
  std::optional<EdgeId> edge_with(const Vertex& u, const Vertex& v) const;
  std::optional<EdgeId> find(const Edge& e) const;

  bool linear() const { return !first_nonlinear_pair().has_value(); }
  std::optional<std::pair<EdgeId, EdgeId>> first_nonlinear_pair() const;

  Hypergraph3 subgraph(std::span<const EdgeId> ids) const;
  template <class Pred>
  Hypergraph3 filter(Pred keep) const {
    std::vector<Edge> kept;
    for (const auto& e : edges_)
      if (keep(e)) kept.push_back(e);
    return Hypergraph3(n_[0], n_[1], n_[2], std::move(kept));
  }

 private:
  static std::uint64_t pair_key(Index u, Index v) { return (std::uint64_t(u) << 32) | v; }

  std::array<std::size_t, 3> n_{0, 0, 0};
  std::vector<Edge> edges_;
  std::array<std::vector<std::size_t>, 3> offsets_;
  std::array<std::vector<EdgeId>, 3> incidence_;
  // (a,b), (a,c), (b,c) -> first edge id
  std::array<std::unordered_map<std::uint64_t, EdgeId>, 3> pairs_;
};

}  // namespace ctri
