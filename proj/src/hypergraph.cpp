#include "ctri/hypergraph.hpp"

#include "ctri/error.hpp"

#include <algorithm>
#include <string>

namespace ctri {

namespace {

int pair_slot(Part p, Part q) {
  if (p > q) std::swap(p, q);
  if (p == Part::kA && q == Part::kB) return 0;
  if (p == Part::kA && q == Part::kC) return 1;
  return 2;
}

}  // namespace

Hypergraph3::Hypergraph3(std::size_t na, std::size_t nb, std::size_t nc, std::vector<Edge> edges)
    : n_{na, nb, nc}, edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (const auto& e : edges_)
    if (e.a >= na || e.b >= nb || e.c >= nc)
      throw Error(ErrorCode::kInvalidArgument, "edge (" + std::to_string(e.a) + "," + std::to_string(e.b) + "," +
                                                   std::to_string(e.c) + ") out of range");

  for (int p = 0; p < 3; ++p) {
    std::vector<std::size_t> degree(n_[p] + 1, 0);
    for (const auto& e : edges_) ++degree[vertex_of(e, Part(p)).index + 1];
    for (std::size_t i = 1; i < degree.size(); ++i) degree[i] += degree[i - 1];
    offsets_[p] = degree;
    incidence_[p].resize(edges_.size());
    std::vector<std::size_t> fill(degree.begin(), degree.end() - 1);
    for (EdgeId id = 0; id < edges_.size(); ++id) incidence_[p][fill[vertex_of(edges_[id], Part(p)).index]++] = id;
  }
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    const auto& e = edges_[id];
    pairs_[0].try_emplace(pair_key(e.a, e.b), id);
    pairs_[1].try_emplace(pair_key(e.a, e.c), id);
    pairs_[2].try_emplace(pair_key(e.b, e.c), id);
  }
}

std::span<const EdgeId> Hypergraph3::incident(Part p, Index v) const {
  int k = static_cast<int>(p);
  if (v >= n_[k]) return {};
  return std::span<const EdgeId>(incidence_[k]).subspan(offsets_[k][v], offsets_[k][v + 1] - offsets_[k][v]);
}

std::optional<EdgeId> Hypergraph3::edge_with(const Vertex& u, const Vertex& v) const {
  if (u.part == v.part) return std::nullopt;
  const Vertex& lo = u.part < v.part ? u : v;
  const Vertex& hi = u.part < v.part ? v : u;
  const auto& map = pairs_[pair_slot(u.part, v.part)];
  auto it = map.find(pair_key(lo.index, hi.index));
  if (it == map.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> Hypergraph3::find(const Edge& e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<EdgeId>(it - edges_.begin());
}

std::optional<std::pair<EdgeId, EdgeId>> Hypergraph3::first_nonlinear_pair() const {
  std::optional<std::pair<EdgeId, EdgeId>> best;
  for (int p = 0; p < 3; ++p) {
    for (Index v = 0; v < n_[p]; ++v) {
      auto inc = incident(Part(p), v);
      for (std::size_t i = 0; i < inc.size(); ++i)
        for (std::size_t j = i + 1; j < inc.size(); ++j)
          if (shared_vertices(edges_[inc[i]], edges_[inc[j]]) >= 2) {
            std::pair<EdgeId, EdgeId> cand{inc[i], inc[j]};
            if (!best || cand < *best) best = cand;
          }
    }
  }
  return best;
}

Hypergraph3 Hypergraph3::subgraph(std::span<const EdgeId> ids) const {
  std::vector<Edge> kept;
  kept.reserve(ids.size());
  for (auto id : ids) kept.push_back(edges_[id]);
  return Hypergraph3(n_[0], n_[1], n_[2], std::move(kept));
}

}  // namespace ctri
