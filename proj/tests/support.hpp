#pragma once

#include "ctri/geometry.hpp"
#include "ctri/hypergraph.hpp"
#include "ctri/random.hpp"

#include <set>
#include <vector>

namespace ctri::testing {

inline Rat rand_rat(Rng& rng, std::int64_t num = 20, std::int64_t den = 5) {
  return Rat(rng.between(-num, num), rng.between(1, den));
}

inline HPoint rand_point(Rng& rng, std::int64_t num = 20, std::int64_t den = 5) {
  return HPoint(rand_rat(rng, num, den), rand_rat(rng, num, den));
}

// Direct 3x3 determinant of affine points, no library predicates involved.
inline Rat det_points(const Rat& x1, const Rat& y1, const Rat& x2, const Rat& y2, const Rat& x3, const Rat& y3) {
  return (x2 - x1) * (y3 - y1) - (y2 - y1) * (x3 - x1);
}

// Naive (6,3) enumeration over all edge triples.
inline std::set<std::array<Edge, 3>> naive_663(const Hypergraph3& g) {
  std::set<std::array<Edge, 3>> out;
  auto es = g.edges();
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j)
      for (std::size_t k = j + 1; k < es.size(); ++k) {
        std::set<std::pair<int, Index>> v;
        for (const Edge* e : {&es[i], &es[j], &es[k]}) {
          v.insert({0, e->a});
          v.insert({1, e->b});
          v.insert({2, e->c});
        }
        if (v.size() == 6) out.insert({es[i], es[j], es[k]});
      }
  return out;
}

}  // namespace ctri::testing
