#pragma once

#include "ctri/curve.hpp"
#include "ctri/geometry.hpp"
#include "ctri/random.hpp"
#include "ctri/search.hpp"
#include "ctri/triple_system.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace ctri {

using SetsPtr = std::shared_ptr<const LabeledSets>;

// m x m integer grid split by a vertical line; C = directions of the crossing pairs.
SetsPtr gen_grid_with_directions(std::size_t m);

struct KSystemInstance {
  SetsPtr sets;
  KSystem expected;
};

// Offsets default to s_i = t_i = 3k(i-1)d. Throws kOverlappingBlocks.
KSystemInstance gen_ksystem(std::size_t k, const Rat& d = 1, std::optional<std::vector<Rat>> s = std::nullopt,
                            std::optional<std::vector<Rat>> t = std::nullopt);

struct ConicInstance {
  SetsPtr sets;
  Conic conic{std::array<Rat, 6>{0, 0, 0, 0, 0, 1}};
  PointTriple a_triple;
  std::vector<Index> samples;         // B indices of the sampled conic points
  std::vector<Index> second_centres;  // B indices where the a_triple branches meet
};

// A = T1 base triple then a_triple; C on the x-axis.
// Throws kDegenerateTriple (also for a reducible conic) and kNoRationalPoint.
ConicInstance gen_conic_instance(const PointTriple& a_triple, std::size_t n_b, std::uint64_t seed);

// A triple with small rational coordinates, off the axis, not degenerate and
// with an irreducible conic in either mode.
PointTriple random_triple(Rng& rng);

// Some rational point on the conic, searched over small heights.
std::optional<HPoint> find_rational_point(const Conic& conic);

inline const PointTriple kFigure8Triple{HPoint(Rat(5, 2), Rat(3, 2)), HPoint(5, 3), HPoint(Rat(7, 2), Rat(3, 2))};

// Base T1 triple plus the second triple; each position p contributes p, the
// concurrency point of the second triple's lines, and the three feet.
SetsPtr gen_degenerate_family(const std::vector<std::pair<Rat, Rat>>& positions,
                              const PointTriple& second = kFigure8Triple);

struct PascalInstance {
  SetsPtr sets;
  TicTacToe expected;
  Conic conic{std::array<Rat, 6>{0, 0, 0, 0, 0, 1}};
  std::array<HPoint, 6> hexagon;
};

// A = {P2, P4, P6}, B = {P1, P3, P5}, C = {X, Y, Z}.
PascalInstance gen_pascal_ttt(std::uint64_t seed);

// Three point rows with many collinear triples, moved by a projective map that
// keeps all hulls finite; certified by mutually_avoiding.
SetsPtr gen_mutually_avoiding(std::size_t n, std::uint64_t seed);

// A, C on y = 2 and y = 0 at random integer abscissae, B on y = 1 at random
// half-integers; (a, b, c) collinear iff x_a + x_c = 2 x_b.
SetsPtr gen_parallel_dense(std::size_t n, std::uint64_t seed);

std::vector<ApproxPoint> gen_ngon(std::size_t n);

// Powers of (3 + 4i)/5 on the unit circle: exact, convex, 2n - 3 chord directions.
std::vector<HPoint> gen_circle_points(std::size_t n);

// Random linear 3-partite system on at most max_class vertices per class.
Hypergraph3 gen_random_linear(std::size_t max_class, std::uint64_t seed);

}  // namespace ctri
