#pragma once

#include "ctri/rational.hpp"

#include <cstddef>
#include <vector>

namespace ctri {

using RatMatrix = std::vector<std::vector<Rat>>;

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(RatMatrix& m, std::size_t cols);

std::size_t rank(RatMatrix m, std::size_t cols);

// Basis of {v : m v = 0}, one vector per free column.
std::vector<std::vector<Rat>> nullspace(RatMatrix m, std::size_t cols);

}  // namespace ctri
