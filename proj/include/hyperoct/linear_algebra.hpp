#pragma once

#include <cstddef>
#include <vector>

#include "hyperoct/rational.hpp"

namespace hyperoct {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Reduced row echelon form in place; returns the pivot columns in order.
// Zero rows are dropped.
std::vector<std::size_t> row_reduce(RationalMatrix& rows);

std::size_t matrix_rank(RationalMatrix rows);

}  // namespace hyperoct
