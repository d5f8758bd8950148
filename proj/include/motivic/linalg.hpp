#pragma once

#include <vector>

#include "motivic/ring.hpp"

namespace motivic {

using IntMatrix = std::vector<std::vector<Int>>;

// Rank of an integer matrix by fraction-free (Bareiss) elimination.
// All intermediate values stay integral; no floating point.
long long matrix_rank(IntMatrix m);

// Dimension of the solution space of M x = 0 with `cols` unknowns.
long long kernel_dimension(IntMatrix m, long long cols);

} // namespace motivic
