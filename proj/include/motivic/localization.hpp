#pragma once

#include <span>
#include <string>
#include <vector>

#include "motivic/ring.hpp"

namespace motivic {

// A torus-fixed stratum with its vanishing-cycle motive and virtual index.
struct FixedStratum {
    std::string name;
    MotivicClass motive;
    long long index = 0;
};

// (#positive weights) - (#negative weights).  Throws NonGenericAction on a
// zero weight: the point is not isolated under that one-parameter subgroup.
long long virtual_index(std::span<const long long> weights);

// sum_i L^{-index_i/2} * motive_i.
MotivicClass localize(std::span<const FixedStratum> strata);

// sum L^{-index/2} over isolated fixed points.
MotivicClass isolated_sum(std::span<const long long> indices);

} // namespace motivic
