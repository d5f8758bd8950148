#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "motivic/ring.hpp"

namespace motivic {

using Box = std::array<int, 3>;

// Finite downward-closed set of boxes in Z^3_{>=0}; the torus-fixed points of
// the Hilbert scheme of points on affine 3-space.
struct PlanePartition {
    std::vector<Box> boxes; // sorted lexicographically

    int size() const { return static_cast<int>(boxes.size()); }
    bool contains(const Box& b) const;
    bool downward_closed() const;
    std::string str() const;
};

// Monomial ideal of finite colength whose standard monomials are the boxes of
// `partition`.
struct MonomialIdeal {
    PlanePartition partition;
    std::vector<Box> generators; // minimal, sorted
    int colength = 0;
};

// Z^3-graded tangent directions at a monomial ideal: weight -> multiplicity.
struct TangentCharacter {
    std::map<Box, long long> weights;
    long long dimension() const;
};

struct CompareRow {
    int n = 0;
    MotivicClass bbs;
    Int euler_bbs;
    // The localization side exists only when the action is generic on every
    // size-n partition; a non-generic row records the first failure instead.
    bool generic = false;
    std::string failure;
    MotivicClass conjecture;
    bool refined_equal = false;
    Int euler_conjecture;
    Int signed_index_sum; // sum over partitions of (-1)^{index}
    bool euler_equal = false;
    bool euler_consistent = false;
};

struct CompareReport {
    std::vector<CompareRow> rows;
    // 0 all coefficients equal, 10 Euler-equal only, 11 some Euler differs,
    // 2 some row hit a non-generic action.
    int status = 0;
};

// Enumeration bound (default 12); override with MOTIVIC_MAX_BOXES.
int partition_box_bound();

// Worker count for per-partition work (default: hardware); override with
// MOTIVIC_THREADS.  Results are aggregated by index, so the output does not
// depend on the count.
int worker_count();

// All plane partitions of size exactly n, in a fixed lexicographic order.
std::vector<PlanePartition> enumerate_plane_partitions(int n);

// Coefficients of prod_{m>=1} (1-q^m)^{-m} for q^1..q^order; the independent
// count of plane partitions by size.
std::vector<Int> macmahon_counts(int order);

MonomialIdeal monomial_ideal(const PlanePartition& p);

// Graded dimension of Hom(I, S/I) at the monomial ideal of `p`, by exact
// per-weight linear algebra over the pairwise syzygy constraints.
TangentCharacter tangent_character(const PlanePartition& p);

// Virtual index of the one-parameter subgroup t -> (t^a, t^b, t^c) at `p`.
// Throws NonGenericAction listing the weights that pair to zero.
long long index_of(const PlanePartition& p, long long a, long long b, long long c);

// Coefficients of T^0..T^order of the refined degree-zero DT series
// prod_{m>=1} prod_{k=0}^{m-1} (1 - L^{k+2-m/2} T^m)^{-1}.
std::vector<MotivicClass> bbs_series(int order);

// Coefficient of T^n is sum over |P| = n of L^{-index_of(P,a,b,c)/2}.
std::vector<MotivicClass> conjecture_series(int order, long long a, long long b, long long c);

// Per-degree diff of the two series together with Euler specializations.
CompareReport compare_series(int order, long long a, long long b, long long c);

} // namespace motivic
