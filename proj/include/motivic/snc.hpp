#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "motivic/ring.hpp"

namespace motivic {

// One component E_i of a strict-normal-crossing special fiber: N_i is its
// multiplicity, omega_order the vanishing order of the gauge form along it.
struct SncComponent {
    std::string id;
    long long mult = 1;
    long long omega_order = 0;
};

// Class [U] of the ambient chart together with its dimension; only needed to
// form vanishing cycles.
struct SncAmbient {
    MotivicClass cls;
    long long dim_u = 0;
};

// Combinatorial resolution data.  Strata are keyed by sorted nonempty subsets
// of component ids; a missing subset is an empty stratum.
struct SncModel {
    long long reldim = 1;
    std::vector<SncComponent> components;
    std::map<std::vector<std::string>, MotivicClass> strata;
    std::optional<SncAmbient> ambient;
};

// Closed rational form of the volume Poincare series: each summand is
// coeff * prod_{i in J} L^{-mu_i} T^{N_i} / (1 - L^{-mu_i} T^{N_i}).
struct VolumeSeries {
    struct Summand {
        std::vector<std::string> subset;
        MotivicClass coeff;
        std::vector<std::pair<long long, long long>> factors; // (mu_i, N_i)
    };
    long long reldim = 1;
    std::vector<Summand> summands;
};

// Structural checks; throws ModelError.
void validate(const SncModel& model);

// Degree-m integral: L^{-d} sum_J (L-1)^{|J|-1} [strata_J] sum over k_i >= 1
// with sum k_i N_i = m of L^{-sum k_i mu_i}.  Compositions are enumerated
// exactly.
MotivicClass integral(const SncModel& model, long long m);

VolumeSeries volume_series(const SncModel& model);

// Exact coefficients of T^0..T^order (index = degree; T^0 is always zero).
std::vector<MotivicClass> expand(const VolumeSeries& series, long long order);

// Minus the T -> infinity limit of the volume series, taken factor by factor.
MotivicClass motivic_volume(const SncModel& model);

// sum_J (1-L)^{|J|-1} [strata_J].
MotivicClass nearby_cycle(const SncModel& model);

// L^{-dim_u/2} * (ambient - nearby_cycle); requires model.ambient.
MotivicClass vanishing_cycle(const SncModel& model);

// Volume of a product of open and closed unit balls: closed factors
// contribute 1, open factors L^{-1} each.
MotivicClass piece_volume(long long open_dims, long long closed_dims);

// The motivic volume of an annulus is zero.
MotivicClass annulus_volume();

} // namespace motivic
