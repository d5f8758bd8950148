#include "motivic/snc.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace motivic {

void validate(const SncModel& model) {
    if (model.reldim < 1) throw ModelError("reldim must be >= 1");
    std::set<std::string> ids;
    for (const auto& c : model.components) {
        if (c.id.empty()) throw ModelError("component id must be nonempty");
        if (c.mult < 1) throw ModelError("component '" + c.id + "': multiplicity must be >= 1");
        if (!ids.insert(c.id).second) throw ModelError("duplicate component id '" + c.id + "'");
    }
    for (const auto& [subset, cls] : model.strata) {
        if (subset.empty()) throw ModelError("stratum subset must be nonempty");
        std::set<std::string> seen;
        for (const auto& id : subset) {
            if (!ids.count(id)) throw ModelError("stratum references unknown component '" + id + "'");
            if (!seen.insert(id).second)
                throw ModelError("stratum subset repeats component '" + id + "'");
        }
        if (!std::is_sorted(subset.begin(), subset.end()))
            throw ModelError("stratum subset keys must be sorted");
        (void)cls;
    }
}

namespace {

const SncComponent& component_by_id(const SncModel& model, const std::string& id) {
    for (const auto& c : model.components)
        if (c.id == id) return c;
    throw ModelError("unknown component '" + id + "'");
}

MotivicClass lminus1_power(long long e) {
    return pow_class(MotivicClass::lefschetz(HalfInt::whole(1)) - MotivicClass::one(), e);
}

MotivicClass oneminusl_power(long long e) {
    return pow_class(MotivicClass::one() - MotivicClass::lefschetz(HalfInt::whole(1)), e);
}

} // namespace

MotivicClass integral(const SncModel& model, long long m) {
    validate(model);
    if (m < 1) throw ModelError("integral: m must be >= 1");

    MotivicClass total;
    for (const auto& [subset, cls] : model.strata) {
        if (cls.is_zero()) continue;
        std::vector<long long> mult, ord;
        for (const auto& id : subset) {
            const auto& c = component_by_id(model, id);
            mult.push_back(c.mult);
            ord.push_back(c.omega_order);
        }

        // All (k_i >= 1) with sum k_i N_i = m.
        MotivicClass inner;
        std::function<void(std::size_t, long long, long long)> walk =
            [&](std::size_t pos, long long left, long long mu_sum) {
                if (pos + 1 == subset.size()) {
                    if (left >= mult[pos] && left % mult[pos] == 0) {
                        long long k = left / mult[pos];
                        inner += MotivicClass::lefschetz(HalfInt::whole(-(mu_sum + k * ord[pos])));
                    }
                    return;
                }
                for (long long k = 1; k * mult[pos] <= left - static_cast<long long>(subset.size() - pos - 1); ++k)
                    walk(pos + 1, left - k * mult[pos], mu_sum + k * ord[pos]);
            };
        walk(0, m, 0);
        if (inner.is_zero()) continue;

        total += MotivicClass::lefschetz(HalfInt::whole(-model.reldim))
                     .smash(lminus1_power(static_cast<long long>(subset.size()) - 1))
                     .smash(cls)
                     .smash(inner);
    }
    return total;
}

VolumeSeries volume_series(const SncModel& model) {
    validate(model);
    VolumeSeries series;
    series.reldim = model.reldim;
    for (const auto& [subset, cls] : model.strata) {
        if (cls.is_zero()) continue;
        VolumeSeries::Summand s;
        s.subset = subset;
        s.coeff = MotivicClass::lefschetz(HalfInt::whole(-model.reldim))
                      .smash(lminus1_power(static_cast<long long>(subset.size()) - 1))
                      .smash(cls);
        for (const auto& id : subset) {
            const auto& c = component_by_id(model, id);
            s.factors.emplace_back(c.omega_order, c.mult);
        }
        series.summands.push_back(std::move(s));
    }
    return series;
}

std::vector<MotivicClass> expand(const VolumeSeries& series, long long order) {
    if (order < 1) throw ModelError("expand: order must be >= 1");
    std::vector<MotivicClass> out(order + 1);
    for (const auto& s : series.summands) {
        // prod_i sum_{k>=1} L^{-k mu_i} T^{k N_i}, truncated at T^order.
        std::vector<MotivicClass> poly(order + 1);
        poly[0] = MotivicClass::one();
        for (const auto& [mu, n] : s.factors) {
            std::vector<MotivicClass> next(order + 1);
            for (long long deg = 0; deg <= order; ++deg) {
                if (poly[deg].is_zero()) continue;
                for (long long k = 1; deg + k * n <= order; ++k)
                    next[deg + k * n] +=
                        poly[deg].smash(MotivicClass::lefschetz(HalfInt::whole(-k * mu)));
            }
            poly = std::move(next);
        }
        for (long long deg = 1; deg <= order; ++deg)
            if (!poly[deg].is_zero()) out[deg] += s.coeff.smash(poly[deg]);
    }
    return out;
}

MotivicClass motivic_volume(const SncModel& model) {
    // Each geometric factor tends to -1 as T grows; the volume is minus the
    // resulting limit.
    VolumeSeries series = volume_series(model);
    MotivicClass limit;
    for (const auto& s : series.summands) {
        MotivicClass v = s.coeff;
        for (std::size_t i = 0; i < s.factors.size(); ++i)
            v = v.smash(MotivicClass::integer(-1));
        limit += v;
    }
    return -limit;
}

MotivicClass nearby_cycle(const SncModel& model) {
    validate(model);
    MotivicClass total;
    for (const auto& [subset, cls] : model.strata) {
        if (cls.is_zero()) continue;
        total += oneminusl_power(static_cast<long long>(subset.size()) - 1).smash(cls);
    }
    return total;
}

MotivicClass vanishing_cycle(const SncModel& model) {
    validate(model);
    if (!model.ambient)
        throw ModelError("vanishing_cycle: model has no ambient class");
    return MotivicClass::lefschetz(HalfInt::halves(-model.ambient->dim_u))
        .smash(model.ambient->cls - nearby_cycle(model));
}

MotivicClass piece_volume(long long open_dims, long long closed_dims) {
    if (open_dims < 0 || closed_dims < 0)
        throw ModelError("piece_volume: dimensions must be nonnegative");
    (void)closed_dims; // closed factors have volume 1
    return MotivicClass::lefschetz(HalfInt::whole(-open_dims));
}

MotivicClass annulus_volume() { return MotivicClass(); }

} // namespace motivic
