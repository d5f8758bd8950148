#include "motivic/localization.hpp"

namespace motivic {

long long virtual_index(std::span<const long long> weights) {
    long long index = 0;
    for (long long w : weights) {
        if (w == 0)
            throw NonGenericAction("zero-weight tangent direction: fixed point is not isolated");
        index += w > 0 ? 1 : -1;
    }
    return index;
}

MotivicClass localize(std::span<const FixedStratum> strata) {
    MotivicClass total;
    for (const auto& s : strata)
        total += MotivicClass::lefschetz(HalfInt::halves(-s.index)).smash(s.motive);
    return total;
}

MotivicClass isolated_sum(std::span<const long long> indices) {
    MotivicClass total;
    for (long long index : indices)
        total += MotivicClass::lefschetz(HalfInt::halves(-index));
    return total;
}

} // namespace motivic
