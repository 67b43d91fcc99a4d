#include "hypoexp/types.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hypoexp {

namespace detail {

void validate_scale(double scale) {
    if (!std::isfinite(scale) || scale <= 0.0) {
        throw NonPositiveScale("scale must be finite and strictly positive, got " +
                               std::to_string(scale));
    }
}

void validate_threshold(double p_tot) {
    if (!std::isfinite(p_tot) || p_tot < 0.0) {
        throw NegativeThreshold("p_tot must be finite and nonnegative, got " +
                                std::to_string(p_tot));
    }
}

}  // namespace detail

ScaleSet::ScaleSet(std::vector<double> scales) : scales_(std::move(scales)) {
    if (scales_.empty()) {
        throw NonPositiveScale("scale set must contain at least one scale");
    }
    for (double s : scales_) {
        detail::validate_scale(s);
    }
}

bool ClusterPartition::all_singletons() const {
    return std::all_of(clusters.begin(), clusters.end(),
                       [](const Cluster& c) { return c.multiplicity() == 1; });
}

TailProbability TailProbability::from_raw(double raw_value) {
    return {std::clamp(raw_value, 0.0, 1.0), raw_value};
}

}  // namespace hypoexp
