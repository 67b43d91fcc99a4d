#ifndef HYPOEXP_DISTRIBUTION_HPP
#define HYPOEXP_DISTRIBUTION_HPP

#include <cstddef>

#include "hypoexp/constants.hpp"
#include "hypoexp/types.hpp"

namespace hypoexp {

/// Survival function Prob(sum >= p_tot) for pairwise-distinct scales:
///
///   sum_i  s_i^{n-1} e^{-p_tot/s_i} / prod_{j != i} (s_i - s_j)
///
/// Terms are accumulated sorted by ascending magnitude to mitigate
/// cancellation in the alternating-sign sum. Loses significance when scales
/// are nearly equal; use survival() for the numerically stable dispatch.
///
/// Throws DuplicateScales if any two scales are bitwise equal.
TailProbability survival_distinct(const ScaleSet& scales, double p_tot);

/// Erlang tail: e^{-T/s} * sum_{i=0}^{n-1} (T/s)^i / i!, terms accumulated
/// incrementally so no factorial is ever formed.
TailProbability survival_erlang(double scale, std::size_t n, double p_tot);

/// Sorts the scales and greedily merges neighbors whose relative separation
/// is within rel_tol. With rel_tol = 0 clusters are sets of exactly equal
/// values. Clusters come back sorted ascending by representative scale.
ClusterPartition cluster_scales(const ScaleSet& scales, double rel_tol);

/// Stable survival function for arbitrary scales. Clusters the scales at
/// rel_tol and dispatches: all singletons -> distinct-scale formula; a
/// single cluster -> Erlang limit; otherwise the confluent
/// divided-difference path. Never singular for any valid input.
TailProbability survival(const ScaleSet& scales, double p_tot,
                         double rel_tol = defaults::kRelTol);

/// Which evaluation path survival() took.
enum class DispatchPath { distinct, erlang, confluent };

DispatchPath dispatch_path(const ClusterPartition& partition);

}  // namespace hypoexp

#endif
