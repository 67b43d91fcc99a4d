#ifndef HYPOEXP_TYPES_HPP
#define HYPOEXP_TYPES_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "hypoexp/errors.hpp"

namespace hypoexp {

/// Ordered list of expected values (exponential scales). Full
/// parameterization of the distribution of the sum. Order is preserved as
/// given; all semantics are permutation-invariant.
class ScaleSet {
  public:
    explicit ScaleSet(std::vector<double> scales);

    const std::vector<double>& scales() const { return scales_; }
    std::size_t size() const { return scales_.size(); }
    double operator[](std::size_t i) const { return scales_[i]; }

  private:
    std::vector<double> scales_;
};

/// One cluster of (numerically) equal scales.
struct Cluster {
    double representative_scale;              // arithmetic mean of members
    std::vector<std::size_t> member_indices;  // indices into the original ScaleSet

    std::size_t multiplicity() const { return member_indices.size(); }
};

/// Partition of scale indices into clusters of nearly equal scales,
/// sorted ascending by representative scale.
struct ClusterPartition {
    std::vector<Cluster> clusters;
    double rel_tol = 0.0;

    bool all_singletons() const;
    bool single_cluster() const { return clusters.size() == 1; }
};

/// Survival probability, clamped to [0,1]. `raw` keeps the unclamped value
/// for diagnostics (the distinct-scale formula can stray outside [0,1]
/// through rounding, or lose all significance for near-equal scales).
struct TailProbability {
    double value;
    double raw;

    bool clamped() const { return value != raw; }

    static TailProbability from_raw(double raw_value);

    operator double() const { return value; }
};

namespace detail {
void validate_scale(double scale);
void validate_threshold(double p_tot);
}  // namespace detail

}  // namespace hypoexp

#endif
