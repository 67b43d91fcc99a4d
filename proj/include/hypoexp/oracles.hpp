#ifndef HYPOEXP_ORACLES_HPP
#define HYPOEXP_ORACLES_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "hypoexp/constants.hpp"
#include "hypoexp/types.hpp"

// Independent reference implementations against which every closed-form
// path is validated: Monte Carlo sampling of the sum, and recursive
// adaptive quadrature of the defining nested integral.

namespace hypoexp {

/// Monte Carlo tail estimate with binomial uncertainty. Identical
/// (scales, p_tot, seed, count) inputs reproduce the identical estimate
/// bit for bit on any platform.
struct TailEstimate {
    double estimate;      // in [0,1]
    double std_error;     // sqrt(estimate * (1 - estimate) / n_samples)
    std::size_t n_samples;
    std::uint64_t seed;
};

/// `count` independent draws of sum_i X_i, X_i ~ Exponential(mean scale_i),
/// by inverse CDF: X_i = -scale_i * ln(U), U uniform on (0,1].
///
/// Generator: std::mt19937_64 seeded with `seed`; its raw 64-bit output is
/// fully specified by the C++ standard, so streams are platform-independent.
/// Uniforms are U = 1 - (x >> 11) * 2^-53, which lies in (0,1].
std::vector<double> sample_sum(const ScaleSet& scales, std::uint64_t seed,
                               std::size_t count);

/// Fraction of sampled sums >= p_tot. Requires count >= 1000.
TailEstimate monte_carlo_tail(const ScaleSet& scales, double p_tot,
                              std::uint64_t seed, std::size_t count);

/// Nested-integral evaluation of the survival function by recursive
/// adaptive Gauss-Kronrod 7/15 quadrature, one nesting level per variable
/// with per-level tolerance abs_tol / n. Only n <= 4 (cost grows
/// exponentially with n); throws DimensionTooLarge beyond that and
/// ToleranceNotAchieved rather than returning a silently wrong answer.
TailProbability quadrature_survival(const ScaleSet& scales, double p_tot,
                                    double abs_tol = defaults::kQuadAbsTol);

namespace detail {
/// Adaptive GK15 on [a,b]; building block for the nested oracle, exposed
/// for the induction-step consistency tests.
double adaptive_gk15(const std::function<double(double)>& f, double a, double b,
                     double abs_tol);
}  // namespace detail

}  // namespace hypoexp

#endif
