#include "hypoexp/oracles.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "hypoexp/errors.hpp"

namespace hypoexp {

std::vector<double> sample_sum(const ScaleSet& scales, std::uint64_t seed,
                               std::size_t count) {
    if (count == 0) {
        throw std::invalid_argument("count must be at least 1");
    }
    std::mt19937_64 rng(seed);
    std::vector<double> sums(count);
    for (double& out : sums) {
        double sum = 0.0;
        for (double s : scales.scales()) {
            // U in (0,1]; raw mt19937_64 output keeps the stream
            // platform-independent.
            const double u = 1.0 - static_cast<double>(rng() >> 11) * 0x1.0p-53;
            sum += -s * std::log(u);
        }
        out = sum;
    }
    return sums;
}

TailEstimate monte_carlo_tail(const ScaleSet& scales, double p_tot,
                              std::uint64_t seed, std::size_t count) {
    detail::validate_threshold(p_tot);
    if (count < 1000) {
        throw std::invalid_argument("count must be at least 1000");
    }
    const std::vector<double> sums = sample_sum(scales, seed, count);
    std::size_t hits = 0;
    for (double s : sums) {
        if (s >= p_tot) ++hits;
    }
    const double estimate = static_cast<double>(hits) / static_cast<double>(count);
    const double std_error =
        std::sqrt(estimate * (1.0 - estimate) / static_cast<double>(count));
    return {estimate, std_error, count, seed};
}

namespace detail {

namespace {

// 15-point Kronrod rule with embedded 7-point Gauss (QUADPACK constants),
// positive half of [-1,1].
constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct PanelResult {
    double kronrod;
    double error;
};

PanelResult gk15_panel(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    double kronrod = 0.0;
    double gauss = 0.0;
    for (std::size_t i = 0; i < 8; ++i) {
        const double offset = half * kKronrodNodes[i];
        double fsum = f(center - offset);
        if (i < 7) fsum += f(center + offset);
        kronrod += kKronrodWeights[i] * fsum;
        if (i % 2 == 1) gauss += kGaussWeights[i / 2] * fsum;
    }
    kronrod *= half;
    gauss *= half;
    return {kronrod, std::abs(kronrod - gauss)};
}

double adaptive_gk15_impl(const std::function<double(double)>& f, double a,
                          double b, double abs_tol, int depth) {
    const PanelResult panel = gk15_panel(f, a, b);
    if (panel.error <= abs_tol) {
        return panel.kronrod;
    }
    if (depth >= 40) {
        throw ToleranceNotAchieved("quadrature tolerance " + std::to_string(abs_tol) +
                                   " not achieved on [" + std::to_string(a) + ", " +
                                   std::to_string(b) + "]");
    }
    const double mid = 0.5 * (a + b);
    return adaptive_gk15_impl(f, a, mid, 0.5 * abs_tol, depth + 1) +
           adaptive_gk15_impl(f, mid, b, 0.5 * abs_tol, depth + 1);
}

}  // namespace

double adaptive_gk15(const std::function<double(double)>& f, double a, double b,
                     double abs_tol) {
    if (b <= a) return 0.0;
    return adaptive_gk15_impl(f, a, b, abs_tol, 0);
}

}  // namespace detail

namespace {

// Probability mass of "partial sum from level onward is < budget": one
// quadrature level per variable, the integrand carrying the next level's
// value.
double nested_cdf(const std::vector<double>& scales, std::size_t level,
                  double budget, double level_tol) {
    if (budget <= 0.0) return 0.0;
    const double s = scales[level];

    // The density mass beyond cutoff is below level_tol/4; truncating there
    // keeps panel counts bounded when budget >> s.
    const double cutoff = std::min(budget, s * std::log(4.0 / level_tol));

    const bool last = level + 1 == scales.size();
    auto integrand = [&](double x) {
        const double density = std::exp(-x / s) / s;
        return last ? density : density * nested_cdf(scales, level + 1, budget - x, level_tol);
    };
    return detail::adaptive_gk15(integrand, 0.0, cutoff, 0.5 * level_tol);
}

}  // namespace

TailProbability quadrature_survival(const ScaleSet& scales, double p_tot,
                                    double abs_tol) {
    detail::validate_threshold(p_tot);
    if (scales.size() > defaults::kQuadMaxDim) {
        throw DimensionTooLarge("nested quadrature supports at most " +
                                std::to_string(defaults::kQuadMaxDim) +
                                " scales, got " + std::to_string(scales.size()));
    }
    if (!(abs_tol >= 1e-10)) {
        throw std::invalid_argument("abs_tol must be at least 1e-10");
    }
    if (p_tot == 0.0) {
        return TailProbability::from_raw(1.0);
    }
    const double level_tol = abs_tol / static_cast<double>(scales.size());
    const double cdf = nested_cdf(scales.scales(), 0, p_tot, level_tol);
    return TailProbability::from_raw(1.0 - cdf);
}

}  // namespace hypoexp
