#include "hypoexp/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "hypoexp/confluent.hpp"
#include "hypoexp/errors.hpp"

namespace hypoexp {

TailProbability survival_distinct(const ScaleSet& scales, double p_tot) {
    detail::validate_threshold(p_tot);
    const auto& s = scales.scales();
    const std::size_t n = s.size();

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (s[i] == s[j]) {
                throw DuplicateScales("scales " + std::to_string(i) + " and " +
                                      std::to_string(j) +
                                      " are equal; use the confluent path");
            }
        }
    }

    if (n == 1) {
        return TailProbability::from_raw(std::exp(-p_tot / s[0]));
    }
    if (p_tot == 0.0) {
        return TailProbability::from_raw(1.0);
    }

    // Canonical evaluation order, so permutations of the input produce
    // bit-identical results.
    std::vector<double> sorted = s;
    std::sort(sorted.begin(), sorted.end());

    std::vector<double> terms(n);
    for (std::size_t i = 0; i < n; ++i) {
        double denom = 1.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i) denom *= sorted[i] - sorted[j];
        }
        terms[i] = std::pow(sorted[i], static_cast<double>(n - 1)) *
                   std::exp(-p_tot / sorted[i]) / denom;
    }

    // Alternating-sign sum; accumulate small magnitudes first.
    std::sort(terms.begin(), terms.end(),
              [](double a, double b) { return std::abs(a) < std::abs(b); });
    double sum = std::accumulate(terms.begin(), terms.end(), 0.0);
    return TailProbability::from_raw(sum);
}

TailProbability survival_erlang(double scale, std::size_t n, double p_tot) {
    detail::validate_scale(scale);
    detail::validate_threshold(p_tot);
    if (n == 0) {
        throw NonPositiveScale("n must be at least 1");
    }
    if (p_tot == 0.0) {
        return TailProbability::from_raw(1.0);
    }

    const double x = p_tot / scale;
    double term = 1.0;  // x^i / i!, built incrementally
    double sum = 1.0;
    for (std::size_t i = 1; i < n; ++i) {
        term *= x / static_cast<double>(i);
        sum += term;
    }
    return TailProbability::from_raw(std::exp(-x) * sum);
}

ClusterPartition cluster_scales(const ScaleSet& scales, double rel_tol) {
    if (!(rel_tol >= 0.0)) {
        throw NegativeThreshold("rel_tol must be nonnegative");
    }

    std::vector<std::size_t> order(scales.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return scales[a] < scales[b];
    });

    ClusterPartition partition;
    partition.rel_tol = rel_tol;
    for (std::size_t idx : order) {
        const double s = scales[idx];
        if (!partition.clusters.empty()) {
            double prev = scales[partition.clusters.back().member_indices.back()];
            if (s - prev <= rel_tol * std::max(s, prev)) {
                partition.clusters.back().member_indices.push_back(idx);
                continue;
            }
        }
        partition.clusters.push_back({s, {idx}});
    }

    for (Cluster& c : partition.clusters) {
        double mean = 0.0;
        for (std::size_t idx : c.member_indices) mean += scales[idx];
        c.representative_scale = mean / static_cast<double>(c.multiplicity());
    }
    return partition;
}

DispatchPath dispatch_path(const ClusterPartition& partition) {
    if (partition.single_cluster()) return DispatchPath::erlang;
    if (partition.all_singletons()) return DispatchPath::distinct;
    return DispatchPath::confluent;
}

TailProbability survival(const ScaleSet& scales, double p_tot, double rel_tol) {
    detail::validate_threshold(p_tot);
    if (p_tot == 0.0) {
        return TailProbability::from_raw(1.0);
    }
    if (scales.size() == 1) {
        return TailProbability::from_raw(std::exp(-p_tot / scales[0]));
    }

    ClusterPartition partition = cluster_scales(scales, rel_tol);
    if (partition.single_cluster()) {
        return survival_erlang(partition.clusters.front().representative_scale,
                               scales.size(), p_tot);
    }
    // Both the all-singleton and the mixed-cluster cases go through the
    // confluent evaluator: for separated singletons it reproduces the
    // distinct-scale formula, and its narrow-span handling stays accurate
    // for scales too close for that formula but too far apart to cluster.
    return confluent_survival(NodeSystem::from_partition(partition), p_tot);
}

}  // namespace hypoexp
