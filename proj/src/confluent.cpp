#include "hypoexp/confluent.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "hypoexp/exp_polynomial.hpp"

namespace hypoexp {

NodeSystem::NodeSystem(std::vector<Node> nodes) : nodes_(std::move(nodes)), total_(0) {
    if (nodes_.empty()) {
        throw std::invalid_argument("node system must be nonempty");
    }
    std::sort(nodes_.begin(), nodes_.end(),
              [](const Node& a, const Node& b) { return a.scale < b.scale; });
    for (const Node& node : nodes_) {
        detail::validate_scale(node.scale);
        if (node.multiplicity == 0) {
            throw std::invalid_argument("node multiplicity must be at least 1");
        }
        total_ += node.multiplicity;
    }
    for (std::size_t i = 1; i < nodes_.size(); ++i) {
        if (nodes_[i].scale == nodes_[i - 1].scale) {
            throw DuplicateScales("node scales must be strictly distinct");
        }
    }
}

NodeSystem NodeSystem::from_partition(const ClusterPartition& partition) {
    std::vector<Node> nodes;
    nodes.reserve(partition.clusters.size());
    for (const Cluster& c : partition.clusters) {
        nodes.push_back({c.representative_scale, c.multiplicity()});
    }
    return NodeSystem(std::move(nodes));
}

namespace {

// Spans narrower than this fraction of their mean are evaluated by Taylor
// expansion instead of the difference recurrence, which would cancel.
constexpr double kNarrowSpanFraction = 0.1;
constexpr std::size_t kMaxTaylorTerms = 120;

// Divided difference f[z_i..z_j] of a narrow span by Taylor expansion
// around the span mean c:
//
//   f[z_i..z_j] = sum_{m>=0} f^{(k+m)}(c)/(k+m)! * h_m(z_i - c, ..., z_j - c)
//
// with k = j - i and h_m the complete homogeneous symmetric polynomial.
// Repeated nodes are the d = 0 special case, giving exactly f^{(k)}(c)/k!.
// Returns false if the series has not settled within the term budget.
bool narrow_span_dd(const std::vector<ExpPolynomial>& derivs,
                    const std::vector<double>& z, std::size_t i, std::size_t j,
                    double center, double& out) {
    const std::size_t k = j - i;

    // h_m via  h_m(d_1..d_p) = h_m(d_1..d_{p-1}) + d_p h_{m-1}(d_1..d_p)
    std::vector<double> h(kMaxTaylorTerms + 1, 0.0);
    h[0] = 1.0;
    for (std::size_t p = i; p <= j; ++p) {
        const double d = z[p] - center;
        for (std::size_t m = 1; m <= kMaxTaylorTerms; ++m) {
            h[m] += d * h[m - 1];
        }
    }

    double factorial = 1.0;  // (k+m)!
    for (std::size_t q = 2; q <= k; ++q) factorial *= static_cast<double>(q);

    // h_m can vanish by symmetry (h_1 does whenever the points straddle the
    // center evenly), so demand two consecutive negligible terms.
    double sum = 0.0;
    int small_streak = 0;
    for (std::size_t m = 0; m <= kMaxTaylorTerms; ++m) {
        if (m > 0) factorial *= static_cast<double>(k + m);
        if (k + m >= derivs.size()) break;
        const double term = derivs[k + m].evaluate(center) / factorial * h[m];
        sum += term;
        if (m > 0 && std::abs(term) <= 1e-18 * std::abs(sum)) {
            if (++small_streak == 2) {
                out = sum;
                return true;
            }
        } else {
            small_streak = 0;
        }
    }
    return false;
}

}  // namespace

TailProbability confluent_survival(const NodeSystem& nodes, double p_tot) {
    detail::validate_threshold(p_tot);
    const std::size_t n = nodes.total_multiplicity();
    if (p_tot == 0.0) {
        return TailProbability::from_raw(1.0);
    }

    // Expanded point list: node k repeated multiplicity_k times, adjacent.
    std::vector<double> z;
    z.reserve(n);
    for (const auto& node : nodes.nodes()) {
        z.insert(z.end(), node.multiplicity, node.scale);
    }

    // Derivatives of f_n in exact coefficient form, up to the order the
    // Taylor-evaluated narrow spans can request.
    std::vector<ExpPolynomial> derivs;
    derivs.reserve(n + kMaxTaylorTerms);
    derivs.push_back(aux_function(n, p_tot));
    for (std::size_t k = 1; k < n + kMaxTaylorTerms; ++k) {
        derivs.push_back(derivs.back().derivative());
    }

    // Confluent divided-difference table, in place; `table[i]` holds
    // f[z_i, ..., z_{i+level}] after `level` passes.
    std::vector<double> table(n);
    for (std::size_t i = 0; i < n; ++i) {
        table[i] = derivs[0].evaluate(z[i]);
    }
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = 0; i + level < n; ++i) {
            const std::size_t j = i + level;
            const double span = z[j] - z[i];
            const double center = 0.5 * (z[i] + z[j]);
            double value;
            if (span <= kNarrowSpanFraction * center &&
                narrow_span_dd(derivs, z, i, j, center, value)) {
                table[i] = value;
            } else {
                table[i] = (table[i + 1] - table[i]) / span;
            }
        }
    }
    return TailProbability::from_raw(table[0]);
}

}  // namespace hypoexp
