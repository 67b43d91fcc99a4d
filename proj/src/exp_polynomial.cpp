#include "hypoexp/exp_polynomial.hpp"

#include <cmath>
#include <stdexcept>

namespace hypoexp {

ExpPolynomial::ExpPolynomial(double threshold, std::map<int, double> terms)
    : threshold_(threshold), terms_(std::move(terms)) {
    detail::validate_threshold(threshold_);
    std::erase_if(terms_, [](const auto& kv) { return kv.second == 0.0; });
}

double ExpPolynomial::evaluate(double p) const {
    detail::validate_scale(p);
    double poly = 0.0;
    for (const auto& [m, c] : terms_) {
        poly += c * std::pow(p, m);
    }
    return std::exp(-threshold_ / p) * poly;
}

ExpPolynomial ExpPolynomial::derivative() const {
    std::map<int, double> out;
    for (const auto& [m, c] : terms_) {
        if (m != 0) out[m - 1] += c * static_cast<double>(m);
        if (threshold_ != 0.0) out[m - 2] += c * threshold_;
    }
    return ExpPolynomial(threshold_, std::move(out));
}

ExpPolynomial aux_function(std::size_t n, double p_tot) {
    if (n == 0) {
        throw std::invalid_argument("n must be at least 1");
    }
    return ExpPolynomial(p_tot, {{static_cast<int>(n) - 1, 1.0}});
}

ExpPolynomial differentiate(const ExpPolynomial& poly, std::size_t order) {
    ExpPolynomial out = poly;
    for (std::size_t k = 0; k < order; ++k) {
        out = out.derivative();
    }
    return out;
}

double derivative_closed_form(std::size_t n, double scale, double p_tot) {
    if (n == 0) {
        throw std::invalid_argument("n must be at least 1");
    }
    detail::validate_scale(scale);
    detail::validate_threshold(p_tot);

    const double x = p_tot / scale;
    double term = 1.0;  // x^i / i!
    double sum = 1.0;
    double factorial = 1.0;  // (n-1)!
    for (std::size_t i = 1; i < n; ++i) {
        term *= x / static_cast<double>(i);
        sum += term;
        factorial *= static_cast<double>(i);
    }
    return factorial * std::exp(-x) * sum;
}

}  // namespace hypoexp
