#include "hypoexp/identities.hpp"

#include <stdexcept>
#include <string>

namespace hypoexp {

DistinctTuple::DistinctTuple(std::vector<Rational> values) : values_(std::move(values)) {
    if (values_.size() < 2) {
        throw std::invalid_argument("distinct tuple needs at least two values");
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        for (std::size_t j = i + 1; j < values_.size(); ++j) {
            if (values_[i] == values_[j]) {
                throw DuplicateValue("values " + std::to_string(i) + " and " +
                                     std::to_string(j) + " coincide");
            }
        }
    }
}

Rational lemma_sum(const DistinctTuple& xs) {
    const std::size_t count = xs.size();  // n + 1
    const std::size_t n = count - 1;

    Rational sum = 0;
    for (std::size_t i = 0; i < count; ++i) {
        Rational numer = 1;
        for (std::size_t p = 0; p < n; ++p) numer *= xs[i];
        Rational denom = 1;
        for (std::size_t j = 0; j < count; ++j) {
            if (j != i) denom *= xs[i] - xs[j];
        }
        sum += numer / denom;
    }
    return sum;
}

Rational alternating_poly(const DistinctTuple& xs) {
    const std::size_t count = xs.size();  // n + 1
    const std::size_t n = count - 1;

    Rational sum = 0;
    for (std::size_t i = 0; i < count; ++i) {
        Rational term = (i % 2 == 0) ? 1 : -1;  // (-1)^{i+1} with 1-based i
        for (std::size_t p = 0; p < n; ++p) term *= xs[i];
        for (std::size_t j = 0; j < count; ++j) {
            for (std::size_t k = j + 1; k < count; ++k) {
                if (j != i && k != i) term *= xs[j] - xs[k];
            }
        }
        sum += term;
    }
    return sum;
}

Rational vandermonde(const std::vector<Rational>& xs) {
    if (xs.size() < 2) {
        throw std::invalid_argument("vandermonde needs at least two values");
    }
    Rational product = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
        for (std::size_t k = j + 1; k < xs.size(); ++k) {
            product *= xs[j] - xs[k];
        }
    }
    return product;
}

Rational epsilon_coefficient_sum(const DistinctTuple& eps, std::size_t l) {
    const std::size_t count = eps.size();  // n - 1 perturbations
    const std::size_t n = count + 1;
    if (l > n - 1) {
        throw std::invalid_argument("derivative order l out of range [0, n-1]");
    }
    for (std::size_t i = 0; i < count; ++i) {
        if (eps[i] == 0) {
            throw std::invalid_argument("perturbations must be nonzero");
        }
    }

    // sum_i eps_i^l / (eps_i prod_{j != i} (eps_i - eps_j))
    Rational sum = 0;
    for (std::size_t i = 0; i < count; ++i) {
        Rational numer = 1;
        for (std::size_t p = 0; p < l; ++p) numer *= eps[i];
        Rational denom = eps[i];
        for (std::size_t j = 0; j < count; ++j) {
            if (j != i) denom *= eps[i] - eps[j];
        }
        sum += numer / denom;
    }

    if (l == 0) {
        // add the coefficient of f coming from the i = 1 term of the limit
        Rational denom = 1;
        for (std::size_t j = 0; j < count; ++j) {
            Rational factor = eps[j];
            if (n % 2 == 0) factor = -factor;  // (-1)^{n-1} eps_j
            denom *= factor;
        }
        sum += Rational(1) / denom;
    }
    return sum;
}

}  // namespace hypoexp
