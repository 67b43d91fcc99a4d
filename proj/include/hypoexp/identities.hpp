#ifndef HYPOEXP_IDENTITIES_HPP
#define HYPOEXP_IDENTITIES_HPP

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hypoexp/errors.hpp"

// Exact-arithmetic verification of the symmetric-polynomial identities
// behind the closed-form tail. Floating point is forbidden in this module:
// every check is exact, so each passing test is a proof instance.

namespace hypoexp {

/// Arbitrary-precision exact rational, always in lowest terms with positive
/// denominator.
using Rational = boost::multiprecision::cpp_rational;

/// Pairwise-distinct rationals, length >= 2.
class DistinctTuple {
  public:
    explicit DistinctTuple(std::vector<Rational> values);

    const std::vector<Rational>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    const Rational& operator[](std::size_t i) const { return values_[i]; }

  private:
    std::vector<Rational> values_;
};

/// S_{n+1} = sum_i x_i^n / prod_{j != i} (x_i - x_j)  over n+1 values.
/// Identity: always equals 1.
Rational lemma_sum(const DistinctTuple& xs);

/// A_n = sum_i (-1)^{i+1} x_i^n prod_{j<k; j,k != i} (x_j - x_k).
Rational alternating_poly(const DistinctTuple& xs);

/// B_n = V_n = prod_{j<k} (x_j - x_k). Accepts duplicated values (gives 0).
Rational vandermonde(const std::vector<Rational>& xs);

/// Coefficient of f^{(l)} in the coalescing-scales expansion, for n-1
/// distinct nonzero perturbations eps. Identities:
///   l = 0:              1/prod_j((-1)^{n-1} eps_j) + sum_i 1/(eps_i prod_{j!=i}(eps_i - eps_j)) = 0
///   1 <= l <= n-2:      sum_i eps_i^l / (eps_i prod_{j!=i}(eps_i - eps_j)) = 0
///   l = n-1:            same sum = 1
Rational epsilon_coefficient_sum(const DistinctTuple& eps, std::size_t l);

}  // namespace hypoexp

#endif
