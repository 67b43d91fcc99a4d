#ifndef HYPOEXP_EXP_POLYNOMIAL_HPP
#define HYPOEXP_EXP_POLYNOMIAL_HPP

#include <cstddef>
#include <map>

#include "hypoexp/types.hpp"

namespace hypoexp {

/// Exact coefficient representation of  e^{-T/P} * sum_m c_m P^m  with
/// integer exponents m (possibly negative). The family is closed under
/// d/dP:
///
///   d/dP [e^{-T/P} P^m] = e^{-T/P} (m P^{m-1} + T P^{m-2})
///
/// so arbitrary-order derivatives stay in coefficient form, exact to
/// rounding.
class ExpPolynomial {
  public:
    ExpPolynomial(double threshold, std::map<int, double> terms);

    double threshold() const { return threshold_; }
    const std::map<int, double>& terms() const { return terms_; }

    /// Value at P > 0.
    double evaluate(double p) const;

    /// One application of the term rewrite above.
    ExpPolynomial derivative() const;

  private:
    double threshold_;
    std::map<int, double> terms_;  // exponent -> coefficient, zeros dropped
};

/// The auxiliary function f_n(P) = P^{n-1} e^{-p_tot/P}: a single term with
/// exponent n-1 and coefficient 1.
ExpPolynomial aux_function(std::size_t n, double p_tot);

/// `order` applications of ExpPolynomial::derivative.
ExpPolynomial differentiate(const ExpPolynomial& poly, std::size_t order);

/// Closed form for the (n-1)-th derivative of f_n at `scale`:
///   (n-1)! e^{-p_tot/scale} sum_{i=0}^{n-1} (p_tot/scale)^i / i!
double derivative_closed_form(std::size_t n, double scale, double p_tot);

}  // namespace hypoexp

#endif
