#include <doctest.h>

#include <cmath>
#include <random>

#include "hypoexp/confluent.hpp"
#include "hypoexp/distribution.hpp"
#include "hypoexp/exp_polynomial.hpp"
#include "hypoexp/oracles.hpp"

#include "fd_oracle.hpp"

using namespace hypoexp;

TEST_CASE("aux_function is a single monomial term") {
    auto f1 = aux_function(1, 3.0);
    REQUIRE(f1.terms().size() == 1);
    CHECK(f1.terms().at(0) == 1.0);

    auto f3 = aux_function(3, 2.0);
    REQUIRE(f3.terms().size() == 1);
    CHECK(f3.terms().at(2) == 1.0);
    CHECK(f3.threshold() == 2.0);

    CHECK(aux_function(2, 1.0).evaluate(1.0) ==
          doctest::Approx(std::exp(-1.0)).epsilon(1e-15));

    CHECK_THROWS(aux_function(0, 1.0));
}

TEST_CASE("differentiate order zero is the identity") {
    auto f = aux_function(4, 1.5);
    auto same = differentiate(f, 0);
    CHECK(same.terms() == f.terms());
    CHECK(same.threshold() == f.threshold());
}

TEST_CASE("first derivative of P e^{-T/P} is e^{-T/P}(1 + T/P)") {
    const double t = 2.5;
    auto df = differentiate(aux_function(2, t), 1);
    REQUIRE(df.terms().size() == 2);
    CHECK(df.terms().at(0) == 1.0);
    CHECK(df.terms().at(-1) == t);
}

TEST_CASE("third derivative of P^3 e^{-1/P} at P=1 is 16/e") {
    // Richardson-extrapolated central differences give 5.8860712 here.
    const double got = differentiate(aux_function(4, 1.0), 3).evaluate(1.0);
    CHECK(got == doctest::Approx(16.0 * std::exp(-1.0)).epsilon(1e-14));

    auto direct = [](double p) { return std::pow(p, 3) * std::exp(-1.0 / p); };
    const double fd = hypoexp_tests::richardson_derivative(direct, 1.0, 3, 1e-3);
    CHECK(got == doctest::Approx(fd).epsilon(1e-7));
}

TEST_CASE("derivative_closed_form base cases") {
    CHECK(derivative_closed_form(1, 2.0, 3.0) ==
          doctest::Approx(std::exp(-1.5)).epsilon(1e-15));
    CHECK(derivative_closed_form(2, 1.0, 1.0) ==
          doctest::Approx(2.0 * std::exp(-1.0)).epsilon(1e-14));
    CHECK(derivative_closed_form(4, 1.0, 1.0) ==
          doctest::Approx(16.0 * std::exp(-1.0)).epsilon(1e-14));
    CHECK_THROWS(derivative_closed_form(0, 1.0, 1.0));
}

TEST_CASE("derivative engine matches the closed form for the (n-1)th derivative") {
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> dist(0.1, 10.0);
    for (std::size_t n = 1; n <= 8; ++n) {
        for (int trial = 0; trial < 20; ++trial) {
            const double s = dist(rng);
            const double t = dist(rng);
            const double engine = differentiate(aux_function(n, t), n - 1).evaluate(s);
            const double closed = derivative_closed_form(n, s, t);
            CHECK(engine == doctest::Approx(closed).epsilon(1e-12));
        }
    }
}

TEST_CASE("induction identity: d/dP f_{n-1}^{(n-2)} = e^{-T/P} T^{n-1} / P^n") {
    // Integer thresholds keep every coefficient an exact integer, so the
    // cancellation down to a single term must be exact, not approximate.
    for (double t : {1.0, 2.0, 3.0}) {
        for (std::size_t n = 2; n <= 8; ++n) {
            auto lhs = differentiate(aux_function(n - 1, t), n - 1);
            REQUIRE(lhs.terms().size() == 1);
            const int exponent = lhs.terms().begin()->first;
            const double coeff = lhs.terms().begin()->second;
            CHECK(exponent == -static_cast<int>(n));
            CHECK(coeff == std::pow(t, static_cast<double>(n - 1)));
        }
    }
}

TEST_CASE("differentiate matches finite differences at random points") {
    std::mt19937_64 rng(202);
    std::uniform_real_distribution<double> dist(0.5, 5.0);
    for (std::size_t n = 1; n <= 5; ++n) {
        const double t = dist(rng);
        for (std::size_t order = 1; order <= 3; ++order) {
            auto deriv = differentiate(aux_function(n, t), order);
            auto direct = [&](double p) {
                return std::pow(p, static_cast<double>(n) - 1.0) * std::exp(-t / p);
            };
            for (int trial = 0; trial < 5; ++trial) {
                const double p = dist(rng);
                // step large enough that the order-3 difference quotient
                // does not amplify roundoff past the tolerance
                const double fd = hypoexp_tests::richardson_derivative(direct, p, order, 1e-2);
                CHECK(deriv.evaluate(p) == doctest::Approx(fd).epsilon(1e-6));
            }
        }
    }
}

TEST_CASE("differentiate at most doubles the term count") {
    auto poly = aux_function(6, 2.0);
    for (int k = 0; k < 10; ++k) {
        auto next = poly.derivative();
        CHECK(next.terms().size() <= 2 * poly.terms().size());
        poly = next;
    }
}

TEST_CASE("confluent_survival: one node of multiplicity n is the Erlang tail") {
    for (std::size_t n : {1u, 2u, 5u}) {
        for (double t : {0.0, 1.0, 4.0}) {
            const double expected = survival_erlang(1.5, n, t).value;
            const double got = confluent_survival(NodeSystem({{1.5, n}}), t).value;
            CHECK(got == doctest::Approx(expected).epsilon(1e-13));
        }
    }
}

TEST_CASE("confluent_survival: all singletons is the distinct formula") {
    const double expected = survival_distinct(ScaleSet({1.0, 2.0}), 1.0).value;
    const double got = confluent_survival(NodeSystem({{1.0, 1}, {2.0, 1}}), 1.0).value;
    CHECK(got == doctest::Approx(expected).epsilon(1e-13));
    CHECK(got == doctest::Approx(0.84518187825382452).epsilon(1e-13));
}

TEST_CASE("confluent_survival mixed node agrees with the quadrature oracle") {
    const double got = confluent_survival(NodeSystem({{1.0, 2}, {2.0, 1}}), 1.0).value;
    const double quad = quadrature_survival(ScaleSet({1.0, 1.0, 2.0}), 1.0).value;
    CHECK(std::abs(got - quad) <= 1e-8);
}

TEST_CASE("divided differences converge to the repeated-node value") {
    for (std::size_t n = 2; n <= 4; ++n) {
        const double t = 1.3;
        const double repeated = confluent_survival(NodeSystem({{1.0, n}}), t).value;

        const double eps = 1e-6;
        std::vector<NodeSystem::Node> nodes;
        for (std::size_t i = 0; i < n; ++i) {
            nodes.push_back({1.0 + eps * static_cast<double>(i), 1});
        }
        const double spread = confluent_survival(NodeSystem(nodes), t).value;
        CHECK(std::abs(spread - repeated) / repeated <= 1e-6);
    }
}

TEST_CASE("node system validation") {
    CHECK_THROWS_AS(NodeSystem({{1.0, 1}, {1.0, 2}}), DuplicateScales);
    CHECK_THROWS(NodeSystem({{1.0, 0}}));
    CHECK_THROWS(NodeSystem({}));
    CHECK_THROWS_AS(NodeSystem({{-2.0, 1}}), NonPositiveScale);
}
