#include <doctest.h>

#include <random>
#include <vector>

#include "hypoexp/identities.hpp"

using namespace hypoexp;

namespace {

Rational random_rational(std::mt19937_64& rng, bool nonzero) {
    std::uniform_int_distribution<long> numer(1, 1'000'000);
    std::uniform_int_distribution<long> denom(1, 1'000'000);
    std::bernoulli_distribution flip(0.5);
    long p = numer(rng);
    if (flip(rng)) p = -p;
    (void)nonzero;  // numerators start at 1
    return Rational(p, denom(rng));
}

std::vector<Rational> random_distinct(std::mt19937_64& rng, std::size_t count) {
    std::vector<Rational> values;
    while (values.size() < count) {
        Rational r = random_rational(rng, true);
        bool fresh = true;
        for (const auto& v : values) {
            if (v == r) fresh = false;
        }
        if (fresh) values.push_back(r);
    }
    return values;
}

// Leading coefficient in x_1 of a degree-n polynomial, by exact n-th
// forward differencing over integer sample points for x_1.
template <typename Eval>
Rational leading_coefficient(Eval eval, std::size_t degree) {
    std::vector<Rational> samples;
    for (std::size_t t = 0; t <= degree; ++t) {
        // offset the sample grid away from the other (bounded) values
        samples.push_back(eval(Rational(2'000'000 + static_cast<long>(t))));
    }
    for (std::size_t level = 0; level < degree; ++level) {
        for (std::size_t i = 0; i + level + 1 <= degree; ++i) {
            samples[i] = samples[i + 1] - samples[i];
        }
    }
    Rational factorial = 1;
    for (std::size_t q = 2; q <= degree; ++q) factorial *= Rational(static_cast<long>(q));
    return samples[0] / factorial;
}

}  // namespace

TEST_CASE("lemma fixed vectors") {
    CHECK(lemma_sum(DistinctTuple({Rational(2), Rational(3)})) == 1);
    CHECK(lemma_sum(DistinctTuple({Rational(1), Rational(2), Rational(3)})) == 1);
    CHECK(lemma_sum(DistinctTuple(
              {Rational(1), Rational(2), Rational(3), Rational(4)})) == 1);
}

TEST_CASE("lemma over random distinct rationals, many sizes and seeds") {
    for (std::size_t count = 2; count <= 12; ++count) {
        for (int seed = 0; seed < 20; ++seed) {
            std::mt19937_64 rng(1000 * count + seed);
            DistinctTuple xs(random_distinct(rng, count));
            CHECK(lemma_sum(xs) == 1);
        }
    }
}

TEST_CASE("duplicate values are rejected") {
    CHECK_THROWS_AS(DistinctTuple({Rational(1), Rational(1)}), DuplicateValue);
    CHECK(vandermonde({Rational(1), Rational(2), Rational(1)}) == 0);
}

TEST_CASE("alternating_poly and vandermonde fixed vectors") {
    DistinctTuple pair({Rational(2), Rational(3)});
    CHECK(alternating_poly(pair) == -1);
    CHECK(vandermonde(pair.values()) == -1);

    DistinctTuple triple({Rational(1), Rational(2), Rational(3)});
    CHECK(alternating_poly(triple) == -2);
    CHECK(vandermonde(triple.values()) == -2);
}

TEST_CASE("Schur factorization: alternating polynomial equals the Vandermonde") {
    for (std::size_t count = 2; count <= 10; ++count) {
        for (int seed = 0; seed < 10; ++seed) {
            std::mt19937_64 rng(7000 * count + seed);
            DistinctTuple xs(random_distinct(rng, count));
            CHECK(alternating_poly(xs) == vandermonde(xs.values()));
        }
    }
}

TEST_CASE("swapping two arguments negates both alternating polynomials") {
    std::mt19937_64 rng(31);
    std::vector<Rational> values = random_distinct(rng, 5);
    const Rational a = alternating_poly(DistinctTuple(values));
    const Rational v = vandermonde(values);
    std::swap(values[1], values[3]);
    CHECK(alternating_poly(DistinctTuple(values)) == -a);
    CHECK(vandermonde(values) == -v);
}

TEST_CASE("lemma sum is invariant under rescaling of all arguments") {
    std::mt19937_64 rng(47);
    std::vector<Rational> values = random_distinct(rng, 6);
    CHECK(lemma_sum(DistinctTuple(values)) == 1);
    for (Rational c : {Rational(3), Rational(-7, 2), Rational(1, 1000)}) {
        std::vector<Rational> scaled = values;
        for (auto& x : scaled) x *= c;
        CHECK(lemma_sum(DistinctTuple(scaled)) == 1);
    }
}

TEST_CASE("x_1^n coefficient of A_n and B_n agree") {
    std::mt19937_64 rng(53);
    for (std::size_t count = 3; count <= 7; ++count) {
        std::vector<Rational> values = random_distinct(rng, count);
        const std::size_t degree = count - 1;

        auto eval_a = [&](Rational x1) {
            std::vector<Rational> v = values;
            v[0] = x1;
            return alternating_poly(DistinctTuple(v));
        };
        auto eval_b = [&](Rational x1) {
            std::vector<Rational> v = values;
            v[0] = x1;
            return vandermonde(v);
        };
        const Rational lead_a = leading_coefficient(eval_a, degree);
        const Rational lead_b = leading_coefficient(eval_b, degree);
        CHECK(lead_a == lead_b);

        // and the common value is prod_{1 < j < k} (x_j - x_k)
        std::vector<Rational> rest(values.begin() + 1, values.end());
        CHECK(lead_a == vandermonde(rest));
    }
}

TEST_CASE("epsilon coefficient identities, fixed vectors") {
    DistinctTuple eps({Rational(1, 2), Rational(1, 3)});  // n = 3
    CHECK(epsilon_coefficient_sum(eps, 0) == 0);
    CHECK(epsilon_coefficient_sum(eps, 1) == 0);
    CHECK(epsilon_coefficient_sum(eps, 2) == 1);
}

TEST_CASE("epsilon coefficient identities over random perturbations") {
    for (std::size_t n = 3; n <= 10; ++n) {
        for (int seed = 0; seed < 10; ++seed) {
            std::mt19937_64 rng(9000 * n + seed);
            DistinctTuple eps(random_distinct(rng, n - 1));
            for (std::size_t l = 0; l + 1 < n; ++l) {
                CHECK(epsilon_coefficient_sum(eps, l) == 0);
            }
            CHECK(epsilon_coefficient_sum(eps, n - 1) == 1);
        }
    }
}

TEST_CASE("epsilon coefficient validation") {
    DistinctTuple eps({Rational(1, 2), Rational(1, 3)});
    CHECK_THROWS(epsilon_coefficient_sum(eps, 3));
    CHECK_THROWS(epsilon_coefficient_sum(DistinctTuple({Rational(0), Rational(1)}), 0));
}
