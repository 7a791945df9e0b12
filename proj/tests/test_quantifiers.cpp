#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <random>
#include <span>
#include <vector>

#include "ceplane/errors.hpp"
#include "ceplane/rng.hpp"
#include "ceplane/quantifiers.hpp"
#include "doctest.h"

using namespace ceplane;

namespace {

// Extended-precision reference evaluators, deliberately written in the naive
// textbook form so they share no code or summation strategy with the library.
long double ld_entropy(const std::vector<long double>& p) {
    long double s = 0.0L;
    for (long double x : p) {
        if (x > 0.0L) s -= x * std::log(x);
    }
    return s;
}

long double ld_js(const std::vector<long double>& p, const std::vector<long double>& q) {
    std::vector<long double> mix(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) mix[i] = (p[i] + q[i]) / 2.0L;
    return ld_entropy(mix) - (ld_entropy(p) + ld_entropy(q)) / 2.0L;
}

long double ld_complexity(const std::vector<long double>& p) {
    std::size_t m = p.size();
    std::vector<long double> uniform(m, 1.0L / static_cast<long double>(m));
    std::vector<long double> delta(m, 0.0L);
    delta[0] = 1.0L;
    long double h = ld_entropy(p) / std::log(static_cast<long double>(m));
    return ld_js(p, uniform) / ld_js(delta, uniform) * h;
}

std::vector<long double> widen(const std::vector<double>& p) {
    return std::vector<long double>(p.begin(), p.end());
}

std::vector<double> random_simplex(Rng& rng, std::size_t m) {
    // Normalized unit exponentials: uniform on the simplex.
    std::vector<double> p(m);
    double sum = 0.0;
    for (double& x : p) {
        x = -std::log(rng.uniform01_open0());
        sum += x;
    }
    for (double& x : p) x /= sum;
    // Repair the last component so the vector passes strict normalization.
    double drift = 1.0;
    for (std::size_t i = 0; i + 1 < m; ++i) drift -= p[i];
    p[m - 1] = drift;
    return p;
}

std::vector<double> half_half(std::size_t m) {
    std::vector<double> p(m, 0.0);
    p[0] = 0.5;
    p[1] = 0.5;
    return p;
}

constexpr double kLn2 = 0.69314718055994530942;
constexpr double kLn24 = 3.1780538303479456196;

}  // namespace

TEST_CASE("entropy of delta and uniform") {
    std::vector<double> delta(24, 0.0);
    delta[0] = 1.0;
    CHECK(shannon_entropy(delta) == 0.0);
    CHECK(normalized_entropy(delta) == 0.0);

    std::vector<double> uniform(24, 1.0 / 24.0);
    CHECK(std::abs(shannon_entropy(uniform) - kLn24) < 1e-13);
    CHECK(std::abs(normalized_entropy(uniform) - 1.0) < 1e-14);
}

TEST_CASE("entropy of a two-state half-half distribution") {
    std::vector<double> p = half_half(24);
    CHECK(std::abs(shannon_entropy(p) - kLn2) < 1e-15);
    CHECK(std::abs(normalized_entropy(p) - 0.21810429198553155923) < 1e-15);
}

TEST_CASE("zero probabilities are skipped, not regularized") {
    // Appending zero states must leave raw entropy bit-identical.
    std::vector<double> p{0.25, 0.75};
    std::vector<double> padded{0.25, 0.75, 0.0, 0.0, 0.0};
    CHECK(shannon_entropy(p) == shannon_entropy(padded));
}

TEST_CASE("entropy is invariant under permutations of the distribution") {
    Rng rng(40);
    std::mt19937_64 shuffler(99);
    for (int rep = 0; rep < 200; ++rep) {
        std::vector<double> p = random_simplex(rng, 24);
        double s0 = shannon_entropy(p);
        std::vector<double> q = p;
        for (int k = 0; k < 20; ++k) {
            std::shuffle(q.begin(), q.end(), shuffler);
            CHECK(std::abs(shannon_entropy(q) - s0) <= 1e-15);
        }
        std::sort(q.begin(), q.end());
        CHECK(std::abs(shannon_entropy(q) - s0) <= 1e-15);
        std::reverse(q.begin(), q.end());
        CHECK(std::abs(shannon_entropy(q) - s0) <= 1e-15);
    }
}

TEST_CASE("entropy matches the extended-precision reference") {
    Rng rng(41);
    for (int rep = 0; rep < 100; ++rep) {
        std::vector<double> p = random_simplex(rng, 24);
        double expected = static_cast<double>(ld_entropy(widen(p)));
        CHECK(std::abs(shannon_entropy(p) - expected) < 1e-13);
    }
}

TEST_CASE("distribution validation") {
    std::vector<double> unnormalized{0.5, 0.4};
    CHECK_THROWS_AS(shannon_entropy(unnormalized), invalid_distribution_error);
    std::vector<double> negative{1.5, -0.5};
    CHECK_THROWS_AS(shannon_entropy(negative), invalid_distribution_error);
    std::vector<double> with_nan{0.5, std::numeric_limits<double>::quiet_NaN(), 0.5};
    CHECK_THROWS_AS(shannon_entropy(with_nan), invalid_distribution_error);
    std::vector<double> empty;
    CHECK_THROWS_AS(shannon_entropy(empty), invalid_distribution_error);
    std::vector<double> single{1.0};
    CHECK_NOTHROW(shannon_entropy(single));
    CHECK_THROWS_AS(normalized_entropy(single), invalid_distribution_error);
    CHECK_THROWS_AS(disequilibrium(single), invalid_distribution_error);

    // A sum within 1e-9 of 1 is accepted.
    std::vector<double> nearly{0.5 + 4e-10, 0.5};
    CHECK_NOTHROW(shannon_entropy(nearly));
}

TEST_CASE("jensen-shannon divergence identities") {
    Rng rng(42);
    std::vector<double> uniform(24, 1.0 / 24.0);
    std::vector<double> delta0(24, 0.0), delta1(24, 0.0);
    delta0[0] = 1.0;
    delta1[1] = 1.0;

    CHECK(jensen_shannon_divergence(uniform, uniform) == 0.0);
    CHECK(std::abs(jensen_shannon_divergence(delta0, delta1) - kLn2) < 1e-15);

    for (int rep = 0; rep < 100; ++rep) {
        std::vector<double> p = random_simplex(rng, 24);
        std::vector<double> q = random_simplex(rng, 24);
        double pq = jensen_shannon_divergence(p, q);
        CHECK(pq == jensen_shannon_divergence(q, p));  // bitwise symmetric
        CHECK(pq >= 0.0);
        CHECK(pq <= kLn2 + 1e-15);
        CHECK(jensen_shannon_divergence(p, p) == 0.0);
        double expected = static_cast<double>(ld_js(widen(p), widen(q)));
        CHECK(std::abs(pq - expected) < 1e-13);
    }

    std::vector<double> short_q{0.5, 0.5};
    CHECK_THROWS_AS(jensen_shannon_divergence(uniform, short_q),
                    invalid_distribution_error);
}

TEST_CASE("divergence of the half-half distribution from uniform") {
    std::vector<double> uniform(24, 1.0 / 24.0);
    CHECK(std::abs(jensen_shannon_divergence(half_half(24), uniform) -
                   0.54625293682894639917) < 1e-14);
}

TEST_CASE("maximum divergence matches its closed form") {
    // JS(delta, uniform) over m states in closed form:
    // ln(2m) - ((m+1)/(2m)) ln(m+1) - (ln m) / 2.
    for (std::size_t m : {2u, 6u, 24u, 120u, 5040u}) {
        double dm = static_cast<double>(m);
        double closed = std::log(2.0 * dm) -
                        (dm + 1.0) / (2.0 * dm) * std::log(dm + 1.0) -
                        std::log(dm) / 2.0;
        CHECK(std::abs(max_divergence_to_uniform(m) - closed) < 1e-14);
    }
    CHECK(std::abs(max_divergence_to_uniform(24) - 0.60567627028173022903) < 1e-15);
    CHECK(std::abs(1.0 / max_divergence_to_uniform(24) - 1.6510470181287606751) < 1e-13);
    CHECK_THROWS_AS(max_divergence_to_uniform(1), invalid_input_error);
}

TEST_CASE("disequilibrium endpoints are exact") {
    std::vector<double> uniform(24, 1.0 / 24.0);
    CHECK(disequilibrium(uniform) == 0.0);

    std::vector<double> delta0(24, 0.0);
    delta0[0] = 1.0;
    CHECK(disequilibrium(delta0) == 1.0);

    // A delta at any other position differs from the normalization constant's
    // internal delta only by summation order; allow the last ulp.
    for (std::size_t k = 1; k < 24; ++k) {
        std::vector<double> delta(24, 0.0);
        delta[k] = 1.0;
        double q = disequilibrium(delta);
        CHECK(q <= 1.0);
        CHECK(q >= 1.0 - 1e-15);
    }
}

TEST_CASE("disequilibrium stays in the unit interval") {
    Rng rng(43);
    for (int rep = 0; rep < 2000; ++rep) {
        std::vector<double> p = random_simplex(rng, 24);
        double q = disequilibrium(p);
        CHECK(q >= 0.0);
        CHECK(q <= 1.0);
    }
}

TEST_CASE("complexity endpoints and the half-half value") {
    std::vector<double> delta(24, 0.0);
    delta[0] = 1.0;
    CHECK(statistical_complexity(delta) == 0.0);

    std::vector<double> uniform(24, 1.0 / 24.0);
    CHECK(statistical_complexity(uniform) == 0.0);

    std::vector<double> p = half_half(24);
    CHECK(std::abs(disequilibrium(p) - 0.90188928249551022537) < 1e-14);
    CHECK(std::abs(statistical_complexity(p) - 0.19670592340802231922) < 1e-14);
}

TEST_CASE("complexity matches the extended-precision reference") {
    Rng rng(44);
    for (int rep = 0; rep < 100; ++rep) {
        std::vector<double> p = random_simplex(rng, 24);
        double expected = static_cast<double>(ld_complexity(widen(p)));
        CHECK(std::abs(statistical_complexity(p) - expected) < 1e-12);
    }
}

TEST_CASE("quantifier_point bundles the three values consistently") {
    Rng rng(45);
    std::vector<double> p = random_simplex(rng, 24);
    QuantifierPoint point = quantifier_point(p);
    CHECK(point.entropy_raw == shannon_entropy(p));
    CHECK(point.entropy_normalized == normalized_entropy(p));
    CHECK(point.complexity ==
          disequilibrium(p) * point.entropy_normalized);
}

TEST_CASE("complexity is not a function of entropy alone") {
    // Two distributions with (numerically) equal normalized entropy but
    // complexities far apart: one from the minimum-complexity family
    // {p, (1-p)/23 x23}, one from a 10-state family with 14 zero components.
    std::size_t m = 24;
    std::vector<double> low(m, 0.5 / 23.0);
    low[0] = 0.5;
    double target_h = normalized_entropy(low);

    auto ten_state = [&](double p) {
        std::vector<double> v(m, 0.0);
        v[0] = p;
        for (std::size_t i = 1; i < 10; ++i) v[i] = (1.0 - p) / 9.0;
        return v;
    };
    double lo = 0.0, hi = 0.1;
    CHECK(normalized_entropy(ten_state(lo)) < target_h);
    CHECK(normalized_entropy(ten_state(hi)) > target_h);
    for (int iter = 0; iter < 200; ++iter) {
        double mid = (lo + hi) / 2.0;
        if (normalized_entropy(ten_state(mid)) < target_h) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    std::vector<double> high = ten_state((lo + hi) / 2.0);

    CHECK(std::abs(normalized_entropy(high) - target_h) < 1e-9);
    CHECK(statistical_complexity(high) - statistical_complexity(low) > 1e-3);
}
