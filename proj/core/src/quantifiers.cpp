#include "ceplane/quantifiers.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "ceplane/errors.hpp"

namespace ceplane {

namespace {

// Neumaier-compensated accumulation: keeps entropy sums stable to the last
// ulp so permutation invariance holds far tighter than the 1e-15 contract.
struct CompensatedSum {
    double sum = 0.0;
    double compensation = 0.0;

    void add(double value) {
        double t = sum + value;
        if (std::abs(sum) >= std::abs(value)) {
            compensation += (sum - t) + value;
        } else {
            compensation += (value - t) + sum;
        }
        sum = t;
    }

    double result() const { return sum + compensation; }
};

constexpr double kNormalizationTolerance = 1e-9;

void validate_distribution(std::span<const double> probabilities) {
    if (probabilities.empty()) {
        throw invalid_distribution_error("probability vector is empty");
    }
    CompensatedSum total;
    for (std::size_t i = 0; i < probabilities.size(); ++i) {
        double p = probabilities[i];
        if (!(p >= 0.0) || p > 1.0) {  // negated compare also rejects NaN
            throw invalid_distribution_error("probability at position " + std::to_string(i) +
                                             " is outside [0, 1]");
        }
        total.add(p);
    }
    double sum = total.result();
    if (std::abs(sum - 1.0) > kNormalizationTolerance) {
        throw invalid_distribution_error("probabilities sum to " + std::to_string(sum) +
                                         ", not 1");
    }
}

double entropy_unchecked(std::span<const double> probabilities) {
    CompensatedSum s;
    for (double p : probabilities) {
        if (p > 0.0) {
            s.add(-p * std::log(p));
        }
    }
    return s.result();
}

}  // namespace

double shannon_entropy(std::span<const double> probabilities) {
    validate_distribution(probabilities);
    return entropy_unchecked(probabilities);
}

double normalized_entropy(std::span<const double> probabilities) {
    validate_distribution(probabilities);
    if (probabilities.size() < 2) {
        throw invalid_distribution_error("normalized entropy needs at least two states");
    }
    double h = entropy_unchecked(probabilities) /
               std::log(static_cast<double>(probabilities.size()));
    return std::clamp(h, 0.0, 1.0);
}

double jensen_shannon_divergence(std::span<const double> p, std::span<const double> q) {
    validate_distribution(p);
    validate_distribution(q);
    if (p.size() != q.size()) {
        throw invalid_distribution_error("distributions differ in length: " +
                                         std::to_string(p.size()) + " vs " +
                                         std::to_string(q.size()));
    }
    std::vector<double> mix(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        mix[i] = (p[i] + q[i]) / 2.0;
    }
    // (S[p] + S[q]) / 2 keeps the expression symmetric bit-for-bit.
    return entropy_unchecked(mix) -
           (entropy_unchecked(p) + entropy_unchecked(q)) / 2.0;
}

double max_divergence_to_uniform(std::size_t m) {
    if (m < 2) {
        throw invalid_input_error("alphabet size must be at least 2, got " + std::to_string(m));
    }
    std::vector<double> delta(m, 0.0);
    delta[0] = 1.0;
    std::vector<double> uniform(m, 1.0 / static_cast<double>(m));
    return jensen_shannon_divergence(delta, uniform);
}

double disequilibrium(std::span<const double> probabilities) {
    validate_distribution(probabilities);
    if (probabilities.size() < 2) {
        throw invalid_distribution_error("disequilibrium needs at least two states");
    }
    std::vector<double> uniform(probabilities.size(),
                                1.0 / static_cast<double>(probabilities.size()));
    double js = jensen_shannon_divergence(probabilities, uniform);
    // A delta input repeats the normalization computation bit-for-bit, so the
    // ratio is exactly 1 there; clamp only absorbs last-ulp excursions.
    return std::clamp(js / max_divergence_to_uniform(probabilities.size()), 0.0, 1.0);
}

double statistical_complexity(std::span<const double> probabilities) {
    return disequilibrium(probabilities) * normalized_entropy(probabilities);
}

QuantifierPoint quantifier_point(std::span<const double> probabilities) {
    QuantifierPoint point;
    point.entropy_raw = shannon_entropy(probabilities);
    point.entropy_normalized = normalized_entropy(probabilities);
    point.complexity = disequilibrium(probabilities) * point.entropy_normalized;
    return point;
}

}  // namespace ceplane
