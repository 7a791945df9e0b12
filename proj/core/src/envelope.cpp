#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>
#include <vector>

#include "ceplane/csv.hpp"
#include "ceplane/errors.hpp"
#include "ceplane/quantifiers.hpp"

namespace ceplane {

namespace {

double xlogx(double x) {
    return x > 0.0 ? x * std::log(x) : 0.0;
}

// One boundary family of the complexity-entropy region, reduced to closed
// form. Every family has one free component p, `equal_states` components
// sharing (1-p)/equal_states, and `zero_states` components fixed at zero, so
// entropies collapse to a handful of terms independent of M.
struct BoundaryFamily {
    std::size_t m = 0;
    std::size_t equal_states = 0;  // components carrying (1-p)/equal_states
    std::size_t zero_states = 0;   // m - 1 - equal_states
    double log_m = 0.0;
    double max_divergence = 0.0;

    double entropy(double p) const {
        double rest = 1.0 - p;
        double q = rest / static_cast<double>(equal_states);
        return -xlogx(p) - (rest > 0.0 ? rest * std::log(q) : 0.0);
    }

    double normalized_entropy(double p) const {
        return std::clamp(entropy(p) / log_m, 0.0, 1.0);
    }

    double complexity(double p) const {
        double u = 1.0 / static_cast<double>(m);
        double a = (p + u) / 2.0;
        double q = (1.0 - p) / static_cast<double>(equal_states);
        double b = (q + u) / 2.0;
        double z = u / 2.0;
        double mix_entropy = -xlogx(a) - static_cast<double>(equal_states) * xlogx(b) -
                             static_cast<double>(zero_states) * xlogx(z);
        double js = mix_entropy - (entropy(p) + log_m) / 2.0;
        return std::clamp(js / max_divergence, 0.0, 1.0) * normalized_entropy(p);
    }
};

// Solves normalized_entropy(p) = target on [p_lo, p_hi], where the entropy is
// strictly monotone (increasing when h(p_hi) > h(p_lo), else decreasing). The
// coarse sweep with `samples` points brackets the root; bisection pins it to
// double precision.
double solve_for_entropy(const BoundaryFamily& family, double p_lo, double p_hi, double target,
                         std::size_t samples) {
    bool increasing = family.normalized_entropy(p_hi) > family.normalized_entropy(p_lo);
    double lo = p_lo;
    double hi = p_hi;
    double step = (p_hi - p_lo) / static_cast<double>(samples);
    for (std::size_t i = 1; i < samples; ++i) {
        double p = p_lo + step * static_cast<double>(i);
        double h = family.normalized_entropy(p);
        if ((increasing && h < target) || (!increasing && h > target)) {
            lo = p;
        } else {
            hi = p;
            break;
        }
    }
    for (int iteration = 0; iteration < 200; ++iteration) {
        double mid = (lo + hi) / 2.0;
        if (mid <= lo || mid >= hi) {
            break;
        }
        double h = family.normalized_entropy(mid);
        if ((increasing && h < target) || (!increasing && h > target)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return (lo + hi) / 2.0;
}

double interpolate(const ComplexityEnvelope& envelope, double h, bool upper) {
    const auto& samples = envelope.samples;
    if (samples.empty()) {
        throw invalid_input_error("envelope has no samples");
    }
    if (!(h >= samples.front().h)) {
        return upper ? samples.front().c_max : samples.front().c_min;
    }
    if (h >= samples.back().h) {
        return upper ? samples.back().c_max : samples.back().c_min;
    }
    auto it = std::upper_bound(samples.begin(), samples.end(), h,
                               [](double value, const EnvelopeSample& sample) {
                                   return value < sample.h;
                               });
    const EnvelopeSample& right = *it;
    const EnvelopeSample& left = *(it - 1);
    double t = (h - left.h) / (right.h - left.h);
    double a = upper ? left.c_max : left.c_min;
    double b = upper ? right.c_max : right.c_min;
    return a + t * (b - a);
}

}  // namespace

double ComplexityEnvelope::c_min_at(double h) const {
    return interpolate(*this, h, /*upper=*/false);
}

double ComplexityEnvelope::c_max_at(double h) const {
    return interpolate(*this, h, /*upper=*/true);
}

ComplexityEnvelope complexity_envelope(std::size_t m, std::size_t samples_per_family,
                                       std::size_t grid_size) {
    if (m < 2) {
        throw invalid_input_error("envelope alphabet size must be at least 2, got " +
                                  std::to_string(m));
    }
    if (samples_per_family < 100) {
        throw invalid_input_error("envelope needs at least 100 samples per family, got " +
                                  std::to_string(samples_per_family));
    }
    if (grid_size < 2) {
        throw invalid_input_error("envelope grid needs at least 2 points, got " +
                                  std::to_string(grid_size));
    }

    double log_m = std::log(static_cast<double>(m));
    double max_div = max_divergence_to_uniform(m);

    // Lower curve: {p, (1-p)/(m-1) x (m-1)}, p in [1/m, 1]; h runs 1 -> 0.
    BoundaryFamily lower{m, m - 1, 0, log_m, max_div};

    // Upper curve: for each count of zero components z in 0..m-2 the family
    // {p, (1-p)/(m-z-1) x (m-z-1), 0 x z} with p in [0, 1/(m-z)] covers
    // h in [ln(m-z-1)/ln m, ln(m-z)/ln m]; the ranges tile [0, 1], so each
    // grid point is served by exactly one family (shared endpoints agree).
    // upper_boundaries[j] = ln(j+1)/ln(m) is the top of the family with
    // m-z = j+1 nonzero components.
    std::vector<double> upper_boundaries(m);
    for (std::size_t j = 0; j < m; ++j) {
        upper_boundaries[j] = std::log(static_cast<double>(j + 1)) / log_m;
    }

    ComplexityEnvelope envelope;
    envelope.m = m;
    envelope.samples.resize(grid_size);

    BoundaryFamily cached_family{};
    for (std::size_t i = 0; i < grid_size; ++i) {
        double h = static_cast<double>(i) / static_cast<double>(grid_size - 1);
        EnvelopeSample& sample = envelope.samples[i];
        sample.h = h;
        if (i == 0 || i + 1 == grid_size) {
            // Delta (h=0) and uniform (h=1) endpoints: zero complexity exactly.
            sample.c_min = 0.0;
            sample.c_max = 0.0;
            continue;
        }

        double p_min = solve_for_entropy(lower, 1.0 / static_cast<double>(m), 1.0, h,
                                         samples_per_family);
        sample.c_min = lower.complexity(p_min);

        // First family top boundary >= h; families are visited in h order, so
        // the previous one usually still applies.
        auto it = std::lower_bound(upper_boundaries.begin(), upper_boundaries.end(), h);
        std::size_t nonzero = static_cast<std::size_t>(it - upper_boundaries.begin()) + 1;
        if (cached_family.equal_states != nonzero - 1) {
            cached_family = BoundaryFamily{m, nonzero - 1, m - nonzero, log_m, max_div};
        }
        double p_max = solve_for_entropy(cached_family, 0.0,
                                         1.0 / static_cast<double>(nonzero), h,
                                         samples_per_family);
        sample.c_max = cached_family.complexity(p_max);
        if (sample.c_max < sample.c_min) {
            sample.c_max = sample.c_min;
        }
    }
    return envelope;
}

void write_envelope_csv(const ComplexityEnvelope& envelope, std::ostream& out) {
    out << "h,c_min,c_max\n";
    for (const EnvelopeSample& sample : envelope.samples) {
        out << format_double17(sample.h) << ',' << format_double17(sample.c_min) << ','
            << format_double17(sample.c_max) << '\n';
    }
}

ComplexityEnvelope read_envelope_csv(std::string_view content) {
    ComplexityEnvelope envelope;
    bool header_seen = false;
    csv::for_each_line(content, [&](std::size_t line_number, std::string_view line) {
        if (!header_seen) {
            if (line != "h,c_min,c_max") {
                throw format_error("expected header 'h,c_min,c_max', got '" + std::string(line) +
                                       "'",
                                   line_number);
            }
            header_seen = true;
            return;
        }
        if (line.empty()) {
            return;
        }
        auto fields = csv::split(line);
        if (fields.size() != 3) {
            throw format_error("expected 3 fields, got " + std::to_string(fields.size()),
                               line_number);
        }
        EnvelopeSample sample;
        sample.h = parse_double_field(fields[0], line_number, "h");
        sample.c_min = parse_double_field(fields[1], line_number, "c_min");
        sample.c_max = parse_double_field(fields[2], line_number, "c_max");
        if (!envelope.samples.empty() && sample.h <= envelope.samples.back().h) {
            throw format_error("h values must be strictly increasing", line_number);
        }
        envelope.samples.push_back(sample);
    });
    if (!header_seen) {
        throw format_error("empty envelope file", 0);
    }
    if (envelope.samples.empty()) {
        throw format_error("envelope file has no samples", 0);
    }
    return envelope;
}

}  // namespace ceplane
