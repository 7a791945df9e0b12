#include "ceplane/ordinal.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <string>

#include "ceplane/errors.hpp"

namespace ceplane {

namespace {

constexpr int kMaxDimension = 7;

constexpr std::array<int, kMaxDimension + 1> kFactorial = {1, 1, 2, 6, 24, 120, 720, 5040};

}  // namespace

void validate(const OrdinalConfig& config) {
    if (config.dimension < 2 || config.dimension > kMaxDimension) {
        throw invalid_input_error("embedding dimension must be between 2 and 7, got " +
                                  std::to_string(config.dimension));
    }
    if (config.delay < 1) {
        throw invalid_input_error("embedding delay must be at least 1, got " +
                                  std::to_string(config.delay));
    }
}

int factorial(int d) {
    if (d < 0 || d > kMaxDimension) {
        throw invalid_input_error("factorial is defined here for 0..7, got " + std::to_string(d));
    }
    return kFactorial[static_cast<std::size_t>(d)];
}

int lehmer_index(std::span<const int> permutation) {
    int d = static_cast<int>(permutation.size());
    if (d < 1 || d > kMaxDimension) {
        throw invalid_input_error("permutation length must be between 1 and 7, got " +
                                  std::to_string(d));
    }
    // seen[v] marks values already consumed; the Lehmer digit for position i
    // is the count of unseen values smaller than permutation[i].
    std::array<bool, kMaxDimension> seen{};
    int index = 0;
    for (int i = 0; i < d; ++i) {
        int value = permutation[static_cast<std::size_t>(i)];
        if (value < 0 || value >= d || seen[static_cast<std::size_t>(value)]) {
            throw invalid_input_error("not a permutation of 0.." + std::to_string(d - 1));
        }
        int smaller_unseen = 0;
        for (int v = 0; v < value; ++v) {
            if (!seen[static_cast<std::size_t>(v)]) {
                ++smaller_unseen;
            }
        }
        seen[static_cast<std::size_t>(value)] = true;
        index += smaller_unseen * kFactorial[static_cast<std::size_t>(d - 1 - i)];
    }
    return index;
}

std::vector<int> lehmer_unrank(int index, int dimension) {
    if (dimension < 1 || dimension > kMaxDimension) {
        throw invalid_input_error("permutation length must be between 1 and 7, got " +
                                  std::to_string(dimension));
    }
    if (index < 0 || index >= kFactorial[static_cast<std::size_t>(dimension)]) {
        throw invalid_input_error("pattern index " + std::to_string(index) +
                                  " outside [0, " +
                                  std::to_string(kFactorial[static_cast<std::size_t>(dimension)]) +
                                  ")");
    }
    std::vector<int> remaining(static_cast<std::size_t>(dimension));
    std::iota(remaining.begin(), remaining.end(), 0);
    std::vector<int> permutation;
    permutation.reserve(static_cast<std::size_t>(dimension));
    for (int i = 0; i < dimension; ++i) {
        int base = kFactorial[static_cast<std::size_t>(dimension - 1 - i)];
        int digit = index / base;
        index %= base;
        permutation.push_back(remaining[static_cast<std::size_t>(digit)]);
        remaining.erase(remaining.begin() + digit);
    }
    return permutation;
}

Pattern pattern_of(std::span<const double> window) {
    int d = static_cast<int>(window.size());
    if (d < 1 || d > kMaxDimension) {
        throw invalid_input_error("pattern window length must be between 1 and 7, got " +
                                  std::to_string(d));
    }
    for (double value : window) {
        if (!std::isfinite(value)) {
            throw invalid_input_error("pattern window contains a non-finite value");
        }
    }
    Pattern pattern;
    pattern.permutation.resize(static_cast<std::size_t>(d));
    std::iota(pattern.permutation.begin(), pattern.permutation.end(), 0);
    // Sort offsets by (value, offset): ascending values, ties kept in time
    // order, so equal neighbours always yield the same pattern.
    std::sort(pattern.permutation.begin(), pattern.permutation.end(), [&](int a, int b) {
        double va = window[static_cast<std::size_t>(a)];
        double vb = window[static_cast<std::size_t>(b)];
        if (va != vb) {
            return va < vb;
        }
        return a < b;
    });
    pattern.index = lehmer_index(pattern.permutation);
    return pattern;
}

OrdinalDistribution ordinal_distribution(std::span<const double> values,
                                         const OrdinalConfig& config) {
    validate(config);
    int d = config.dimension;
    int tau = config.delay;
    std::size_t span_length = static_cast<std::size_t>(d - 1) * static_cast<std::size_t>(tau) + 1;
    if (values.size() < span_length) {
        throw insufficient_data_error(
            "series of length " + std::to_string(values.size()) + " is shorter than the " +
                std::to_string(span_length) + " points one (D=" + std::to_string(d) +
                ", tau=" + std::to_string(tau) + ") delay vector spans",
            span_length);
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i])) {
            throw invalid_input_error("value at position " + std::to_string(i) +
                                      " is not finite");
        }
    }

    int m = factorial(d);
    OrdinalDistribution dist;
    dist.config = config;
    dist.counts.assign(static_cast<std::size_t>(m), 0);
    dist.total = values.size() - span_length + 1;

    std::array<int, kMaxDimension> offsets;
    std::array<double, kMaxDimension> window;
    std::array<bool, kMaxDimension> seen;
    for (std::size_t s = 0; s < dist.total; ++s) {
        for (int i = 0; i < d; ++i) {
            offsets[static_cast<std::size_t>(i)] = i;
            window[static_cast<std::size_t>(i)] =
                values[s + static_cast<std::size_t>(i) * static_cast<std::size_t>(tau)];
        }
        bool tie = false;
        // Insertion sort by (value, offset); D <= 7 keeps this cheap.
        for (int i = 1; i < d; ++i) {
            int off = offsets[static_cast<std::size_t>(i)];
            double val = window[static_cast<std::size_t>(off)];
            int j = i - 1;
            while (j >= 0) {
                double prev = window[static_cast<std::size_t>(offsets[static_cast<std::size_t>(j)])];
                if (prev == val) {
                    tie = true;
                }
                if (prev > val) {
                    offsets[static_cast<std::size_t>(j + 1)] = offsets[static_cast<std::size_t>(j)];
                    --j;
                } else {
                    break;
                }
            }
            offsets[static_cast<std::size_t>(j + 1)] = off;
        }
        // Lehmer rank of the sorted offsets (inlined from lehmer_index).
        seen.fill(false);
        int index = 0;
        for (int i = 0; i < d; ++i) {
            int value = offsets[static_cast<std::size_t>(i)];
            int smaller_unseen = 0;
            for (int v = 0; v < value; ++v) {
                if (!seen[static_cast<std::size_t>(v)]) {
                    ++smaller_unseen;
                }
            }
            seen[static_cast<std::size_t>(value)] = true;
            index += smaller_unseen * kFactorial[static_cast<std::size_t>(d - 1 - i)];
        }
        ++dist.counts[static_cast<std::size_t>(index)];
        if (tie) {
            ++dist.tie_vectors;
        }
    }

    dist.probabilities.resize(static_cast<std::size_t>(m));
    for (std::size_t i = 0; i < dist.probabilities.size(); ++i) {
        dist.probabilities[i] =
            static_cast<double>(dist.counts[i]) / static_cast<double>(dist.total);
    }
    dist.low_sample = dist.total < 10 * static_cast<std::uint64_t>(m);
    dist.severely_low_sample = dist.total < static_cast<std::uint64_t>(m);
    return dist;
}

OrdinalDistribution ordinal_distribution(const TimeSeries& series, const OrdinalConfig& config) {
    return ordinal_distribution(std::span<const double>(series.values), config);
}

}  // namespace ceplane
