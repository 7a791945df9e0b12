#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ceplane/time_series.hpp"

namespace ceplane {

/// Embedding dimension D and delay tau for ordinal symbolization.
struct OrdinalConfig {
    int dimension = 4;
    int delay = 1;
};

/// Throws invalid_input_error unless 2 <= dimension <= 7 and delay >= 1.
/// The upper bound keeps the symbol alphabet M = D! at most 5040.
void validate(const OrdinalConfig& config);

/// D! for 0 <= d <= 7.
int factorial(int d);

/// An ordinal pattern: the offsets (r_0, ..., r_{D-1}) that sort a window
/// ascending, plus its dense Lehmer rank in [0, D!-1].
struct Pattern {
    std::vector<int> permutation;
    int index = 0;
};

/// Lehmer (factorial-number-system) rank of a permutation of 0..D-1.
/// Identity maps to 0, the reversal to D!-1.
int lehmer_index(std::span<const int> permutation);

/// Inverse of lehmer_index. Throws invalid_input_error for an index outside
/// [0, D!-1] or a dimension outside [1, 7].
std::vector<int> lehmer_unrank(int index, int dimension);

/// Ordinal pattern of a window of exactly D finite values: the offsets sorted
/// ascending by value, equal values kept in offset order (stable tie rule).
Pattern pattern_of(std::span<const double> window);

/// Relative frequencies of the D! ordinal patterns observed along a series.
struct OrdinalDistribution {
    OrdinalConfig config;
    std::vector<std::uint64_t> counts;   // length D!
    std::uint64_t total = 0;             // = length - (D-1)*delay
    std::vector<double> probabilities;   // counts / total

    // Number of pattern vectors containing at least one exact value equality;
    // daily prices repeat, so users can audit how often the tie rule fired.
    std::uint64_t tie_vectors = 0;

    bool low_sample = false;             // total < 10 * D!
    bool severely_low_sample = false;    // total < D!
};

/// Counts overlapping delay vectors (x_s, x_{s+tau}, ..., x_{s+(D-1)tau}) for
/// every start s. Throws insufficient_data_error (carrying the required
/// minimum length) when the input is shorter than (D-1)*tau + 1.
OrdinalDistribution ordinal_distribution(std::span<const double> values,
                                         const OrdinalConfig& config);

OrdinalDistribution ordinal_distribution(const TimeSeries& series,
                                         const OrdinalConfig& config);

}  // namespace ceplane
