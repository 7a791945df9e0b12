#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "ceplane/ordinal.hpp"
#include "ceplane/time_series.hpp"
#include "ceplane/windows.hpp"

namespace ceplane {

/// Fractional Brownian motion path request. hurst in (0,1), length >= 2;
/// the same spec and seed always produce a bit-identical path.
struct FbmSpec {
    double hurst = 0.5;
    std::size_t length = 2;
    std::uint64_t seed = 0;
};

/// Reusable fBm synthesizer for one (hurst, length): the circulant
/// eigenvalues are computed once and shared across realizations.
///
/// Method: Davies-Harte circulant embedding. Fractional Gaussian noise with
/// autocovariance gamma(k) = ((k+1)^{2H} - 2 k^{2H} + |k-1|^{2H}) / 2 is
/// embedded in a circulant of size 2(length-1), its eigenvalues taken by FFT
/// and checked non-negative, Gaussian increments synthesized in the frequency
/// domain, and the path obtained by cumulative summation starting at 0.
class FbmGenerator {
public:
    FbmGenerator(double hurst, std::size_t length);

    TimeSeries generate(std::uint64_t seed) const;

    double hurst() const { return hurst_; }
    std::size_t length() const { return length_; }

private:
    double hurst_;
    std::size_t length_;
    std::vector<double> eigenvalues_;  // size 2*(length-1)
};

/// Theoretical fGn autocovariance at lag k for unit-variance increments.
double fgn_autocovariance(double hurst, std::size_t lag);

TimeSeries generate_fbm(const FbmSpec& spec);

/// Uniformly random permutation of the values (Fisher-Yates on the seeded
/// generator); the value multiset is preserved exactly and dates, if any,
/// stay in their original order against the permuted values.
TimeSeries shuffle(const TimeSeries& series, std::uint64_t seed);

/// Pooled quantifier statistics of fBm realizations at one Hurst exponent.
struct BaselineBand {
    double hurst = 0.0;
    int realizations = 0;
    double mean_h = 0.0;
    double std_h = 0.0;
    double mean_c = 0.0;
    double std_c = 0.0;
};

/// Generates `realizations` fBm paths (per-realization seeds derived from
/// (seed, index)), runs the sliding-window analysis on each, pools every
/// window of every realization, and returns mean/std of H and C (population
/// std, so a single pooled sample reports 0). Realizations may run in
/// parallel; the reduction order is fixed, so results are bit-identical for
/// any thread count.
BaselineBand baseline_band(double hurst, int realizations, std::size_t length,
                           const WindowSpec& window_spec,
                           const OrdinalConfig& config, std::uint64_t seed,
                           unsigned threads = 1);

/// CSV export, header `hurst,realizations,mean_h,std_h,mean_c,std_c`.
void write_baseline_csv(std::span<const BaselineBand> bands, std::ostream& out);

std::vector<BaselineBand> read_baseline_csv(std::string_view content);

}  // namespace ceplane
