#pragma once

#include <cstdint>
#include <random>

namespace ceplane {

/// Seedable generator with a fixed output contract.
///
/// The engine is std::mt19937_64 (fully specified by the standard, so the raw
/// stream is identical on every platform); Gaussian variates use Box-Muller on
/// top of it instead of std::normal_distribution, whose output is
/// implementation-defined. Golden-value tests pin the stream; regenerate them
/// if the generator ever changes.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1), 53-bit resolution.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform in (0, 1]; safe as a log() argument.
    double uniform01_open0() {
        return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller; the second variate of each pair is
    /// cached, so draws come in a fixed order.
    double gaussian();

    /// Uniform integer in [0, n); rejection sampling, no modulo bias.
    std::uint64_t bounded(std::uint64_t n);

private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

/// Counter-mode seed derivation (splitmix64 stream member `index` of `seed`).
/// Pure function: realizations keyed by index can run in any order or in
/// parallel and still see the same sub-seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace ceplane
