#include "ceplane/rng.hpp"

#include <cmath>
#include <numbers>

namespace ceplane {

double Rng::gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u1 = uniform01_open0();
    double u2 = uniform01();
    double radius = std::sqrt(-2.0 * std::log(u1));
    double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

std::uint64_t Rng::bounded(std::uint64_t n) {
    if (n <= 1) {
        return 0;
    }
    // Reject draws from the final partial block of size 2^64 mod n.
    std::uint64_t rem = (std::uint64_t(0) - n) % n;  // 2^64 mod n
    std::uint64_t draw = next_u64();
    if (rem != 0) {
        std::uint64_t limit = std::uint64_t(0) - rem;  // last multiple of n
        while (draw >= limit) {
            draw = next_u64();
        }
    }
    return draw % n;
}

namespace {

std::uint64_t splitmix64_finalize(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
    return splitmix64_finalize(seed + (index + 1) * kGolden);
}

}  // namespace ceplane
