#include <algorithm>
#include <cmath>
#include <mutex>
#include <string>
#include <vector>

#include <fftw3.h>

#include "ceplane/errors.hpp"
#include "ceplane/rng.hpp"
#include "ceplane/surrogates.hpp"

namespace ceplane {

namespace {

// FFTW plan creation and destruction are not thread-safe; executing distinct
// plans is. All plan lifecycle calls go through this lock.
std::mutex& fftw_lock() {
    static std::mutex lock;
    return lock;
}

struct FftwBuffer {
    fftw_complex* data = nullptr;

    explicit FftwBuffer(std::size_t size) {
        data = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * size));
        if (data == nullptr) {
            throw internal_error("fftw_malloc failed");
        }
    }
    ~FftwBuffer() { fftw_free(data); }
    FftwBuffer(const FftwBuffer&) = delete;
    FftwBuffer& operator=(const FftwBuffer&) = delete;
};

struct FftwPlan {
    fftw_plan plan = nullptr;

    FftwPlan(std::size_t size, fftw_complex* in, fftw_complex* out) {
        std::lock_guard<std::mutex> guard(fftw_lock());
        plan = fftw_plan_dft_1d(static_cast<int>(size), in, out, FFTW_FORWARD, FFTW_ESTIMATE);
        if (plan == nullptr) {
            throw internal_error("fftw plan creation failed");
        }
    }
    ~FftwPlan() {
        std::lock_guard<std::mutex> guard(fftw_lock());
        fftw_destroy_plan(plan);
    }
    FftwPlan(const FftwPlan&) = delete;
    FftwPlan& operator=(const FftwPlan&) = delete;
};

void validate_fbm_parameters(double hurst, std::size_t length) {
    if (!(hurst > 0.0) || !(hurst < 1.0)) {
        throw invalid_input_error("hurst exponent must lie strictly between 0 and 1, got " +
                                  std::to_string(hurst));
    }
    if (length < 2) {
        throw invalid_input_error("fbm path needs length at least 2, got " +
                                  std::to_string(length));
    }
}

}  // namespace

double fgn_autocovariance(double hurst, std::size_t lag) {
    double k = static_cast<double>(lag);
    double two_h = 2.0 * hurst;
    return 0.5 * (std::pow(k + 1.0, two_h) - 2.0 * std::pow(k, two_h) +
                  std::pow(std::abs(k - 1.0), two_h));
}

FbmGenerator::FbmGenerator(double hurst, std::size_t length) : hurst_(hurst), length_(length) {
    validate_fbm_parameters(hurst, length);
    std::size_t n = length - 1;  // increments
    std::size_t m = 2 * n;       // circulant size

    // First row of the circulant embedding of the fGn covariance.
    FftwBuffer in(m);
    FftwBuffer out(m);
    for (std::size_t j = 0; j < m; ++j) {
        std::size_t lag = j <= n ? j : m - j;
        in.data[j][0] = fgn_autocovariance(hurst, lag);
        in.data[j][1] = 0.0;
    }
    FftwPlan plan(m, in.data, out.data);
    fftw_execute(plan.plan);

    eigenvalues_.resize(m);
    double max_eigenvalue = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        eigenvalues_[j] = out.data[j][0];
        max_eigenvalue = std::max(max_eigenvalue, eigenvalues_[j]);
    }
    for (std::size_t j = 0; j < m; ++j) {
        if (eigenvalues_[j] < -1e-10 * max_eigenvalue) {
            throw internal_error("circulant embedding failed: eigenvalue " +
                                 std::to_string(eigenvalues_[j]) + " at index " +
                                 std::to_string(j));
        }
        eigenvalues_[j] = std::max(eigenvalues_[j], 0.0);
    }
}

TimeSeries FbmGenerator::generate(std::uint64_t seed) const {
    std::size_t n = length_ - 1;
    std::size_t m = 2 * n;
    double inv_sqrt_m = 1.0 / std::sqrt(static_cast<double>(m));

    // Hermitian-symmetric frequency coefficients with independent Gaussian
    // content; the draw order below is part of the determinism contract.
    FftwBuffer freq(m);
    Rng rng(seed);
    freq.data[0][0] = std::sqrt(eigenvalues_[0]) * rng.gaussian();
    freq.data[0][1] = 0.0;
    for (std::size_t k = 1; k < n; ++k) {
        double scale = std::sqrt(eigenvalues_[k] / 2.0);
        double re = scale * rng.gaussian();
        double im = scale * rng.gaussian();
        freq.data[k][0] = re;
        freq.data[k][1] = im;
        freq.data[m - k][0] = re;
        freq.data[m - k][1] = -im;
    }
    freq.data[n][0] = std::sqrt(eigenvalues_[n]) * rng.gaussian();
    freq.data[n][1] = 0.0;

    FftwBuffer time(m);
    FftwPlan plan(m, freq.data, time.data);
    fftw_execute(plan.plan);

    TimeSeries series;
    series.values.resize(length_);
    series.values[0] = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        series.values[i + 1] = series.values[i] + time.data[i][0] * inv_sqrt_m;
    }
    return series;
}

TimeSeries generate_fbm(const FbmSpec& spec) {
    return FbmGenerator(spec.hurst, spec.length).generate(spec.seed);
}

}  // namespace ceplane
