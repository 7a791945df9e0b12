#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

namespace ceplane {

/// Shannon entropy S[P] = -sum p_i ln p_i in nats, with 0 ln 0 = 0 (zero
/// entries are skipped, never epsilon-regularized). Input must be a
/// normalized distribution; throws invalid_distribution_error otherwise.
double shannon_entropy(std::span<const double> probabilities);

/// S[P] / ln(M), clamped to [0, 1] against last-ulp roundoff.
double normalized_entropy(std::span<const double> probabilities);

/// JS(P,Q) = S[(P+Q)/2] - S[P]/2 - S[Q]/2. Symmetric, in [0, ln 2].
double jensen_shannon_divergence(std::span<const double> p,
                                 std::span<const double> q);

/// JS divergence between a delta distribution and the uniform distribution
/// over m states: the maximum of JS(P, uniform) over the simplex, i.e. the
/// disequilibrium normalization constant 1/Q_0.
double max_divergence_to_uniform(std::size_t m);

/// Q_J[P, P_e] = JS(P, uniform) / JS(delta, uniform); equals 1 at a delta
/// distribution exactly and 0 at the uniform distribution.
double disequilibrium(std::span<const double> probabilities);

/// C_JS[P] = Q_J[P, P_e] * H[P].
double statistical_complexity(std::span<const double> probabilities);

/// (raw entropy, normalized entropy, complexity) for one distribution.
struct QuantifierPoint {
    double entropy_raw = 0.0;
    double entropy_normalized = 0.0;
    double complexity = 0.0;
};

QuantifierPoint quantifier_point(std::span<const double> probabilities);

struct EnvelopeSample {
    double h = 0.0;
    double c_min = 0.0;
    double c_max = 0.0;
};

/// Theoretical bounds of the complexity-entropy plane for an M-symbol
/// alphabet, sampled on a uniform h-grid.
struct ComplexityEnvelope {
    std::size_t m = 0;
    std::vector<EnvelopeSample> samples;  // sorted by h, h uniform in [0,1]

    /// Linear interpolation between grid samples.
    double c_min_at(double h) const;
    double c_max_at(double h) const;
};

/// Builds the envelope from the one-parameter boundary families:
///  - lower curve: {p, (1-p)/(M-1), ...} for p in [1/M, 1];
///  - upper curve: for each n in 0..M-2, n zero components, one component
///    p in [0, 1/(M-n)] and M-n-1 equal components; the curve is the
///    pointwise maximum of C over the families at each grid h.
/// Each family's entropy is strictly monotone in p, so a coarse
/// samples_per_family sweep brackets every grid value and bisection pins it;
/// the endpoints h=0 (delta) and h=1 (uniform) come out exactly zero.
ComplexityEnvelope complexity_envelope(std::size_t m,
                                       std::size_t samples_per_family = 2000,
                                       std::size_t grid_size = 1000);

/// CSV export, header `h,c_min,c_max`, 17 significant digits.
void write_envelope_csv(const ComplexityEnvelope& envelope, std::ostream& out);

/// Parses the CSV back; throws format_error naming the offending column or
/// line on schema mismatch.
ComplexityEnvelope read_envelope_csv(std::string_view content);

}  // namespace ceplane
