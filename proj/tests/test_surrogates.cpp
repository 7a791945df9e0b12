#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <sstream>
#include <vector>

#include "ceplane/errors.hpp"
#include "ceplane/ordinal.hpp"
#include "ceplane/quantifiers.hpp"
#include "ceplane/rng.hpp"
#include "ceplane/surrogates.hpp"
#include "doctest.h"

using namespace ceplane;

namespace {

std::vector<double> increments(const TimeSeries& path) {
    std::vector<double> d(path.size() - 1);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        d[i] = path.values[i + 1] - path.values[i];
    }
    return d;
}

// Lag-k autocorrelation of a zero-mean sample.
double autocorrelation(const std::vector<double>& x, std::size_t lag) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i + lag < x.size(); ++i) num += x[i] * x[i + lag];
    for (double v : x) den += v * v;
    return num / den;
}

}  // namespace

TEST_CASE("rng primitives") {
    Rng a(12345), b(12345);
    for (int i = 0; i < 100; ++i) {
        CHECK(a.next_u64() == b.next_u64());
    }

    // The engine contract is std::mt19937_64 verbatim.
    Rng c(777);
    std::mt19937_64 reference(777);
    for (int i = 0; i < 10; ++i) {
        CHECK(c.next_u64() == reference());
    }

    Rng d(9);
    for (int i = 0; i < 1000; ++i) {
        double u = d.uniform01();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        double v = d.uniform01_open0();
        CHECK(v > 0.0);
        CHECK(v <= 1.0);
    }

    Rng e(10);
    CHECK(e.bounded(1) == 0);
    std::set<std::uint64_t> seen;
    for (int i = 0; i < 3000; ++i) {
        std::uint64_t x = e.bounded(7);
        CHECK(x < 7);
        seen.insert(x);
    }
    CHECK(seen.size() == 7);
}

TEST_CASE("gaussian draws consume the engine in fixed pairs") {
    // Box-Muller with a cached spare: two engine words per two variates.
    Rng a(31);
    a.gaussian();
    a.gaussian();
    std::mt19937_64 reference(31);
    reference();
    reference();
    CHECK(a.next_u64() == reference());

    Rng b(32);
    std::vector<double> sample(100000);
    for (double& x : sample) x = b.gaussian();
    double mean = 0.0;
    for (double x : sample) mean += x;
    mean /= static_cast<double>(sample.size());
    double var = 0.0;
    for (double x : sample) var += (x - mean) * (x - mean);
    var /= static_cast<double>(sample.size());
    CHECK(std::abs(mean) < 0.015);
    CHECK(var > 0.97);
    CHECK(var < 1.03);
}

TEST_CASE("derive_seed is pure and collision-free over realization indices") {
    std::set<std::uint64_t> seeds;
    for (std::uint64_t i = 0; i < 2000; ++i) {
        seeds.insert(derive_seed(42, i));
    }
    CHECK(seeds.size() == 2000);
    CHECK(derive_seed(42, 17) == derive_seed(42, 17));
    CHECK(derive_seed(42, 17) != derive_seed(43, 17));
}

TEST_CASE("fgn autocovariance closed form") {
    CHECK(fgn_autocovariance(0.5, 0) == 1.0);
    CHECK(fgn_autocovariance(0.5, 1) == 0.0);
    CHECK(fgn_autocovariance(0.5, 7) == 0.0);
    // ((k+1)^{2H} - 2k^{2H} + (k-1)^{2H}) / 2 at H=0.7, k=1: 2^{0.4} - 1.
    CHECK(std::abs(fgn_autocovariance(0.7, 1) - 0.31950791077289425937) < 1e-14);
    // Antipersistent: negative lag-1 autocovariance.
    CHECK(fgn_autocovariance(0.3, 1) < 0.0);
}

TEST_CASE("fbm generation is deterministic in the seed") {
    FbmSpec spec{0.7, 2048, 99};
    TimeSeries a = generate_fbm(spec);
    TimeSeries b = generate_fbm(spec);
    REQUIRE(a.size() == 2048);
    CHECK(a.values == b.values);
    CHECK_FALSE(a.has_dates());
    CHECK(a.values[0] == 0.0);

    spec.seed = 100;
    TimeSeries c = generate_fbm(spec);
    CHECK(a.values != c.values);

    FbmGenerator gen(0.7, 2048);
    TimeSeries d = gen.generate(99);
    CHECK(d.values == a.values);
}

TEST_CASE("fbm parameter validation") {
    CHECK_THROWS_AS(generate_fbm(FbmSpec{0.0, 100, 1}), invalid_input_error);
    CHECK_THROWS_AS(generate_fbm(FbmSpec{1.0, 100, 1}), invalid_input_error);
    CHECK_THROWS_AS(generate_fbm(FbmSpec{-0.3, 100, 1}), invalid_input_error);
    CHECK_THROWS_AS(generate_fbm(FbmSpec{0.5, 1, 1}), invalid_input_error);
    CHECK_THROWS_AS(FbmGenerator(2.0, 100), invalid_input_error);
}

TEST_CASE("fbm increments carry the target covariance structure") {
    // H=0.5 increments are i.i.d. standard normals: unit variance, no lag-1
    // correlation.
    TimeSeries walk = generate_fbm(FbmSpec{0.5, 100001, 7});
    std::vector<double> d_half = increments(walk);
    double var = 0.0;
    for (double v : d_half) var += v * v;
    var /= static_cast<double>(d_half.size());
    CHECK(var > 0.97);
    CHECK(var < 1.03);
    CHECK(std::abs(autocorrelation(d_half, 1)) < 0.015);

    // H=0.7 increments: lag-1 autocorrelation 2^{0.4} - 1.
    TimeSeries persistent = generate_fbm(FbmSpec{0.7, 100001, 8});
    std::vector<double> d_pers = increments(persistent);
    CHECK(std::abs(autocorrelation(d_pers, 1) - 0.31950791077289425937) < 0.012);

    // H=0.3 increments: negative lag-1 autocorrelation 2^{-0.4} - 1.
    TimeSeries anti = generate_fbm(FbmSpec{0.3, 100001, 9});
    std::vector<double> d_anti = increments(anti);
    CHECK(std::abs(autocorrelation(d_anti, 1) - (std::pow(2.0, -0.4) - 1.0)) < 0.012);
}

TEST_CASE("white-noise increments have near-maximal permutation entropy") {
    TimeSeries walk = generate_fbm(FbmSpec{0.5, 50001, 11});
    std::vector<double> noise = increments(walk);
    OrdinalDistribution dist = ordinal_distribution(noise, OrdinalConfig{4, 1});
    CHECK(normalized_entropy(dist.probabilities) > 0.995);
}

TEST_CASE("shuffle preserves the value multiset and the dates") {
    TimeSeries series;
    series.values = {3.5, 1.0, 4.0, 1.5, 9.25, 2.0, 6.0, 5.5};
    for (int i = 0; i < 8; ++i) {
        series.dates.push_back(Date{std::chrono::year{2020}, std::chrono::month{1},
                                    std::chrono::day{static_cast<unsigned>(i + 1)}});
    }
    TimeSeries shuffled = shuffle(series, 5);
    REQUIRE(shuffled.size() == series.size());
    CHECK(shuffled.dates == series.dates);

    std::vector<double> a = series.values, b = shuffled.values;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);

    CHECK(shuffle(series, 5).values == shuffled.values);

    TimeSeries longer;
    longer.values.resize(100);
    for (int i = 0; i < 100; ++i) longer.values[static_cast<std::size_t>(i)] = i;
    CHECK(shuffle(longer, 1).values != shuffle(longer, 2).values);
    CHECK(shuffle(longer, 1).values != longer.values);
}

TEST_CASE("shuffling a single observation is a no-op") {
    TimeSeries one;
    one.values = {42.0};
    TimeSeries out = shuffle(one, 123);
    CHECK(out.values == one.values);
}

TEST_CASE("shuffling destroys the temporal structure of a persistent path") {
    TimeSeries path = generate_fbm(FbmSpec{0.7, 8568, 21});
    TimeSeries shuffled = shuffle(path, 22);

    OrdinalConfig config{4, 1};
    QuantifierPoint original =
        quantifier_point(ordinal_distribution(path, config).probabilities);
    QuantifierPoint randomized =
        quantifier_point(ordinal_distribution(shuffled, config).probabilities);

    CHECK(randomized.entropy_normalized > original.entropy_normalized);
    double d_orig = std::hypot(1.0 - original.entropy_normalized, original.complexity);
    double d_rand = std::hypot(1.0 - randomized.entropy_normalized, randomized.complexity);
    CHECK(d_rand < d_orig);
    CHECK(randomized.entropy_normalized > 0.995);
}

TEST_CASE("baseline band of a single window has zero spread") {
    WindowSpec window{300, 20};
    OrdinalConfig config{4, 1};
    BaselineBand band = baseline_band(0.5, 1, 300, window, config, 64);
    CHECK(band.hurst == 0.5);
    CHECK(band.realizations == 1);
    CHECK(band.std_h == 0.0);
    CHECK(band.std_c == 0.0);

    // The single pooled window is the whole path of the derived seed.
    FbmGenerator gen(0.5, 300);
    TimeSeries path = gen.generate(derive_seed(64, 0));
    QuantifierPoint point =
        quantifier_point(ordinal_distribution(path, config).probabilities);
    CHECK(band.mean_h == point.entropy_normalized);
    CHECK(band.mean_c == point.complexity);
}

TEST_CASE("baseline band is bit-identical across thread counts") {
    WindowSpec window{300, 100};
    OrdinalConfig config{4, 1};
    BaselineBand one = baseline_band(0.6, 6, 1200, window, config, 9, 1);
    BaselineBand three = baseline_band(0.6, 6, 1200, window, config, 9, 3);
    BaselineBand hw = baseline_band(0.6, 6, 1200, window, config, 9, 0);
    CHECK(one.mean_h == three.mean_h);
    CHECK(one.std_h == three.std_h);
    CHECK(one.mean_c == three.mean_c);
    CHECK(one.std_c == three.std_c);
    CHECK(one.mean_h == hw.mean_h);
    CHECK(one.std_h == hw.std_h);
    CHECK(one.mean_c == hw.mean_c);
    CHECK(one.std_c == hw.std_c);

    CHECK(one.std_h > 0.0);  // several windows pooled, spread is real
}

TEST_CASE("baseline band validation") {
    WindowSpec window{300, 20};
    OrdinalConfig config{4, 1};
    CHECK_THROWS_AS(baseline_band(0.5, 0, 300, window, config, 1),
                    invalid_input_error);
    CHECK_THROWS_AS(baseline_band(1.5, 10, 300, window, config, 1),
                    invalid_input_error);
    CHECK_THROWS_AS(baseline_band(0.5, 10, 200, window, config, 1),
                    insufficient_data_error);
}

TEST_CASE("baseline csv round-trips bit-exactly") {
    WindowSpec window{300, 100};
    OrdinalConfig config{4, 1};
    std::vector<BaselineBand> bands;
    bands.push_back(baseline_band(0.3, 3, 900, window, config, 5));
    bands.push_back(baseline_band(0.7, 3, 900, window, config, 5));

    std::ostringstream out;
    write_baseline_csv(bands, out);
    std::string text = out.str();
    CHECK(text.rfind("hurst,realizations,mean_h,std_h,mean_c,std_c\n", 0) == 0);

    std::vector<BaselineBand> back = read_baseline_csv(text);
    REQUIRE(back.size() == bands.size());
    for (std::size_t i = 0; i < bands.size(); ++i) {
        CHECK(back[i].hurst == bands[i].hurst);
        CHECK(back[i].realizations == bands[i].realizations);
        CHECK(back[i].mean_h == bands[i].mean_h);
        CHECK(back[i].std_h == bands[i].std_h);
        CHECK(back[i].mean_c == bands[i].mean_c);
        CHECK(back[i].std_c == bands[i].std_c);
    }
}

TEST_CASE("baseline csv parse errors") {
    CHECK_THROWS_AS(read_baseline_csv("nope\n"), format_error);
    CHECK_THROWS_AS(
        read_baseline_csv("hurst,realizations,mean_h,std_h,mean_c,std_c\n0.5,2\n"),
        format_error);
}
