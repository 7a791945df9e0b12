// Microbenchmarks for the hot paths: symbolization, quantifiers, envelope
// construction, fBm synthesis, and the windowed pipeline.

#include <cmath>
#include <cstdint>
#include <vector>

#include <benchmark/benchmark.h>

#include "ceplane/ordinal.hpp"
#include "ceplane/quantifiers.hpp"
#include "ceplane/rng.hpp"
#include "ceplane/surrogates.hpp"
#include "ceplane/windows.hpp"

namespace {

std::vector<double> noise(std::size_t length, std::uint64_t seed) {
    ceplane::Rng rng(seed);
    std::vector<double> values(length);
    for (double& x : values) x = rng.gaussian();
    return values;
}

std::vector<double> simplex(std::size_t m, std::uint64_t seed) {
    ceplane::Rng rng(seed);
    std::vector<double> p(m);
    double sum = 0.0;
    for (double& x : p) {
        x = -std::log(rng.uniform01_open0());
        sum += x;
    }
    for (double& x : p) x /= sum;
    double rest = 1.0;
    for (std::size_t i = 0; i + 1 < m; ++i) rest -= p[i];
    p[m - 1] = rest;
    return p;
}

void BM_OrdinalDistribution(benchmark::State& state) {
    std::vector<double> series = noise(static_cast<std::size_t>(state.range(0)), 1);
    ceplane::OrdinalConfig config{4, 1};
    for (auto _ : state) {
        benchmark::DoNotOptimize(ceplane::ordinal_distribution(series, config));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_OrdinalDistribution)->Arg(300)->Arg(8568);

void BM_QuantifierPoint(benchmark::State& state) {
    std::vector<double> p = simplex(24, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ceplane::quantifier_point(p));
    }
}
BENCHMARK(BM_QuantifierPoint);

void BM_ShannonEntropyLargeAlphabet(benchmark::State& state) {
    std::vector<double> p = simplex(5040, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ceplane::shannon_entropy(p));
    }
}
BENCHMARK(BM_ShannonEntropyLargeAlphabet);

void BM_ComplexityEnvelope(benchmark::State& state) {
    std::size_t m = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(ceplane::complexity_envelope(m));
    }
}
BENCHMARK(BM_ComplexityEnvelope)->Arg(24)->Arg(120)->Unit(benchmark::kMillisecond);

void BM_FbmEigenvalues(benchmark::State& state) {
    for (auto _ : state) {
        ceplane::FbmGenerator generator(0.5, 8568);
        benchmark::DoNotOptimize(generator);
    }
}
BENCHMARK(BM_FbmEigenvalues)->Unit(benchmark::kMillisecond);

void BM_FbmGenerate(benchmark::State& state) {
    ceplane::FbmGenerator generator(0.5, 8568);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(generator.generate(seed++));
    }
    state.SetItemsProcessed(state.iterations() * 8568);
}
BENCHMARK(BM_FbmGenerate)->Unit(benchmark::kMillisecond);

void BM_Shuffle(benchmark::State& state) {
    ceplane::TimeSeries series;
    series.values = noise(8568, 4);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ceplane::shuffle(series, seed++));
    }
}
BENCHMARK(BM_Shuffle);

void BM_AnalyzeWindows(benchmark::State& state) {
    ceplane::TimeSeries series;
    series.values = noise(8568, 5);
    ceplane::WindowPlan plan = ceplane::plan_windows(series.size(), 300, 20);
    ceplane::OrdinalConfig config{4, 1};
    unsigned threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(ceplane::analyze_windows(series, plan, config, threads));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(plan.count()));
}
BENCHMARK(BM_AnalyzeWindows)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
