#include "ceplane/surrogates.hpp"

#include <cmath>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "ceplane/csv.hpp"
#include "ceplane/errors.hpp"
#include "ceplane/parallel.hpp"
#include "ceplane/rng.hpp"

namespace ceplane {

TimeSeries shuffle(const TimeSeries& series, std::uint64_t seed) {
    validate(series);
    TimeSeries result = series;
    Rng rng(seed);
    for (std::size_t i = result.values.size() - 1; i > 0; --i) {
        std::size_t j = static_cast<std::size_t>(rng.bounded(i + 1));
        std::swap(result.values[i], result.values[j]);
    }
    return result;
}

BaselineBand baseline_band(double hurst, int realizations, std::size_t length,
                           const WindowSpec& window_spec, const OrdinalConfig& config,
                           std::uint64_t seed, unsigned threads) {
    if (realizations < 1) {
        throw invalid_input_error("baseline needs at least one realization, got " +
                                  std::to_string(realizations));
    }
    validate(config);
    FbmGenerator generator(hurst, length);
    WindowPlan plan = plan_windows(length, window_spec);

    // One slot per realization; the pooled reduction below walks them in
    // index order, so the statistics are identical for any thread count.
    std::vector<std::vector<std::pair<double, double>>> slots(
        static_cast<std::size_t>(realizations));
    parallel_for(static_cast<std::size_t>(realizations), threads, [&](std::size_t r) {
        TimeSeries path = generator.generate(derive_seed(seed, r));
        std::vector<WindowResult> results = analyze_windows(path, plan, config, 1);
        auto& slot = slots[r];
        slot.reserve(results.size());
        for (const WindowResult& result : results) {
            slot.emplace_back(result.point.entropy_normalized, result.point.complexity);
        }
    });

    double sum_h = 0.0;
    double sum_c = 0.0;
    std::size_t count = 0;
    for (const auto& slot : slots) {
        for (const auto& [h, c] : slot) {
            sum_h += h;
            sum_c += c;
            ++count;
        }
    }
    double mean_h = sum_h / static_cast<double>(count);
    double mean_c = sum_c / static_cast<double>(count);
    double var_h = 0.0;
    double var_c = 0.0;
    for (const auto& slot : slots) {
        for (const auto& [h, c] : slot) {
            var_h += (h - mean_h) * (h - mean_h);
            var_c += (c - mean_c) * (c - mean_c);
        }
    }
    BaselineBand band;
    band.hurst = hurst;
    band.realizations = realizations;
    band.mean_h = mean_h;
    band.std_h = std::sqrt(var_h / static_cast<double>(count));
    band.mean_c = mean_c;
    band.std_c = std::sqrt(var_c / static_cast<double>(count));
    return band;
}

void write_baseline_csv(std::span<const BaselineBand> bands, std::ostream& out) {
    out << "hurst,realizations,mean_h,std_h,mean_c,std_c\n";
    for (const BaselineBand& band : bands) {
        out << format_double(band.hurst) << ',' << band.realizations << ','
            << format_double(band.mean_h) << ',' << format_double(band.std_h) << ','
            << format_double(band.mean_c) << ',' << format_double(band.std_c) << '\n';
    }
}

std::vector<BaselineBand> read_baseline_csv(std::string_view content) {
    std::vector<BaselineBand> bands;
    bool header_seen = false;
    csv::for_each_line(content, [&](std::size_t line_number, std::string_view line) {
        if (!header_seen) {
            if (line != "hurst,realizations,mean_h,std_h,mean_c,std_c") {
                throw format_error(
                    "expected header 'hurst,realizations,mean_h,std_h,mean_c,std_c', got '" +
                        std::string(line) + "'",
                    line_number);
            }
            header_seen = true;
            return;
        }
        if (line.empty()) {
            return;
        }
        auto fields = csv::split(line);
        if (fields.size() != 6) {
            throw format_error("expected 6 fields, got " + std::to_string(fields.size()),
                               line_number);
        }
        BaselineBand band;
        band.hurst = parse_double_field(fields[0], line_number, "hurst");
        band.realizations =
            static_cast<int>(parse_double_field(fields[1], line_number, "realizations"));
        band.mean_h = parse_double_field(fields[2], line_number, "mean_h");
        band.std_h = parse_double_field(fields[3], line_number, "std_h");
        band.mean_c = parse_double_field(fields[4], line_number, "mean_c");
        band.std_c = parse_double_field(fields[5], line_number, "std_c");
        bands.push_back(band);
    });
    if (!header_seen) {
        throw format_error("empty baseline file", 0);
    }
    return bands;
}

}  // namespace ceplane
