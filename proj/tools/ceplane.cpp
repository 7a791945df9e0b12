// Command-line front end for the complexity-entropy plane pipeline:
// windowed analysis of price series, fBm baselines, shuffle tests, plane
// bounds, and SVG rendering. Outputs are deterministic for fixed inputs,
// seed, and flags, independent of thread count.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ceplane/csv.hpp"
#include "ceplane/errors.hpp"
#include "ceplane/ingest.hpp"
#include "ceplane/ordinal.hpp"
#include "ceplane/quantifiers.hpp"
#include "ceplane/surrogates.hpp"
#include "ceplane/svg.hpp"
#include "ceplane/time_series.hpp"
#include "ceplane/windows.hpp"

namespace {

// Fixed default seed so a fresh checkout reproduces the reference outputs.
constexpr std::uint64_t kDefaultSeed = 0x5EEDBA5EULL;

namespace fs = std::filesystem;
using nlohmann::json;

struct CommonOptions {
    int dimension = 4;
    int delay = 1;
    std::size_t window = 300;
    std::size_t step = 20;
    std::size_t group_size = 20;
    std::uint64_t seed = kDefaultSeed;
    std::string transform = "raw";
    std::string out_dir = ".";
    unsigned threads = 0;  // 0 = hardware concurrency
};

ceplane::OrdinalConfig ordinal_config(const CommonOptions& options) {
    return ceplane::OrdinalConfig{options.dimension, options.delay};
}

fs::path prepare_out_dir(const std::string& out_dir) {
    fs::path path(out_dir);
    std::error_code ec;
    fs::create_directories(path, ec);
    if (ec) {
        throw ceplane::io_error("cannot create output directory '" + out_dir +
                                "': " + ec.message());
    }
    return path;
}

ceplane::TimeSeries load_series(const std::string& prices_path, const std::string& transform) {
    std::string content = ceplane::read_file(prices_path);
    ceplane::PriceParseResult parsed = ceplane::parse_price_csv(content);
    for (const std::string& warning : parsed.warnings) {
        std::cerr << "warning: " << warning << "\n";
    }
    if (transform == "log-returns") {
        return ceplane::log_returns(parsed.series);
    }
    return parsed.series;
}

void run_analyze(const std::string& prices_path, const CommonOptions& options) {
    fs::path out = prepare_out_dir(options.out_dir);
    ceplane::TimeSeries series = load_series(prices_path, options.transform);
    ceplane::WindowPlan plan =
        ceplane::plan_windows(series.size(), ceplane::WindowSpec{options.window, options.step});
    std::vector<ceplane::WindowResult> results =
        ceplane::analyze_windows(series, plan, ordinal_config(options), options.threads);

    std::ostringstream csv;
    ceplane::write_windows_csv(results, csv);
    ceplane::write_file(out / "windows.csv", csv.str());

    double min_h = 1.0;
    double max_h = 0.0;
    double sum_h = 0.0;
    double min_c = 1.0;
    double max_c = 0.0;
    double sum_c = 0.0;
    std::size_t low_sample = 0;
    std::uint64_t tie_vectors = 0;
    std::uint64_t total_vectors = 0;
    for (const ceplane::WindowResult& result : results) {
        min_h = std::min(min_h, result.point.entropy_normalized);
        max_h = std::max(max_h, result.point.entropy_normalized);
        sum_h += result.point.entropy_normalized;
        min_c = std::min(min_c, result.point.complexity);
        max_c = std::max(max_c, result.point.complexity);
        sum_c += result.point.complexity;
        low_sample += result.low_sample_warning ? 1 : 0;
        tie_vectors += result.tie_vectors;
        total_vectors += result.total_vectors;
    }
    double count = static_cast<double>(results.size());

    json summary;
    summary["config"] = {{"dimension", options.dimension},
                         {"delay", options.delay},
                         {"window_length", options.window},
                         {"step", options.step},
                         {"group_size", options.group_size},
                         {"transform", options.transform}};
    summary["input"] = {{"analyzed_points", series.size()},
                        {"first_date", ceplane::format_date(series.dates.front())},
                        {"last_date", ceplane::format_date(series.dates.back())}};
    summary["windows"] = {{"count", results.size()},
                          {"low_sample", low_sample},
                          {"tie_rate", static_cast<double>(tie_vectors) /
                                           static_cast<double>(total_vectors)}};
    summary["entropy"] = {{"min", min_h}, {"max", max_h}, {"mean", sum_h / count}};
    summary["complexity"] = {{"min", min_c}, {"max", max_c}, {"mean", sum_c / count}};
    ceplane::write_file(out / "summary.json", summary.dump(2) + "\n");
}

void run_baseline(std::vector<double> hursts, int realizations, std::size_t length,
                  const CommonOptions& options) {
    fs::path out = prepare_out_dir(options.out_dir);
    if (hursts.empty()) {
        hursts = {0.3, 0.4, 0.5, 0.6};
    }
    std::vector<ceplane::BaselineBand> bands;
    bands.reserve(hursts.size());
    for (double hurst : hursts) {
        bands.push_back(ceplane::baseline_band(hurst, realizations, length,
                                               ceplane::WindowSpec{options.window, options.step},
                                               ordinal_config(options), options.seed,
                                               options.threads));
    }
    std::ostringstream csv;
    ceplane::write_baseline_csv(bands, csv);
    ceplane::write_file(out / "baseline.csv", csv.str());
}

void run_shuffle_test(const std::string& prices_path, const CommonOptions& options) {
    fs::path out = prepare_out_dir(options.out_dir);
    ceplane::TimeSeries series = load_series(prices_path, options.transform);
    ceplane::OrdinalConfig config = ordinal_config(options);

    ceplane::OrdinalDistribution original_dist = ceplane::ordinal_distribution(series, config);
    ceplane::QuantifierPoint original = ceplane::quantifier_point(original_dist.probabilities);
    ceplane::TimeSeries shuffled_series = ceplane::shuffle(series, options.seed);
    ceplane::OrdinalDistribution shuffled_dist =
        ceplane::ordinal_distribution(shuffled_series, config);
    ceplane::QuantifierPoint shuffled = ceplane::quantifier_point(shuffled_dist.probabilities);

    auto corner_distance = [](const ceplane::QuantifierPoint& point) {
        return std::hypot(1.0 - point.entropy_normalized, point.complexity);
    };
    auto point_json = [&](const ceplane::QuantifierPoint& point) {
        return json{{"h", point.entropy_normalized},
                    {"c", point.complexity},
                    {"distance_to_corner", corner_distance(point)}};
    };

    json report;
    report["config"] = {{"dimension", options.dimension},
                        {"delay", options.delay},
                        {"transform", options.transform},
                        {"seed", options.seed}};
    report["original"] = point_json(original);
    report["shuffled"] = point_json(shuffled);
    report["shuffled_closer_to_corner"] =
        corner_distance(shuffled) < corner_distance(original);
    ceplane::write_file(out / "shuffle_test.json", report.dump(2) + "\n");
}

void run_envelope(const CommonOptions& options) {
    fs::path out = prepare_out_dir(options.out_dir);
    ceplane::ComplexityEnvelope envelope = ceplane::complexity_envelope(
        static_cast<std::size_t>(ceplane::factorial(options.dimension)));
    std::ostringstream csv;
    ceplane::write_envelope_csv(envelope, csv);
    ceplane::write_file(out / "envelope.csv", csv.str());
}

void run_render(const std::string& windows_path, const std::string& baseline_path,
                const std::string& envelope_path, const std::string& events_path,
                const CommonOptions& options) {
    fs::path out = prepare_out_dir(options.out_dir);
    std::vector<ceplane::WindowResult> windows =
        ceplane::read_windows_csv(ceplane::read_file(windows_path));
    std::vector<ceplane::BaselineBand> bands =
        ceplane::read_baseline_csv(ceplane::read_file(baseline_path));
    ceplane::ComplexityEnvelope envelope =
        ceplane::read_envelope_csv(ceplane::read_file(envelope_path));
    std::vector<ceplane::EventAnnotation> events;
    if (!events_path.empty()) {
        events = ceplane::parse_events_csv(ceplane::read_file(events_path));
    }

    ceplane::write_file(out / "plane.svg",
                        ceplane::render_plane_svg(windows, options.group_size, bands, envelope));
    std::vector<std::string> warnings;
    std::string timeline = ceplane::render_timeline_svg(windows, events, &warnings);
    for (const std::string& warning : warnings) {
        std::cerr << "warning: " << warning << "\n";
    }
    ceplane::write_file(out / "entropy_timeline.svg", timeline);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ordinal-pattern analysis of time series on the complexity-entropy plane"};
    app.require_subcommand(1);

    CommonOptions options;
    std::string prices_path;
    std::vector<double> hursts;
    int realizations = 100;
    std::size_t fbm_length = 8568;
    std::string windows_path;
    std::string baseline_path;
    std::string envelope_path;
    std::string events_path;

    auto add_ordinal_flags = [&](CLI::App* cmd) {
        cmd->add_option("--dimension", options.dimension, "Embedding dimension D (2..7)")
            ->capture_default_str();
        cmd->add_option("--delay", options.delay, "Embedding delay tau")->capture_default_str();
    };
    auto add_window_flags = [&](CLI::App* cmd) {
        cmd->add_option("--window", options.window, "Sliding window length N")
            ->capture_default_str();
        cmd->add_option("--step", options.step, "Step between window starts")
            ->capture_default_str();
    };
    auto add_out_flag = [&](CLI::App* cmd) {
        cmd->add_option("--out", options.out_dir, "Output directory")->capture_default_str();
    };
    auto add_seed_flag = [&](CLI::App* cmd) {
        cmd->add_option("--seed", options.seed, "RNG seed (default 0x5EEDBA5E)");
    };
    auto add_transform_flag = [&](CLI::App* cmd) {
        cmd->add_option("--transform", options.transform,
                        "Input transform: raw or log-returns")
            ->check(CLI::IsMember({"raw", "log-returns"}))
            ->capture_default_str();
    };
    auto add_threads_flag = [&](CLI::App* cmd) {
        cmd->add_option("--threads", options.threads,
                        "Worker threads (0 = hardware concurrency); results do not depend on "
                        "this");
    };

    CLI::App* analyze = app.add_subcommand(
        "analyze", "Sliding-window entropy and complexity of a price series");
    analyze->add_option("prices", prices_path, "Price CSV (date,price)")->required();
    add_ordinal_flags(analyze);
    add_window_flags(analyze);
    analyze->add_option("--group-size", options.group_size,
                        "Windows per presentation group (echoed to summary)")
        ->capture_default_str();
    add_transform_flag(analyze);
    add_threads_flag(analyze);
    add_out_flag(analyze);
    analyze->callback([&] { run_analyze(prices_path, options); });

    CLI::App* baseline =
        app.add_subcommand("baseline", "Pooled fBm baseline bands for the plane");
    baseline->add_option("--hurst", hursts,
                         "Hurst exponent, repeatable (default 0.3 0.4 0.5 0.6)");
    baseline->add_option("--realizations", realizations, "fBm paths per Hurst value")
        ->capture_default_str();
    baseline->add_option("--length", fbm_length, "Length of each fBm path")
        ->capture_default_str();
    add_ordinal_flags(baseline);
    add_window_flags(baseline);
    add_seed_flag(baseline);
    add_threads_flag(baseline);
    add_out_flag(baseline);
    baseline->callback(
        [&] { run_baseline(hursts, realizations, fbm_length, options); });

    CLI::App* shuffle_test = app.add_subcommand(
        "shuffle-test", "Whole-series quantifiers before and after shuffling");
    shuffle_test->add_option("prices", prices_path, "Price CSV (date,price)")->required();
    add_ordinal_flags(shuffle_test);
    add_transform_flag(shuffle_test);
    add_seed_flag(shuffle_test);
    add_out_flag(shuffle_test);
    shuffle_test->callback([&] { run_shuffle_test(prices_path, options); });

    CLI::App* envelope =
        app.add_subcommand("envelope", "Theoretical complexity bounds for M = D!");
    add_ordinal_flags(envelope);
    add_out_flag(envelope);
    envelope->callback([&] { run_envelope(options); });

    CLI::App* render = app.add_subcommand("render", "SVG figures from pipeline CSV outputs");
    render->add_option("--windows", windows_path, "windows.csv from analyze")->required();
    render->add_option("--baseline", baseline_path, "baseline.csv from baseline")->required();
    render->add_option("--envelope", envelope_path, "envelope.csv from envelope")->required();
    render->add_option("--events", events_path, "Optional events CSV (date,label)");
    render->add_option("--group-size", options.group_size, "Windows per color group")
        ->capture_default_str();
    add_out_flag(render);
    render->callback([&] {
        run_render(windows_path, baseline_path, envelope_path, events_path, options);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error[invalid-input]: " << e.what() << "\n";
        return 2;
    } catch (const ceplane::error& e) {
        std::cerr << "error[" << ceplane::to_string(e.category()) << "]: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error[internal]: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
