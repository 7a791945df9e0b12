#include "ceplane/windows.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "ceplane/csv.hpp"
#include "ceplane/errors.hpp"
#include "ceplane/parallel.hpp"

namespace ceplane {

WindowPlan plan_windows(std::size_t series_length, std::size_t window_length, std::size_t step) {
    if (window_length < 2) {
        throw invalid_input_error("window length must be at least 2, got " +
                                  std::to_string(window_length));
    }
    if (step < 1) {
        throw invalid_input_error("window step must be at least 1");
    }
    if (series_length < window_length) {
        throw insufficient_data_error("series of length " + std::to_string(series_length) +
                                          " is shorter than one window of " +
                                          std::to_string(window_length),
                                      window_length);
    }
    WindowPlan plan;
    plan.window_length = window_length;
    plan.step = step;
    plan.series_length = series_length;
    std::size_t count = (series_length - window_length) / step + 1;
    plan.starts.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        plan.starts.push_back(i * step);
    }
    return plan;
}

WindowPlan plan_windows(std::size_t series_length, const WindowSpec& spec) {
    return plan_windows(series_length, spec.length, spec.step);
}

std::vector<WindowResult> analyze_windows(const TimeSeries& series, const WindowPlan& plan,
                                          const OrdinalConfig& config, unsigned threads) {
    validate(series);
    validate(config);
    if (plan.series_length != series.size()) {
        throw invalid_input_error("window plan was made for length " +
                                  std::to_string(plan.series_length) + ", series has " +
                                  std::to_string(series.size()));
    }
    for (std::size_t start : plan.starts) {
        if (start + plan.window_length > series.size()) {
            throw invalid_input_error("window start " + std::to_string(start) +
                                      " overruns the series");
        }
    }

    std::vector<WindowResult> results(plan.count());
    parallel_for(plan.count(), threads, [&](std::size_t i) {
        std::size_t start = plan.starts[i];
        WindowResult& result = results[i];
        result.window_index = i;
        result.start_offset = start;
        std::span<const double> window(series.values.data() + start, plan.window_length);
        OrdinalDistribution dist = ordinal_distribution(window, config);
        result.point = quantifier_point(dist.probabilities);
        result.low_sample_warning = dist.low_sample;
        result.tie_vectors = dist.tie_vectors;
        result.total_vectors = dist.total;
        if (series.has_dates()) {
            result.start_date = series.dates[start];
            result.end_date = series.dates[start + plan.window_length - 1];
        }
    });
    return results;
}

std::vector<WindowGroup> group_windows(std::size_t result_count, std::size_t group_size) {
    if (group_size < 1) {
        throw invalid_input_error("group size must be at least 1");
    }
    std::vector<WindowGroup> groups;
    for (std::size_t first = 0; first < result_count; first += group_size) {
        WindowGroup group;
        group.group_index = groups.size();
        group.first = first;
        group.count = std::min(group_size, result_count - first);
        groups.push_back(group);
    }
    return groups;
}

std::vector<WindowGroup> group_windows(std::span<const WindowResult> results,
                                       std::size_t group_size) {
    return group_windows(results.size(), group_size);
}

void write_windows_csv(std::span<const WindowResult> results, std::ostream& out) {
    out << "window_index,start_offset,start_date,end_date,h,c,low_sample_warning\n";
    for (const WindowResult& result : results) {
        out << result.window_index << ',' << result.start_offset << ','
            << (result.start_date ? format_date(*result.start_date) : std::string()) << ','
            << (result.end_date ? format_date(*result.end_date) : std::string()) << ','
            << format_double(result.point.entropy_normalized) << ','
            << format_double(result.point.complexity) << ','
            << (result.low_sample_warning ? "true" : "false") << '\n';
    }
}

std::vector<WindowResult> read_windows_csv(std::string_view content) {
    std::vector<WindowResult> results;
    bool header_seen = false;
    csv::for_each_line(content, [&](std::size_t line_number, std::string_view line) {
        if (!header_seen) {
            if (line != "window_index,start_offset,start_date,end_date,h,c,low_sample_warning") {
                throw format_error(
                    "expected header "
                    "'window_index,start_offset,start_date,end_date,h,c,low_sample_warning', "
                    "got '" +
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
        if (fields.size() != 7) {
            throw format_error("expected 7 fields, got " + std::to_string(fields.size()),
                               line_number);
        }
        WindowResult result;
        result.window_index = static_cast<std::size_t>(
            parse_double_field(fields[0], line_number, "window_index"));
        result.start_offset = static_cast<std::size_t>(
            parse_double_field(fields[1], line_number, "start_offset"));
        if (!fields[2].empty()) {
            auto date = parse_date(fields[2]);
            if (!date) {
                throw format_error("field 'start_date' is not an ISO date: '" +
                                       std::string(fields[2]) + "'",
                                   line_number);
            }
            result.start_date = *date;
        }
        if (!fields[3].empty()) {
            auto date = parse_date(fields[3]);
            if (!date) {
                throw format_error("field 'end_date' is not an ISO date: '" +
                                       std::string(fields[3]) + "'",
                                   line_number);
            }
            result.end_date = *date;
        }
        result.point.entropy_normalized = parse_double_field(fields[4], line_number, "h");
        result.point.complexity = parse_double_field(fields[5], line_number, "c");
        if (fields[6] == "true") {
            result.low_sample_warning = true;
        } else if (fields[6] == "false") {
            result.low_sample_warning = false;
        } else {
            throw format_error("field 'low_sample_warning' must be 'true' or 'false', got '" +
                                   std::string(fields[6]) + "'",
                               line_number);
        }
        results.push_back(result);
    });
    if (!header_seen) {
        throw format_error("empty windows file", 0);
    }
    return results;
}

}  // namespace ceplane
