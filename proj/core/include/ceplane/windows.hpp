#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ceplane/ordinal.hpp"
#include "ceplane/quantifiers.hpp"
#include "ceplane/time_series.hpp"

namespace ceplane {

/// Window geometry: length N and step delta between window starts.
struct WindowSpec {
    std::size_t length = 300;
    std::size_t step = 20;
};

struct WindowPlan {
    std::size_t window_length = 0;
    std::size_t step = 0;
    std::size_t series_length = 0;
    std::vector<std::size_t> starts;  // {0, step, 2*step, ...}

    std::size_t count() const { return starts.size(); }
};

/// Starts {0, delta, 2*delta, ...} with every window fully inside the series;
/// trailing data shorter than N is discarded. count = floor((L-N)/delta) + 1.
/// Throws insufficient_data_error when the series is shorter than one window.
WindowPlan plan_windows(std::size_t series_length, std::size_t window_length,
                        std::size_t step);

WindowPlan plan_windows(std::size_t series_length, const WindowSpec& spec);

struct WindowResult {
    std::size_t window_index = 0;
    std::size_t start_offset = 0;
    std::optional<Date> start_date;
    std::optional<Date> end_date;
    QuantifierPoint point;
    bool low_sample_warning = false;

    // Tie bookkeeping pooled into the analyze summary.
    std::uint64_t tie_vectors = 0;
    std::uint64_t total_vectors = 0;
};

/// One WindowResult per planned start, ordered by window index. Windows are
/// independent; `threads` > 1 computes them in parallel with bit-identical
/// output (0 = hardware concurrency).
std::vector<WindowResult> analyze_windows(const TimeSeries& series,
                                          const WindowPlan& plan,
                                          const OrdinalConfig& config,
                                          unsigned threads = 1);

/// Consecutive chunk of windows, for presentation grouping.
struct WindowGroup {
    std::size_t group_index = 0;
    std::size_t first = 0;   // index into the results sequence
    std::size_t count = 0;
};

/// Consecutive chunks of group_size; the final group holds the remainder.
std::vector<WindowGroup> group_windows(std::size_t result_count,
                                       std::size_t group_size);

std::vector<WindowGroup> group_windows(std::span<const WindowResult> results,
                                       std::size_t group_size);

/// CSV export, header
/// `window_index,start_offset,start_date,end_date,h,c,low_sample_warning`.
/// Dates are blank when the series carries none; h and c round-trip exactly.
void write_windows_csv(std::span<const WindowResult> results, std::ostream& out);

std::vector<WindowResult> read_windows_csv(std::string_view content);

}  // namespace ceplane
