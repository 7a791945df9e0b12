#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ceplane {

using Date = std::chrono::year_month_day;

/// Strict ISO-8601 calendar date (YYYY-MM-DD, zero-padded, valid calendar
/// day). Returns nullopt on any deviation.
std::optional<Date> parse_date(std::string_view text);

std::string format_date(const Date& date);

/// Days since the civil epoch; used for ordering and interpolation.
long date_serial(const Date& date);

/// Ordered real-valued observations with optional calendar dates.
struct TimeSeries {
    std::vector<double> values;
    std::vector<Date> dates;  // empty, or one date per value

    std::size_t size() const { return values.size(); }
    bool has_dates() const { return !dates.empty(); }
};

/// Enforces the type invariants: at least one value, all values finite,
/// dates (when present) matching in length and strictly increasing.
/// Throws invalid_input_error on violation.
void validate(const TimeSeries& series);

/// Elementwise natural-log returns: r_t = ln(x_{t+1}) - ln(x_t).
/// Requires strictly positive values; dates (if any) shift to the later
/// observation of each pair.
TimeSeries log_returns(const TimeSeries& series);

}  // namespace ceplane
