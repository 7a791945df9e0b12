#include "ceplane/time_series.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

#include "ceplane/errors.hpp"

namespace ceplane {

namespace {

bool parse_fixed_uint(std::string_view text, unsigned& out) {
    const char* first = text.data();
    const char* last = first + text.size();
    auto result = std::from_chars(first, last, out);
    return result.ec == std::errc() && result.ptr == last;
}

}  // namespace

std::optional<Date> parse_date(std::string_view text) {
    // Exactly YYYY-MM-DD: 4-2-2 digits, zero padded.
    if (text.size() != 10 || text[4] != '-' || text[7] != '-') {
        return std::nullopt;
    }
    for (std::size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u}) {
        if (text[i] < '0' || text[i] > '9') {
            return std::nullopt;
        }
    }
    unsigned year = 0;
    unsigned month = 0;
    unsigned day = 0;
    if (!parse_fixed_uint(text.substr(0, 4), year) ||
        !parse_fixed_uint(text.substr(5, 2), month) ||
        !parse_fixed_uint(text.substr(8, 2), day)) {
        return std::nullopt;
    }
    Date date{std::chrono::year(static_cast<int>(year)), std::chrono::month(month),
              std::chrono::day(day)};
    if (!date.ok()) {
        return std::nullopt;
    }
    return date;
}

std::string format_date(const Date& date) {
    char buffer[16];
    std::snprintf(buffer, sizeof(buffer), "%04d-%02u-%02u", static_cast<int>(date.year()),
                  static_cast<unsigned>(date.month()), static_cast<unsigned>(date.day()));
    return buffer;
}

long date_serial(const Date& date) {
    return static_cast<long>(std::chrono::sys_days(date).time_since_epoch().count());
}

void validate(const TimeSeries& series) {
    if (series.values.empty()) {
        throw invalid_input_error("time series must contain at least one value");
    }
    for (std::size_t i = 0; i < series.values.size(); ++i) {
        if (!std::isfinite(series.values[i])) {
            throw invalid_input_error("time series value at position " + std::to_string(i) +
                                      " is not finite");
        }
    }
    if (!series.dates.empty()) {
        if (series.dates.size() != series.values.size()) {
            throw invalid_input_error("time series has " + std::to_string(series.dates.size()) +
                                      " dates for " + std::to_string(series.values.size()) +
                                      " values");
        }
        for (std::size_t i = 1; i < series.dates.size(); ++i) {
            if (date_serial(series.dates[i]) <= date_serial(series.dates[i - 1])) {
                throw invalid_input_error("time series dates must be strictly increasing; " +
                                          format_date(series.dates[i]) + " at position " +
                                          std::to_string(i) + " does not follow " +
                                          format_date(series.dates[i - 1]));
            }
        }
    }
}

TimeSeries log_returns(const TimeSeries& series) {
    validate(series);
    if (series.size() < 2) {
        throw insufficient_data_error("log returns need at least two observations", 2);
    }
    TimeSeries result;
    result.values.reserve(series.size() - 1);
    for (std::size_t i = 0; i + 1 < series.size(); ++i) {
        double a = series.values[i];
        double b = series.values[i + 1];
        if (a <= 0.0 || b <= 0.0) {
            throw invalid_input_error("log returns require strictly positive values; found " +
                                      std::to_string(a <= 0.0 ? a : b) + " at position " +
                                      std::to_string(a <= 0.0 ? i : i + 1));
        }
        result.values.push_back(std::log(b) - std::log(a));
    }
    if (series.has_dates()) {
        result.dates.assign(series.dates.begin() + 1, series.dates.end());
    }
    return result;
}

}  // namespace ceplane
