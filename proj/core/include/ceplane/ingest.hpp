#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ceplane/time_series.hpp"

namespace ceplane {

/// Parsed price series plus row-drop diagnostics.
struct PriceParseResult {
    TimeSeries series;
    std::size_t dropped_rows = 0;             // empty / non-finite prices
    std::vector<std::string> warnings;        // one entry per dropped row
};

/// Parses `date,price` CSV (ISO dates, plain decimals, LF or CRLF).
/// Rows with an empty or non-finite price are dropped with a warning; a
/// malformed header raises format_error, a non-increasing date raises
/// ordering_error with the offending line, and zero surviving rows raise
/// empty_input_error.
PriceParseResult parse_price_csv(std::string_view content);

/// Inverse of parse_price_csv; values round-trip bit-exactly.
void write_price_csv(const TimeSeries& series, std::ostream& out);

struct EventAnnotation {
    Date date;
    std::string label;
};

/// Parses `date,label` CSV; labels are kept verbatim (a comma splits only
/// once, so labels may contain commas). Events come back sorted by date.
std::vector<EventAnnotation> parse_events_csv(std::string_view content);

}  // namespace ceplane
