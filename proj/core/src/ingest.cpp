#include "ceplane/ingest.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include "ceplane/csv.hpp"
#include "ceplane/errors.hpp"

namespace ceplane {

PriceParseResult parse_price_csv(std::string_view content) {
    PriceParseResult result;
    bool header_seen = false;
    csv::for_each_line(content, [&](std::size_t line_number, std::string_view line) {
        if (!header_seen) {
            if (line != "date,price") {
                throw format_error("expected header 'date,price', got '" + std::string(line) +
                                       "'",
                                   line_number);
            }
            header_seen = true;
            return;
        }
        if (line.empty()) {
            return;
        }
        auto fields = csv::split(line);
        if (fields.size() != 2) {
            throw format_error("expected 2 fields, got " + std::to_string(fields.size()),
                               line_number);
        }
        auto date = parse_date(fields[0]);
        if (!date) {
            throw format_error("field 'date' is not an ISO date (YYYY-MM-DD): '" +
                                   std::string(fields[0]) + "'",
                               line_number);
        }
        if (fields[1].empty()) {
            ++result.dropped_rows;
            result.warnings.push_back("line " + std::to_string(line_number) + " (" +
                                      format_date(*date) + "): empty price, row dropped");
            return;
        }
        double price = parse_double_field(fields[1], line_number, "price");
        if (!std::isfinite(price)) {
            ++result.dropped_rows;
            result.warnings.push_back("line " + std::to_string(line_number) + " (" +
                                      format_date(*date) + "): non-finite price, row dropped");
            return;
        }
        if (!result.series.dates.empty() &&
            date_serial(*date) <= date_serial(result.series.dates.back())) {
            throw ordering_error("date " + format_date(*date) + " does not increase over " +
                                     format_date(result.series.dates.back()),
                                 line_number);
        }
        result.series.dates.push_back(*date);
        result.series.values.push_back(price);
    });
    if (!header_seen) {
        throw format_error("missing 'date,price' header", 0);
    }
    if (result.series.values.empty()) {
        throw empty_input_error("no rows with a usable price");
    }
    return result;
}

void write_price_csv(const TimeSeries& series, std::ostream& out) {
    validate(series);
    if (!series.has_dates()) {
        throw invalid_input_error("price CSV requires a dated series");
    }
    out << "date,price\n";
    for (std::size_t i = 0; i < series.size(); ++i) {
        out << format_date(series.dates[i]) << ',' << format_double(series.values[i]) << '\n';
    }
}

std::vector<EventAnnotation> parse_events_csv(std::string_view content) {
    std::vector<EventAnnotation> events;
    bool header_seen = false;
    csv::for_each_line(content, [&](std::size_t line_number, std::string_view line) {
        if (!header_seen) {
            if (line != "date,label") {
                throw format_error("expected header 'date,label', got '" + std::string(line) +
                                       "'",
                                   line_number);
            }
            header_seen = true;
            return;
        }
        if (line.empty()) {
            return;
        }
        // Split at the first comma only; labels may contain commas.
        std::size_t comma = line.find(',');
        if (comma == std::string_view::npos) {
            throw format_error("expected 'date,label', got '" + std::string(line) + "'",
                               line_number);
        }
        auto date = parse_date(line.substr(0, comma));
        if (!date) {
            throw format_error("field 'date' is not an ISO date (YYYY-MM-DD): '" +
                                   std::string(line.substr(0, comma)) + "'",
                               line_number);
        }
        std::string_view label = line.substr(comma + 1);
        if (label.empty()) {
            throw format_error("field 'label' must be non-empty", line_number);
        }
        events.push_back(EventAnnotation{*date, std::string(label)});
    });
    if (!header_seen) {
        throw format_error("missing 'date,label' header", 0);
    }
    std::stable_sort(events.begin(), events.end(),
                     [](const EventAnnotation& a, const EventAnnotation& b) {
                         return date_serial(a.date) < date_serial(b.date);
                     });
    return events;
}

}  // namespace ceplane
