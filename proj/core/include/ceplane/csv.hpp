#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace ceplane {

/// Shortest decimal form that parses back to the identical double.
std::string format_double(double value);

/// Fixed 17-significant-digit form (full double precision).
std::string format_double17(double value);

/// Locale-independent strtod on the exact field; throws format_error when the
/// field is not a plain finite decimal.
double parse_double_field(std::string_view field, std::size_t line,
                          std::string_view column);

namespace csv {

/// Splits one CSV line on commas (no quoting); a trailing '\r' is stripped
/// before splitting.
std::vector<std::string_view> split(std::string_view line);

/// Iterates lines of `content` (LF or CRLF); the callback gets the 1-based
/// line number and the line without its terminator.
template <typename F>
void for_each_line(std::string_view content, F&& callback) {
    std::size_t line_number = 0;
    std::size_t pos = 0;
    while (pos <= content.size()) {
        if (pos == content.size()) {
            break;
        }
        std::size_t eol = content.find('\n', pos);
        std::string_view line;
        if (eol == std::string_view::npos) {
            line = content.substr(pos);
            pos = content.size() + 1;
        } else {
            line = content.substr(pos, eol - pos);
            pos = eol + 1;
        }
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        ++line_number;
        callback(line_number, line);
    }
}

}  // namespace csv

/// Whole-file read; throws io_error naming the path on failure.
std::string read_file(const std::filesystem::path& path);

/// Atomic-enough whole-file write; throws io_error naming the path.
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace ceplane
