#include "ceplane/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ceplane/errors.hpp"

namespace ceplane {

std::string format_double(double value) {
    char buffer[64];
    auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, result.ptr);
}

std::string format_double17(double value) {
    char buffer[64];
    int written = std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return std::string(buffer, buffer + written);
}

double parse_double_field(std::string_view field, std::size_t line, std::string_view column) {
    double value = 0.0;
    const char* first = field.data();
    const char* last = first + field.size();
    auto result = std::from_chars(first, last, value);
    if (result.ec != std::errc() || result.ptr != last || field.empty()) {
        throw format_error("field '" + std::string(column) + "' is not a valid number: '" +
                               std::string(field) + "'",
                           line);
    }
    return value;
}

namespace csv {

std::vector<std::string_view> split(std::string_view line) {
    if (!line.empty() && line.back() == '\r') {
        line.remove_suffix(1);
    }
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = line.find(',', pos);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(pos));
            break;
        }
        fields.push_back(line.substr(pos, comma - pos));
        pos = comma + 1;
    }
    return fields;
}

}  // namespace csv

std::string read_file(const std::filesystem::path& path) {
    std::ifstream stream(path, std::ios::binary);
    if (!stream) {
        throw io_error("cannot open '" + path.string() + "' for reading");
    }
    std::ostringstream buffer;
    buffer << stream.rdbuf();
    if (stream.bad()) {
        throw io_error("failed while reading '" + path.string() + "'");
    }
    return std::move(buffer).str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
    std::ofstream stream(path, std::ios::binary | std::ios::trunc);
    if (!stream) {
        throw io_error("cannot open '" + path.string() + "' for writing");
    }
    stream.write(content.data(), static_cast<std::streamsize>(content.size()));
    stream.flush();
    if (!stream) {
        throw io_error("failed while writing '" + path.string() + "'");
    }
}

}  // namespace ceplane
