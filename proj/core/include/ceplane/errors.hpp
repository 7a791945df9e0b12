#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ceplane {

/// Machine-parsable failure categories; the CLI prints them as
/// `error[<category>]: message` on stderr.
enum class error_category {
    invalid_input,
    invalid_distribution,
    insufficient_data,
    format,
    ordering,
    empty_input,
    io,
    internal,
};

const char* to_string(error_category category);

class error : public std::runtime_error {
public:
    error(error_category category, const std::string& message)
        : std::runtime_error(message), category_(category) {}

    error_category category() const noexcept { return category_; }

private:
    error_category category_;
};

class invalid_input_error : public error {
public:
    explicit invalid_input_error(const std::string& message)
        : error(error_category::invalid_input, message) {}
};

class invalid_distribution_error : public error {
public:
    explicit invalid_distribution_error(const std::string& message)
        : error(error_category::invalid_distribution, message) {}
};

/// Carries the minimum series length the failing operation would have needed.
class insufficient_data_error : public error {
public:
    insufficient_data_error(const std::string& message, std::size_t required_minimum)
        : error(error_category::insufficient_data, message),
          required_minimum_(required_minimum) {}

    std::size_t required_minimum() const noexcept { return required_minimum_; }

private:
    std::size_t required_minimum_;
};

namespace detail {
inline std::string with_line(const std::string& message, std::size_t line) {
    return line > 0 ? "line " + std::to_string(line) + ": " + message : message;
}
}  // namespace detail

/// Parse failure; `line` is 1-based, 0 when no line applies.
class format_error : public error {
public:
    explicit format_error(const std::string& message, std::size_t line = 0)
        : error(error_category::format, detail::with_line(message, line)), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class ordering_error : public error {
public:
    explicit ordering_error(const std::string& message, std::size_t line = 0)
        : error(error_category::ordering, detail::with_line(message, line)), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class empty_input_error : public error {
public:
    explicit empty_input_error(const std::string& message)
        : error(error_category::empty_input, message) {}
};

class io_error : public error {
public:
    explicit io_error(const std::string& message)
        : error(error_category::io, message) {}
};

class internal_error : public error {
public:
    explicit internal_error(const std::string& message)
        : error(error_category::internal, message) {}
};

}  // namespace ceplane
