#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tbcalc {

/// Raised for dimension mismatches and violated data invariants.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed document syntax. Line and column are 1-based.
class ParseError : public InputError {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : InputError(what), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace tbcalc
