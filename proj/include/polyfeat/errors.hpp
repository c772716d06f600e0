#pragma once

#include <stdexcept>
#include <string>

namespace polyfeat {

/// Raised for malformed user input: files, grammars, inconsistent data.
/// The CLI maps these to exit code 1; anything else is an internal error (2).
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Input error carrying a source position (1-based line/column).
class ParseError : public InputError {
public:
    ParseError(const std::string& msg, int line, int column)
        : InputError(msg + " at line " + std::to_string(line) + ", column " +
                     std::to_string(column)),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace polyfeat
