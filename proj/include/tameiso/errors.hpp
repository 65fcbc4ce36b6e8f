#pragma once

#include <stdexcept>
#include <string>

namespace tameiso {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Operands belong to different rings or coefficient fields.
class RingMismatchError : public Error {
public:
    explicit RingMismatchError(const std::string& what) : Error(what) {}
};

// A documented precondition of an operation was violated.
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

// Text input rejected by the expression grammar; positions are 1-based.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line, int column)
        : Error(what + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace tameiso
