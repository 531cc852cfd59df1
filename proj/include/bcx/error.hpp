#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bcx {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

/// A floating-point operation on finite inputs produced a non-finite value.
class Overflow : public Error {
public:
    Overflow() : Error("floating-point overflow") {}
    explicit Overflow(const std::string& what) : Error(what) {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

class NotInvertible : public Error {
public:
    NotInvertible() : Error("value is zero or a zero divisor and has no inverse") {}
};

/// Non-homogeneous classification requires a nonzero right-hand side.
class ZeroRightHandSide : public Error {
public:
    ZeroRightHandSide()
        : Error("right-hand side is zero; use the homogeneous classification") {}
};

/// Rank reports computed under different pivoting policies cannot be compared.
class PolicyMismatch : public Error {
public:
    PolicyMismatch() : Error("rank reports were computed under different policies") {}
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& expected)
        : Error("parse error at line " + std::to_string(line) + ", column " +
                std::to_string(column) + ": expected " + expected),
          line_(line),
          column_(column),
          expected_(expected) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::string& expected() const { return expected_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string expected_;
};

}  // namespace bcx
