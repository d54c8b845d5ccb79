#ifndef KOZMO_ERRORS_HPP
#define KOZMO_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kozmo {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live in rings of different dimension, or an index is out of range.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// The input is outside the domain of the operation (zero ideal, unit ideal,
/// non-artinian input where artinian is required, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// lcm of the minimal generators is requested for the zero ideal.
class UndefinedLambdaError : public DomainError {
public:
    using DomainError::DomainError;
};

/// An exponent would leave the representable range.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// A brute-force routine was asked to work beyond its size guard.
class ScaleError : public Error {
public:
    using Error::Error;
};

/// Mayer-Vietoris children were requested for a node with fewer than two generators.
class LeafError : public Error {
public:
    using Error::Error;
};

/// A well-formed argument that the operation cannot accept (e.g. Betti
/// bounds from a pruned tree).
class InvalidInputError : public Error {
public:
    using Error::Error;
};

/// A random ideal with the requested shape cannot be produced.
class FeasibilityError : public Error {
public:
    using Error::Error;
};

/// Malformed ideal text. Line and column are 1-based.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& message, std::size_t line, std::size_t column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace kozmo

#endif  // KOZMO_ERRORS_HPP
