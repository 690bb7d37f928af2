#pragma once

#include <stdexcept>
#include <string>

namespace planar {

/// Base class for all errors thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// An m-ary operation was requested with m < 2 (or k < 2 for the generators).
struct ArityError : Error {
    explicit ArityError(const std::string& msg) : Error(msg) {}
};

/// Leaf index outside 1..deg(S).
struct IndexError : Error {
    explicit IndexError(const std::string& msg) : Error(msg) {}
};

/// A coefficient or slice was requested beyond the exactness bound of a series.
struct PrecisionError : Error {
    explicit PrecisionError(const std::string& msg) : Error(msg) {}
};

/// A y-labeled monomial appeared where an x-only series is required.
struct VariableError : Error {
    explicit VariableError(const std::string& msg) : Error(msg) {}
};

/// Substitution target has x-order 0.
struct OrderError : Error {
    explicit OrderError(const std::string& msg) : Error(msg) {}
};

/// Reversion input is not of the form x + (higher order terms).
struct NormalizationError : Error {
    explicit NormalizationError(const std::string& msg) : Error(msg) {}
};

/// Expression or encoding text does not match the grammar.
struct SyntaxError : Error {
    SyntaxError(const std::string& msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"), pos(position) {}
    std::size_t pos;
};

} // namespace planar
