#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace galoiskit {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Precondition violated by the caller (bad argument, wrong field, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A configured computation cap was hit. `partial` carries whatever
/// progress count is meaningful for the operation (elements enumerated,
/// field degree reached, ...).
class CapExceeded : public Error {
public:
    CapExceeded(const std::string& what, std::size_t partial = 0)
        : Error(what), partial_(partial) {}

    std::size_t partial() const noexcept { return partial_; }

private:
    std::size_t partial_;
};

/// An internal consistency check failed. Always a bug.
class InternalError : public Error {
public:
    using Error::Error;
};

/// Syntax error in textual input, tagged with a 0-based character offset.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " at position " + std::to_string(pos)), pos_(pos) {}

    std::size_t position() const noexcept { return pos_; }

private:
    std::size_t pos_;
};

} // namespace galoiskit
