#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace fairsplit {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

/// Malformed textual input (rationals, rectangles, cut specs, chords).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Cut parameters outside their family's domain. `constraint()` names the
/// violated rule, e.g. "corner-domain" or "crossing-cuts".
class DomainError : public Error {
public:
    DomainError(std::string constraint, const std::string& what)
        : Error(what), constraint_(std::move(constraint)) {}

    const std::string& constraint() const noexcept { return constraint_; }

private:
    std::string constraint_;
};

/// Invalid geometric construction: non-simple polygon, chord off the boundary.
class GeometryError : public Error {
public:
    using Error::Error;
};

} // namespace fairsplit
