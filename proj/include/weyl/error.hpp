#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace weyl {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class DependentGenerators : public Error {
public:
    using Error::Error;
};

class BasisMismatch : public Error {
public:
    using Error::Error;
};

class LatticeMismatch : public Error {
public:
    using Error::Error;
};

/// An operation needs n = 1 (or some other structural precondition) and did not get it.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A monomial with |mu| = 0 was used where only W^(1) is allowed.
class SubalgebraViolation : public Error {
public:
    using Error::Error;
};

/// A module action landed outside the finite window it is computed on.
class WindowEscape : public Error {
public:
    using Error::Error;
};

class UnknownSymbol : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position)
    {
    }

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace weyl
