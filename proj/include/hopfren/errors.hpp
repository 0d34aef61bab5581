#pragma once

#include <stdexcept>

namespace hopfren {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A coefficient beyond a series' truncation order was required.
class WindowUnderflow : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

// Operands belong to different Hopf algebras.
class AlgebraMismatch : public Error {
public:
    using Error::Error;
};

class NotRegular : public Error {
public:
    using Error::Error;
};

class NotComposable : public Error {
public:
    using Error::Error;
};

// Coproduct table extracted from series identities is not coassociative.
class ExtractionInconsistency : public Error {
public:
    using Error::Error;
};

// A structural guarantee failed at runtime (e.g. exp of an infinitesimal
// character that is not a character).
class InvariantViolation : public Error {
public:
    using Error::Error;
};

} // namespace hopfren
