#pragma once

#include <stdexcept>
#include <string>

namespace cpn {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or inconsistent input (bad descriptor, dimension mismatch,
// zero vector, division by zero, ...).  CLI exit code 2.
struct ValidationError : Error {
    using Error::Error;
};

// An exact algebraic certificate failed (projector law, tower invariant,
// polynomial certificate, ...).  CLI exit code 3.
struct CertificateError : Error {
    using Error::Error;
};

// Numerical trouble: pole on an integration domain, non-convergence,
// non-real integral of a supposedly real integrand.  CLI exit code 4.
struct NumericsError : Error {
    using Error::Error;
};

}  // namespace cpn
