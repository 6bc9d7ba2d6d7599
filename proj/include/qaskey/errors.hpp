#pragma once

#include <stdexcept>
#include <string>

namespace qaskey {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parameters or arguments outside the admissible domain.
struct DomainError : Error {
    using Error::Error;
};

// A denominator (q-)shifted factorial vanishes inside the summation range.
struct PoleError : DomainError {
    using DomainError::DomainError;
};

struct ConvergenceError : Error {
    using Error::Error;
};

// Value contractually real but the imaginary part exceeds the bound.
struct RealificationError : Error {
    using Error::Error;
};

struct UnsupportedFamily : Error {
    using Error::Error;
};

}  // namespace qaskey
