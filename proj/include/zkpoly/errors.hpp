#pragma once

#include <stdexcept>
#include <string>

namespace zkpoly {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A table or matrix would exceed the configured memory budget.
struct CapacityError : Error {
    using Error::Error;
};

/// An enumeration's search space exceeds the caller-supplied cap.
/// `space_size` is the exact size as a decimal string (it can exceed 2^64).
struct BudgetExceeded : Error {
    std::string space_size;
    explicit BudgetExceeded(std::string size)
        : Error("search space of size " + size + " exceeds budget"),
          space_size(std::move(size)) {}
};

/// A polynomial's actual degree exceeds the requested bound.
struct DegreeExceeded : Error {
    int degree;
    explicit DegreeExceeded(int actual)
        : Error("interpolated degree " + std::to_string(actual) + " exceeds bound"),
          degree(actual) {}
};

struct Underflow : Error {
    using Error::Error;
};

struct LengthMismatch : Error {
    using Error::Error;
};

struct NotPowerOfTwo : Error {
    using Error::Error;
};

}  // namespace zkpoly
