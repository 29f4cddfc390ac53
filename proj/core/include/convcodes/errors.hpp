#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace convcodes {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Shapes or lengths that do not line up.
class DimensionError : public Error {
public:
    using Error::Error;
};

// Input violates a precondition (bad parameters, dependent rows, etc).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// Refusal to start an enumeration whose size exceeds a configured limit.
class SizeGuardError : public Error {
public:
    SizeGuardError(const std::string& what, double count)
        : Error(what), count_(count) {}

    // Number of items the refused enumeration would have produced.
    double count() const { return count_; }

private:
    double count_;
};

}  // namespace convcodes
