#pragma once

#include <stdexcept>

namespace harper {

// Bad input: rejected before any computation starts. CLI exit code 1.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A computation could not meet its accuracy contract. CLI exit code 2.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace harper
