#pragma once

#include <stdexcept>
#include <string>

namespace divland {

// Bad input: parameters out of range, malformed config, unknown keys.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A quantity that is mathematically undefined at the requested point
// (zero height, singular estimator denominator, p <= 0 drag regime, ...).
class NumericalError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace divland
