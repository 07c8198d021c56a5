#pragma once

#include <stdexcept>
#include <string>

namespace edcp {

/// Invalid input data or configuration (bad CSV, out-of-range parameter, ...).
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Internal numerical failure (eigensolver did not converge, ...).
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace edcp
