#pragma once

#include <stdexcept>
#include <string>

namespace kshg {

// Bad input: malformed files, out-of-range parameters, inconsistent models.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// An exact search was asked to run past its configured size limit.
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace kshg
