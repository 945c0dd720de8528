#pragma once

#include <stdexcept>
#include <string>

namespace genfourier {

// Series failed its truncation criterion inside the validated domain, or the
// argument lies outside it.
class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// A table or grid was requested beyond the guarded maximum.
class CapacityError : public std::length_error {
public:
    explicit CapacityError(const std::string& what) : std::length_error(what) {}
};

// Transform plan misuse: mismatched grids or kernel arguments outside the
// validated Bessel domain.
class PlanError : public std::logic_error {
public:
    explicit PlanError(const std::string& what) : std::logic_error(what) {}
};

// Non-finite samples fed into quadrature.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// An integral that does not converge for the requested exponent.
class DivergenceError : public std::runtime_error {
public:
    explicit DivergenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace genfourier
