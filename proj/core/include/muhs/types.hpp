#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace muhs {

using cplx = std::complex<double>;

// Thrown when a half-line truncation neglects more mass than the caller
// allowed.  `bound` is the computed estimate for the neglected tail.
class truncation_error : public std::runtime_error {
public:
    truncation_error(const std::string& what, double bound)
        : std::runtime_error(what), bound(bound) {}
    double bound;
};

// Thrown when the dense reference solve cannot be trusted.
class oracle_failure : public std::runtime_error {
public:
    oracle_failure(const std::string& what, double condition_estimate)
        : std::runtime_error(what), condition_estimate(condition_estimate) {}
    double condition_estimate;
};

} // namespace muhs
