#pragma once

#include <stdexcept>
#include <string>

namespace plateopt {

/// Thrown when an iterative or linear solve fails to reach its tolerance.
/// Carries the last residual so callers can report how far off the solve was.
class NumericFailure : public std::runtime_error {
public:
    NumericFailure(const std::string& what, double residual)
        : std::runtime_error(what), residual_(residual) {}

    double residual() const { return residual_; }

private:
    double residual_;
};

} // namespace plateopt
