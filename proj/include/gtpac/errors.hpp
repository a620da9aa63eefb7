#pragma once

#include <stdexcept>
#include <string>

namespace gtpac {

/// Thrown when an argument violates a documented precondition or type
/// invariant. `field()` names the offending parameter.
class InvalidParameter : public std::invalid_argument {
public:
    InvalidParameter(std::string field, const std::string& what)
        : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// Thrown when two objects that must share a dimension disagree
/// (e.g. outcome length vs. matrix rows).
class DimensionMismatch : public std::invalid_argument {
public:
    explicit DimensionMismatch(const std::string& what)
        : std::invalid_argument(what) {}
};

/// Thrown when a bound or optimization has no feasible solution within the
/// configured search range.
class Unsatisfiable : public std::runtime_error {
public:
    explicit Unsatisfiable(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when an iterative solver fails to reach a fixed point within its
/// iteration cap. Carries the last iterate so callers can inspect it.
class NonConvergence : public std::runtime_error {
public:
    NonConvergence(const std::string& what, double last_p, long long last_g)
        : std::runtime_error(what), last_p_(last_p), last_g_(last_g) {}

    double last_p() const noexcept { return last_p_; }
    long long last_g() const noexcept { return last_g_; }

private:
    double last_p_;
    long long last_g_;
};

}  // namespace gtpac
