#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cantorh {

// Base class for all library errors.  kind() returns a stable machine-readable
// tag used by the CLI when emitting error JSON.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
    virtual const char* kind() const noexcept { return "error"; }
};

// Invalid argument values (sizes, non-power-of-two grids, bad fit inputs).
class ArgumentError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "argument"; }
};

// A requested construction exceeds the configured size limits.
class CapacityError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "capacity"; }
};

// Geometrically invalid input: overlapping circles, basepoint on a slit,
// root bracket not found, and similar.
class GeometryError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "geometry"; }
};

// An iteration failed to reach its tolerance.  Carries the per-iteration
// criterion/residual history for diagnosis.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, std::vector<double> history)
        : Error(what), history_(std::move(history)) {}
    const char* kind() const noexcept override { return "convergence"; }
    const std::vector<double>& history() const noexcept { return history_; }

private:
    std::vector<double> history_;
};

// Evaluation point too close to a boundary circle for the quadrature to be
// accurate at the configured grid size.
class NearBoundaryError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "near-boundary"; }
};

// A computed quantity missed its accuracy contract (e.g. oracle residual).
class AccuracyError : public Error {
public:
    AccuracyError(const std::string& what, double measured)
        : Error(what), measured_(measured) {}
    const char* kind() const noexcept override { return "accuracy"; }
    double measured() const noexcept { return measured_; }

private:
    double measured_ = 0.0;
};

// Assembled output violates an internal consistency requirement
// (e.g. a merged curve loses monotonicity), indicating upstream inaccuracy.
class ConsistencyError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "consistency"; }
};

// Near-threshold sampling could not bracket the requested radii.
class SamplingError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "sampling"; }
};

// Evaluation exactly at an arc endpoint where the field is discontinuous.
class EndpointError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "endpoint"; }
};

} // namespace cantorh
