#pragma once

#include <stdexcept>
#include <string>

namespace ncs4 {

/// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotCentral : Error {
    explicit NotCentral(const std::string& msg = "element is not central") : Error(msg) {}
};

struct NotDivisible : Error {
    explicit NotDivisible(const std::string& msg = "element is not divisible by the given central factor")
        : Error(msg) {}
};

struct DeltaGradeMismatch : Error {
    explicit DeltaGradeMismatch(const std::string& msg = "cannot add local elements of different delta grade")
        : Error(msg) {}
};

struct NotAUnit : Error {
    explicit NotAUnit(const std::string& msg = "local element is not a recognizable unit") : Error(msg) {}
};

struct NotInvertibleMetric : Error {
    explicit NotInvertibleMetric(const std::string& msg = "metric entry is not invertible") : Error(msg) {}
};

struct NotInImage : Error {
    explicit NotInImage(const std::string& msg = "ambient vector is not fixed by the tangent projector")
        : Error(msg) {}
};

struct DivergentIntegral : Error {
    explicit DivergentIntegral(const std::string& msg = "integral does not converge") : Error(msg) {}
};

/// Raised when the boundary hypothesis alpha(1) = alpha(-1) = 0 fails.
struct AlphaBoundaryNonzero : Error {
    std::string at_plus1, at_minus1;
    AlphaBoundaryNonzero(std::string p1, std::string m1)
        : Error("alpha does not vanish at the poles: alpha(1)=" + p1 + ", alpha(-1)=" + m1),
          at_plus1(std::move(p1)), at_minus1(std::move(m1)) {}
};

struct ConvergenceFailure : Error {
    explicit ConvergenceFailure(const std::string& msg = "numerical quadrature failed to converge") : Error(msg) {}
};

/// Internal consistency failure: contracted curvature disagrees with the closed form.
struct ClosedFormMismatch : Error {
    explicit ClosedFormMismatch(const std::string& msg = "curvature contraction does not match the closed form")
        : Error(msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error("parse error: " + msg) {}
};

struct UnsupportedDelta : Error {
    explicit UnsupportedDelta(const std::string& msg = "metric perturbation is not in the supported family")
        : Error(msg) {}
};

} // namespace ncs4
