#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mcurves {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A null (lightlike) vector was passed where a non-null one is required.
class NullInputError : public Error {
public:
    using Error::Error;
};

/// Two linearly dependent vectors were passed where independence is required.
class DependentInputError : public Error {
public:
    using Error::Error;
};

class OutOfDomainError : public Error {
public:
    using Error::Error;
};

/// The finite-difference stencil does not fit inside the curve domain.
class StepTooLargeError : public Error {
public:
    using Error::Error;
};

/// A sampled velocity vector is not spacelike.
class NotSpacelikeError : public Error {
public:
    using Error::Error;
};

class VanishingCurvatureError : public Error {
public:
    using Error::Error;
};

/// A frame vector has the wrong causal character for this curve class
/// (tangent and normal must be spacelike, binormal timelike).
class WrongCausalTypeError : public Error {
public:
    using Error::Error;
};

/// |tau^2 - kappa^2| is below tolerance: the rotation-axis case analysis
/// is undefined at this parameter.
class NullDarbouxError : public Error {
public:
    using Error::Error;
};

/// Curvature pair outside the admissible range of a generator
/// (includes the |kappa| == |tau| gate, which admits no curve in this class).
class CaseViolationError : public Error {
public:
    using Error::Error;
};

/// Evaluation requested inside the guard band around the involute cusp s = c.
class SingularParameterError : public Error {
public:
    using Error::Error;
};

/// A completed frame fails its causal signature or orthogonality checks.
class FrameInconsistentError : public Error {
public:
    using Error::Error;
};

/// A tangent-bundle point violates membership or tangency invariants.
class InvariantViolationError : public Error {
public:
    using Error::Error;
};

/// Curve speed below tolerance: residual and lift checks are undefined.
class DegenerateSpeedError : public Error {
public:
    using Error::Error;
};

/// A curve velocity is null where the residual computation needs g(c',c') != 0.
class NullTangentError : public Error {
public:
    using Error::Error;
};

/// Sphere-membership defect along an integrated trajectory exceeded its bound.
class DriftExceededError : public Error {
public:
    using Error::Error;
};

/// Text input (expression or curve spec) failed to parse. Carries 1-based
/// line and column of the offending token.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error(what + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace mcurves
