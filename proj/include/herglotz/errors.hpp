#ifndef HERGLOTZ_ERRORS_HPP
#define HERGLOTZ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace herglotz {

/// Base class for all numerical and domain errors thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Argument outside the domain of definition (e.g. radius not in (R,1]).
class OutOfDomain : public Error {
public:
    using Error::Error;
};

/// Requested value outside the attainable range of a map.
class OutOfRange : public Error {
public:
    using Error::Error;
};

/// Turning parameter falls inside a jump gap of the wave speed; the
/// corresponding ray would be tangent to a discontinuity surface and is
/// excluded from all transforms.
class JumpTangency : public Error {
public:
    using Error::Error;
};

/// Adaptive quadrature exhausted its refinement budget.
class QuadratureFailure : public Error {
public:
    using Error::Error;
};

/// The Neumann remainder estimate is >= 1 even at the smallest layer width.
class ContractionFailure : public Error {
public:
    using Error::Error;
};

/// Iteration budget exhausted before the residual target was met.
class NotConverged : public Error {
public:
    using Error::Error;
};

/// Grid functions passed to an operation live on incompatible domains.
class DomainMismatch : public Error {
public:
    using Error::Error;
};

/// A factor that must be inverted is numerically zero.
class DivisionByZero : public Error {
public:
    using Error::Error;
};

/// The requested radius does not correspond to a periodic broken ray.
class NotPeriodic : public Error {
public:
    using Error::Error;
};

/// ODE step size too large: conserved quantities drifted beyond tolerance.
class StepTooLarge : public Error {
public:
    using Error::Error;
};

/// A spectral diagonal factor needed for recovery is below threshold.
class IllConditioned : public Error {
public:
    using Error::Error;
};

/// Re-projection onto the band-limited basis left too much residual energy.
class ProjectionResidual : public Error {
public:
    using Error::Error;
};

} // namespace herglotz

#endif
