#ifndef HERGLOTZ_WAVE_SPEED_HPP
#define HERGLOTZ_WAVE_SPEED_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "herglotz/errors.hpp"

namespace herglotz {

/// One polynomial piece of a wave speed, valid on the half-open interval
/// (a, b].  Degree <= 3 keeps c' exact.
struct Segment {
    double a = 0.0;
    double b = 0.0;
    std::array<double, 4> coeffs{{0.0, 0.0, 0.0, 0.0}};

    double eval(double r) const {
        return coeffs[0] + r * (coeffs[1] + r * (coeffs[2] + r * coeffs[3]));
    }
    double eval_deriv(double r) const {
        return coeffs[1] + r * (2.0 * coeffs[2] + r * 3.0 * coeffs[3]);
    }
};

/// Result of the Herglotz / jump-condition validation.
struct HerglotzReport {
    bool pass = false;
    double min_herglotz_margin = 0.0; // smallest d/dr(r/c) seen
    std::vector<std::pair<double, double>> jump_violations; // (breakpoint, excess)
    std::string notes;
};

/// Piecewise-polynomial radial wave speed c(r) on (R, 1].  Segment membership
/// follows the (a, b] convention, so the value at a breakpoint belongs to the
/// segment below it.  Immutable after construction; all methods are safe to
/// call concurrently.
class WaveSpeed {
public:
    WaveSpeed(double inner_radius, std::vector<Segment> segments);

    /// Euclidean profile c == 1 on (R, 1].
    static WaveSpeed euclidean(double inner_radius);
    /// Single-segment profile with the given polynomial.
    static WaveSpeed polynomial(double inner_radius, const std::array<double, 4>& coeffs);

    double inner_radius() const { return inner_radius_; }
    const std::vector<Segment>& segments() const { return segments_; }
    /// Interior breakpoints a_1 < ... < a_{N-1} (excludes R and 1).
    const std::vector<double>& breakpoints() const { return breakpoints_; }

    double c(double r) const;
    double c_prime(double r) const;

    /// rho(r) = r / c(r), the turning parameter.
    double rho(double r) const;
    double rho_prime(double r) const;

    /// Right-sided limits at an interior breakpoint a.
    double c_right_limit(double a) const;
    double rho_right_limit(double a) const;

    /// rho-intervals skipped at upward jumps: [rho(a), rho(a+)).  Turning
    /// parameters inside a gap correspond to rays tangent to the jump
    /// surface, which are excluded.
    std::vector<std::pair<double, double>> rho_gaps() const;

    /// Inverse of rho.  Throws OutOfRange outside the attainable values and
    /// JumpTangency strictly inside a gap.  |rho(result) - p| <= 1e-12.
    double rho_inverse(double p) const;

    /// True when r is a valid geodesic tip radius: inside (R, 1) and not at
    /// a jump breakpoint.
    bool tip_valid(double r) const;
    void require_tip(double r) const;

    int segment_index(double r) const;

private:
    double rho_right_limit_or_inner() const;

    double inner_radius_;
    std::vector<Segment> segments_;
    std::vector<double> breakpoints_;
};

HerglotzReport check_herglotz(const WaveSpeed& w, int grid_points = 10000);

/// Throws Error unless check_herglotz passes.
void require_herglotz(const WaveSpeed& w);

} // namespace herglotz

#endif
