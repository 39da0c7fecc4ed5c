#ifndef HERGLOTZ_GEODESICS_HPP
#define HERGLOTZ_GEODESICS_HPP

#include <functional>
#include <memory>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "herglotz/wave_speed.hpp"

namespace herglotz {

/// A maximal geodesic, parametrized by its tip (point of smallest radius).
struct GeodesicSpec {
    double r0 = 0.5;
    double theta0 = 0.0;
    int orientation = +1; // +1: theta increases along the traversal
};

/// A broken ray: n_segments rotated copies of one geodesic, consecutive
/// copies sharing endpoints on the outer boundary.
struct BrokenRaySpec {
    GeodesicSpec base;
    int n_segments = 1;
};

struct PathSample {
    double t = 0.0; // arclength
    double r = 0.0;
    double theta = 0.0;
};

struct PathPolyline {
    std::vector<PathSample> samples;
    double total_length = 0.0;
    std::vector<double> speed_sq;     // sampled conserved quantities
    std::vector<double> ang_momentum; // = rho(r0) along the whole path
};

/// Cumulative integrals along the upward half of the geodesic with tip r0.
/// Everything is computed in the turning parameter rho with the substitution
/// rho = rho(r0) + t^2, which makes every radial integrand smooth; panels
/// split at wave-speed segment boundaries.  Instances are immutable.
class TipIntegrals {
public:
    struct Node {
        double t, r, omega, length, att;
        double dlen, domega; // analytic integrand values at the node
    };

    TipIntegrals(const WaveSpeed& w, double r0,
                 const std::function<double(double)>* lambda = nullptr, int pts_per_band = 2049);

    double r0() const { return r0_; }
    double rho0() const { return rho0_; }
    double half_length() const;
    double alpha() const; // half opening angle
    double att_total() const;

    double omega_at_r(double r) const;
    double att_at_r(double r) const;
    double length_at_r(double r) const;
    /// Radius after arclength s from the tip, s in [0, half_length].
    double r_at_length(double s) const;

    const std::vector<std::vector<Node>>& pieces() const { return pieces_; }

private:
    const Node* locate_by_r(double r, double* tval) const;

    double r0_, rho0_;
    std::vector<std::vector<Node>> pieces_;
};

/// Total length 2L(r0) of the geodesic with tip radius r0.
double geodesic_length(const WaveSpeed& w, double r0);

/// Angular distance 2*alpha(r0) between the endpoints (universal cover).
double opening_angle(const WaveSpeed& w, double r0);

/// Geodesic weight H(r; z) = c(r)^{-1} (1 - (z c(r) / (r c(z)))^2)^{-1/2}.
double weight_H(const WaveSpeed& w, double r, double z);

/// T_k(r; r0) = cos(k * omega(r; r0)) with omega the partial opening angle.
double chebyshev_T(const WaveSpeed& w, int k, double r, double r0);

/// Geodesic polyline from boundary to tip and back, n_samples points spaced
/// uniformly in arclength.
PathPolyline trace_geodesic(const WaveSpeed& w, const GeodesicSpec& spec, int n_samples = 513);

/// Independent verification oracle: integrates the geodesic ODE of the
/// metric c^{-2} e with classical fourth-order steps, refracting at jump
/// surfaces from the conserved quantities.
PathPolyline trace_ode_oracle(const WaveSpeed& w, const GeodesicSpec& spec, double step = 1e-3);

/// Concatenation of rotated copies of the base geodesic, reflecting at the
/// outer boundary with angle of incidence equal to angle of reflection.
PathPolyline broken_ray(const WaveSpeed& w, const BrokenRaySpec& spec,
                        int samples_per_segment = 257);

/// Detects alpha(r0) in pi*Q: returns (p, q) in lowest terms with q <= q_max
/// and |alpha(r0) - pi p/q| < tol, or nullopt.
std::optional<std::pair<int, int>> is_periodic(const WaveSpeed& w, double r0, int q_max = 50,
                                               double tol = 1e-9);

/// All radii r with alpha(r) = pi p/q for some q <= q_max, found by
/// bracketing on a fine grid of alpha samples per smooth band.
std::vector<std::tuple<double, int, int>> find_periodic_radii(const WaveSpeed& w, int q_max);

} // namespace herglotz

#endif
