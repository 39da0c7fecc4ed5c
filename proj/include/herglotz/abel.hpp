#ifndef HERGLOTZ_ABEL_HPP
#define HERGLOTZ_ABEL_HPP

#include <functional>
#include <vector>

#include "herglotz/interp.hpp"

namespace herglotz {

/// A generalized Abel kernel: the transform
///   I^a_K f(x) = int_x^1 (y-x)^{-alpha} K(x,y) f(y) dy
/// on the triangle Delta = {0 <= x <= y <= 1}.  The metadata bounds feed the
/// layer-width recipe of the Neumann inversion; `breakpoints` lists interior
/// ordinates where K may be non-smooth (quadrature panels split there).
struct KernelSpec {
    double alpha = 0.5;
    std::function<double(double, double)> K;
    std::function<double(double, double)> dK1; // optional d/dx K(x,y)
    double sup_K = 1.0;
    double lip1_K = 0.0;
    double diag_min = 1.0;
    std::vector<double> breakpoints;

    static KernelSpec constant(double alpha, double value = 1.0);
};

/// Checks the declared metadata against samples of K over Delta.
/// Throws DomainMismatch when a declared bound is violated by > 1e-9.
void validate_kernel(const KernelSpec& k, int samples = 60);

/// c_alpha = pi / sin(alpha pi), the value of J^alpha_1(x,y) for x < y.
double c_alpha(double alpha);

/// Forward transform at a point; the endpoint singularity is removed by the
/// substitution y = x + t^{1/(1-alpha)}.  I^a_K f(upper) = 0 by definition.
double abel_forward(const KernelSpec& k, const std::function<double(double)>& f, double x,
                    double upper = 1.0, double rel_tol = 1e-10);
double abel_forward(const KernelSpec& k, const GridFunction& f, double x);

/// J^a_K(x,y) = int_x^y (z-x)^{alpha-1} (y-z)^{-alpha} K(z,y) dz by
/// Gauss-Jacobi quadrature matching both endpoint singularities.
double compose_J(const KernelSpec& k, double x, double y);

/// Classical inversion of g = I^a_1 f (Abel pair):
///   f(x) = -c_alpha^{-1} d/dx [I^{1-a}_1 g](x).
GridFunction invert_classical(double alpha, const GridFunction& g);

/// Inversion for a factored kernel K(x,y) = a(x) b(y), nowhere vanishing:
///   f(x) = -b(x)^{-1} c_alpha^{-1} d/dx [I^{1-a}_L g](x),  L(x,y) = 1/a(y).
GridFunction invert_factored(double alpha, const GridFunction& a, const GridFunction& b,
                             const GridFunction& g);

struct NeumannOptions {
    int layer_grid = 161;      // collocation points per layer
    double width_floor = 1e-3; // smallest permitted layer width
    double target_q = 0.5;     // contraction bound the layer width must meet
    double residual_tol = 1e-10;
    int max_terms = 200;
};

/// Constructive layer-stripping inversion of g = I^a_K f on [r_stop, 1] for
/// kernels that are Lipschitz near the diagonal and nonzero on it.  Each
/// layer is solved by a Neumann series around the invertible part
/// E = -C c_alpha id with C frozen at the layer's top diagonal point; deeper
/// layers see the data minus the already-recovered shallow contribution.
GridFunction invert_neumann(const KernelSpec& k, const GridFunction& g, double r_stop,
                            const NeumannOptions& opts = {});

/// Derivative of f(x) = int_x^1 (y^2-x^2)^{-alpha} phi(x,y) dy:
///   f'(x) = int_x^1 (y^2-x^2)^{-alpha} [d_x phi + d_y((x/y) phi)] dy
///           - x (1-x^2)^{-alpha} phi(x,1).
/// Partials of phi use the supplied callbacks when given, else five-point
/// stencils.
double abel_derivative(const std::function<double(double, double)>& phi, double alpha, double x,
                       const std::function<double(double, double)>& dphi_x = nullptr,
                       const std::function<double(double, double)>& dphi_y = nullptr);

/// Fourth-order finite differences on a uniform grid (one-sided at the ends).
std::vector<double> differentiate_uniform(const std::vector<double>& f, double h);

} // namespace herglotz

#endif
