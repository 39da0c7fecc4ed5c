#ifndef HERGLOTZ_QUADRATURE_HPP
#define HERGLOTZ_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace herglotz {

/// Nodes and weights of a quadrature rule on [-1, 1].
struct QuadRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule (cached).
const QuadRule& gauss_legendre(int n);

/// n-point Gauss-Jacobi rule for the weight (1-x)^a (1+x)^b, a,b > -1
/// (cached).  Computed by Golub-Welsch from the Jacobi recurrence.
const QuadRule& gauss_jacobi(int n, double a, double b);

/// int_lo^hi f with an n-point Gauss-Legendre rule.
double integrate_gl(const std::function<double(double)>& f, double lo, double hi, int n = 20);

/// Adaptive panel-bisection quadrature; the error of each panel is estimated
/// by comparing nested Gauss-Legendre rules.  Throws QuadratureFailure when
/// the panel budget is exhausted before the tolerance is met.
double integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                          double rel_tol = 1e-10, double abs_tol = 1e-14,
                          int max_panels = 20000);

/// int weight(1-x)^a (1+x)^b * f over [-1,1] via Gauss-Jacobi.
double integrate_jacobi(const std::function<double(double)>& f, double a, double b, int n = 48);

/// Cumulative integral of uniformly sampled values (spacing h), fourth
/// order: out[i] = int_{t0}^{t_i}.  out[0] = 0.
std::vector<double> cumulative_uniform(const std::vector<double>& f, double h);

/// Integral of samples y on abscissae x over [x[i0], x.back()], using local
/// cubic pieces (fourth order on smooth data).
double integrate_samples(const std::vector<double>& x, const std::vector<double>& y,
                         std::size_t i0 = 0);

} // namespace herglotz

#endif
