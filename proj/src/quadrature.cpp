#include "herglotz/quadrature.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

#include "herglotz/errors.hpp"
#include "herglotz/interp.hpp"

namespace herglotz {

namespace {

QuadRule make_gauss_legendre(int n) {
    // Newton iteration on P_n with the three-term recurrence.
    QuadRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double p0 = 0, p1 = 0;
        for (int it = 0; it < 100; ++it) {
            p0 = 1.0;
            p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) {
                p0 = 1.0;
                p1 = x;
                for (int k = 2; k <= n; ++k) {
                    double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                break;
            }
        }
        double dp = n * (x * p1 - p0) / (x * x - 1.0);
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return rule;
}

QuadRule make_gauss_jacobi(int n, double a, double b) {
    // Golub-Welsch: eigen-decompose the symmetric Jacobi matrix built from
    // the monic recurrence coefficients of the Jacobi polynomials.
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    auto alpha_k = [&](int k) -> double {
        if (k == 0) return (b - a) / (a + b + 2.0);
        double s = 2.0 * k + a + b;
        return (b * b - a * a) / (s * (s + 2.0));
    };
    auto beta_k = [&](int k) -> double {
        if (k == 1)
            // the factor (k+a+b)/(2k+a+b-1) cancels exactly at k=1
            return 4.0 * (1.0 + a) * (1.0 + b) /
                   ((2.0 + a + b) * (2.0 + a + b) * (3.0 + a + b));
        double s = 2.0 * k + a + b;
        return 4.0 * k * (k + a) * (k + b) * (k + a + b) /
               (s * s * (s + 1.0) * (s - 1.0));
    };
    for (int k = 0; k < n; ++k) J(k, k) = alpha_k(k);
    for (int k = 1; k < n; ++k) {
        double be = std::sqrt(beta_k(k));
        J(k, k - 1) = be;
        J(k - 1, k) = be;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    const double mu0 = std::pow(2.0, a + b + 1.0) * std::tgamma(a + 1.0) *
                       std::tgamma(b + 1.0) / std::tgamma(a + b + 2.0);
    QuadRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = es.eigenvalues()(i);
        double v = es.eigenvectors()(0, i);
        rule.weights[i] = mu0 * v * v;
    }
    return rule;
}

} // namespace

const QuadRule& gauss_legendre(int n) {
    static std::map<int, QuadRule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, make_gauss_legendre(n)).first;
    return it->second;
}

const QuadRule& gauss_jacobi(int n, double a, double b) {
    static std::map<std::tuple<int, double, double>, QuadRule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_tuple(n, a, b);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, make_gauss_jacobi(n, a, b)).first;
    return it->second;
}

double integrate_gl(const std::function<double(double)>& f, double lo, double hi, int n) {
    const QuadRule& rule = gauss_legendre(n);
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    double sum = 0.0;
    for (int i = 0; i < n; ++i)
        sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return half * sum;
}

double integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                          double rel_tol, double abs_tol, int max_panels) {
    if (lo == hi) return 0.0;
    struct Panel {
        double lo, hi, coarse;
    };
    std::vector<Panel> stack{{lo, hi, integrate_gl(f, lo, hi, 10)}};
    double total = 0.0;
    int used = 0;
    // first pass estimate of the scale for the relative tolerance
    double scale = std::abs(stack[0].coarse);
    while (!stack.empty()) {
        if (++used > max_panels)
            throw QuadratureFailure("adaptive quadrature exceeded its panel budget");
        Panel p = stack.back();
        stack.pop_back();
        const double fine = integrate_gl(f, p.lo, p.hi, 20);
        const double err = std::abs(fine - p.coarse);
        const double width_frac = (p.hi - p.lo) / (hi - lo);
        if (err <= std::max(abs_tol, rel_tol * std::max(scale, 1e-300)) * std::max(width_frac, 1e-6) ||
            std::abs(p.hi - p.lo) < 1e-14 * std::abs(hi - lo)) {
            total += fine;
            scale = std::max(scale, std::abs(total));
        } else {
            const double mid = 0.5 * (p.lo + p.hi);
            stack.push_back({p.lo, mid, integrate_gl(f, p.lo, mid, 10)});
            stack.push_back({mid, p.hi, integrate_gl(f, mid, p.hi, 10)});
        }
    }
    return total;
}

double integrate_jacobi(const std::function<double(double)>& f, double a, double b, int n) {
    const QuadRule& rule = gauss_jacobi(n, a, b);
    double sum = 0.0;
    for (int i = 0; i < n; ++i)
        sum += rule.weights[i] * f(rule.nodes[i]);
    return sum;
}

std::vector<double> cumulative_uniform(const std::vector<double>& f, double h) {
    const std::size_t n = f.size();
    std::vector<double> out(n, 0.0);
    if (n < 2) return out;
    if (n < 4) {
        for (std::size_t i = 1; i < n; ++i)
            out[i] = out[i - 1] + 0.5 * h * (f[i - 1] + f[i]);
        return out;
    }
    // integrate the local cubic through four neighbouring samples over each
    // subinterval; fourth-order accurate
    for (std::size_t i = 0; i + 1 < n; ++i) {
        std::size_t j0 = (i == 0) ? 0 : i - 1;
        j0 = std::min(j0, n - 4);
        const double s = static_cast<double>(i - j0); // local position of the interval start
        // weights of int_{s}^{s+1} L_k(t) dt for nodes t=0,1,2,3
        double w[4];
        auto antider = [&](int k, double t) {
            // Lagrange basis L_k on nodes 0..3, integrated analytically
            static const double denom[4] = {-6.0, 2.0, -2.0, 6.0};
            double c3, c2, c1, c0; // (t-a)(t-b)(t-c) expanded
            double a1 = 0, b1 = 0, c1n = 0;
            int idx = 0;
            double nodes[3];
            for (int m = 0; m < 4; ++m)
                if (m != k) nodes[idx++] = m;
            a1 = nodes[0];
            b1 = nodes[1];
            c1n = nodes[2];
            c3 = 1.0;
            c2 = -(a1 + b1 + c1n);
            c1 = a1 * b1 + a1 * c1n + b1 * c1n;
            c0 = -a1 * b1 * c1n;
            double val = c3 * t * t * t * t / 4.0 + c2 * t * t * t / 3.0 + c1 * t * t / 2.0 + c0 * t;
            return val / denom[k];
        };
        for (int k = 0; k < 4; ++k) w[k] = antider(k, s + 1.0) - antider(k, s);
        double inc = 0.0;
        for (int k = 0; k < 4; ++k) inc += w[k] * f[j0 + k];
        out[i + 1] = out[i] + h * inc;
    }
    return out;
}

double integrate_samples(const std::vector<double>& x, const std::vector<double>& y,
                         std::size_t i0) {
    const std::size_t n = x.size();
    if (i0 + 1 >= n) return 0.0;
    if (n - i0 < 4) {
        double s = 0.0;
        for (std::size_t i = i0; i + 1 < n; ++i)
            s += 0.5 * (x[i + 1] - x[i]) * (y[i] + y[i + 1]);
        return s;
    }
    std::vector<double> xs(x.begin() + i0, x.end());
    std::vector<double> ys(y.begin() + i0, y.end());
    return GridFunction(std::move(xs), std::move(ys)).integral(x[i0], x.back());
}

} // namespace herglotz
