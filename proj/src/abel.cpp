#include "herglotz/abel.hpp"

#include <algorithm>
#include <cmath>

#include "herglotz/errors.hpp"
#include "herglotz/quadrature.hpp"

namespace herglotz {

namespace {

/// int_zl^zr (z-zl)^{el} (zr-z)^{er} f(z) dz with el, er in (-1, 0];
/// exponents equal to zero become plain factors of weight one.
double jacobi_panel(const std::function<double(double)>& f, double zl, double zr, double el,
                    double er, int n) {
    const double m = 0.5 * (zl + zr), h = 0.5 * (zr - zl);
    const QuadRule& rule = gauss_jacobi(n, er, el); // weight (1-u)^er (1+u)^el
    double sum = 0.0;
    for (int i = 0; i < n; ++i)
        sum += rule.weights[i] * f(m + h * rule.nodes[i]);
    return std::pow(h, 1.0 + el + er) * sum;
}

double jacobi_panel_checked(const std::function<double(double)>& f, double zl, double zr,
                            double el, double er) {
    const double coarse = jacobi_panel(f, zl, zr, el, er, 40);
    const double fine = jacobi_panel(f, zl, zr, el, er, 64);
    if (std::abs(fine - coarse) > 1e-9 * std::max(1.0, std::abs(fine))) {
        const double finer = jacobi_panel(f, zl, zr, el, er, 128);
        if (std::abs(finer - fine) > 1e-8 * std::max(1.0, std::abs(finer)))
            throw QuadratureFailure("Gauss-Jacobi panel failed to converge");
        return finer;
    }
    return fine;
}

/// Five-point first-derivative stencil in one variable, shifted one-sided
/// when the requested window leaves [lo, hi].
double stencil_d1(const std::function<double(double)>& f, double x, double lo, double hi) {
    double h = 5e-3 * std::max(1.0, hi - lo);
    h = std::min(h, 0.24 * (hi - lo));
    if (h <= 0.0) return 0.0;
    double start = x - 2.0 * h;
    start = std::max(start, lo);
    start = std::min(start, hi - 4.0 * h);
    const double s = (x - start) / h; // in [0,4]
    double v[5];
    for (int i = 0; i < 5; ++i) v[i] = f(start + i * h);
    // derivative of the degree-4 interpolant at offset s
    double d[5];
    for (int i = 0; i < 5; ++i) d[i] = v[i];
    for (int j = 1; j < 5; ++j)
        for (int i = 4; i >= j; --i) d[i] = (d[i] - d[i - 1]) / (j * h);
    // Newton form derivative at t = start + s h
    const double t = x;
    double xs[5];
    for (int i = 0; i < 5; ++i) xs[i] = start + i * h;
    double deriv = d[1];
    deriv += d[2] * ((t - xs[0]) + (t - xs[1]));
    deriv += d[3] * ((t - xs[0]) * (t - xs[1]) + (t - xs[0]) * (t - xs[2]) +
                     (t - xs[1]) * (t - xs[2]));
    double p01 = (t - xs[0]) * (t - xs[1]), p23 = (t - xs[2]) * (t - xs[3]);
    deriv += d[4] * (p01 * ((t - xs[2]) + (t - xs[3])) + p23 * ((t - xs[0]) + (t - xs[1])));
    return deriv;
}

/// The image g = I^a_K f of a continuous f factors as
/// g(y) = (hi - y)^{1-a} W(y) with W smooth up to the endpoint (see the
/// remark after the Hoelder-continuity theorem: K = 1-a, f = 1 gives
/// exactly (1-x)^{1-a}).  Interpolating W instead of g keeps the endpoint
/// from dominating the error budget.
class FactoredData {
public:
    FactoredData(const GridFunction& g, double alpha)
        : hi_(g.hi()), beta_(1.0 - alpha) {
        const auto& xs = g.grid();
        const auto& ys = g.values();
        std::vector<double> w(ys.size());
        for (std::size_t i = 0; i + 1 < xs.size(); ++i)
            w[i] = ys[i] / std::pow(hi_ - xs[i], beta_);
        // extrapolate W to the endpoint through the last interior values
        const std::size_t n = xs.size();
        const std::size_t m = std::min<std::size_t>(4, n - 1);
        std::vector<double> px(xs.end() - 1 - m, xs.end() - 1);
        std::vector<double> pw(w.end() - 1 - m, w.end() - 1);
        double val = 0.0;
        for (std::size_t i = 0; i < m; ++i) { // Lagrange at hi_
            double term = pw[i];
            for (std::size_t j = 0; j < m; ++j)
                if (j != i) term *= (hi_ - px[j]) / (px[i] - px[j]);
            val += term;
        }
        w[n - 1] = val;
        W_ = GridFunction(xs, std::move(w));
    }

    double g(double y) const {
        if (y >= hi_ - 1e-15) return 0.0;
        return std::pow(hi_ - y, beta_) * W_(y);
    }
    double W(double y) const { return W_(std::min(y, hi_)); }
    double hi() const { return hi_; }

private:
    double hi_, beta_;
    GridFunction W_;
};

} // namespace

KernelSpec KernelSpec::constant(double alpha, double value) {
    KernelSpec k;
    k.alpha = alpha;
    k.K = [value](double, double) { return value; };
    k.dK1 = [](double, double) { return 0.0; };
    k.sup_K = std::abs(value);
    k.lip1_K = 0.0;
    k.diag_min = std::abs(value);
    return k;
}

void validate_kernel(const KernelSpec& k, int samples) {
    if (!(k.alpha >= 0.0 && k.alpha < 1.0))
        throw OutOfDomain("kernel exponent alpha must lie in [0,1)");
    if (!k.K) throw DomainMismatch("kernel spec has no kernel function");
    double sup = 0.0, diag = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= samples; ++i) {
        const double x = static_cast<double>(i) / samples;
        diag = std::min(diag, std::abs(k.K(x, x)));
        for (int j = i; j <= samples; ++j) {
            const double y = static_cast<double>(j) / samples;
            sup = std::max(sup, std::abs(k.K(x, y)));
        }
    }
    if (sup > k.sup_K + 1e-9)
        throw DomainMismatch("sampled |K| exceeds the declared sup_K bound");
    if (diag + 1e-12 < k.diag_min)
        throw DomainMismatch("sampled |K(x,x)| falls below the declared diag_min");
}

double c_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw OutOfDomain("c_alpha requires alpha in (0,1)");
    return M_PI / std::sin(alpha * M_PI);
}

double abel_forward(const KernelSpec& k, const std::function<double(double)>& f, double x,
                    double upper, double rel_tol) {
    if (!(k.alpha >= 0.0 && k.alpha < 1.0))
        throw OutOfDomain("abel_forward requires alpha in [0,1)");
    if (x > upper + 1e-14) throw OutOfDomain("abel_forward requires x <= upper");
    if (x >= upper - 1e-15) return 0.0; // I^a_K f(upper) = 0 by definition
    const double beta = 1.0 - k.alpha;
    const double T = std::pow(upper - x, beta);
    auto integrand = [&](double t) {
        double y = x + std::pow(t, 1.0 / beta);
        y = std::min(y, upper);
        return k.K(x, y) * f(y) / beta;
    };
    std::vector<double> cuts{0.0};
    for (double b : k.breakpoints)
        if (b > x + 1e-14 && b < upper - 1e-14) cuts.push_back(std::pow(b - x, beta));
    cuts.push_back(T);
    std::sort(cuts.begin(), cuts.end());
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        total += integrate_adaptive(integrand, cuts[i], cuts[i + 1], rel_tol, 1e-14);
    return total;
}

double abel_forward(const KernelSpec& k, const GridFunction& f, double x) {
    return abel_forward(
        k, [&f](double y) { return f(y); }, x, f.hi());
}

double compose_J(const KernelSpec& k, double x, double y) {
    if (!(k.alpha > 0.0 && k.alpha < 1.0))
        throw OutOfDomain("compose_J requires alpha in (0,1)");
    if (!(x < y)) throw OutOfDomain("compose_J requires x < y");
    const double a = k.alpha;
    std::vector<double> cuts{x};
    for (double b : k.breakpoints)
        if (b > x + 1e-13 && b < y - 1e-13) cuts.push_back(b);
    cuts.push_back(y);
    std::sort(cuts.begin(), cuts.end());
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double zl = cuts[i], zr = cuts[i + 1];
        const bool at_x = (i == 0), at_y = (i + 2 == cuts.size());
        auto smooth = [&](double z) {
            double v = k.K(z, y);
            if (!at_x) v *= std::pow(z - x, a - 1.0);
            if (!at_y) v *= std::pow(y - z, -a);
            return v;
        };
        total += jacobi_panel_checked(smooth, zl, zr, at_x ? a - 1.0 : 0.0, at_y ? -a : 0.0);
    }
    return total;
}

std::vector<double> differentiate_uniform(const std::vector<double>& f, double h) {
    const std::size_t n = f.size();
    std::vector<double> d(n);
    if (n < 5) {
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t il = (i == 0) ? 0 : i - 1, ir = (i + 1 < n) ? i + 1 : i;
            d[i] = (f[ir] - f[il]) / (static_cast<double>(ir - il) * h);
        }
        return d;
    }
    for (std::size_t i = 2; i + 2 < n; ++i)
        d[i] = (-f[i + 2] + 8.0 * f[i + 1] - 8.0 * f[i - 1] + f[i - 2]) / (12.0 * h);
    d[0] = (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]) / (12.0 * h);
    d[1] = (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]) / (12.0 * h);
    d[n - 2] = (3.0 * f[n - 1] + 10.0 * f[n - 2] - 18.0 * f[n - 3] + 6.0 * f[n - 4] - f[n - 5]) /
               (12.0 * h);
    d[n - 1] = (25.0 * f[n - 1] - 48.0 * f[n - 2] + 36.0 * f[n - 3] - 16.0 * f[n - 4] +
                3.0 * f[n - 5]) /
               (12.0 * h);
    return d;
}

namespace {

/// Shared pipeline of the explicit inversion formulas: compute
/// h(x) = I^{1-a}_L g(x) = int_x^hi (y-x)^{a-1} (hi-y)^{1-a} L(x,y) W(y) dy
/// on a 4x-refined uniform grid via Gauss-Jacobi (both endpoint weights
/// matched), differentiate, scale.
GridFunction differentiate_transform(double alpha,
                                     const std::function<double(double, double)>& L,
                                     const GridFunction& g,
                                     const std::function<double(double)>& scale,
                                     bool check_composition) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw OutOfDomain("inversion requires alpha in (0,1)");
    const double ca = c_alpha(alpha);
    const FactoredData data(g, alpha);
    const std::size_t n = g.size();
    const std::size_t nf = 4 * (n - 1) + 1;
    const std::vector<double> fine = uniform_grid(g.lo(), g.hi(), nf);
    const double hi = g.hi();
    const double h = fine[1] - fine[0];
    std::vector<double> hv(nf, 0.0);
    for (std::size_t i = 0; i + 1 < nf; ++i) {
        const double x = fine[i];
        hv[i] = jacobi_panel_checked(
            [&](double y) { return L(x, y) * data.W(y); }, x, hi, alpha - 1.0, 1.0 - alpha);
    }
    const std::vector<double> dv = differentiate_uniform(hv, h);
    std::vector<double> fv(nf);
    for (std::size_t i = 0; i < nf; ++i) fv[i] = -dv[i] / ca * scale(fine[i]);

    if (check_composition) {
        // the proof of the inversion formula rests on
        // I^{1-a}_1 I^a_1 f = c_a int_x^1 f; verify the recovered f satisfies
        // it against the computed h on the sample points
        GridFunction frec(fine, fv);
        GridFunction cum = frec.cumulative_from_top();
        double scale_h = 1.0;
        for (double v : hv) scale_h = std::max(scale_h, std::abs(v));
        for (std::size_t i = 0; i < nf; i += 4) {
            const double lhs = ca * cum(fine[i]);
            if (std::abs(lhs - hv[i]) > 1e-8 * scale_h)
                throw QuadratureFailure(
                    "internal composition identity check failed in Abel inversion");
        }
    }

    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = fv[4 * i];
    return GridFunction(g.grid(), std::move(out));
}

} // namespace

GridFunction invert_classical(double alpha, const GridFunction& g) {
    return differentiate_transform(
        alpha, [](double, double) { return 1.0; }, g, [](double) { return 1.0; }, true);
}

GridFunction invert_factored(double alpha, const GridFunction& a, const GridFunction& b,
                             const GridFunction& g) {
    for (double v : a.values())
        if (std::abs(v) < 1e-12) throw DivisionByZero("factor a vanishes on the grid");
    for (double v : b.values())
        if (std::abs(v) < 1e-12) throw DivisionByZero("factor b vanishes on the grid");
    return differentiate_transform(
        alpha, [&a](double, double y) { return 1.0 / a(y); }, g,
        [&b](double x) { return 1.0 / b(x); }, false);
}

namespace {

struct LayerPiece {
    GridFunction f;
};

double eval_pieces(const std::vector<LayerPiece>& pieces, double y) {
    for (const auto& p : pieces)
        if (y >= p.f.lo() - 1e-13 && y <= p.f.hi() + 1e-13)
            return p.f(std::min(std::max(y, p.f.lo()), p.f.hi()));
    return 0.0;
}

/// d/dx K(x,y) by one-sided/central differences inside Delta.
double kernel_dx(const KernelSpec& k, double x, double y) {
    if (k.dK1) return k.dK1(x, y);
    const double h = 1e-6;
    if (x + h <= y) {
        const double xl = std::max(x - h, 0.0);
        return (k.K(x + h, y) - k.K(xl, y)) / (x + h - xl);
    }
    const double x2 = std::max(x - 2.0 * h, 0.0);
    return (3.0 * k.K(x, y) - 4.0 * k.K(x - h, y) + k.K(x2, y)) / (2.0 * h);
}

/// int_0^1 w^{a-1} (1-w)^{1-a} K_1(x+(y-x)w, y) dw; equals d/dx J^a_K(x,y).
double dJ_dx(const KernelSpec& k, double x, double y, const QuadRule& rule) {
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double w = 0.5 * (1.0 + rule.nodes[i]);
        sum += rule.weights[i] * kernel_dx(k, x + (y - x) * w, y);
    }
    return 0.5 * sum;
}

/// Integral over [x[i0], x.back()] of uniformly spaced samples via local
/// cubic pieces; no allocation.
double tail_integral_uniform(const std::vector<double>& vals, double h, std::size_t i0) {
    const std::size_t n = vals.size();
    if (i0 + 1 >= n) return 0.0;
    const std::size_t m = n - i0;
    if (m < 4) {
        double s = 0.0;
        for (std::size_t i = i0; i + 1 < n; ++i) s += 0.5 * h * (vals[i] + vals[i + 1]);
        return s;
    }
    double total = 0.0;
    for (std::size_t i = i0; i + 1 < n; ++i) {
        std::size_t j0 = (i == i0) ? i0 : i - 1;
        j0 = std::min(j0, n - 4);
        const double s = static_cast<double>(i - j0);
        // integral over [s, s+1] of the cubic through samples at 0..3
        static const double denom[4] = {-6.0, 2.0, -2.0, 6.0};
        for (int kk = 0; kk < 4; ++kk) {
            double nodes[3];
            int idx = 0;
            for (int mm = 0; mm < 4; ++mm)
                if (mm != kk) nodes[idx++] = mm;
            const double c2 = -(nodes[0] + nodes[1] + nodes[2]);
            const double c1 = nodes[0] * nodes[1] + nodes[0] * nodes[2] + nodes[1] * nodes[2];
            const double c0 = -nodes[0] * nodes[1] * nodes[2];
            auto anti = [&](double t) {
                return t * t * t * t / 4.0 + c2 * t * t * t / 3.0 + c1 * t * t / 2.0 + c0 * t;
            };
            total += h * vals[j0 + kk] * (anti(s + 1.0) - anti(s)) / denom[kk];
        }
    }
    return total;
}

} // namespace

GridFunction invert_neumann(const KernelSpec& k, const GridFunction& g, double r_stop,
                            const NeumannOptions& opts) {
    if (!(k.alpha >= 0.0 && k.alpha < 1.0))
        throw OutOfDomain("invert_neumann requires alpha in [0,1)");
    if (!(k.diag_min > 0.0))
        throw ContractionFailure("Neumann inversion needs |K| bounded away from zero on the diagonal");
    const double H = g.hi();
    if (r_stop < g.lo() - 1e-12) throw DomainMismatch("r_stop below the data domain");

    const double sgn = (k.K(H, H) >= 0.0) ? 1.0 : -1.0;
    auto Kf = [&](double x, double y) { return sgn * k.K(x, y); };
    // measured data carry the (H-y)^{1-a} endpoint factor of the transform
    const FactoredData data(g, k.alpha);
    const double alpha = k.alpha;
    const double c_eff = (alpha > 0.0) ? c_alpha(alpha) : 1.0;
    const QuadRule& wrule = (alpha > 0.0) ? gauss_jacobi(32, 1.0 - alpha, alpha - 1.0)
                                          : gauss_legendre(2); // unused when alpha == 0
    KernelSpec ks = k; // signed copy for dJ_dx
    ks.K = Kf;
    if (k.dK1) ks.dK1 = [&k, sgn](double x, double y) { return sgn * k.dK1(x, y); };

    std::vector<LayerPiece> pieces; // recovered, shallow to deep
    double x_hi = H;

    auto triangle_sup = [&](double C, double lo, double hi) {
        double sup = 0.0;
        const int ns = 32;
        for (int i = 0; i <= ns; ++i) {
            const double x = lo + (hi - lo) * i / ns;
            for (int j = i; j <= ns; ++j) {
                const double y = lo + (hi - lo) * j / ns;
                sup = std::max(sup, std::abs(C - Kf(x, y)));
            }
        }
        return sup;
    };

    while (x_hi > r_stop + 1e-12) {
        const double C = Kf(x_hi, x_hi);
        if (!(C > 0.0))
            throw ContractionFailure("kernel changes sign on the diagonal");
        const double avail = x_hi - r_stop;
        auto qual = [&](double d) {
            return (triangle_sup(C, x_hi - d, x_hi) + k.lip1_K * d) / C;
        };
        double delta;
        if (avail <= opts.width_floor) {
            delta = avail;
            if (qual(delta) >= 1.0)
                throw ContractionFailure("no contraction even at the layer width floor");
        } else {
            if (qual(opts.width_floor) >= 1.0)
                throw ContractionFailure("no contraction even at the layer width floor");
            double lo_w = opts.width_floor, hi_w = avail;
            if (qual(hi_w) <= opts.target_q) {
                delta = hi_w;
            } else {
                for (int it = 0; it < 60; ++it) {
                    const double mid = 0.5 * (lo_w + hi_w);
                    if (qual(mid) <= opts.target_q)
                        lo_w = mid;
                    else
                        hi_w = mid;
                }
                delta = lo_w;
            }
            delta = 0.5 * delta; // halve once for safety margin
            delta = std::max(delta, opts.width_floor);
            delta = std::min(delta, avail);
            // avoid leaving a sliver thinner than the floor
            if (avail - delta < opts.width_floor) delta = avail;
        }
        const double lo = x_hi - delta;

        const std::size_t nl = static_cast<std::size_t>(opts.layer_grid);
        const std::vector<double> grid = uniform_grid(lo, x_hi, nl);
        const std::size_t nf = 4 * (nl - 1) + 1;
        const std::vector<double> fine = uniform_grid(lo, x_hi, nf);
        const double hf = fine[1] - fine[0];

        // data for this layer: measured g minus the contribution of the
        // already-recovered shallow part
        std::vector<double> gl(nf);
        const double beta = 1.0 - alpha;
        for (std::size_t i = 0; i < nf; ++i) {
            const double x = fine[i];
            double tail = 0.0;
            if (!pieces.empty()) {
                std::vector<double> cuts{std::pow(x_hi - x, beta), std::pow(H - x, beta)};
                for (const auto& p : pieces) {
                    const double bnd = p.f.lo();
                    if (bnd > x_hi && bnd < H) cuts.push_back(std::pow(bnd - x, beta));
                }
                for (double b : k.breakpoints)
                    if (b > x_hi + 1e-13 && b < H - 1e-13) cuts.push_back(std::pow(b - x, beta));
                std::sort(cuts.begin(), cuts.end());
                auto integrand = [&](double t) {
                    double y = x + std::pow(t, 1.0 / beta);
                    y = std::min(y, H);
                    return Kf(x, y) * eval_pieces(pieces, y) / beta;
                };
                for (std::size_t c = 0; c + 1 < cuts.size(); ++c)
                    tail += integrate_adaptive(integrand, cuts[c], cuts[c + 1], 1e-10, 1e-14);
            }
            gl[i] = sgn * data.g(x) - tail;
        }

        // h = I^{1-a}_1 g_layer (or g_layer itself when alpha == 0); the
        // layer data again factor as (x_hi - y)^{1-a} W(y), so the h
        // integral is a clean Gauss-Jacobi integral of W
        std::vector<double> hv(nf, 0.0);
        if (alpha > 0.0) {
            const FactoredData ldata(GridFunction(fine, gl), alpha);
            for (std::size_t i = 0; i + 1 < nf; ++i)
                hv[i] = jacobi_panel_checked([&](double y) { return ldata.W(y); }, fine[i],
                                             x_hi, alpha - 1.0, 1.0 - alpha);
        } else {
            hv = gl;
        }
        const std::vector<double> dv = differentiate_uniform(hv, hf);

        std::vector<double> rhs(nl), diagK(nl);
        for (std::size_t i = 0; i < nl; ++i) {
            rhs[i] = -dv[4 * i];
            diagK[i] = Kf(grid[i], grid[i]);
        }

        // dJ/dx on the layer grid (upper triangle)
        std::vector<std::vector<double>> W(nl, std::vector<double>(nl, 0.0));
        for (std::size_t i = 0; i < nl; ++i)
            for (std::size_t j = i; j < nl; ++j)
                W[i][j] = (alpha > 0.0) ? dJ_dx(ks, grid[i], grid[j], wrule)
                                        : kernel_dx(ks, grid[i], grid[j]);

        const double hl = grid[1] - grid[0];
        std::vector<double> f(nl), fnext(nl), prod(nl);
        for (std::size_t i = 0; i < nl; ++i) f[i] = rhs[i] / (c_eff * C);
        double f0_scale = 1.0;
        for (double v : f) f0_scale = std::max(f0_scale, std::abs(v));
        bool converged = false;
        for (int term = 0; term < opts.max_terms; ++term) {
            double diff = 0.0;
            for (std::size_t i = 0; i < nl; ++i) {
                for (std::size_t j = i; j < nl; ++j) prod[j] = W[i][j] * f[j];
                const double integral = tail_integral_uniform(prod, hl, i);
                fnext[i] = (rhs[i] + c_eff * (C - diagK[i]) * f[i] + integral) / (c_eff * C);
                diff = std::max(diff, std::abs(fnext[i] - f[i]));
            }
            f.swap(fnext);
            if (diff <= opts.residual_tol * f0_scale) {
                converged = true;
                break;
            }
        }
        if (!converged)
            throw NotConverged("Neumann layer iteration exhausted its budget");

        std::vector<double> fv(nl);
        for (std::size_t i = 0; i < nl; ++i) fv[i] = sgn * f[i];
        pieces.push_back({GridFunction(grid, std::move(fv))});
        x_hi = lo;
    }

    // assemble the union grid from deep to shallow, sharing boundary points
    std::vector<double> xs, ys;
    for (auto it = pieces.rbegin(); it != pieces.rend(); ++it) {
        const auto& gf = it->f;
        std::size_t start = xs.empty() ? 0 : 1; // skip duplicated boundary
        for (std::size_t i = start; i < gf.size(); ++i) {
            xs.push_back(gf.grid()[i]);
            ys.push_back(gf.values()[i]);
        }
    }
    return GridFunction(std::move(xs), std::move(ys));
}

double abel_derivative(const std::function<double(double, double)>& phi, double alpha, double x,
                       const std::function<double(double, double)>& dphi_x,
                       const std::function<double(double, double)>& dphi_y) {
    if (!(alpha >= 0.0 && alpha < 1.0))
        throw OutOfDomain("abel_derivative requires alpha in [0,1)");
    if (!(x > 0.0 && x < 1.0)) throw OutOfDomain("abel_derivative requires x in (0,1)");
    auto px = [&](double xx, double yy) {
        if (dphi_x) return dphi_x(xx, yy);
        return stencil_d1([&](double t) { return phi(t, yy); }, xx, 0.0, yy);
    };
    auto py = [&](double xx, double yy) {
        if (dphi_y) return dphi_y(xx, yy);
        return stencil_d1([&](double t) { return phi(xx, t); }, yy, xx, 1.0);
    };
    const double beta = 1.0 - alpha;
    auto integrand_t = [&](double t) {
        double y = x + std::pow(t, 1.0 / beta);
        y = std::min(y, 1.0);
        const double bracket = px(x, y) + (x / y) * py(x, y) - (x / (y * y)) * phi(x, y);
        return std::pow(y + x, -alpha) * bracket / beta;
    };
    const double T = std::pow(1.0 - x, beta);
    const double integral = integrate_adaptive(integrand_t, 0.0, T, 1e-10, 1e-14);
    const double boundary = x * std::pow(1.0 - x * x, -alpha) * phi(x, 1.0);
    return integral - boundary;
}

} // namespace herglotz
