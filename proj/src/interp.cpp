#include "herglotz/interp.hpp"

#include <algorithm>
#include <cmath>

namespace herglotz {

namespace {

/// Derivative at x0 of the interpolating polynomial through up to four
/// points, computed from Newton divided differences.  Works on nonuniform
/// grids.
template <typename T>
T local_poly_slope(const double* x, const T* y, int n, double x0) {
    // divided difference table
    T d[4];
    double xs[4];
    for (int i = 0; i < n; ++i) {
        d[i] = y[i];
        xs[i] = x[i];
    }
    for (int j = 1; j < n; ++j)
        for (int i = n - 1; i >= j; --i)
            d[i] = (d[i] - d[i - 1]) / (xs[i] - xs[i - j]);
    // derivative of the Newton form at x0
    T deriv = d[1];
    if (n >= 3)
        deriv += d[2] * ((x0 - xs[0]) + (x0 - xs[1]));
    if (n >= 4)
        deriv += d[3] * ((x0 - xs[0]) * (x0 - xs[1]) + (x0 - xs[0]) * (x0 - xs[2]) +
                         (x0 - xs[1]) * (x0 - xs[2]));
    return deriv;
}

} // namespace

namespace detail {

std::vector<double> hermite_slopes(const std::vector<double>& x,
                                   const std::vector<double>& y,
                                   bool monotone_filter) {
    const std::size_t n = x.size();
    std::vector<double> m(n);
    if (n == 2) {
        m[0] = m[1] = (y[1] - y[0]) / (x[1] - x[0]);
        return m;
    }
    const std::size_t pts = std::min<std::size_t>(4, n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t j0 = (i == 0) ? 0 : i - 1;
        j0 = std::min(j0, n - pts);
        m[i] = local_poly_slope(&x[j0], &y[j0], static_cast<int>(pts), x[i]);
    }
    if (!monotone_filter)
        return m;
    // Hyman filter: constrain each slope into the hull of {0, 3*adjacent
    // secants}.  Inactive where the data are locally well resolved.
    for (std::size_t i = 0; i < n; ++i) {
        double s_lo = (i > 0) ? (y[i] - y[i - 1]) / (x[i] - x[i - 1]) : 0.0;
        double s_hi = (i + 1 < n) ? (y[i + 1] - y[i]) / (x[i + 1] - x[i]) : 0.0;
        if (i == 0) s_lo = s_hi;
        if (i + 1 == n) s_hi = s_lo;
        double lostop = std::min({0.0, 3.0 * s_lo, 3.0 * s_hi});
        double histop = std::max({0.0, 3.0 * s_lo, 3.0 * s_hi});
        m[i] = std::min(std::max(m[i], lostop), histop);
    }
    return m;
}

} // namespace detail

template <typename T>
BasicGridFunction<T>::BasicGridFunction(std::vector<double> grid, std::vector<T> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
    if (grid_.size() < 2 || grid_.size() != values_.size())
        throw DomainMismatch("grid function needs >= 2 samples and matching value count");
    for (std::size_t i = 1; i < grid_.size(); ++i)
        if (!(grid_[i] > grid_[i - 1]))
            throw DomainMismatch("grid abscissae must be strictly increasing");
    for (const T& v : values_)
        if (!std::isfinite(std::abs(v)))
            throw DomainMismatch("grid function values must be finite");

    if constexpr (std::is_same_v<T, double>) {
        slopes_ = detail::hermite_slopes(grid_, values_, true);
    } else {
        // complex data: interp real and imaginary parts, no monotone filter
        std::vector<double> re(values_.size()), im(values_.size());
        for (std::size_t i = 0; i < values_.size(); ++i) {
            re[i] = values_[i].real();
            im[i] = values_[i].imag();
        }
        auto mre = detail::hermite_slopes(grid_, re, false);
        auto mim = detail::hermite_slopes(grid_, im, false);
        slopes_.resize(values_.size());
        for (std::size_t i = 0; i < values_.size(); ++i)
            slopes_[i] = T(mre[i], mim[i]);
    }
}

template <typename T>
BasicGridFunction<T> BasicGridFunction<T>::sample(const std::vector<double>& grid,
                                                  const std::function<T(double)>& f) {
    std::vector<T> vals(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        vals[i] = f(grid[i]);
    return BasicGridFunction(grid, std::move(vals));
}

template <typename T>
std::size_t BasicGridFunction<T>::interval_of(double x) const {
    const double tol = 1e-12 * (1.0 + std::abs(grid_.back()));
    if (x < grid_.front() - tol || x > grid_.back() + tol)
        throw DomainMismatch("grid function evaluated outside its domain");
    auto it = std::upper_bound(grid_.begin(), grid_.end(), x);
    std::size_t i = (it == grid_.begin()) ? 0 : static_cast<std::size_t>(it - grid_.begin()) - 1;
    return std::min(i, grid_.size() - 2);
}

template <typename T>
T BasicGridFunction<T>::operator()(double x) const {
    const std::size_t i = interval_of(x);
    const double h = grid_[i + 1] - grid_[i];
    const double s = (x - grid_[i]) / h;
    const double s2 = s * s, s3 = s2 * s;
    const double h00 = 2 * s3 - 3 * s2 + 1;
    const double h10 = s3 - 2 * s2 + s;
    const double h01 = -2 * s3 + 3 * s2;
    const double h11 = s3 - s2;
    return h00 * values_[i] + h01 * values_[i + 1] +
           h * (h10 * slopes_[i] + h11 * slopes_[i + 1]);
}

template <typename T>
T BasicGridFunction<T>::integral(double a, double b) const {
    if (a > b) return -integral(b, a);
    // exact integral of each Hermite piece:
    // int_0^1 = (y0+y1)/2 + h(m0-m1)/12  (times h)
    auto piece = [&](std::size_t i, double s0, double s1) -> T {
        const double h = grid_[i + 1] - grid_[i];
        auto H00 = [](double s) { return 0.5 * s * s * s * s - s * s * s + s; };
        auto H10 = [](double s) { return 0.25 * s * s * s * s - (2.0 / 3.0) * s * s * s + 0.5 * s * s; };
        auto H01 = [](double s) { return -0.5 * s * s * s * s + s * s * s; };
        auto H11 = [](double s) { return 0.25 * s * s * s * s - s * s * s / 3.0; };
        T v = (H00(s1) - H00(s0)) * values_[i] + (H01(s1) - H01(s0)) * values_[i + 1] +
              h * ((H10(s1) - H10(s0)) * slopes_[i] + (H11(s1) - H11(s0)) * slopes_[i + 1]);
        return v * h;
    };
    const std::size_t ia = interval_of(a), ib = interval_of(b);
    if (ia == ib) {
        const double h = grid_[ia + 1] - grid_[ia];
        return piece(ia, (a - grid_[ia]) / h, (b - grid_[ia]) / h);
    }
    T total = piece(ia, (a - grid_[ia]) / (grid_[ia + 1] - grid_[ia]), 1.0);
    for (std::size_t i = ia + 1; i < ib; ++i)
        total += piece(i, 0.0, 1.0);
    total += piece(ib, 0.0, (b - grid_[ib]) / (grid_[ib + 1] - grid_[ib]));
    return total;
}

template <typename T>
BasicGridFunction<T> BasicGridFunction<T>::cumulative_from_top() const {
    std::vector<T> cum(grid_.size());
    cum.back() = T(0);
    for (std::size_t i = grid_.size() - 1; i-- > 0;)
        cum[i] = cum[i + 1] + integral(grid_[i], grid_[i + 1]);
    return BasicGridFunction(grid_, std::move(cum));
}

template <typename T>
T BasicGridFunction<T>::max_abs() const {
    double best = 0.0;
    T arg = values_.front();
    for (const T& v : values_)
        if (std::abs(v) > best) {
            best = std::abs(v);
            arg = v;
        }
    return arg;
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t n) {
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i)
        g[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    g.back() = hi;
    return g;
}

template class BasicGridFunction<double>;
template class BasicGridFunction<std::complex<double>>;

} // namespace herglotz
