#ifndef HERGLOTZ_INTERP_HPP
#define HERGLOTZ_INTERP_HPP

#include <complex>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "herglotz/errors.hpp"

namespace herglotz {

namespace detail {

/// Node derivatives for piecewise-cubic Hermite interpolation.
/// Slopes come from local cubic fits (third order on smooth data); for real
/// data a Hyman-style filter clamps them so the interpolant cannot overshoot
/// between monotone samples.  The filter leaves smooth extrema untouched.
std::vector<double> hermite_slopes(const std::vector<double>& x,
                                   const std::vector<double>& y,
                                   bool monotone_filter);

} // namespace detail

/// A sampled function of one variable with piecewise-cubic interpolation.
/// The abscissae are strictly increasing; evaluation outside [front,back]
/// throws DomainMismatch.  Immutable after construction.
template <typename T>
class BasicGridFunction {
public:
    BasicGridFunction() = default;
    BasicGridFunction(std::vector<double> grid, std::vector<T> values);

    /// Sample a callable on the given abscissae.
    static BasicGridFunction sample(const std::vector<double>& grid,
                                    const std::function<T(double)>& f);

    const std::vector<double>& grid() const { return grid_; }
    const std::vector<T>& values() const { return values_; }
    std::size_t size() const { return grid_.size(); }
    double lo() const { return grid_.front(); }
    double hi() const { return grid_.back(); }

    T operator()(double x) const;

    /// Integral of the interpolant over [a, b] (exact for the cubic pieces).
    T integral(double a, double b) const;

    /// Cumulative integral from grid.back() down: F(x) = int_x^hi values.
    BasicGridFunction cumulative_from_top() const;

    T max_abs() const;

private:
    std::size_t interval_of(double x) const;

    std::vector<double> grid_;
    std::vector<T> values_;
    std::vector<T> slopes_;
};

using GridFunction = BasicGridFunction<double>;
using CGridFunction = BasicGridFunction<std::complex<double>>;

/// Uniform grid of n points covering [lo, hi].
std::vector<double> uniform_grid(double lo, double hi, std::size_t n);

extern template class BasicGridFunction<double>;
extern template class BasicGridFunction<std::complex<double>>;

} // namespace herglotz

#endif
