#include "herglotz/wave_speed.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace herglotz {

namespace {

const double kBreakTol = 1e-12;

/// Real roots of c2*r^2 + c1*r + c0 inside [lo, hi].
void quadratic_roots_in(double c2, double c1, double c0, double lo, double hi,
                        std::vector<double>& out) {
    if (std::abs(c2) < 1e-300) {
        if (std::abs(c1) > 1e-300) {
            double r = -c0 / c1;
            if (r >= lo && r <= hi) out.push_back(r);
        }
        return;
    }
    double disc = c1 * c1 - 4.0 * c2 * c0;
    if (disc < 0) return;
    double sq = std::sqrt(disc);
    double q = -0.5 * (c1 + (c1 >= 0 ? sq : -sq));
    double r1 = q / c2;
    double r2 = (std::abs(q) > 1e-300) ? c0 / q : r1;
    for (double r : {r1, r2})
        if (std::isfinite(r) && r >= lo && r <= hi) out.push_back(r);
}

/// Minimum of a cubic polynomial over [lo, hi]: endpoints plus critical
/// points of its (quadratic) derivative.  Exact for the polynomials we use.
double poly_min_on(const Segment& s, double lo, double hi) {
    std::vector<double> pts{lo, hi};
    quadratic_roots_in(3.0 * s.coeffs[3], 2.0 * s.coeffs[2], s.coeffs[1], lo, hi, pts);
    double best = s.eval(pts[0]);
    for (double p : pts) best = std::min(best, s.eval(p));
    return best;
}

} // namespace

WaveSpeed::WaveSpeed(double inner_radius, std::vector<Segment> segments)
    : inner_radius_(inner_radius), segments_(std::move(segments)) {
    if (!(inner_radius_ > 0.0 && inner_radius_ < 1.0))
        throw OutOfDomain("inner radius must lie in (0,1)");
    if (segments_.empty()) throw OutOfDomain("wave speed needs at least one segment");
    if (std::abs(segments_.front().a - inner_radius_) > kBreakTol)
        throw OutOfDomain("first segment must start at the inner radius");
    if (std::abs(segments_.back().b - 1.0) > kBreakTol)
        throw OutOfDomain("last segment must end at 1");
    for (std::size_t i = 0; i < segments_.size(); ++i) {
        if (!(segments_[i].b > segments_[i].a))
            throw OutOfDomain("segment intervals must have positive length");
        if (i > 0 && std::abs(segments_[i].a - segments_[i - 1].b) > kBreakTol)
            throw OutOfDomain("segments must tile (R,1] without gaps or overlaps");
        if (poly_min_on(segments_[i], segments_[i].a, segments_[i].b) <= 0.0)
            throw OutOfDomain("wave speed must be strictly positive on every segment");
    }
    for (std::size_t i = 0; i + 1 < segments_.size(); ++i)
        breakpoints_.push_back(segments_[i].b);
}

WaveSpeed WaveSpeed::euclidean(double inner_radius) {
    return polynomial(inner_radius, {1.0, 0.0, 0.0, 0.0});
}

WaveSpeed WaveSpeed::polynomial(double inner_radius, const std::array<double, 4>& coeffs) {
    Segment s;
    s.a = inner_radius;
    s.b = 1.0;
    s.coeffs = coeffs;
    return WaveSpeed(inner_radius, {s});
}

int WaveSpeed::segment_index(double r) const {
    if (!(r > inner_radius_ && r <= 1.0 + kBreakTol))
        throw OutOfDomain("radius outside (R,1]");
    // (a,b] membership: the segment value at its own right endpoint is used
    for (std::size_t i = 0; i < segments_.size(); ++i)
        if (r <= segments_[i].b + (i + 1 == segments_.size() ? kBreakTol : 0.0))
            return static_cast<int>(i);
    return static_cast<int>(segments_.size()) - 1;
}

double WaveSpeed::c(double r) const { return segments_[segment_index(r)].eval(r); }

double WaveSpeed::c_prime(double r) const { return segments_[segment_index(r)].eval_deriv(r); }

double WaveSpeed::rho(double r) const { return r / c(r); }

double WaveSpeed::rho_prime(double r) const {
    const Segment& s = segments_[segment_index(r)];
    const double cv = s.eval(r), cd = s.eval_deriv(r);
    return (cv - r * cd) / (cv * cv);
}

double WaveSpeed::c_right_limit(double a) const {
    for (std::size_t i = 1; i < segments_.size(); ++i)
        if (std::abs(segments_[i].a - a) <= kBreakTol) return segments_[i].eval(a);
    throw OutOfDomain("not an interior breakpoint");
}

double WaveSpeed::rho_right_limit(double a) const { return a / c_right_limit(a); }

std::vector<std::pair<double, double>> WaveSpeed::rho_gaps() const {
    std::vector<std::pair<double, double>> gaps;
    for (double a : breakpoints_) {
        const double lo = rho(a), hi = rho_right_limit(a);
        if (hi > lo + kBreakTol) gaps.emplace_back(lo, hi);
    }
    return gaps;
}

double WaveSpeed::rho_inverse(double p) const {
    const double p_min = rho_right_limit_or_inner();
    const double p_max = rho(1.0);
    if (!(p > p_min && p <= p_max + 1e-12))
        throw OutOfRange("turning parameter outside attainable rho values");
    for (const auto& gap : rho_gaps())
        if (p > gap.first && p < gap.second)
            throw JumpTangency("turning parameter lies inside a jump gap");

    // locate the segment whose rho-range contains p
    for (std::size_t i = 0; i < segments_.size(); ++i) {
        const Segment& s = segments_[i];
        const double rho_lo = s.a / s.eval(s.a); // right limit at segment start
        const double rho_hi = s.b / s.eval(s.b);
        if (p < rho_lo - kBreakTol || p > rho_hi + kBreakTol) continue;
        // bisection on the closed polynomial extension [a, b], then Newton
        double lo = s.a, hi = s.b;
        auto rho_seg = [&](double r) { return r / s.eval(r); };
        for (int it = 0; it < 200; ++it) {
            double mid = 0.5 * (lo + hi);
            if (rho_seg(mid) < p)
                lo = mid;
            else
                hi = mid;
            if (hi - lo < 1e-15) break;
        }
        double r = 0.5 * (lo + hi);
        for (int it = 0; it < 8; ++it) {
            const double cv = s.eval(r);
            const double d = (cv - r * s.eval_deriv(r)) / (cv * cv);
            if (std::abs(d) < 1e-300) break;
            double step = (rho_seg(r) - p) / d;
            r -= step;
            r = std::min(std::max(r, s.a), s.b);
            if (std::abs(step) < 1e-16) break;
        }
        if (std::abs(rho_seg(r) - p) > 1e-12)
            throw OutOfRange("rho inversion failed to converge to 1e-12");
        return r;
    }
    throw JumpTangency("turning parameter lies inside a jump gap");
}

double WaveSpeed::rho_right_limit_or_inner() const {
    const Segment& s = segments_.front();
    return s.a / s.eval(s.a);
}

bool WaveSpeed::tip_valid(double r) const {
    if (!(r > inner_radius_ + kBreakTol && r < 1.0 - kBreakTol)) return false;
    for (double a : breakpoints_)
        if (std::abs(r - a) <= 1e-12) return false;
    return true;
}

void WaveSpeed::require_tip(double r) const {
    if (r <= inner_radius_ || r >= 1.0)
        throw OutOfDomain("tip radius must lie in (R,1)");
    for (double a : breakpoints_)
        if (std::abs(r - a) <= 1e-12)
            throw JumpTangency("tip radius coincides with a jump breakpoint");
}

HerglotzReport check_herglotz(const WaveSpeed& w, int grid_points) {
    grid_points = std::max(grid_points, 100);
    HerglotzReport rep;
    double margin = std::numeric_limits<double>::infinity();

    for (const Segment& s : w.segments()) {
        auto rho_prime_seg = [&](double r) {
            const double cv = s.eval(r), cd = s.eval_deriv(r);
            return (cv - r * cd) / (cv * cv);
        };
        for (int i = 0; i <= grid_points; ++i) {
            const double r = s.a + (s.b - s.a) * static_cast<double>(i) / grid_points;
            margin = std::min(margin, rho_prime_seg(r));
        }
        // The numerator of rho' is q(r) = c - r c' = c0 - c2 r^2 - 2 c3 r^3,
        // so its extrema are roots of q'(r) = -2 c2 r - 6 c3 r^2 and the sign
        // of rho' over the segment is decidable from finitely many points.
        std::vector<double> crit;
        quadratic_roots_in(-6.0 * s.coeffs[3], -2.0 * s.coeffs[2], 0.0, s.a, s.b, crit);
        for (double r : crit) margin = std::min(margin, rho_prime_seg(r));
    }

    for (double a : w.breakpoints()) {
        const double excess = w.c_right_limit(a) - w.c(a); // limsup from right minus value
        if (excess > 1e-12) rep.jump_violations.emplace_back(a, excess);
    }

    rep.min_herglotz_margin = margin;
    rep.pass = margin > 0.0 && rep.jump_violations.empty();
    std::ostringstream os;
    os << "min d/dr(r/c) = " << margin << "; " << rep.jump_violations.size()
       << " jump violation(s)";
    rep.notes = os.str();
    return rep;
}

void require_herglotz(const WaveSpeed& w) {
    HerglotzReport rep = check_herglotz(w, 1000);
    if (!rep.pass) throw Error("wave speed violates the Herglotz or jump condition: " + rep.notes);
}

} // namespace herglotz
