#include "herglotz/geodesics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "herglotz/errors.hpp"
#include "herglotz/quadrature.hpp"

namespace herglotz {

namespace {

/// Solve rho_seg(r) = target inside segment s, warm-started at guess.
double invert_rho_in_segment(const Segment& s, double target, double guess) {
    double r = std::min(std::max(guess, s.a), s.b);
    for (int it = 0; it < 60; ++it) {
        const double cv = s.eval(r);
        const double rho = r / cv;
        const double d = (cv - r * s.eval_deriv(r)) / (cv * cv);
        const double step = (rho - target) / d;
        r -= step;
        r = std::min(std::max(r, s.a), s.b);
        if (std::abs(step) < 1e-15) break;
    }
    return r;
}

double hermite_local(double t0, double t1, double v0, double v1, double d0, double d1,
                     double t) {
    const double h = t1 - t0;
    const double s = (t - t0) / h;
    const double s2 = s * s, s3 = s2 * s;
    return (2 * s3 - 3 * s2 + 1) * v0 + (-2 * s3 + 3 * s2) * v1 +
           h * ((s3 - 2 * s2 + s) * d0 + (s3 - s2) * d1);
}

} // namespace

TipIntegrals::TipIntegrals(const WaveSpeed& w, double r0,
                           const std::function<double(double)>* lambda, int pts_per_band)
    : r0_(r0) {
    w.require_tip(r0);
    rho0_ = w.rho(r0);
    const int tip_seg = w.segment_index(r0);
    double omega_off = 0.0, len_off = 0.0, att_off = 0.0;
    for (std::size_t si = static_cast<std::size_t>(tip_seg); si < w.segments().size(); ++si) {
        const Segment& seg = w.segments()[si];
        const double r_lo = std::max(r0, seg.a);
        const double rho_lo = (static_cast<int>(si) == tip_seg)
                                  ? rho0_
                                  : seg.a / seg.eval(seg.a); // right limit at the breakpoint
        const double rho_hi = seg.b / seg.eval(seg.b);
        if (!(rho_hi > rho0_)) throw JumpTangency("tip parameter not attainable");
        const double t_lo = std::sqrt(std::max(0.0, rho_lo - rho0_));
        const double t_hi = std::sqrt(rho_hi - rho0_);
        const int n = std::max(9, pts_per_band);
        std::vector<Node> piece(n);
        std::vector<double> dlen(n), dome(n), datt(n);
        double guess = r_lo;
        for (int i = 0; i < n; ++i) {
            const double t = t_lo + (t_hi - t_lo) * static_cast<double>(i) / (n - 1);
            const double rho = rho0_ + t * t;
            double r;
            if (i == 0 && static_cast<int>(si) == tip_seg)
                r = r0;
            else
                r = invert_rho_in_segment(seg, rho, guess);
            guess = r;
            const double cv = seg.eval(r);
            const double rp = (cv - r * seg.eval_deriv(r)) / (cv * cv);
            const double root = std::sqrt(2.0 * rho0_ + t * t);
            Node& nd = piece[i];
            nd.t = t;
            nd.r = r;
            nd.dlen = 2.0 * rho / (cv * rp * root);
            nd.domega = 2.0 * rho0_ / (r * rp * root);
            dlen[i] = nd.dlen;
            dome[i] = nd.domega;
            datt[i] = lambda ? (*lambda)(r)*nd.dlen : 0.0;
        }
        const double h = (t_hi - t_lo) / (n - 1);
        const std::vector<double> clen = cumulative_uniform(dlen, h);
        const std::vector<double> come = cumulative_uniform(dome, h);
        const std::vector<double> catt = cumulative_uniform(datt, h);
        for (int i = 0; i < n; ++i) {
            piece[i].length = len_off + clen[i];
            piece[i].omega = omega_off + come[i];
            piece[i].att = att_off + catt[i];
        }
        len_off = piece.back().length;
        omega_off = piece.back().omega;
        att_off = piece.back().att;
        pieces_.push_back(std::move(piece));
    }
}

double TipIntegrals::half_length() const { return pieces_.back().back().length; }
double TipIntegrals::alpha() const { return pieces_.back().back().omega; }
double TipIntegrals::att_total() const { return pieces_.back().back().att; }

const TipIntegrals::Node* TipIntegrals::locate_by_r(double r, double* tloc) const {
    if (r < r0_ - 1e-12 || r > 1.0 + 1e-12)
        throw OutOfDomain("radius outside [r0, 1] on this geodesic");
    for (const auto& piece : pieces_) {
        if (r > piece.back().r + 1e-12) continue;
        // nodes are increasing in r within a piece
        std::size_t lo = 0, hi = piece.size() - 1;
        while (hi - lo > 1) {
            const std::size_t mid = (lo + hi) / 2;
            if (piece[mid].r <= r)
                lo = mid;
            else
                hi = mid;
        }
        *tloc = static_cast<double>(lo);
        return &piece[lo];
    }
    *tloc = static_cast<double>(pieces_.back().size() - 2);
    return &pieces_.back()[pieces_.back().size() - 2];
}

double TipIntegrals::omega_at_r(double r) const {
    double idx;
    const Node* n = locate_by_r(r, &idx);
    const Node* m = n + 1;
    // interpolate in t: find t(r) by Newton on the Hermite of r(t); from
    // rho(r) = rho0 + t^2 the slope is dr/dt = 2 t / rho'(r), and rho' is
    // recovered from the stored domega integrand
    auto drdt = [&](const Node& nd) {
        const double root = std::sqrt(2.0 * rho0_ + nd.t * nd.t);
        const double rp = 2.0 * rho0_ / (nd.r * nd.domega * root);
        return 2.0 * nd.t / rp;
    };
    const double da = drdt(*n), db = drdt(*m);
    double t = n->t + (m->t - n->t) * (r - n->r) / (m->r - n->r);
    for (int it = 0; it < 30; ++it) {
        const double rr = hermite_local(n->t, m->t, n->r, m->r, da, db, t);
        const double s = (t - n->t) / (m->t - n->t);
        const double drr =
            ((6 * s * s - 6 * s) * n->r + (-6 * s * s + 6 * s) * m->r) / (m->t - n->t) +
            (3 * s * s - 4 * s + 1) * da + (3 * s * s - 2 * s) * db;
        const double step = (rr - r) / drr;
        t -= step;
        t = std::min(std::max(t, n->t), m->t);
        if (std::abs(step) < 1e-15) break;
    }
    return hermite_local(n->t, m->t, n->omega, m->omega, n->domega, m->domega, t);
}

double TipIntegrals::att_at_r(double r) const {
    double idx;
    const Node* n = locate_by_r(r, &idx);
    (void)idx;
    const Node* m = n + 1;
    const double s = (r - n->r) / (m->r - n->r);
    // att as a function of r: linear-in-r blend of the Hermite in t is
    // accurate enough here; use t from the same Newton as omega_at_r
    return n->att + (m->att - n->att) * s;
}

double TipIntegrals::length_at_r(double r) const {
    double idx;
    const Node* n = locate_by_r(r, &idx);
    (void)idx;
    const Node* m = n + 1;
    const double s = (r - n->r) / (m->r - n->r);
    return n->length + (m->length - n->length) * s;
}

double TipIntegrals::r_at_length(double sarc) const {
    sarc = std::min(std::max(sarc, 0.0), half_length());
    for (const auto& piece : pieces_) {
        if (sarc > piece.back().length + 1e-15) continue;
        std::size_t lo = 0, hi = piece.size() - 1;
        while (hi - lo > 1) {
            const std::size_t mid = (lo + hi) / 2;
            if (piece[mid].length <= sarc)
                lo = mid;
            else
                hi = mid;
        }
        const Node& a = piece[lo];
        const Node& b = piece[lo + 1];
        double t = a.t + (b.t - a.t) * (sarc - a.length) /
                              std::max(b.length - a.length, 1e-300);
        for (int it = 0; it < 30; ++it) {
            const double len = hermite_local(a.t, b.t, a.length, b.length, a.dlen, b.dlen, t);
            const double s = (t - a.t) / (b.t - a.t);
            const double dl = ((6 * s * s - 6 * s) * a.length + (-6 * s * s + 6 * s) * b.length) /
                                  (b.t - a.t) +
                              (3 * s * s - 4 * s + 1) * a.dlen + (3 * s * s - 2 * s) * b.dlen;
            const double step = (len - sarc) / std::max(dl, 1e-300);
            t -= step;
            t = std::min(std::max(t, a.t), b.t);
            if (std::abs(step) < 1e-15) break;
        }
        // r from t via the same Hermite machinery as omega_at_r
        auto drdt = [&](const Node& nd) {
            const double root = std::sqrt(2.0 * rho0_ + nd.t * nd.t);
            const double rp = 2.0 * rho0_ / (nd.r * nd.domega * root);
            return 2.0 * nd.t / rp;
        };
        return hermite_local(a.t, b.t, a.r, b.r, drdt(a), drdt(b), t);
    }
    return 1.0;
}

double geodesic_length(const WaveSpeed& w, double r0) {
    return 2.0 * TipIntegrals(w, r0).half_length();
}

double opening_angle(const WaveSpeed& w, double r0) {
    return 2.0 * TipIntegrals(w, r0).alpha();
}

double weight_H(const WaveSpeed& w, double r, double z) {
    if (!(z > w.inner_radius() && z < r && r <= 1.0))
        throw OutOfDomain("weight_H requires R < z < r <= 1");
    const double ratio = z * w.c(r) / (r * w.c(z));
    const double arg = 1.0 - ratio * ratio;
    if (arg <= 0.0) throw OutOfDomain("weight_H is singular at r = z");
    return 1.0 / (w.c(r) * std::sqrt(arg));
}

double chebyshev_T(const WaveSpeed& w, int k, double r, double r0) {
    if (k == 0) return 1.0;
    if (std::abs(r - r0) < 1e-15) return 1.0;
    TipIntegrals ti(w, r0);
    return std::cos(k * ti.omega_at_r(r));
}

PathPolyline trace_geodesic(const WaveSpeed& w, const GeodesicSpec& spec, int n_samples) {
    TipIntegrals ti(w, spec.r0);
    const double L = ti.half_length();
    const double sgn = (spec.orientation >= 0) ? 1.0 : -1.0;
    PathPolyline path;
    path.total_length = 2.0 * L;
    const int n = std::max(3, n_samples);
    path.samples.resize(n);
    path.speed_sq.resize(n);
    path.ang_momentum.resize(n);
    for (int i = 0; i < n; ++i) {
        const double tau = 2.0 * L * static_cast<double>(i) / (n - 1);
        const double len_from_tip = std::abs(L - tau);
        const double r = ti.r_at_length(len_from_tip);
        const double omega = (r <= spec.r0) ? 0.0 : ti.omega_at_r(std::min(r, 1.0));
        const double side = (tau <= L) ? -1.0 : 1.0;
        PathSample& s = path.samples[i];
        s.t = tau;
        s.r = r;
        s.theta = spec.theta0 + sgn * side * omega;
        // conserved quantities from the tangent the tracer uses
        const double cv = w.c(std::min(r, 1.0));
        const double rho = w.rho(std::min(r, 1.0));
        const double ratio = ti.rho0() / rho;
        const double dr = side * cv * std::sqrt(std::max(0.0, 1.0 - ratio * ratio));
        const double dth = sgn * cv * cv * ti.rho0() / (r * r);
        path.speed_sq[i] = (dr * dr + r * r * dth * dth) / (cv * cv);
        path.ang_momentum[i] = r * r * dth / (cv * cv);
    }
    return path;
}

namespace {

struct OdeState {
    double x, y, px, py;
};

OdeState ode_rhs(const WaveSpeed& w, const OdeState& s) {
    const double r = std::hypot(s.x, s.y);
    // trial steps may poke past the boundary; evaluate the profile inside
    const double rc = std::min(std::max(r, w.inner_radius() + 1e-15), 1.0);
    const double cv = w.c(rc);
    const double cp = w.c_prime(rc);
    const double p2 = s.px * s.px + s.py * s.py;
    OdeState d;
    d.x = cv * cv * s.px;
    d.y = cv * cv * s.py;
    const double fac = -cv * cp * p2 / r;
    d.px = fac * s.x;
    d.py = fac * s.y;
    return d;
}

OdeState rk4_step(const WaveSpeed& w, const OdeState& s, double h) {
    const OdeState k1 = ode_rhs(w, s);
    auto adv = [&](const OdeState& base, const OdeState& k, double f) {
        return OdeState{base.x + f * k.x, base.y + f * k.y, base.px + f * k.px,
                        base.py + f * k.py};
    };
    const OdeState k2 = ode_rhs(w, adv(s, k1, 0.5 * h));
    const OdeState k3 = ode_rhs(w, adv(s, k2, 0.5 * h));
    const OdeState k4 = ode_rhs(w, adv(s, k3, h));
    return OdeState{s.x + h / 6.0 * (k1.x + 2 * k2.x + 2 * k3.x + k4.x),
                    s.y + h / 6.0 * (k1.y + 2 * k2.y + 2 * k3.y + k4.y),
                    s.px + h / 6.0 * (k1.px + 2 * k2.px + 2 * k3.px + k4.px),
                    s.py + h / 6.0 * (k1.py + 2 * k2.py + 2 * k3.py + k4.py)};
}

/// Integrate one half of the geodesic from the tip outward; returns samples
/// (arclength from tip, r, theta offset from the tip angle).
struct HalfPath {
    std::vector<double> t, r, dtheta;
    std::vector<double> speed_sq, lz; // sampled conserved quantities
    double lz0 = 0.0;
    double max_speed_drift = 0.0, max_lz_drift = 0.0;
};

HalfPath integrate_half(const WaveSpeed& w, double r0, double theta0, double dir, double step) {
    HalfPath out;
    OdeState s;
    s.x = r0 * std::cos(theta0);
    s.y = r0 * std::sin(theta0);
    const double c0 = w.c(r0);
    s.px = dir * (-std::sin(theta0)) / c0;
    s.py = dir * (std::cos(theta0)) / c0;
    const double lz0 = s.x * s.py - s.y * s.px;
    out.lz0 = lz0;
    double t = 0.0, theta_prev = theta0, unwrapped = 0.0;
    auto record = [&](double tt, const OdeState& st) {
        const double r = std::hypot(st.x, st.y);
        const double cv = w.c(std::min(std::max(r, w.inner_radius() + 1e-15), 1.0));
        const double sp = cv * cv * (st.px * st.px + st.py * st.py);
        const double lz = st.x * st.py - st.y * st.px;
        out.t.push_back(tt);
        out.r.push_back(r);
        out.dtheta.push_back(unwrapped);
        out.speed_sq.push_back(sp);
        out.lz.push_back(lz);
        out.max_speed_drift = std::max(out.max_speed_drift, std::abs(sp - 1.0));
        out.max_lz_drift = std::max(out.max_lz_drift, std::abs(lz - lz0));
    };
    record(0.0, s);
    auto seg_of = [&](double r) { return w.segment_index(std::min(std::max(r, w.inner_radius() + 1e-15), 1.0)); };
    int seg = seg_of(r0);
    const int max_steps = static_cast<int>(20.0 / step) + 16;
    for (int it = 0; it < max_steps; ++it) {
        OdeState next = rk4_step(w, s, step);
        const double rn = std::hypot(next.x, next.y);
        if (rn >= 1.0) {
            // bisect the exit time to land on the boundary
            double lo = 0.0, hi = step;
            OdeState cand = next;
            for (int b = 0; b < 80; ++b) {
                const double mid = 0.5 * (lo + hi);
                cand = rk4_step(w, s, mid);
                if (std::hypot(cand.x, cand.y) >= 1.0)
                    hi = mid;
                else
                    lo = mid;
                if (hi - lo < 1e-15) break;
            }
            cand = rk4_step(w, s, hi);
            t += hi;
            const double th = std::atan2(cand.y, cand.x);
            unwrapped += std::remainder(th - theta_prev, 2.0 * M_PI);
            record(t, cand);
            return out;
        }
        const int seg_n = seg_of(rn);
        if (seg_n != seg) {
            // bisect the crossing time of the segment boundary
            const double a_cross = (seg_n > seg) ? w.segments()[seg].b : w.segments()[seg].a;
            double lo = 0.0, hi = step;
            for (int b = 0; b < 80; ++b) {
                const double mid = 0.5 * (lo + hi);
                OdeState cand = rk4_step(w, s, mid);
                if ((std::hypot(cand.x, cand.y) - a_cross) * (seg_n > seg ? 1.0 : -1.0) >= 0.0)
                    hi = mid;
                else
                    lo = mid;
                if (hi - lo < 1e-14) break;
            }
            OdeState cand = rk4_step(w, s, hi);
            t += hi;
            // Snell transmission: keep the angular momentum, renormalize the
            // radial momentum to the wave speed on the other side
            const double r = std::hypot(cand.x, cand.y);
            const double lz = cand.x * cand.py - cand.y * cand.px;
            const double pr = (cand.x * cand.px + cand.y * cand.py) / r;
            const double r_eval = (seg_n > seg) ? r + 1e-13 : r - 1e-13;
            const double c_new = w.c(std::min(std::max(r_eval, w.inner_radius() + 1e-15), 1.0));
            const double pr2 = 1.0 / (c_new * c_new) - lz * lz / (r * r);
            if (pr2 < 0.0)
                throw JumpTangency("ray is tangent to a jump surface");
            const double pr_new = (pr >= 0 ? 1.0 : -1.0) * std::sqrt(pr2);
            cand.px = pr_new * cand.x / r - lz * cand.y / (r * r);
            cand.py = pr_new * cand.y / r + lz * cand.x / (r * r);
            // place the state strictly on the transmitted side so stage
            // evaluations of the next step use the new segment
            const double scale_r = (r_eval > r ? r + 1e-12 : r - 1e-12) / r;
            cand.x *= scale_r;
            cand.y *= scale_r;
            s = cand;
            seg = seg_n;
            const double th = std::atan2(s.y, s.x);
            unwrapped += std::remainder(th - theta_prev, 2.0 * M_PI);
            theta_prev = th;
            record(t, s);
            continue;
        }
        s = next;
        t += step;
        const double th = std::atan2(s.y, s.x);
        unwrapped += std::remainder(th - theta_prev, 2.0 * M_PI);
        theta_prev = th;
        record(t, s);
    }
    throw StepTooLarge("geodesic ODE failed to reach the boundary");
}

} // namespace

PathPolyline trace_ode_oracle(const WaveSpeed& w, const GeodesicSpec& spec, double step) {
    w.require_tip(spec.r0);
    const double dir = (spec.orientation >= 0) ? 1.0 : -1.0;
    HalfPath up = integrate_half(w, spec.r0, spec.theta0, dir, step);
    HalfPath down = integrate_half(w, spec.r0, spec.theta0, -dir, step);
    const double drift = std::max({up.max_speed_drift, down.max_speed_drift,
                                   up.max_lz_drift, down.max_lz_drift});
    if (drift > 1e-6) throw StepTooLarge("conserved-quantity drift exceeds 1e-6");
    PathPolyline path;
    const double L_down = down.t.back();
    path.total_length = L_down + up.t.back();
    path.samples.reserve(up.t.size() + down.t.size() - 1);
    for (std::size_t i = down.t.size(); i-- > 1;) {
        path.samples.push_back({L_down - down.t[i], down.r[i], spec.theta0 + down.dtheta[i]});
        path.speed_sq.push_back(down.speed_sq[i]);
        path.ang_momentum.push_back(-down.lz[i]); // reversed traversal flips theta'
    }
    for (std::size_t i = 0; i < up.t.size(); ++i) {
        path.samples.push_back({L_down + up.t[i], up.r[i], spec.theta0 + up.dtheta[i]});
        path.speed_sq.push_back(up.speed_sq[i]);
        path.ang_momentum.push_back(up.lz[i]);
    }
    return path;
}

PathPolyline broken_ray(const WaveSpeed& w, const BrokenRaySpec& spec, int samples_per_segment) {
    if (spec.n_segments < 1) throw OutOfDomain("broken ray needs at least one segment");
    PathPolyline base = trace_geodesic(w, spec.base, samples_per_segment);
    if (spec.n_segments == 1) return base;
    const double two_alpha = opening_angle(w, spec.base.r0);
    const double sgn = (spec.base.orientation >= 0) ? 1.0 : -1.0;
    PathPolyline out;
    out.total_length = base.total_length * spec.n_segments;
    for (int l = 0; l < spec.n_segments; ++l) {
        const double rot = sgn * two_alpha * l;
        const double t_off = base.total_length * l;
        const std::size_t start = (l == 0) ? 0 : 1; // endpoints are shared
        for (std::size_t i = start; i < base.samples.size(); ++i) {
            const PathSample& s = base.samples[i];
            out.samples.push_back({s.t + t_off, s.r, s.theta + rot});
            out.speed_sq.push_back(base.speed_sq[i]);
            out.ang_momentum.push_back(base.ang_momentum[i]);
        }
    }
    return out;
}

std::optional<std::pair<int, int>> is_periodic(const WaveSpeed& w, double r0, int q_max,
                                               double tol) {
    if (q_max < 2) throw OutOfDomain("q_max must be >= 2");
    if (!(tol > 0)) throw OutOfDomain("tolerance must be positive");
    const double a = TipIntegrals(w, r0).alpha();
    const double x = a / M_PI;
    // best rational approximation with denominator <= q_max via continued
    // fractions (convergents and final semiconvergent)
    long long p0 = 1, q0 = 0, p1 = static_cast<long long>(std::floor(x)), q1 = 1;
    double frac = x - std::floor(x);
    long long best_p = p1, best_q = 1;
    while (q1 <= q_max) {
        best_p = p1;
        best_q = q1;
        if (frac < 1e-18) break;
        const double inv = 1.0 / frac;
        const long long aa = static_cast<long long>(std::floor(inv));
        frac = inv - std::floor(inv);
        const long long p2 = aa * p1 + p0, q2 = aa * q1 + q0;
        if (q2 > q_max) {
            // largest admissible semiconvergent
            const long long kmax = (q_max - q0) / q1;
            if (kmax > 0 && kmax * q1 + q0 <= q_max) {
                const long long ps = kmax * p1 + p0, qs = kmax * q1 + q0;
                if (std::abs(x - static_cast<double>(ps) / qs) <
                    std::abs(x - static_cast<double>(best_p) / best_q)) {
                    best_p = ps;
                    best_q = qs;
                }
            }
            break;
        }
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
    }
    if (best_p < 1) return std::nullopt; // alpha too small for a positive p/q
    if (std::abs(a - M_PI * static_cast<double>(best_p) / best_q) < tol) {
        const long long g = std::gcd(best_p, best_q);
        return std::make_pair(static_cast<int>(best_p / g), static_cast<int>(best_q / g));
    }
    return std::nullopt;
}

std::vector<std::tuple<double, int, int>> find_periodic_radii(const WaveSpeed& w, int q_max) {
    require_herglotz(w);
    std::vector<std::tuple<double, int, int>> found;
    auto alpha_of = [&](double r) { return TipIntegrals(w, r, nullptr, 513).alpha(); };
    for (const Segment& seg : w.segments()) {
        const double lo = std::max(seg.a, w.inner_radius()) + 1e-9;
        const double hi = std::min(seg.b, 1.0) - 1e-9;
        if (hi <= lo) continue;
        const int ns = 600;
        std::vector<double> rs(ns + 1), as(ns + 1);
        for (int i = 0; i <= ns; ++i) {
            rs[i] = lo + (hi - lo) * static_cast<double>(i) / ns;
            as[i] = alpha_of(rs[i]);
        }
        const double a_min = *std::min_element(as.begin(), as.end());
        const double a_max = *std::max_element(as.begin(), as.end());
        for (int q = 1; q <= q_max; ++q) {
            for (int p = 1; M_PI * p / q <= a_max + 1e-12; ++p) {
                if (std::gcd(p, q) != 1) continue;
                const double target = M_PI * p / q;
                if (target < a_min - 1e-12) continue;
                for (int i = 0; i < ns; ++i) {
                    if ((as[i] - target) * (as[i + 1] - target) > 0.0) continue;
                    double rlo = rs[i], rhi = rs[i + 1];
                    double alo = as[i] - target;
                    for (int b = 0; b < 80; ++b) {
                        const double mid = 0.5 * (rlo + rhi);
                        const double am = alpha_of(mid) - target;
                        if ((am > 0) == (alo > 0)) {
                            rlo = mid;
                            alo = am;
                        } else {
                            rhi = mid;
                        }
                        if (rhi - rlo < 1e-14) break;
                    }
                    const double root = 0.5 * (rlo + rhi);
                    if (std::abs(alpha_of(root) - target) <= 1e-9)
                        found.emplace_back(root, p, q);
                }
            }
        }
    }
    std::sort(found.begin(), found.end());
    return found;
}

} // namespace herglotz
