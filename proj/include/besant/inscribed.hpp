#pragma once

#include <cmath>
#include <utility>

#include "besant/conic.hpp"
#include "besant/errors.hpp"
#include "besant/quad.hpp"

namespace besant {

// Parameter selecting one member of the inscribed-ellipse family.  The
// open interval (0,1) is the mathematical domain; values within 1e-12 of
// the endpoints are rejected because the ellipse collapses to a vertex.
class InellipseParam {
public:
    explicit InellipseParam(double r) : r_(r) {
        constexpr double edge = 1e-12;
        if (!(r >= edge && r <= 1.0 - edge))
            throw ParamOutOfRange("inellipse parameter must lie in (0,1)");
    }
    double value() const { return r_; }
    operator double() const { return r_; }

private:
    double r_;
};

inline double tau_of(const CanonicalQuad& q, double r) { return (q.s - q.v) * r + q.v; }

namespace detail {

// Family coefficients without the trapezoid guard; used by the max-area
// search which only needs the smooth map r -> conic.
inline Conic inscribed_coeffs(const CanonicalQuad& q, double r) {
    const double s = q.s, t = q.t, v = q.v, w = q.w;
    const double N = v * t - w * s;
    double A = ((w - 1.0) * (w - 1.0) * s * s - 2.0 * v * (w * t + t - 2.0 * w) * s +
                t * t * v * v) * r * r +
               2.0 * v * (s * t - 2.0 * w * s - t * N) * r + t * t * v * v;
    double B = -2.0 * v * s * (2.0 * (v - s) * r * r + (s - 2.0 * v - N) * r + v * t);
    double C = s * s * v * v;
    double D = 2.0 * s * v * r * ((N - s) * r - N + s * w);
    double E = -2.0 * s * s * v * v * r;
    double F = s * s * v * v * r * r;
    return {A, B, C, D, E, F};
}

}  // namespace detail

// The inscribed-ellipse family of Q_{s,t,v,w} (non-trapezoid form).
inline Conic inscribed_conic(const CanonicalQuad& q, InellipseParam r,
                             const Tolerance& tol = {}) {
    if (is_trapezoid(q, tol))
        throw TrapezoidInput("use inscribed_conic_trapezoid for trapezoids");
    return detail::inscribed_coeffs(q, r);
}

// Closed-form center (sv/(2 tau), ((s-N) r + v t)/(2 tau)).
inline Point inscribed_center(const CanonicalQuad& q, InellipseParam r) {
    const double N = q.v * q.t - q.w * q.s;
    const double tau = tau_of(q, r);
    return {q.s * q.v / (2.0 * tau), ((q.s - N) * r + q.v * q.t) / (2.0 * tau)};
}

// Family for the cyclic trapezoid Q_{s,t,s,1-t} (t > 1/2, t != 1).
inline Conic inscribed_conic_trapezoid(double s, double t, InellipseParam r,
                                       const Tolerance& tol = {}) {
    if (!(s > 0.0) || !(t > 0.5) || tol.near(t, 1.0, 1.0))
        throw InvalidTrapezoid("cyclic trapezoid requires s > 0, t > 1/2, t != 1");
    double rr = r;
    double A = 4.0 * (t - 1.0) * (t - 1.0) * rr * rr - 4.0 * (t - 1.0) * (t - 1.0) * rr + t * t;
    double B = 2.0 * s * t * (2.0 * rr - 1.0);
    double C = s * s;
    double D = 2.0 * rr * s * (2.0 * (t - 1.0) * rr - 3.0 * t + 2.0);
    double E = -2.0 * s * s * rr;
    double F = s * s * rr * rr;
    return {A, B, C, D, E, F};
}

// Maximal-area member of the family.  area(r) = 2 pi delta / Delta^{3/2}
// is smooth and positive on (0,1) and vanishes at the endpoints; a
// golden-section pass brackets the maximum and bisection on the
// finite-difference derivative sharpens it.
inline std::pair<double, double> max_area_param(const CanonicalQuad& q,
                                                const Tolerance& tol = {}) {
    const bool trapezoid = tol.near(q.v, q.s, std::max(q.v, q.s));
    if (trapezoid && !tol.near(q.w, 1.0 - q.t, std::max(1.0, q.t)))
        throw InvalidTrapezoid("inscribed family is only available for cyclic trapezoids");
    auto conic_at = [&](double r) -> Conic {
        if (trapezoid)
            return inscribed_conic_trapezoid(q.s, q.t, InellipseParam(r), tol);
        return detail::inscribed_coeffs(q, r);
    };
    auto area_at = [&](double r) {
        Conic c = conic_at(r);
        double Delta = c.discriminant();
        return 2.0 * 3.14159265358979323846 * c.delta() / (Delta * std::sqrt(Delta));
    };

    // golden section on [lo, hi]
    double lo = 1e-9, hi = 1.0 - 1e-9;
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
    double f1 = area_at(x1), f2 = area_at(x2);
    while (hi - lo > 1e-5) {
        if (f1 < f2) {
            lo = x1; x1 = x2; f1 = f2;
            x2 = lo + phi * (hi - lo); f2 = area_at(x2);
        } else {
            hi = x2; x2 = x1; f2 = f1;
            x1 = hi - phi * (hi - lo); f1 = area_at(x1);
        }
    }

    // bisection on the central-difference derivative
    const double h = 1e-7;
    auto deriv = [&](double r) { return area_at(r + h) - area_at(r - h); };
    double a = std::max(lo - 1e-4, 2e-7), b = std::min(hi + 1e-4, 1.0 - 2e-7);
    double da = deriv(a), db = deriv(b);
    if (da > 0.0 && db < 0.0) {
        while (b - a > 1e-11) {
            double m = 0.5 * (a + b);
            if (deriv(m) > 0.0) a = m; else b = m;
        }
    }
    double r_star = 0.5 * (a + b);
    return {r_star, area_at(r_star)};
}

}  // namespace besant
