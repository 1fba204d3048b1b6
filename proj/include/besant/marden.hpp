#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <utility>

#include "besant/errors.hpp"
#include "besant/inscribed.hpp"
#include "besant/point.hpp"
#include "besant/quad.hpp"

namespace besant {

using Complex = std::complex<double>;

// Barycentric-style weights attached to a triangle's vertices; the zeros
// of sum t_k/(z - z_k) are then the foci of an inscribed ellipse.
struct TriangleWeights {
    double t1, t2, t3;

    bool valid(const Tolerance& tol = {}) const {
        return tol.near(t1 + t2 + t3, 1.0, 1.0) && t1 * t2 * t3 > 0.0;
    }
};

// Monic quadratic p(z) = z^2 + c1 z + c0 whose roots are ellipse foci.
struct FociQuadratic {
    Complex c1;  // coefficient of z
    Complex c0;  // constant term

    Complex evaluate(Complex z) const { return z * z + c1 * z + c0; }

    // Larger-magnitude root first; the other comes from the product, which
    // avoids cancellation when the roots nearly coincide.
    std::pair<Complex, Complex> roots() const {
        Complex disc = c1 * c1 - 4.0 * c0;
        Complex sq = std::sqrt(disc);
        if (std::real(std::conj(c1) * sq) > 0.0) sq = -sq;
        Complex q = 0.5 * (-c1 + sq);
        if (std::abs(q) == 0.0) return {q, -c1 - q};
        return {q, c0 / q};
    }
};

// Foci quadratic for the inscribed ellipse of Q_{s,t,v,w} at parameter r.
inline FociQuadratic foci_quadratic(const CanonicalQuad& q, InellipseParam r,
                                    const Tolerance& tol = {}) {
    if (is_trapezoid(q, tol))
        throw TrapezoidInput("use foci_quadratic_trapezoid for trapezoids");
    const double s = q.s, t = q.t, v = q.v, w = q.w;
    const double N = v * t - w * s;
    const double tau = tau_of(q, r);
    Complex c1{-s * v / tau, ((N - s) * r - v * t) / tau};
    Complex c0 = r * s * Complex{-w, v} / tau;
    return {c1, c0};
}

// Cyclic-trapezoid specialization Q_{s,t,s,1-t}.
inline FociQuadratic foci_quadratic_trapezoid(double s, double t, InellipseParam r,
                                              const Tolerance& tol = {}) {
    if (!(s > 0.0) || !(t > 0.5) || tol.near(t, 1.0, 1.0))
        throw InvalidTrapezoid("cyclic trapezoid requires s > 0, t > 1/2, t != 1");
    double rr = r;
    Complex c1{-s, 2.0 * rr * t - 2.0 * rr - t};
    Complex c0 = Complex{0.0, 1.0} * (Complex{s, 1.0 - t}) * rr;
    return {c1, c0};
}

// Weights placing the inscribed ellipse's foci at the zeros of F(z) over
// the triangle cut out by sides S1, S3, S4.
inline TriangleWeights t_weights(const CanonicalQuad& q, InellipseParam r,
                                 const Tolerance& tol = {}) {
    if (is_trapezoid(q, tol))
        throw TrapezoidInput("S1 and S3 are parallel for trapezoids");
    const double s = q.s, v = q.v;
    const double N = q.v * q.t - q.w * q.s;
    const double tau = tau_of(q, r);
    double t1 = s * ((s - v) * r + N) / (N * tau);
    double t2 = s * (v - s) * r / (N * tau);
    return {t1, t2, 1.0 - t1 - t2};
}

// Vertices of the S1, S3, S4 triangle as complex points.
inline std::array<Complex, 3> focal_triangle(const CanonicalQuad& q) {
    const double s = q.s, t = q.t, v = q.v, w = q.w;
    return {Complex{0.0, t - s * (t - w) / (s - v)}, Complex{0.0, 0.0}, Complex{v, w}};
}

struct MardenResult {
    std::pair<Complex, Complex> foci;
    std::array<Complex, 3> contacts;  // zeta_1 on z2-z3, zeta_2 on z1-z3, zeta_3 on z1-z2
};

// Zeros of F(z) = sum t_k/(z - z_k), plus the three tangency points.
inline MardenResult marden_foci(Complex z1, Complex z2, Complex z3,
                                const TriangleWeights& wts, const Tolerance& tol = {}) {
    if (!wts.valid(tol)) throw InvalidWeights("weights must be positive-product and sum to 1");
    double scale = std::max({std::abs(z1 - z2), std::abs(z2 - z3), std::abs(z1 - z3)});
    if (scale == 0.0 ||
        std::abs((z2 - z1) * std::conj(z3 - z1) - std::conj(z2 - z1) * (z3 - z1)) <=
            2.0 * tol.rel * scale * scale)
        throw CollinearVertices("triangle vertices are collinear");

    // numerator of F(z): z^2 - (t1(z2+z3) + t2(z1+z3) + t3(z1+z2)) z + ...
    Complex c1 = -(wts.t1 * (z2 + z3) + wts.t2 * (z1 + z3) + wts.t3 * (z1 + z2));
    Complex c0 = wts.t1 * z2 * z3 + wts.t2 * z1 * z3 + wts.t3 * z1 * z2;
    FociQuadratic p{c1, c0};

    std::array<Complex, 3> zeta{
        (wts.t2 * z3 + wts.t3 * z2) / (wts.t2 + wts.t3),
        (wts.t1 * z3 + wts.t3 * z1) / (wts.t1 + wts.t3),
        (wts.t1 * z2 + wts.t2 * z1) / (wts.t1 + wts.t2)};
    return {p.roots(), zeta};
}

struct UnitTriangleInellipse {
    Conic conic;
    std::array<Point, 3> contacts;  // on sides y=0, x=0, x+y=1
};

// Inscribed-ellipse family of the triangle (0,0),(1,0),(0,1),
// parametrized by the contact points (t,0) and (0,w).
inline UnitTriangleInellipse unit_triangle_inellipse(double w, double t) {
    if (!(w > 0.0 && w < 1.0 && t > 0.0 && t < 1.0))
        throw ParamOutOfRange("contact parameters must lie in (0,1)");
    Conic c{w * w,
            -2.0 * w * t * (2.0 * w * t - 2.0 * w - 2.0 * t + 1.0),
            t * t,
            -2.0 * w * w * t,
            -2.0 * t * t * w,
            t * t * w * w};
    double den = t + (1.0 - 2.0 * t) * w;
    std::array<Point, 3> contacts{Point{t, 0.0}, Point{0.0, w},
                                  Point{t * (1.0 - w) / den, w * (1.0 - t) / den}};
    return {c, contacts};
}

// Weights reproducing a unit-triangle inellipse from its contact data.
inline TriangleWeights unit_triangle_weights(double w, double t) {
    if (!(w > 0.0 && w < 1.0 && t > 0.0 && t < 1.0))
        throw ParamOutOfRange("contact parameters must lie in (0,1)");
    double den = t + (1.0 - t) * w;
    return {t * w / den, t * (1.0 - w) / den, (1.0 - t) * w / den};
}

}  // namespace besant
