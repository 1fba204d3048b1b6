#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <utility>

#include "besant/errors.hpp"
#include "besant/point.hpp"
#include "besant/tolerance.hpp"

namespace besant {

// Conic A x^2 + B xy + C y^2 + D x + E y + F = 0.  Coefficients are only
// defined up to a nonzero scalar; normalized() fixes the representative.
struct Conic {
    double A = 0, B = 0, C = 0, D = 0, E = 0, F = 0;

    double evaluate(Point p) const {
        return A * p.x * p.x + B * p.x * p.y + C * p.y * p.y + D * p.x + E * p.y + F;
    }

    double max_coeff() const {
        return std::max({std::abs(A), std::abs(B), std::abs(C),
                         std::abs(D), std::abs(E), std::abs(F)});
    }

    // Largest-magnitude coefficient scaled to +-1, sign fixed so A >= 0
    // (C decides when A vanishes).
    Conic normalized() const {
        double m = max_coeff();
        double lead = (A != 0.0) ? A : C;
        double sign = (lead < 0.0) ? -1.0 : 1.0;
        double k = sign / m;
        return {A * k, B * k, C * k, D * k, E * k, F * k};
    }

    Conic scaled(double k) const { return {A * k, B * k, C * k, D * k, E * k, F * k}; }

    double discriminant() const { return 4.0 * A * C - B * B; }  // Delta

    double delta() const {  // C D^2 + A E^2 - B D E - F Delta
        return C * D * D + A * E * E - B * D * E - F * discriminant();
    }

    // Image of this conic under the affine map  p -> L p + m  applied to
    // points (coefficients transform by the inverse substitution, so pass
    // the map from new coordinates to old ones).
    Conic pulled_back(const std::array<double, 4>& L, Point m) const {
        // q = L p + m, phi'(p) = phi(q)
        double l00 = L[0], l01 = L[1], l10 = L[2], l11 = L[3];
        // quadratic part Q = [[A, B/2],[B/2, C]]
        double q00 = A, q01 = B / 2.0, q11 = C;
        double a = l00 * (q00 * l00 + q01 * l10) + l10 * (q01 * l00 + q11 * l10);
        double c = l01 * (q00 * l01 + q01 * l11) + l11 * (q01 * l01 + q11 * l11);
        double b = 2.0 * (l00 * (q00 * l01 + q01 * l11) + l10 * (q01 * l01 + q11 * l11));
        Point qm{q00 * m.x + q01 * m.y, q01 * m.x + q11 * m.y};
        Point lin{2.0 * qm.x + D, 2.0 * qm.y + E};
        double d = l00 * lin.x + l10 * lin.y;
        double e = l01 * lin.x + l11 * lin.y;
        double f = m.x * qm.x + m.y * qm.y + D * m.x + E * m.y + F;
        return {a, b, c, d, e, f};
    }
};

inline bool is_real_ellipse(const Conic& c0, const Tolerance& = {}) {
    Conic c = (c0.A < 0.0 || (c0.A == 0.0 && c0.C < 0.0)) ? c0.scaled(-1.0) : c0;
    return c.discriminant() > 0.0 && c.delta() > 0.0;
}

inline Point conic_center(const Conic& c, const Tolerance& tol = {}) {
    double Delta = c.discriminant();
    double m = c.max_coeff();
    if (std::abs(Delta) <= tol.rel * m * m)
        throw DegenerateConic("conic has no unique center");
    return {(c.B * c.E - 2.0 * c.C * c.D) / Delta,
            (c.B * c.D - 2.0 * c.A * c.E) / Delta};
}

// Axis lengths and area of a real ellipse: eigenvalues of the quadratic
// form give the centered equation l1 X^2 + l2 Y^2 = delta/Delta.
inline std::array<double, 3> semi_axes_and_area(const Conic& c0, const Tolerance& tol = {}) {
    if (!is_real_ellipse(c0, tol)) throw NotEllipse("not a real ellipse");
    Conic c = (c0.A < 0.0) ? c0.scaled(-1.0) : c0;
    double tr = c.A + c.C;
    double root = std::hypot(c.A - c.C, c.B);
    double l1 = (tr - root) / 2.0;  // smaller eigenvalue -> semi-major
    double l2 = (tr + root) / 2.0;
    double rhs = c.delta() / c.discriminant();
    double a = std::sqrt(rhs / l1);
    double b = std::sqrt(rhs / l2);
    return {a, b, 3.14159265358979323846 * a * b};
}

inline double ellipse_area(const Conic& c0, const Tolerance& tol = {}) {
    return semi_axes_and_area(c0, tol)[2];
}

// Foci from the coefficients.  The first returned focus is the rightmost
// one (uppermost on an x tie); a circle returns the center twice.
inline std::pair<Point, Point> foci(const Conic& c0, const Tolerance& tol = {}) {
    if (!is_real_ellipse(c0, tol)) throw NotEllipse("not a real ellipse");
    Conic c = (c0.A < 0.0) ? c0.scaled(-1.0) : c0;
    Point center = conic_center(c, tol);
    double Delta = c.discriminant();
    double mu = 4.0 * c.delta() / (Delta * Delta);
    double M = (c.A - c.C) * (c.A - c.C) + c.B * c.B;
    double rootM = std::sqrt(M);
    double kA = std::max(0.0, 0.5 * mu * (c.C - c.A + rootM));
    double kC = std::max(0.0, 0.5 * mu * (c.A - c.C + rootM));

    Point f1, f2;
    if (c.B != 0.0) {
        double sgnB = (c.B > 0.0) ? 1.0 : -1.0;
        f1 = {center.x - std::sqrt(kA), center.y + sgnB * std::sqrt(kC)};
        f2 = {center.x + std::sqrt(kA), center.y - sgnB * std::sqrt(kC)};
    } else if (c.A > c.C) {
        f1 = {center.x, center.y + std::sqrt(kC)};
        f2 = {center.x, center.y - std::sqrt(kC)};
    } else if (c.A < c.C) {
        f1 = {center.x + std::sqrt(kA), center.y};
        f2 = {center.x - std::sqrt(kA), center.y};
    } else {
        return {center, center};  // circle
    }

    // rightmost first, uppermost on a tie
    double span = std::max(1.0, norm(f1 - center) + norm(f2 - center));
    bool tie = std::abs(f1.x - f2.x) <= tol.rel * span;
    bool swap = tie ? (f2.y > f1.y) : (f2.x > f1.x);
    if (swap) std::swap(f1, f2);
    return {f1, f2};
}

enum class TangencyKind { Secant, Tangent, Disjoint };

struct TangencyResult {
    TangencyKind kind;
    std::optional<Point> point;  // contact point when tangent
};

// Classify the line through p1, p2 against the conic by the sign of the
// quadratic discriminant along the parametrized line.
inline TangencyResult line_tangency(const Conic& c0, Point p1, Point p2,
                                    const Tolerance& tol = {}) {
    double len = distance(p1, p2);
    if (len <= tol.rel * std::max(1.0, norm(p1) + norm(p2)))
        throw DegenerateLine("line through coincident points");
    Conic c = c0.normalized();
    Point d = (p2 - p1) / len;  // unit direction
    double qa = c.A * d.x * d.x + c.B * d.x * d.y + c.C * d.y * d.y;
    double qb = 2.0 * c.A * p1.x * d.x + c.B * (p1.x * d.y + p1.y * d.x) +
                2.0 * c.C * p1.y * d.y + c.D * d.x + c.E * d.y;
    double qc = c.evaluate(p1);
    double disc = qb * qb - 4.0 * qa * qc;
    double scale = std::max({1.0, qb * qb, std::abs(4.0 * qa * qc)});
    if (std::abs(disc) <= tol.rel * scale) {
        Point contact = p1 + (-qb / (2.0 * qa)) * d;
        return {TangencyKind::Tangent, contact};
    }
    return {disc > 0.0 ? TangencyKind::Secant : TangencyKind::Disjoint, std::nullopt};
}

}  // namespace besant
