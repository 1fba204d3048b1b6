#pragma once

#include <array>
#include <cmath>
#include <optional>

#include "besant/errors.hpp"
#include "besant/point.hpp"
#include "besant/similarity.hpp"
#include "besant/tolerance.hpp"

namespace besant {

// Strictly convex quadrilateral; vertices are stored clockwise starting
// from the first input vertex.  Counterclockwise input is reversed.
class ConvexQuad {
public:
    explicit ConvexQuad(std::array<Point, 4> vs, const Tolerance& tol = {})
        : vertices_(vs) {
        for (const Point& p : vertices_)
            if (!finite(p)) throw NotConvex("non-finite vertex");
        double orientation = 0.0;
        double diam = diameter_of(vertices_);
        if (diam <= 0.0) throw NotConvex("repeated vertices");
        for (int i = 0; i < 4; ++i) {
            Point e1 = vertices_[(i + 1) % 4] - vertices_[i];
            Point e2 = vertices_[(i + 2) % 4] - vertices_[(i + 1) % 4];
            double c = cross(e1, e2);
            if (std::abs(c) <= tol.rel * norm(e1) * norm(e2))
                throw NotConvex("three vertices nearly collinear");
            if (orientation == 0.0)
                orientation = c;
            else if (c * orientation < 0.0)
                throw NotConvex("vertices do not form a convex polygon");
        }
        if (orientation > 0.0) {  // counterclockwise: reverse, keep first vertex first
            std::swap(vertices_[1], vertices_[3]);
        }
    }

    const std::array<Point, 4>& vertices() const { return vertices_; }
    Point vertex(int i) const { return vertices_[((i % 4) + 4) % 4]; }

    double diameter() const { return diameter_of(vertices_); }

private:
    static double diameter_of(const std::array<Point, 4>& vs) {
        double d = 0.0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) d = std::max(d, distance(vs[i], vs[j]));
        return d;
    }

    std::array<Point, 4> vertices_;
};

// Q_{s,t,v,w}: vertices (0,0),(0,1),(s,t),(v,w) clockwise, plus the
// similarity mapping canonical coordinates back to the source pose.
struct CanonicalQuad {
    double s = 0, t = 0, v = 0, w = 0;
    Similarity to_original;

    std::array<Point, 4> vertices() const {
        return {Point{0, 0}, Point{0, 1}, Point{s, t}, Point{v, w}};
    }

    double diameter() const {
        double d = 0.0;
        auto vs = vertices();
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) d = std::max(d, distance(vs[i], vs[j]));
        return d;
    }
};

// The polynomial quantities every closed form below is written in.
struct DerivedQuantities {
    double N;     // vt - ws
    double beta;  // s^2 + t^2, squared length of diagonal (0,0)-(s,t)
    double I;     // t^3 - t^2 + s^2 (t+1)
    double H;     // s v beta - t I
    double L;     // (v-s) beta + 2 s t
    double CYC;   // beta v - s (v^2 + w^2) - N; zero iff cyclic
};

inline DerivedQuantities derived(const CanonicalQuad& q) {
    DerivedQuantities d;
    const double s = q.s, t = q.t, v = q.v, w = q.w;
    d.N = v * t - w * s;
    d.beta = s * s + t * t;
    d.I = t * t * t - t * t + s * s * (t + 1.0);
    d.H = s * v * d.beta - t * d.I;
    d.L = (v - s) * d.beta + 2.0 * s * t;
    d.CYC = d.beta * v - s * (v * v + w * w) - d.N;
    return d;
}

inline bool is_trapezoid(const CanonicalQuad& q, const Tolerance& tol = {});

// Similarity-normalize a convex quadrilateral to Q_{s,t,v,w}.  All eight
// traversals (4 starting vertices x 2 directions) are reduced; among the
// candidates satisfying s,t,v > 0 and t >= w the winner is chosen by an
// intrinsic key, so the result does not depend on input vertex order or
// pose: trapezoid forms (v = s) first, then the shortest unit side, then
// the lexicographically smallest (s,t,v,w).
inline CanonicalQuad canonicalize(const ConvexQuad& q, const Tolerance& tol = {}) {
    std::optional<CanonicalQuad> best;
    std::array<double, 6> best_key{};
    const double diam = q.diameter();
    for (int start = 0; start < 4; ++start) {
        for (int dir : {1, -1}) {
            Point a1 = q.vertex(start);
            Point a2 = q.vertex(start + dir);
            Point a3 = q.vertex(start + 2 * dir);
            Point a4 = q.vertex(start + 3 * dir);

            double u = distance(a1, a2);
            // rotation taking a2-a1 onto the positive y-axis
            double theta = std::atan2(a2.y - a1.y, a2.x - a1.x);
            double rot = 1.5707963267948966 - theta;  // pi/2 - theta

            auto fwd = [&](Point p, bool refl) {
                Point d = p - a1;
                double c = std::cos(rot), sn = std::sin(rot);
                Point r{(c * d.x - sn * d.y) / u, (sn * d.x + c * d.y) / u};
                if (refl) r.x = -r.x;
                return r;
            };

            bool refl = fwd(a3, false).x < 0.0;
            Point p3 = fwd(a3, refl);
            Point p4 = fwd(a4, refl);
            double s = p3.x, t = p3.y, v = p4.x, w = p4.y;

            if (s <= tol.rel || v <= tol.rel || t <= tol.rel) continue;
            if (t < w - tol.rel * std::max(1.0, std::abs(t))) continue;

            CanonicalQuad cq{s, t, v, w,
                             Similarity{u, -rot, a1, refl}};
            // sanity: round trip must reproduce the source vertices
            bool ok = true;
            std::array<Point, 4> src{a1, a2, a3, a4};
            auto canon = cq.vertices();
            for (int i = 0; i < 4; ++i)
                if (distance(cq.to_original.apply(canon[i]), src[i]) >
                    tol.rel * std::max(1.0, diam) * 1e3)
                    ok = false;
            if (!ok) continue;

            bool trap_form = std::abs(v - s) <= tol.rel * std::max(1.0, std::abs(s));
            std::array<double, 6> key{trap_form ? 0.0 : 1.0, u / diam, s, t, v, w};
            if (!best || key < best_key) {
                best = cq;
                best_key = key;
            }
        }
    }
    if (best) return *best;
    throw Degenerate("no starting vertex yields a valid canonical form");
}

// IP, the diagonal intersection (vs/(N+s), vt/(N+s)).
inline Point diagonal_intersection(const CanonicalQuad& q) {
    double N = q.v * q.t - q.w * q.s;
    return {q.v * q.s / (N + q.s), q.v * q.t / (N + q.s)};
}

inline bool is_cyclic(const CanonicalQuad& q, const Tolerance& tol = {}) {
    DerivedQuantities d = derived(q);
    double scale = std::max({1.0, std::abs(d.beta * q.v),
                             std::abs(q.s * (q.v * q.v + q.w * q.w)), std::abs(d.N)});
    return std::abs(d.CYC) <= tol.rel * scale;
}

inline bool is_orthodiagonal(const CanonicalQuad& q, const Tolerance& tol = {}) {
    double rhs = 1.0 - q.s * q.v / q.t;
    return tol.near(q.w, rhs, std::max(1.0, std::abs(q.s * q.v / q.t)));
}

inline bool is_trapezoid(const CanonicalQuad& q, const Tolerance& tol) {
    // S1 (vertical) parallel to S3  <=>  v = s
    if (tol.near(q.v, q.s, std::max(q.v, q.s))) return true;
    // S2 parallel to S4: cross of (s, t-1) and (v, w)
    double c = q.s * q.w - (q.t - 1.0) * q.v;
    double scale = norm({q.s, q.t - 1.0}) * norm({q.v, q.w});
    return std::abs(c) <= tol.rel * std::max(1.0, scale);
}

inline bool is_parallelogram(const ConvexQuad& q, const Tolerance& tol = {}) {
    auto vs = q.vertices();
    Point e1 = vs[1] - vs[0], e3 = vs[3] - vs[2];
    Point e2 = vs[2] - vs[1], e4 = vs[0] - vs[3];
    bool p13 = std::abs(cross(e1, e3)) <= tol.rel * std::max(1.0, norm(e1) * norm(e3));
    bool p24 = std::abs(cross(e2, e4)) <= tol.rel * std::max(1.0, norm(e2) * norm(e4));
    return p13 && p24;
}

inline bool is_parallelogram(const CanonicalQuad& q, const Tolerance& tol = {}) {
    return is_parallelogram(ConvexQuad(q.vertices(), tol), tol);
}

// EP, the circumcenter ((beta - t)/(2s), 1/2); only defined for cyclic quads.
inline Point circumcenter(const CanonicalQuad& q, const Tolerance& tol = {}) {
    if (!is_cyclic(q, tol)) throw NotCyclic("quadrilateral is not cyclic");
    DerivedQuantities d = derived(q);
    return {(d.beta - q.t) / (2.0 * q.s), 0.5};
}

inline ConvexQuad midpoint_quad(const ConvexQuad& q, const Tolerance& tol = {}) {
    auto vs = q.vertices();
    return ConvexQuad({midpoint(vs[0], vs[1]), midpoint(vs[1], vs[2]),
                       midpoint(vs[2], vs[3]), midpoint(vs[3], vs[0])},
                      tol);
}

// Circumcenter of the triangle p1 p2 p3.
inline Point circumcenter_of_three(Point p1, Point p2, Point p3, const Tolerance& tol = {}) {
    Point b = p2 - p1, c = p3 - p1;
    double d = 2.0 * cross(b, c);
    double scale = std::max(norm(b), norm(c));
    if (std::abs(d) <= tol.rel * std::max(1.0, scale * scale))
        throw CollinearMidpoints("circle through three collinear points");
    double b2 = dot(b, b), c2 = dot(c, c);
    return p1 + Point{(c.y * b2 - b.y * c2) / d, (b.x * c2 - c.x * b2) / d};
}

// Center of the circle through the side midpoints.  The quadrilateral must
// be orthodiagonal, which is exactly when the fourth midpoint lands on the
// circle through the first three.
inline Point midpoint_circumcenter(const CanonicalQuad& q, const Tolerance& tol = {}) {
    if (!is_orthodiagonal(q, tol))
        throw NotOrthodiagonal("midpoint quadrilateral is cyclic only for orthodiagonal input");
    Point mp1{0.0, 0.5};
    Point mp2{q.s / 2.0, (1.0 + q.t) / 2.0};
    Point mp3{(q.s + q.v) / 2.0, (q.t + q.w) / 2.0};
    Point mp4{q.v / 2.0, q.w / 2.0};
    Point c0 = circumcenter_of_three(mp1, mp2, mp3, tol);
    double r = distance(c0, mp1);
    if (!tol.near(distance(c0, mp4), r, r))
        throw NotOrthodiagonal("fourth midpoint off the midpoint circle");
    return c0;
}

}  // namespace besant
