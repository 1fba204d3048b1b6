#pragma once

#include <cmath>
#include <optional>
#include <utility>

#include "besant/conic.hpp"
#include "besant/errors.hpp"
#include "besant/inscribed.hpp"
#include "besant/marden.hpp"
#include "besant/quad.hpp"

namespace besant {

enum class BesantReason { Ok, NotCyclic, NotOrthodiagonal, Parallelogram };

inline const char* to_string(BesantReason r) {
    switch (r) {
        case BesantReason::Ok: return "Ok";
        case BesantReason::NotCyclic: return "NotCyclic";
        case BesantReason::NotOrthodiagonal: return "NotOrthodiagonal";
        case BesantReason::Parallelogram: return "Parallelogram";
    }
    return "?";
}

struct BesantResult {
    bool is_besant = false;
    BesantReason reason = BesantReason::Ok;
    std::optional<Conic> ellipse;      // original pose
    std::optional<double> r_canonical;
    std::optional<Point> ep;           // original pose, cyclic quads only
    Point ip;                          // original pose, always defined
    std::optional<Point> center;       // ellipse center, original pose
    CanonicalQuad canonical;
};

// Cyclic orthodiagonal canonical quad from the two free parameters (s,t):
// v = tI/(s beta) and w = 1 - sv/t.  This is the corpus generator used by
// the whole verification suite.
inline CanonicalQuad generate_besant_quad(double s, double t, const Tolerance& tol = {}) {
    if (!(s > 0.0 && t > 0.0)) throw ConstraintViolation("s and t must be positive");
    double beta = s * s + t * t;
    double I = t * t * t - t * t + s * s * (t + 1.0);
    double v = t * I / (s * beta);
    if (!(v > 0.0)) throw ConstraintViolation("induced v is not positive");
    double w = 1.0 - s * v / t;
    if (t < w) throw ConstraintViolation("induced w violates t >= w");
    double N = v * t - w * s;
    if (!(N > tol.rel) || !(N + s - v > tol.rel) ||
        tol.near(N, v, std::max(N, v)) || tol.near(s, v, std::max(s, v)))
        throw ConstraintViolation("induced (v,w) violates the non-trapezoid constraints");
    CanonicalQuad cq{s, t, v, w, Similarity::identity()};
    ConvexQuad(cq.vertices(), tol);  // must be strictly convex
    return cq;
}

// The unique inscribed ellipse with foci EP and IP, with its parameter.
// Non-trapezoid: r = v/(s+v).  Cyclic orthodiagonal trapezoids are forced
// isoceles (s = t) and take r = 1/2.
inline std::pair<Conic, double> besant_ellipse(const CanonicalQuad& cq,
                                               const Tolerance& tol = {}) {
    if (is_parallelogram(cq, tol)) throw NotBesant("parallelograms are excluded");
    if (!is_cyclic(cq, tol)) throw NotBesant("quadrilateral is not cyclic");
    if (!is_orthodiagonal(cq, tol)) throw NotBesant("quadrilateral is not orthodiagonal");
    if (tol.near(cq.v, cq.s, std::max(cq.v, cq.s))) {
        if (!tol.near(cq.s, cq.t, std::max(cq.s, cq.t)))
            throw NonIsoscelesTrapezoid(
                "cyclic orthodiagonal trapezoids must have s = t; input is inconsistent");
        double r = 0.5;
        return {inscribed_conic_trapezoid(cq.t, cq.t, InellipseParam(r), tol), r};
    }
    double r = cq.v / (cq.s + cq.v);
    return {inscribed_conic(cq, InellipseParam(r), tol), r};
}

// Express a canonical-frame conic in the pose `sim` maps back to.
inline Conic conic_to_original(const Conic& canonical, const Similarity& sim) {
    double c = std::cos(sim.rotation), sn = std::sin(sim.rotation);
    double m = sim.reflect ? -1.0 : 1.0;
    double k = 1.0 / sim.scale;
    // inverse map original -> canonical: p |-> Mirror Rot(-rot) (p - tr)/scale
    std::array<double, 4> L{m * k * c, m * k * sn, -k * sn, k * c};
    Point off{-(L[0] * sim.translation.x + L[1] * sim.translation.y),
              -(L[2] * sim.translation.x + L[3] * sim.translation.y)};
    return canonical.pulled_back(L, off).normalized();
}

// Diagonal intersection of an arbitrary-pose convex quadrilateral.
inline Point diagonal_intersection(const ConvexQuad& q) {
    auto vs = q.vertices();
    Point d1 = vs[2] - vs[0], d2 = vs[3] - vs[1];
    double u = cross(vs[1] - vs[0], d2) / cross(d1, d2);
    return vs[0] + u * d1;
}

// Decide Besant-ness and construct everything in the original pose.
inline BesantResult classify_besant(const ConvexQuad& q, const Tolerance& tol = {}) {
    BesantResult res;
    res.canonical = canonicalize(q, tol);
    const CanonicalQuad& cq = res.canonical;
    const Similarity& sim = cq.to_original;
    res.ip = diagonal_intersection(q);

    bool cyclic = is_cyclic(cq, tol);
    if (cyclic) res.ep = sim.apply(circumcenter(cq, tol));

    if (is_parallelogram(q, tol)) {
        res.reason = BesantReason::Parallelogram;
        return res;
    }
    if (!cyclic) {
        res.reason = BesantReason::NotCyclic;
        return res;
    }
    if (!is_orthodiagonal(cq, tol)) {
        res.reason = BesantReason::NotOrthodiagonal;
        return res;
    }

    auto [conic, r] = besant_ellipse(cq, tol);
    res.is_besant = true;
    res.reason = BesantReason::Ok;
    res.r_canonical = r;
    res.ellipse = conic_to_original(conic, sim);
    res.center = conic_center(*res.ellipse, tol);
    return res;
}

// Clause-by-clause numeric check of the characterization theorem for one
// inscribed ellipse.
struct BesantVerification {
    bool applicable = false;          // some focus sits at EP or IP
    bool other_focus_matches = false; // then the other focus is IP resp. EP
    bool orthodiagonal = false;
    bool midpoint_quad_cyclic = false;
    bool center_matches = false;      // ellipse center == midpoint circumcenter
    double focus_residual = 0.0;      // best max-distance of foci to {EP, IP}
};

inline BesantVerification verify_theorem_besant(const CanonicalQuad& cq, InellipseParam r,
                                                const Tolerance& tol = {}) {
    if (!is_cyclic(cq, tol)) throw NotCyclic("theorem applies to cyclic quadrilaterals");
    if (is_parallelogram(cq, tol)) throw NotBesant("parallelograms are excluded");

    const bool trapezoid = tol.near(cq.v, cq.s, std::max(cq.v, cq.s));
    Conic conic = trapezoid ? inscribed_conic_trapezoid(cq.s, cq.t, r, tol)
                            : inscribed_conic(cq, r, tol);
    auto [f1, f2] = foci(conic, tol);
    Point ep = circumcenter(cq, tol);
    Point ip = diagonal_intersection(cq);
    double diam = cq.diameter();
    double thresh = tol.focus_match * diam;

    BesantVerification out;
    double pairing1 = std::max(distance(f1, ep), distance(f2, ip));
    double pairing2 = std::max(distance(f1, ip), distance(f2, ep));
    out.focus_residual = std::min(pairing1, pairing2);
    bool at_ep = distance(f1, ep) <= thresh || distance(f2, ep) <= thresh;
    bool at_ip = distance(f1, ip) <= thresh || distance(f2, ip) <= thresh;
    out.applicable = at_ep || at_ip;
    if (out.applicable) {
        out.other_focus_matches = out.focus_residual <= thresh;
        out.orthodiagonal = is_orthodiagonal(cq, tol);
        try {
            ConvexQuad mq = midpoint_quad(ConvexQuad(cq.vertices(), tol), tol);
            auto vs = mq.vertices();
            Point c0 = circumcenter_of_three(vs[0], vs[1], vs[2], tol);
            double rad = distance(c0, vs[0]);
            out.midpoint_quad_cyclic = tol.near(distance(c0, vs[3]), rad, rad);
            Point center = conic_center(conic, tol);
            out.center_matches = distance(center, c0) <= tol.rel * std::max(1.0, diam) * 10.0;
        } catch (const Error&) {
            out.midpoint_quad_cyclic = false;
        }
    }
    return out;
}

}  // namespace besant
