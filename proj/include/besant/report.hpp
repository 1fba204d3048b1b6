#pragma once

#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

#include "besant/besant.hpp"
#include "besant/conic.hpp"
#include "besant/inscribed.hpp"
#include "besant/marden.hpp"
#include "besant/quad.hpp"

namespace besant::report {

using json = nlohmann::ordered_json;

// Round to 12 significant digits so reports serialize identically across
// runs regardless of how the value was produced.
inline double round12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::strtod(buf, nullptr);
}

inline json to_json(Point p) { return json::array({round12(p.x), round12(p.y)}); }

inline json to_json(const Conic& c0) {
    Conic c = c0.normalized();
    return json::array({round12(c.A), round12(c.B), round12(c.C),
                        round12(c.D), round12(c.E), round12(c.F)});
}

inline json input_echo(const ConvexQuad& q) {
    json verts = json::array();
    for (const Point& p : q.vertices()) verts.push_back(to_json(p));
    return verts;
}

inline json canonical_json(const CanonicalQuad& cq) {
    return {{"s", round12(cq.s)}, {"t", round12(cq.t)},
            {"v", round12(cq.v)}, {"w", round12(cq.w)}};
}

inline json check(bool pass, double residual) {
    return {{"pass", pass}, {"residual", round12(residual)}};
}

// Shared core of the classify/besant reports.
inline json classify_report(const ConvexQuad& q, const Tolerance& tol = {}) {
    json rep;
    rep["input"] = input_echo(q);
    BesantResult res = classify_besant(q, tol);
    const CanonicalQuad& cq = res.canonical;
    DerivedQuantities d = derived(cq);

    rep["canonical"] = canonical_json(cq);
    rep["flags"] = {{"cyclic", is_cyclic(cq, tol)},
                    {"orthodiagonal", is_orthodiagonal(cq, tol)},
                    {"trapezoid", is_trapezoid(cq, tol)},
                    {"parallelogram", is_parallelogram(q, tol)},
                    {"besant", res.is_besant}};
    rep["reason"] = to_string(res.reason);
    rep["ip"] = to_json(res.ip);
    rep["ep"] = res.ep ? to_json(*res.ep) : json(nullptr);
    rep["center"] = res.center ? to_json(*res.center) : json(nullptr);
    rep["conic"] = res.ellipse ? to_json(*res.ellipse) : json(nullptr);
    rep["r"] = res.r_canonical ? json(round12(*res.r_canonical)) : json(nullptr);

    json checks;
    checks["cyclic"] = check(is_cyclic(cq, tol),
                             std::abs(d.CYC) / std::max(1.0, std::abs(d.beta * cq.v)));
    checks["orthodiagonal"] =
        check(is_orthodiagonal(cq, tol), std::abs(cq.w - (1.0 - cq.s * cq.v / cq.t)));
    if (res.is_besant && res.ellipse && res.ep) {
        auto [f1, f2] = foci(*res.ellipse, tol);
        double r1 = std::max(distance(f1, *res.ep), distance(f2, res.ip));
        double r2 = std::max(distance(f1, res.ip), distance(f2, *res.ep));
        double resid = std::min(r1, r2) / q.diameter();
        checks["foci_at_ep_ip"] = check(resid <= tol.focus_match, resid);
    }
    rep["checks"] = checks;
    return rep;
}

inline json besant_report(const ConvexQuad& q, const Tolerance& tol = {}) {
    return classify_report(q, tol);
}

inline json inscribe_report(const ConvexQuad& q, double r_value, const Tolerance& tol = {}) {
    InellipseParam r(r_value);
    json rep;
    rep["input"] = input_echo(q);
    CanonicalQuad cq = canonicalize(q, tol);
    rep["canonical"] = canonical_json(cq);
    rep["r"] = round12(r_value);

    const bool trapezoid = tol.near(cq.v, cq.s, std::max(cq.v, cq.s));
    Conic canonical_conic = trapezoid ? inscribed_conic_trapezoid(cq.s, cq.t, r, tol)
                                      : inscribed_conic(cq, r, tol);
    FociQuadratic fq = trapezoid ? foci_quadratic_trapezoid(cq.s, cq.t, r, tol)
                                 : foci_quadratic(cq, r, tol);
    const Similarity& sim = cq.to_original;
    Conic conic = conic_to_original(canonical_conic, sim);
    rep["conic"] = to_json(conic);
    rep["center"] = to_json(conic_center(conic, tol));

    auto [cf1, cf2] = foci(canonical_conic, tol);
    auto [z1, z2] = fq.roots();
    Point m1 = sim.apply(Point::from_complex(z1));
    Point m2 = sim.apply(Point::from_complex(z2));
    Point c1 = sim.apply(cf1), c2 = sim.apply(cf2);
    rep["foci_by_coefficients"] = json::array({to_json(c1), to_json(c2)});
    rep["foci_by_marden"] = json::array({to_json(m1), to_json(m2)});
    double cross_route = std::min(std::max(distance(c1, m1), distance(c2, m2)),
                                  std::max(distance(c1, m2), distance(c2, m1)));
    rep["checks"] = {{"foci_cross_route",
                      check(cross_route <= 1e-8 * q.diameter(), cross_route)}};
    return rep;
}

inline json maxarea_report(const ConvexQuad& q, const Tolerance& tol = {}) {
    json rep;
    rep["input"] = input_echo(q);
    CanonicalQuad cq = canonicalize(q, tol);
    rep["canonical"] = canonical_json(cq);
    auto [r_star, area_canonical] = max_area_param(cq, tol);
    rep["r_star"] = round12(r_star);
    // area in the original pose scales with the squared similarity ratio
    rep["area"] = round12(area_canonical * cq.to_original.scale * cq.to_original.scale);
    const bool trapezoid = tol.near(cq.v, cq.s, std::max(cq.v, cq.s));
    Conic canonical_conic = trapezoid
                                ? inscribed_conic_trapezoid(cq.s, cq.t, InellipseParam(r_star), tol)
                                : inscribed_conic(cq, InellipseParam(r_star), tol);
    rep["conic"] = to_json(conic_to_original(canonical_conic, cq.to_original));
    return rep;
}

}  // namespace besant::report
