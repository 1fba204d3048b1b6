#pragma once

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>

#include "besant/besant.hpp"
#include "besant/conic.hpp"
#include "besant/quad.hpp"

namespace besant::svg {

inline std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// Figure for the besant subcommand: quad outline (four <line>), the two
// diagonals (one two-segment <path>), the circumcircle when cyclic, the
// Besant ellipse when present, and square markers at EP/IP/center.
// The y axis is flipped to mathematical orientation by a group transform.
inline std::string besant_figure(const ConvexQuad& q, const BesantResult& res,
                                 const Tolerance& tol = {}) {
    auto vs = q.vertices();
    double diam = q.diameter();

    // frame: circumcircle plus 10% padding when cyclic, else padded bbox
    double cx, cy, rad;
    if (res.ep) {
        cx = res.ep->x;
        cy = res.ep->y;
        rad = distance(*res.ep, vs[0]);
    } else {
        cx = (vs[0].x + vs[1].x + vs[2].x + vs[3].x) / 4.0;
        cy = (vs[0].y + vs[1].y + vs[2].y + vs[3].y) / 4.0;
        rad = 0.6 * diam;
    }
    double half = 1.1 * rad;
    double stroke = 0.004 * half;
    double marker = 0.02 * half;

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
        << "viewBox=\"" << num(cx - half) << " " << num(-cy - half) << " "
        << num(2 * half) << " " << num(2 * half) << "\">\n";
    out << "<g transform=\"scale(1,-1)\" fill=\"none\" stroke=\"black\" stroke-width=\""
        << num(stroke) << "\">\n";

    for (int i = 0; i < 4; ++i) {
        Point a = vs[i], b = vs[(i + 1) % 4];
        out << "<line x1=\"" << num(a.x) << "\" y1=\"" << num(a.y) << "\" x2=\""
            << num(b.x) << "\" y2=\"" << num(b.y) << "\"/>\n";
    }
    out << "<path class=\"diagonals\" stroke-dasharray=\"" << num(4 * stroke) << "\" d=\"M "
        << num(vs[0].x) << " " << num(vs[0].y) << " L " << num(vs[2].x) << " "
        << num(vs[2].y) << " M " << num(vs[1].x) << " " << num(vs[1].y) << " L "
        << num(vs[3].x) << " " << num(vs[3].y) << "\"/>\n";

    if (res.ep) {
        out << "<circle cx=\"" << num(cx) << "\" cy=\"" << num(cy) << "\" r=\""
            << num(rad) << "\" stroke=\"gray\"/>\n";
    }

    if (res.ellipse) {
        const Conic& c = *res.ellipse;
        Point ec = conic_center(c, tol);
        auto axes = semi_axes_and_area(c, tol);
        double a = axes[0], b = axes[1];
        double l1 = (c.A + c.C - std::hypot(c.A - c.C, c.B)) / 2.0;
        double theta = (c.B != 0.0) ? std::atan2(l1 - c.A, c.B / 2.0)
                                    : (c.A <= c.C ? 0.0 : 1.5707963267948966);
        Point tip{std::cos(theta), std::sin(theta)};
        Point p1 = ec + a * tip, p2 = ec - a * tip;
        double deg = theta * 180.0 / 3.14159265358979323846;
        out << "<path class=\"ellipse\" stroke=\"blue\" d=\"M " << num(p1.x) << " "
            << num(p1.y) << " A " << num(a) << " " << num(b) << " " << num(deg)
            << " 1 1 " << num(p2.x) << " " << num(p2.y) << " A " << num(a) << " "
            << num(b) << " " << num(deg) << " 1 1 " << num(p1.x) << " " << num(p1.y)
            << " Z\"/>\n";
    }

    auto mark = [&](Point p, const char* cls) {
        out << "<rect class=\"" << cls << "\" fill=\"red\" x=\"" << num(p.x - marker / 2)
            << "\" y=\"" << num(p.y - marker / 2) << "\" width=\"" << num(marker)
            << "\" height=\"" << num(marker) << "\"/>\n";
    };
    mark(res.ip, "marker-ip");
    if (res.ep) mark(*res.ep, "marker-ep");
    if (res.center) mark(*res.center, "marker-center");

    out << "</g>\n</svg>\n";
    return out.str();
}

}  // namespace besant::svg
