#pragma once

#include <cmath>

#include "besant/point.hpp"

namespace besant {

// Direct or indirect similarity of the plane:
//   apply(p) = translation + scale * Rot(rotation) * Mirror(reflect) * p
// where Mirror flips x before the rotation is applied.
struct Similarity {
    double scale = 1.0;
    double rotation = 0.0;
    Point translation{0.0, 0.0};
    bool reflect = false;

    Point apply(Point p) const {
        double x = reflect ? -p.x : p.x;
        double c = std::cos(rotation), s = std::sin(rotation);
        return {translation.x + scale * (c * x - s * p.y),
                translation.y + scale * (s * x + c * p.y)};
    }

    Point apply_inverse(Point p) const {
        double c = std::cos(rotation), s = std::sin(rotation);
        Point q = (p - translation) / scale;
        Point r{c * q.x + s * q.y, -s * q.x + c * q.y};
        if (reflect) r.x = -r.x;
        return r;
    }

    static Similarity identity() { return {}; }
};

}  // namespace besant
