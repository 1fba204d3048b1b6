#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace besant {

// Relative tolerances used by every predicate in the library.  The math
// behind the predicates is exact; doubles are not, so each comparison is
// scaled by the magnitude of the quantities involved.
struct Tolerance {
    double rel = 1e-9;          // generic predicate slack
    double focus_match = 1e-6;  // "focus equals EP/IP", relative to quad diameter

    // |value| small compared to scale (never tighter than rel itself).
    bool near_zero(double value, double scale) const {
        return std::abs(value) <= rel * std::max(1.0, std::abs(scale));
    }

    bool near(double a, double b, double scale) const {
        return near_zero(a - b, std::max(std::abs(scale), std::max(std::abs(a), std::abs(b))));
    }

    // Default tolerance, overridable through the environment.
    static Tolerance from_env() {
        Tolerance t;
        if (const char* s = std::getenv("BESANT_TOLERANCE")) {
            char* end = nullptr;
            double v = std::strtod(s, &end);
            if (end != s && v > 0.0) t.rel = v;
        }
        return t;
    }
};

}  // namespace besant
