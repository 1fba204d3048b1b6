#pragma once

#include <cmath>
#include <complex>

namespace besant {

// A plane point, interchangeable with the complex number x + iy.
struct Point {
    double x = 0.0;
    double y = 0.0;

    std::complex<double> as_complex() const { return {x, y}; }
    static Point from_complex(std::complex<double> z) { return {z.real(), z.imag()}; }

    friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
    friend Point operator*(double k, Point p) { return {k * p.x, k * p.y}; }
    friend Point operator*(Point p, double k) { return k * p; }
    friend Point operator/(Point p, double k) { return {p.x / k, p.y / k}; }
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double distance(Point a, Point b) { return norm(a - b); }
inline Point midpoint(Point a, Point b) { return 0.5 * (a + b); }

inline bool finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

}  // namespace besant
