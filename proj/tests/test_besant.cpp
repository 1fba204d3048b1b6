#include <catch_amalgamated.hpp>

#include "besant/besant.hpp"
#include "support/generators.hpp"

using namespace besant;
using Catch::Approx;

namespace {

ConvexQuad example_quad() {
    return ConvexQuad({Point{0, 0}, Point{0, 1}, Point{2, 4}, Point{34.0 / 5, -12.0 / 5}});
}

double foci_residual(const Conic& c, Point ep, Point ip) {
    auto [f1, f2] = foci(c);
    return std::min(std::max(distance(f1, ep), distance(f2, ip)),
                    std::max(distance(f1, ip), distance(f2, ep)));
}

}  // namespace

TEST_CASE("generate_besant_quad reproduces the reference example") {
    CanonicalQuad cq = generate_besant_quad(2.0, 4.0);
    CHECK(cq.v == Approx(34.0 / 5).margin(1e-12));
    CHECK(cq.w == Approx(-12.0 / 5).margin(1e-12));
    CHECK(is_cyclic(cq));
    CHECK(is_orthodiagonal(cq));

    CHECK_THROWS_AS(generate_besant_quad(1.0, 1.0), ConstraintViolation);  // v = s
    CHECK_THROWS_AS(generate_besant_quad(-1.0, 2.0), ConstraintViolation);
}

TEST_CASE("besant ellipse of the reference example") {
    CanonicalQuad cq = generate_besant_quad(2.0, 4.0);
    auto [conic, r] = besant_ellipse(cq);
    CHECK(r == Approx(17.0 / 22.0).margin(1e-12));
    Conic expect{649, 216, 1936, -2996, -2992, 1156};
    Conic a = conic.normalized(), b = expect.normalized();
    CHECK(std::abs(a.A - b.A) < 1e-9);
    CHECK(std::abs(a.B - b.B) < 1e-9);
    CHECK(std::abs(a.F - b.F) < 1e-9);
}

TEST_CASE("besant ellipse of the isoceles trapezoid") {
    CanonicalQuad trap{2, 2, 2, -1, Similarity::identity()};
    auto [conic, r] = besant_ellipse(trap);
    CHECK(r == Approx(0.5).margin(1e-12));
    CHECK(foci_residual(conic, {1.5, 0.5}, {0.5, 0.5}) < 1e-9);
}

TEST_CASE("besant ellipse foci are EP and IP across the generated corpus") {
    testgen::Rng rng(2718);
    for (int k = 0; k < 500; ++k) {
        CanonicalQuad cq = testgen::random_besant_quad(rng);
        auto [conic, r] = besant_ellipse(cq);
        CHECK(foci_residual(conic, circumcenter(cq), diagonal_intersection(cq)) <
              1e-8 * cq.diameter());
        Point center = conic_center(conic);
        Point half = 0.5 * (circumcenter(cq) + diagonal_intersection(cq));
        CHECK(distance(center, half) < 1e-9 * cq.diameter());
        CHECK(distance(center, midpoint_circumcenter(cq)) < 1e-9 * cq.diameter());
    }
}

TEST_CASE("besant ellipse rejects invalid input") {
    CHECK_THROWS_AS(besant_ellipse(CanonicalQuad{1, 2, 1, 1, Similarity::identity()}),
                    NotBesant);  // parallelogram
    CHECK_THROWS_AS(besant_ellipse(CanonicalQuad{2, 4, 34.0 / 5, -2, Similarity::identity()}),
                    NotBesant);  // not cyclic
    testgen::Rng rng(4);
    CanonicalQuad cyc_not_orth = canonicalize(testgen::random_cyclic_non_orthodiagonal(rng));
    CHECK_THROWS_AS(besant_ellipse(cyc_not_orth), NotBesant);
}

TEST_CASE("classify_besant on the reference example") {
    BesantResult res = classify_besant(example_quad());
    REQUIRE(res.is_besant);
    CHECK(res.reason == BesantReason::Ok);
    CHECK(*res.r_canonical == Approx(17.0 / 22.0).margin(1e-12));
    CHECK(distance(*res.ep, {4.0, 0.5}) < 1e-9);
    CHECK(distance(res.ip, {0.4, 0.8}) < 1e-9);
    CHECK(distance(*res.center, {2.2, 0.65}) < 1e-9);
    CHECK(foci_residual(*res.ellipse, *res.ep, res.ip) < 1e-9);
}

TEST_CASE("classify_besant classifies failures") {
    ConvexQuad square({Point{0, 0}, Point{0, 1}, Point{1, 1}, Point{1, 0}});
    CHECK(classify_besant(square).reason == BesantReason::Parallelogram);

    testgen::Rng rng(808);
    ConvexQuad cyc = testgen::random_cyclic_non_orthodiagonal(rng);
    BesantResult r2 = classify_besant(cyc);
    CHECK(r2.reason == BesantReason::NotOrthodiagonal);
    CHECK_FALSE(r2.is_besant);

    ConvexQuad noncyc = testgen::random_convex_non_trapezoid(rng);
    while (is_cyclic(canonicalize(noncyc))) noncyc = testgen::random_convex_non_trapezoid(rng);
    CHECK(classify_besant(noncyc).reason == BesantReason::NotCyclic);
}

TEST_CASE("classify_besant commutes with similarities") {
    testgen::Rng rng(161803);
    BesantResult base = classify_besant(example_quad());
    for (int k = 0; k < 200; ++k) {
        Similarity sim = testgen::random_similarity(rng);
        ConvexQuad moved = testgen::transformed(example_quad(), sim);
        BesantResult res = classify_besant(moved);
        REQUIRE(res.is_besant);
        double diam = moved.diameter();
        CHECK(distance(*res.ep, sim.apply({4.0, 0.5})) < 1e-8 * std::max(1.0, diam));
        CHECK(distance(res.ip, sim.apply({0.4, 0.8})) < 1e-8 * std::max(1.0, diam));
        CHECK(foci_residual(*res.ellipse, *res.ep, res.ip) < 1e-8 * std::max(1.0, diam));
    }
}

TEST_CASE("theorem verification at the besant parameter") {
    CanonicalQuad cq = generate_besant_quad(2.0, 4.0);
    BesantVerification v = verify_theorem_besant(cq, InellipseParam(17.0 / 22.0));
    CHECK(v.applicable);
    CHECK(v.other_focus_matches);
    CHECK(v.orthodiagonal);
    CHECK(v.midpoint_quad_cyclic);
    CHECK(v.center_matches);

    // at a generic r no focus sits at EP or IP
    BesantVerification off = verify_theorem_besant(cq, InellipseParam(0.5));
    CHECK_FALSE(off.applicable);
    CHECK(off.focus_residual > 1e-3);
}

TEST_CASE("besant parameter is unique along the family") {
    CanonicalQuad cq = generate_besant_quad(2.0, 4.0);
    Point ep = circumcenter(cq), ip = diagonal_intersection(cq);
    double diam = cq.diameter();
    int hits = 0;
    double hit_r = -1.0;
    for (int i = 1; i < 10001; ++i) {
        double r = i / 10001.0;
        double resid = foci_residual(inscribed_conic(cq, InellipseParam(r)), ep, ip);
        if (resid < 1e-3 * diam) {
            if (hits == 0 || std::abs(r - hit_r) > 2e-4) ++hits;
            hit_r = r;
        }
    }
    CHECK(hits == 1);
    CHECK(hit_r == Approx(17.0 / 22.0).margin(1e-3));
}

TEST_CASE("no besant parameter exists for cyclic non-orthodiagonal quads") {
    testgen::Rng rng(90210);
    for (int k = 0; k < 50; ++k) {
        CanonicalQuad cq = canonicalize(testgen::random_cyclic_non_orthodiagonal(rng));
        Point ep = circumcenter(cq);
        double diam = cq.diameter();
        double best = 1e300;
        for (int i = 1; i < 2001; ++i) {
            double r = i / 2001.0;
            auto [f1, f2] = foci(inscribed_conic(cq, InellipseParam(r)));
            best = std::min(best, std::min(distance(f1, ep), distance(f2, ep)));
        }
        CHECK(best > 1e-6 * diam);
    }
}

TEST_CASE("cyclic orthodiagonal trapezoids are isoceles") {
    // Q_{s,t,s,1-t} is orthodiagonal only when s = t; a near-miss input
    // signals inconsistency
    CHECK_THROWS_AS(besant_ellipse(CanonicalQuad{2, 1.8, 2, -0.8, Similarity::identity()}),
                    NotBesant);  // cyclic trapezoid, not orthodiagonal
    // besant trapezoid parameter coincides with the max-area parameter
    CanonicalQuad trap{2, 2, 2, -1, Similarity::identity()};
    auto [conic, r] = besant_ellipse(trap);
    auto [r_star, area] = max_area_param(trap);
    CHECK(r == Approx(r_star).margin(1e-9));
}

TEST_CASE("besant parameter differs from the max-area parameter in general") {
    CanonicalQuad cq = generate_besant_quad(2.0, 4.0);
    auto [conic, r_besant] = besant_ellipse(cq);
    auto [r_star, area] = max_area_param(cq);
    CHECK(std::abs(r_besant - r_star) > 0.01);
}

TEST_CASE("EP and IP are roots of the foci quadratic at the besant parameter") {
    testgen::Rng rng(733);
    for (int k = 0; k < 1000; ++k) {
        auto [s, t] = testgen::random_besant_st(rng);
        CanonicalQuad cq = generate_besant_quad(s, t);
        double r = cq.v / (cq.s + cq.v);
        FociQuadratic p = foci_quadratic(cq, InellipseParam(r));
        Complex ep = circumcenter(cq).as_complex();
        Complex ip = diagonal_intersection(cq).as_complex();
        double scale = std::max(1.0, std::norm(ep) + std::abs(p.c0));
        CHECK(std::abs(p.evaluate(ep)) < 1e-9 * scale);
        CHECK(std::abs(p.evaluate(ip)) < 1e-9 * scale);
    }
}
