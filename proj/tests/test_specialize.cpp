#include <catch2/catch_amalgamated.hpp>

#include <omegacurves/specialize.hpp>

#include "test_helpers.hpp"

using namespace omegacurves;
using octest::qpoly;

namespace {

std::vector<Rational> ratvec(std::initializer_list<long> v) {
    std::vector<Rational> r;
    for (long x : v) r.push_back(Rational(x));
    return r;
}

bool rational_point_on(const QPoly& p, const MarkedPoint& pt) {
    return pt.y * pt.y == p(pt.x);
}

const GenericConstruction& split_x1_symbolic() {
    static const GenericConstruction gc = construct_C1(EtaleAlgebra::split(10), 1);
    return gc;
}

const GenericConstruction& split_x1_plain() {
    static const GenericConstruction gc = construct_C1(EtaleAlgebra::split(10), 1, 0);
    return gc;
}

}  // namespace

TEST_CASE("specializing the split X1 family recovers a product of linears") {
    const auto& gc = split_x1_symbolic();
    auto t = ratvec({1, 2, 3, 4, 5, 6, 7, 8, 9, 11});
    auto res = specialize_at(gc, t);
    REQUIRE(res.ok());
    const auto& sc = *res.curve;

    QPoly expect = QPoly::constant(Rational(1));
    for (const auto& u : t) expect = expect * QPoly{{-u, Rational(1)}};
    CHECK(sc.m == expect);

    // Specialization commutes with the symbolic decomposition.
    CHECK(sc.m == substitute_poly(gc.m, t));
    CHECK(sc.h == substitute_poly(gc.h, t));
    CHECK(sc.ell == substitute_poly(gc.ell, t));
    CHECK(sc.h * sc.h - sc.ell == sc.m);
    CHECK(sc.ell.degree() == 4);
    CHECK(sc.all_admissible());

    // One rational marked point per linear factor: (u_i, h_t(u_i)).
    auto pts = sc.marked_points();
    REQUIRE(pts.size() == 10);
    for (size_t i = 0; i < 10; ++i) {
        CHECK(pts[i].x == t[i]);
        CHECK(pts[i].y == sc.h(t[i]));
        CHECK(rational_point_on(sc.curve_poly, pts[i]));
    }
}

TEST_CASE("inadmissible parameters are rejected with the failing condition") {
    const auto& gc = split_x1_plain();

    SECTION("a repeated coordinate breaks separability of m") {
        auto res = specialize_at(gc, ratvec({1, 1, 3, 4, 5, 6, 7, 8, 9, 10}));
        CHECK_FALSE(res.ok());
        CHECK(res.rejected_check == "m_separable(disc m_t != 0)");
    }

    SECTION("X2 rejects tuples where m vanishes at 0") {
        auto omega = EtaleAlgebra::split(8);
        auto gcq = construct_C2C3(omega, AlgebraElement<Rational>::one(omega), 1,
                                  CurveKind::X2, 0);
        // alpha_i = z_i^2, so a zero coordinate puts a root of m at 0
        auto res = specialize_at(gcq, ratvec({0, 2, 3, 4, 5, 6, 7, 8}));
        CHECK_FALSE(res.ok());
        CHECK(res.rejected_check == "m_nonzero_at_0");
    }
}

TEST_CASE("X2 specialization: rational points (alpha_i, gamma_i h(alpha_i))") {
    auto omega = EtaleAlgebra::split(8);
    auto gc = construct_C2C3(omega, AlgebraElement<Rational>::one(omega), 1,
                             CurveKind::X2);
    REQUIRE(gc.d == 3);
    auto t = ratvec({1, 2, 3, 4, 5, 6, 7, 9});
    auto res = specialize_at(gc, t);
    REQUIRE(res.ok());
    const auto& sc = *res.curve;
    CHECK(sc.curve_poly == QPoly::x() * sc.ell);
    auto pts = sc.marked_points();
    REQUIRE(pts.size() == 8);
    for (size_t i = 0; i < 8; ++i) {
        CHECK(pts[i].x == t[i] * t[i]);  // alpha_i = z_i^2 (delta = 1)
        CHECK(pts[i].y == t[i] * sc.h(t[i] * t[i]));
        CHECK(rational_point_on(sc.curve_poly, pts[i]));
    }
}

TEST_CASE("X3 specialization: rational points (gamma_i, h(alpha_i))") {
    auto omega = EtaleAlgebra::split(6);
    auto gc = construct_C2C3(omega, AlgebraElement<Rational>::one(omega), 1,
                             CurveKind::X3);
    REQUIRE(gc.d == 2);
    auto t = ratvec({1, 2, 3, 4, 5, 7});
    auto res = specialize_at(gc, t);
    REQUIRE(res.ok());
    const auto& sc = *res.curve;
    CHECK(sc.curve_poly == sc.ell.compose_square());
    auto pts = sc.marked_points();
    REQUIRE(pts.size() == 6);
    for (size_t i = 0; i < 6; ++i) {
        CHECK(pts[i].x == t[i]);
        CHECK(pts[i].y == sc.h(t[i] * t[i]));
        CHECK(rational_point_on(sc.curve_poly, pts[i]));
    }
}

TEST_CASE("specialization beyond the symbolic cap still verifies points") {
    auto gc = construct_C1(EtaleAlgebra::split(14), 2);
    REQUIRE_FALSE(gc.symbolic);
    auto t = ratvec({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 15});
    auto res = specialize_at(gc, t);
    REQUIRE(res.ok());
    CHECK(res.curve->ell.degree() == 6);
    CHECK(res.curve->marked_points().size() == 14);
}

TEST_CASE("seeded sampling is deterministic and yields distinct models") {
    const auto& gc = split_x1_plain();
    SampleOptions opt;
    opt.count = 5;
    opt.seed = 42;
    auto a = sample_specializations(gc, opt);
    auto b = sample_specializations(gc, opt);
    REQUIRE(a.size() == 5);
    for (size_t i = 0; i < 5; ++i) {
        CHECK(a[i].parameters == b[i].parameters);
        for (size_t j = i + 1; j < 5; ++j)
            CHECK_FALSE(a[i].ell == a[j].ell);
    }
}

TEST_CASE("j-invariant: Weierstrass transformation agrees with quartic invariants") {
    const auto& gc = split_x1_plain();
    SampleOptions opt;
    opt.count = 5;
    opt.seed = 7;
    auto curves = sample_specializations(gc, opt);
    std::vector<Rational> js;
    for (const auto& sc : curves) {
        REQUIRE(sc.genus == 1);
        auto j1 = j_invariant(sc);
        auto j2 = quartic_j_invariant(sc.curve_poly);
        CHECK(j1 == j2);
        js.push_back(j1);
    }
    // Different models generally have different j; at least two here.
    bool all_equal = true;
    for (const auto& j : js)
        if (!(j == js[0])) all_equal = false;
    CHECK_FALSE(all_equal);
}
