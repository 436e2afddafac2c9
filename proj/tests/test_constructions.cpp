#include <catch2/catch_amalgamated.hpp>

#include <omegacurves/constructions.hpp>

#include "test_helpers.hpp"

using namespace omegacurves;
using octest::qpoly;

TEST_CASE("genus and divisor-degree bookkeeping") {
    // X1: y^2 = ell(x)
    CHECK(genus_bookkeeping(CurveKind::X1, 3).genus == 1);
    CHECK(genus_bookkeeping(CurveKind::X1, 3).divisor_degree == 8);
    CHECK(genus_bookkeeping(CurveKind::X1, 5).genus == 2);
    CHECK(genus_bookkeeping(CurveKind::X1, 5).divisor_degree == 12);
    CHECK(genus_bookkeeping(CurveKind::X1, 4).genus == 1);
    CHECK(genus_bookkeeping(CurveKind::X1, 4).divisor_degree == 10);
    CHECK(genus_bookkeeping(CurveKind::X1, 6).genus == 2);
    CHECK(genus_bookkeeping(CurveKind::X1, 6).divisor_degree == 14);

    // X2: y^2 = x ell(x)
    CHECK(genus_bookkeeping(CurveKind::X2, 3).genus == 1);
    CHECK(genus_bookkeeping(CurveKind::X2, 3).divisor_degree == 16);
    CHECK(genus_bookkeeping(CurveKind::X2, 5).genus == 2);
    CHECK(genus_bookkeeping(CurveKind::X2, 5).divisor_degree == 24);
    CHECK(genus_bookkeeping(CurveKind::X2, 2).genus == 1);
    CHECK(genus_bookkeeping(CurveKind::X2, 2).divisor_degree == 12);
    CHECK(genus_bookkeeping(CurveKind::X2, 4).genus == 2);
    CHECK(genus_bookkeeping(CurveKind::X2, 4).divisor_degree == 20);

    // X3: y^2 = ell(x^2)
    CHECK(genus_bookkeeping(CurveKind::X3, 2).genus == 1);
    CHECK(genus_bookkeeping(CurveKind::X3, 2).divisor_degree == 12);
    CHECK(genus_bookkeeping(CurveKind::X3, 3).genus == 2);
    CHECK(genus_bookkeeping(CurveKind::X3, 3).divisor_degree == 16);
    CHECK(genus_bookkeeping(CurveKind::X3, 4).genus == 3);
    CHECK(genus_bookkeeping(CurveKind::X3, 4).divisor_degree == 20);
}

TEST_CASE("defining polynomials of the three models") {
    QPoly ell = qpoly({-1, 0, 2, 1});  // x^3 + 2x^2 - 1
    CHECK(defining_polynomial(CurveKind::X1, ell) == ell);
    CHECK(defining_polynomial(CurveKind::X2, ell) == qpoly({0, -1, 0, 2, 1}));
    CHECK(defining_polynomial(CurveKind::X3, ell) == qpoly({-1, 0, 0, 0, 2, 0, 1}));
}

TEST_CASE("algebra padding appends split factors and extends delta by 1") {
    auto omega = EtaleAlgebra::make({qpoly({-2, 0, 1}), qpoly({-7, 1})});  // x^2-2, x-7
    auto delta = AlgebraElement<Rational>::generator(omega);  // (x, 7): a unit
    auto [padded, d] = pad_algebra(omega, delta, 6);
    REQUIRE(padded->num_factors() == 5);
    CHECK(padded->degree() == 6);
    CHECK(padded->factors()[0] == qpoly({-2, 0, 1}));
    CHECK(padded->factors()[1] == qpoly({-7, 1}));
    for (size_t i = 2; i < 5; ++i) CHECK(padded->factors()[i] == QPoly::x());
    CHECK(d.components()[0] == std::vector<Rational>{Rational(0), Rational(1)});
    CHECK(d.components()[1] == std::vector<Rational>{Rational(7)});
    for (size_t i = 2; i < 5; ++i)
        CHECK(d.components()[i] == std::vector<Rational>{Rational(1)});
}

TEST_CASE("X1 construction: split algebra, genus 1") {
    static const GenericConstruction gc = construct_C1(EtaleAlgebra::split(10), 1);
    CHECK(gc.kind == CurveKind::X1);
    CHECK(gc.n == 10);
    CHECK(gc.d == 4);
    CHECK(gc.genus == 1);
    REQUIRE(gc.symbolic);
    CHECK(gc.m.degree() == 10);
    CHECK(gc.h.degree() == 5);
    CHECK(gc.ell.degree() <= 4);

    // split generic charpoly is the product of linears:
    // m = prod (x - z_i), checked at a rational substitution
    std::vector<Rational> t;
    for (long i = 1; i <= 10; ++i) t.push_back(Rational(i));
    QPoly expect = QPoly::constant(Rational(1));
    for (long i = 1; i <= 10; ++i)
        expect = expect * qpoly({-i, 1});
    CHECK(substitute_poly(gc.m, t) == expect);

    // square-root decomposition recomposes
    CHECK(gc.h * gc.h - gc.ell == gc.m);

    // the marked point satisfies y^2 = ell(x) identically
    CHECK(point_on_curve(gc));
}

TEST_CASE("X1 construction: non-split algebra with padding") {
    auto omega = EtaleAlgebra::make(
        {qpoly({-2, 0, 1}), qpoly({1, 1, 1}), qpoly({-3, 1})});  // degree 5
    auto gc = construct_C1(omega, 1);
    CHECK(gc.n == 10);
    CHECK(gc.omega->num_factors() == 8);  // 3 user factors + 5 split pads
    REQUIRE(gc.symbolic);
    CHECK(point_on_curve(gc));
    CHECK(gc.h * gc.h - gc.ell == gc.m);
}

TEST_CASE("X2 construction: point identity (beta h(alpha))^2 = alpha ell(alpha)") {
    auto omega = EtaleAlgebra::make({qpoly({-2, 0, 1}), qpoly({-3, 1})});  // degree 3
    auto delta = AlgebraElement<Rational>::generator(omega);  // (x, 3)
    auto gc = construct_C2C3(omega, delta, 1, CurveKind::X2);
    CHECK(gc.d == 3);
    CHECK(gc.n == 8);
    CHECK(gc.genus == 1);
    REQUIRE(gc.symbolic);
    CHECK(gc.m.degree() == 8);
    CHECK(gc.h * gc.h - gc.ell == gc.m);
    CHECK(point_on_curve(gc));  // y^2 = x ell(x)
}

TEST_CASE("X3 construction: point identity ell(beta^2) = h(alpha)^2") {
    auto omega = EtaleAlgebra::make({qpoly({-2, 0, 1}), qpoly({5, 1})});  // degree 3
    auto delta = AlgebraElement<Rational>::one(omega).scale_rational(Rational(-1));
    auto gc = construct_C2C3(omega, delta, 2, CurveKind::X3);
    CHECK(gc.d == 3);
    CHECK(gc.n == 8);
    CHECK(gc.genus == 2);
    REQUIRE(gc.symbolic);
    CHECK(point_on_curve(gc));  // y^2 = ell(x^2)
}

TEST_CASE("quadratic base change: charpoly of beta is m(x^2)") {
    auto omega = EtaleAlgebra::split(6);
    auto one = AlgebraElement<Rational>::one(omega);
    auto delta = one;
    delta.mutable_components()[0][0] = Rational(2);
    delta.mutable_components()[1][0] = Rational(-1);
    delta.mutable_components()[2][0] = Rational(3);
    auto gc = construct_C2C3(omega, delta, 1, CurveKind::X3);
    REQUIRE(gc.symbolic);
    auto ext = gc.extension();
    auto beta = QuadElement<MultiPoly>::from_odd(gc.gamma);
    auto cp = quad_charpoly(beta, ext);
    CHECK(cp == gc.m.compose_square());
}

TEST_CASE("diagram morphisms: phi1(R) = P and phi2(R) = Q, tau flips the sign") {
    auto omega = EtaleAlgebra::make({qpoly({-2, 0, 1})});
    auto delta = AlgebraElement<Rational>::generator(omega);
    auto gc = construct_C2C3(omega, delta, 1, CurveKind::X3);
    REQUIRE(gc.symbolic);
    auto ext = gc.extension();

    auto [p1x, p1y] = phi1(gc.point_x, gc.point_y, ext);
    // phi1(beta, h(alpha)) = (alpha, h(alpha)): a point of y^2 = ell(x)
    CHECK(p1x == QuadElement<MultiPoly>::from_even(gc.alpha));
    CHECK(p1y == gc.point_y);
    auto lhs1 = quad_mul(p1y, p1y, ext);
    auto rhs1 = detail::eval_poly_quad(gc.ell, p1x, ext);
    CHECK(lhs1 == rhs1);

    auto [p2x, p2y] = phi2(gc.point_x, gc.point_y, ext);
    // phi2(beta, h(alpha)) = (alpha, beta h(alpha)): a point of y^2 = x ell(x)
    CHECK(p2x == QuadElement<MultiPoly>::from_even(gc.alpha));
    auto h_alpha = eval_poly_r(gc.h, gc.alpha);
    CHECK(p2y == QuadElement<MultiPoly>::from_odd(gc.gamma * h_alpha));
    auto lhs2 = quad_mul(p2y, p2y, ext);
    auto rhs2 = detail::eval_poly_quad(defining_polynomial(CurveKind::X2, gc.ell), p2x, ext);
    CHECK(lhs2 == rhs2);

    // tau composed with phi1 fixes the image; with phi2 it negates y
    auto [tx, ty] = tau(gc.point_x, gc.point_y);
    auto [q1x, q1y] = phi1(tx, ty, ext);
    CHECK(q1x == p1x);
    CHECK(q1y == p1y);
    auto [q2x, q2y] = phi2(tx, ty, ext);
    CHECK(q2x == p2x);
    auto zero = AlgebraElement<MultiPoly>::zero(gc.omega);
    CHECK(q2y.even == zero - p2y.even);
    CHECK(q2y.odd == zero - p2y.odd);
}

TEST_CASE("symbolic cap: large algebras skip symbolic data") {
    auto omega = EtaleAlgebra::split(14);
    auto gc = construct_C1(omega, 2);  // n = 14 > 12
    CHECK(gc.n == 14);
    CHECK_FALSE(gc.symbolic);
    CHECK(gc.m.is_zero());
}
