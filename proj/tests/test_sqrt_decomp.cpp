#include <catch2/catch_amalgamated.hpp>

#include <omegacurves/sqrt_decomp.hpp>

#include "test_helpers.hpp"

using namespace omegacurves;
using octest::qpoly;
using octest::random_poly;

TEST_CASE("decompose quadratic, symbolic coefficients") {
    // m = x^2 + m1 x + m0 -> h = x + m1/2, ell = m1^2/4 - m0
    auto dec = decompose_generic(2);
    auto m0 = MultiPoly::variable(0), m1 = MultiPoly::variable(1);
    CHECK(dec.h == UniPoly<MultiPoly>({m1.div_int(2), MultiPoly(1)}));
    CHECK(dec.ell == UniPoly<MultiPoly>({(m1 * m1).div_int(4) - m0}));
}

TEST_CASE("decompose examples") {
    // (x+1)^2: perfect square
    auto dec = decompose(qpoly({1, 2, 1}));
    CHECK(dec.h == qpoly({1, 1}));
    CHECK(dec.ell.is_zero());
    CHECK(dec.ell_zero);
    CHECK_FALSE(dec.ell_exact_degree);

    // x^4 + 1 -> h = x^2, ell = -1
    auto dec2 = decompose(qpoly({1, 0, 0, 0, 1}));
    CHECK(dec2.h == qpoly({0, 0, 1}));
    CHECK(dec2.ell == qpoly({-1}));
    CHECK_FALSE(dec2.ell_exact_degree);  // deg ell = 0 < d = 1

    CHECK_THROWS(decompose(qpoly({1, 1, 1, 1})));      // odd degree
    CHECK_THROWS(decompose(qpoly({1, 0, 2})));          // non-monic
}

TEST_CASE("recompose examples") {
    SqrtDecomposition<Rational> d1{qpoly({0, 0, 1}), qpoly({0, 1}), QPoly(), 0};
    CHECK(recompose(d1) == qpoly({0, 0, 1}));
    SqrtDecomposition<Rational> d2{QPoly(), qpoly({1, 1}), qpoly({1}), 0};
    CHECK(recompose(d2) == qpoly({0, 2, 1}));
    SqrtDecomposition<Rational> d3{QPoly(), qpoly({3, 0, 1}), qpoly({0, 2}), 1};
    CHECK(recompose(d3) == qpoly({9, -2, 6, 0, 1}));
}

TEST_CASE("decompose_generic n=4 and roundtrips") {
    auto dec = decompose_generic(4);
    auto m2 = MultiPoly::variable(2), m3 = MultiPoly::variable(3);
    CHECK(dec.h[1] == m3.div_int(2));
    CHECK(dec.h[0] == m2.div_int(2) - (m3 * m3).div_int(8));
    CHECK(recompose(dec) == dec.m);

    auto dec6 = decompose_generic(6);
    CHECK(recompose(dec6) == dec6.m);
}

TEST_CASE("roundtrip on random monic polynomials") {
    std::mt19937_64 rng(43);
    for (int it = 0; it < 200; ++it) {
        long d = 2 * (1 + static_cast<long>(rng() % 6));  // degree 2..12
        auto m = random_poly(rng, d, 20, true);
        auto dec = decompose(m);
        CHECK(recompose(dec) == m);
        CHECK(dec.h.is_monic());
        CHECK(dec.h.degree() == d / 2);
        CHECK(dec.ell.degree() <= d / 2 - 1);
    }
}

TEST_CASE("uniqueness: any valid (h', ell') equals the output") {
    // The triangular system has unit pivots (+-2); perturbing any h
    // coefficient breaks the degree bound on h'^2 - m.
    std::mt19937_64 rng(47);
    for (int it = 0; it < 50; ++it) {
        auto m = random_poly(rng, 8, 10, true);
        auto dec = decompose(m);
        size_t idx = rng() % 5;
        std::vector<Rational> hc(dec.h.coeffs());
        hc[idx] += Rational(1);
        QPoly hp{std::move(hc)};
        QPoly ellp = hp * hp - m;
        CHECK(ellp.degree() > static_cast<long>(dec.d));
    }
}
