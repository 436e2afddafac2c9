#ifndef OMEGACURVES_WEIERSTRASS_HPP
#define OMEGACURVES_WEIERSTRASS_HPP

#include <array>
#include <stdexcept>

#include "rational.hpp"
#include "unipoly.hpp"

namespace omegacurves {

/// Long Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
struct WeierstrassModel {
    Rational a1, a2, a3, a4, a6;

    Rational b2() const { return a1 * a1 + Rational(4) * a2; }
    Rational b4() const { return Rational(2) * a4 + a1 * a3; }
    Rational b6() const { return a3 * a3 + Rational(4) * a6; }
    Rational c4() const { return b2() * b2() - Rational(24) * b4(); }
    Rational c6() const {
        return -(b2() * b2() * b2()) + Rational(36) * b2() * b4() - Rational(216) * b6();
    }
    Rational disc() const {
        Rational c4v = c4(), c6v = c6();
        return (c4v * c4v * c4v - c6v * c6v) / Rational(1728);
    }
    Rational j() const {
        Rational d = disc();
        if (d.is_zero()) throw std::domain_error("WeierstrassModel: singular model");
        Rational c = c4();
        return c * c * c / d;
    }

    bool contains(const Rational& x, const Rational& y) const {
        return y * y + a1 * x * y + a3 * y == x * x * x + a2 * x * x + a4 * x + a6;
    }
};

/// Weierstrass model of the Jacobian of v^2 = cubic(u), by clearing the
/// leading coefficient: x = lc*u, y = lc*v gives y^2 = x^3 + ...
inline WeierstrassModel cubic_to_weierstrass(const QPoly& q) {
    if (q.degree() != 3) throw std::invalid_argument("cubic_to_weierstrass: not a cubic");
    Rational a3 = q[3], a2 = q[2], a1 = q[1], a0 = q[0];
    return {Rational(0), a2, Rational(0), a1 * a3, a0 * a3 * a3};
}

/// Weierstrass model birational to v^2 = q(u) (deg q = 4) given a rational
/// point (u0, v0) on it. Uses the classical quartic-with-point reduction:
/// translate the point to u = 0 and, for v0 != 0, apply
///   a1 = d/v0, a2 = c - d^2/(4 v0^2), a3 = 2 v0 b, a4 = -4 v0^2 a, a6 = a2 a4
/// for q(u+u0) = a u^4 + b u^3 + c u^2 + d u + v0^2. If v0 = 0 the marked
/// point is a root of q and inverting u drops the degree to a cubic.
inline WeierstrassModel quartic_to_weierstrass(const QPoly& q, const Rational& u0,
                                               const Rational& v0) {
    if (q.degree() > 4 || q.degree() < 3)
        throw std::invalid_argument("quartic_to_weierstrass: degree must be 3 or 4");
    if (!(v0 * v0 == q(u0)))
        throw std::invalid_argument("quartic_to_weierstrass: point not on curve");
    // shift u -> u + u0
    QPoly shifted = q;
    {
        std::vector<Rational> c(static_cast<size_t>(q.degree()) + 1, Rational(0));
        // Taylor expansion at u0 via repeated synthetic division
        QPoly rem = q;
        for (size_t i = 0; i < c.size(); ++i) {
            auto [quo, r] = QPoly::divmod(rem, QPoly({-u0, Rational(1)}));
            c[i] = r.is_zero() ? Rational(0) : r[0];
            rem = quo;
        }
        shifted = QPoly(std::move(c));
    }
    if (v0.is_zero()) {
        // q(u+u0) = a u^4 + b u^3 + c u^2 + d u; u -> 1/u, v -> v/u^2
        // gives v^2 = d u^3 + c u^2 + b u + a.
        Rational a = shifted[4], b = shifted[3], c = shifted[2], d = shifted[1];
        if (d.is_zero())
            throw std::domain_error("quartic_to_weierstrass: singular at marked root");
        return cubic_to_weierstrass(QPoly({a, b, c, d}));
    }
    Rational a = shifted[4], b = shifted[3], c = shifted[2], d = shifted[1];
    Rational a1 = d / v0;
    Rational a2 = c - d * d / (Rational(4) * v0 * v0);
    Rational a3 = Rational(2) * v0 * b;
    Rational a4 = Rational(-4) * v0 * v0 * a;
    Rational a6 = a2 * a4;
    return {a1, a2, a3, a4, a6};
}

/// Maps a point (u, v) on v^2 = q(u) (the same q and marked point passed to
/// quartic_to_weierstrass, v0 != 0) to the Weierstrass model:
///   x = (2 v0 (v + v0) + d t) / t^2,
///   y = (4 v0^2 (v + v0) + 2 v0 (c t^2 + d t) - d^2 t^2 / (2 v0)) / t^3,
/// with t = u - u0. The marked point itself maps to the point at infinity.
struct QuarticPointMap {
    QPoly shifted;  // q(u + u0)
    Rational u0, v0;

    static QuarticPointMap make(const QPoly& q, const Rational& u0, const Rational& v0) {
        QuarticPointMap m;
        m.u0 = u0;
        m.v0 = v0;
        std::vector<Rational> c(static_cast<size_t>(q.degree()) + 1, Rational(0));
        QPoly rem = q;
        for (size_t i = 0; i < c.size(); ++i) {
            auto [quo, r] = QPoly::divmod(rem, QPoly({-u0, Rational(1)}));
            c[i] = r.is_zero() ? Rational(0) : r[0];
            rem = quo;
        }
        m.shifted = QPoly(std::move(c));
        return m;
    }

    /// Returns false for the marked point (maps to infinity).
    bool map(const Rational& u, const Rational& v, Rational& x_out, Rational& y_out) const {
        Rational t = u - u0;
        if (t.is_zero() && v == v0) return false;
        if (t.is_zero())
            throw std::domain_error("QuarticPointMap: opposite point over marked x needs blowup");
        Rational c = shifted[2], d = shifted[1];
        Rational t2 = t * t, t3 = t2 * t;
        x_out = (Rational(2) * v0 * (v + v0) + d * t) / t2;
        y_out = (Rational(4) * v0 * v0 * (v + v0) + Rational(2) * v0 * (c * t2 + d * t) -
                 d * d * t2 / (Rational(2) * v0)) /
                t3;
        return true;
    }
};

/// Classical invariants of the binary quartic a x^4 + b x^3 + c x^2 + d x + e:
///   I = 12ae - 3bd + c^2,
///   J = 72ace + 9bcd - 27ad^2 - 27b^2 e - 2c^3,
/// j = 6912 I^3 / (4 I^3 - J^2). Independent of any rational point.
inline Rational quartic_j_invariant(const QPoly& q) {
    if (q.degree() > 4 || q.degree() < 3)
        throw std::invalid_argument("quartic_j_invariant: degree must be 3 or 4");
    Rational a = q[4], b = q[3], c = q[2], d = q[1], e = q[0];
    Rational I = Rational(12) * a * e - Rational(3) * b * d + c * c;
    Rational J = Rational(72) * a * c * e + Rational(9) * b * c * d -
                 Rational(27) * a * d * d - Rational(27) * b * b * e -
                 Rational(2) * c * c * c;
    Rational den = Rational(4) * I * I * I - J * J;
    if (den.is_zero()) throw std::domain_error("quartic_j_invariant: singular quartic");
    return Rational(6912) * I * I * I / den;
}

}  // namespace omegacurves

#endif
