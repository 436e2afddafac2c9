#ifndef OMEGACURVES_CONSTRUCTIONS_HPP
#define OMEGACURVES_CONSTRUCTIONS_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include "etale.hpp"
#include "sqrt_decomp.hpp"

namespace omegacurves {

enum class CurveKind { X1, X2, X3 };

inline std::string kind_name(CurveKind k) {
    switch (k) {
        case CurveKind::X1: return "X1";
        case CurveKind::X2: return "X2";
        case CurveKind::X3: return "X3";
    }
    return "?";
}

inline std::optional<CurveKind> kind_from_name(const std::string& s) {
    if (s == "X1") return CurveKind::X1;
    if (s == "X2") return CurveKind::X2;
    if (s == "X3") return CurveKind::X3;
    return std::nullopt;
}

struct GenusInfo {
    size_t genus;
    size_t divisor_degree;
};

/// Genus / divisor-degree bookkeeping for the three curve families
/// y^2 = ell(x), y^2 = x ell(x), y^2 = ell(x^2) with deg ell = d:
///   X1: d odd: d = 2g+1, deg D = 4g+4;  d even: d = 2g+2, deg D = 4g+6
///   X2: d odd: d = 2g+1, deg D = 8g+8;  d even: d = 2g,   deg D = 8g+4
///   X3: d = g+1, deg D = 4g+8
inline GenusInfo genus_bookkeeping(CurveKind kind, size_t d) {
    if (d < 1) throw std::invalid_argument("genus_bookkeeping: d >= 1 required");
    switch (kind) {
        case CurveKind::X1:
            if (d % 2 == 1) return {(d - 1) / 2, 4 * ((d - 1) / 2) + 4};
            return {(d - 2) / 2, 4 * ((d - 2) / 2) + 6};
        case CurveKind::X2:
            if (d % 2 == 1) return {(d - 1) / 2, 8 * ((d - 1) / 2) + 8};
            return {d / 2, 8 * (d / 2) + 4};
        case CurveKind::X3:
            return {d - 1, 4 * (d - 1) + 8};
    }
    throw std::logic_error("genus_bookkeeping: bad kind");
}

/// Defining polynomial of the curve model: ell(x), x*ell(x), or ell(x^2).
template <class R>
UniPoly<R> defining_polynomial(CurveKind kind, const UniPoly<R>& ell) {
    switch (kind) {
        case CurveKind::X1: return ell;
        case CurveKind::X2: return UniPoly<R>::monomial(1, R(1)) * ell;
        case CurveKind::X3: return ell.compose_square();
    }
    throw std::logic_error("defining_polynomial: bad kind");
}

/// Appends split factors to reach total degree n; delta is extended by 1
/// on the padded factors. Indices of existing factors are unchanged.
inline std::pair<AlgebraPtr, AlgebraElement<Rational>> pad_algebra(
    const AlgebraPtr& omega, const AlgebraElement<Rational>& delta, size_t n) {
    if (omega->degree() > n)
        throw std::invalid_argument("pad_algebra: algebra degree exceeds target");
    if (omega->degree() == n) return {omega, delta};
    std::vector<QPoly> factors = omega->factors();
    size_t extra = n - omega->degree();
    for (size_t i = 0; i < extra; ++i) factors.push_back(QPoly::x());
    auto padded = EtaleAlgebra::make(std::move(factors));
    auto d = AlgebraElement<Rational>::zero(padded);
    for (size_t i = 0; i < delta.components().size(); ++i)
        d.mutable_components()[i] = delta.components()[i];
    for (size_t i = delta.components().size(); i < padded->num_factors(); ++i)
        d.mutable_components()[i][0] = Rational(1);
    return {padded, std::move(d)};
}

/// Above this algebra degree, symbolic m/h/ell and the symbolic point
/// identity are skipped (generic charpoly coefficients grow quickly);
/// specialized instances are still verified exactly.
inline constexpr size_t kDefaultSymbolicCap = 12;

/// A generic curve family over Q[z]: the model, its marked point with
/// coordinates in Omega[z] (or its quadratic extension), and the square
/// root decomposition of the generic characteristic polynomial.
struct GenericConstruction {
    CurveKind kind;
    AlgebraPtr omega;                      // padded algebra, degree n
    AlgebraElement<Rational> delta;        // unit; all-ones for X1
    size_t d = 0, n = 0, genus = 0;

    AlgebraElement<MultiPoly> alpha;       // x-line element: charpoly(alpha) = m
    AlgebraElement<MultiPoly> gamma;       // X2/X3 only: alpha = delta * gamma^2

    // Symbolic data; absent above the cap.
    bool symbolic = false;
    UniPoly<MultiPoly> m, h, ell;

    // Marked point coordinates as elements of Omega[z][s]/(s^2 - delta).
    QuadElement<MultiPoly> point_x, point_y;

    QuadExtension extension() const { return QuadExtension(omega, delta); }
};

namespace detail {

inline AlgebraElement<MultiPoly> scale_ring(AlgebraElement<MultiPoly> a, const MultiPoly& s) {
    for (auto& comp : a.mutable_components())
        for (auto& c : comp) c = c * s;
    return a;
}

/// Evaluates a polynomial with MultiPoly coefficients at a quadratic-
/// extension element, Horner style.
inline QuadElement<MultiPoly> eval_poly_quad(const UniPoly<MultiPoly>& p,
                                             const QuadElement<MultiPoly>& x,
                                             const QuadExtension& ext) {
    auto zero = AlgebraElement<MultiPoly>::zero(x.even.parent());
    QuadElement<MultiPoly> acc{zero, zero};
    for (long i = p.degree(); i >= 0; --i) {
        acc = quad_mul(acc, x, ext);
        auto c = scale_ring(AlgebraElement<MultiPoly>::one(x.even.parent()),
                            p[static_cast<size_t>(i)]);
        acc.even = acc.even + c;
    }
    return acc;
}

}  // namespace detail

/// Checks y^2 = P(x) exactly in Omega[z][s]/(s^2 - delta).
inline bool point_on_curve(const GenericConstruction& gc) {
    if (!gc.symbolic) throw std::logic_error("point_on_curve: no symbolic data");
    auto ext = gc.extension();
    auto lhs = quad_mul(gc.point_y, gc.point_y, ext);
    auto rhs = detail::eval_poly_quad(defining_polynomial(gc.kind, gc.ell), gc.point_x, ext);
    return lhs == rhs;
}

/// The twisted Mestre–Shioda family X1: y^2 = ell(x) with the marked
/// Omega-point (alpha, h(alpha)). Omega is padded to degree n = 4g+6.
inline GenericConstruction construct_C1(const AlgebraPtr& omega, size_t g,
                                        size_t symbolic_cap = kDefaultSymbolicCap) {
    if (g < 1) throw std::invalid_argument("construct_C1: genus >= 1 required");
    size_t n = 4 * g + 6;
    if (omega->degree() > n)
        throw std::invalid_argument("construct_C1: deg(Omega) exceeds 4g+6");
    auto ones = AlgebraElement<Rational>::one(omega);
    auto [padded, delta] = pad_algebra(omega, ones, n);

    GenericConstruction gc;
    gc.kind = CurveKind::X1;
    gc.omega = padded;
    gc.delta = delta;
    gc.n = n;
    gc.d = 2 * g + 2;
    gc.genus = g;
    gc.alpha = generic_element(padded);
    gc.gamma = gc.alpha;  // unused for X1
    if (n <= symbolic_cap) {
        gc.symbolic = true;
        gc.m = charpoly(gc.alpha);
        auto dec = decompose(gc.m);
        gc.h = dec.h;
        gc.ell = dec.ell;
        gc.point_x = QuadElement<MultiPoly>::from_even(gc.alpha);
        gc.point_y = QuadElement<MultiPoly>::from_even(eval_poly_r(gc.h, gc.alpha));
    }
    return gc;
}

/// The quadratic-extension refinements. X2: y^2 = x ell(x) with the
/// point (alpha, beta h(alpha)); X3: y^2 = ell(x^2) with (beta, h(alpha)),
/// where gamma is generic, alpha = delta gamma^2 and beta = s gamma in
/// Omega[s]/(s^2 - delta). Omega is padded to degree n = 2d+2 with
/// d = 2g+1 (X2) or d = g+1 (X3).
inline GenericConstruction construct_C2C3(const AlgebraPtr& omega,
                                          const AlgebraElement<Rational>& delta_in,
                                          size_t g, CurveKind kind,
                                          size_t symbolic_cap = kDefaultSymbolicCap) {
    if (kind != CurveKind::X2 && kind != CurveKind::X3)
        throw std::invalid_argument("construct_C2C3: kind must be X2 or X3");
    if (g < 1) throw std::invalid_argument("construct_C2C3: genus >= 1 required");
    if (!omega->same_as(*delta_in.parent()))
        throw std::invalid_argument("construct_C2C3: delta not in Omega");
    if (!is_unit(delta_in))
        throw std::invalid_argument("construct_C2C3: delta is not a unit");
    size_t d = kind == CurveKind::X2 ? 2 * g + 1 : g + 1;
    size_t n = 2 * d + 2;
    if (omega->degree() > n)
        throw std::invalid_argument("construct_C2C3: deg(Omega) exceeds " + std::to_string(n));
    auto [padded, delta] = pad_algebra(omega, delta_in, n);

    GenericConstruction gc;
    gc.kind = kind;
    gc.omega = padded;
    gc.delta = delta;
    gc.n = n;
    gc.d = d;
    gc.genus = g;
    QuadExtension ext(padded, delta);
    auto qg = quad_generic(ext);
    gc.gamma = qg.gamma;
    gc.alpha = qg.alpha;
    if (n <= symbolic_cap) {
        gc.symbolic = true;
        gc.m = charpoly(gc.alpha);
        auto dec = decompose(gc.m);
        gc.h = dec.h;
        gc.ell = dec.ell;
        auto h_alpha = eval_poly_r(gc.h, gc.alpha);
        if (kind == CurveKind::X2) {
            gc.point_x = QuadElement<MultiPoly>::from_even(gc.alpha);
            gc.point_y = QuadElement<MultiPoly>::from_odd(gc.gamma * h_alpha);
        } else {
            gc.point_x = QuadElement<MultiPoly>::from_odd(gc.gamma);
            gc.point_y = QuadElement<MultiPoly>::from_even(h_alpha);
        }
    }
    return gc;
}

/// The morphisms of the X3 -> X1, X3 -> X2 diagram on points:
/// phi1(x, y) = (x^2, y), phi2(x, y) = (x^2, xy).
template <class R>
std::pair<QuadElement<R>, QuadElement<R>> phi1(const QuadElement<R>& x,
                                               const QuadElement<R>& y,
                                               const QuadExtension& ext) {
    return {quad_mul(x, x, ext), y};
}

template <class R>
std::pair<QuadElement<R>, QuadElement<R>> phi2(const QuadElement<R>& x,
                                               const QuadElement<R>& y,
                                               const QuadExtension& ext) {
    return {quad_mul(x, x, ext), quad_mul(x, y, ext)};
}

/// The involution tau on X3: (x, y) -> (-x, y).
template <class R>
std::pair<QuadElement<R>, QuadElement<R>> tau(const QuadElement<R>& x,
                                              const QuadElement<R>& y) {
    auto zero = AlgebraElement<R>::zero(x.even.parent());
    QuadElement<R> nx{zero - x.even, zero - x.odd};
    return {nx, y};
}

}  // namespace omegacurves

#endif
