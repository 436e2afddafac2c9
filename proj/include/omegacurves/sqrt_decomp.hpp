#ifndef OMEGACURVES_SQRT_DECOMP_HPP
#define OMEGACURVES_SQRT_DECOMP_HPP

#include <stdexcept>

#include "multipoly.hpp"
#include "unipoly.hpp"

namespace omegacurves {

/// The square-root approximation m = h^2 - ell of a monic polynomial of
/// even degree n = 2d+2: h monic of degree d+1, deg ell <= d. Unique in
/// characteristic != 2; the triangular back-substitution below computes it.
template <class R>
struct SqrtDecomposition {
    UniPoly<R> m;
    UniPoly<R> h;
    UniPoly<R> ell;
    size_t d = 0;

    // Degenerate specializations (generically excluded) are flagged,
    // not rejected; admissibility is the caller's concern.
    bool ell_exact_degree = true;  // deg ell == d
    bool ell_zero = false;         // m is a perfect square
};

template <class R>
UniPoly<R> recompose(const SqrtDecomposition<R>& dec) {
    return dec.h * dec.h - dec.ell;
}

template <class R>
SqrtDecomposition<R> decompose(const UniPoly<R>& m) {
    long n = m.degree();
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("decompose: degree must be even and >= 2");
    if (!(m.leading() == R(1)))
        throw std::invalid_argument("decompose: polynomial must be monic");
    size_t d = static_cast<size_t>(n / 2 - 1);

    // h = x^{d+1} + h_d x^d + ... + h_0, solved top-down:
    // h_d = m_{n-1}/2, then h_{d+1-j} = (m_{n-j} - g_j)/2 where g_j is the
    // part of the x^{n-j} coefficient of h^2 already determined.
    std::vector<R> h(d + 2, R());
    h[d + 1] = R(1);
    for (size_t j = 1; j <= d + 1; ++j) {
        size_t unknown = d + 1 - j;
        size_t target = static_cast<size_t>(n) - j;  // degree n-j coefficient
        // g = sum over ordered pairs (a,b), a+b = target, both indices already
        // determined; the unknown pairs only with the monic top, giving 2h.
        R g{};
        for (size_t a = unknown + 1; a <= d + 1; ++a) {
            if (target < a) continue;
            size_t b = target - a;
            if (b > d + 1 || b <= unknown) continue;
            g = g + h[a] * h[b];
        }
        R rhs = m[target] - g;
        h[unknown] = rhs.div_int(2);
    }

    SqrtDecomposition<R> dec;
    dec.m = m;
    dec.h = UniPoly<R>(std::move(h));
    dec.ell = dec.h * dec.h - m;
    dec.d = d;
    dec.ell_zero = dec.ell.is_zero();
    dec.ell_exact_degree = dec.ell.degree() == static_cast<long>(d);
    if (dec.ell.degree() > static_cast<long>(d))
        throw std::logic_error("decompose: internal degree bound violated");
    return dec;
}

/// Symbolic decomposition of the generic monic m(x) of degree n, with
/// coefficients the variables m_0..m_{n-1} (positional index i).
inline SqrtDecomposition<MultiPoly> decompose_generic(size_t n) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("decompose_generic: n must be even and >= 2");
    std::vector<MultiPoly> c(n + 1);
    for (size_t i = 0; i < n; ++i) c[i] = MultiPoly::variable(i);
    c[n] = MultiPoly(1);
    return decompose(UniPoly<MultiPoly>(std::move(c)));
}

}  // namespace omegacurves

#endif
