#ifndef OMEGACURVES_TEST_HELPERS_HPP
#define OMEGACURVES_TEST_HELPERS_HPP

#include <random>
#include <vector>

#include <omegacurves/rational.hpp>
#include <omegacurves/unipoly.hpp>

namespace octest {

using omegacurves::QPoly;
using omegacurves::Rational;

inline QPoly qpoly(std::initializer_list<long> coeffs_low_first) {
    std::vector<Rational> c;
    for (long v : coeffs_low_first) c.emplace_back(v);
    return QPoly(std::move(c));
}

inline QPoly random_poly(std::mt19937_64& rng, long degree, long height = 9,
                         bool monic = false) {
    std::uniform_int_distribution<long> dist(-height, height);
    std::vector<Rational> c(static_cast<size_t>(degree + 1));
    for (auto& x : c) x = Rational(dist(rng));
    if (monic) {
        c.back() = Rational(1);
    } else {
        while (c.back().is_zero()) c.back() = Rational(dist(rng));
    }
    return QPoly(std::move(c));
}

/// Test-only oracle: resultant via the Sylvester matrix determinant with
/// fraction-free elimination over Q. Independent of the Euclidean path.
inline Rational sylvester_resultant(const QPoly& f, const QPoly& g) {
    long m = f.degree(), n = g.degree();
    if (m < 0 || n < 0) return Rational(0);
    size_t size = static_cast<size_t>(m + n);
    if (size == 0) return Rational(1);
    std::vector<std::vector<Rational>> a(size, std::vector<Rational>(size, Rational(0)));
    for (long r = 0; r < n; ++r)
        for (long j = 0; j <= m; ++j)
            a[static_cast<size_t>(r)][static_cast<size_t>(r + j)] =
                f[static_cast<size_t>(m - j)];
    for (long r = 0; r < m; ++r)
        for (long j = 0; j <= n; ++j)
            a[static_cast<size_t>(n + r)][static_cast<size_t>(r + j)] =
                g[static_cast<size_t>(n - j)];
    // Gaussian elimination over Q, tracking the determinant exactly.
    Rational det(1);
    for (size_t col = 0; col < size; ++col) {
        size_t piv = col;
        while (piv < size && a[piv][col].is_zero()) ++piv;
        if (piv == size) return Rational(0);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        Rational inv = a[col][col].inverse();
        for (size_t r = col + 1; r < size; ++r) {
            if (a[r][col].is_zero()) continue;
            Rational factor = a[r][col] * inv;
            for (size_t c = col; c < size; ++c) a[r][c] -= factor * a[col][c];
        }
    }
    return det;
}

}  // namespace octest

#endif
