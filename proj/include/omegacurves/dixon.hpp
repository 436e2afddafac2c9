#ifndef OMEGACURVES_DIXON_HPP
#define OMEGACURVES_DIXON_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "characters.hpp"
#include "primefield.hpp"

namespace omegacurves {

namespace dixon_detail {

using Row = std::vector<uint64_t>;
using Mat = std::vector<Row>;

inline uint64_t addm(uint64_t a, uint64_t b, uint64_t p) { return (a + b) % p; }
inline uint64_t subm(uint64_t a, uint64_t b, uint64_t p) { return (a + p - b % p) % p; }
inline uint64_t invm(uint64_t a, uint64_t p) { return powmod_u64(a % p, p - 2, p); }

/// Row-reduces m in place; returns pivot column per row (echelon form).
inline std::vector<size_t> echelon(Mat& m, uint64_t p) {
    std::vector<size_t> pivots;
    size_t rows = m.size(), cols = rows ? m[0].size() : 0, rank = 0;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t piv = rank;
        while (piv < rows && m[piv][c] % p == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);
        uint64_t inv = invm(m[rank][c], p);
        for (auto& x : m[rank]) x = mulmod_u64(x, inv, p);
        for (size_t rr = 0; rr < rows; ++rr) {
            if (rr == rank || m[rr][c] % p == 0) continue;
            uint64_t f = m[rr][c] % p;
            for (size_t cc = 0; cc < cols; ++cc)
                m[rr][cc] = subm(m[rr][cc], mulmod_u64(f, m[rank][cc], p), p);
        }
        pivots.push_back(c);
        ++rank;
    }
    m.resize(pivots.size());
    return pivots;
}

/// Kernel basis of a square matrix (rows) over F_p.
inline Mat kernel(Mat m, uint64_t p) {
    size_t n = m.size();
    auto pivots = echelon(m, p);
    std::vector<bool> is_pivot(n, false);
    for (size_t c : pivots) is_pivot[c] = true;
    Mat ker;
    for (size_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        Row v(n, 0);
        v[c] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = subm(0, m[r][c], p);
        ker.push_back(std::move(v));
    }
    return ker;
}

/// det(a - lambda I) coefficients by evaluation at n+1 points and Lagrange
/// interpolation (n small).
inline Row charpoly_mod(const Mat& a, uint64_t p) {
    size_t n = a.size();
    if (n + 1 >= p) throw std::logic_error("charpoly_mod: matrix too large for p");
    std::vector<uint64_t> xs(n + 1), ys(n + 1);
    for (uint64_t t = 0; t <= n; ++t) {
        Mat m = a;
        for (size_t i = 0; i < n; ++i) m[i][i] = subm(m[i][i], t, p);
        // determinant by elimination
        uint64_t det = 1;
        for (size_t c = 0; c < n && det; ++c) {
            size_t piv = c;
            while (piv < n && m[piv][c] % p == 0) ++piv;
            if (piv == n) {
                det = 0;
                break;
            }
            if (piv != c) {
                std::swap(m[piv], m[c]);
                det = subm(0, det, p);
            }
            det = mulmod_u64(det, m[c][c] % p, p);
            uint64_t inv = invm(m[c][c], p);
            for (size_t rr = c + 1; rr < n; ++rr) {
                uint64_t f = mulmod_u64(m[rr][c] % p, inv, p);
                if (!f) continue;
                for (size_t cc = c; cc < n; ++cc)
                    m[rr][cc] = subm(m[rr][cc], mulmod_u64(f, m[c][cc], p), p);
            }
        }
        xs[t] = t;
        ys[t] = det;
    }
    // Lagrange interpolation to coefficient form (degree n)
    Row coeffs(n + 1, 0);
    for (size_t i = 0; i <= n; ++i) {
        // basis polynomial prod_{j != i} (x - x_j) / (x_i - x_j)
        Row basis{1};
        uint64_t denom = 1;
        for (size_t j = 0; j <= n; ++j) {
            if (j == i) continue;
            Row nb(basis.size() + 1, 0);
            for (size_t t = 0; t < basis.size(); ++t) {
                nb[t + 1] = addm(nb[t + 1], basis[t], p);
                nb[t] = subm(nb[t], mulmod_u64(basis[t], xs[j], p), p);
            }
            basis = std::move(nb);
            denom = mulmod_u64(denom, subm(xs[i], xs[j], p), p);
        }
        uint64_t f = mulmod_u64(ys[i], invm(denom, p), p);
        for (size_t t = 0; t < basis.size(); ++t)
            coeffs[t] = addm(coeffs[t], mulmod_u64(basis[t], f, p), p);
    }
    return coeffs;
}

inline uint64_t horner(const Row& c, uint64_t x, uint64_t p) {
    uint64_t r = 0;
    for (size_t i = c.size(); i-- > 0;) r = addm(mulmod_u64(r, x, p), c[i], p);
    return r;
}

}  // namespace dixon_detail

/// The character table of G modulo a prime p = 1 (mod exponent(G)),
/// p > 4 |G|: degrees are exact integers, values are mod-p images. All
/// multiplicity computations lift exactly as long as they stay below p.
struct ModPCharacterTable {
    const FiniteGroup* group = nullptr;
    uint64_t p = 0;
    std::vector<uint64_t> degrees;                // exact
    std::vector<std::vector<uint64_t>> values;    // values[i][class] mod p

    /// Multiplicity of irreducible i in the integer-valued character chi;
    /// exact when it is < p (true for any genuine character of dim < p).
    uint64_t multiplicity(size_t i, const ClassFunction& chi) const {
        const FiniteGroup& g = *group;
        uint64_t s = 0;
        for (size_t c = 0; c < g.num_classes(); ++c) {
            uint64_t vc = reduce_mod(chi.values[c], p);
            uint64_t x = mulmod_u64(vc, values[i][g.inverse_class(c)], p);
            s = (s + mulmod_u64(x, g.class_size(c) % p, p)) % p;
        }
        return mulmod_u64(s, dixon_detail::invm(g.order() % p, p), p);
    }
};

/// Burnside/Dixon character table mod p: simultaneous eigenvectors of the
/// class-multiplication matrices over F_p.
inline ModPCharacterTable character_table_mod_p(const FiniteGroup& g, size_t order_cap = 2000) {
    using namespace dixon_detail;
    if (g.order() > order_cap)
        throw std::domain_error("character_table_mod_p: group order exceeds cap");
    size_t r = g.num_classes();
    size_t nG = g.order();

    // prime p = 1 (mod exponent), p > 4|G|
    size_t e = g.exponent();
    uint64_t p = 0;
    for (uint64_t k = 1;; ++k) {
        uint64_t cand = k * e + 1;
        if (cand > 4 * nG && is_prime_u64(cand)) {
            p = cand;
            break;
        }
    }

    // structure constants: a[i][j][k] with K_i K_j = sum a_{ijk} K_k,
    // a_{ijk} = #{x in K_i : x^{-1} z in K_j} for fixed z in K_k
    std::vector<Mat> M(r, Mat(r, Row(r, 0)));  // M[i][j][k] = a_{ijk}
    for (size_t k = 0; k < r; ++k) {
        size_t z = g.classes()[k][0];
        for (size_t i = 0; i < r; ++i) {
            for (size_t xi : g.classes()[i]) {
                size_t y = g.mul_index(g.inv_index(xi), z);
                M[i][g.class_of(y)][k] += 1;
            }
        }
    }

    // split the common eigenspaces
    std::vector<Mat> spaces{Mat()};  // bases; start with the full space
    spaces[0].resize(r);
    for (size_t i = 0; i < r; ++i) {
        spaces[0][i] = Row(r, 0);
        spaces[0][i][i] = 1;
    }
    for (size_t mi = 0; mi < r; ++mi) {
        bool all_one = true;
        for (const auto& s : spaces)
            if (s.size() > 1) all_one = false;
        if (all_one) break;
        std::vector<Mat> next;
        for (auto& basis : spaces) {
            size_t s = basis.size();
            if (s == 1) {
                next.push_back(std::move(basis));
                continue;
            }
            // work in an echelonized basis of the subspace so coordinates
            // can be read off during reduction
            Mat ech = basis;
            auto pivots = echelon(ech, p);
            if (pivots.size() != s)
                throw std::logic_error("character_table_mod_p: dependent basis");
            // restricted action A: M_mi * ech_t = sum_u A[t][u] ech_u; the
            // subspace is invariant, so reduction against ech is exact
            Mat A(s, Row(s, 0));
            for (size_t t = 0; t < s; ++t) {
                Row img(r, 0);
                for (size_t row = 0; row < r; ++row) {
                    uint64_t acc = 0;
                    for (size_t col = 0; col < r; ++col)
                        acc = addm(acc, mulmod_u64(M[mi][row][col], ech[t][col], p), p);
                    img[row] = acc;
                }
                Row coord(s, 0);
                for (size_t rr = 0; rr < pivots.size(); ++rr) {
                    uint64_t f = img[pivots[rr]] % p;
                    coord[rr] = f;
                    if (!f) continue;
                    for (size_t cc = 0; cc < r; ++cc)
                        img[cc] = subm(img[cc], mulmod_u64(f, ech[rr][cc], p), p);
                }
                for (uint64_t x : img)
                    if (x % p) throw std::logic_error("character_table_mod_p: space not invariant");
                A[t] = std::move(coord);
            }
            // eigenvalues of A^T on coordinate vectors: v M = lambda v style;
            // we need vectors w = sum c_t ech_t with M w = lambda w, i.e.
            // sum c_t A[t][u] = lambda c_u: left eigenvectors of A.
            Mat At(s, Row(s, 0));
            for (size_t t = 0; t < s; ++t)
                for (size_t u = 0; u < s; ++u) At[u][t] = A[t][u];
            Row cp = charpoly_mod(At, p);
            bool split_any = false;
            for (uint64_t lam = 0; lam < p; ++lam) {
                if (horner(cp, lam, p)) continue;
                Mat shifted = At;
                for (size_t t = 0; t < s; ++t) shifted[t][t] = subm(shifted[t][t], lam, p);
                Mat ker = kernel(std::move(shifted), p);
                if (ker.empty()) continue;
                Mat sub;
                for (const auto& cv : ker) {
                    Row w(r, 0);
                    for (size_t t = 0; t < s; ++t)
                        for (size_t cc = 0; cc < r; ++cc)
                            w[cc] = addm(w[cc], mulmod_u64(cv[t], ech[t][cc], p), p);
                    sub.push_back(std::move(w));
                }
                if (sub.size() < s) split_any = true;
                next.push_back(std::move(sub));
            }
            if (!split_any && next.empty())
                throw std::logic_error("character_table_mod_p: no eigenvalue found");
        }
        spaces = std::move(next);
    }
    for (const auto& sp : spaces)
        if (sp.size() != 1)
            throw std::logic_error("character_table_mod_p: eigenspaces did not fully split");
    if (spaces.size() != r)
        throw std::logic_error("character_table_mod_p: wrong number of eigenvectors");

    size_t c0 = g.class_of(0);
    ModPCharacterTable tab;
    tab.group = &g;
    tab.p = p;
    for (auto& sp : spaces) {
        Row w = sp[0];
        if (w[c0] % p == 0) throw std::logic_error("character_table_mod_p: bad normalization");
        uint64_t inv = invm(w[c0], p);
        for (auto& x : w) x = mulmod_u64(x, inv, p);
        // degree: d^2 = |G| / sum_k w_k w_{k*} / n_k
        uint64_t s = 0;
        for (size_t k = 0; k < r; ++k) {
            uint64_t t = mulmod_u64(w[k], w[g.inverse_class(k)], p);
            s = addm(s, mulmod_u64(t, invm(g.class_size(k) % p, p), p), p);
        }
        uint64_t d2 = mulmod_u64(nG % p, invm(s, p), p);
        uint64_t d = 0;
        for (uint64_t t = 1; t * t <= nG; ++t)
            if (mulmod_u64(t, t, p) == d2) {
                d = t;
                break;
            }
        if (!d) throw std::logic_error("character_table_mod_p: degree not recovered");
        std::vector<uint64_t> vals(r);
        for (size_t k = 0; k < r; ++k)
            vals[k] = mulmod_u64(mulmod_u64(d % p, w[k], p), invm(g.class_size(k) % p, p), p);
        tab.degrees.push_back(d);
        tab.values.push_back(std::move(vals));
    }
    // sanity: sum of squared degrees = |G|
    uint64_t sum = 0;
    for (uint64_t d : tab.degrees) sum += d * d;
    if (sum != nG) throw std::logic_error("character_table_mod_p: degree check failed");
    return tab;
}

struct SubmoduleVerdict {
    bool contained = false;
    bool exact = false;  // true: irreducible multiplicities compared; false:
                         // only sound necessary conditions were checked
};

/// Tests whether V embeds in W as Q[G]-modules (multiplicity-wise over the
/// irreducibles). Exact when |G| <= order_cap; otherwise applies sound
/// necessary conditions: dimension, and nonnegativity of <W - V, probe> for
/// the trivial, regular, and caller-provided permutation characters.
inline SubmoduleVerdict submodule_test(const ClassFunction& v, const ClassFunction& w,
                                       const std::vector<ClassFunction>& probes = {},
                                       size_t order_cap = 2000) {
    ClassFunction::check_same(v, w);
    const FiniteGroup& g = *v.group;
    if (g.order() <= order_cap) {
        auto tab = character_table_mod_p(g, order_cap);
        for (size_t i = 0; i < tab.degrees.size(); ++i) {
            uint64_t mv = tab.multiplicity(i, v), mw = tab.multiplicity(i, w);
            if (mv > mw) return {false, true};
        }
        return {true, true};
    }
    if (w.dimension() - v.dimension() < Rational(0)) return {false, false};
    ClassFunction diff = w - v;
    std::vector<ClassFunction> all = probes;
    all.push_back(trivial_character(g));
    {
        ClassFunction reg = zero_character(g);
        reg.values[g.class_of(0)] = Rational(static_cast<long>(g.order()));
        all.push_back(reg);
    }
    for (const auto& probe : all)
        if (inner_product(diff, probe) < Rational(0)) return {false, false};
    return {true, false};
}

}  // namespace omegacurves

#endif
