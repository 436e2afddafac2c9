#ifndef OMEGACURVES_LATTICE_HPP
#define OMEGACURVES_LATTICE_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <vector>

namespace omegacurves {

using ZVec = std::vector<mpz_class>;
using ZMat = std::vector<ZVec>;  // rows

/// Row-style Hermite normal form via unimodular row operations: echelon
/// with positive pivots and entries above each pivot reduced into [0, pivot).
/// Zero rows are dropped, so the result rows form a basis of the row lattice.
inline ZMat hermite_normal_form(ZMat a) {
    size_t rows = a.size();
    if (rows == 0) return a;
    size_t cols = a[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        // eliminate column c below row r with gcd row operations
        for (size_t i = r + 1; i < rows; ++i) {
            while (a[i][c] != 0) {
                if (a[r][c] == 0) {
                    std::swap(a[r], a[i]);
                    continue;
                }
                mpz_class q = a[i][c] / a[r][c];  // truncated division is fine here
                for (size_t j = 0; j < cols; ++j) a[i][j] -= q * a[r][j];
                if (a[i][c] != 0) std::swap(a[r], a[i]);
            }
        }
        if (a[r][c] == 0) continue;
        if (a[r][c] < 0)
            for (size_t j = 0; j < cols; ++j) a[r][j] = -a[r][j];
        // reduce entries above the pivot
        for (size_t i = 0; i < r; ++i) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
            if (q != 0)
                for (size_t j = 0; j < cols; ++j) a[i][j] -= q * a[r][j];
        }
        ++r;
    }
    a.resize(r);
    return a;
}

/// Basis of the integer kernel {x in Z^n : x A = 0} of the row action,
/// i.e. of left null vectors of the n x m matrix A. Computed by reducing
/// [A | I] and collecting the identity parts of rows whose A part is zero.
inline ZMat left_kernel(const ZMat& a) {
    size_t n = a.size();
    if (n == 0) return {};
    size_t m = a[0].size();
    ZMat aug(n, ZVec(m + n, 0));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < m; ++j) aug[i][j] = a[i][j];
        aug[i][m + i] = 1;
    }
    aug = hermite_normal_form(std::move(aug));
    ZMat ker;
    for (const auto& row : aug) {
        bool zero = true;
        for (size_t j = 0; j < m; ++j)
            if (row[j] != 0) {
                zero = false;
                break;
            }
        if (!zero) continue;
        ker.emplace_back(row.begin() + static_cast<long>(m), row.end());
    }
    return hermite_normal_form(std::move(ker));
}

/// Intersection of the row lattices of b1 and b2 (vectors in Z^k):
/// v = x b1 = y b2 for integer x, y, i.e. (x, y) in the left kernel of the
/// stacked matrix [b1; -b2]; the intersection basis is {x b1}.
inline ZMat lattice_intersection(const ZMat& b1, const ZMat& b2) {
    if (b1.empty() || b2.empty()) return {};
    size_t k = b1[0].size();
    if (b2[0].size() != k)
        throw std::invalid_argument("lattice_intersection: dimension mismatch");
    ZMat stacked = b1;
    for (const auto& row : b2) {
        ZVec neg(k);
        for (size_t j = 0; j < k; ++j) neg[j] = -row[j];
        stacked.push_back(std::move(neg));
    }
    ZMat ker = left_kernel(stacked);
    ZMat result;
    for (const auto& xy : ker) {
        ZVec v(k, 0);
        for (size_t i = 0; i < b1.size(); ++i)
            for (size_t j = 0; j < k; ++j) v[j] += xy[i] * b1[i][j];
        bool zero = true;
        for (const auto& c : v)
            if (c != 0) {
                zero = false;
                break;
            }
        if (!zero) result.push_back(std::move(v));
    }
    return hermite_normal_form(std::move(result));
}

/// Searches the row lattice for a nonzero vector of max-norm <= bound.
/// The HNF basis is upper triangular (pivot columns increase), so the
/// coefficients are enumerated back-substitution style with per-coordinate
/// pruning; returns the first vector found.
inline std::optional<ZVec> short_vector_at_most(const ZMat& basis_in, long bound) {
    if (bound < 0) throw std::invalid_argument("short_vector_at_most: bound >= 0");
    ZMat basis = hermite_normal_form(basis_in);
    if (basis.empty()) return std::nullopt;
    size_t n = basis.size(), k = basis[0].size();
    std::vector<size_t> pivot(n);
    for (size_t i = 0; i < n; ++i) {
        size_t j = 0;
        while (j < k && basis[i][j] == 0) ++j;
        pivot[i] = j;
    }
    mpz_class b(bound);
    ZVec partial(k, 0);
    std::vector<mpz_class> coef(n, 0);
    std::optional<ZVec> found;

    // rows processed in order; row i is the only remaining row touching its
    // pivot column, which bounds its coefficient given earlier choices
    auto rec = [&](auto&& self, size_t i) -> bool {
        if (i == n) {
            bool zero = true;
            for (const auto& c : partial)
                if (c != 0) {
                    zero = false;
                    break;
                }
            if (zero) return false;
            for (const auto& c : partial)
                if (c > b || c < -b) return false;
            found = partial;
            return true;
        }
        size_t pc = pivot[i];
        // coefficient range from |partial[pc] + c * basis[i][pc]| <= bound
        mpz_class lo, hi, num_lo = -b - partial[pc], num_hi = b - partial[pc];
        mpz_fdiv_q(hi.get_mpz_t(), num_hi.get_mpz_t(), basis[i][pc].get_mpz_t());
        mpz_cdiv_q(lo.get_mpz_t(), num_lo.get_mpz_t(), basis[i][pc].get_mpz_t());
        for (mpz_class c = lo; c <= hi; ++c) {
            for (size_t j = 0; j < k; ++j) partial[j] += c * basis[i][j];
            // prune on all pivot columns decided so far
            bool ok = true;
            for (size_t l = 0; l <= i; ++l)
                if (partial[pivot[l]] > b || partial[pivot[l]] < -b) {
                    ok = false;
                    break;
                }
            if (ok && self(self, i + 1)) return true;
            for (size_t j = 0; j < k; ++j) partial[j] -= c * basis[i][j];
        }
        return false;
    };
    rec(rec, 0);
    return found;
}

}  // namespace omegacurves

#endif
