#ifndef OMEGACURVES_GALOIS_CERT_HPP
#define OMEGACURVES_GALOIS_CERT_HPP

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "constructions.hpp"
#include "primefield.hpp"

namespace omegacurves {

struct CycleTypeSample {
    uint64_t prime;
    std::vector<size_t> degrees;  // factor degrees of ell_t mod p, summing to d
};

/// Certificate that Gal(ell_t / Q) = S_d, via Frobenius cycle types and
/// Jordan's criterion: a transitive subgroup of S_d containing a
/// transposition and a q-cycle for a prime q > d/2 is S_d itself.
struct SimplicityCertificate {
    size_t d = 0;
    std::vector<CycleTypeSample> evidence;
    bool certified = false;  // false = inconclusive, never a false positive
    uint64_t witness_full_cycle = 0;   // prime exhibiting a d-cycle
    uint64_t witness_transposition = 0;  // prime exhibiting type {2,1,...,1}
    uint64_t witness_long_prime_cycle = 0;  // prime exhibiting {q,1,...}, q > d/2 prime
    // Applicability of the simplicity criterion for the Jacobian:
    // y^2 = f(x) needs d >= 5; y^2 = x f(x) needs d odd, d >= 5.
    bool zarhin_applicable = false;
    std::string zarhin_note;
};

inline bool is_full_cycle(const std::vector<size_t>& t, size_t d) {
    return t.size() == 1 && t[0] == d;
}

inline bool is_transposition(const std::vector<size_t>& t) {
    size_t twos = 0;
    for (size_t x : t) {
        if (x == 2) ++twos;
        else if (x != 1) return false;
    }
    return twos == 1;
}

inline bool is_long_prime_cycle(const std::vector<size_t>& t, size_t d) {
    // exactly one part q with q prime, d/2 < q < d, all other parts 1
    size_t big = 0, count = 0;
    for (size_t x : t) {
        if (x == 1) continue;
        big = x;
        ++count;
    }
    if (count != 1 || 2 * big <= d || big >= d) return false;
    return is_prime_u64(big);
}

inline void apply_zarhin_flags(SimplicityCertificate& c, CurveKind kind) {
    if (kind == CurveKind::X1) {
        c.zarhin_applicable = c.certified && c.d >= 5;
        c.zarhin_note = c.zarhin_applicable
                            ? "simplicity criterion applies (d >= 5)"
                            : "needs certified S_d with d >= 5";
    } else if (kind == CurveKind::X2) {
        c.zarhin_applicable = c.certified && c.d >= 5 && c.d % 2 == 1;
        c.zarhin_note = c.zarhin_applicable
                            ? "simplicity criterion applies (d odd, d >= 5)"
                            : "needs certified S_d with d odd, d >= 5";
    } else {
        c.zarhin_applicable = false;
        c.zarhin_note = "no simplicity criterion attached to this model kind";
    }
}

/// Samples primes of good reduction for ell_t and searches for the three
/// Jordan witnesses. For d = 2 a single {2} type suffices (S_2 is generated
/// by its transposition); for d = 3 a 3-cycle plus a transposition suffice
/// (the long-prime witness coincides with one of them).
inline SimplicityCertificate certify_galois_Sd(const QPoly& ell, size_t prime_budget,
                                               uint64_t first_prime = 3) {
    SimplicityCertificate cert;
    if (ell.degree() < 2)
        throw std::invalid_argument("certify_galois_Sd: degree >= 2 required");
    if (!is_separable(ell))
        throw std::invalid_argument("certify_galois_Sd: polynomial not separable");
    cert.d = static_cast<size_t>(ell.degree());
    size_t d = cert.d;

    bool need_long = d >= 4;  // for d = 2, 3 the other witnesses generate S_d
    uint64_t p = first_prime < 3 ? 3 : first_prime;
    for (size_t used = 0; used < prime_budget; ++p) {
        if (!is_prime_u64(p)) continue;
        FpPoly f;
        if (!reduce_poly_mod_p(ell, p, f)) continue;
        std::vector<size_t> type;
        try {
            type = ddf_cycle_type(f);
        } catch (const std::domain_error&) {
            continue;  // bad reduction: inseparable mod p
        }
        ++used;
        cert.evidence.push_back({p, type});
        if (cert.witness_full_cycle == 0 && is_full_cycle(type, d))
            cert.witness_full_cycle = p;
        if (cert.witness_transposition == 0 && is_transposition(type))
            cert.witness_transposition = p;
        if (cert.witness_long_prime_cycle == 0 && is_long_prime_cycle(type, d))
            cert.witness_long_prime_cycle = p;
        bool have_long = !need_long || cert.witness_long_prime_cycle != 0;
        bool have_full = cert.witness_full_cycle != 0 || (d == 2 && cert.witness_transposition != 0);
        if (have_full && cert.witness_transposition != 0 && have_long) {
            cert.certified = true;
            break;
        }
    }
    return cert;
}

}  // namespace omegacurves

#endif
