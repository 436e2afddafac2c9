#ifndef OMEGACURVES_ECGROUP_HPP
#define OMEGACURVES_ECGROUP_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "primefield.hpp"

namespace omegacurves {

/// Affine-or-infinity point on y^2 = x^3 + Ax + B over F_p.
struct ECPoint {
    uint64_t x = 0, y = 0;
    bool inf = true;

    static ECPoint infinity() { return {}; }
    static ECPoint affine(uint64_t x, uint64_t y) { return {x, y, false}; }
    friend bool operator==(const ECPoint& a, const ECPoint& b) {
        if (a.inf || b.inf) return a.inf == b.inf;
        return a.x == b.x && a.y == b.y;
    }
};

struct ECPointHash {
    size_t operator()(const ECPoint& q) const {
        if (q.inf) return 0x9e3779b97f4a7c15ull;
        return q.x * 1000003ull ^ (q.y + 0x9e3779b97f4a7c15ull);
    }
};

/// Short Weierstrass curve over F_p, p > 3 prime, nonsingular.
class ECurve {
public:
    ECurve(uint64_t A, uint64_t B, uint64_t p) : A_(A % p), B_(B % p), p_(p) {
        if (p < 5 || !is_prime_u64(p)) throw std::invalid_argument("ECurve: p must be prime > 3");
        // nonsingular iff 4A^3 + 27B^2 != 0
        uint64_t d = (mulmod_u64(4, mulmod_u64(A_, mulmod_u64(A_, A_, p), p), p) +
                      mulmod_u64(27, mulmod_u64(B_, B_, p), p)) % p;
        if (d == 0) throw std::domain_error("ECurve: singular curve");
    }

    uint64_t p() const { return p_; }
    uint64_t A() const { return A_; }
    uint64_t B() const { return B_; }

    bool contains(const ECPoint& q) const {
        if (q.inf) return true;
        uint64_t lhs = mulmod_u64(q.y, q.y, p_);
        uint64_t rhs = (mulmod_u64(q.x, mulmod_u64(q.x, q.x, p_), p_) +
                        mulmod_u64(A_, q.x, p_) + B_) % p_;
        return lhs == rhs;
    }

    ECPoint negate(const ECPoint& q) const {
        if (q.inf || q.y == 0) return q;
        return ECPoint::affine(q.x, p_ - q.y);
    }

    ECPoint add(const ECPoint& a, const ECPoint& b) const {
        if (a.inf) return b;
        if (b.inf) return a;
        if (a.x == b.x && (a.y + b.y) % p_ == 0) return ECPoint::infinity();
        uint64_t lambda;
        if (a.x == b.x) {  // doubling, y != 0
            uint64_t num = (mulmod_u64(3, mulmod_u64(a.x, a.x, p_), p_) + A_) % p_;
            uint64_t den = mulmod_u64(2, a.y, p_);
            lambda = mulmod_u64(num, powmod_u64(den, p_ - 2, p_), p_);
        } else {
            uint64_t num = (b.y + p_ - a.y) % p_;
            uint64_t den = (b.x + p_ - a.x) % p_;
            lambda = mulmod_u64(num, powmod_u64(den, p_ - 2, p_), p_);
        }
        uint64_t x3 = (mulmod_u64(lambda, lambda, p_) + 2 * p_ - a.x - b.x) % p_;
        uint64_t y3 = (mulmod_u64(lambda, (a.x + p_ - x3) % p_, p_) + p_ - a.y) % p_;
        return ECPoint::affine(x3, y3);
    }

    ECPoint sub(const ECPoint& a, const ECPoint& b) const { return add(a, negate(b)); }

    ECPoint mul(mpz_class k, const ECPoint& q) const {
        ECPoint base = q, r = ECPoint::infinity();
        if (k < 0) {
            base = negate(base);
            k = -k;
        }
        while (k != 0) {
            if (mpz_odd_p(k.get_mpz_t())) r = add(r, base);
            base = add(base, base);
            k >>= 1;
        }
        return r;
    }
    ECPoint mul(uint64_t k, const ECPoint& q) const { return mul(mpz_class(static_cast<unsigned long>(k)), q); }

    /// Full enumeration of E(F_p), including infinity. O(p) time and memory.
    std::vector<ECPoint> enumerate() const {
        // square-root table: sqrt_tab[s] = some y with y^2 = s, else p
        std::vector<uint64_t> sqrt_tab(p_, p_);
        for (uint64_t y = 0; y < p_; ++y) {
            uint64_t s = mulmod_u64(y, y, p_);
            if (sqrt_tab[s] == p_) sqrt_tab[s] = y;
        }
        std::vector<ECPoint> pts;
        pts.push_back(ECPoint::infinity());
        for (uint64_t x = 0; x < p_; ++x) {
            uint64_t rhs = (mulmod_u64(x, mulmod_u64(x, x, p_), p_) +
                            mulmod_u64(A_, x, p_) + B_) % p_;
            uint64_t y = sqrt_tab[rhs];
            if (y == p_) continue;
            pts.push_back(ECPoint::affine(x, y));
            if (y != 0) pts.push_back(ECPoint::affine(x, p_ - y));
        }
        return pts;
    }

private:
    uint64_t A_, B_, p_;
};

inline std::vector<std::pair<uint64_t, uint32_t>> factor_u64(uint64_t n) {
    std::vector<std::pair<uint64_t, uint32_t>> f;
    for (uint64_t q = 2; q * q <= n; q += (q == 2 ? 1 : 2)) {
        if (n % q) continue;
        uint32_t e = 0;
        while (n % q == 0) n /= q, ++e;
        f.push_back({q, e});
    }
    if (n > 1) f.push_back({n, 1});
    return f;
}

/// Order of q given a multiple n of it (here: the group order) and the
/// factorization of n.
inline uint64_t point_order(const ECurve& e, const ECPoint& q, uint64_t n,
                            const std::vector<std::pair<uint64_t, uint32_t>>& fac) {
    uint64_t o = n;
    for (const auto& [pr, ex] : fac) {
        for (uint32_t i = 0; i < ex; ++i) {
            if (o % pr) break;
            if (e.mul(o / pr, q).inf)
                o /= pr;
            else
                break;
        }
    }
    return o;
}

/// The group E(F_p) with an explicit decomposition E = <g1> + <g2>,
/// ord(g1) = a, ord(g2) = b, b | a, <g1> ∩ <g2> = 0, so every point has
/// unique coordinates (i mod a, j mod b) with P = i g1 + j g2.
struct ECGroup {
    ECurve curve;
    uint64_t order = 0;
    uint64_t a = 1, b = 1;
    ECPoint g1 = ECPoint::infinity(), g2 = ECPoint::infinity();
    std::unordered_map<ECPoint, uint64_t, ECPointHash> dlog_g1;  // k*g1 -> k

    std::pair<uint64_t, uint64_t> dlog(const ECPoint& q) const {
        ECPoint r = q;
        for (uint64_t j = 0; j < b; ++j) {
            auto it = dlog_g1.find(r);
            if (it != dlog_g1.end()) return {it->second, j};
            r = curve.sub(r, g2);
        }
        throw std::logic_error("ECGroup: dlog not found (generators invalid)");
    }
};

/// Combines two points into one whose order is lcm(ord(x), ord(y)),
/// prime power by prime power.
inline ECPoint combine_orders(const ECurve& e, ECPoint x, uint64_t ox, ECPoint y,
                              uint64_t oy,
                              const std::vector<std::pair<uint64_t, uint32_t>>& fac) {
    ECPoint r = ECPoint::infinity();
    for (const auto& [pr, ex] : fac) {
        uint64_t px = 1, py = 1;
        while (ox % (px * pr) == 0) px *= pr;
        while (oy % (py * pr) == 0) py *= pr;
        // component of order max(px, py)
        if (px >= py)
            r = e.add(r, e.mul(ox / px, x));
        else
            r = e.add(r, e.mul(oy / py, y));
    }
    return r;
}

namespace detail {

inline std::vector<uint64_t> divisors_u64(uint64_t n) {
    std::vector<uint64_t> d;
    for (uint64_t i = 1; i * i <= n; ++i)
        if (n % i == 0) {
            d.push_back(i);
            if (i != n / i) d.push_back(n / i);
        }
    std::sort(d.begin(), d.end());
    return d;
}

/// Attempts the decomposition for a candidate g1 of order a. Success means
/// E = <g1> + <g2> with <g1> ∩ <g2> = 0 was verified exactly, regardless of
/// whether a is the group exponent.
inline bool try_decompose(ECGroup& g, const std::vector<ECPoint>& pts, const ECPoint& g1,
                          uint64_t a) {
    const ECurve& e = g.curve;
    if (g.order % a != 0) return false;
    uint64_t b = g.order / a;
    if (b != 1 && a % b != 0) return false;  // E = Z/a x Z/b needs b | a

    g.dlog_g1.clear();
    ECPoint r = ECPoint::infinity();
    for (uint64_t k = 0; k < a; ++k) {
        g.dlog_g1.emplace(r, k);
        r = e.add(r, g1);
    }
    if (!r.inf) throw std::logic_error("try_decompose: candidate order wrong");
    g.g1 = g1;
    g.a = a;
    g.b = b;
    if (b == 1) {
        g.g2 = ECPoint::infinity();
        return true;
    }
    // find g2: minimal j with j*q in <g1> must equal b (image generates the
    // cyclic quotient), then shift so that b*g2 = 0 exactly
    auto divs = divisors_u64(b);
    for (const auto& q : pts) {
        uint64_t jmin = 0;
        for (uint64_t j : divs) {
            if (g.dlog_g1.count(e.mul(j, q))) {
                jmin = j;
                break;
            }
        }
        if (jmin != b) continue;
        uint64_t s = g.dlog_g1.at(e.mul(b, q));
        if (s % b != 0) continue;  // a*q != 0: a is not the exponent
        ECPoint g2 = e.sub(q, e.mul(s / b, g1));
        if (!e.mul(b, g2).inf) continue;
        g.g2 = g2;
        return true;
    }
    return false;  // quotient not cyclic of order b: a is below the exponent
}

}  // namespace detail

/// Computes the full group structure by enumeration. Deterministic: builds
/// a maximal-order g1 from a prefix of the point list, then verifies the
/// decomposition exactly; on failure (candidate below the true exponent)
/// falls back to folding in every point's order, which is certain.
inline ECGroup ec_group_structure(const ECurve& e) {
    ECGroup g{e};
    auto pts = e.enumerate();
    g.order = pts.size();
    auto fac = factor_u64(g.order);

    ECPoint g1 = ECPoint::infinity();
    uint64_t a = 1;
    size_t prefix = std::min<size_t>(pts.size(), 64);
    for (size_t i = 0; i < prefix; ++i) {
        uint64_t oq = point_order(e, pts[i], g.order, fac);
        if (a % oq != 0) {
            g1 = combine_orders(e, g1, a, pts[i], oq, fac);
            a = point_order(e, g1, g.order, fac);
        }
        if (a == g.order) break;
    }
    if (detail::try_decompose(g, pts, g1, a)) return g;

    for (const auto& q : pts) {  // certain fallback: a becomes the exponent
        uint64_t oq = point_order(e, q, g.order, fac);
        if (a % oq != 0) {
            g1 = combine_orders(e, g1, a, q, oq, fac);
            a = point_order(e, g1, g.order, fac);
        }
    }
    if (detail::try_decompose(g, pts, g1, a)) return g;
    throw std::logic_error("ec_group_structure: decomposition failed");
}

}  // namespace omegacurves

#endif
