#ifndef OMEGACURVES_PRIMEFIELD_HPP
#define OMEGACURVES_PRIMEFIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "unipoly.hpp"

namespace omegacurves {

inline uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, p);
        a = mulmod_u64(a, a, p);
        e >>= 1;
    }
    return r;
}

inline bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull}) {
        if (n % q == 0) return n == q;
    }
    // deterministic Miller-Rabin for 64-bit inputs
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                       29ull, 31ull, 37ull}) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool comp = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                comp = false;
                break;
            }
        }
        if (comp) return false;
    }
    return true;
}

/// Element of F_p for a word-sized odd prime p carried alongside the value.
/// Small integer constants (the ring-generic F(0), F(1), sums of units in
/// derivative()) carry modulus 0 and adopt the other operand's modulus.
/// Satisfies the field interface UniPoly needs (arithmetic, inverse, is_zero).
class Fp {
public:
    Fp() = default;
    Fp(long v) : v_(static_cast<uint64_t>(v)), p_(0) {
        if (v < 0) throw std::invalid_argument("Fp: negative modulus-less constant");
    }
    Fp(uint64_t v, uint64_t p) : v_(v % p), p_(p) {}

    uint64_t value() const { return p_ ? v_ % p_ : v_; }
    uint64_t modulus() const { return p_; }
    bool is_zero() const { return p_ ? v_ % p_ == 0 : v_ == 0; }

    friend Fp operator+(const Fp& a, const Fp& b) {
        uint64_t p = a.adopt(b);
        if (p == 0) return raw(a.v_ + b.v_);
        return Fp(a.v_ % p + b.v_ % p, p);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        uint64_t p = a.adopt(b);
        if (p == 0) {
            if (a.v_ < b.v_) throw std::logic_error("Fp: raw constant underflow");
            return raw(a.v_ - b.v_);
        }
        return Fp(a.v_ % p + p - b.v_ % p, p);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        uint64_t p = a.adopt(b);
        if (p == 0) return raw(a.v_ * b.v_);
        return Fp(mulmod_u64(a.v_ % p, b.v_ % p, p), p);
    }
    Fp operator-() const {
        if (p_ == 0) {
            if (v_ != 0) throw std::logic_error("Fp: negation of raw constant");
            return Fp();
        }
        return Fp(p_ - v_ % p_, p_);
    }
    Fp inverse() const {
        if (is_zero()) throw std::domain_error("Fp: inverse of zero");
        if (p_ == 0) {
            if (v_ == 1) return *this;
            throw std::logic_error("Fp: inverse of raw constant");
        }
        return Fp(powmod_u64(v_ % p_, p_ - 2, p_), p_);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
    friend bool operator==(const Fp& a, const Fp& b) {
        uint64_t p = a.adopt(b);
        if (p == 0) return a.v_ == b.v_;
        return a.v_ % p == b.v_ % p;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

private:
    static Fp raw(uint64_t v) {
        Fp r;
        r.v_ = v;
        return r;
    }
    uint64_t adopt(const Fp& b) const {
        if (p_ != 0 && b.p_ != 0 && p_ != b.p_)
            throw std::invalid_argument("Fp: modulus mismatch");
        return p_ != 0 ? p_ : b.p_;
    }
    uint64_t v_ = 0;
    uint64_t p_ = 0;
};

using FpPoly = UniPoly<Fp>;

/// Reduction of a rational polynomial mod p. Fails (returns false) when a
/// denominator or the leading coefficient vanishes mod p.
inline bool reduce_poly_mod_p(const QPoly& f, uint64_t p, FpPoly& out) {
    std::vector<Fp> c;
    c.reserve(f.coeffs().size());
    for (const auto& q : f.coeffs()) {
        try {
            c.emplace_back(reduce_mod(q, p), p);
        } catch (const std::domain_error&) {
            return false;  // denominator divisible by p
        }
    }
    out = FpPoly(std::move(c));
    return out.degree() == f.degree();
}

/// x^(p^i) mod f laddering: frobenius_step applies a -> a^p mod f.
inline FpPoly powmod_poly(FpPoly base, uint64_t e, const FpPoly& f) {
    FpPoly r = FpPoly::constant(Fp(1, f.leading().modulus()));
    base = FpPoly::divmod(base, f).second;
    while (e) {
        if (e & 1) r = FpPoly::divmod(r * base, f).second;
        base = FpPoly::divmod(base * base, f).second;
        e >>= 1;
    }
    return r;
}

/// Degrees of the irreducible factors of a separable f over F_p (with
/// multiplicity one each), via the distinct-degree gcd ladder: the product
/// of the irreducible factors of degree dividing i divides x^(p^i) - x.
inline std::vector<size_t> ddf_cycle_type(const FpPoly& f_in) {
    if (f_in.degree() < 1) throw std::invalid_argument("ddf_cycle_type: degree >= 1");
    uint64_t p = f_in.leading().modulus();
    FpPoly f = f_in.monic();
    if (poly_gcd(f, f.derivative()).degree() != 0)
        throw std::domain_error("ddf_cycle_type: polynomial not separable mod p");
    std::vector<size_t> degrees;
    FpPoly x = FpPoly::x();
    FpPoly xq = x;  // x^(p^i) mod f
    size_t i = 0;
    while (f.degree() > 0) {
        ++i;
        if (f.degree() < static_cast<long>(2 * i)) {
            // what remains is irreducible
            degrees.push_back(static_cast<size_t>(f.degree()));
            break;
        }
        xq = powmod_poly(xq, p, f);
        FpPoly g = poly_gcd(f, xq - x);
        if (g.degree() > 0) {
            size_t count = static_cast<size_t>(g.degree()) / i;
            for (size_t j = 0; j < count; ++j) degrees.push_back(i);
            f = FpPoly::divmod(f, g).first;
            xq = FpPoly::divmod(xq, f).second;
        }
    }
    return degrees;
}

}  // namespace omegacurves

#endif
