#ifndef OMEGACURVES_UNIPOLY_HPP
#define OMEGACURVES_UNIPOLY_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace omegacurves {

/// Univariate polynomial with coefficients in a commutative ring F,
/// stored lowest degree first. The leading coefficient of a nonzero
/// polynomial is nonzero (trailing zero storage is trimmed).
///
/// Ring requirements: default ctor == additive identity, +, -, *, ==,
/// is_zero(). Field-only operations (divmod, gcd, inverses) additionally
/// require operator/ and inverse().
template <class F>
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly zero() { return UniPoly(); }
    static UniPoly constant(F a) { return UniPoly(std::vector<F>{std::move(a)}); }
    static UniPoly x() { return UniPoly(std::vector<F>{F(), unit()}); }

    /// x^k with unit coefficient.
    static UniPoly monomial(size_t k, F a) {
        std::vector<F> v(k + 1);
        v[k] = std::move(a);
        return UniPoly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    /// Degree of the zero polynomial is -1 by convention.
    long degree() const { return static_cast<long>(c_.size()) - 1; }

    const F& operator[](size_t i) const {
        static const F zero_{};
        return i < c_.size() ? c_[i] : zero_;
    }
    const std::vector<F>& coeffs() const { return c_; }
    const F& leading() const {
        if (is_zero()) throw std::domain_error("UniPoly: leading of zero");
        return c_.back();
    }
    bool is_monic() const { return !is_zero() && c_.back() == unit(); }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    UniPoly operator-() const {
        std::vector<F> r(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) r[i] = F() - c_[i];
        return UniPoly(std::move(r));
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<F> r(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < r.size(); ++i) r[i] = a[i] + b[i];
        return UniPoly(std::move(r));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        std::vector<F> r(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < r.size(); ++i) r[i] = a[i] - b[i];
        return UniPoly(std::move(r));
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        std::vector<F> r(a.c_.size() + b.c_.size() - 1);
        if (&a == &b) {  // squaring: only the i <= j half of the pairs
            for (size_t i = 0; i < a.c_.size(); ++i)
                for (size_t j = i; j < a.c_.size(); ++j) {
                    F t = a.c_[i] * a.c_[j];
                    if (i != j) t = t + t;
                    r[i + j] = r[i + j] + t;
                }
            return UniPoly(std::move(r));
        }
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        return UniPoly(std::move(r));
    }
    friend UniPoly operator*(const F& s, const UniPoly& a) {
        std::vector<F> r(a.c_.size());
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] = s * a.c_[i];
        return UniPoly(std::move(r));
    }

    template <class R>
    R eval(const R& x) const {
        R acc{};
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + R(c_[i]);
        return acc;
    }
    F operator()(const F& x) const {
        F acc{};
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    UniPoly derivative() const {
        if (c_.size() <= 1) return UniPoly();
        std::vector<F> r(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) {
            F k{};
            for (size_t j = 0; j < i; ++j) k = k + unit();  // i as ring element
            r[i - 1] = k * c_[i];
        }
        return UniPoly(std::move(r));
    }

    /// p(x^2).
    UniPoly compose_square() const {
        if (is_zero()) return UniPoly();
        std::vector<F> r(2 * c_.size() - 1);
        for (size_t i = 0; i < c_.size(); ++i) r[2 * i] = c_[i];
        return UniPoly(std::move(r));
    }

    // --- field-only operations ---

    /// Euclidean division; requires invertible leading coefficient of d.
    static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& d) {
        if (d.is_zero()) throw std::domain_error("UniPoly: division by zero");
        std::vector<F> rem = a.c_;
        long dd = d.degree();
        if (a.degree() < dd) return {UniPoly(), a};
        std::vector<F> quo(a.degree() - dd + 1);
        F lcinv = d.leading().inverse();
        for (long i = a.degree(); i >= dd; --i) {
            F q = rem[i] * lcinv;
            if (!q.is_zero()) {
                quo[i - dd] = q;
                for (long j = 0; j <= dd; ++j)
                    rem[i - dd + j] = rem[i - dd + j] - q * d.c_[j];
            }
        }
        return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
    }

    UniPoly monic() const {
        if (is_zero()) return UniPoly();
        F inv = leading().inverse();
        std::vector<F> r(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * inv;
        return UniPoly(std::move(r));
    }

private:
    static F unit() {
        // Multiplicative identity; rings used here construct it from 1.
        return F(1);
    }
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<F> c_;
};

/// Monic greatest common divisor; gcd(0,0) = 0. Field coefficients.
template <class F>
UniPoly<F> poly_gcd(UniPoly<F> a, UniPoly<F> b) {
    while (!b.is_zero()) {
        auto [q, r] = UniPoly<F>::divmod(a, b);
        (void)q;
        a = b;
        b = r;
    }
    return a.monic();
}

/// Resultant of a and b via the subresultant-free Euclidean recursion
/// over a field: Res(a,b) = lc(b)^(deg a - deg r) * (-1)^(deg a * deg b) * Res(b, r).
template <class F>
F resultant(UniPoly<F> a, UniPoly<F> b) {
    if (a.is_zero() || b.is_zero()) return F();
    F acc(1);
    bool neg = false;
    while (b.degree() > 0) {
        auto [q, r] = UniPoly<F>::divmod(a, b);
        (void)q;
        if (r.is_zero()) return F();
        // multiply acc by lc(b)^(deg a - deg r); track sign (-1)^(da*db)
        F lc = b.leading();
        long e = a.degree() - r.degree();
        for (long i = 0; i < e; ++i) acc = acc * lc;
        if ((a.degree() & 1) && (b.degree() & 1)) neg = !neg;
        a = b;
        b = r;
    }
    // b is a nonzero constant: Res(a, c) = c^deg a
    F c = b.leading();
    for (long i = 0; i < a.degree(); ++i) acc = acc * c;
    return neg ? F() - acc : acc;
}

/// disc(f) = (-1)^{d(d-1)/2} Res(f, f') / lc(f), for deg f >= 1.
template <class F>
F discriminant(const UniPoly<F>& f) {
    if (f.degree() < 1) throw std::invalid_argument("discriminant: constant polynomial");
    F res = resultant(f, f.derivative());
    F d = res * f.leading().inverse();
    long deg = f.degree();
    if (((deg * (deg - 1)) / 2) & 1) d = F() - d;
    return d;
}

/// true iff gcd(f, f') = 1.
template <class F>
bool is_separable(const UniPoly<F>& f) {
    if (f.degree() < 1) throw std::invalid_argument("is_separable: constant polynomial");
    return poly_gcd(f, f.derivative()).degree() == 0;
}

using QPoly = UniPoly<Rational>;

inline std::string to_string(const QPoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (long i = p.degree(); i >= 0; --i) {
        const Rational& c = p[static_cast<size_t>(i)];
        if (c.is_zero()) continue;
        if (!s.empty()) s += c.sign() > 0 ? " + " : " - ";
        else if (c.sign() < 0) s += "-";
        Rational a = abs(c);
        if (i == 0 || !a.is_one()) s += a.str();
        if (i > 0) {
            if (!a.is_one()) s += "*";
            s += "x";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

}  // namespace omegacurves

#endif
