#ifndef OMEGACURVES_MULTIPOLY_HPP
#define OMEGACURVES_MULTIPOLY_HPP

#include <cstdint>
#include <map>
#include <unordered_map>
#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace omegacurves {

/// Exponent vector for a monomial; trailing zeros are trimmed so that
/// equal monomials compare equal regardless of declared variable count.
using Monomial = std::vector<uint32_t>;

inline Monomial trim_monomial(Monomial m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
    return m;
}

/// Sparse multivariate polynomial over Q. Variables are positional
/// (z1, z2, ... for display); no zero coefficients are stored.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, Rational>;

    MultiPoly() = default;
    MultiPoly(long k) {  // constant polynomial, mirrors Rational(long)
        if (k != 0) terms_[Monomial{}] = Rational(k);
    }
    explicit MultiPoly(const Rational& c) {
        if (!c.is_zero()) terms_[Monomial{}] = c;
    }

    static MultiPoly variable(size_t i) {  // zero-based index
        MultiPoly p;
        Monomial m(i + 1, 0);
        m[i] = 1;
        p.terms_[std::move(m)] = Rational(1);
        return p;
    }

    static MultiPoly term(Monomial m, const Rational& c) {
        MultiPoly p;
        if (!c.is_zero()) p.terms_[trim_monomial(std::move(m))] = c;
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }
    Rational constant_value() const {
        if (!is_constant()) throw std::domain_error("MultiPoly: not constant");
        return terms_.empty() ? Rational(0) : terms_.begin()->second;
    }
    size_t num_vars() const {
        size_t n = 0;
        for (const auto& [m, c] : terms_) n = std::max(n, m.size());
        return n;
    }
    long total_degree() const {
        long d = -1;
        for (const auto& [m, c] : terms_) {
            long t = 0;
            for (auto e : m) t += e;
            d = std::max(d, t);
        }
        return d;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly operator-() const {
        MultiPoly r;
        for (const auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r;
        if (a.terms_.empty() || b.terms_.empty()) return r;
        if (a.terms_.size() == 1) return mul_monomial(b, a.terms_.begin());
        if (b.terms_.size() == 1) return mul_monomial(a, b.terms_.begin());
        if (&a == &b) {  // squaring: only the i <= j half of the pairs
            Monomial m;
            for (auto ia = a.terms_.begin(); ia != a.terms_.end(); ++ia)
                for (auto ib = ia; ib != a.terms_.end(); ++ib) {
                    const auto& [ma, ca] = *ia;
                    const auto& [mb, cb] = *ib;
                    m.assign(std::max(ma.size(), mb.size()), 0);
                    for (size_t i = 0; i < ma.size(); ++i) m[i] += ma[i];
                    for (size_t i = 0; i < mb.size(); ++i) m[i] += mb[i];
                    Rational c = ca * cb;
                    if (ia != ib) c += c;
                    r.add_term(m, c);
                }
            return r;
        }
        Monomial m;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                m.assign(std::max(ma.size(), mb.size()), 0);
                for (size_t i = 0; i < ma.size(); ++i) m[i] += ma[i];
                for (size_t i = 0; i < mb.size(); ++i) m[i] += mb[i];
                r.add_term(m, ca * cb);
            }
        return r;
    }

    MultiPoly div_int(long k) const {
        MultiPoly r;
        Rational inv = Rational(1, k);
        for (const auto& [m, c] : terms_) r.terms_[m] = c * inv;
        return r;
    }
    MultiPoly scale(const Rational& s) const {
        MultiPoly r;
        if (s.is_zero()) return r;
        for (const auto& [m, c] : terms_) r.terms_[m] = c * s;
        return r;
    }

    /// Exact evaluation at a point; the assignment must cover every
    /// variable that actually occurs.
    Rational substitute(const std::vector<Rational>& assignment) const {
        Rational acc(0);
        for (const auto& [m, c] : terms_) {
            if (m.size() > assignment.size())
                throw std::invalid_argument("MultiPoly::substitute: arity mismatch");
            Rational t = c;
            for (size_t i = 0; i < m.size(); ++i)
                for (uint32_t e = 0; e < m[i]; ++e) t *= assignment[i];
            acc += t;
        }
        return acc;
    }

private:
    /// Product by a single term. Adding a fixed exponent vector preserves
    /// the lexicographic order of trimmed monomials, so the result map is
    /// built with end-of-map hints.
    static MultiPoly mul_monomial(const MultiPoly& p, TermMap::const_iterator t) {
        MultiPoly r;
        const Monomial& ms = t->first;
        const Rational& cs = t->second;
        for (const auto& [mp, cp] : p.terms_) {
            Monomial m(std::max(mp.size(), ms.size()), 0);
            for (size_t i = 0; i < mp.size(); ++i) m[i] += mp[i];
            for (size_t i = 0; i < ms.size(); ++i) m[i] += ms[i];
            Rational c = cp * cs;
            if (!c.is_zero())
                r.terms_.emplace_hint(r.terms_.end(), std::move(m), std::move(c));
        }
        return r;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c.is_zero()) return;
        if (!m.empty() && m.back() == 0) {
            add_term(trim_monomial(m), c);  // callers normally pass trimmed keys
            return;
        }
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    TermMap terms_;
};

}  // namespace omegacurves

#endif
