#ifndef OMEGACURVES_ETALE_HPP
#define OMEGACURVES_ETALE_HPP

#include <memory>
#include <stdexcept>
#include <vector>

#include "multipoly.hpp"
#include "rational.hpp"
#include "unipoly.hpp"

namespace omegacurves {

// Coefficient-ring glue: the algebra code runs over Q and over Q[z].
inline Rational scalar_mul(const Rational& a, const Rational& s) { return a * s; }
inline MultiPoly scalar_mul(const MultiPoly& a, const Rational& s) { return a.scale(s); }
template <class R>
R from_rational(const Rational& q);
template <>
inline Rational from_rational<Rational>(const Rational& q) { return q; }
template <>
inline MultiPoly from_rational<MultiPoly>(const Rational& q) { return MultiPoly(q); }

/// Finite etale Q-algebra presented as a product of quotient rings
/// Q[x]/(f_i) with each f_i monic and separable.
class EtaleAlgebra {
public:
    explicit EtaleAlgebra(std::vector<QPoly> factors) : factors_(std::move(factors)) {
        if (factors_.empty()) throw std::invalid_argument("EtaleAlgebra: no factors");
        degree_ = 0;
        for (const auto& f : factors_) {
            if (f.degree() < 1) throw std::invalid_argument("EtaleAlgebra: constant factor");
            if (!f.is_monic()) throw std::invalid_argument("EtaleAlgebra: non-monic factor");
            if (!is_separable(f)) throw std::invalid_argument("EtaleAlgebra: inseparable factor");
            offsets_.push_back(degree_);
            degree_ += static_cast<size_t>(f.degree());
        }
        precompute_power_sums();
    }

    /// Q^k: k split factors (x - 0 is not used; factors are x itself).
    static std::shared_ptr<const EtaleAlgebra> split(size_t k) {
        std::vector<QPoly> fs(k, QPoly::x());
        return std::make_shared<const EtaleAlgebra>(std::move(fs));
    }

    static std::shared_ptr<const EtaleAlgebra> make(std::vector<QPoly> factors) {
        return std::make_shared<const EtaleAlgebra>(std::move(factors));
    }

    const std::vector<QPoly>& factors() const { return factors_; }
    size_t num_factors() const { return factors_.size(); }
    size_t degree() const { return degree_; }
    size_t factor_degree(size_t i) const { return static_cast<size_t>(factors_[i].degree()); }
    size_t offset(size_t i) const { return offsets_[i]; }

    /// Trace of x^j on Q[x]/(f_i): the j-th power sum of the roots of f_i.
    const Rational& power_sum(size_t i, size_t j) const { return power_sums_[i][j]; }

    bool same_as(const EtaleAlgebra& o) const { return factors_ == o.factors_; }

private:
    void precompute_power_sums() {
        power_sums_.resize(factors_.size());
        for (size_t i = 0; i < factors_.size(); ++i) {
            const QPoly& f = factors_[i];
            size_t k = static_cast<size_t>(f.degree());
            // Newton's identities on f = x^k + a_{k-1}x^{k-1} + ... + a_0:
            // s_j = -j*a_{k-j} - sum_{t=1}^{j-1} a_{k-t} s_{j-t}.
            std::vector<Rational>& s = power_sums_[i];
            // Powers of elements reach degree <= 2k-2 before reduction; traces
            // of reduced residues only need s_0..s_{k-1}, but the quadratic
            // extension path evaluates traces up to s_{2k}. Keep 2k+1 terms.
            size_t need = 2 * k + 1;
            s.assign(need, Rational(0));
            s[0] = Rational(static_cast<long>(k));
            auto a = [&](long idx) -> Rational {
                return idx >= 0 && idx < f.degree() ? f[static_cast<size_t>(idx)] : Rational(0);
            };
            for (size_t j = 1; j < need; ++j) {
                Rational acc(0);
                for (size_t t = 1; t < j; ++t)
                    acc += a(static_cast<long>(k - t)) * s[j - t];
                Rational sj = -acc;
                if (j <= k) sj -= Rational(static_cast<long>(j)) * a(static_cast<long>(k - j));
                s[j] = sj;
            }
        }
    }

    std::vector<QPoly> factors_;
    std::vector<size_t> offsets_;
    size_t degree_ = 0;
    std::vector<std::vector<Rational>> power_sums_;
};

using AlgebraPtr = std::shared_ptr<const EtaleAlgebra>;

/// Element of an etale algebra: one residue polynomial per factor,
/// coefficients in R (Rational or MultiPoly), degree below the factor degree.
template <class R>
class AlgebraElement {
public:
    AlgebraElement() = default;
    AlgebraElement(AlgebraPtr parent, std::vector<std::vector<R>> comps)
        : parent_(std::move(parent)), comps_(std::move(comps)) {
        if (comps_.size() != parent_->num_factors())
            throw std::invalid_argument("AlgebraElement: component count mismatch");
        for (size_t i = 0; i < comps_.size(); ++i)
            reduce_component(i);
    }

    static AlgebraElement zero(AlgebraPtr a) {
        std::vector<std::vector<R>> c(a->num_factors());
        for (size_t i = 0; i < c.size(); ++i) c[i].assign(a->factor_degree(i), R());
        return AlgebraElement(std::move(a), std::move(c));
    }
    static AlgebraElement one(AlgebraPtr a) {
        auto e = zero(a);
        for (auto& comp : e.comps_) comp[0] = R(1);
        return e;
    }
    /// The image of x in every factor (the canonical generator).
    static AlgebraElement generator(AlgebraPtr a) {
        auto e = zero(std::move(a));
        for (size_t i = 0; i < e.comps_.size(); ++i) {
            if (e.comps_[i].size() > 1)
                e.comps_[i][1] = R(1);
            else  // linear factor x + c: x = -c
                e.comps_[i][0] = from_rational<R>(-e.parent_->factors()[i][0]);
        }
        return e;
    }

    const AlgebraPtr& parent() const { return parent_; }
    const std::vector<std::vector<R>>& components() const { return comps_; }
    std::vector<std::vector<R>>& mutable_components() { return comps_; }

    bool is_zero() const {
        for (const auto& comp : comps_)
            for (const auto& c : comp)
                if (!c.is_zero()) return false;
        return true;
    }

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        return a.comps_ == b.comps_;
    }
    friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) {
        return !(a == b);
    }

    friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
        a.check_parent(b);
        auto r = a;
        for (size_t i = 0; i < r.comps_.size(); ++i)
            for (size_t j = 0; j < r.comps_[i].size(); ++j)
                r.comps_[i][j] = r.comps_[i][j] + b.comps_[i][j];
        return r;
    }
    friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
        a.check_parent(b);
        auto r = a;
        for (size_t i = 0; i < r.comps_.size(); ++i)
            for (size_t j = 0; j < r.comps_[i].size(); ++j)
                r.comps_[i][j] = r.comps_[i][j] - b.comps_[i][j];
        return r;
    }

    /// Componentwise product reduced modulo each factor.
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
        a.check_parent(b);
        auto r = zero(a.parent_);
        for (size_t i = 0; i < r.comps_.size(); ++i)
            r.comps_[i] = mul_mod(a.comps_[i], b.comps_[i], a.parent_->factors()[i]);
        return r;
    }

    AlgebraElement scale_rational(const Rational& s) const {
        auto r = *this;
        for (auto& comp : r.comps_)
            for (auto& c : comp) c = scalar_mul(c, s);
        return r;
    }

    /// Multiplication by an element with rational coefficients (used to
    /// apply delta to elements over Q[z]).
    AlgebraElement mul_by_rational_elem(const AlgebraElement<Rational>& b) const {
        if (!parent_->same_as(*b.parent()))
            throw std::invalid_argument("AlgebraElement: parent mismatch");
        auto r = zero(parent_);
        for (size_t i = 0; i < comps_.size(); ++i) {
            const QPoly& f = parent_->factors()[i];
            size_t k = comps_[i].size();
            std::vector<R> prod(2 * k - 1, R());
            for (size_t s = 0; s < k; ++s) {
                const Rational& bc = b.components()[i][s];
                if (bc.is_zero()) continue;
                for (size_t t = 0; t < k; ++t)
                    prod[s + t] = prod[s + t] + scalar_mul(comps_[i][t], bc);
            }
            reduce_mod_factor(prod, f);
            prod.resize(k);
            r.comps_[i] = std::move(prod);
        }
        return r;
    }

    /// Trace of multiplication-by-this on the algebra as a module over R.
    R trace() const {
        R acc{};
        for (size_t i = 0; i < comps_.size(); ++i)
            for (size_t j = 0; j < comps_[i].size(); ++j)
                acc = acc + scalar_mul(comps_[i][j], parent_->power_sum(i, j));
        return acc;
    }

private:
    static std::vector<R> mul_mod(const std::vector<R>& a, const std::vector<R>& b,
                                  const QPoly& f) {
        size_t k = a.size();
        std::vector<R> prod(2 * k - 1, R());
        if (&a == &b) {  // squaring: only the s <= t half of the pairs
            for (size_t s = 0; s < k; ++s) {
                if (a[s].is_zero()) continue;
                for (size_t t = s; t < k; ++t) {
                    R x = a[s] * a[t];
                    if (s != t) x = x + x;
                    prod[s + t] = prod[s + t] + x;
                }
            }
        } else {
            for (size_t s = 0; s < k; ++s) {
                if (a[s].is_zero()) continue;
                for (size_t t = 0; t < k; ++t)
                    prod[s + t] = prod[s + t] + a[s] * b[t];
            }
        }
        reduce_mod_factor(prod, f);
        prod.resize(k);
        return prod;
    }

    static void reduce_mod_factor(std::vector<R>& v, const QPoly& f) {
        size_t k = static_cast<size_t>(f.degree());
        for (size_t i = v.size(); i-- > k;) {
            if (v[i].is_zero()) continue;
            // x^i = x^{i-k} * (x^k mod f) since f monic
            for (size_t j = 0; j < k; ++j)
                v[i - k + j] = v[i - k + j] - scalar_mul(v[i], f[j]);
            v[i] = R();
        }
    }

    void reduce_component(size_t i) {
        const QPoly& f = parent_->factors()[i];
        size_t k = static_cast<size_t>(f.degree());
        if (comps_[i].size() > k) {
            reduce_mod_factor(comps_[i], f);
        }
        comps_[i].resize(k, R());
    }

    void check_parent(const AlgebraElement& b) const {
        if (!parent_->same_as(*b.parent_))
            throw std::invalid_argument("AlgebraElement: parent mismatch");
    }

    AlgebraPtr parent_;
    std::vector<std::vector<R>> comps_;
};

/// Evaluates a polynomial with rational coefficients at an algebra element.
template <class R>
AlgebraElement<R> eval_poly(const QPoly& p, const AlgebraElement<R>& a) {
    auto acc = AlgebraElement<R>::zero(a.parent());
    for (long i = p.degree(); i >= 0; --i) {
        acc = acc * a;
        auto c = AlgebraElement<R>::one(a.parent()).scale_rational(p[static_cast<size_t>(i)]);
        acc = acc + c;
    }
    return acc;
}

/// Evaluates a polynomial with R coefficients at an algebra element over R.
template <class R>
AlgebraElement<R> eval_poly_r(const UniPoly<R>& p, const AlgebraElement<R>& a) {
    auto acc = AlgebraElement<R>::zero(a.parent());
    for (long i = p.degree(); i >= 0; --i) {
        acc = acc * a;
        auto one = AlgebraElement<R>::one(a.parent());
        for (auto& comp : one.mutable_components())
            comp[0] = comp[0] * p[static_cast<size_t>(i)];
        acc = acc + one;
    }
    return acc;
}

/// Characteristic polynomial of multiplication-by-a, degree n = deg(algebra),
/// computed from the power sums trace(a^j) via Newton's identities.
template <class R>
UniPoly<R> charpoly(const AlgebraElement<R>& a) {
    size_t n = a.parent()->degree();
    std::vector<R> p(n + 1);  // p[j] = trace(a^j), p[0] unused
    auto pow = AlgebraElement<R>::one(a.parent());
    for (size_t j = 1; j <= n; ++j) {
        pow = pow * a;
        p[j] = pow.trace();
    }
    std::vector<R> e(n + 1);
    e[0] = R(1);
    for (size_t j = 1; j <= n; ++j) {
        R acc{};
        for (size_t i = 1; i <= j; ++i) {
            R term = e[j - i] * p[i];
            acc = (i % 2 == 1) ? acc + term : acc - term;
        }
        e[j] = acc.div_int(static_cast<long>(j));
    }
    std::vector<R> coeffs(n + 1);
    for (size_t j = 0; j <= n; ++j) {
        R c = e[j];
        if (j % 2 == 1) c = R() - c;
        coeffs[n - j] = c;
    }
    return UniPoly<R>(std::move(coeffs));
}

/// The generic element sum z_i * alpha_i over the concatenated monomial
/// basis, with MultiPoly coefficients in variables z_1..z_n (0-indexed).
inline AlgebraElement<MultiPoly> generic_element(AlgebraPtr a) {
    auto e = AlgebraElement<MultiPoly>::zero(a);
    size_t var = 0;
    for (size_t i = 0; i < a->num_factors(); ++i)
        for (size_t j = 0; j < a->factor_degree(i); ++j)
            e.mutable_components()[i][j] = MultiPoly::variable(var++);
    return e;
}

/// Substitutes a rational tuple for the z-variables of an element over Q[z].
inline AlgebraElement<Rational> substitute_element(const AlgebraElement<MultiPoly>& a,
                                                   const std::vector<Rational>& t) {
    auto r = AlgebraElement<Rational>::zero(a.parent());
    for (size_t i = 0; i < a.components().size(); ++i)
        for (size_t j = 0; j < a.components()[i].size(); ++j)
            r.mutable_components()[i][j] = a.components()[i][j].substitute(t);
    return r;
}

inline QPoly substitute_poly(const UniPoly<MultiPoly>& p, const std::vector<Rational>& t) {
    std::vector<Rational> c(static_cast<size_t>(p.degree() + 1));
    for (size_t i = 0; i < c.size(); ++i) c[i] = p[i].substitute(t);
    return QPoly(std::move(c));
}

/// true iff every component of a is invertible modulo its factor.
inline bool is_unit(const AlgebraElement<Rational>& a) {
    for (size_t i = 0; i < a.components().size(); ++i) {
        QPoly comp{std::vector<Rational>(a.components()[i])};
        if (comp.is_zero()) return false;
        if (poly_gcd(comp, a.parent()->factors()[i]).degree() != 0) return false;
    }
    return true;
}

/// Quadratic extension in Kummer form: Omega[s]/(s^2 - delta), delta a unit.
class QuadExtension {
public:
    QuadExtension(AlgebraPtr base, AlgebraElement<Rational> delta)
        : base_(std::move(base)), delta_(std::move(delta)) {
        if (!base_->same_as(*delta_.parent()))
            throw std::invalid_argument("QuadExtension: delta not in base algebra");
        if (!is_unit(delta_))
            throw std::invalid_argument("QuadExtension: delta is not a unit");
    }

    const AlgebraPtr& base() const { return base_; }
    const AlgebraElement<Rational>& delta() const { return delta_; }
    size_t degree() const { return 2 * base_->degree(); }

private:
    AlgebraPtr base_;
    AlgebraElement<Rational> delta_;
};

/// Element a + b*s of a quadratic extension Omega[s]/(s^2 - delta).
template <class R>
struct QuadElement {
    AlgebraElement<R> even;  // a
    AlgebraElement<R> odd;   // b

    static QuadElement from_even(AlgebraElement<R> a) {
        auto z = AlgebraElement<R>::zero(a.parent());
        return {std::move(a), std::move(z)};
    }
    static QuadElement from_odd(AlgebraElement<R> b) {
        auto z = AlgebraElement<R>::zero(b.parent());
        return {std::move(z), std::move(b)};
    }

    friend bool operator==(const QuadElement& x, const QuadElement& y) {
        return x.even == y.even && x.odd == y.odd;
    }
};

template <class R>
QuadElement<R> quad_add(const QuadElement<R>& x, const QuadElement<R>& y) {
    return {x.even + y.even, x.odd + y.odd};
}

template <class R>
QuadElement<R> quad_sub(const QuadElement<R>& x, const QuadElement<R>& y) {
    return {x.even - y.even, x.odd - y.odd};
}

/// (a + bs)(c + ds) = (ac + delta*bd) + (ad + bc)s.
template <class R>
QuadElement<R> quad_mul(const QuadElement<R>& x, const QuadElement<R>& y,
                        const QuadExtension& ext) {
    auto even = x.even * y.even + (x.odd * y.odd).mul_by_rational_elem(ext.delta());
    auto odd = x.even * y.odd + x.odd * y.even;
    return {std::move(even), std::move(odd)};
}

/// Characteristic polynomial of a + bs on the rank-2n extension:
/// trace(a + bs) = 2 trace(a); Newton's identities in degree 2n.
template <class R>
UniPoly<R> quad_charpoly(const QuadElement<R>& x, const QuadExtension& ext) {
    size_t n2 = ext.degree();
    std::vector<R> p(n2 + 1);
    QuadElement<R> pow{AlgebraElement<R>::one(x.even.parent()),
                       AlgebraElement<R>::zero(x.even.parent())};
    for (size_t j = 1; j <= n2; ++j) {
        pow = quad_mul(pow, x, ext);
        R t = pow.even.trace();
        p[j] = t + t;
    }
    std::vector<R> e(n2 + 1);
    e[0] = R(1);
    for (size_t j = 1; j <= n2; ++j) {
        R acc{};
        for (size_t i = 1; i <= j; ++i) {
            R term = e[j - i] * p[i];
            acc = (i % 2 == 1) ? acc + term : acc - term;
        }
        e[j] = acc.div_int(static_cast<long>(j));
    }
    std::vector<R> coeffs(n2 + 1);
    for (size_t j = 0; j <= n2; ++j) {
        R c = e[j];
        if (j % 2 == 1) c = R() - c;
        coeffs[n2 - j] = c;
    }
    return UniPoly<R>(std::move(coeffs));
}

/// Result of the quadratic-twist generic construction: gamma generic,
/// alpha = delta * gamma^2 in Omega[z], beta = s * gamma in the extension.
struct QuadGeneric {
    AlgebraElement<MultiPoly> gamma;
    AlgebraElement<MultiPoly> alpha;
    QuadElement<MultiPoly> beta;
};

inline QuadGeneric quad_generic(const QuadExtension& ext) {
    auto gamma = generic_element(ext.base());
    auto alpha = (gamma * gamma).mul_by_rational_elem(ext.delta());
    auto beta = QuadElement<MultiPoly>::from_odd(gamma);
    return {std::move(gamma), std::move(alpha), std::move(beta)};
}

}  // namespace omegacurves

#endif
