#ifndef OMEGACURVES_CHARACTERS_HPP
#define OMEGACURVES_CHARACTERS_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "permgroup.hpp"
#include "rational.hpp"

namespace omegacurves {

/// A rational class function on a finite group, indexed by conjugacy class
/// (class 0 is the identity class, so values[0] is the dimension for
/// genuine characters).
struct ClassFunction {
    const FiniteGroup* group = nullptr;
    std::vector<Rational> values;

    Rational dimension() const { return values.at(group->class_of(0)); }

    friend ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) {
        check_same(a, b);
        ClassFunction r = a;
        for (size_t i = 0; i < r.values.size(); ++i) r.values[i] = r.values[i] + b.values[i];
        return r;
    }
    friend ClassFunction operator-(const ClassFunction& a, const ClassFunction& b) {
        check_same(a, b);
        ClassFunction r = a;
        for (size_t i = 0; i < r.values.size(); ++i) r.values[i] = r.values[i] - b.values[i];
        return r;
    }
    ClassFunction scaled(const Rational& c) const {
        ClassFunction r = *this;
        for (auto& v : r.values) v = v * c;
        return r;
    }
    friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
        return a.group == b.group && a.values == b.values;
    }

    static void check_same(const ClassFunction& a, const ClassFunction& b) {
        if (a.group != b.group)
            throw std::invalid_argument("ClassFunction: group mismatch");
    }
};

inline ClassFunction trivial_character(const FiniteGroup& g) {
    return {&g, std::vector<Rational>(g.num_classes(), Rational(1))};
}

inline ClassFunction zero_character(const FiniteGroup& g) {
    return {&g, std::vector<Rational>(g.num_classes(), Rational(0))};
}

/// <a, b> = (1/|G|) sum over G of a(g) b(g^{-1}); for rational characters
/// b(g^{-1}) = b(g), but we use the inverse class to stay correct for any
/// rational class function.
inline Rational inner_product(const ClassFunction& a, const ClassFunction& b) {
    ClassFunction::check_same(a, b);
    const FiniteGroup& g = *a.group;
    Rational s(0);
    for (size_t c = 0; c < g.num_classes(); ++c)
        s = s + Rational(static_cast<long>(g.class_size(c))) * a.values[c] *
                    b.values[g.inverse_class(c)];
    return s / Rational(static_cast<long>(g.order()));
}

/// Character of the permutation module Q[G/H]: chi(g) = #cosets xH with
/// g xH = xH, i.e. x^{-1} g x in H.
inline ClassFunction perm_character(const FiniteGroup& g, const FiniteGroup& h) {
    if (!g.has_subgroup(h)) throw std::invalid_argument("perm_character: H is not a subgroup");
    // coset decomposition: coset id for each element
    size_t n = g.order();
    std::vector<size_t> coset(n, SIZE_MAX);
    std::vector<size_t> reps;
    for (size_t i = 0; i < n; ++i) {
        if (coset[i] != SIZE_MAX) continue;
        size_t cid = reps.size();
        reps.push_back(i);
        for (const auto& hp : h.elements())
            coset[g.index_of(perm_mul(g.element(i), hp))] = cid;
    }
    ClassFunction chi{&g, std::vector<Rational>(g.num_classes(), Rational(0))};
    for (size_t c = 0; c < g.num_classes(); ++c) {
        size_t gi = g.classes()[c][0];
        long fixed = 0;
        for (size_t cid = 0; cid < reps.size(); ++cid)
            if (coset[g.mul_index(gi, reps[cid])] == cid) ++fixed;
        chi.values[c] = Rational(fixed);
    }
    return chi;
}

/// V(L/K) as a character: Q[G/H] minus the trivial module.
inline ClassFunction v_module(const FiniteGroup& g, const FiniteGroup& h) {
    return perm_character(g, h) - trivial_character(g);
}

/// V(Omega/K) for Omega = L_1 x ... x L_r with Galois data H_1..H_r:
/// (r-1) copies of the trivial module plus the sum of the V(L_i/K).
inline ClassFunction v_etale(const FiniteGroup& g, const std::vector<const FiniteGroup*>& hs) {
    if (hs.empty()) throw std::invalid_argument("v_etale: need at least one factor");
    ClassFunction r = trivial_character(g).scaled(Rational(static_cast<long>(hs.size() - 1)));
    for (const FiniteGroup* h : hs) r = r + v_module(g, *h);
    return r;
}

/// Induction of a class function on H up to G:
/// (Ind f)(g) = (1/|H|) * sum over x in G with x^{-1} g x in H of f(x^{-1} g x).
inline ClassFunction induce(const FiniteGroup& g, const FiniteGroup& h, const ClassFunction& f) {
    if (f.group != &h) throw std::invalid_argument("induce: class function not on H");
    if (!g.has_subgroup(h)) throw std::invalid_argument("induce: H is not a subgroup");
    ClassFunction r{&g, std::vector<Rational>(g.num_classes(), Rational(0))};
    for (size_t c = 0; c < g.num_classes(); ++c) {
        const Perm& rep = g.class_rep(c);
        Rational s(0);
        for (const auto& x : g.elements()) {
            Perm conj = perm_mul(perm_mul(perm_inv(x), rep), x);
            if (!h.contains(conj)) continue;
            s = s + f.values[h.class_of(h.index_of(conj))];
        }
        r.values[c] = s / Rational(static_cast<long>(h.order()));
    }
    return r;
}

/// Restriction of a class function on G to H.
inline ClassFunction restrict_to(const FiniteGroup& h, const ClassFunction& f) {
    const FiniteGroup& g = *f.group;
    if (!g.has_subgroup(h)) throw std::invalid_argument("restrict_to: H is not a subgroup");
    ClassFunction r{&h, std::vector<Rational>(h.num_classes(), Rational(0))};
    for (size_t c = 0; c < h.num_classes(); ++c)
        r.values[c] = f.values[g.class_of(g.index_of(h.class_rep(c)))];
    return r;
}

/// One factor of a quadratic-extension pattern: the field L_i (subgroup
/// H_i) together with either a split doubling C_i = L_i x L_i or a
/// quadratic field extension C_i with Galois data K_i of index 2 in H_i.
struct QuadFactor {
    const FiniteGroup* h = nullptr;  // H_i, Galois data of L_i
    const FiniteGroup* k = nullptr;  // K_i <= H_i of index 2, or null = split
};

struct QuadIdentityResult {
    bool holds = false;
    ClassFunction v_tilde_over_omega;  // V(Omega~/Omega) = V(Omega~/K) - V(Omega/K)
};

/// Verifies V(Omega~/K) - V(Omega/K) = sum_i Ind_{H_i}^{G} V(C_i/L_i) as
/// characters (split doubling contributes Ind of the trivial H_i-module,
/// a quadratic extension contributes Ind of the index-2 sign module).
inline QuadIdentityResult check_quad_identity(const FiniteGroup& g,
                                              const std::vector<QuadFactor>& pattern) {
    std::vector<const FiniteGroup*> omega_list, tilde_list;
    ClassFunction rhs = zero_character(g);
    for (const auto& f : pattern) {
        if (!f.h) throw std::invalid_argument("check_quad_identity: missing H_i");
        omega_list.push_back(f.h);
        if (!f.k) {
            tilde_list.push_back(f.h);
            tilde_list.push_back(f.h);
            rhs = rhs + induce(g, *f.h, trivial_character(*f.h));
        } else {
            if (!f.h->has_subgroup(*f.k) || f.h->order() != 2 * f.k->order())
                throw std::invalid_argument("check_quad_identity: K_i must have index 2 in H_i");
            tilde_list.push_back(f.k);
            rhs = rhs + induce(g, *f.h, v_module(*f.h, *f.k));
        }
    }
    ClassFunction lhs = v_etale(g, tilde_list) - v_etale(g, omega_list);
    return {lhs == rhs, lhs};
}

/// Rank-growth bounds from a realized character: for a chain of subgroups
/// G = U_0 >= U_1 >= ... >= U_s (U_j = Gal over the field F_j, F_0 = K),
/// the fixed-vector dimension over F_j is <Res_{U_j} chi, 1>, and each
/// consecutive difference lower-bounds the rank growth from F_j to F_{j+1}.
struct RankGrowthReport {
    std::vector<Rational> fixed_dims;  // per chain entry
    std::vector<Rational> growth;      // consecutive differences
};

inline RankGrowthReport rank_growth_report(const ClassFunction& realized,
                                           const std::vector<const FiniteGroup*>& chain) {
    RankGrowthReport rep;
    for (const FiniteGroup* u : chain) {
        ClassFunction res = restrict_to(*u, realized);
        rep.fixed_dims.push_back(inner_product(res, trivial_character(*u)));
    }
    for (size_t i = 0; i + 1 < rep.fixed_dims.size(); ++i)
        rep.growth.push_back(rep.fixed_dims[i + 1] - rep.fixed_dims[i]);
    return rep;
}

}  // namespace omegacurves

#endif
