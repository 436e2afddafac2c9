#ifndef OMEGACURVES_PERMGROUP_HPP
#define OMEGACURVES_PERMGROUP_HPP

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace omegacurves {

/// A permutation of {0..N-1} as its image vector.
using Perm = std::vector<int>;

inline Perm perm_identity(size_t n) {
    Perm p(n);
    for (size_t i = 0; i < n; ++i) p[i] = static_cast<int>(i);
    return p;
}

inline Perm perm_mul(const Perm& a, const Perm& b) {  // (a*b)(x) = a(b(x))
    Perm r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[static_cast<size_t>(b[i])];
    return r;
}

inline Perm perm_inv(const Perm& a) {
    Perm r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[static_cast<size_t>(a[i])] = static_cast<int>(i);
    return r;
}

/// Parses 1-based cycle notation, e.g. "(1 2 3)(4 5)"; commas allowed.
inline Perm parse_cycles(const std::string& s, size_t n) {
    Perm p = perm_identity(n);
    size_t i = 0;
    while (i < s.size()) {
        if (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == ',') {
            ++i;
            continue;
        }
        if (s[i] != '(') throw std::invalid_argument("parse_cycles: expected '('");
        ++i;
        std::vector<int> cyc;
        while (i < s.size() && s[i] != ')') {
            if (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == ',') {
                ++i;
                continue;
            }
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw std::invalid_argument("parse_cycles: expected digit");
            int v = 0;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                v = 10 * v + (s[i++] - '0');
            if (v < 1 || static_cast<size_t>(v) > n)
                throw std::invalid_argument("parse_cycles: point out of range");
            cyc.push_back(v - 1);
        }
        if (i >= s.size()) throw std::invalid_argument("parse_cycles: unterminated cycle");
        ++i;  // ')'
        for (size_t j = 0; j < cyc.size(); ++j)
            p[static_cast<size_t>(cyc[j])] = cyc[(j + 1) % cyc.size()];
    }
    return p;
}

/// A finite permutation group given by generators, with eagerly computed
/// element list (identity first) and conjugacy classes.
class FiniteGroup {
public:
    static constexpr size_t kDefaultOrderCap = 10000;

    FiniteGroup(size_t n, std::vector<Perm> generators, size_t order_cap = kDefaultOrderCap)
        : n_(n), gens_(std::move(generators)) {
        for (const auto& g : gens_)
            if (g.size() != n_) throw std::invalid_argument("FiniteGroup: generator arity");
        // breadth-first closure
        elements_.push_back(perm_identity(n_));
        index_.emplace(elements_[0], 0);
        for (size_t head = 0; head < elements_.size(); ++head) {
            Perm cur = elements_[head];
            for (const auto& g : gens_) {
                Perm nx = perm_mul(g, cur);
                if (index_.count(nx)) continue;
                if (elements_.size() >= order_cap)
                    throw std::domain_error("FiniteGroup: order cap exceeded");
                index_.emplace(nx, elements_.size());
                elements_.push_back(std::move(nx));
            }
        }
        build_classes();
    }

    size_t degree() const { return n_; }
    size_t order() const { return elements_.size(); }
    const std::vector<Perm>& elements() const { return elements_; }
    const std::vector<Perm>& generators() const { return gens_; }
    const Perm& element(size_t i) const { return elements_[i]; }

    bool contains(const Perm& p) const { return index_.count(p) != 0; }
    size_t index_of(const Perm& p) const {
        auto it = index_.find(p);
        if (it == index_.end()) throw std::invalid_argument("FiniteGroup: element not in group");
        return it->second;
    }

    size_t num_classes() const { return classes_.size(); }
    const std::vector<std::vector<size_t>>& classes() const { return classes_; }
    size_t class_of(size_t elem_index) const { return class_of_[elem_index]; }
    size_t class_size(size_t c) const { return classes_[c].size(); }
    const Perm& class_rep(size_t c) const { return elements_[classes_[c][0]]; }
    /// class of the inverses of class c
    size_t inverse_class(size_t c) const { return inverse_class_[c]; }

    size_t mul_index(size_t a, size_t b) const {
        return index_of(perm_mul(elements_[a], elements_[b]));
    }
    size_t inv_index(size_t a) const { return index_of(perm_inv(elements_[a])); }

    /// True iff every element of h lies in this group (same degree).
    bool has_subgroup(const FiniteGroup& h) const {
        if (h.degree() != n_) return false;
        for (const auto& p : h.elements())
            if (!contains(p)) return false;
        return true;
    }

    /// Exponent: lcm of element orders.
    size_t exponent() const {
        size_t e = 1;
        for (const auto& p : elements_) {
            size_t o = 1;
            Perm q = p;
            while (q != perm_identity(n_)) {
                q = perm_mul(p, q);
                ++o;
            }
            e = std::lcm(e, o);
        }
        return e;
    }

    // ---- standard groups ----
    static FiniteGroup symmetric(size_t n) {
        if (n == 1) return FiniteGroup(1, {});
        std::vector<Perm> g;
        Perm t = perm_identity(n);
        std::swap(t[0], t[1]);
        g.push_back(t);
        if (n > 2) {
            Perm c(n);
            for (size_t i = 0; i < n; ++i) c[i] = static_cast<int>((i + 1) % n);
            g.push_back(c);
        }
        return FiniteGroup(n, std::move(g));
    }

    static FiniteGroup alternating(size_t n) {
        if (n < 3) return FiniteGroup(n, {});
        std::vector<Perm> g;
        for (size_t i = 0; i + 2 < n; ++i) {
            Perm p = perm_identity(n);
            p[i] = static_cast<int>(i + 1);
            p[i + 1] = static_cast<int>(i + 2);
            p[i + 2] = static_cast<int>(i);
            g.push_back(std::move(p));
        }
        return FiniteGroup(n, std::move(g));
    }

    static FiniteGroup cyclic(size_t n) {
        Perm c(n);
        for (size_t i = 0; i < n; ++i) c[i] = static_cast<int>((i + 1) % n);
        return FiniteGroup(n, {c});
    }

    static FiniteGroup trivial(size_t n) { return FiniteGroup(n, {}); }

    /// The wreath product mu_2 wr S_k acting on 2k points paired as
    /// (2i, 2i+1): sign flips swap within a pair, S_k permutes the pairs.
    static FiniteGroup wreath_mu2_Sk(size_t k) {
        size_t n = 2 * k;
        std::vector<Perm> g;
        Perm flip = perm_identity(n);
        std::swap(flip[0], flip[1]);
        g.push_back(flip);
        if (k > 1) {
            Perm t = perm_identity(n);  // swap pair 0 and pair 1
            std::swap(t[0], t[2]);
            std::swap(t[1], t[3]);
            g.push_back(t);
        }
        if (k > 2) {
            Perm c(n);  // cycle the pairs
            for (size_t i = 0; i < k; ++i) {
                c[2 * i] = static_cast<int>(2 * ((i + 1) % k));
                c[2 * i + 1] = static_cast<int>(2 * ((i + 1) % k) + 1);
            }
            g.push_back(c);
        }
        return FiniteGroup(n, std::move(g));
    }

    /// Subgroup generated by the given elements, closed inside this group.
    FiniteGroup subgroup(std::vector<Perm> generators) const {
        for (const auto& p : generators)
            if (!contains(p)) throw std::invalid_argument("subgroup: generator not in group");
        return FiniteGroup(n_, std::move(generators), order());
    }

    /// Stabilizer of a single point.
    FiniteGroup point_stabilizer(int point) const {
        std::vector<Perm> g;
        for (const auto& p : elements_)
            if (p[static_cast<size_t>(point)] == point) g.push_back(p);
        return FiniteGroup(n_, std::move(g), order());
    }

private:
    void build_classes() {
        size_t m = elements_.size();
        class_of_.assign(m, SIZE_MAX);
        for (size_t i = 0; i < m; ++i) {
            if (class_of_[i] != SIZE_MAX) continue;
            size_t cid = classes_.size();
            classes_.emplace_back();
            std::vector<size_t> stack{i};
            class_of_[i] = cid;
            while (!stack.empty()) {
                size_t cur = stack.back();
                stack.pop_back();
                classes_[cid].push_back(cur);
                for (const auto& g : gens_) {
                    Perm conj = perm_mul(perm_mul(g, elements_[cur]), perm_inv(g));
                    size_t j = index_of(conj);
                    if (class_of_[j] == SIZE_MAX) {
                        class_of_[j] = cid;
                        stack.push_back(j);
                    }
                }
            }
            std::sort(classes_[cid].begin(), classes_[cid].end());
        }
        inverse_class_.resize(classes_.size());
        for (size_t c = 0; c < classes_.size(); ++c)
            inverse_class_[c] = class_of_[inv_index(classes_[c][0])];
    }

    size_t n_;
    std::vector<Perm> gens_;
    std::vector<Perm> elements_;
    std::map<Perm, size_t> index_;
    std::vector<std::vector<size_t>> classes_;
    std::vector<size_t> class_of_;
    std::vector<size_t> inverse_class_;
};

}  // namespace omegacurves

#endif
