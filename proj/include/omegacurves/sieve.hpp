#ifndef OMEGACURVES_SIEVE_HPP
#define OMEGACURVES_SIEVE_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ecgroup.hpp"
#include "lattice.hpp"
#include "specialize.hpp"

namespace omegacurves {

/// Genus-1 model y^2 = q(x) over F_p (deg q = 3 or 4, separable) together
/// with a birational map onto a short Weierstrass curve. For deg 4 the map
/// is the classical quartic-with-point reduction through a base point with
/// nonzero ordinate; the base maps to the origin. As divisor classes the
/// image of a point P is [P - base], so differences of images do not depend
/// on the base choice.
class FpGenusOneMap {
public:
    /// base = (u0, v0) with v0^2 = q(u0), v0 != 0; required iff deg q = 4.
    FpGenusOneMap(const FpPoly& q, std::optional<std::pair<Fp, Fp>> base)
        : p_(q.leading().modulus()), quartic_(q.degree() == 4) {
        if (q.degree() != 3 && q.degree() != 4)
            throw std::invalid_argument("FpGenusOneMap: degree must be 3 or 4");
        Fp a1(0, p_), a2(0, p_), a3(0, p_), a4(0, p_), a6(0, p_);
        if (quartic_) {
            if (!base) throw std::invalid_argument("FpGenusOneMap: quartic needs a base point");
            u0_ = base->first;
            v0_ = base->second;
            if (v0_.is_zero())
                throw std::invalid_argument("FpGenusOneMap: base ordinate must be nonzero");
            if (!(v0_ * v0_ - q(u0_)).is_zero())
                throw std::invalid_argument("FpGenusOneMap: base point not on curve");
            FpPoly shifted = taylor_shift(q, u0_);
            Fp a = shifted[4], b = shifted[3];
            c_ = shifted[2];
            d_ = shifted[1];
            a1 = d_ / v0_;
            a2 = c_ - d_ * d_ / (Fp(4) * v0_ * v0_);
            a3 = Fp(2) * v0_ * b;
            a4 = -(Fp(4) * v0_ * v0_ * a);
            a6 = a2 * a4;
        } else {
            lc_ = q[3];
            a2 = q[2];
            a4 = q[1] * lc_;
            a6 = q[0] * lc_ * lc_;
        }
        a1_ = a1;
        a3_ = a3;
        b2_ = a1 * a1 + Fp(4) * a2;
        Fp b4 = Fp(2) * a4 + a1 * a3;
        Fp b6 = a3 * a3 + Fp(4) * a6;
        Fp c4 = b2_ * b2_ - Fp(24) * b4;
        Fp c6 = -(b2_ * b2_ * b2_) + Fp(36) * b2_ * b4 - Fp(216) * b6;
        Fp A = -(Fp(27) * c4), B = -(Fp(54) * c6);
        curve_.emplace(A.value(), B.value(), p_);
    }

    const ECurve& curve() const { return *curve_; }

    /// Maps an affine point (u, v) with v^2 = q(u). The quartic base point
    /// maps to infinity; its opposite (same u, v = -v0) needs a blowup the
    /// caller must avoid (throws domain_error).
    ECPoint map(const Fp& u, const Fp& v) const {
        Fp x(0, p_), y(0, p_);
        if (quartic_) {
            Fp t = u - u0_;
            if (t.is_zero()) {
                if ((v - v0_).is_zero()) return ECPoint::infinity();
                throw std::domain_error("FpGenusOneMap: opposite point over base x");
            }
            Fp t2 = t * t, t3 = t2 * t;
            x = (Fp(2) * v0_ * (v + v0_) + d_ * t) / t2;
            y = (Fp(4) * v0_ * v0_ * (v + v0_) + Fp(2) * v0_ * (c_ * t2 + d_ * t) -
                 d_ * d_ * t2 / (Fp(2) * v0_)) /
                t3;
        } else {
            x = lc_ * u;
            y = lc_ * v;
        }
        Fp X = Fp(36) * x + Fp(3) * b2_;
        Fp Y = Fp(216) * y + Fp(108) * (a1_ * x + a3_);
        ECPoint r = ECPoint::affine(X.value(), Y.value());
        if (!curve_->contains(r)) throw std::logic_error("FpGenusOneMap: image not on curve");
        return r;
    }

    static FpPoly taylor_shift(const FpPoly& q, const Fp& u0) {
        std::vector<Fp> c(static_cast<size_t>(q.degree()) + 1, Fp(0));
        FpPoly rem = q;
        FpPoly lin(std::vector<Fp>{-u0, Fp(1)});
        for (size_t i = 0; i < c.size(); ++i) {
            auto [quo, r] = FpPoly::divmod(rem, lin);
            if (!r.is_zero()) c[i] = r[0];
            rem = quo;
        }
        return FpPoly(std::move(c));
    }

private:
    uint64_t p_;
    bool quartic_;
    Fp u0_, v0_, c_, d_;  // quartic data
    Fp lc_;               // cubic data
    Fp a1_, a3_, b2_;
    std::optional<ECurve> curve_;
};

/// One good-reduction prime: the elliptic group over F_p, the reduced
/// marked points, and the difference classes [P_i - P_0], i >= 1.
struct ReducedCurve {
    uint64_t p = 0;
    ECGroup group;
    std::vector<ECPoint> points;
    std::vector<ECPoint> differences;
};

namespace detail {

/// Scalar multiple with a signed coefficient.
inline ECPoint mul_signed(const ECurve& e, long c, const ECPoint& q) {
    ECPoint r = e.mul(static_cast<uint64_t>(c < 0 ? -c : c), q);
    return c < 0 ? e.negate(r) : r;
}

}  // namespace detail

/// Reduces a genus-1 model y^2 = q(x) with marked points mod p and computes
/// the group structure and difference classes. Returns nullopt when p is
/// unusable (bad reduction, coordinate denominators divisible by p, no base
/// point with nonzero ordinate, or colliding abscissas under the quartic
/// map). base_preference selects which marked point anchors the quartic
/// transform when usable; the difference classes do not depend on it.
inline std::optional<ReducedCurve> reduce_marked_points_mod_p(const QPoly& q,
                                                              const std::vector<MarkedPoint>& pts,
                                                              uint64_t p,
                                                              size_t base_preference = 0) {
    if (p < 5 || !is_prime_u64(p)) return std::nullopt;
    FpPoly qp;
    if (!reduce_poly_mod_p(q, p, qp)) return std::nullopt;
    if (poly_gcd(qp, qp.derivative()).degree() != 0) return std::nullopt;

    std::vector<std::pair<Fp, Fp>> rpts;
    try {
        for (const auto& pt : pts)
            rpts.emplace_back(Fp(reduce_mod(pt.x, p), p), Fp(reduce_mod(pt.y, p), p));
    } catch (const std::domain_error&) {
        return std::nullopt;
    }
    for (const auto& [u, v] : rpts)
        if (!(v * v - qp(u)).is_zero())
            throw std::logic_error("reduce_marked_points_mod_p: reduced point off curve");

    std::optional<std::pair<Fp, Fp>> base;
    if (qp.degree() == 4) {
        size_t n = rpts.size();
        for (size_t off = 0; off < n && !base; ++off) {
            const auto& cand = rpts[(base_preference + off) % n];
            if (cand.second.is_zero()) continue;
            bool collision = false;  // another point over the same abscissa
            for (const auto& other : rpts)
                if ((other.first - cand.first).is_zero() &&
                    !(other.second - cand.second).is_zero())
                    collision = true;
            if (!collision) base = cand;
        }
        if (!base) return std::nullopt;
    }

    FpGenusOneMap fmap(qp, base);
    ReducedCurve rc{p, ec_group_structure(fmap.curve()), {}, {}};
    for (const auto& [u, v] : rpts) rc.points.push_back(fmap.map(u, v));
    for (size_t i = 1; i < rc.points.size(); ++i)
        rc.differences.push_back(fmap.curve().sub(rc.points[i], rc.points[0]));
    return rc;
}

/// Reduction driver for a specialized curve. When every marked point is
/// already rational (split case) the points reduce directly; otherwise (y^2
/// = l(x) models only) p must split m_t completely and the points are
/// recovered as (r, h_t(r)) over the roots r of m_t mod p, sorted ascending.
inline std::optional<ReducedCurve> reduce_points_mod_p(const SpecializedCurve& sc, uint64_t p,
                                                       size_t base_preference = 0) {
    if (sc.genus != 1) throw std::invalid_argument("reduce_points_mod_p: genus must be 1");
    auto pts = sc.marked_points();
    if (pts.size() == static_cast<size_t>(sc.m.degree()))
        return reduce_marked_points_mod_p(sc.curve_poly, pts, p, base_preference);
    if (sc.kind != CurveKind::X1)
        throw std::invalid_argument(
            "reduce_points_mod_p: non-rational divisor supported only on y^2 = l(x) models");
    if (p < 5 || !is_prime_u64(p)) return std::nullopt;
    FpPoly mp, hp;
    if (!reduce_poly_mod_p(sc.m, p, mp) || !reduce_poly_mod_p(sc.h, p, hp)) return std::nullopt;
    if (poly_gcd(mp, mp.derivative()).degree() != 0) return std::nullopt;
    std::vector<uint64_t> roots;
    for (uint64_t r = 0; r < p; ++r)
        if (mp(Fp(r, p)).is_zero()) roots.push_back(r);
    if (roots.size() != static_cast<size_t>(mp.degree())) return std::nullopt;  // not split
    std::vector<std::pair<Fp, Fp>> rpts;
    for (uint64_t r : roots) rpts.emplace_back(Fp(r, p), hp(Fp(r, p)));
    // inline the tail of reduce_marked_points_mod_p on the F_p points
    FpPoly qp;
    if (!reduce_poly_mod_p(sc.curve_poly, p, qp)) return std::nullopt;
    if (poly_gcd(qp, qp.derivative()).degree() != 0) return std::nullopt;
    std::optional<std::pair<Fp, Fp>> base;
    size_t n = rpts.size();
    for (size_t off = 0; off < n && !base; ++off) {
        const auto& cand = rpts[(base_preference + off) % n];
        if (!cand.second.is_zero()) base = cand;  // abscissas are distinct roots
    }
    if (qp.degree() == 4 && !base) return std::nullopt;
    FpGenusOneMap fmap(qp, qp.degree() == 4 ? base : std::nullopt);
    ReducedCurve rc{p, ec_group_structure(fmap.curve()), {}, {}};
    for (const auto& [u, v] : rpts) rc.points.push_back(fmap.map(u, v));
    for (size_t i = 1; i < rc.points.size(); ++i)
        rc.differences.push_back(fmap.curve().sub(rc.points[i], rc.points[0]));
    return rc;
}

/// The integer lattice of relations satisfied by the given points of
/// E = Z/a x Z/b: all (c_1..c_k) with sum c_l Q_l = 0, via the left kernel
/// of the stacked dlog matrix augmented by the group relations, projected
/// to the first k coordinates. Always full rank (contains |E| Z^k).
inline ZMat relation_lattice_mod_p(const ECGroup& g, const std::vector<ECPoint>& classes,
                                   std::vector<std::pair<uint64_t, uint64_t>>* dlogs_out = nullptr) {
    size_t k = classes.size();
    ZMat m(k + 2, ZVec(2, 0));
    for (size_t l = 0; l < k; ++l) {
        auto [i, j] = g.dlog(classes[l]);
        if (dlogs_out) dlogs_out->emplace_back(i, j);
        m[l][0] = mpz_class(static_cast<unsigned long>(i));
        m[l][1] = mpz_class(static_cast<unsigned long>(j));
    }
    m[k][0] = mpz_class(static_cast<unsigned long>(g.a));
    m[k + 1][1] = mpz_class(static_cast<unsigned long>(g.b));
    ZMat kern = left_kernel(m);
    ZMat proj;
    for (auto& row : kern) proj.emplace_back(row.begin(), row.begin() + static_cast<long>(k));
    return hermite_normal_form(std::move(proj));
}

struct SieveOptions {
    long coeff_bound = 5;
    size_t prime_budget = 200;
    uint64_t prime_max = 100000;
    uint64_t first_prime = 5;
    size_t base_preference = 0;
    /// Each sieved class as integer combination of the difference classes
    /// [P_{i+1} - P_0]; empty = the identity plan (one class per difference).
    std::vector<std::vector<long>> class_plan;
};

struct SievePrimeRecord {
    uint64_t p = 0, a = 0, b = 0;
    std::vector<std::pair<uint64_t, uint64_t>> dlogs;
};

struct SieveResult {
    bool conclusive = false;
    std::string verdict;  // "no-relation-up-to-B" or "inconclusive"
    long coeff_bound = 0;
    ZMat lattice;                        // intersection over sampled primes
    std::optional<ZVec> short_relation;  // surviving vector with max-norm <= B
    std::vector<SievePrimeRecord> provenance;
};

/// Intersects per-prime relation lattices over ascending good primes until
/// no nonzero vector of max-norm <= B survives (conclusive; sound because a
/// true rational relation lies in every per-prime lattice, so it can never
/// be sieved away) or the prime budget runs out (inconclusive).
inline SieveResult independence_sieve_points(const QPoly& q, const std::vector<MarkedPoint>& pts,
                                             const SieveOptions& opt = {}) {
    if (pts.size() < 2)
        throw std::invalid_argument("independence_sieve: need at least two marked points");
    size_t ndiff = pts.size() - 1;
    size_t k = opt.class_plan.empty() ? ndiff : opt.class_plan.size();
    for (const auto& row : opt.class_plan)
        if (row.size() != ndiff)
            throw std::invalid_argument("independence_sieve: class plan width mismatch");

    SieveResult res;
    res.coeff_bound = opt.coeff_bound;
    ZMat lattice(k, ZVec(k, 0));
    for (size_t i = 0; i < k; ++i) lattice[i][i] = 1;

    size_t used = 0;
    for (uint64_t p = opt.first_prime; p <= opt.prime_max && used < opt.prime_budget; ++p) {
        if (!is_prime_u64(p)) continue;
        auto rc = reduce_marked_points_mod_p(q, pts, p, opt.base_preference);
        if (!rc) continue;
        std::vector<ECPoint> classes;
        if (opt.class_plan.empty()) {
            classes = rc->differences;
        } else {
            const ECurve& e = rc->group.curve;
            for (const auto& row : opt.class_plan) {
                ECPoint s = ECPoint::infinity();
                for (size_t i = 0; i < ndiff; ++i)
                    if (row[i] != 0) s = e.add(s, detail::mul_signed(e, row[i], rc->differences[i]));
                classes.push_back(s);
            }
        }
        SievePrimeRecord rec;
        rec.p = p;
        rec.a = rc->group.a;
        rec.b = rc->group.b;
        ZMat plat = relation_lattice_mod_p(rc->group, classes, &rec.dlogs);
        lattice = lattice_intersection(lattice, plat);
        res.provenance.push_back(std::move(rec));
        ++used;
        if (!short_vector_at_most(lattice, opt.coeff_bound)) {
            res.conclusive = true;  // intersections only shrink: verdict is stable
            break;
        }
    }
    res.lattice = lattice;
    res.short_relation = short_vector_at_most(lattice, opt.coeff_bound);
    res.verdict = res.conclusive ? "no-relation-up-to-" + std::to_string(opt.coeff_bound)
                                 : "inconclusive";
    return res;
}

inline SieveResult independence_sieve(const SpecializedCurve& sc, const SieveOptions& opt = {}) {
    if (sc.genus != 1) throw std::invalid_argument("independence_sieve: genus must be 1");
    auto pts = sc.marked_points();
    if (pts.size() == static_cast<size_t>(sc.m.degree()))
        return independence_sieve_points(sc.curve_poly, pts, opt);
    // non-rational divisor: fold primes through the split-prime reduction
    SieveResult res;
    res.coeff_bound = opt.coeff_bound;
    size_t k = 0;
    ZMat lattice;
    size_t used = 0;
    for (uint64_t p = opt.first_prime; p <= opt.prime_max && used < opt.prime_budget; ++p) {
        if (!is_prime_u64(p)) continue;
        auto rc = reduce_points_mod_p(sc, p, opt.base_preference);
        if (!rc) continue;
        if (lattice.empty()) {
            k = rc->differences.size();
            lattice.assign(k, ZVec(k, 0));
            for (size_t i = 0; i < k; ++i) lattice[i][i] = 1;
        }
        SievePrimeRecord rec;
        rec.p = p;
        rec.a = rc->group.a;
        rec.b = rc->group.b;
        ZMat plat = relation_lattice_mod_p(rc->group, rc->differences, &rec.dlogs);
        lattice = lattice_intersection(lattice, plat);
        res.provenance.push_back(std::move(rec));
        ++used;
        if (!short_vector_at_most(lattice, opt.coeff_bound)) {
            res.conclusive = true;
            break;
        }
    }
    res.lattice = lattice;
    if (!lattice.empty()) res.short_relation = short_vector_at_most(lattice, opt.coeff_bound);
    res.verdict = res.conclusive ? "no-relation-up-to-" + std::to_string(opt.coeff_bound)
                                 : "inconclusive";
    return res;
}

/// Report for the decomposition diagram on a y^2 = l(x^2) specialization:
/// point-level exactness of phi1 (x,y) -> (x^2, y) onto the y^2 = l(x)
/// divisor and phi2 (x,y) -> (x^2, xy) onto the y^2 = x l(x) divisor,
/// tau-invariance, and the sieve dimension comparison dim3 = dim2 + dim1
/// when every genus-1 member's sieve is conclusive (genus-0 members have
/// trivial Jacobian and contribute dimension 0).
struct IsogenyReport {
    bool phi1_exact = false;
    bool phi2_exact = false;
    bool tau_invariant = false;
    size_t genus1 = 0, genus2 = 0, genus3 = 0;
    std::optional<size_t> dim1, dim2, dim3;  // nullopt: genus != 1 or inconclusive
    bool dims_all_conclusive = false;
    bool dim_identity_holds = false;
    std::string note;
};

inline IsogenyReport isogeny_decomposition_check(const SpecializedCurve& sc3,
                                                 const SieveOptions& opt = {}) {
    if (sc3.kind != CurveKind::X3)
        throw std::invalid_argument("isogeny_decomposition_check: expects a y^2 = l(x^2) member");
    IsogenyReport rep;
    size_t d = sc3.d;
    rep.genus3 = d - 1;
    rep.genus1 = (d - 1) / 2;
    rep.genus2 = d / 2;

    auto r3 = sc3.marked_points();
    std::vector<MarkedPoint> p1, p2;  // phi1 and phi2 images
    bool phi1_ok = !r3.empty(), phi2_ok = !r3.empty(), tau_ok = !r3.empty();
    for (const auto& r : r3) {
        Rational u = r.x * r.x;
        Rational v1 = r.y;            // phi1
        Rational v2 = r.x * r.y;      // phi2
        Rational hu = sc3.h(u);
        if (!sc3.m(u).is_zero() || !(v1 == hu || v1 == -hu)) phi1_ok = false;
        if (!(v2 * v2 == u * hu * hu)) phi2_ok = false;
        // tau: (x, y) -> (-x, y); phi1 ∘ tau = phi1, phi2 ∘ tau = -phi2
        Rational tu = (-r.x) * (-r.x);
        if (!(tu == u)) tau_ok = false;
        p1.push_back({u, v1});
        p2.push_back({u, v2});
    }
    // "onto": images must exhaust the marked abscissas, i.e. be pairwise
    // distinct and as numerous as the roots of m (full split case)
    if (r3.size() == static_cast<size_t>(sc3.m.degree())) {
        auto xs = p1;
        std::sort(xs.begin(), xs.end(),
                  [](const MarkedPoint& a, const MarkedPoint& b) { return a.x < b.x; });
        for (size_t i = 0; i + 1 < xs.size(); ++i)
            if (xs[i].x == xs[i + 1].x) phi1_ok = phi2_ok = false;
    } else {
        rep.note = "partial divisor: onto-check restricted to rational points";
    }
    rep.phi1_exact = phi1_ok;
    rep.phi2_exact = phi2_ok;
    rep.tau_invariant = tau_ok;

    QPoly ell1 = sc3.ell;
    QPoly ell2 = defining_polynomial(CurveKind::X2, sc3.ell);
    auto sieve_dim = [&](const QPoly& q, const std::vector<MarkedPoint>& pts,
                         size_t genus) -> std::optional<size_t> {
        if (genus == 0) return 0;  // trivial Jacobian
        if (genus != 1) return std::nullopt;
        if (pts.size() < 2) return std::nullopt;
        SieveResult sr = independence_sieve_points(q, pts, opt);
        if (!sr.conclusive) return std::nullopt;
        return pts.size() - 1;
    };
    rep.dim1 = sieve_dim(ell1, p1, rep.genus1);
    rep.dim2 = sieve_dim(ell2, p2, rep.genus2);
    rep.dim3 = sieve_dim(sc3.curve_poly, r3, rep.genus3);
    rep.dims_all_conclusive = rep.dim1 && rep.dim2 && rep.dim3;
    if (rep.dims_all_conclusive) rep.dim_identity_holds = (*rep.dim3 == *rep.dim1 + *rep.dim2);
    return rep;
}

}  // namespace omegacurves

#endif
