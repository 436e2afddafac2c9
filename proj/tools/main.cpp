// omegacurves command-line front end: construct / specialize / verify /
// sieve / modules. Emits JSON records; exit codes: 0 ok, 2 validation
// error, 3 capacity exceeded, 4 requested certification inconclusive.

#include <cctype>
#include <cstdio>
#include <deque>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "omegacurves/characters.hpp"
#include "omegacurves/constructions.hpp"
#include "omegacurves/dixon.hpp"
#include "omegacurves/etale.hpp"
#include "omegacurves/galois_cert.hpp"
#include "omegacurves/permgroup.hpp"
#include "omegacurves/sieve.hpp"
#include "omegacurves/specialize.hpp"
#include "omegacurves/weierstrass.hpp"

using json = nlohmann::ordered_json;
using namespace omegacurves;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitInconclusive = 4;

struct CliError {
    int code;
    std::string message;
};

// ---------------------------------------------------------------- parsing

QPoly parse_qpoly(const std::string& input) {
    std::string s;
    for (char c : input)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw CliError{kExitValidation, "empty polynomial"};
    std::map<size_t, Rational> coef;
    size_t i = 0;
    auto fail = [&]() -> void {
        throw CliError{kExitValidation, "cannot parse polynomial '" + input + "'"};
    };
    while (i < s.size()) {
        long sign = 1;
        while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            if (s[i] == '-') sign = -sign;
            ++i;
        }
        if (i >= s.size()) fail();
        std::string num;
        while (i < s.size() &&
               (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/'))
            num += s[i++];
        if (i < s.size() && s[i] == '*') ++i;  // allow 2*x
        Rational c = num.empty() ? Rational(1) : Rational::parse(num);
        size_t e = 0;
        if (i < s.size() && (s[i] == 'x' || s[i] == 'X')) {
            ++i;
            e = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::string ex;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                    ex += s[i++];
                if (ex.empty()) fail();
                e = std::stoul(ex);
            }
        } else if (num.empty()) {
            fail();
        }
        auto it = coef.find(e);
        if (it == coef.end())
            coef[e] = Rational(sign) * c;
        else
            it->second += Rational(sign) * c;
    }
    size_t deg = 0;
    for (const auto& [e, c] : coef)
        if (!c.is_zero()) deg = std::max(deg, e);
    std::vector<Rational> v(deg + 1, Rational(0));
    for (const auto& [e, c] : coef)
        if (e <= deg) v[e] = c;
    return QPoly(std::move(v));
}

/// "split:k" or a product of monic factors separated by ';' or '*'
/// (a lone '*' between factors; '*' inside a term like 2*x is handled by
/// the polynomial parser, so the algebra-level separator is ';').
AlgebraPtr parse_omega(const std::string& s) {
    if (s.rfind("split:", 0) == 0) {
        size_t k = 0;
        try {
            k = std::stoul(s.substr(6));
        } catch (...) {
            throw CliError{kExitValidation, "bad split descriptor '" + s + "'"};
        }
        if (k == 0) throw CliError{kExitValidation, "split:0 is not an algebra"};
        return EtaleAlgebra::split(k);
    }
    std::vector<QPoly> factors;
    size_t start = 0;
    for (size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == ';') {
            std::string part = s.substr(start, i - start);
            if (!part.empty()) factors.push_back(parse_qpoly(part));
            start = i + 1;
        }
    }
    if (factors.empty()) throw CliError{kExitValidation, "empty algebra descriptor"};
    try {
        return EtaleAlgebra::make(std::move(factors));
    } catch (const std::exception& e) {
        throw CliError{kExitValidation, std::string("invalid algebra: ") + e.what()};
    }
}

CurveKind parse_kind(const std::string& s) {
    std::string t = s;
    if (t == "C1") t = "X1";
    if (t == "C2") t = "X2";
    if (t == "C3") t = "X3";
    auto k = kind_from_name(t);
    if (!k) throw CliError{kExitValidation, "unknown kind '" + s + "' (use X1/X2/X3)"};
    return *k;
}

std::vector<Rational> parse_tuple(const std::string& s) {
    std::vector<Rational> out;
    size_t start = 0;
    for (size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == ',') {
            std::string part = s.substr(start, i - start);
            if (!part.empty()) {
                try {
                    out.push_back(Rational::parse(part));
                } catch (...) {
                    throw CliError{kExitValidation, "bad tuple entry '" + part + "'"};
                }
            }
            start = i + 1;
        }
    }
    return out;
}

// ------------------------------------------------------------- rendering

std::string mp_str(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : p.terms()) {
        std::string term = c.str();
        for (size_t v = 0; v < m.size(); ++v) {
            if (m[v] == 0) continue;
            term += "*z" + std::to_string(v + 1);
            if (m[v] > 1) term += "^" + std::to_string(m[v]);
        }
        if (!out.empty() && term[0] != '-') out += "+";
        out += term;
    }
    return out;
}

json qpoly_json(const QPoly& p) {
    json coeffs = json::array();
    for (size_t i = 0; i <= static_cast<size_t>(std::max<long>(p.degree(), 0)); ++i)
        coeffs.push_back(p[i].str());
    return json{{"text", to_string(p)}, {"coeffs", coeffs}};
}

json mpoly_unipoly_json(const UniPoly<MultiPoly>& p) {
    json coeffs = json::array();
    for (size_t i = 0; i <= static_cast<size_t>(std::max<long>(p.degree(), 0)); ++i)
        coeffs.push_back(mp_str(p[i]));
    return coeffs;
}

json algebra_json(const AlgebraPtr& a) {
    json factors = json::array();
    for (const auto& f : a->factors()) factors.push_back(to_string(f));
    return json{{"degree", a->degree()}, {"factors", factors}};
}

json element_json(const AlgebraElement<Rational>& e) {
    json comps = json::array();
    for (const auto& c : e.components()) {
        json comp = json::array();
        for (const auto& v : c) comp.push_back(v.str());
        comps.push_back(comp);
    }
    return comps;
}

std::optional<Rational> j_invariant_of(const SpecializedCurve& sc) {
    if (sc.genus != 1) return std::nullopt;
    try {
        if (sc.curve_poly.degree() == 3) return cubic_to_weierstrass(sc.curve_poly).j();
        if (sc.curve_poly.degree() == 4) return quartic_j_invariant(sc.curve_poly);
    } catch (const std::exception&) {
    }
    return std::nullopt;
}

json specialized_json(const SpecializedCurve& sc) {
    json rec;
    rec["kind"] = kind_name(sc.kind);
    rec["d"] = sc.d;
    rec["genus"] = sc.genus;
    json params = json::array();
    for (const auto& t : sc.parameters) params.push_back(t.str());
    rec["parameters"] = params;
    rec["m"] = qpoly_json(sc.m);
    rec["h"] = qpoly_json(sc.h);
    rec["ell"] = qpoly_json(sc.ell);
    rec["curve"] = qpoly_json(sc.curve_poly);
    rec["omega"] = algebra_json(sc.omega);
    rec["delta"] = element_json(sc.delta);
    json checks = json::array();
    for (const auto& c : sc.admissibility)
        checks.push_back(json{{"name", c.name}, {"passed", c.passed}, {"witness", c.witness.str()}});
    rec["admissibility"] = checks;
    json pts = json::array();
    for (const auto& p : sc.marked_points())
        pts.push_back(json{{"x", p.x.str()}, {"y", p.y.str()}});
    rec["rational_marked_points"] = pts;
    if (auto j = j_invariant_of(sc)) rec["j_invariant"] = j->str();
    return rec;
}

json galois_json(const SimplicityCertificate& cert) {
    json rec;
    rec["d"] = cert.d;
    rec["verdict"] = cert.certified ? "certified-Sd" : "inconclusive";
    rec["witness_full_cycle"] = cert.witness_full_cycle;
    rec["witness_transposition"] = cert.witness_transposition;
    rec["witness_long_prime_cycle"] = cert.witness_long_prime_cycle;
    json ev = json::array();
    for (const auto& s : cert.evidence) {
        json degrees = json::array();
        for (size_t deg : s.degrees) degrees.push_back(deg);
        ev.push_back(json{{"prime", s.prime}, {"cycle_type", degrees}});
    }
    rec["evidence"] = ev;
    return rec;
}

json sieve_json(const SieveResult& res) {
    json rec;
    rec["verdict"] = res.verdict;
    rec["conclusive"] = res.conclusive;
    rec["coeff_bound"] = res.coeff_bound;
    json primes = json::array();
    for (const auto& r : res.provenance)
        primes.push_back(json{{"p", r.p}, {"group", json::array({r.a, r.b})}});
    rec["primes"] = primes;
    json basis = json::array();
    for (const auto& row : res.lattice) {
        json jr = json::array();
        for (const auto& v : row) jr.push_back(v.get_str());
        basis.push_back(jr);
    }
    rec["lattice_basis"] = basis;
    if (res.short_relation) {
        json jr = json::array();
        for (const auto& v : *res.short_relation) jr.push_back(v.get_str());
        rec["short_relation"] = jr;
    }
    return rec;
}

void emit(const json& doc, const std::string& output) {
    std::string text = doc.dump(2);
    text += "\n";
    if (output.empty() || output == "-") {
        std::cout << text;
        return;
    }
    std::string tmp = output + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw CliError{kExitValidation, "cannot write " + tmp};
        f << text;
    }
    if (std::rename(tmp.c_str(), output.c_str()) != 0)
        throw CliError{kExitValidation, "cannot move output into place: " + output};
}

// -------------------------------------------------------- shared options

struct FamilySpec {
    std::string omega = "split:10";
    std::string kind = "X1";
    std::string delta = "1";
    size_t genus = 1;
    bool no_symbolic = false;
};

void add_family_flags(CLI::App* cmd, FamilySpec& fs) {
    cmd->add_option("--omega", fs.omega,
                    "etale algebra: 'split:k' or monic factors separated by ';'");
    cmd->add_option("--kind", fs.kind, "curve family: X1 (y^2=l(x)), X2 (y^2=xl(x)), X3 (y^2=l(x^2))");
    cmd->add_option("--delta", fs.delta, "twisting unit as a polynomial in the algebra generator");
    cmd->add_option("--genus", fs.genus, "target genus");
    cmd->add_flag("--no-symbolic", fs.no_symbolic,
                  "skip symbolic m/h/ell above the default degree cap instead of failing");
}

GenericConstruction build_family(const FamilySpec& fs) {
    AlgebraPtr omega = parse_omega(fs.omega);
    CurveKind kind = parse_kind(fs.kind);
    size_t g = fs.genus;
    size_t n = kind == CurveKind::X1 ? 4 * g + 6
                                     : 2 * (kind == CurveKind::X2 ? 2 * g + 1 : g + 1) + 2;
    if (n > kDefaultSymbolicCap && !fs.no_symbolic)
        throw CliError{kExitCapacity,
                       "generic construction needs " + std::to_string(n) +
                           " parameters, above the symbolic cap " +
                           std::to_string(kDefaultSymbolicCap) +
                           "; pass --no-symbolic to elide the symbolic record"};
    size_t cap = fs.no_symbolic ? 0 : kDefaultSymbolicCap;
    try {
        if (kind == CurveKind::X1) return construct_C1(omega, g, cap);
        auto delta = eval_poly(parse_qpoly(fs.delta), AlgebraElement<Rational>::generator(omega));
        return construct_C2C3(omega, delta, g, kind, cap);
    } catch (const std::invalid_argument& e) {
        throw CliError{kExitValidation, e.what()};
    }
}

json construction_json(const GenericConstruction& gc) {
    json rec;
    rec["kind"] = kind_name(gc.kind);
    rec["n"] = gc.n;
    rec["d"] = gc.d;
    rec["genus"] = gc.genus;
    rec["omega"] = algebra_json(gc.omega);
    rec["delta"] = element_json(gc.delta);
    rec["symbolic"] = gc.symbolic;
    if (gc.symbolic) {
        rec["m"] = mpoly_unipoly_json(gc.m);
        rec["h"] = mpoly_unipoly_json(gc.h);
        rec["ell"] = mpoly_unipoly_json(gc.ell);
    } else {
        rec["note"] = "symbolic m/h/ell elided above the degree cap";
    }
    return rec;
}

// -------------------------------------------------------- modules parsing

struct GroupContext {
    std::deque<FiniteGroup> storage;  // stable addresses
    const FiniteGroup* g = nullptr;
};

const FiniteGroup* parse_group_name(GroupContext& ctx, const std::string& s) {
    auto num = [&](size_t off) -> size_t {
        try {
            return std::stoul(s.substr(off));
        } catch (...) {
            throw CliError{kExitValidation, "bad group descriptor '" + s + "'"};
        }
    };
    if (s.size() >= 2 && (s[0] == 'S' || s[0] == 'A' || s[0] == 'C' || s[0] == 'W') &&
        std::isdigit(static_cast<unsigned char>(s[1]))) {
        size_t k = num(1);
        if (s[0] == 'S') ctx.storage.push_back(FiniteGroup::symmetric(k));
        if (s[0] == 'A') ctx.storage.push_back(FiniteGroup::alternating(k));
        if (s[0] == 'C') ctx.storage.push_back(FiniteGroup::cyclic(k));
        if (s[0] == 'W') ctx.storage.push_back(FiniteGroup::wreath_mu2_Sk(k));
        return &ctx.storage.back();
    }
    // "n=<degree>:<cycles>,<cycles>,..."
    if (s.rfind("n=", 0) == 0) {
        size_t colon = s.find(':');
        if (colon == std::string::npos)
            throw CliError{kExitValidation, "expected n=<degree>:<generators>"};
        size_t deg = num(2);
        std::vector<Perm> gens;
        std::string rest = s.substr(colon + 1);
        size_t start = 0;
        int depth = 0;
        for (size_t i = 0; i <= rest.size(); ++i) {
            if (i < rest.size() && rest[i] == '(') ++depth;
            if (i < rest.size() && rest[i] == ')') --depth;
            if (i == rest.size() || (rest[i] == ',' && depth == 0)) {
                std::string part = rest.substr(start, i - start);
                if (!part.empty()) gens.push_back(parse_cycles(part, deg));
                start = i + 1;
            }
        }
        ctx.storage.push_back(FiniteGroup(deg, std::move(gens)));
        return &ctx.storage.back();
    }
    throw CliError{kExitValidation, "unknown group '" + s + "' (use S/A/C/W<k> or n=<deg>:<gens>)"};
}

/// Subgroup descriptor relative to the ambient group: "G", "1",
/// "stab:<point>", or generator cycles like "(1 2)(3 4),(1 5)".
const FiniteGroup* parse_subgroup(GroupContext& ctx, const std::string& s) {
    const FiniteGroup& g = *ctx.g;
    if (s == "G") return ctx.g;
    if (s == "1" || s == "e") {
        ctx.storage.push_back(g.subgroup({}));
        return &ctx.storage.back();
    }
    if (s.rfind("stab:", 0) == 0) {
        int pt;
        try {
            pt = std::stoi(s.substr(5));
        } catch (...) {
            throw CliError{kExitValidation, "bad stabilizer descriptor '" + s + "'"};
        }
        if (pt < 1 || static_cast<size_t>(pt) > g.degree())
            throw CliError{kExitValidation, "stabilizer point out of range in '" + s + "'"};
        ctx.storage.push_back(g.point_stabilizer(pt - 1));
        return &ctx.storage.back();
    }
    std::vector<Perm> gens;
    size_t start = 0;
    int depth = 0;
    for (size_t i = 0; i <= s.size(); ++i) {
        if (i < s.size() && s[i] == '(') ++depth;
        if (i < s.size() && s[i] == ')') --depth;
        if (i == s.size() || (s[i] == ',' && depth == 0)) {
            std::string part = s.substr(start, i - start);
            if (!part.empty()) {
                try {
                    gens.push_back(parse_cycles(part, g.degree()));
                } catch (const std::exception& e) {
                    throw CliError{kExitValidation, std::string("bad generators: ") + e.what()};
                }
            }
            start = i + 1;
        }
    }
    try {
        ctx.storage.push_back(g.subgroup(std::move(gens)));
    } catch (const std::exception& e) {
        throw CliError{kExitValidation, std::string("bad subgroup: ") + e.what()};
    }
    return &ctx.storage.back();
}

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_top(const std::string& s, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    int depth = 0;
    for (size_t i = 0; i <= s.size(); ++i) {
        if (i < s.size() && s[i] == '(') ++depth;
        if (i < s.size() && s[i] == ')') --depth;
        if (i == s.size() || (s[i] == sep && depth == 0)) {
            std::string part = strip(s.substr(start, i - start));
            if (!part.empty()) out.push_back(part);
            start = i + 1;
        }
    }
    return out;
}

/// Module descriptor: "triv", "v:<sub>", "perm:<sub>", "etale:<sub>|<sub>",
/// combined with '+'.
ClassFunction parse_module(GroupContext& ctx, const std::string& s) {
    const FiniteGroup& g = *ctx.g;
    ClassFunction acc = zero_character(g);
    for (const std::string& term : split_top(s, '+')) {
        if (term == "triv") {
            acc = acc + trivial_character(g);
        } else if (term.rfind("v:", 0) == 0) {
            acc = acc + v_module(g, *parse_subgroup(ctx, term.substr(2)));
        } else if (term.rfind("perm:", 0) == 0) {
            acc = acc + perm_character(g, *parse_subgroup(ctx, term.substr(5)));
        } else if (term.rfind("etale:", 0) == 0) {
            std::vector<const FiniteGroup*> hs;
            for (const std::string& p : split_top(term.substr(6), '|'))
                hs.push_back(parse_subgroup(ctx, p));
            acc = acc + v_etale(g, hs);
        } else {
            throw CliError{kExitValidation, "unknown module term '" + term + "'"};
        }
    }
    return acc;
}

// -------------------------------------------------------------- commands

int cmd_construct(const FamilySpec& fs, const std::string& output) {
    GenericConstruction gc = build_family(fs);
    emit(construction_json(gc), output);
    return kExitOk;
}

int cmd_specialize(const FamilySpec& fs, const SampleOptions& so, const std::string& output) {
    GenericConstruction gc = build_family(fs);
    std::vector<SpecializedCurve> curves;
    try {
        curves = sample_specializations(gc, so);
    } catch (const std::exception& e) {
        throw CliError{kExitCapacity, std::string("sampling failed: ") + e.what()};
    }
    json rec;
    rec["family"] = construction_json(gc);
    rec["seed"] = so.seed;
    rec["height_bound"] = so.height_bound;
    json list = json::array();
    for (const auto& sc : curves) list.push_back(specialized_json(sc));
    rec["curves"] = list;
    emit(rec, output);
    return kExitOk;
}

SpecializedCurve specialize_for_verify(const FamilySpec& fs, const std::string& tuple,
                                       uint64_t seed) {
    GenericConstruction gc = build_family(fs);
    if (!tuple.empty()) {
        std::vector<Rational> t = parse_tuple(tuple);
        if (t.size() != gc.n)
            throw CliError{kExitValidation,
                           "--t needs " + std::to_string(gc.n) + " entries, got " +
                               std::to_string(t.size())};
        auto res = specialize_at(gc, t);
        if (!res.ok())
            throw CliError{kExitValidation,
                           "tuple is inadmissible (failed check: " + res.rejected_check + ")"};
        return *res.curve;
    }
    SampleOptions so;
    so.count = 1;
    so.seed = seed;
    try {
        return sample_specializations(gc, so).at(0);
    } catch (const std::exception& e) {
        throw CliError{kExitCapacity, std::string("sampling failed: ") + e.what()};
    }
}

int cmd_verify(const FamilySpec& fs, const std::string& tuple, uint64_t seed, bool do_galois,
               bool do_sieve, bool do_zarhin, size_t prime_budget, long coeff_bound,
               const std::string& output) {
    if (!do_galois && !do_sieve && !do_zarhin) do_galois = do_sieve = do_zarhin = true;
    SpecializedCurve sc = specialize_for_verify(fs, tuple, seed);

    json rec;
    rec["curve"] = specialized_json(sc);
    bool inconclusive = false;

    SimplicityCertificate cert;
    if (do_galois || do_zarhin) {
        cert = certify_galois_Sd(sc.ell, prime_budget);
        apply_zarhin_flags(cert, sc.kind);
    }
    if (do_galois) {
        rec["galois"] = galois_json(cert);
        if (!cert.certified) inconclusive = true;
    }
    if (do_zarhin) {
        rec["zarhin"] =
            json{{"verdict", cert.zarhin_applicable ? "absolutely-simple" : "inconclusive"},
                 {"note", cert.zarhin_note}};
        if (!cert.zarhin_applicable) inconclusive = true;
    }
    if (do_sieve) {
        if (sc.genus != 1)
            throw CliError{kExitValidation, "independence sieve requires a genus 1 member"};
        SieveOptions opt;
        opt.coeff_bound = coeff_bound;
        opt.prime_budget = prime_budget;
        SieveResult res = independence_sieve(sc, opt);
        rec["sieve"] = sieve_json(res);
        if (!res.conclusive) inconclusive = true;
    }
    emit(rec, output);
    return inconclusive ? kExitInconclusive : kExitOk;
}

int cmd_modules(const std::string& group, const std::string& check, const std::string& pattern,
                const std::string& output) {
    GroupContext ctx;
    ctx.g = parse_group_name(ctx, group);
    const FiniteGroup& g = *ctx.g;
    json rec;
    rec["group"] = json{{"name", group}, {"order", g.order()}, {"degree", g.degree()}};
    rec["check"] = check;
    bool established = false;

    if (check == "quad-identity") {
        // pattern: factors separated by ';', each "<H>" (split doubling)
        // or "<H> / <K>" (quadratic extension, K of index 2 in H)
        std::vector<QuadFactor> pat;
        for (const std::string& factor : split_top(pattern, ';')) {
            auto parts = split_top(factor, '/');
            if (parts.empty() || parts.size() > 2)
                throw CliError{kExitValidation, "bad quad factor '" + factor + "'"};
            QuadFactor qf;
            qf.h = parse_subgroup(ctx, parts[0]);
            if (parts.size() == 2) qf.k = parse_subgroup(ctx, parts[1]);
            pat.push_back(qf);
        }
        if (pat.empty()) throw CliError{kExitValidation, "quad-identity needs a pattern"};
        QuadIdentityResult res;
        try {
            res = check_quad_identity(g, pat);
        } catch (const std::invalid_argument& e) {
            throw CliError{kExitValidation, e.what()};
        }
        rec["holds"] = res.holds;
        rec["dimension"] = res.v_tilde_over_omega.dimension().str();
        established = res.holds;
    } else if (check == "submodule") {
        // pattern: "<module> <= <module>"
        size_t pos = pattern.find("<=");
        if (pos == std::string::npos)
            throw CliError{kExitValidation, "submodule pattern must be 'V <= W'"};
        ClassFunction v = parse_module(ctx, strip(pattern.substr(0, pos)));
        ClassFunction w = parse_module(ctx, strip(pattern.substr(pos + 2)));
        auto res = submodule_test(v, w);
        rec["contained"] = res.contained;
        rec["mode"] = res.exact ? "exact" : "partial";
        established = res.contained && res.exact;
    } else if (check == "rank-growth") {
        // pattern: "<module> @ <sub> > <sub> > ..."
        size_t pos = pattern.find('@');
        if (pos == std::string::npos)
            throw CliError{kExitValidation, "rank-growth pattern must be 'V @ U0 > U1 > ...'"};
        ClassFunction realized = parse_module(ctx, strip(pattern.substr(0, pos)));
        std::vector<const FiniteGroup*> chain;
        for (const std::string& part : split_top(pattern.substr(pos + 1), '>'))
            chain.push_back(parse_subgroup(ctx, part));
        if (chain.empty()) throw CliError{kExitValidation, "rank-growth needs a chain"};
        auto rep = rank_growth_report(realized, chain);
        json dims = json::array(), growth = json::array();
        for (const auto& d : rep.fixed_dims) dims.push_back(d.str());
        for (const auto& d : rep.growth) growth.push_back(d.str());
        rec["fixed_dims"] = dims;
        rec["growth"] = growth;
        established = true;
    } else {
        throw CliError{kExitValidation, "unknown check '" + check +
                                            "' (quad-identity, submodule, rank-growth)"};
    }
    emit(rec, output);
    return established ? kExitOk : kExitInconclusive;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hyperelliptic curve families with marked divisors of prescribed etale type"};
    app.require_subcommand(1);

    FamilySpec fs;
    std::string output;
    std::string tuple;
    SampleOptions so;
    size_t prime_budget = 200;
    long coeff_bound = 5;
    bool do_galois = false, do_sieve = false, do_zarhin = false;
    std::string group = "S3", check = "quad-identity", pattern;

    auto* c_construct = app.add_subcommand("construct", "build a generic family record");
    add_family_flags(c_construct, fs);
    c_construct->add_option("--output,-o", output, "output file (default stdout)");

    auto* c_spec = app.add_subcommand("specialize", "sample admissible specializations");
    add_family_flags(c_spec, fs);
    c_spec->add_option("--seed", so.seed, "RNG seed (fixed seed gives byte-identical output)");
    c_spec->add_option("--count", so.count, "number of admissible curves to sample");
    c_spec->add_option("--height-bound", so.height_bound, "max |coordinate| of sampled tuples");
    c_spec->add_option("--output,-o", output, "output file (default stdout)");

    auto* c_verify = app.add_subcommand("verify", "certify a specialized curve");
    add_family_flags(c_verify, fs);
    c_verify->add_option("--t", tuple, "specialization tuple, comma-separated rationals");
    c_verify->add_option("--seed", so.seed, "seed used when --t is absent");
    c_verify->add_flag("--galois", do_galois, "run the S_d cycle-type certification");
    c_verify->add_flag("--sieve", do_sieve, "run the divisor-class independence sieve");
    c_verify->add_flag("--zarhin", do_zarhin, "report the absolute-simplicity criterion");
    c_verify->add_option("--prime-budget", prime_budget, "primes allowed per certification");
    c_verify->add_option("--coeff-bound", coeff_bound, "relation coefficient bound B");
    c_verify->add_option("--output,-o", output, "output file (default stdout)");

    auto* c_sieve = app.add_subcommand("sieve", "independence sieve only");
    add_family_flags(c_sieve, fs);
    c_sieve->add_option("--t", tuple, "specialization tuple, comma-separated rationals");
    c_sieve->add_option("--seed", so.seed, "seed used when --t is absent");
    c_sieve->add_option("--prime-budget", prime_budget, "primes allowed");
    c_sieve->add_option("--coeff-bound", coeff_bound, "relation coefficient bound B");
    c_sieve->add_option("--output,-o", output, "output file (default stdout)");

    auto* c_modules = app.add_subcommand("modules", "permutation-module calculator");
    c_modules->add_option("--group", group, "S/A/C/W<k> or n=<degree>:<cycle generators>");
    c_modules->add_option("--check", check, "quad-identity | submodule | rank-growth");
    c_modules->add_option("--pattern", pattern, "check-specific pattern (see README)");
    c_modules->add_option("--output,-o", output, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_construct->parsed()) return cmd_construct(fs, output);
        if (c_spec->parsed()) return cmd_specialize(fs, so, output);
        if (c_verify->parsed())
            return cmd_verify(fs, tuple, so.seed, do_galois, do_sieve, do_zarhin, prime_budget,
                              coeff_bound, output);
        if (c_sieve->parsed())
            return cmd_verify(fs, tuple, so.seed, false, true, false, prime_budget, coeff_bound,
                              output);
        if (c_modules->parsed()) return cmd_modules(group, check, pattern, output);
    } catch (const CliError& e) {
        std::cerr << json{{"error", e.message}, {"exit", e.code}}.dump() << "\n";
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", e.what()}, {"exit", kExitValidation}}.dump() << "\n";
        return kExitValidation;
    }
    return kExitValidation;
}
