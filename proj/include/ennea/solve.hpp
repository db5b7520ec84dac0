#pragma once

#include <map>
#include <set>
#include <vector>

#include "ennea/groebner.hpp"
#include "ennea/mpoly.hpp"
#include "ennea/univariate.hpp"

namespace ennea {

// Outcome annotations of a point enumeration: whether the system was really
// zero-dimensional, whether roots outside the base field were encountered,
// and which quadratic extensions might pick those up.
struct SolveStatus {
    bool zero_dimensional = true;
    bool saw_foreign_root = false;      // some branch had a root outside the field
    std::set<long> candidate_ds;        // square-free d of quadratic factors seen
    bool detection_incomplete = false;  // residual of degree >= 5: d-candidates may be missing
};

template <typename K>
using PointMap = std::map<int, K>;

inline KPoly to_kpoly(const QPoly& p) {
    KPoly r(p.ring());
    for (auto& t : p.terms()) r.add_term(t.m, QuadExt(t.c));
    return r;
}

template <typename K>
std::vector<int> support_vars(const std::vector<MPoly<K>>& gens, const RingPtr& ring) {
    std::vector<int> vars;
    for (int v = 0; v < ring->nvars(); ++v) {
        bool used = false;
        for (auto& g : gens) used = used || g.uses_var(v);
        if (used) vars.push_back(v);
    }
    return vars;
}

// A zero-dimensional check restricted to the given variables: each must have
// a pure power among the leading monomials of the degrevlex basis.
template <typename K>
bool is_zero_dimensional(const IdealT<K>& I, const std::vector<int>& vars) {
    const auto& B = I.basis(MonomialOrder::degrevlex(I.ring->nvars()));
    for (int v : vars) {
        bool found = false;
        for (auto& g : B) {
            const Monomial& lm = g.leading(MonomialOrder::degrevlex(I.ring->nvars())).m;
            if (lm.e[v] && lm.deg == lm.e[v]) found = true;
        }
        if (!found) return false;
    }
    return true;
}

// Distinct roots in Q[sqrt(d)] (or Q when d = 0) of a univariate polynomial
// with coefficients in that field.  Complete for the field; sets
// saw_foreign_root when roots outside it exist.
inline std::vector<QuadExt> kroots(const std::vector<QuadExt>& g_in, long d, SolveStatus& st);

namespace detail {

inline std::vector<QuadExt> kroots_rational_coeffs(const std::vector<Rat>& g, long d,
                                                   SolveStatus& st) {
    RootField rf = analyze_roots(g);
    std::vector<QuadExt> roots;
    for (auto& [r, mult] : rf.rational) roots.push_back(QuadExt(r));
    for (auto& qf : rf.quadratics) {
        st.candidate_ds.insert(qf.d);
        if (d != 0 && qf.d == d) {
            auto [r1, r2] = qf.roots();
            roots.push_back(r1);
            roots.push_back(r2);
        } else {
            st.saw_foreign_root = true;
        }
    }
    for (int deg : rf.unsolvable_degrees) {
        st.saw_foreign_root = true;
        if (deg >= 5) st.detection_incomplete = true;
    }
    return roots;
}

} // namespace detail

// Rational/quadratic point enumeration needs a forward declaration because
// the extension-coefficient root finder reduces to a bivariate rational
// system.
inline std::vector<PointMap<Rat>> solve_points_rational(const std::vector<QPoly>& gens,
                                                        const RingPtr& ring,
                                                        const std::vector<int>& vars,
                                                        SolveStatus& st);

inline std::vector<QuadExt> kroots(const std::vector<QuadExt>& g_in, long d, SolveStatus& st) {
    std::vector<QuadExt> g = g_in;
    upoly_trim(g);
    if (g.empty()) throw std::invalid_argument("kroots: zero polynomial");
    bool rational = true;
    for (auto& c : g) rational = rational && c.is_rational();
    if (rational || d == 0) {
        std::vector<Rat> gr;
        for (auto& c : g) {
            if (!c.is_rational())
                throw std::invalid_argument("kroots: extension coefficients with d = 0");
            gr.push_back(c.a());
        }
        return detail::kroots_rational_coeffs(gr, d, st);
    }

    // Genuine Q[sqrt(d)] coefficients: write t = u + v*sqrt(d) and split
    // g(t) = A(u,v) + B(u,v)*sqrt(d); the K-roots are the rational points of
    // the (always zero-dimensional) system {A, B}.
    RingPtr uv = make_ring({"u", "v"});
    QPoly A = QPoly::zero(uv), B = QPoly::zero(uv);
    QPoly pa = QPoly::constant(uv, Rat(1)), pb = QPoly::zero(uv); // (u+v sqrt d)^k
    QPoly U = QPoly::var(uv, 0), V = QPoly::var(uv, 1);
    for (std::size_t k = 0; k < g.size(); ++k) {
        Rat ak = g[k].a(), bk = g[k].b();
        A += pa.scaled(ak) + pb.scaled(bk * Rat(d));
        B += pb.scaled(ak) + pa.scaled(bk);
        // multiply (pa + pb sqrt d) by (u + v sqrt d)
        QPoly na = pa * U + pb * V * QPoly::constant(uv, Rat(d));
        QPoly nb = pa * V + pb * U;
        pa = std::move(na);
        pb = std::move(nb);
    }
    SolveStatus inner;
    auto pts = solve_points_rational({A, B}, uv, support_vars<Rat>({A, B}, uv), inner);
    std::vector<QuadExt> roots;
    for (auto& pt : pts) {
        Rat u = pt.count(0) ? pt.at(0) : Rat(0);
        Rat v = pt.count(1) ? pt.at(1) : Rat(0);
        roots.push_back(QuadExt(u, v, d));
    }
    // Foreign-root flag: strip the found roots (with multiplicity) and see
    // whether anything remains.
    std::vector<QuadExt> residual = g;
    for (auto& r : roots) {
        std::vector<QuadExt> lin{-r, QuadExt(1)};
        while (upoly_deg(residual) >= 1) {
            auto [q, rem] = upoly_divmod(residual, lin);
            if (!rem.empty()) break;
            residual = q;
        }
    }
    if (upoly_deg(residual) >= 1) st.saw_foreign_root = true;
    return roots;
}

namespace detail {

// Shared recursive triangular enumeration.  Vars are solved from the back of
// `vars`; at each step the gcd of the polynomials that have become univariate
// in the current variable supplies the candidate roots.
template <typename K>
void solve_recurse(std::vector<MPoly<K>> polys, const std::vector<int>& vars, std::size_t depth,
                   PointMap<K>& partial, long d, std::vector<PointMap<K>>& out, SolveStatus& st) {
    if (depth == 0) {
        for (auto& p : polys) {
            if (!p.is_zero() && p.is_constant()) return; // inconsistent branch
        }
        out.push_back(partial);
        return;
    }
    int v = vars[depth - 1];
    std::vector<std::vector<K>> univs;
    for (auto& p : polys) {
        if (p.is_zero()) continue;
        if (p.is_constant()) return; // nonzero constant: dead branch
        int sv = single_var(p);
        if (sv == v) univs.push_back(univariate_coeffs(p, v));
    }
    if (univs.empty()) {
        st.zero_dimensional = false;
        return;
    }
    std::vector<K> g = univs[0];
    for (std::size_t i = 1; i < univs.size(); ++i) g = upoly_gcd(g, univs[i]);
    if (upoly_deg(g) == 0) return; // gcd constant: no common root
    std::vector<QuadExt> roots;
    if constexpr (std::is_same_v<K, Rat>) {
        std::vector<QuadExt> gk;
        for (auto& c : g) gk.push_back(QuadExt(c));
        roots = kroots(gk, 0, st);
    } else {
        roots = kroots(g, d, st);
    }
    for (auto& root : roots) {
        K value;
        if constexpr (std::is_same_v<K, Rat>) {
            value = root.a();
        } else {
            value = root;
        }
        std::vector<MPoly<K>> next;
        next.reserve(polys.size());
        for (auto& p : polys) next.push_back(p.substituted(v, value));
        partial[v] = value;
        solve_recurse(next, vars, depth - 1, partial, d, out, st);
        partial.erase(v);
    }
}

} // namespace detail

// All rational points of an ideal that is zero-dimensional in `vars` (the
// generators must involve no other variables).  Complete: every rational
// point is found; non-rational branches set flags in `st`.
inline std::vector<PointMap<Rat>> solve_points_rational(const std::vector<QPoly>& gens,
                                                        const RingPtr& ring,
                                                        const std::vector<int>& vars,
                                                        SolveStatus& st) {
    std::vector<PointMap<Rat>> out;
    if (vars.empty()) {
        for (auto& g : gens)
            if (!g.is_zero()) return out;
        out.push_back({});
        return out;
    }
    MonomialOrder lexo = MonomialOrder::lex(ring->nvars());
    auto G = reduced_groebner_basis(gens, lexo);
    if (G.size() == 1 && G[0].is_constant() && !G[0].is_zero()) return out;
    PointMap<Rat> partial;
    detail::solve_recurse<Rat>(G, vars, vars.size(), partial, 0, out, st);
    return out;
}

// All Q[sqrt(d)]-points of an ideal over Q, zero-dimensional in `vars`.
inline std::vector<PointMap<QuadExt>> solve_points_quadext(const std::vector<QPoly>& gens,
                                                           const RingPtr& ring,
                                                           const std::vector<int>& vars, long d,
                                                           SolveStatus& st) {
    std::vector<PointMap<QuadExt>> out;
    if (vars.empty()) {
        for (auto& g : gens)
            if (!g.is_zero()) return out;
        out.push_back({});
        return out;
    }
    MonomialOrder lexo = MonomialOrder::lex(ring->nvars());
    auto G = reduced_groebner_basis(gens, lexo);
    if (G.size() == 1 && G[0].is_constant() && !G[0].is_zero()) return out;
    std::vector<KPoly> GK;
    for (auto& g : G) GK.push_back(to_kpoly(g));
    PointMap<QuadExt> partial;
    detail::solve_recurse<QuadExt>(GK, vars, vars.size(), partial, d, out, st);
    return out;
}

// Variant for generators already over Q[sqrt(d)] (singularity analysis of
// extension-coefficient cubics).
inline std::vector<PointMap<QuadExt>> solve_points_quadext(const std::vector<KPoly>& gens,
                                                           const RingPtr& ring,
                                                           const std::vector<int>& vars, long d,
                                                           SolveStatus& st) {
    std::vector<PointMap<QuadExt>> out;
    if (vars.empty()) {
        for (auto& g : gens)
            if (!g.is_zero()) return out;
        out.push_back({});
        return out;
    }
    MonomialOrder lexo = MonomialOrder::lex(ring->nvars());
    auto G = reduced_groebner_basis(gens, lexo);
    if (G.size() == 1 && G[0].is_constant() && !G[0].is_zero()) return out;
    PointMap<QuadExt> partial;
    detail::solve_recurse<QuadExt>(G, vars, vars.size(), partial, d, out, st);
    return out;
}

} // namespace ennea
