#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "ennea/mpoly.hpp"

namespace ennea {

// ---- polynomial reduction -----------------------------------------------------

// Full normal form of f against basis G under `ord`: no term of the result
// is divisible by any leading monomial of G.  Deterministic: the first basis
// element (in list order) whose leading monomial divides is used.
template <typename K>
MPoly<K> normal_form(MPoly<K> f, const std::vector<MPoly<K>>& G, const MonomialOrder& ord) {
    if (G.empty()) return f;
    std::vector<std::pair<Monomial, K>> leads;
    leads.reserve(G.size());
    for (auto& g : G) leads.push_back({g.leading(ord).m, g.leading(ord).c});

    MPoly<K> rem(f.ring());
    while (!f.is_zero()) {
        auto lt = f.leading(ord);
        bool reduced = false;
        for (std::size_t i = 0; i < G.size(); ++i) {
            if (leads[i].first.divides(lt.m)) {
                K c = lt.c / leads[i].second;
                f -= G[i].times_term(lt.m / leads[i].first, c);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem.add_term(lt.m, lt.c);
            f.add_term(lt.m, -lt.c);
        }
    }
    return rem;
}

template <typename K>
MPoly<K> s_poly(const MPoly<K>& f, const MPoly<K>& g, const MonomialOrder& ord) {
    auto lf = f.leading(ord);
    auto lg = g.leading(ord);
    Monomial l = lcm(lf.m, lg.m);
    return f.times_term(l / lf.m, K(1) / lf.c) - g.times_term(l / lg.m, K(1) / lg.c);
}

// ---- Buchberger ---------------------------------------------------------------

// Buchberger with the coprime-leading-monomial criterion and the chain
// criterion; basis elements are content-normalized after every reduction.
template <typename K>
std::vector<MPoly<K>> groebner_basis(std::vector<MPoly<K>> gens, const MonomialOrder& ord) {
    std::vector<MPoly<K>> G;
    for (auto& g : gens) {
        if (!g.is_zero()) G.push_back(normalized(g, ord));
    }
    if (G.empty()) return G;
    // dedupe identical generators
    {
        std::vector<MPoly<K>> uniq;
        for (auto& g : G) {
            bool seen = false;
            for (auto& u : uniq) seen = seen || u == g;
            if (!seen) uniq.push_back(g);
        }
        G = std::move(uniq);
    }

    struct Pair {
        std::size_t i, j;
        Monomial l;
    };
    auto pair_less = [&ord](const Pair& a, const Pair& b) {
        if (a.l.deg != b.l.deg) return a.l.deg < b.l.deg;
        if (a.l != b.l) return ord.greater(b.l, a.l);
        if (a.j != b.j) return a.j < b.j;
        return a.i < b.i;
    };

    std::vector<Pair> pending;
    std::set<std::pair<std::size_t, std::size_t>> pending_keys;
    auto push_pair = [&](std::size_t i, std::size_t j) {
        Pair p{i, j, lcm(G[i].leading(ord).m, G[j].leading(ord).m)};
        pending.push_back(p);
        pending_keys.insert({i, j});
    };
    for (std::size_t j = 1; j < G.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) push_pair(i, j);

    while (!pending.empty()) {
        auto it = std::min_element(pending.begin(), pending.end(), pair_less);
        Pair p = *it;
        pending.erase(it);
        pending_keys.erase({p.i, p.j});

        const Monomial& lmi = G[p.i].leading(ord).m;
        const Monomial& lmj = G[p.j].leading(ord).m;
        if (coprime(lmi, lmj)) continue; // product criterion
        // chain criterion: some k with LM(k) | lcm(i,j) and both (i,k),(j,k)
        // already handled
        bool skip = false;
        for (std::size_t k = 0; k < G.size() && !skip; ++k) {
            if (k == p.i || k == p.j) continue;
            if (!G[k].leading(ord).m.divides(p.l)) continue;
            auto key_ik = std::minmax(p.i, k);
            auto key_jk = std::minmax(p.j, k);
            if (!pending_keys.count({key_ik.first, key_ik.second}) &&
                !pending_keys.count({key_jk.first, key_jk.second})) {
                skip = true;
            }
        }
        if (skip) continue;

        MPoly<K> s = s_poly(G[p.i], G[p.j], ord);
        MPoly<K> r = normal_form(s, G, ord);
        if (r.is_zero()) continue;
        G.push_back(normalized(r, ord));
        std::size_t nj = G.size() - 1;
        for (std::size_t i = 0; i < nj; ++i) push_pair(i, nj);
    }
    return G;
}

// Unique reduced basis: minimal leading monomials, fully tail-reduced,
// content-normalized, sorted with the largest leading monomial first.
template <typename K>
std::vector<MPoly<K>> reduced_groebner_basis(const std::vector<MPoly<K>>& gens,
                                             const MonomialOrder& ord) {
    std::vector<MPoly<K>> G = groebner_basis(gens, ord);
    if (G.empty()) return G;
    // minimalize
    std::vector<MPoly<K>> M;
    for (std::size_t i = 0; i < G.size(); ++i) {
        const Monomial& lm = G[i].leading(ord).m;
        bool redundant = false;
        for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial& lmj = G[j].leading(ord).m;
            if (lmj.divides(lm) && !(lmj == lm && j > i)) redundant = true;
        }
        if (!redundant) M.push_back(G[i]);
    }
    // tail-reduce
    std::vector<MPoly<K>> R;
    for (std::size_t i = 0; i < M.size(); ++i) {
        std::vector<MPoly<K>> others;
        for (std::size_t j = 0; j < M.size(); ++j)
            if (j != i) others.push_back(M[j]);
        MPoly<K> r = normal_form(M[i], others, ord);
        if (!r.is_zero()) R.push_back(normalized(r, ord));
    }
    std::sort(R.begin(), R.end(), [&ord](const MPoly<K>& a, const MPoly<K>& b) {
        return ord.greater(a.leading(ord).m, b.leading(ord).m);
    });
    return R;
}

// ---- ideals -------------------------------------------------------------------

template <typename K>
struct IdealT {
    RingPtr ring;
    std::vector<MPoly<K>> gens;

    // Cache of reduced bases keyed by a serialized order signature.
    mutable std::map<std::string, std::vector<MPoly<K>>> cache;

    IdealT() = default;
    IdealT(RingPtr r, std::vector<MPoly<K>> g) : ring(std::move(r)), gens(std::move(g)) {}

    const std::vector<MPoly<K>>& basis(const MonomialOrder& ord) const {
        std::string key = order_key(ord);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        auto B = reduced_groebner_basis(gens, ord);
        return cache.emplace(key, std::move(B)).first->second;
    }

    static std::string order_key(const MonomialOrder& o) {
        std::string k = o.kind == MonomialOrder::Lex ? "L" : "G";
        k += ":" + std::to_string(o.block) + ":";
        for (int v : o.priority) k += std::to_string(v) + ",";
        return k;
    }
};

using Ideal = IdealT<Rat>;
using KIdeal = IdealT<QuadExt>;

template <typename K>
IdealT<K> make_ideal(RingPtr ring, std::vector<MPoly<K>> gens) {
    return IdealT<K>(std::move(ring), std::move(gens));
}

template <typename K>
bool is_trivial(const IdealT<K>& I) {
    const auto& B = I.basis(MonomialOrder::degrevlex(I.ring->nvars()));
    return B.size() == 1 && B[0].is_constant() && !B[0].is_zero();
}

template <typename K>
bool is_zero_ideal(const IdealT<K>& I) {
    return I.basis(MonomialOrder::degrevlex(I.ring->nvars())).empty();
}

// Ideal membership by normal form against the cached degrevlex basis.
template <typename K>
bool member(const MPoly<K>& p, const IdealT<K>& I) {
    const auto& B = I.basis(MonomialOrder::degrevlex(I.ring->nvars()));
    if (B.empty()) return p.is_zero();
    return normal_form(p, B, MonomialOrder::degrevlex(I.ring->nvars())).is_zero();
}

// Equality of ideals via uniqueness of the reduced basis.
template <typename K>
bool ideal_equal(const IdealT<K>& I, const IdealT<K>& J) {
    const auto& A = I.basis(MonomialOrder::degrevlex(I.ring->nvars()));
    const auto& B = J.basis(MonomialOrder::degrevlex(J.ring->nvars()));
    if (A.size() != B.size()) return false;
    for (std::size_t i = 0; i < A.size(); ++i)
        if (A[i] != B[i]) return false;
    return true;
}

// Generators of I whose support avoids `drop`, computed with an elimination
// order; the result lives in the same ring (the dropped variables are unused).
template <typename K>
IdealT<K> eliminate(const IdealT<K>& I, const std::vector<int>& drop) {
    MonomialOrder ord = MonomialOrder::elimination(I.ring->nvars(), drop);
    const auto& B = I.basis(ord);
    std::vector<MPoly<K>> keep;
    for (auto& g : B) {
        bool uses = false;
        for (int v : drop) uses = uses || g.uses_var(v);
        if (!uses) keep.push_back(g);
    }
    return IdealT<K>(I.ring, std::move(keep));
}

namespace detail {

// Append a fresh variable "w" to the ring of I, returning the extended ring,
// the image of the generators, and the index of w.
template <typename K>
std::tuple<RingPtr, std::vector<MPoly<K>>, int> extend_ring_w(const IdealT<K>& I) {
    std::vector<std::string> vars = I.ring->vars;
    std::string w = "w";
    while (std::find(vars.begin(), vars.end(), w) != vars.end()) w += "w";
    vars.push_back(w);
    RingPtr ext = make_ring(vars);
    std::vector<int> var_map(I.ring->nvars());
    for (int i = 0; i < I.ring->nvars(); ++i) var_map[std::size_t(i)] = i;
    std::vector<MPoly<K>> gens;
    for (auto& g : I.gens) gens.push_back(g.mapped(ext, var_map));
    return {ext, gens, ext->nvars() - 1};
}

} // namespace detail

// Saturation I : f^inf by the Rabinowitsch trick: add 1 - w*f in an extended
// ring and eliminate w.
template <typename K>
IdealT<K> saturate(const IdealT<K>& I, const MPoly<K>& f) {
    if (f.is_zero()) throw std::invalid_argument("saturate: zero polynomial");
    if (f.is_constant()) return IdealT<K>(I.ring, I.gens);
    auto [ext, gens, wi] = detail::extend_ring_w(I);
    std::vector<int> var_map(I.ring->nvars());
    for (int i = 0; i < I.ring->nvars(); ++i) var_map[std::size_t(i)] = i;
    MPoly<K> fw = f.mapped(ext, var_map);
    MPoly<K> one = MPoly<K>::constant(ext, K(1));
    gens.push_back(one - fw * MPoly<K>::var(ext, wi));
    IdealT<K> J(ext, std::move(gens));
    IdealT<K> E = eliminate(J, {wi});
    // map back: generators do not involve w
    std::vector<MPoly<K>> back;
    for (auto& g : E.gens) back.push_back(g.mapped(I.ring, var_map));
    return IdealT<K>(I.ring, std::move(back));
}

// Intersection via the standard w-trick: (w*I + (1-w)*J) eliminate w.
template <typename K>
IdealT<K> intersect(const IdealT<K>& I, const IdealT<K>& J) {
    auto [ext, gi, wi] = detail::extend_ring_w(I);
    std::vector<int> var_map(I.ring->nvars());
    for (int i = 0; i < I.ring->nvars(); ++i) var_map[std::size_t(i)] = i;
    MPoly<K> w = MPoly<K>::var(ext, wi);
    MPoly<K> one_minus_w = MPoly<K>::constant(ext, K(1)) - w;
    std::vector<MPoly<K>> gens;
    for (auto& g : gi) gens.push_back(g * w);
    for (auto& g : J.gens) gens.push_back(g.mapped(ext, var_map) * one_minus_w);
    IdealT<K> E = eliminate(IdealT<K>(ext, std::move(gens)), {wi});
    std::vector<MPoly<K>> back;
    for (auto& g : E.gens) back.push_back(g.mapped(I.ring, var_map));
    return IdealT<K>(I.ring, std::move(back));
}

// I : B^inf for an ideal B, as the intersection over a generating set of B of
// the single-polynomial saturations (valid by the pigeonhole argument on
// powers of a finite generating set).
template <typename K>
IdealT<K> saturate_by_ideal(const IdealT<K>& I, const IdealT<K>& B) {
    // Use the reduced basis of B: fewer, smaller generators.
    auto gens = B.basis(MonomialOrder::degrevlex(B.ring->nvars()));
    std::optional<IdealT<K>> acc;
    for (auto& g : gens) {
        if (g.is_constant()) {
            if (!g.is_zero()) return IdealT<K>(I.ring, I.gens); // V(B) empty: I unchanged
            continue;
        }
        IdealT<K> S = saturate(I, g);
        acc = acc ? intersect(*acc, S) : std::move(S);
    }
    if (!acc) return IdealT<K>(I.ring, I.gens); // B = (0): nothing to remove
    return *acc;
}

// Radical membership: f in rad(I) iff 1 in I + (1 - w*f).
template <typename K>
bool radical_member(const MPoly<K>& f, const IdealT<K>& I) {
    if (f.is_zero()) return true;
    auto [ext, gens, wi] = detail::extend_ring_w(I);
    std::vector<int> var_map(I.ring->nvars());
    for (int i = 0; i < I.ring->nvars(); ++i) var_map[std::size_t(i)] = i;
    MPoly<K> fw = f.mapped(ext, var_map);
    gens.push_back(MPoly<K>::constant(ext, K(1)) - fw * MPoly<K>::var(ext, wi));
    return is_trivial(IdealT<K>(ext, std::move(gens)));
}

// Dense coefficient vector (ascending degree) of a polynomial that involves
// only variable v.
template <typename K>
std::vector<K> univariate_coeffs(const MPoly<K>& p, int v) {
    std::vector<K> c;
    for (auto& t : p.terms()) {
        if (t.m.deg != t.m.e[v]) throw std::invalid_argument("univariate_coeffs: not univariate");
        if (int(c.size()) <= t.m.e[v]) c.resize(std::size_t(t.m.e[v]) + 1, K(0));
        c[t.m.e[v]] += t.c;
    }
    while (!c.empty() && field_is_zero(c.back())) c.pop_back();
    return c;
}

// The unique variable a polynomial uses, or -1 (constant) / -2 (several).
template <typename K>
int single_var(const MPoly<K>& p) {
    int found = -1;
    for (int v = 0; v < p.ring()->nvars(); ++v) {
        if (p.uses_var(v)) {
            if (found >= 0) return -2;
            found = v;
        }
    }
    return found;
}

} // namespace ennea
