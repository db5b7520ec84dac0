#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ennea/alignment.hpp"
#include "ennea/canonical.hpp"
#include "ennea/solve.hpp"
#include "ennea/witness.hpp"

namespace ennea {

// Stable 64-bit string hash (FNV-1a); the standard library hash is not
// pinned down, and seeds must reproduce across builds.
inline uint64_t fnv1a64(const std::string& s, uint64_t h = 1469598103934665603ULL) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

// Per-structure deterministic seed: global seed bytes, then the block key.
inline uint64_t mix_seed(uint64_t seed, const std::string& key) {
    uint64_t h = 1469598103934665603ULL;
    for (int i = 0; i < 8; ++i) {
        h ^= (seed >> (8 * i)) & 0xffu;
        h *= 1099511628211ULL;
    }
    return fnv1a64(key, h);
}

struct RealizeOptions {
    uint64_t seed = 20250901ULL;
    std::vector<int> heights = {1, 2, 3, 5, 8, 13};
    int trials_per_height = 64;
    int extension_trials = 24;
};

enum class VerdictKind { OverQ, OverQuadExt, Forces, NotRealizable };

inline std::string verdict_name(VerdictKind k) {
    switch (k) {
        case VerdictKind::OverQ: return "Q";
        case VerdictKind::OverQuadExt: return "QuadExt";
        case VerdictKind::Forces: return "Forces";
        case VerdictKind::NotRealizable: return "None";
    }
    return "?";
}

struct RealizabilityVerdict {
    VerdictKind kind = VerdictKind::NotRealizable;
    std::string key;                      // block key of the classified structure
    std::optional<Witness> witness;       // OverQ / OverQuadExt
    long d = 0;                           // OverQuadExt: the extension
    std::vector<Triple> forced;           // Forces
    std::string target_key;               // Forces: canonical key of s united with them
    int target_level = 0;
    std::vector<std::string> certificate; // NotRealizable: reduced basis
    uint64_t seed = 0;                    // the mixed per-structure seed used
};

namespace detail {

inline Rat rand_rat(std::mt19937_64& rng, int h) {
    long num = 1 + long(rng() % uint64_t(h));
    long den = 1 + long(rng() % uint64_t(h));
    if (rng() & 1u) num = -num;
    return Rat(BigInt(num), BigInt(den));
}

// Deterministic randomized search for parameter points on a variety that
// evaluate to a verified witness.  Free parameters (absent from the system)
// take random values of bounded height; positive-dimensional systems are
// sliced by substituting random values one variable at a time until the
// residue is zero-dimensional, exactly the random-specialization shortcut
// the computations are built on.
class WitnessSearch {
  public:
    WitnessSearch(const Parametrization& par, const IncidenceStructure& s, const Ideal& J,
                  uint64_t seed)
        : par_(par), s_(s), rng_(seed) {
        base_ = J.basis(MonomialOrder::degrevlex(J.ring->nvars()));
        support_ = support_vars(base_, par_.ring);
    }

    const std::set<long>& candidate_ds() const { return candidate_ds_; }
    // True when the rational pass enumerated every rational solution and
    // none verified (nothing was randomized, so retries cannot help).
    bool rational_exhausted() const { return rational_exhausted_; }

    std::optional<std::pair<Witness, std::vector<QuadExt>>>
    rational_pass(const std::vector<int>& heights, int trials) {
        SolveStatus st;
        auto pts = solve_points_rational(base_, par_.ring, support_, st);
        absorb(st);
        bool fully_pinned = int(support_.size()) == par_.nparams;
        if (st.zero_dimensional) {
            if (pts.empty()) {
                rational_exhausted_ = true;
                return std::nullopt;
            }
            if (fully_pinned) {
                for (auto& pt : pts)
                    if (auto w = attempt(pt, {}, 1)) return w;
                rational_exhausted_ = true;
                return std::nullopt;
            }
            for (int h : heights)
                for (int t = 0; t < trials; ++t)
                    for (auto& pt : pts)
                        if (auto w = attempt(pt, {}, h)) return w;
            return std::nullopt;
        }
        for (int h : heights) {
            for (int t = 0; t < trials; ++t) {
                auto sliced = slice(h);
                if (!sliced) continue;
                for (auto& pt : sliced->first)
                    if (auto w = attempt(pt, sliced->second, h)) return w;
            }
        }
        return std::nullopt;
    }

    std::optional<std::pair<Witness, std::vector<QuadExt>>> extension_pass(int trials) {
        // snapshot: attempts below may add further candidates, handled next round
        std::vector<long> ds(candidate_ds_.begin(), candidate_ds_.end());
        for (long d : ds) {
            SolveStatus st;
            auto kpts = solve_points_quadext(base_, par_.ring, support_, d, st);
            absorb(st);
            if (st.zero_dimensional) {
                // with every parameter pinned an attempt is deterministic,
                // so each solution needs only one look
                int reps = int(support_.size()) == par_.nparams ? 1 : trials;
                for (auto& kpt : kpts)
                    for (int t = 0; t < reps; ++t)
                        if (auto w = attempt_k(kpt, {}, 3, d)) return w;
                continue;
            }
            for (int t = 0; t < trials; ++t) {
                auto sliced = slice_k(3, d);
                if (!sliced) continue;
                for (auto& kpt : sliced->first)
                    if (auto w = attempt_k(kpt, sliced->second, 3, d)) return w;
            }
        }
        return std::nullopt;
    }

  private:
    void absorb(const SolveStatus& st) {
        for (long d : st.candidate_ds) candidate_ds_.insert(d);
    }

    // Substitute random values for support variables (highest first) until
    // the residual system is zero-dimensional; returns its rational points
    // and the substitution, or nothing when the slice is inconsistent.
    // Solvable side branches of a positive-dimensional system are kept only
    // as a fallback: returning them eagerly would pin every trial to the
    // same special points and defeat the randomization.
    std::optional<std::pair<std::vector<PointMap<Rat>>, PointMap<Rat>>> slice(int h) {
        std::vector<QPoly> gens = base_;
        PointMap<Rat> fixed;
        std::optional<std::pair<std::vector<PointMap<Rat>>, PointMap<Rat>>> fallback;
        for (int round = 0; round <= par_.nparams; ++round) {
            auto sup = support_vars(gens, par_.ring);
            SolveStatus st;
            auto pts = solve_points_rational(gens, par_.ring, sup, st);
            absorb(st);
            if (st.zero_dimensional || sup.empty()) {
                if (!pts.empty()) return std::make_pair(pts, fixed);
                return fallback; // inconsistent slice
            }
            if (!pts.empty() && !fallback) fallback = std::make_pair(pts, fixed);
            int v = sup.back();
            Rat r = rand_rat(rng_, h);
            fixed[v] = r;
            for (auto& g : gens) g = g.substituted(v, r);
        }
        return fallback;
    }

    std::optional<std::pair<std::vector<PointMap<QuadExt>>, PointMap<Rat>>> slice_k(int h,
                                                                                    long d) {
        std::vector<QPoly> gens = base_;
        PointMap<Rat> fixed;
        std::optional<std::pair<std::vector<PointMap<QuadExt>>, PointMap<Rat>>> fallback;
        for (int round = 0; round <= par_.nparams; ++round) {
            auto sup = support_vars(gens, par_.ring);
            SolveStatus st;
            auto pts = solve_points_quadext(gens, par_.ring, sup, d, st);
            absorb(st);
            if (st.zero_dimensional || sup.empty()) {
                if (!pts.empty()) return std::make_pair(pts, fixed);
                return fallback;
            }
            if (!pts.empty() && !fallback) fallback = std::make_pair(pts, fixed);
            int v = sup.back();
            Rat r = rand_rat(rng_, h);
            fixed[v] = r;
            for (auto& g : gens) g = g.substituted(v, r);
        }
        return fallback;
    }

    template <typename K>
    std::vector<QuadExt> assemble(const PointMap<K>& pt, const PointMap<Rat>& fixed, int h) {
        std::vector<QuadExt> vals(std::size_t(par_.nparams), QuadExt(Rat(0)));
        std::vector<bool> set(std::size_t(par_.nparams), false);
        for (auto& [v, r] : fixed) {
            vals[std::size_t(v)] = QuadExt(r);
            set[std::size_t(v)] = true;
        }
        for (auto& [v, r] : pt) {
            vals[std::size_t(v)] = QuadExt(r);
            set[std::size_t(v)] = true;
        }
        for (int v = 0; v < par_.nparams; ++v)
            if (!set[std::size_t(v)]) vals[std::size_t(v)] = QuadExt(rand_rat(rng_, h));
        return vals;
    }

    std::optional<std::pair<Witness, std::vector<QuadExt>>> attempt(const PointMap<Rat>& pt,
                                                                    const PointMap<Rat>& fixed,
                                                                    int h) {
        auto vals = assemble(pt, fixed, h);
        auto w = evaluate_witness(par_, vals, 0);
        if (w && verify_witness(*w, s_)) return std::make_pair(*w, vals);
        return std::nullopt;
    }

    std::optional<std::pair<Witness, std::vector<QuadExt>>>
    attempt_k(const PointMap<QuadExt>& pt, const PointMap<Rat>& fixed, int h, long d) {
        auto vals = assemble(pt, fixed, h);
        auto w = evaluate_witness(par_, vals, d);
        if (w && verify_witness(*w, s_)) return std::make_pair(*w, vals);
        return std::nullopt;
    }

    const Parametrization& par_;
    const IncidenceStructure& s_;
    std::mt19937_64 rng_;
    std::vector<QPoly> base_;
    std::vector<int> support_;
    std::set<long> candidate_ds_;
    bool rational_exhausted_ = false;
};

inline std::vector<std::string> basis_strings(const Ideal& I) {
    std::vector<std::string> out;
    for (auto& g : I.basis(MonomialOrder::degrevlex(I.ring->nvars())))
        out.push_back(poly_to_string(g));
    return out;
}

} // namespace detail

// Search for a verified witness of s on the variety of J (given inside the
// parameter ring of `par`), rational first, then over each quadratic
// extension the univariate residues suggested.
inline std::optional<std::pair<Witness, std::vector<QuadExt>>>
search_witness_on(const Parametrization& par, const IncidenceStructure& s, const Ideal& J,
                  const RealizeOptions& opt, uint64_t mixed_seed) {
    detail::WitnessSearch ws(par, s, J, mixed_seed);
    if (auto w = ws.rational_pass(opt.heights, opt.trials_per_height)) return w;
    if (auto w = ws.extension_pass(opt.extension_trials)) return w;
    return std::nullopt;
}

// Decide how (and whether) a structure embeds in the rational plane:
//   NotRealizable  — the coincidence-free alignment ideal is trivial;
//   Forces         — every realization carries extra collinearities, named,
//                    with the canonical key of the enlarged structure;
//   OverQ          — a rational witness was found (attached, verified);
//   OverQuadExt(d) — only a quadratic-extension witness was found.
// When the ideal is nontrivial, nothing is forced and no witness shows up
// within the budget, InconclusiveError is thrown rather than guessing.
inline RealizabilityVerdict classify_realizability(const IncidenceStructure& s,
                                                   const RealizeOptions& opt = {}) {
    bool has_frame = s.has_block(make_triple(0, 1, 2)) && s.has_block(make_triple(0, 3, 4));
    bool disjoint = true;
    for (std::size_t i = 0; i < s.blocks.size() && disjoint; ++i)
        for (std::size_t j = i + 1; j < s.blocks.size() && disjoint; ++j)
            disjoint = shared_points(s.blocks[i], s.blocks[j]) == 0;
    if (!s.blocks.empty() && !has_frame && !disjoint) {
        // relabel onto the canonical representative, then translate back
        auto rl = canonical_relabeling(s);
        RealizabilityVerdict v = classify_realizability(rl.key.representative, opt);
        v.key = key_string(s);
        if (v.witness) {
            Witness w;
            w.d = v.witness->d;
            for (int p = 0; p < 9; ++p)
                w.pts[std::size_t(p)] = v.witness->pts[std::size_t(rl.perm[std::size_t(p)])];
            v.witness = w;
        }
        if (!v.forced.empty()) {
            std::array<int, 9> inv{};
            for (int p = 0; p < 9; ++p) inv[std::size_t(rl.perm[std::size_t(p)])] = p;
            for (auto& t : v.forced) t = apply_perm(t, inv);
            std::sort(v.forced.begin(), v.forced.end());
        }
        return v;
    }

    RealizabilityVerdict v;
    v.key = key_string(s);
    v.seed = mix_seed(opt.seed, v.key);

    AlignmentSystem as = make_alignment_system(s);
    if (is_trivial(as.I)) {
        v.kind = VerdictKind::NotRealizable;
        v.certificate = detail::basis_strings(as.I);
        return v;
    }
    Ideal Ic = coincidence_saturated(as);
    if (is_trivial(Ic)) {
        v.kind = VerdictKind::NotRealizable;
        v.certificate = detail::basis_strings(Ic);
        return v;
    }
    std::vector<Triple> forced = forced_from(as, Ic);
    if (!forced.empty()) {
        std::vector<Triple> enlarged = s.blocks;
        for (auto& t : forced) enlarged.push_back(t);
        try {
            CanonicalKey target = canonical_key(make_structure(enlarged));
            v.kind = VerdictKind::Forces;
            v.forced = forced;
            v.target_key = target.key;
            v.target_level = target.representative.level();
            return v;
        } catch (const SharedPairError&) {
            // a forced triple overlaps a block in two points: four points on
            // a line, so no realization with distinct points exists at all
            Ideal strict = strict_ideal(as, Ic);
            v.kind = VerdictKind::NotRealizable;
            v.certificate = detail::basis_strings(strict);
            return v;
        }
    }
    Ideal strict = strict_ideal(as, Ic);
    if (is_trivial(strict)) {
        v.kind = VerdictKind::NotRealizable;
        v.certificate = detail::basis_strings(strict);
        return v;
    }

    if (auto found = search_witness_on(as.par, s, strict, opt, v.seed)) {
        v.witness = found->first;
        v.d = found->first.d;
        v.kind = v.d == 0 ? VerdictKind::OverQ : VerdictKind::OverQuadExt;
        return v;
    }
    throw InconclusiveError("no witness within the height budget for {" + v.key +
                            "} and the ideal is nontrivial with nothing forced");
}

// Witness search alone, on the structure's own strict ideal; absence is a
// value here, not an error.
inline std::optional<Witness> find_witness(const IncidenceStructure& s, int height_bound,
                                           uint64_t seed) {
    RealizeOptions opt;
    opt.seed = seed;
    std::vector<int> hs;
    for (int h : opt.heights)
        if (h <= height_bound) hs.push_back(h);
    if (hs.empty()) hs.push_back(height_bound);
    opt.heights = hs;

    try {
        RealizabilityVerdict v = classify_realizability(s, opt);
        if (v.witness) return v.witness;
        return std::nullopt;
    } catch (const InconclusiveError&) {
        return std::nullopt;
    }
}

} // namespace ennea
