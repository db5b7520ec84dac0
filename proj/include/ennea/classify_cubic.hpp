#pragma once
// Classification of realizable structures against irreducible cubics:
//   Type A — some realization lies on an irreducible cubic (witness, an
//            explicit cubic through it and the Hilbert profile attached);
//   Type B — only realizations carrying named extra collinearities can lie
//            on one (the enlarged structure's canonical key attached);
//   Type C — no realization lies on an irreducible cubic at all.
// The residual filter settles Types B and C combinatorially; witnesses and
// the extra-cubic system settle Type A.

#include <optional>
#include <string>
#include <vector>

#include "ennea/canonical.hpp"
#include "ennea/cayley_bacharach.hpp"
#include "ennea/cubic.hpp"
#include "ennea/irreducible.hpp"
#include "ennea/realize.hpp"

namespace ennea {

enum class CubicKind { TypeA, TypeB, TypeC };

inline std::string cubic_kind_name(CubicKind k) {
    switch (k) {
        case CubicKind::TypeA: return "A";
        case CubicKind::TypeB: return "B";
        default: return "C";
    }
}

struct CubicClass {
    CubicKind kind = CubicKind::TypeC;
    std::string key;
    std::optional<Witness> witness;    // Type A: points on the cubic
    std::optional<CubicForm> cubic;    // Type A: an irreducible cubic through them
    std::vector<int> hilbert;          // Type A: profile of the witness points
    std::vector<Triple> extra;         // Type B: forced additional lines
    std::string target_key;            // Type B: canonical key of the enlargement
    int target_level = 0;
    std::string reason;                // Types B/C: one-line explanation
};

namespace detail {

// Deterministic scan of the system of cubics through nine points for an
// irreducible member: the basis vectors first, then small combinations of
// the first two (only finitely many members of a pencil are reducible).
inline std::optional<CubicForm> irreducible_member(const std::vector<CubicForm>& basis) {
    std::vector<CubicForm> cands;
    for (const auto& b : basis) cands.push_back(b);
    if (basis.size() >= 2)
        for (int k = 1; k <= 12; ++k) {
            cands.push_back(cubic_sum(basis[0], basis[1], QuadExt(Rat(k))));
            cands.push_back(cubic_sum(basis[0], basis[1], QuadExt(Rat(-k))));
        }
    for (auto& f : cands) {
        if (f.is_zero()) continue;
        normalize_cubic(f);
        if (is_irreducible(f)) return f;
    }
    return std::nullopt;
}

// Points on the nodal cubic realizing a structure whose blocks are pairwise
// disjoint: each block takes two fresh primes and their inverse product as
// group parameters (product 1 = collinear), free points take fresh primes.
// Distinct prime supports rule out unwanted collinearities.
inline Witness nodal_witness(const IncidenceStructure& s) {
    static const long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23};
    std::array<Rat, 9> u;
    int next = 0;
    std::array<bool, 9> placed{};
    for (const auto& b : s.blocks) {
        Rat p(primes[next++]), q(primes[next++]);
        u[std::size_t(b.a)] = p;
        u[std::size_t(b.b)] = q;
        u[std::size_t(b.c)] = Rat(1) / (p * q);
        placed[std::size_t(b.a)] = placed[std::size_t(b.b)] = placed[std::size_t(b.c)] = true;
    }
    for (int p = 0; p < 9; ++p)
        if (!placed[std::size_t(p)]) u[std::size_t(p)] = Rat(primes[next++]);
    Witness w;
    for (int p = 0; p < 9; ++p) {
        Rat t = (Rat(1) + u[std::size_t(p)]) / (Rat(1) - u[std::size_t(p)]);
        w.pts[std::size_t(p)] = nodal_point(t);
    }
    return w;
}

}  // namespace detail

inline CubicClass classify_on_cubic(const IncidenceStructure& s, const RealizabilityVerdict& v,
                                    const RealizeOptions& opt = {}) {
    if (v.kind == VerdictKind::NotRealizable)
        throw std::invalid_argument("classify_on_cubic: structure has no realization at all");
    CubicClass out;
    out.key = key_string(s);

    // residual filter: purely combinatorial, independent of labeling
    CbOutcome cb = cb_filter(s);
    if (cb.conflict) {
        out.kind = CubicKind::TypeC;
        out.reason = "residual line " + cb.forced_block.str() + " would meet " +
                     cb.clashing_block.str() + " twice";
        return out;
    }
    if (!cb.forced.empty()) {
        out.kind = CubicKind::TypeB;
        out.extra = cb.forced;
        std::vector<Triple> enlarged = s.blocks;
        for (const auto& t : cb.forced) enlarged.push_back(t);
        CanonicalKey target = canonical_key(make_structure(enlarged));
        out.target_key = target.key;
        out.target_level = target.representative.level();
        out.reason = "every irreducible cubic through the points adds these lines";
        return out;
    }

    // pairwise-disjoint blocks (or none): explicit points on the nodal cubic
    bool disjoint = true;
    for (std::size_t i = 0; i < s.blocks.size() && disjoint; ++i)
        for (std::size_t j = i + 1; j < s.blocks.size() && disjoint; ++j)
            disjoint = shared_points(s.blocks[i], s.blocks[j]) == 0;
    if (disjoint && s.blocks.size() <= 3) {
        Witness w = detail::nodal_witness(s);
        if (!verify_witness(w, s))
            throw InconclusiveError("nodal points failed verification for " + out.key);
        out.kind = CubicKind::TypeA;
        out.witness = w;
        out.cubic = nodal_cubic();
        out.hilbert = hilbert_profile(w.pts);
        return out;
    }

    // anything else needs the frame parametrization; relabel if necessary
    bool has_frame = s.has_block(make_triple(0, 1, 2)) && s.has_block(make_triple(0, 3, 4));
    if (!has_frame) {
        auto rl = canonical_relabeling(s);
        RealizabilityVerdict vc = classify_realizability(rl.key.representative, opt);
        CubicClass sub = classify_on_cubic(rl.key.representative, vc, opt);
        sub.key = out.key;
        if (sub.witness) {
            Witness w;
            w.d = sub.witness->d;
            for (int p = 0; p < 9; ++p)
                w.pts[std::size_t(p)] = sub.witness->pts[std::size_t(rl.perm[std::size_t(p)])];
            sub.witness = w;  // same geometric points, so cubic and profile carry over
        }
        return sub;
    }

    if (v.kind == VerdictKind::Forces)
        throw InconclusiveError("plane-forced structure without residual explanation: " +
                                out.key);
    if (!v.witness)
        throw std::invalid_argument("classify_on_cubic: realizable verdict carries no witness");

    // without three disjoint blocks a generic realization works: its cubic
    // system is nontrivial only by accident, so retry a few seeds if needed.
    // Retries pin the height per attempt, rising from 2: at height 1 the
    // parameter grid is just {±1} and every seed finds the same point.
    bool partition = !covering_partitions(s).empty();
    AlignmentSystem as = make_alignment_system(s);
    if (!partition) {
        Ideal strict = strict_ideal(as, coincidence_saturated(as));
        static const int retry_heights[] = {2, 3, 5, 8, 13, 21, 34};
        for (int attempt = 0; attempt < 8; ++attempt) {
            std::optional<Witness> w;
            if (attempt == 0) {
                w = *v.witness;
            } else {
                RealizeOptions aopt = opt;
                aopt.heights = {retry_heights[attempt - 1]};
                uint64_t seed =
                    mix_seed(opt.seed, out.key + "#cubic" + std::to_string(attempt));
                if (auto found = search_witness_on(as.par, s, strict, aopt, seed))
                    w = found->first;
            }
            if (!w) continue;
            if (auto m = detail::irreducible_member(cubics_through(w->pts))) {
                out.kind = CubicKind::TypeA;
                out.witness = w;
                out.cubic = m;
                out.hilbert = hilbert_profile(w->pts);
                return out;
            }
        }
        // fall through: force a second cubic explicitly
    }

    // realizations with two independent cubics through the points: the
    // extra-cubic system, restricted to honest realizations
    Ideal X = extra_cubic_ideal(as.par, s);
    if (!is_trivial(X) && !is_zero_ideal(X)) X = coincidence_saturated(as, X);
    if (!is_trivial(X) && !is_zero_ideal(X)) X = strict_ideal(as, X);
    if (is_trivial(X)) {
        if (partition) {
            // Three blocks cover the points, so their line product is the
            // single cubic every realization carries: never irreducible.
            out.kind = CubicKind::TypeC;
            out.reason = "no realization admits a second independent cubic";
            return out;
        }
        throw InconclusiveError("single-cubic realizations only, none irreducible yet: " +
                                out.key);
    }
    uint64_t seed = mix_seed(opt.seed, out.key + "|cubic");
    auto found = search_witness_on(as.par, s, X, opt, seed);
    if (!found)
        throw InconclusiveError("no witness found on the extra-cubic system for " + out.key);
    const Witness& w = found->first;
    if (auto m = detail::irreducible_member(cubics_through(w.pts))) {
        out.kind = CubicKind::TypeA;
        out.witness = w;
        out.cubic = m;
        out.hilbert = hilbert_profile(w.pts);
        return out;
    }
    throw InconclusiveError("no irreducible member of the cubic system for " + out.key);
}

}  // namespace ennea
