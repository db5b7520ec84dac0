#pragma once

#include <string>
#include <vector>

#include "ennea/groebner.hpp"
#include "ennea/incidence.hpp"
#include "ennea/linalg.hpp"
#include "ennea/parametrize.hpp"

namespace ennea {

// Collinearity condition of a triple on the parametrized points: the
// determinant of the three coordinate rows.
inline QPoly triple_det(const Parametrization& par, const Triple& t) {
    const auto& A = par.pts[std::size_t(t.a)].xyz;
    const auto& B = par.pts[std::size_t(t.b)].xyz;
    const auto& C = par.pts[std::size_t(t.c)].xyz;
    return det3(A[0], A[1], A[2], B[0], B[1], B[2], C[0], C[1], C[2]);
}

// The ideal of the structure's blocks: one normalized determinant per block
// not already satisfied by construction, in block order; identically-zero
// conditions are dropped.
inline Ideal alignment_ideal(const Parametrization& par, const IncidenceStructure& s) {
    MonomialOrder ord = MonomialOrder::degrevlex(par.ring->nvars());
    std::vector<QPoly> gens;
    for (auto& b : s.blocks) {
        if (std::binary_search(par.consumed.begin(), par.consumed.end(), b)) continue;
        QPoly d = triple_det(par, b);
        if (!d.is_zero()) gens.push_back(normalized(d, ord));
    }
    return make_ideal<Rat>(par.ring, std::move(gens));
}

// Everything the realizability decision needs: the alignment ideal plus the
// loci that a genuine realization must avoid — coincident point pairs and
// collinear non-block triples.
struct AlignmentSystem {
    Parametrization par;
    IncidenceStructure s;
    Ideal I;                          // raw alignment ideal
    std::vector<QPoly> nonblock_dets; // non-constant determinants, all_triples order
    std::vector<Triple> nonblock_tris; // the matching triples
    std::vector<Ideal> coincidences;  // 2x2-minor ideals of pairs that could collide
};

inline AlignmentSystem make_alignment_system(const IncidenceStructure& s) {
    AlignmentSystem as;
    as.par = parametrize(s);
    as.s = s;
    as.I = alignment_ideal(as.par, s);
    MonomialOrder ord = MonomialOrder::degrevlex(as.par.ring->nvars());

    for (auto& t : all_triples()) {
        if (s.has_block(t)) continue;
        QPoly d = triple_det(as.par, t);
        if (d.is_zero())
            throw DegenerateInputError("non-block triple " + t.str() +
                                       " is collinear by construction in " + s.str());
        if (d.is_constant()) continue; // never vanishes
        as.nonblock_dets.push_back(normalized(d, ord));
        as.nonblock_tris.push_back(t);
    }

    for (int i = 0; i < 9; ++i) {
        for (int j = i + 1; j < 9; ++j) {
            const auto& P = as.par.pts[std::size_t(i)].xyz;
            const auto& Q = as.par.pts[std::size_t(j)].xyz;
            std::vector<QPoly> mins = {P[0] * Q[1] - P[1] * Q[0], P[0] * Q[2] - P[2] * Q[0],
                                       P[1] * Q[2] - P[2] * Q[1]};
            bool never_equal = false;
            std::vector<QPoly> keep;
            for (auto& m : mins) {
                if (m.is_zero()) continue;
                if (m.is_constant()) {
                    never_equal = true;
                    break;
                }
                keep.push_back(normalized(m, ord));
            }
            if (never_equal) continue;
            if (keep.empty())
                throw DegenerateInputError("points " + std::to_string(i) + " and " +
                                           std::to_string(j) +
                                           " coincide by construction in " + s.str());
            as.coincidences.push_back(make_ideal<Rat>(as.par.ring, std::move(keep)));
        }
    }
    return as;
}

// `from` with every point-coincidence component removed.
inline Ideal coincidence_saturated(const AlignmentSystem& as, const Ideal& from) {
    Ideal J(from.ring, from.gens);
    if (is_zero_ideal(J) || is_trivial(J)) return J;
    for (auto& B : as.coincidences) {
        J = saturate_by_ideal(J, B);
        if (is_trivial(J)) break;
    }
    return J;
}

inline Ideal coincidence_saturated(const AlignmentSystem& as) {
    return coincidence_saturated(as, as.I);
}

// The coincidence-free ideal with every unwanted-collinearity component
// removed as well: its variety is the closure of the realizations carrying
// exactly the structure's collinearities.
inline Ideal strict_ideal(const AlignmentSystem& as, const Ideal& coincidence_free) {
    Ideal J(coincidence_free.ring, coincidence_free.gens);
    if (is_zero_ideal(J) || is_trivial(J)) return J;
    for (auto& d : as.nonblock_dets) {
        J = saturate(J, d);
        if (is_trivial(J)) break;
    }
    return J;
}

// All non-block triples collinear on every coincidence-free realization:
// membership of their determinants in the saturated alignment ideal.
inline std::vector<Triple> forced_from(const AlignmentSystem& as, const Ideal& coincidence_free) {
    std::vector<Triple> out;
    if (is_zero_ideal(coincidence_free)) return out;
    for (std::size_t i = 0; i < as.nonblock_dets.size(); ++i)
        if (member(as.nonblock_dets[i], coincidence_free)) out.push_back(as.nonblock_tris[i]);
    return out;
}

inline std::vector<Triple> forced_collinearities(const IncidenceStructure& s) {
    AlignmentSystem as = make_alignment_system(s);
    if (is_trivial(as.I)) return {};
    Ideal Ic = coincidence_saturated(as);
    if (is_trivial(Ic)) return {};
    return forced_from(as, Ic);
}

} // namespace ennea
