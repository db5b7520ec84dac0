#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ennea/incidence.hpp"
#include "ennea/mpoly.hpp"

namespace ennea {

// A projective point whose coordinates are polynomials in the parameters
// introduced while pinning down a structure.
struct ParamPoint {
    std::array<QPoly, 3> xyz;
    std::vector<int> params; // ascending parameter indices the point uses
};

// Nine parametrized points realizing a structure's early blocks by
// construction.  Blocks in `consumed` have identically-zero determinants;
// the remaining blocks supply the alignment conditions.
struct Parametrization {
    RingPtr ring; // t0..t{nparams-1}
    std::array<ParamPoint, 9> pts;
    int nparams = 0;
    std::vector<Triple> consumed;
    std::vector<std::string> log; // one line per point assignment
};

// The fixed frame: two crossing lines with three points each, meeting in
// P0, the remaining four points in general position.
inline std::array<std::array<long, 3>, 5> base_point_coords() {
    return {{{0, 0, 1}, {1, 0, 1}, {2, 0, 1}, {0, 1, 1}, {0, 2, 1}}};
}

inline std::array<ParamPoint, 5> base_points(const RingPtr& ring) {
    std::array<ParamPoint, 5> out;
    auto coords = base_point_coords();
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 3; ++j)
            out[std::size_t(i)].xyz[std::size_t(j)] =
                QPoly::constant(ring, Rat(coords[std::size_t(i)][std::size_t(j)]));
    return out;
}

namespace detail {

// The block (if any) that pins point p against two already-assigned points:
// among blocks {a, b, p} with a < b both assigned, the one minimizing
// (b, a) lexicographically, i.e. the lowest fresh anchor first.
inline std::optional<Triple> pinning_block(const IncidenceStructure& s, int p,
                                           const std::array<bool, 9>& assigned) {
    std::optional<Triple> bestb;
    int best_hi = 10, best_lo = 10;
    for (auto& b : s.blocks) {
        if (!b.contains(p)) continue;
        int o1 = -1, o2 = -1;
        for (int i = 0; i < 3; ++i) {
            if (b[i] == p) continue;
            (o1 < 0 ? o1 : o2) = b[i];
        }
        if (!assigned[std::size_t(o1)] || !assigned[std::size_t(o2)]) continue;
        int lo = std::min(o1, o2), hi = std::max(o1, o2);
        if (hi < best_hi || (hi == best_hi && lo < best_lo)) {
            best_hi = hi;
            best_lo = lo;
            bestb = b;
        }
    }
    return bestb;
}

inline void set_const_point(ParamPoint& pt, const RingPtr& ring, long x, long y, long z) {
    pt.xyz[0] = QPoly::constant(ring, Rat(x));
    pt.xyz[1] = QPoly::constant(ring, Rat(y));
    pt.xyz[2] = QPoly::constant(ring, Rat(z));
}

} // namespace detail

// Assign coordinates to the nine points of a structure with as few
// parameters as possible.  Three shapes are handled:
//   - the standard case: blocks 012 and 034 present, the five frame points
//     fixed, points 5..8 assigned greedily;
//   - pairwise-disjoint blocks (the levels <= 3 without the frame): the
//     first block is pinned to the frame's first line, later blocks get two
//     free endpoints and one one-parameter point;
//   - the empty structure: four points of a projective frame fixed, the
//     rest free.
// Each remaining point on a line through two assigned points becomes
// P_a + t*P_b (one parameter); otherwise it is free in the chart z = 1
// (two parameters).  Anything else raises FrameMissingError (relabel to the
// canonical representative first).
inline Parametrization parametrize(const IncidenceStructure& s) {
    bool has_frame =
        s.has_block(make_triple(0, 1, 2)) && s.has_block(make_triple(0, 3, 4));
    bool disjoint = !s.blocks.empty();
    for (std::size_t i = 0; i < s.blocks.size() && disjoint; ++i)
        for (std::size_t j = i + 1; j < s.blocks.size() && disjoint; ++j)
            disjoint = shared_points(s.blocks[i], s.blocks[j]) == 0;
    if (!has_frame && !disjoint && !s.blocks.empty())
        throw FrameMissingError("parametrize: structure " + s.str() +
                                " lacks blocks 012/034 and is not a disjoint union");

    std::array<bool, 9> assigned{};
    std::vector<int> order; // unassigned points, processed ascending

    // First pass: count parameters so the ring can be built up front.
    int nparams = 0;
    {
        std::array<bool, 9> a{};
        auto plan_point = [&](int p) {
            auto blk = detail::pinning_block(s, p, a);
            nparams += blk ? 1 : 2;
            a[std::size_t(p)] = true;
        };
        if (s.blocks.empty()) {
            for (int p = 0; p < 4; ++p) a[std::size_t(p)] = true;
            for (int p = 4; p < 9; ++p) plan_point(p);
        } else if (has_frame) {
            for (int p = 0; p < 5; ++p) a[std::size_t(p)] = true;
            for (int p = 5; p < 9; ++p) plan_point(p);
        } else {
            const Triple& f = s.blocks[0];
            for (int i = 0; i < 3; ++i) a[std::size_t(f[i])] = true;
            for (int p = 0; p < 9; ++p)
                if (!a[std::size_t(p)]) plan_point(p);
        }
    }

    Parametrization par;
    par.ring = param_ring(nparams);
    par.nparams = nparams;
    const RingPtr& R = par.ring;

    int next_param = 0;
    auto fresh = [&]() { return next_param++; };

    auto assign_point = [&](int p) {
        ParamPoint& pt = par.pts[std::size_t(p)];
        auto blk = detail::pinning_block(s, p, assigned);
        if (blk) {
            int a = -1, b = -1;
            for (int i = 0; i < 3; ++i) {
                if ((*blk)[i] == p) continue;
                (a < 0 ? a : b) = (*blk)[i];
            }
            int t = fresh();
            QPoly tv = QPoly::var(R, t);
            const ParamPoint& A = par.pts[std::size_t(a)];
            const ParamPoint& B = par.pts[std::size_t(b)];
            for (int j = 0; j < 3; ++j)
                pt.xyz[std::size_t(j)] = A.xyz[std::size_t(j)] + tv * B.xyz[std::size_t(j)];
            pt.params = A.params;
            for (int q : B.params) pt.params.push_back(q);
            pt.params.push_back(t);
            std::sort(pt.params.begin(), pt.params.end());
            pt.params.erase(std::unique(pt.params.begin(), pt.params.end()), pt.params.end());
            par.consumed.push_back(*blk);
            par.log.push_back("P" + std::to_string(p) + " = P" + std::to_string(a) + " + t" +
                              std::to_string(t) + "*P" + std::to_string(b) + " (block " +
                              blk->str() + ")");
        } else {
            int tx = fresh(), ty = fresh();
            pt.xyz[0] = QPoly::var(R, tx);
            pt.xyz[1] = QPoly::var(R, ty);
            pt.xyz[2] = QPoly::constant(R, Rat(1));
            pt.params = {tx, ty};
            par.log.push_back("P" + std::to_string(p) + " = (t" + std::to_string(tx) + " : t" +
                              std::to_string(ty) + " : 1) free");
        }
        assigned[std::size_t(p)] = true;
    };

    if (s.blocks.empty()) {
        // A projective frame on the first four points: no realization of the
        // empty structure has three of them collinear, so this loses nothing.
        detail::set_const_point(par.pts[0], R, 0, 0, 1);
        detail::set_const_point(par.pts[1], R, 1, 0, 1);
        detail::set_const_point(par.pts[2], R, 0, 1, 1);
        detail::set_const_point(par.pts[3], R, 1, 1, 1);
        for (int p = 0; p < 4; ++p) {
            assigned[std::size_t(p)] = true;
            par.log.push_back("P" + std::to_string(p) + " fixed (projective frame)");
        }
        for (int p = 4; p < 9; ++p) assign_point(p);
    } else if (has_frame) {
        auto coords = base_point_coords();
        for (int p = 0; p < 5; ++p) {
            detail::set_const_point(par.pts[std::size_t(p)], R, coords[std::size_t(p)][0],
                                    coords[std::size_t(p)][1], coords[std::size_t(p)][2]);
            assigned[std::size_t(p)] = true;
            par.log.push_back("P" + std::to_string(p) + " fixed (frame)");
        }
        par.consumed.push_back(make_triple(0, 1, 2));
        par.consumed.push_back(make_triple(0, 3, 4));
        for (int p = 5; p < 9; ++p) assign_point(p);
    } else {
        const Triple& f = s.blocks[0];
        detail::set_const_point(par.pts[std::size_t(f.a)], R, 0, 0, 1);
        detail::set_const_point(par.pts[std::size_t(f.b)], R, 1, 0, 1);
        detail::set_const_point(par.pts[std::size_t(f.c)], R, 2, 0, 1);
        for (int i = 0; i < 3; ++i) {
            assigned[std::size_t(f[i])] = true;
            par.log.push_back("P" + std::to_string(f[i]) + " fixed (first block)");
        }
        par.consumed.push_back(f);
        for (int p = 0; p < 9; ++p)
            if (!assigned[std::size_t(p)]) assign_point(p);
    }

    std::sort(par.consumed.begin(), par.consumed.end());
    return par;
}

} // namespace ennea
