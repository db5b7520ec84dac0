#pragma once
// Residual collinearity filter.  Three pairwise-disjoint blocks make a
// cubic of three lines through all nine points; on an irreducible cubic
// through the points, any two disjoint blocks then force the complementary
// triple to be collinear as well.  Iterating either reaches a clash with an
// existing block (no irreducible cubic possible) or a stable enlargement.

#include <array>
#include <vector>

#include "ennea/incidence.hpp"

namespace ennea {

inline Triple complement_triple(const Triple& a, const Triple& b) {
    std::array<bool, 9> used{};
    for (int x : {a.a, a.b, a.c, b.a, b.b, b.c}) used[x] = true;
    std::array<int, 3> rest{};
    int n = 0;
    for (int x = 0; x < 9; ++x)
        if (!used[x]) rest[n++] = x;
    return make_triple(rest[0], rest[1], rest[2]);
}

// All unordered triples of pairwise-disjoint blocks; three disjoint blocks
// necessarily cover the nine points.
inline std::vector<std::array<Triple, 3>> covering_partitions(const IncidenceStructure& s) {
    std::vector<std::array<Triple, 3>> out;
    const auto& b = s.blocks;
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j) {
            if (shared_points(b[i], b[j]) != 0) continue;
            for (std::size_t k = j + 1; k < b.size(); ++k)
                if (shared_points(b[i], b[k]) == 0 && shared_points(b[j], b[k]) == 0)
                    out.push_back({b[i], b[j], b[k]});
        }
    return out;
}

struct CbOutcome {
    bool conflict = false;
    Triple forced_block{};    // complementary triple that caused the clash
    Triple clashing_block{};  // line already carrying two of its points
    std::vector<Triple> forced;  // new collinearities accumulated, sorted
};

inline CbOutcome cb_filter(const IncidenceStructure& s) {
    CbOutcome out;
    std::vector<Triple> cur = s.blocks;
    for (;;) {
        bool partition = false;
        for (std::size_t i = 0; i < cur.size() && !partition; ++i)
            for (std::size_t j = i + 1; j < cur.size() && !partition; ++j) {
                if (shared_points(cur[i], cur[j]) != 0) continue;
                for (std::size_t k = j + 1; k < cur.size(); ++k)
                    if (shared_points(cur[i], cur[k]) == 0 &&
                        shared_points(cur[j], cur[k]) == 0) {
                        partition = true;
                        break;
                    }
            }
        if (!partition) break;
        std::vector<Triple> fresh;
        for (std::size_t i = 0; i < cur.size(); ++i)
            for (std::size_t j = i + 1; j < cur.size(); ++j) {
                if (shared_points(cur[i], cur[j]) != 0) continue;
                Triple b3 = complement_triple(cur[i], cur[j]);
                bool known = false;
                for (const auto& t : cur)
                    if (t == b3) known = true;
                for (const auto& t : fresh)
                    if (t == b3) known = true;
                if (known) continue;
                for (const auto& t : cur) {
                    if (shared_points(b3, t) >= 2) {
                        out.conflict = true;
                        out.forced_block = b3;
                        out.clashing_block = t;
                        return out;
                    }
                }
                for (const auto& t : fresh) {
                    if (shared_points(b3, t) >= 2) {
                        out.conflict = true;
                        out.forced_block = b3;
                        out.clashing_block = t;
                        return out;
                    }
                }
                fresh.push_back(b3);
            }
        if (fresh.empty()) break;
        for (const auto& t : fresh) {
            cur.push_back(t);
            out.forced.push_back(t);
        }
        std::sort(cur.begin(), cur.end());
    }
    std::sort(out.forced.begin(), out.forced.end());
    return out;
}

}  // namespace ennea
