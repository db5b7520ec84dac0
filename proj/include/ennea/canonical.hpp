#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ennea/incidence.hpp"

namespace ennea {

namespace detail {

// Color refinement: start from point degrees, then repeatedly re-color by
// the multiset of co-block partner color pairs.  Colors are ranks of sorted
// signatures, so they are independent of the labeling.
inline std::array<int, 9> refine_colors(const IncidenceStructure& s) {
    std::array<int, 9> color{};
    {
        auto deg = s.point_degrees();
        for (int p = 0; p < 9; ++p) color[std::size_t(p)] = deg[std::size_t(p)];
    }
    for (int round = 0; round < 9; ++round) {
        // signature: (color, sorted list of sorted partner color pairs)
        std::vector<std::vector<int>> sig(9);
        for (int p = 0; p < 9; ++p) {
            std::vector<std::pair<int, int>> pairs;
            for (auto& b : s.blocks) {
                if (!b.contains(p)) continue;
                std::vector<int> others;
                for (int i = 0; i < 3; ++i)
                    if (b[i] != p) others.push_back(color[std::size_t(b[i])]);
                pairs.push_back({std::min(others[0], others[1]), std::max(others[0], others[1])});
            }
            std::sort(pairs.begin(), pairs.end());
            sig[std::size_t(p)].push_back(color[std::size_t(p)]);
            for (auto& [x, y] : pairs) {
                sig[std::size_t(p)].push_back(x);
                sig[std::size_t(p)].push_back(y);
            }
        }
        std::vector<std::vector<int>> sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::array<int, 9> next{};
        for (int p = 0; p < 9; ++p)
            next[std::size_t(p)] =
                int(std::lower_bound(sorted.begin(), sorted.end(), sig[std::size_t(p)]) -
                    sorted.begin());
        if (next == color) break;
        color = next;
    }
    return color;
}

// Minimizes the colex-sorted relabeled block list over all 9! relabelings.
// Labels 0..8 are assigned depth first; a block becomes part of the image
// prefix exactly when its largest new label is placed, so the completed
// blocks of a partial assignment are a stable prefix of the final sequence.
// Two prunes keep this fast: a branch whose prefix already exceeds the
// incumbent can never win, and a branch whose prefix ties the incumbent must
// keep completing blocks on the incumbent's schedule (its next block would
// otherwise carry a larger maximal label and lose).
struct CanonicalSearch {
    const IncidenceStructure& s;
    std::array<int, 9> label{};    // point -> new label (-1 unassigned)
    std::array<bool, 9> used{};    // point already labeled
    std::array<int, 9> degree{};   // block degree, for candidate ordering
    std::vector<Triple> best;      // incumbent complete image
    std::array<int, 9> best_label{}; // labeling reaching it (-1: label irrelevant)
    std::array<int, 10> schedule{}; // schedule[k]: incumbent blocks done after k labels
    bool have_best = false;

    explicit CanonicalSearch(const IncidenceStructure& str) : s(str) {
        label.fill(-1);
        auto deg = s.point_degrees();
        for (int p = 0; p < 9; ++p) degree[std::size_t(p)] = deg[std::size_t(p)];
    }

    void run() {
        std::vector<Triple> completed;
        completed.reserve(s.blocks.size());
        dfs(0, completed);
    }

    static bool seq_less(const std::vector<Triple>& x, const std::vector<Triple>& y) {
        return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), colex_less);
    }

    void rebuild_schedule() {
        for (int k = 0; k <= 9; ++k) {
            int c = 0;
            for (auto& b : best)
                if (int(b.c) < k) ++c;
            schedule[std::size_t(k)] = c;
        }
    }

    // -1 / 0 / +1: completed prefix versus the same-length prefix of best.
    int prefix_cmp(const std::vector<Triple>& completed) const {
        for (std::size_t i = 0; i < completed.size(); ++i) {
            if (colex_less(completed[i], best[i])) return -1;
            if (colex_less(best[i], completed[i])) return 1;
        }
        return 0;
    }

    void dfs(int next_label, std::vector<Triple>& completed) {
        // once every block is imaged the remaining labels cannot matter
        if (completed.size() == s.blocks.size()) {
            if (!have_best || seq_less(completed, best)) {
                best = completed;
                best_label = label;
                have_best = true;
                rebuild_schedule();
            }
            return;
        }

        struct Cand {
            int p;
            std::vector<Triple> fresh; // blocks completed by labeling p now
        };
        std::vector<Cand> cands;
        cands.reserve(9);
        for (int p = 0; p < 9; ++p) {
            if (used[std::size_t(p)]) continue;
            label[std::size_t(p)] = next_label;
            std::vector<Triple> fresh;
            for (auto& b : s.blocks) {
                if (!b.contains(p)) continue;
                if (label[std::size_t(b.a)] >= 0 && label[std::size_t(b.b)] >= 0 &&
                    label[std::size_t(b.c)] >= 0)
                    fresh.push_back(make_triple(label[std::size_t(b.a)], label[std::size_t(b.b)],
                                                label[std::size_t(b.c)]));
            }
            label[std::size_t(p)] = -1;
            std::sort(fresh.begin(), fresh.end(), colex_less);
            cands.push_back({p, std::move(fresh)});
        }
        // explore promising assignments first so the incumbent is strong
        std::sort(cands.begin(), cands.end(), [this](const Cand& x, const Cand& y) {
            if (x.fresh.empty() != y.fresh.empty()) return y.fresh.empty();
            if (!x.fresh.empty()) {
                if (seq_less(x.fresh, y.fresh)) return true;
                if (seq_less(y.fresh, x.fresh)) return false;
            }
            if (degree[std::size_t(x.p)] != degree[std::size_t(y.p)])
                return degree[std::size_t(x.p)] > degree[std::size_t(y.p)];
            return x.p < y.p;
        });

        for (auto& cand : cands) {
            std::size_t base = completed.size();
            for (auto& f : cand.fresh) completed.push_back(f);
            bool prune = false;
            if (have_best) {
                int c = prefix_cmp(completed);
                if (c > 0) {
                    prune = true;
                } else if (c == 0 &&
                           int(completed.size()) < schedule[std::size_t(next_label) + 1]) {
                    prune = true; // behind the incumbent's completion schedule
                }
            }
            if (!prune) {
                used[std::size_t(cand.p)] = true;
                label[std::size_t(cand.p)] = next_label;
                dfs(next_label + 1, completed);
                label[std::size_t(cand.p)] = -1;
                used[std::size_t(cand.p)] = false;
            }
            completed.resize(base);
        }
    }
};

} // namespace detail

// Canonical representative and its serialized key.
struct CanonicalKey {
    IncidenceStructure representative; // blocks lex-sorted
    std::string key;                   // "012.034.056" over the lex-sorted blocks

    friend bool operator==(const CanonicalKey& x, const CanonicalKey& y) {
        return x.key == y.key;
    }
    friend bool operator!=(const CanonicalKey& x, const CanonicalKey& y) { return !(x == y); }
    friend bool operator<(const CanonicalKey& x, const CanonicalKey& y) { return x.key < y.key; }
};

inline std::string key_string(const IncidenceStructure& s) {
    std::string k;
    for (std::size_t i = 0; i < s.blocks.size(); ++i) {
        if (i) k += ".";
        k += s.blocks[i].str();
    }
    return k;
}

// Canonical representative together with a relabeling that reaches it.
struct RelabeledCanonical {
    CanonicalKey key;
    std::array<int, 9> perm; // original point -> canonical label
};

// The least colex-sorted relabeled block list over all 9! point relabelings,
// plus one witnessing permutation (labels the search never needed to place
// are filled in ascending point order).
inline RelabeledCanonical canonical_relabeling(const IncidenceStructure& s) {
    std::array<int, 9> perm{};
    if (s.blocks.empty()) {
        for (int p = 0; p < 9; ++p) perm[std::size_t(p)] = p;
        return {{IncidenceStructure{}, ""}, perm};
    }
    detail::CanonicalSearch search(s);
    search.run();
    perm = search.best_label;
    std::array<bool, 9> taken{};
    for (int v : perm)
        if (v >= 0) taken[std::size_t(v)] = true;
    int next = 0;
    for (int p = 0; p < 9; ++p) {
        if (perm[std::size_t(p)] >= 0) continue;
        while (taken[std::size_t(next)]) ++next;
        perm[std::size_t(p)] = next;
        taken[std::size_t(next)] = true;
    }
    IncidenceStructure rep = make_structure(search.best);
    return {{rep, key_string(rep)}, perm};
}

inline CanonicalKey canonical_key(const IncidenceStructure& s) {
    return canonical_relabeling(s).key;
}

inline bool isomorphic(const IncidenceStructure& x, const IncidenceStructure& y) {
    if (x.level() != y.level()) return false;
    return canonical_key(x).key == canonical_key(y).key;
}

// Number of relabelings fixing the block set, by cell-respecting DFS with
// pair-coverage pruning.
inline long automorphism_count(const IncidenceStructure& s) {
    auto color = detail::refine_colors(s);
    // pair -> covered by a block?
    bool covered[9][9] = {};
    for (auto& b : s.blocks) {
        covered[b.a][b.b] = covered[b.b][b.a] = true;
        covered[b.a][b.c] = covered[b.c][b.a] = true;
        covered[b.b][b.c] = covered[b.c][b.b] = true;
    }
    std::array<int, 9> img{};
    img.fill(-1);
    std::array<bool, 9> used{};
    long count = 0;

    auto consistent = [&](int p, int q) {
        // p fixed last; q any earlier-assigned point
        if (covered[p][q] != covered[img[std::size_t(p)]][img[std::size_t(q)]]) return false;
        return true;
    };

    std::vector<Triple> sorted_blocks = s.blocks; // lex-sorted already

    auto block_ok = [&](const Triple& b) {
        // all three assigned: image must be a block
        Triple t = make_triple(img[std::size_t(b.a)], img[std::size_t(b.b)], img[std::size_t(b.c)]);
        return std::binary_search(sorted_blocks.begin(), sorted_blocks.end(), t);
    };

    std::function<void(int)> dfs = [&](int p) {
        if (p == 9) {
            ++count;
            return;
        }
        for (int q = 0; q < 9; ++q) {
            if (used[std::size_t(q)] || color[std::size_t(q)] != color[std::size_t(p)]) continue;
            img[std::size_t(p)] = q;
            used[std::size_t(q)] = true;
            bool ok = true;
            for (int r = 0; r < p && ok; ++r) ok = consistent(p, r);
            if (ok) {
                for (auto& b : s.blocks) {
                    if (!b.contains(p)) continue;
                    if (img[std::size_t(b.a)] >= 0 && img[std::size_t(b.b)] >= 0 &&
                        img[std::size_t(b.c)] >= 0 && !block_ok(b)) {
                        ok = false;
                        break;
                    }
                }
            }
            if (ok) dfs(p + 1);
            used[std::size_t(q)] = false;
            img[std::size_t(p)] = -1;
        }
    };
    dfs(0);
    return count;
}

} // namespace ennea
