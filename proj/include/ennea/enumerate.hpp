#pragma once

#include <map>
#include <string>
#include <vector>

#include "ennea/canonical.hpp"
#include "ennea/incidence.hpp"

namespace ennea {

// Isomorphism classes per level, each class given by its canonical
// representative, sorted by key within a level.
struct LevelCatalog {
    // per_level[l] = classes with l+1 blocks (index 0 = level 1)
    std::vector<std::vector<IncidenceStructure>> per_level;

    int max_level() const { return int(per_level.size()); }
    std::vector<int> counts() const {
        std::vector<int> c;
        for (auto& lv : per_level) c.push_back(int(lv.size()));
        return c;
    }
    int total() const {
        int t = 0;
        for (auto& lv : per_level) t += int(lv.size());
        return t;
    }
};

// All isomorphism classes obtainable by adding one compatible block to the
// given level-l representatives; result sorted by canonical key.
inline std::vector<IncidenceStructure> extend_level(const std::vector<IncidenceStructure>& reps) {
    std::map<std::string, IncidenceStructure> classes;
    for (auto& s : reps) {
        for (auto& t : all_triples()) {
            if (!compatible(s, t)) continue;
            std::vector<Triple> blocks = s.blocks;
            blocks.push_back(t);
            CanonicalKey ck = canonical_key(make_structure(std::move(blocks)));
            classes.emplace(ck.key, ck.representative);
        }
    }
    std::vector<IncidenceStructure> out;
    for (auto& [k, rep] : classes) out.push_back(rep);
    return out;
}

// Level-by-level exhaustive enumeration starting from the empty structure,
// stopping when no class extends (or at max_level).
inline LevelCatalog enumerate_all(int max_level = 12) {
    LevelCatalog cat;
    std::vector<IncidenceStructure> cur{IncidenceStructure{}};
    for (int l = 1; l <= max_level; ++l) {
        cur = extend_level(cur);
        if (cur.empty()) break;
        cat.per_level.push_back(cur);
    }
    return cat;
}

} // namespace ennea
