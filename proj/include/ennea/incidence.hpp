#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "ennea/triple.hpp"

namespace ennea {

// A set of blocks (collinear point triples) on the points 0..8 in which two
// blocks share at most one point: the combinatorial shadow of nine plane
// points with no four on a line.  Blocks are kept sorted lexicographically.
struct IncidenceStructure {
    std::vector<Triple> blocks;

    int level() const { return int(blocks.size()); }

    bool has_block(const Triple& t) const {
        return std::binary_search(blocks.begin(), blocks.end(), t);
    }

    // Blocks through a point.
    std::vector<Triple> blocks_through(int p) const {
        std::vector<Triple> r;
        for (auto& b : blocks)
            if (b.contains(p)) r.push_back(b);
        return r;
    }

    std::array<int, 9> point_degrees() const {
        std::array<int, 9> d{};
        for (auto& b : blocks)
            for (int i = 0; i < 3; ++i) d[std::size_t(b[i])]++;
        return d;
    }

    std::string str() const {
        std::string s = "{";
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            if (i) s += ",";
            s += blocks[i].str();
        }
        return s + "}";
    }

    friend bool operator==(const IncidenceStructure& x, const IncidenceStructure& y) {
        return x.blocks == y.blocks;
    }
    friend bool operator!=(const IncidenceStructure& x, const IncidenceStructure& y) {
        return !(x == y);
    }
};

// Validating constructor: sorts, requires pairwise compatibility and at most
// twelve blocks.
inline IncidenceStructure make_structure(std::vector<Triple> blocks) {
    std::sort(blocks.begin(), blocks.end());
    for (std::size_t i = 0; i + 1 < blocks.size(); ++i)
        if (blocks[i] == blocks[i + 1])
            throw std::invalid_argument("make_structure: duplicate block " + blocks[i].str());
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (std::size_t j = i + 1; j < blocks.size(); ++j)
            if (shared_points(blocks[i], blocks[j]) >= 2)
                throw SharedPairError("blocks " + blocks[i].str() + " and " + blocks[j].str() +
                                      " share two points");
    if (blocks.size() > 12)
        throw std::invalid_argument("make_structure: more than 12 blocks");
    return IncidenceStructure{std::move(blocks)};
}

inline IncidenceStructure parse_structure(const std::vector<std::string>& block_strs) {
    std::vector<Triple> bs;
    for (auto& s : block_strs) bs.push_back(parse_triple(s));
    return make_structure(std::move(bs));
}

// Whether t can be added as a new block: shares at most one point with every
// existing block (and is not already present).
inline bool compatible(const IncidenceStructure& s, const Triple& t) {
    for (auto& b : s.blocks) {
        if (b == t) return false;
        if (shared_points(b, t) >= 2) return false;
    }
    return true;
}

inline IncidenceStructure apply_perm(const IncidenceStructure& s, const std::array<int, 9>& perm) {
    std::vector<Triple> bs;
    bs.reserve(s.blocks.size());
    for (auto& b : s.blocks) bs.push_back(apply_perm(b, perm));
    std::sort(bs.begin(), bs.end());
    return IncidenceStructure{std::move(bs)};
}

} // namespace ennea
