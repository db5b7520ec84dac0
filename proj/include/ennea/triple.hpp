#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ennea/errors.hpp"

namespace ennea {

// An unordered 3-subset of the point labels 0..8, stored ascending.
struct Triple {
    uint8_t a = 0, b = 1, c = 2;

    bool contains(int p) const { return a == p || b == p || c == p; }

    int operator[](int i) const { return i == 0 ? a : (i == 1 ? b : c); }

    friend bool operator==(const Triple& x, const Triple& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c;
    }
    friend bool operator!=(const Triple& x, const Triple& y) { return !(x == y); }
    // lexicographic on (a, b, c)
    friend bool operator<(const Triple& x, const Triple& y) {
        if (x.a != y.a) return x.a < y.a;
        if (x.b != y.b) return x.b < y.b;
        return x.c < y.c;
    }

    std::string str() const {
        return std::string() + char('0' + a) + char('0' + b) + char('0' + c);
    }
};

inline Triple make_triple(int i, int j, int k) {
    if (i == j || j == k || i == k) throw std::invalid_argument("make_triple: repeated point");
    int lo = std::min(i, std::min(j, k));
    int hi = std::max(i, std::max(j, k));
    int mid = i + j + k - lo - hi;
    if (lo < 0 || hi > 8) throw std::invalid_argument("make_triple: label out of range 0..8");
    return Triple{uint8_t(lo), uint8_t(mid), uint8_t(hi)};
}

inline Triple parse_triple(const std::string& s) {
    if (s.size() != 3) throw IoError("parse_triple: expected 3 digits, got '" + s + "'");
    return make_triple(s[0] - '0', s[1] - '0', s[2] - '0');
}

// Number of shared points of two triples.
inline int shared_points(const Triple& x, const Triple& y) {
    int n = 0;
    for (int i = 0; i < 3; ++i) n += x.contains(y[i]) ? 1 : 0;
    return n;
}

// (max, mid, min)-lexicographic comparison; with labels assigned in
// increasing order, completed blocks form a prefix of a colex-sorted list.
inline bool colex_less(const Triple& x, const Triple& y) {
    if (x.c != y.c) return x.c < y.c;
    if (x.b != y.b) return x.b < y.b;
    return x.a < y.a;
}

// All 84 triples in lexicographic order.
inline const std::vector<Triple>& all_triples() {
    static const std::vector<Triple> ts = [] {
        std::vector<Triple> v;
        for (int i = 0; i < 9; ++i)
            for (int j = i + 1; j < 9; ++j)
                for (int k = j + 1; k < 9; ++k) v.push_back(Triple{uint8_t(i), uint8_t(j), uint8_t(k)});
        return v;
    }();
    return ts;
}

// Image of a triple under a point relabeling (perm[p] = new label).
inline Triple apply_perm(const Triple& t, const std::array<int, 9>& perm) {
    return make_triple(perm[t.a], perm[t.b], perm[t.c]);
}

} // namespace ennea
