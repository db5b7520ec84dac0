#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ennea/incidence.hpp"
#include "ennea/linalg.hpp"
#include "ennea/parametrize.hpp"
#include "ennea/quadext.hpp"

namespace ennea {

// Nine concrete plane points over Q (d = 0) or Q[sqrt(d)].
struct Witness {
    long d = 0;
    std::array<std::array<QuadExt, 3>, 9> pts;
};

// Scale a projective point to integer-content form: all rational parts
// integral with overall content 1 and the first nonzero coordinate positive
// (its rational part, or the surd part when the rational part vanishes).
inline void normalize_point(std::array<QuadExt, 3>& pt) {
    BigInt l(1), g(0);
    for (auto& c : pt) {
        l = lcm(l, c.a().den());
        l = lcm(l, c.b().den());
    }
    for (auto& c : pt) {
        g = gcd(g, c.a().num() * (l / c.a().den()));
        g = gcd(g, c.b().num() * (l / c.b().den()));
    }
    g = ::abs(g);
    if (g == 0) return; // zero vector: caller rejects
    Rat scale(l, g);
    for (std::size_t i = 0; i < 3; ++i) {
        if (pt[i].is_zero()) continue;
        Rat lead = pt[i].a().is_zero() ? pt[i].b() : pt[i].a();
        if (lead.sign() < 0) scale = -scale;
        break;
    }
    for (auto& c : pt) c *= QuadExt(scale);
}

inline std::string point_str(const std::array<QuadExt, 3>& pt) {
    return "(" + pt[0].str() + " : " + pt[1].str() + " : " + pt[2].str() + ")";
}

// Certificate check: nine nonzero, pairwise distinct points whose collinear
// triples are exactly the structure's blocks — all 84 triples re-verified.
inline bool verify_witness(const Witness& w, const IncidenceStructure& s) {
    for (auto& p : w.pts)
        if (p[0].is_zero() && p[1].is_zero() && p[2].is_zero()) return false;
    for (int i = 0; i < 9; ++i) {
        for (int j = i + 1; j < 9; ++j) {
            const auto& P = w.pts[std::size_t(i)];
            const auto& Q = w.pts[std::size_t(j)];
            bool equal = (P[0] * Q[1] - P[1] * Q[0]).is_zero() &&
                         (P[0] * Q[2] - P[2] * Q[0]).is_zero() &&
                         (P[1] * Q[2] - P[2] * Q[1]).is_zero();
            if (equal) return false;
        }
    }
    for (auto& t : all_triples()) {
        const auto& A = w.pts[std::size_t(t.a)];
        const auto& B = w.pts[std::size_t(t.b)];
        const auto& C = w.pts[std::size_t(t.c)];
        QuadExt d = det3(A[0], A[1], A[2], B[0], B[1], B[2], C[0], C[1], C[2]);
        if (d.is_zero() != s.has_block(t)) return false;
    }
    return true;
}

// Evaluate a rational-coefficient polynomial at extension-field arguments.
inline QuadExt eval_qpoly(const QPoly& p, const std::vector<QuadExt>& vals) {
    QuadExt acc{Rat(0)};
    for (auto& t : p.terms()) {
        QuadExt c{t.c};
        for (int v = 0; v < p.ring()->nvars(); ++v)
            for (int i = 0; i < t.m.e[v]; ++i) c *= vals[std::size_t(v)];
        acc += c;
    }
    return acc;
}

// Concrete points from a parameter assignment; nothing when some point
// degenerates to (0 : 0 : 0).
inline std::optional<Witness> evaluate_witness(const Parametrization& par,
                                               const std::vector<QuadExt>& values, long d) {
    Witness w;
    w.d = d;
    for (int p = 0; p < 9; ++p) {
        auto& pt = w.pts[std::size_t(p)];
        for (int j = 0; j < 3; ++j)
            pt[std::size_t(j)] = eval_qpoly(par.pts[std::size_t(p)].xyz[std::size_t(j)], values);
        if (pt[0].is_zero() && pt[1].is_zero() && pt[2].is_zero()) return std::nullopt;
        normalize_point(pt);
    }
    return w;
}

} // namespace ennea
