#pragma once
// Exact irreducibility test for plane cubics over Q or Q[sqrt(d)].  A
// reducible cubic always has a singular point whose tangent cone contains a
// linear factor of the curve, so the decision reduces to finding the
// singular points in the coefficient field and dividing by cone lines.

#include <optional>
#include <vector>

#include "ennea/cubic.hpp"
#include "ennea/solve.hpp"

namespace ennea {
namespace detail {

// Square root inside Q[sqrt(ambient_d)]; ambient_d = 0 means plain Q.
inline std::optional<QuadExt> field_sqrt(const QuadExt& x, long ambient_d) {
    if (x.is_zero()) return QuadExt();
    if (x.is_rational()) {
        Rat s;
        if (rat_sqrt(x.a(), s)) return QuadExt(s);
        if (ambient_d != 0 && rat_sqrt(x.a() / Rat(ambient_d), s))
            return QuadExt(Rat(0), s, ambient_d);
        return std::nullopt;
    }
    // (p + q sqrt(d))^2 = A + B sqrt(d): p^2 + q^2 d = A, 2pq = B, so p^2
    // solves 4u^2 - 4Au + B^2 d = 0 and A^2 - B^2 d must be a square.
    Rat A = x.a(), B = x.b();
    long d = x.d();
    Rat s;
    if (!rat_sqrt(A * A - B * B * Rat(d), s)) return std::nullopt;
    for (int sign = 0; sign < 2; ++sign) {
        Rat half = (sign == 0 ? A + s : A - s) / Rat(2);
        Rat p;
        if (half < 0 || !rat_sqrt(half, p) || p == 0) continue;
        QuadExt root(p, B / (Rat(2) * p), d);
        if (root * root == x) return root;
    }
    return std::nullopt;
}

inline bool poly_divides(const KPoly& g, const KPoly& f) {
    return normal_form(f, std::vector<KPoly>{g}, MonomialOrder::degrevlex(3)).is_zero();
}

// Does some line through the singular point P, contained in the degree-2
// part of the local expansion, divide F?  For a reducible cubic this is
// true at every singular point; for an irreducible one it never is.
inline bool cone_line_divides(const KPoly& F, const std::array<QuadExt, 3>& P, long d,
                              const RingPtr& xyz) {
    int cz = 2;
    while (P[cz].is_zero()) --cz;
    int iu = cz == 0 ? 1 : 0;
    int iv = cz == 2 ? 1 : 2;
    QuadExt pu = P[iu] * P[cz].inverse(), pv = P[iv] * P[cz].inverse();
    KPoly f = F.substituted(cz, QuadExt(Rat(1)))
                  .substituted_poly(iu, KPoly::var(xyz, iu) + KPoly::constant(xyz, pu))
                  .substituted_poly(iv, KPoly::var(xyz, iv) + KPoly::constant(xyz, pv));
    // quadratic part alpha u^2 + beta uv + gamma v^2 of the expansion at P
    QuadExt alpha, beta, gamma;
    for (const auto& t : f.terms()) {
        int du = t.m.e[iu], dv = t.m.e[iv];
        if (du + dv != 2) continue;
        (du == 2 ? alpha : du == 1 ? beta : gamma) = t.c;
    }
    // projective forms vanishing at P along each local direction
    KPoly U = KPoly::var(xyz, iu) - KPoly::constant(xyz, pu) * KPoly::var(xyz, cz);
    KPoly V = KPoly::var(xyz, iv) - KPoly::constant(xyz, pv) * KPoly::var(xyz, cz);
    if (alpha.is_zero() && beta.is_zero() && gamma.is_zero()) return true;  // triple point
    std::vector<KPoly> lines;
    if (alpha.is_zero()) {
        lines.push_back(V);
        if (!beta.is_zero()) lines.push_back(U.scaled(beta) + V.scaled(gamma));
    } else {
        QuadExt disc = beta * beta - alpha * gamma * QuadExt(Rat(4));
        if (auto sq = field_sqrt(disc, d)) {
            QuadExt inv2a = (alpha * QuadExt(Rat(2))).inverse();
            lines.push_back(U - V.scaled((-beta + *sq) * inv2a));
            if (!sq->is_zero()) lines.push_back(U - V.scaled((-beta - *sq) * inv2a));
        } else {
            // the cone splits only over a further extension; its conjugate
            // line pair divides F exactly when the cone conic itself does
            KPoly cone = U * U.scaled(alpha) + U * V.scaled(beta) + V * V.scaled(gamma);
            return poly_divides(cone, F);
        }
    }
    for (const auto& L : lines)
        if (poly_divides(L, F)) return true;
    return false;
}

}  // namespace detail

// Exact test: true when the cubic has no linear factor over any extension,
// i.e. defines an irreducible plane curve.
inline bool is_irreducible(const CubicForm& c) {
    if (c.is_zero()) throw std::invalid_argument("is_irreducible: zero form");
    long d = c.field_d();
    RingPtr xyz = xyz_ring();
    KPoly F = cubic_to_poly(c, xyz);
    std::array<KPoly, 3> dF = {F.derivative(0), F.derivative(1), F.derivative(2)};

    bool infinite = false;  // a whole chart (or line) of singular points
    bool foreign = false;   // singular points outside the coefficient field
    std::vector<std::array<QuadExt, 3>> sing;

    // chart z = 1
    {
        std::vector<KPoly> gens;
        int zero_gens = 0;
        for (const auto& g : dF) {
            KPoly h = g.substituted(2, QuadExt(Rat(1)));
            if (h.is_zero())
                ++zero_gens;
            else
                gens.push_back(h);
        }
        if (zero_gens == 3) infinite = true;
        SolveStatus st;
        auto pts = solve_points_quadext(gens, xyz, {0, 1}, d, st);
        if (!st.zero_dimensional) infinite = true;
        if (st.saw_foreign_root || st.detection_incomplete) foreign = true;
        for (const auto& pm : pts) {
            std::array<QuadExt, 3> P{pm.at(0), pm.at(1), QuadExt(Rat(1))};
            sing.push_back(P);
        }
    }
    // chart z = 0, y = 1
    if (!infinite) {
        std::vector<KPoly> gens;
        int zero_gens = 0;
        for (const auto& g : dF) {
            KPoly h = g.substituted(2, QuadExt()).substituted(1, QuadExt(Rat(1)));
            if (h.is_zero())
                ++zero_gens;
            else
                gens.push_back(h);
        }
        if (zero_gens == 3) infinite = true;
        SolveStatus st;
        auto pts = solve_points_quadext(gens, xyz, {0}, d, st);
        if (!st.zero_dimensional) infinite = true;
        if (st.saw_foreign_root || st.detection_incomplete) foreign = true;
        for (const auto& pm : pts) sing.push_back({pm.at(0), QuadExt(Rat(1)), QuadExt()});
    }
    // the remaining point (1:0:0)
    if (!infinite) {
        std::array<QuadExt, 3> P{QuadExt(Rat(1)), QuadExt(), QuadExt()};
        bool singular = true;
        for (const auto& g : dF)
            if (!g.substituted(0, QuadExt(Rat(1)))
                     .substituted(1, QuadExt())
                     .substituted(2, QuadExt())
                     .is_zero())
                singular = false;
        if (singular) sing.push_back(P);
    }

    if (infinite) return false;        // positive-dimensional singular locus
    if (sing.size() >= 2) return false;  // two singular points span a component line
    if (sing.empty()) {
        // a singular point outside the field comes with its conjugate, so a
        // clean empty locus means smooth, hence irreducible
        return !foreign;
    }
    return !detail::cone_line_divides(F, sing[0], d, xyz);
}

}  // namespace ennea
