#pragma once
// Plane cubics through point sets: the five-parameter family through the
// frame, constraint matrices and Hilbert profiles, the extra-cubic minors
// ideal, and an explicit nodal cubic for block-disjoint structures.

#include <array>
#include <string>
#include <vector>

#include "ennea/alignment.hpp"
#include "ennea/errors.hpp"
#include "ennea/linalg.hpp"
#include "ennea/parametrize.hpp"
#include "ennea/witness.hpp"

namespace ennea {

// Exponent vectors of the degree-k monomials in x, y, z, ordered with the
// lexicographically largest first: x^k, x^{k-1}y, x^{k-1}z, ...
inline std::vector<std::array<int, 3>> monomial_exponents(int k) {
    std::vector<std::array<int, 3>> out;
    for (int i = k; i >= 0; --i)
        for (int j = k - i; j >= 0; --j) out.push_back({i, j, k - i - j});
    return out;
}

// A plane cubic by its ten coefficients, in the monomial order above:
// x^3, x^2y, x^2z, xy^2, xyz, xz^2, y^3, y^2z, yz^2, z^3.
struct CubicForm {
    std::array<QuadExt, 10> coeff{};

    bool is_zero() const {
        for (const auto& c : coeff)
            if (!c.is_zero()) return false;
        return true;
    }

    long field_d() const {
        for (const auto& c : coeff)
            if (c.d() != 0) return c.d();
        return 0;
    }

    bool operator==(const CubicForm& o) const { return coeff == o.coeff; }
};

inline QuadExt eval_monomial(const std::array<QuadExt, 3>& p, const std::array<int, 3>& e) {
    QuadExt v(Rat(1));
    for (int c = 0; c < 3; ++c)
        for (int k = 0; k < e[c]; ++k) v = v * p[c];
    return v;
}

inline QuadExt evaluate_cubic(const CubicForm& f, const std::array<QuadExt, 3>& p) {
    static const std::vector<std::array<int, 3>> exps = monomial_exponents(3);
    QuadExt acc;
    for (int m = 0; m < 10; ++m) acc = acc + f.coeff[m] * eval_monomial(p, exps[m]);
    return acc;
}

// Clear denominators, divide by the common integer content and make the
// first nonzero coefficient positive, mirroring point normalization.
inline void normalize_cubic(CubicForm& f) {
    if (f.is_zero()) return;
    BigInt l(1), g(0);
    for (const auto& c : f.coeff) {
        l = lcm(l, c.a().den());
        l = lcm(l, c.b().den());
    }
    for (const auto& c : f.coeff) {
        g = gcd(g, c.a().num() * (l / c.a().den()));
        g = gcd(g, c.b().num() * (l / c.b().den()));
    }
    g = ::abs(g);
    Rat scale(l, g);
    for (const auto& c : f.coeff) {
        if (c.is_zero()) continue;
        Rat lead = c.a().is_zero() ? c.b() : c.a();
        if (lead.sign() < 0) scale = -scale;
        break;
    }
    for (auto& c : f.coeff) c = c * QuadExt(scale);
}

inline KPoly cubic_to_poly(const CubicForm& f, const RingPtr& xyz) {
    static const std::vector<std::array<int, 3>> exps = monomial_exponents(3);
    KPoly p = KPoly::constant(xyz, QuadExt());
    for (int m = 0; m < 10; ++m) {
        if (f.coeff[m].is_zero()) continue;
        Monomial mono = Monomial::var(0, exps[m][0]) * Monomial::var(1, exps[m][1]) *
                        Monomial::var(2, exps[m][2]);
        p.add_term(mono, f.coeff[m]);
    }
    return p;
}

inline std::string cubic_str(const CubicForm& f) {
    RingPtr xyz = xyz_ring();
    return poly_to_string(cubic_to_poly(f, xyz));
}

inline CubicForm cubic_sum(const CubicForm& f, const CubicForm& g, const QuadExt& scale) {
    CubicForm out;
    for (int m = 0; m < 10; ++m) out.coeff[m] = f.coeff[m] + g.coeff[m] * scale;
    return out;
}

// The cubics through the five frame points P0..P4, as coefficient forms
// linear in five parameters a, b, c, d, e:
//   a x^3 + b x^2 y + c x y^2 + (d/2) y^3
//   - 3a x^2 z + e x y z - (3d/2) y^2 z + 2a x z^2 + d y z^2.
struct CubicFamily {
    RingPtr ring;                  // a, b, c, d, e
    std::array<QPoly, 10> coeff;   // same monomial slots as CubicForm
};

inline CubicFamily cubic_family_through_frame() {
    CubicFamily f;
    f.ring = make_ring({"a", "b", "c", "d", "e"});
    QPoly a = QPoly::var(f.ring, 0), b = QPoly::var(f.ring, 1), c = QPoly::var(f.ring, 2);
    QPoly d = QPoly::var(f.ring, 3), e = QPoly::var(f.ring, 4);
    f.coeff[0] = a;                        // x^3
    f.coeff[1] = b;                        // x^2 y
    f.coeff[2] = a.scaled(Rat(-3));        // x^2 z
    f.coeff[3] = c;                        // x y^2
    f.coeff[4] = e;                        // x y z
    f.coeff[5] = a.scaled(Rat(2));         // x z^2
    f.coeff[6] = d.scaled(Rat(1, 2));      // y^3
    f.coeff[7] = d.scaled(Rat(-3, 2));     // y^2 z
    f.coeff[8] = d;                        // y z^2
    f.coeff[9] = QPoly::constant(f.ring, Rat(0));  // z^3
    return f;
}

inline CubicForm family_member(const CubicFamily& fam, const std::array<Rat, 5>& vals) {
    std::vector<Rat> v(vals.begin(), vals.end());
    CubicForm out;
    for (int m = 0; m < 10; ++m) out.coeff[m] = QuadExt(fam.coeff[m].evaluated(v));
    return out;
}

// Rows are points, columns the degree-k monomials; a cubic (k = 3) through
// all nine points is a kernel vector.
inline Matrix<QuadExt> constraint_matrix(const std::array<std::array<QuadExt, 3>, 9>& pts,
                                         int k) {
    const auto exps = monomial_exponents(k);
    Matrix<QuadExt> M(9, std::vector<QuadExt>(exps.size()));
    for (int p = 0; p < 9; ++p)
        for (std::size_t m = 0; m < exps.size(); ++m) M[p][m] = eval_monomial(pts[p], exps[m]);
    return M;
}

inline std::vector<CubicForm> cubics_through(const std::array<std::array<QuadExt, 3>, 9>& pts) {
    Matrix<QuadExt> ker = kernel_basis(constraint_matrix(pts, 3));
    std::vector<CubicForm> out;
    for (const auto& row : ker) {
        CubicForm f;
        for (int m = 0; m < 10; ++m) f.coeff[m] = row[m];
        normalize_cubic(f);
        out.push_back(f);
    }
    return out;
}

// Values h(1), h(2), ... of the Hilbert function of the nine points up to
// the first degree reaching 9.  Nine distinct points spanning the plane and
// lying on at most one cubic through every subset give (1,3,6,9) or
// (1,3,6,8,9); anything else is rejected.
inline std::vector<int> hilbert_profile(const std::array<std::array<QuadExt, 3>, 9>& pts) {
    auto rank_at = [&](int k) { return rank_exact(constraint_matrix(pts, k)); };
    int r1 = rank_at(1), r2 = rank_at(2), r3 = rank_at(3);
    if (r1 != 3 || r2 != 6 || r3 < 8)
        throw DegenerateInputError("hilbert_profile: ranks (" + std::to_string(r1) + "," +
                                   std::to_string(r2) + "," + std::to_string(r3) +
                                   ") below (3,6,8)");
    if (r3 == 9) return {1, 3, 6, 9};
    int r4 = rank_at(4);
    if (r4 != 9)
        throw DegenerateInputError("hilbert_profile: rank " + std::to_string(r4) +
                                   " in degree four");
    return {1, 3, 6, 8, 9};
}

// Conditions for a second, independent cubic through all nine parametrized
// points: the family above already passes through P0..P4, so a member
// through P5..P8 exists exactly when the 4x5 evaluation matrix drops rank.
// Its order-4 minors join the alignment relations; saturating away the
// coordinate hyperplanes removes the degenerate sheets.
inline Ideal extra_cubic_ideal(const Parametrization& par, const IncidenceStructure& s) {
    if (!s.has_block(make_triple(0, 1, 2)) || !s.has_block(make_triple(0, 3, 4)))
        throw FrameMissingError("extra_cubic_ideal: needs the frame blocks 012 and 034 in " +
                                s.str());
    CubicFamily fam = cubic_family_through_frame();
    static const std::vector<std::array<int, 3>> exps = monomial_exponents(3);
    // coefficient of family parameter j in coefficient slot m
    std::array<std::array<Rat, 5>, 10> lin{};
    for (int m = 0; m < 10; ++m)
        for (int j = 0; j < 5; ++j) {
            std::vector<Rat> unit(5, Rat(0));
            unit[j] = Rat(1);
            lin[m][j] = fam.coeff[m].evaluated(unit);
        }
    Matrix<QPoly> M(4, std::vector<QPoly>(5, QPoly::constant(par.ring, Rat(0))));
    for (int p = 5; p < 9; ++p) {
        std::array<QPoly, 10> mono;
        for (int m = 0; m < 10; ++m) {
            QPoly v = QPoly::constant(par.ring, Rat(1));
            for (int c = 0; c < 3; ++c)
                for (int k = 0; k < exps[m][c]; ++k) v = v * par.pts[std::size_t(p)].xyz[std::size_t(c)];
            mono[m] = v;
        }
        for (int j = 0; j < 5; ++j) {
            QPoly entry = QPoly::constant(par.ring, Rat(0));
            for (int m = 0; m < 10; ++m)
                if (lin[m][j] != 0) entry += mono[m].scaled(lin[m][j]);
            M[p - 5][j] = entry;
        }
    }
    Ideal align = alignment_ideal(par, s);
    std::vector<QPoly> gens = align.gens;
    MonomialOrder ord = MonomialOrder::degrevlex(par.ring->nvars());
    for (auto& g : minors(M, 4, ord)) gens.push_back(g);
    Ideal raw = make_ideal<Rat>(par.ring, std::move(gens));
    for (int v = 0; v < par.nparams; ++v) {
        if (is_trivial(raw) || is_zero_ideal(raw)) break;
        raw = saturate(raw, QPoly::var(par.ring, v));
    }
    return raw;
}

// x^3 + x^2 z - y^2 z: irreducible with a single node at (0:0:1).  Its
// smooth locus is a group where three points are collinear exactly when
// their parameters multiply to 1; points come from the slope t of the line
// through the node, at parameter u = (t-1)/(t+1).
inline CubicForm nodal_cubic() {
    CubicForm f;
    f.coeff[0] = QuadExt(Rat(1));   // x^3
    f.coeff[2] = QuadExt(Rat(1));   // x^2 z
    f.coeff[7] = QuadExt(Rat(-1));  // y^2 z
    return f;
}

inline std::array<QuadExt, 3> nodal_point(const Rat& t) {
    Rat x = t * t - 1;
    std::array<QuadExt, 3> p{QuadExt(x), QuadExt(t * x), QuadExt(Rat(1))};
    normalize_point(p);
    return p;
}

}  // namespace ennea
