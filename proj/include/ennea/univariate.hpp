#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "ennea/errors.hpp"
#include "ennea/quadext.hpp"
#include "ennea/rational.hpp"

namespace ennea {

// Dense univariate polynomials as coefficient vectors, ascending degree,
// trailing coefficient nonzero (empty vector = zero polynomial).

template <typename K>
void upoly_trim(std::vector<K>& p) {
    while (!p.empty() && field_is_zero(p.back())) p.pop_back();
}

template <typename K>
int upoly_deg(const std::vector<K>& p) {
    return int(p.size()) - 1; // -1 for the zero polynomial
}

template <typename K>
K upoly_eval(const std::vector<K>& p, const K& x) {
    K acc(0);
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

template <typename K>
std::vector<K> upoly_derivative(const std::vector<K>& p) {
    std::vector<K> d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * K(long(i)));
    upoly_trim(d);
    return d;
}

template <typename K>
std::vector<K> upoly_scale(std::vector<K> p, const K& c) {
    for (auto& x : p) x *= c;
    upoly_trim(p);
    return p;
}

template <typename K>
std::vector<K> upoly_mul(const std::vector<K>& a, const std::vector<K>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<K> r(a.size() + b.size() - 1, K(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    upoly_trim(r);
    return r;
}

// Euclidean division over a field: p = q*d + r with deg r < deg d.
template <typename K>
std::pair<std::vector<K>, std::vector<K>> upoly_divmod(std::vector<K> p, const std::vector<K>& d) {
    if (d.empty()) throw std::invalid_argument("upoly_divmod: division by zero");
    std::vector<K> q(p.size() > d.size() - 1 ? p.size() - d.size() + 1 : 0, K(0));
    K lead = d.back();
    while (int(p.size()) >= int(d.size())) {
        K c = p.back() / lead;
        std::size_t shift = p.size() - d.size();
        q[shift] = c;
        for (std::size_t i = 0; i < d.size(); ++i) p[shift + i] -= c * d[i];
        upoly_trim(p);
        if (p.size() < d.size()) break;
    }
    upoly_trim(q);
    return {q, p};
}

// Monic gcd over a field.
template <typename K>
std::vector<K> upoly_gcd(std::vector<K> a, std::vector<K> b) {
    upoly_trim(a);
    upoly_trim(b);
    while (!b.empty()) {
        auto r = upoly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        K inv = field_inverse(a.back());
        for (auto& c : a) c *= inv;
    }
    return a;
}

// Square-free part p / gcd(p, p').
template <typename K>
std::vector<K> upoly_squarefree(const std::vector<K>& p) {
    if (upoly_deg(p) <= 1) return p;
    auto g = upoly_gcd(p, upoly_derivative(p));
    if (upoly_deg(g) <= 0) return p;
    return upoly_divmod(p, g).first;
}

// ---- exact real-root isolation over Q (Sturm) ----------------------------------

// Integer-primitive scaling of a rational coefficient vector.
inline std::vector<Rat> upoly_primitive(std::vector<Rat> p) {
    upoly_trim(p);
    if (p.empty()) return p;
    BigInt l(1), g(0);
    for (auto& c : p) l = lcm(l, c.den());
    for (auto& c : p) g = gcd(g, c.num() * (l / c.den()));
    g = ::abs(g);
    Rat scale(l, g);
    if (p.back().sign() < 0) scale = -scale;
    for (auto& c : p) c *= scale;
    return p;
}

inline std::vector<std::vector<Rat>> sturm_chain(const std::vector<Rat>& p) {
    std::vector<std::vector<Rat>> chain;
    chain.push_back(upoly_primitive(p));
    auto d = upoly_derivative(p);
    upoly_trim(d);
    if (d.empty()) return chain;
    chain.push_back(upoly_primitive(d));
    while (true) {
        auto& a = chain[chain.size() - 2];
        auto& b = chain[chain.size() - 1];
        auto r = upoly_divmod(a, b).second;
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        chain.push_back(upoly_primitive(r));
        if (upoly_deg(chain.back()) == 0) break;
    }
    return chain;
}

inline int sturm_variations(const std::vector<std::vector<Rat>>& chain, const Rat& x) {
    int count = 0, prev = 0;
    for (auto& p : chain) {
        int s = upoly_eval(p, x).sign();
        if (s != 0) {
            if (prev != 0 && s != prev) ++count;
            prev = s;
        }
    }
    return count;
}

// Number of distinct real roots in the half-open interval (a, b].
inline int sturm_count(const std::vector<std::vector<Rat>>& chain, const Rat& a, const Rat& b) {
    return sturm_variations(chain, a) - sturm_variations(chain, b);
}

// Cauchy bound: all real roots lie in [-M, M].
inline Rat upoly_root_bound(const std::vector<Rat>& p) {
    Rat m(0);
    Rat lead = p.back().abs();
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        Rat q = p[i].abs() / lead;
        if (q > m) m = q;
    }
    return m + Rat(1);
}

// All rational roots with multiplicities; complete (Sturm isolation on the
// monicized integer polynomial whose rational roots are integers).
inline std::vector<std::pair<Rat, int>> rational_roots(const std::vector<Rat>& p_in) {
    std::vector<std::pair<Rat, int>> out;
    std::vector<Rat> p = upoly_primitive(p_in);
    if (upoly_deg(p) <= 0) return out;

    // strip x = 0 roots first
    int zero_mult = 0;
    while (!p.empty() && p[0].is_zero()) {
        p.erase(p.begin());
        ++zero_mult;
    }
    if (zero_mult) out.push_back({Rat(0), zero_mult});
    if (upoly_deg(p) <= 0) return out;

    // q(y) = an^{n-1} p(y/an) is monic with integer coefficients; rational
    // roots r of p correspond to integer roots an*r of q.
    BigInt an = p.back().num(); // p primitive: den = 1
    int n = upoly_deg(p);
    std::vector<Rat> q(std::size_t(n) + 1);
    // coefficient of y^i is a_i * an^{n-1-i}
    for (int i = 0; i <= n; ++i) {
        BigInt scale(1);
        for (int k = 0; k < n - 1 - i; ++k) scale *= an;
        q[std::size_t(i)] = i == n ? Rat(1) : Rat(BigInt(p[std::size_t(i)].num() * scale));
    }

    auto qsf = upoly_squarefree(q);
    auto chain = sturm_chain(qsf);
    Rat bound = upoly_root_bound(qsf);

    // Isolate roots by bisection until each interval (a, b] with a root has
    // b - a <= 1/2, then the only integer candidates are floor/ceil points.
    std::vector<std::pair<Rat, Rat>> work{{-bound, bound}};
    std::vector<BigInt> candidates;
    while (!work.empty()) {
        auto [a, b] = work.back();
        work.pop_back();
        int c = sturm_count(chain, a, b);
        if (c == 0) continue;
        if (b - a <= Rat(1, 2)) {
            // any integer in (a, b]
            BigInt fl;
            mpz_fdiv_q(fl.get_mpz_t(), b.num().get_mpz_t(), b.den().get_mpz_t());
            Rat flr(fl);
            if (flr > a && flr <= b) candidates.push_back(fl);
            continue;
        }
        Rat mid = (a + b) / Rat(2);
        work.push_back({a, mid});
        work.push_back({mid, b});
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    for (auto& y : candidates) {
        if (!upoly_eval(q, Rat(y)).is_zero()) continue;
        Rat r(y, an);
        // multiplicity by repeated exact division of p
        int mult = 0;
        std::vector<Rat> cur = p, lin{-r, Rat(1)};
        while (true) {
            auto [quot, rem] = upoly_divmod(cur, lin);
            if (!rem.empty()) break;
            ++mult;
            cur = quot;
            if (cur.size() <= 1) break;
        }
        if (mult > 0) out.push_back({r, mult});
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

// ---- factor analysis for root extraction ---------------------------------------

// An irreducible quadratic A x^2 + B x + C over Q together with the
// square-free part d of its discriminant (roots live in Q[sqrt(d)]).
struct QuadFactor {
    Rat A, B, C;
    long d = 0;

    std::pair<QuadExt, QuadExt> roots() const {
        Rat D = B * B - Rat(4) * A * C;
        BigInt dd = squarefree_part(D);
        // D = d * s^2
        Rat s2 = D / Rat(dd);
        Rat s;
        if (!rat_sqrt(s2, s)) throw std::logic_error("QuadFactor: discriminant decomposition failed");
        Rat re = -B / (Rat(2) * A);
        Rat im = s / (Rat(2) * A);
        long dl = long(dd.get_si());
        return {QuadExt(re, im, dl), QuadExt(re, -im, dl)};
    }
};

// Full solvable-root description of a univariate rational polynomial.
struct RootField {
    std::vector<std::pair<Rat, int>> rational; // roots with multiplicity
    std::vector<QuadFactor> quadratics;        // irreducible quadratic factors
    std::vector<int> unsolvable_degrees;       // degrees of factors beyond reach
};

namespace detail {

// Try to split a monic quartic (no rational roots) into two rational
// quadratics via the resolvent cubic; returns true and appends them.
inline bool split_quartic(const std::vector<Rat>& m, std::vector<QuadFactor>& out) {
    // m = x^4 + a3 x^3 + a2 x^2 + a1 x + a0, monic
    Rat a3 = m[3], a2 = m[2], a1 = m[1], a0 = m[0];
    // depress: x = y - a3/4, expanding m(y - sh) explicitly
    // (y-sh)^4 + a3 (y-sh)^3 + a2 (y-sh)^2 + a1 (y-sh) + a0
    Rat sh = a3 / Rat(4);
    std::vector<Rat> shifted(5, Rat(0));
    {
        std::vector<Rat> pow = {Rat(1)}; // (y-sh)^k
        std::vector<Rat> lin = {-sh, Rat(1)};
        std::vector<Rat> coef = {a0, a1, a2, a3, Rat(1)};
        for (int k = 0; k <= 4; ++k) {
            for (std::size_t i = 0; i < pow.size(); ++i) shifted[i] += coef[std::size_t(k)] * pow[i];
            if (k < 4) pow = upoly_mul(pow, lin);
        }
    }
    Rat p = shifted[2];
    Rat q = shifted[1];
    Rat r = shifted[0];

    auto emit = [&](const Rat& u, const Rat& v, const Rat& w) {
        // factors in y: y^2 + u y + v and y^2 - u y + w; translate y = x + sh
        auto to_x = [&](const Rat& uu, const Rat& vv) -> QuadFactor {
            // (x + sh)^2 + uu (x + sh) + vv = x^2 + (2 sh + uu) x + (sh^2 + uu sh + vv)
            QuadFactor f;
            f.A = Rat(1);
            f.B = Rat(2) * sh + uu;
            f.C = sh * sh + uu * sh + vv;
            f.d = long(squarefree_part(f.B * f.B - Rat(4) * f.C).get_si());
            return f;
        };
        out.push_back(to_x(u, v));
        out.push_back(to_x(-u, w));
    };

    // u = 0 path requires q = 0: y^4 + p y^2 + r = (y^2+v)(y^2+w)
    if (q.is_zero()) {
        Rat D = p * p - Rat(4) * r;
        Rat sD;
        if (D.sign() >= 0 && rat_sqrt(D, sD)) {
            Rat v = (p - sD) / Rat(2), w = (p + sD) / Rat(2); // v + w = p, vw = r
            emit(Rat(0), v, w);
            return true;
        }
    }
    // resolvent cubic z^3 + 2p z^2 + (p^2 - 4r) z - q^2 with z = u^2
    std::vector<Rat> res = {-q * q, p * p - Rat(4) * r, Rat(2) * p, Rat(1)};
    for (auto& [z, mult] : rational_roots(res)) {
        if (z.sign() <= 0) continue;
        Rat u;
        if (!rat_sqrt(z, u)) continue;
        Rat wv = q / u;                 // w - v
        Rat vw_sum = p + z;             // v + w
        Rat v = (vw_sum - wv) / Rat(2);
        Rat w = (vw_sum + wv) / Rat(2);
        if (v * w == r) {
            emit(u, v, w);
            return true;
        }
    }
    return false;
}

} // namespace detail

// Decompose the solvable roots of p: all rational roots, then quadratic
// factors of the residual (direct for degree 2, resolvent split for degree
// 4).  Residuals of degree 3 are irreducible once rational roots are gone;
// degree >= 5 residuals are out of scope and recorded as unsolvable.
inline RootField analyze_roots(const std::vector<Rat>& p_in) {
    std::vector<Rat> p = upoly_primitive(p_in);
    if (p.empty()) throw std::invalid_argument("analyze_roots: zero polynomial");
    RootField rf;
    if (upoly_deg(p) == 0) return rf;

    rf.rational = rational_roots(p);
    std::vector<Rat> residual = p;
    for (auto& [r, mult] : rf.rational) {
        std::vector<Rat> lin{-r, Rat(1)};
        for (int i = 0; i < mult; ++i) residual = upoly_divmod(residual, lin).first;
    }
    // make residual monic for the splitting analysis
    if (upoly_deg(residual) > 0) {
        Rat inv = residual.back().inverse();
        for (auto& c : residual) c *= inv;
    }
    int rd = upoly_deg(residual);
    if (rd == 2) {
        QuadFactor f{residual[2], residual[1], residual[0], 0};
        f.d = long(squarefree_part(f.B * f.B - Rat(4) * f.A * f.C).get_si());
        rf.quadratics.push_back(f);
    } else if (rd == 4) {
        // the quartic may be a square of an irreducible quadratic; squarefree
        // analysis via gcd with derivative
        auto g = upoly_gcd(residual, upoly_derivative(residual));
        if (upoly_deg(g) == 2) {
            QuadFactor f{g[2], g[1], g[0], 0};
            f.d = long(squarefree_part(f.B * f.B - Rat(4) * f.A * f.C).get_si());
            rf.quadratics.push_back(f);
        } else if (!detail::split_quartic(residual, rf.quadratics)) {
            rf.unsolvable_degrees.push_back(4);
        }
    } else if (rd == 3) {
        rf.unsolvable_degrees.push_back(3);
    } else if (rd >= 5) {
        rf.unsolvable_degrees.push_back(rd);
    }
    return rf;
}

// As analyze_roots, but a polynomial whose irreducible factors all have
// degree >= 3 (no root reachable in Q or any Q[sqrt(d)]) is an error.
inline RootField root_field(const std::vector<Rat>& p_in) {
    RootField rf = analyze_roots(p_in);
    std::vector<Rat> p = upoly_primitive(p_in);
    if (rf.rational.empty() && rf.quadratics.empty() && upoly_deg(p) >= 1) {
        throw NoSolvableRootError("all irreducible factors have degree >= 3 (degree " +
                                  std::to_string(upoly_deg(p)) + " polynomial)");
    }
    return rf;
}

} // namespace ennea
