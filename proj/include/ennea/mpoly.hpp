#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "ennea/quadext.hpp"
#include "ennea/rational.hpp"

namespace ennea {

constexpr int kMaxVars = 16;

// Exponent vector with cached total degree.  Degrees in this project stay
// far below 255 (cubics in parameters of height <= 13).
struct Monomial {
    std::array<uint8_t, kMaxVars> e{};
    uint16_t deg = 0;

    static Monomial one() { return Monomial{}; }
    static Monomial var(int i, uint8_t p = 1) {
        Monomial m;
        m.e[i] = p;
        m.deg = p;
        return m;
    }

    bool is_one() const { return deg == 0; }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) r.e[i] = uint8_t(e[i] + o.e[i]);
        r.deg = uint16_t(deg + o.deg);
        return r;
    }
    bool divides(const Monomial& o) const {
        for (int i = 0; i < kMaxVars; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    Monomial operator/(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) r.e[i] = uint8_t(e[i] - o.e[i]);
        r.deg = uint16_t(deg - o.deg);
        return r;
    }
    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r;
        int d = 0;
        for (int i = 0; i < kMaxVars; ++i) {
            r.e[i] = std::max(a.e[i], b.e[i]);
            d += r.e[i];
        }
        r.deg = uint16_t(d);
        return r;
    }
    friend bool coprime(const Monomial& a, const Monomial& b) {
        for (int i = 0; i < kMaxVars; ++i)
            if (a.e[i] && b.e[i]) return false;
        return true;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.deg == b.deg && a.e == b.e;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
};

// Variable names of the ambient polynomial ring.  Rings are small value
// objects; polynomials hold a shared pointer so substitutions across rings
// stay explicit.
struct Ring {
    std::vector<std::string> vars;

    int nvars() const { return int(vars.size()); }
    int index_of(const std::string& name) const {
        for (int i = 0; i < nvars(); ++i)
            if (vars[i] == name) return i;
        return -1;
    }
    bool operator==(const Ring& o) const { return vars == o.vars; }
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> vars) {
    if (int(vars.size()) > kMaxVars) throw std::invalid_argument("make_ring: too many variables");
    auto r = std::make_shared<Ring>();
    r->vars = std::move(vars);
    return r;
}

// Ring t0..t{k-1}.
inline RingPtr param_ring(int k) {
    std::vector<std::string> v;
    for (int i = 0; i < k; ++i) v.push_back("t" + std::to_string(i));
    return make_ring(std::move(v));
}

// Ring x, y, z of the projective plane.
inline RingPtr xyz_ring() { return make_ring({"x", "y", "z"}); }

// ---- monomial orders --------------------------------------------------------

// Graded reverse lexicographic / lexicographic, optionally with a leading
// elimination block: monomials are first compared by total degree in the
// block variables, which makes the order an elimination order for the block.
struct MonomialOrder {
    enum Kind { DegRevLex, Lex };

    Kind kind = DegRevLex;
    // Permutation of 0..nvars-1: priority[0] is the most significant variable.
    std::vector<int> priority;
    // First `block` entries of priority form the elimination block (0 = none).
    int block = 0;

    static MonomialOrder degrevlex(int nvars) {
        MonomialOrder o;
        o.kind = DegRevLex;
        o.priority.resize(nvars);
        std::iota(o.priority.begin(), o.priority.end(), 0);
        return o;
    }
    static MonomialOrder lex(int nvars) {
        MonomialOrder o = degrevlex(nvars);
        o.kind = Lex;
        return o;
    }
    // Eliminate `drop` (variable indices) first; remaining variables keep
    // their relative order.  Both blocks are compared degrevlex.
    static MonomialOrder elimination(int nvars, const std::vector<int>& drop) {
        MonomialOrder o;
        o.kind = DegRevLex;
        std::vector<bool> in_drop(nvars, false);
        for (int i : drop) in_drop[i] = true;
        for (int i : drop) o.priority.push_back(i);
        for (int i = 0; i < nvars; ++i)
            if (!in_drop[i]) o.priority.push_back(i);
        o.block = int(drop.size());
        return o;
    }

    // Strict "a before b" (a > b in the term order).  Lex compares variable
    // by variable; DegRevLex compares total degree first.  With a block, the
    // block's total degree leads, making it an elimination order.
    bool greater(const Monomial& a, const Monomial& b) const {
        if (block > 0) {
            int da = 0, db = 0;
            for (int i = 0; i < block; ++i) {
                da += a.e[priority[i]];
                db += b.e[priority[i]];
            }
            if (da != db) return da > db;
            int c = cmp_segment(a, b, 0, block);
            if (c != 0) return c > 0;
            return cmp_block_tail(a, b, block, int(priority.size())) > 0;
        }
        return cmp_block_tail(a, b, 0, int(priority.size())) > 0;
    }

    bool equal_keys(const Monomial& a, const Monomial& b) const { return a == b; }

  private:
    // Compare a contiguous priority segment under this order's kind: plain
    // lex, or total degree then revlex.  Returns -1/0/+1.
    int cmp_block_tail(const Monomial& a, const Monomial& b, int from, int to) const {
        if (kind == DegRevLex) {
            int da = 0, db = 0;
            for (int i = from; i < to; ++i) {
                da += a.e[priority[i]];
                db += b.e[priority[i]];
            }
            if (da != db) return da > db ? 1 : -1;
        }
        return cmp_segment(a, b, from, to);
    }
    int cmp_segment(const Monomial& a, const Monomial& b, int from, int to) const {
        if (kind == Lex) {
            for (int i = from; i < to; ++i) {
                int v = priority[i];
                if (a.e[v] != b.e[v]) return a.e[v] > b.e[v] ? 1 : -1;
            }
            return 0;
        }
        // degrevlex: scan least significant variable upwards, smaller
        // exponent there means larger monomial.
        for (int i = to - 1; i >= from; --i) {
            int v = priority[i];
            if (a.e[v] != b.e[v]) return a.e[v] < b.e[v] ? 1 : -1;
        }
        return 0;
    }
};

// ---- multivariate polynomial ------------------------------------------------

// Terms are kept sorted, strictly decreasing under a fixed degrevlex order
// (the storage order); computations under other orders re-sort on demand.
template <typename K>
class MPoly {
  public:
    struct Term {
        Monomial m;
        K c;
    };

    MPoly() = default;
    explicit MPoly(RingPtr ring) : ring_(std::move(ring)) {}

    static MPoly zero(RingPtr ring) { return MPoly(std::move(ring)); }
    static MPoly constant(RingPtr ring, const K& c) {
        MPoly p(std::move(ring));
        if (!field_is_zero(c)) p.terms_.push_back({Monomial::one(), c});
        return p;
    }
    static MPoly var(RingPtr ring, int i, uint8_t pow = 1) {
        MPoly p(std::move(ring));
        if (pow == 0) return constant(p.ring_, K(1));
        p.terms_.push_back({Monomial::var(i, pow), K(1)});
        return p;
    }
    static MPoly term(RingPtr ring, const Monomial& m, const K& c) {
        MPoly p(std::move(ring));
        if (!field_is_zero(c)) p.terms_.push_back({m, c});
        return p;
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || terms_[0].m.is_one(); }
    int total_degree() const {
        int d = 0;
        for (auto& t : terms_) d = std::max(d, int(t.m.deg));
        return d;
    }

    // Storage order is the plain degrevlex over the ring's variable order.
    static bool storage_greater(const Monomial& a, const Monomial& b) {
        if (a.deg != b.deg) return a.deg > b.deg;
        for (int i = kMaxVars - 1; i >= 0; --i)
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
        return false;
    }

    void add_term(const Monomial& m, const K& c) {
        if (field_is_zero(c)) return;
        auto it = std::lower_bound(
            terms_.begin(), terms_.end(), m,
            [](const Term& t, const Monomial& mm) { return storage_greater(t.m, mm); });
        if (it != terms_.end() && it->m == m) {
            it->c += c;
            if (field_is_zero(it->c)) terms_.erase(it);
        } else {
            terms_.insert(it, {m, c});
        }
    }

    MPoly operator-() const {
        MPoly r(*this);
        for (auto& t : r.terms_) t.c = -t.c;
        return r;
    }

    MPoly& operator+=(const MPoly& o) {
        check_ring(o);
        *this = merged(*this, o, false);
        return *this;
    }
    MPoly& operator-=(const MPoly& o) {
        check_ring(o);
        *this = merged(*this, o, true);
        return *this;
    }
    friend MPoly operator+(MPoly a, const MPoly& b) { a += b; return a; }
    friend MPoly operator-(MPoly a, const MPoly& b) { a -= b; return a; }

    MPoly times_term(const Monomial& m, const K& c) const {
        MPoly r(ring_);
        if (field_is_zero(c)) return r;
        r.terms_.reserve(terms_.size());
        for (auto& t : terms_) r.terms_.push_back({t.m * m, t.c * c});
        return r; // multiplying by a fixed monomial preserves storage order
    }

    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        a.check_ring(b);
        MPoly r(a.ring_);
        if (a.is_zero() || b.is_zero()) return r;
        // accumulate via map keyed by storage order
        auto cmp = [](const Monomial& x, const Monomial& y) { return storage_greater(x, y); };
        std::map<Monomial, K, decltype(cmp)> acc(cmp);
        for (auto& ta : a.terms_)
            for (auto& tb : b.terms_) {
                Monomial m = ta.m * tb.m;
                K c = ta.c * tb.c;
                auto it = acc.find(m);
                if (it == acc.end()) {
                    acc.emplace(m, c);
                } else {
                    it->second += c;
                }
            }
        for (auto& [m, c] : acc)
            if (!field_is_zero(c)) r.terms_.push_back({m, c});
        return r;
    }

    MPoly& operator*=(const MPoly& o) { *this = *this * o; return *this; }

    MPoly scaled(const K& c) const { return times_term(Monomial::one(), c); }

    friend bool operator==(const MPoly& a, const MPoly& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].m != b.terms_[i].m || a.terms_[i].c != b.terms_[i].c) return false;
        return true;
    }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    // Leading term under an arbitrary order.
    const Term& leading(const MonomialOrder& ord) const {
        assert(!terms_.empty());
        std::size_t best = 0;
        for (std::size_t i = 1; i < terms_.size(); ++i)
            if (ord.greater(terms_[i].m, terms_[best].m)) best = i;
        return terms_[best];
    }

    bool uses_var(int i) const {
        for (auto& t : terms_)
            if (t.m.e[i]) return true;
        return false;
    }

    // Partial derivative.
    MPoly derivative(int v) const {
        MPoly r(ring_);
        for (auto& t : terms_) {
            if (t.m.e[v] == 0) continue;
            Monomial m = t.m;
            K c = t.c * K(long(m.e[v]));
            m.e[v]--;
            m.deg--;
            r.add_term(m, c);
        }
        return r;
    }

    // Substitute a constant for variable v.
    MPoly substituted(int v, const K& value) const {
        MPoly r(ring_);
        for (auto& t : terms_) {
            K c = t.c;
            Monomial m = t.m;
            if (m.e[v]) {
                K p(1);
                for (int i = 0; i < m.e[v]; ++i) p *= value;
                c = c * p;
                m.deg = uint16_t(m.deg - m.e[v]);
                m.e[v] = 0;
            }
            r.add_term(m, c);
        }
        return r;
    }

    // Substitute a polynomial for variable v.
    MPoly substituted_poly(int v, const MPoly& value) const {
        MPoly r(ring_);
        for (auto& t : terms_) {
            Monomial m = t.m;
            int e = m.e[v];
            m.deg = uint16_t(m.deg - e);
            m.e[v] = 0;
            MPoly part = MPoly::term(ring_, m, t.c);
            for (int i = 0; i < e; ++i) part = part * value;
            r += part;
        }
        return r;
    }

    // Full evaluation.
    K evaluated(const std::vector<K>& values) const {
        K acc(0);
        for (auto& t : terms_) {
            K c = t.c;
            for (int v = 0; v < ring_->nvars(); ++v)
                for (int i = 0; i < t.m.e[v]; ++i) c *= values[std::size_t(v)];
            acc += c;
        }
        return acc;
    }

    // Map this polynomial into another ring; variable i of this ring becomes
    // variable var_map[i] there.
    MPoly mapped(const RingPtr& target, const std::vector<int>& var_map) const {
        MPoly r(target);
        for (auto& t : terms_) {
            Monomial m;
            int deg = 0;
            for (int v = 0; v < ring_->nvars(); ++v) {
                if (!t.m.e[v]) continue;
                m.e[var_map[std::size_t(v)]] = uint8_t(m.e[var_map[std::size_t(v)]] + t.m.e[v]);
                deg += t.m.e[v];
            }
            m.deg = uint16_t(deg);
            r.add_term(m, t.c);
        }
        return r;
    }

  private:
    void check_ring(const MPoly& o) const {
        assert(ring_ && o.ring_ && ring_->nvars() == o.ring_->nvars());
    }

    static MPoly merged(const MPoly& a, const MPoly& b, bool subtract) {
        MPoly r(a.ring_);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            bool take_a;
            if (i == a.terms_.size()) {
                take_a = false;
            } else if (j == b.terms_.size()) {
                take_a = true;
            } else if (a.terms_[i].m == b.terms_[j].m) {
                K c = subtract ? K(a.terms_[i].c - b.terms_[j].c)
                               : K(a.terms_[i].c + b.terms_[j].c);
                if (!field_is_zero(c)) r.terms_.push_back({a.terms_[i].m, c});
                ++i;
                ++j;
                continue;
            } else {
                take_a = storage_greater(a.terms_[i].m, b.terms_[j].m);
            }
            if (take_a) {
                r.terms_.push_back(a.terms_[i++]);
            } else {
                auto t = b.terms_[j++];
                if (subtract) t.c = -t.c;
                r.terms_.push_back(t);
            }
        }
        return r;
    }

    RingPtr ring_;
    std::vector<Term> terms_;
};

using QPoly = MPoly<Rat>;
using KPoly = MPoly<QuadExt>;

// ---- normalization and printing ----------------------------------------------

// Integer-content normalization for rational coefficients: multiply by the
// lcm of denominators, divide by the gcd of numerators, make the leading
// coefficient (under `ord`) positive.
inline QPoly normalized(const QPoly& p, const MonomialOrder& ord) {
    if (p.is_zero()) return p;
    BigInt l(1), g(0);
    for (auto& t : p.terms()) {
        l = lcm(l, t.c.den());
    }
    for (auto& t : p.terms()) {
        g = gcd(g, t.c.num() * (l / t.c.den()));
    }
    g = ::abs(g);
    Rat scale(l, g);
    if (p.leading(ord).c.sign() < 0) scale = -scale;
    return p.scaled(scale);
}

// Monic normalization for extension coefficients.
inline KPoly normalized(const KPoly& p, const MonomialOrder& ord) {
    if (p.is_zero()) return p;
    return p.scaled(p.leading(ord).c.inverse());
}

template <typename K>
inline std::string poly_to_string(const MPoly<K>& p) {
    if (p.is_zero()) return "0";
    // storage order is already degrevlex-descending
    std::ostringstream out;
    bool first = true;
    for (auto& t : p.terms()) {
        std::string c = field_str(t.c);
        // two-part extension coefficients keep their sign inside parentheses
        bool paren = field_needs_paren(t.c);
        bool neg = !paren && !c.empty() && c[0] == '-';
        std::string cabs = neg ? c.substr(1) : c;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        std::string mono;
        for (int v = 0; v < p.ring()->nvars(); ++v) {
            if (!t.m.e[v]) continue;
            if (!mono.empty()) mono += "*";
            mono += p.ring()->vars[std::size_t(v)];
            if (t.m.e[v] > 1) mono += "^" + std::to_string(int(t.m.e[v]));
        }
        std::string cpart = paren ? "(" + c + ")" : cabs;
        if (mono.empty()) {
            out << cpart;
        } else if (cpart == "1") {
            out << mono;
        } else {
            out << cpart << "*" << mono;
        }
    }
    return out.str();
}

// Minimal recursive-descent parser for polynomial text in the emitted form:
// integers/rationals, variable names, ^, *, +, -, parentheses.
template <typename K = Rat>
class PolyParser {
  public:
    explicit PolyParser(RingPtr ring) : ring_(std::move(ring)) {}

    MPoly<K> parse(const std::string& text) {
        s_ = text;
        pos_ = 0;
        MPoly<K> r = expr();
        skip_ws();
        if (pos_ != s_.size()) throw IoError("poly parse: trailing input in '" + s_ + "'");
        return r;
    }

  private:
    MPoly<K> expr() {
        skip_ws();
        bool neg = false;
        if (peek() == '+' || peek() == '-') neg = (get() == '-');
        MPoly<K> acc = term();
        if (neg) acc = -acc;
        while (true) {
            skip_ws();
            char c = peek();
            if (c == '+' || c == '-') {
                get();
                MPoly<K> t = term();
                acc = (c == '-') ? acc - t : acc + t;
            } else {
                break;
            }
        }
        return acc;
    }
    MPoly<K> term() {
        MPoly<K> acc = factor();
        while (true) {
            skip_ws();
            if (peek() == '*') {
                get();
                acc = acc * factor();
            } else {
                break;
            }
        }
        return acc;
    }
    MPoly<K> factor() {
        skip_ws();
        MPoly<K> base;
        char c = peek();
        if (c == '(') {
            get();
            base = expr();
            skip_ws();
            if (get() != ')') throw IoError("poly parse: expected ')'");
        } else if (std::isdigit((unsigned char)c)) {
            base = MPoly<K>::constant(ring_, K(number()));
        } else {
            std::string name = ident();
            int idx = ring_->index_of(name);
            if (idx < 0) throw IoError("poly parse: unknown variable '" + name + "'");
            base = MPoly<K>::var(ring_, idx);
        }
        skip_ws();
        if (peek() == '^') {
            get();
            skip_ws();
            Rat e = number();
            MPoly<K> r = MPoly<K>::constant(ring_, K(1));
            long n = e.num().get_si();
            for (long i = 0; i < n; ++i) r = r * base;
            return r;
        }
        return base;
    }
    Rat number() {
        skip_ws();
        std::string tok;
        while (std::isdigit((unsigned char)peek())) tok += get();
        if (peek() == '/') {
            tok += get();
            while (std::isdigit((unsigned char)peek())) tok += get();
        }
        if (tok.empty()) throw IoError("poly parse: expected number");
        return Rat::from_string(tok);
    }
    std::string ident() {
        std::string tok;
        while (std::isalnum((unsigned char)peek()) || peek() == '_') tok += get();
        if (tok.empty()) throw IoError("poly parse: expected identifier near pos " + std::to_string(pos_));
        return tok;
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) ++pos_;
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }

    RingPtr ring_;
    std::string s_;
    std::size_t pos_ = 0;
};

inline QPoly parse_poly(const RingPtr& ring, const std::string& text) {
    return PolyParser<Rat>(ring).parse(text);
}

} // namespace ennea
