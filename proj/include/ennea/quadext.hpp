#pragma once

#include <cmath>
#include <functional>
#include <string>

#include "ennea/rational.hpp"

namespace ennea {

// Element a + b*sqrt(d) of a real or imaginary quadratic extension of Q.
// d is square-free and neither 0 nor 1.  Rational elements carry d = 0 so
// that values from different computations mix freely as long as at most one
// genuine extension is involved.
class QuadExt {
  public:
    QuadExt() : a_(0), b_(0), d_(0) {}
    QuadExt(const Rat& r) : a_(r), b_(0), d_(0) {}
    QuadExt(long n) : a_(n), b_(0), d_(0) {}
    QuadExt(const Rat& a, const Rat& b, long d) : a_(a), b_(b), d_(d) { normalize(); }

    static QuadExt sqrt_of(long d) { return QuadExt(Rat(0), Rat(1), d); }

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }
    long d() const { return d_; }

    bool is_rational() const { return b_.is_zero(); }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_one() const { return b_.is_zero() && a_.is_one(); }

    QuadExt conj() const { return QuadExt(a_, -b_, d_); }

    // a^2 - d b^2, the field norm down to Q.
    Rat norm() const { return a_ * a_ - Rat(d_) * b_ * b_; }

    QuadExt operator-() const { return QuadExt(-a_, -b_, d_); }

    QuadExt& operator+=(const QuadExt& o) {
        merge_field(o);
        a_ += o.a_;
        b_ += o.b_;
        normalize();
        return *this;
    }
    QuadExt& operator-=(const QuadExt& o) {
        merge_field(o);
        a_ -= o.a_;
        b_ -= o.b_;
        normalize();
        return *this;
    }
    QuadExt& operator*=(const QuadExt& o) {
        merge_field(o);
        Rat na = a_ * o.a_ + Rat(d_) * b_ * o.b_;
        Rat nb = a_ * o.b_ + b_ * o.a_;
        a_ = na;
        b_ = nb;
        normalize();
        return *this;
    }
    QuadExt& operator/=(const QuadExt& o) {
        if (o.is_zero()) throw std::invalid_argument("QuadExt: division by zero");
        merge_field(o);
        Rat n = o.norm();
        // x / y = x * conj(y) / N(y)
        QuadExt c = o.conj();
        *this *= c;
        a_ /= n;
        b_ /= n;
        normalize();
        return *this;
    }

    friend QuadExt operator+(QuadExt x, const QuadExt& y) { x += y; return x; }
    friend QuadExt operator-(QuadExt x, const QuadExt& y) { x -= y; return x; }
    friend QuadExt operator*(QuadExt x, const QuadExt& y) { x *= y; return x; }
    friend QuadExt operator/(QuadExt x, const QuadExt& y) { x /= y; return x; }

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_.is_zero() || x.d_ == y.d_);
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

    QuadExt inverse() const {
        if (is_zero()) throw std::invalid_argument("QuadExt: inverse of zero");
        QuadExt r = conj();
        Rat n = norm();
        return QuadExt(r.a_ / n, r.b_ / n, d_);
    }

    // "3", "-1/2", "1+2*sqrt(-3)", "-sqrt(2)", "1/2-3/4*sqrt(-1)"
    std::string str() const {
        if (b_.is_zero()) return a_.str();
        std::string s;
        if (!a_.is_zero()) s = a_.str();
        Rat babs = b_.abs();
        std::string root = "sqrt(" + std::to_string(d_) + ")";
        std::string bpart = babs.is_one() ? root : babs.str() + "*" + root;
        if (b_.sign() < 0) {
            s += s.empty() ? "-" : "-";
            s += bpart;
        } else {
            if (!s.empty()) s += "+";
            s += bpart;
        }
        return s;
    }

    double to_double() const {
        if (b_.is_zero()) return a_.to_double();
        if (d_ < 0) return a_.to_double(); // caller decides how to project
        return a_.to_double() + b_.to_double() * std::sqrt((double)d_);
    }

    std::size_t hash() const {
        std::size_t h = a_.hash();
        h = h * 31 + b_.hash();
        h = h * 31 + std::hash<long>()(d_);
        return h;
    }

  private:
    void normalize() {
        if (b_.is_zero()) d_ = 0;
    }
    void merge_field(const QuadExt& o) {
        if (d_ == 0) {
            d_ = o.d_;
        } else if (o.d_ != 0 && o.d_ != d_) {
            throw std::invalid_argument("QuadExt: mixing sqrt(" + std::to_string(d_) +
                                        ") with sqrt(" + std::to_string(o.d_) + ")");
        }
    }

    Rat a_, b_;
    long d_;
};

// Square root inside Q[sqrt(d)] when one exists.  For x = a + b*sqrt(d):
// (u + v sqrt(d))^2 = x needs u^2 + d v^2 = a and 2uv = b.
inline bool quadext_sqrt(const QuadExt& x, long field_d, QuadExt& out) {
    const Rat& a = x.a();
    const Rat& b = x.b();
    if (x.is_zero()) {
        out = QuadExt(Rat(0));
        return true;
    }
    if (b.is_zero()) {
        Rat s;
        if (rat_sqrt(a, s)) {
            out = QuadExt(s);
            return true;
        }
        if (field_d != 0) {
            // sqrt(a) = v*sqrt(d) with v^2 = a/d
            Rat v2 = a / Rat(field_d), v;
            if (rat_sqrt(v2, v)) {
                out = QuadExt(Rat(0), v, field_d);
                return true;
            }
        }
        return false;
    }
    // b != 0: u != 0 and 4u^4 - 4a u^2 + d b^2 = 0, so
    // u^2 = (a +- sqrt(a^2 - d b^2)) / 2 must be a rational square.
    Rat n = x.norm(); // a^2 - d b^2
    Rat sn;
    if (!rat_sqrt(n, sn)) return false;
    for (int sign = 0; sign < 2; ++sign) {
        Rat u2 = (a + (sign ? -sn : sn)) / Rat(2);
        Rat u;
        if (u2.sign() > 0 && rat_sqrt(u2, u)) {
            Rat v = b / (Rat(2) * u);
            out = QuadExt(u, v, field_d);
            return true;
        }
    }
    return false;
}

// ---- generic field traits used by templated polynomial/linear algebra ----

inline bool field_is_zero(const Rat& x) { return x.is_zero(); }
inline bool field_is_zero(const QuadExt& x) { return x.is_zero(); }
// Whether the printed form is a sum that needs parentheses inside a product.
inline bool field_needs_paren(const Rat&) { return false; }
inline bool field_needs_paren(const QuadExt& x) {
    return !x.a().is_zero() && !x.b().is_zero();
}
inline Rat field_inverse(const Rat& x) { return x.inverse(); }
inline QuadExt field_inverse(const QuadExt& x) { return x.inverse(); }
inline std::string field_str(const Rat& x) { return x.str(); }
inline std::string field_str(const QuadExt& x) { return x.str(); }

} // namespace ennea
