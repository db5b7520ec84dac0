#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "ennea/errors.hpp"

namespace ennea {

using BigInt = mpz_class;

// Arbitrary-precision rational with value semantics and no expression
// templates leaking into generic code.  Always canonical: denominator > 0,
// gcd(num, den) = 1 (mpq_class maintains this after canonicalize()).
class Rat {
  public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(long n, long d) : v_(n, d) {
        if (d == 0) throw std::invalid_argument("Rat: zero denominator");
        v_.canonicalize();
    }
    Rat(const BigInt& n) : v_(n) {}
    Rat(const BigInt& n, const BigInt& d) : v_(n, d) {
        if (d == 0) throw std::invalid_argument("Rat: zero denominator");
        v_.canonicalize();
    }
    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    static Rat from_string(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw IoError("Rat: cannot parse '" + s + "'");
        q.canonicalize();
        return Rat(q);
    }

    const mpq_class& raw() const { return v_; }
    BigInt num() const { return BigInt(v_.get_num()); }
    BigInt den() const { return BigInt(v_.get_den()); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw std::invalid_argument("Rat: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    Rat inverse() const {
        if (is_zero()) throw std::invalid_argument("Rat: inverse of zero");
        return Rat(mpq_class(1 / v_));
    }

    Rat abs() const { return Rat(mpq_class(::abs(v_))); }

    // Decimal string "n" or "n/d".
    std::string str() const { return v_.get_str(); }

    double to_double() const { return v_.get_d(); }

    std::size_t hash() const {
        std::size_t h = 1469598103934665603ull;
        auto mix = [&h](const mpz_class& z) {
            std::size_t k = z.get_mpz_t()->_mp_size;
            h = (h ^ k) * 1099511628211ull;
            for (int i = 0; i < std::abs(z.get_mpz_t()->_mp_size); ++i) {
                h = (h ^ z.get_mpz_t()->_mp_d[i]) * 1099511628211ull;
            }
        };
        mix(v_.get_num());
        mix(v_.get_den());
        return h;
    }

  private:
    mpq_class v_;
};

inline Rat pow(const Rat& b, unsigned e) {
    Rat r(1), x(b);
    unsigned k = e;
    while (k) {
        if (k & 1) r *= x;
        x *= x;
        k >>= 1;
    }
    return r;
}

// gcd of numerators over lcm of denominators; content of a coefficient list.
inline BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

namespace detail {

inline void factor_into(BigInt m, std::vector<BigInt>& primes) {
    if (m <= 1) return;
    if (mpz_probab_prime_p(m.get_mpz_t(), 40)) {
        primes.push_back(m);
        return;
    }
    // Pollard rho with incrementing offset until a proper factor appears.
    BigInt d(1);
    for (long c = 1; d == 1 || d == m; ++c) {
        BigInt x(2), y(2);
        d = 1;
        do {
            x = (x * x + c) % m;
            y = (y * y + c) % m;
            y = (y * y + c) % m;
            BigInt diff = x > y ? x - y : y - x;
            if (diff == 0) break; // cycle without factor: bump c
            d = gcd(diff, m);
        } while (d == 1);
    }
    factor_into(d, primes);
    factor_into(m / d, primes);
}

} // namespace detail

// Largest square-free s with n = s * (square), preserving sign.
// Trial division below 10^5, then perfect-square peeling and Pollard rho.
inline BigInt squarefree_part(BigInt n) {
    if (n == 0) return BigInt(0);
    BigInt result(n < 0 ? -1 : 1);
    n = ::abs(n);

    for (unsigned long p = 2; p < 100000 && n > 1; p += (p == 2 ? 1 : 2)) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            unsigned long e = 0;
            while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
                mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
                ++e;
            }
            if (e % 2 == 1) result *= BigInt((long)p);
        }
    }
    if (n > 1) {
        // Remaining cofactor has only primes > 1e5; factor it completely.
        std::vector<BigInt> primes;
        detail::factor_into(n, primes);
        std::sort(primes.begin(), primes.end());
        for (std::size_t i = 0; i < primes.size();) {
            std::size_t j = i;
            while (j < primes.size() && primes[j] == primes[i]) ++j;
            if ((j - i) % 2 == 1) result *= primes[i];
            i = j;
        }
    }
    return result;
}

// Square-free part of a rational r = n/d: squarefree_part(n*d).
inline BigInt squarefree_part(const Rat& r) { return squarefree_part(r.num() * r.den()); }

// Exact rational square root when it exists.
inline bool rat_sqrt(const Rat& r, Rat& out) {
    if (r.sign() < 0) return false;
    BigInt n = r.num(), d = r.den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
    BigInt sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    out = Rat(sn, sd);
    return true;
}

} // namespace ennea
