#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "ennea/mpoly.hpp"
#include "ennea/quadext.hpp"
#include "ennea/rational.hpp"

namespace ennea {

template <typename T>
using Matrix = std::vector<std::vector<T>>;

// Rank of a rational matrix by fraction-free (Bareiss) elimination on the
// denominator-cleared integer matrix.
inline int rank_exact(const Matrix<Rat>& m_in) {
    if (m_in.empty() || m_in[0].empty()) return 0;
    std::size_t rows = m_in.size(), cols = m_in[0].size();
    Matrix<BigInt> m(rows, std::vector<BigInt>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        BigInt l(1);
        for (std::size_t j = 0; j < cols; ++j) l = lcm(l, m_in[i][j].den());
        for (std::size_t j = 0; j < cols; ++j)
            m[i][j] = m_in[i][j].num() * (l / m_in[i][j].den());
    }

    int rank = 0;
    BigInt prev(1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[row]);
        for (std::size_t i = row + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                BigInt t = m[row][col] * m[i][j] - m[i][col] * m[row][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][col] = 0;
        }
        prev = m[row][col];
        ++row;
        ++rank;
    }
    return rank;
}

// Rank over an arbitrary field by Gaussian elimination (used for Q[sqrt(d)]).
inline int rank_exact(const Matrix<QuadExt>& m_in) {
    Matrix<QuadExt> m = m_in;
    if (m.empty() || m[0].empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && m[piv][col].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[row]);
        QuadExt inv = m[row][col].inverse();
        for (std::size_t i = row + 1; i < rows; ++i) {
            if (m[i][col].is_zero()) continue;
            QuadExt f = m[i][col] * inv;
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        ++row;
        ++rank;
    }
    return rank;
}

// Rank over Z/p for randomized cross-checking of rank_exact.
inline int rank_mod_p(const Matrix<Rat>& m_in, unsigned long p) {
    if (m_in.empty() || m_in[0].empty()) return 0;
    std::size_t rows = m_in.size(), cols = m_in[0].size();
    auto inv_mod = [p](unsigned long a) {
        long t = 0, nt = 1;
        long r = long(p), nr = long(a % p);
        while (nr != 0) {
            long q = r / nr;
            std::swap(t -= q * nt, nt);
            std::swap(r -= q * nr, nr);
        }
        return (unsigned long)((t % long(p) + long(p)) % long(p));
    };
    Matrix<unsigned long> m(rows, std::vector<unsigned long>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            BigInt num = m_in[i][j].num() % BigInt((unsigned long)p);
            BigInt den = m_in[i][j].den() % BigInt((unsigned long)p);
            if (den == 0) throw std::invalid_argument("rank_mod_p: denominator divisible by p");
            unsigned long n = mpz_get_ui(BigInt((num + BigInt((unsigned long)p)) % BigInt((unsigned long)p)).get_mpz_t());
            unsigned long d = mpz_get_ui(den.get_mpz_t());
            m[i][j] = (unsigned long)((__uint128_t)n * inv_mod(d) % p);
        }
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[row]);
        unsigned long inv = inv_mod(m[row][col]);
        for (std::size_t i = row + 1; i < rows; ++i) {
            if (m[i][col] == 0) continue;
            unsigned long f = (unsigned long)((__uint128_t)m[i][col] * inv % p);
            for (std::size_t j = col; j < cols; ++j) {
                unsigned long sub = (unsigned long)((__uint128_t)f * m[row][j] % p);
                m[i][j] = (m[i][j] + p - sub) % p;
            }
        }
        ++row;
        ++rank;
    }
    return rank;
}

// Basis of the right kernel over a field (row-reduced echelon back-solve).
template <typename K>
Matrix<K> kernel_basis(const Matrix<K>& m_in) {
    Matrix<K> m = m_in;
    std::size_t rows = m.size();
    std::size_t cols = rows ? m[0].size() : 0;
    std::vector<int> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && field_is_zero(m[piv][col])) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[row]);
        K inv = field_inverse(m[row][col]);
        for (std::size_t j = col; j < cols; ++j) m[row][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || field_is_zero(m[i][col])) continue;
            K f = m[i][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        pivot_col.push_back(int(col));
        ++row;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[std::size_t(c)] = true;

    Matrix<K> basis;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<K> v(cols, K(0));
        v[free_col] = K(1);
        for (std::size_t r = 0; r < pivot_col.size(); ++r)
            v[std::size_t(pivot_col[r])] = -m[r][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Determinant of a 3x3 matrix of polynomials (or field elements) by cofactor
// expansion; used for collinearity conditions.
template <typename T>
T det3(const T& a, const T& b, const T& c, const T& d, const T& e, const T& f, const T& g,
       const T& h, const T& i) {
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

template <typename T>
T det_small(const Matrix<T>& m) {
    std::size_t n = m.size();
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    if (n == 3)
        return det3(m[0][0], m[0][1], m[0][2], m[1][0], m[1][1], m[1][2], m[2][0], m[2][1],
                    m[2][2]);
    // Laplace expansion along the first row; fine for n <= 5.
    T acc = m[0][0] - m[0][0]; // zero of the right type/ring
    for (std::size_t j = 0; j < n; ++j) {
        Matrix<T> sub;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<T> r;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) r.push_back(m[i][k]);
            sub.push_back(std::move(r));
        }
        T term = m[0][j] * det_small(sub);
        if (j % 2 == 0) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    return acc;
}

// All r x r minors of a matrix of polynomials, duplicates (up to content
// normalization including sign) and zeros removed, in row/column-combination
// order.
template <typename K>
std::vector<MPoly<K>> minors(const Matrix<MPoly<K>>& m, int r, const MonomialOrder& ord) {
    std::vector<MPoly<K>> out;
    if (m.empty()) return out;
    int rows = int(m.size()), cols = int(m[0].size());
    if (r <= 0 || r > rows || r > cols) return out;

    std::vector<int> ri(static_cast<std::size_t>(r));
    std::vector<int> ci(static_cast<std::size_t>(r));
    std::iota(ri.begin(), ri.end(), 0);
    auto next_comb = [](std::vector<int>& idx, int n) {
        int k = int(idx.size());
        for (int i = k - 1; i >= 0; --i) {
            if (idx[std::size_t(i)] < n - (k - i)) {
                ++idx[std::size_t(i)];
                for (int j = i + 1; j < k; ++j) idx[std::size_t(j)] = idx[std::size_t(j - 1)] + 1;
                return true;
            }
        }
        return false;
    };

    do {
        std::iota(ci.begin(), ci.end(), 0);
        do {
            Matrix<MPoly<K>> sub;
            for (int i = 0; i < r; ++i) {
                std::vector<MPoly<K>> row;
                for (int j = 0; j < r; ++j)
                    row.push_back(m[std::size_t(ri[std::size_t(i)])][std::size_t(ci[std::size_t(j)])]);
                sub.push_back(std::move(row));
            }
            MPoly<K> d = det_small(sub);
            if (d.is_zero()) continue;
            d = normalized(d, ord);
            bool dup = false;
            for (auto& p : out) dup = dup || p == d;
            if (!dup) out.push_back(d);
        } while (next_comb(ci, cols));
    } while (next_comb(ri, rows));
    return out;
}

} // namespace ennea
