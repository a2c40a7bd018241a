#pragma once

// Independent brute-force references for the unit and acceptance tests.

#include "tandim/intmat.hpp"

#include <random>
#include <vector>

namespace oracle {

using tandim::BigInt;
using tandim::IntMatrix;

using Dense = std::vector<std::vector<BigInt>>;

inline BigInt gcd_big(BigInt a, BigInt b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        BigInt t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Cofactor expansion along the first row.
inline BigInt laplace_det(const Dense& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    BigInt total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        Dense minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<BigInt> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        BigInt term = m[0][j] * laplace_det(minor);
        if (j % 2) total -= term;
        else total += term;
    }
    return total;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

// d_k = gcd of all k×k minors, for k = 1..min(m,n).
inline std::vector<BigInt> determinantal_divisors(const IntMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols(), r = std::min(m, n);
    std::vector<BigInt> d;
    for (std::size_t k = 1; k <= r; ++k) {
        std::vector<std::vector<std::size_t>> rs, cs;
        std::vector<std::size_t> cur;
        subsets(m, k, 0, cur, rs);
        subsets(n, k, 0, cur, cs);
        BigInt g = 0;
        for (const auto& R : rs)
            for (const auto& C : cs) {
                Dense sub;
                for (auto i : R) {
                    std::vector<BigInt> row;
                    for (auto j : C) row.push_back(a(i, j));
                    sub.push_back(std::move(row));
                }
                g = gcd_big(g, laplace_det(sub));
            }
        d.push_back(g);
    }
    return d;
}

// s_k = d_k / d_{k-1}; zero once d_k vanishes.
inline std::vector<BigInt> invariant_factors(const IntMatrix& a) {
    auto d = determinantal_divisors(a);
    std::vector<BigInt> s;
    BigInt prev = 1;
    for (const auto& dk : d) {
        if (dk == 0 || prev == 0) {
            s.push_back(0);
            prev = 0;
            continue;
        }
        s.push_back(dk / prev);
        prev = dk;
    }
    return s;
}

inline BigInt det(const IntMatrix& a) {
    Dense m(a.rows(), std::vector<BigInt>(a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a(i, j);
    return laplace_det(m);
}

// Sizes 1..5, entries in [-9, 9]; every third matrix gets a dependent row.
inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t index) {
    std::uniform_int_distribution<int> dim(1, 5), val(-9, 9);
    const std::size_t m = dim(rng), n = dim(rng);
    IntMatrix a(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = val(rng);
    if (index % 3 == 0 && m >= 2) {
        int c = val(rng);
        for (std::size_t j = 0; j < n; ++j) a(m - 1, j) = a(0, j) * c;
    }
    return a;
}

}  // namespace oracle
