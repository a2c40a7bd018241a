#pragma once

/// @file intmat.hpp
/// @brief Arbitrary-precision integer matrices, Smith normal form with transforms,
///        integer linear solving, kernels and lattice bases.

#include "tandim/monoid.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tandim {

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows, std::size_t cols = 0) {
        std::size_t c = rows.empty() ? cols : rows[0].size();
        IntMatrix m(rows.size(), c);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != c) throw UsageError("IntMatrix: ragged rows");
            for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    static IntMatrix diagonal(const std::vector<BigInt>& d) {
        IntMatrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }

    BigInt& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const BigInt& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    std::vector<BigInt> column(std::size_t j) const {
        std::vector<BigInt> v(r_);
        for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    void set_column(std::size_t j, const std::vector<BigInt>& v) {
        for (std::size_t i = 0; i < r_; ++i) (*this)(i, j) = v[i];
    }

    bool is_zero() const {
        return std::all_of(a_.begin(), a_.end(), [](const BigInt& x) { return x == 0; });
    }

    IntMatrix transpose() const {
        IntMatrix t(c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        IntMatrix b(nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
        return b;
    }

    void paste(std::size_t r0, std::size_t c0, const IntMatrix& b) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
    }

    void swap_rows(std::size_t i, std::size_t k) {
        if (i == k) return;
        for (std::size_t j = 0; j < c_; ++j) std::swap((*this)(i, j), (*this)(k, j));
    }
    void swap_cols(std::size_t j, std::size_t k) {
        if (j == k) return;
        for (std::size_t i = 0; i < r_; ++i) std::swap((*this)(i, j), (*this)(i, k));
    }
    /// row_i += q * row_k
    void add_row(std::size_t i, std::size_t k, const BigInt& q) {
        if (q == 0) return;
        for (std::size_t j = 0; j < c_; ++j) (*this)(i, j) += q * (*this)(k, j);
    }
    /// col_j += q * col_k
    void add_col(std::size_t j, std::size_t k, const BigInt& q) {
        if (q == 0) return;
        for (std::size_t i = 0; i < r_; ++i) (*this)(i, j) += q * (*this)(i, k);
    }
    void negate_row(std::size_t i) {
        for (std::size_t j = 0; j < c_; ++j) (*this)(i, j) = -(*this)(i, j);
    }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.c_ != b.r_) throw UsageError("IntMatrix: dimension mismatch in product");
        IntMatrix m(a.r_, b.c_);
        for (std::size_t i = 0; i < a.r_; ++i)
            for (std::size_t k = 0; k < a.c_; ++k) {
                const BigInt& x = a(i, k);
                if (x == 0) continue;
                for (std::size_t j = 0; j < b.c_; ++j) m(i, j) += x * b(k, j);
            }
        return m;
    }

    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
        if (a.r_ != b.r_ || a.c_ != b.c_) throw UsageError("IntMatrix: dimension mismatch in sum");
        IntMatrix m = a;
        for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] += b.a_[i];
        return m;
    }
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
        if (a.r_ != b.r_ || a.c_ != b.c_) throw UsageError("IntMatrix: dimension mismatch in difference");
        IntMatrix m = a;
        for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] -= b.a_[i];
        return m;
    }
    friend IntMatrix operator*(const BigInt& s, const IntMatrix& a) {
        IntMatrix m = a;
        for (auto& x : m.a_) x *= s;
        return m;
    }

    std::vector<BigInt> apply(const std::vector<BigInt>& v) const {
        std::vector<BigInt> out(r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < r_; ++i) {
            s += i ? ";" : "";
            for (std::size_t j = 0; j < c_; ++j) s += (j ? " " : "") + (*this)(i, j).str();
        }
        return s + "]";
    }

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<BigInt> a_;
};

inline IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) throw UsageError("hstack: row mismatch");
    IntMatrix m(a.rows(), a.cols() + b.cols());
    m.paste(0, 0, a);
    m.paste(0, a.cols(), b);
    return m;
}

inline IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.cols()) throw UsageError("vstack: column mismatch");
    IntMatrix m(a.rows() + b.rows(), a.cols());
    m.paste(0, 0, a);
    m.paste(a.rows(), 0, b);
    return m;
}

inline IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
    m.paste(0, 0, a);
    m.paste(a.rows(), a.cols(), b);
    return m;
}

inline BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

/// L·M·R = diag(d_1, …, d_k, 0, …) with d_i | d_{i+1}, d_i ≥ 0, L and R unimodular.
struct SNFResult {
    std::vector<BigInt> invariant_factors;  ///< length min(rows, cols), zeros last
    IntMatrix left;
    IntMatrix right;
    IntMatrix diagonal;
    std::size_t rank = 0;
};

/// Pivot: smallest nonzero absolute value in the trailing block, ties broken row-major.
inline SNFResult smith_normal_form(const IntMatrix& M) {
    const std::size_t m = M.rows(), n = M.cols();
    IntMatrix D = M, L = IntMatrix::identity(m), R = IntMatrix::identity(n);
    std::size_t t = 0;
    for (; t < std::min(m, n); ++t) {
        bool any = false;
        while (true) {
            std::size_t pi = 0, pj = 0;
            BigInt best = 0;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    const BigInt& x = D(i, j);
                    if (x == 0) continue;
                    BigInt ax = abs_big(x);
                    if (best == 0 || ax < best) {
                        best = ax;
                        pi = i;
                        pj = j;
                    }
                }
            if (best == 0) break;
            any = true;
            D.swap_rows(t, pi);
            L.swap_rows(t, pi);
            D.swap_cols(t, pj);
            R.swap_cols(t, pj);
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (D(i, t) == 0) continue;
                BigInt q = D(i, t) / D(t, t);
                D.add_row(i, t, -q);
                L.add_row(i, t, -q);
                if (D(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (D(t, j) == 0) continue;
                BigInt q = D(t, j) / D(t, t);
                D.add_col(j, t, -q);
                R.add_col(j, t, -q);
                if (D(t, j) != 0) clean = false;
            }
            if (!clean) continue;
            std::optional<std::size_t> bad;
            for (std::size_t i = t + 1; i < m && !bad; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (D(i, j) % D(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (!bad) break;
            D.add_row(t, *bad, 1);
            L.add_row(t, *bad, 1);
        }
        if (!any) break;
        if (D(t, t) < 0) {
            D.negate_row(t);
            L.negate_row(t);
        }
    }
    SNFResult res;
    res.rank = t;
    for (std::size_t i = 0; i < std::min(m, n); ++i) res.invariant_factors.push_back(D(i, i));
    res.left = std::move(L);
    res.right = std::move(R);
    res.diagonal = std::move(D);
    return res;
}

/// Integer x with M x = b, or nothing when no integer solution exists.
inline std::optional<std::vector<BigInt>> solve_integer(const SNFResult& snf,
                                                        const std::vector<BigInt>& b) {
    const std::size_t m = snf.left.rows(), n = snf.right.rows();
    auto lb = snf.left.apply(b);
    std::vector<BigInt> y(n);
    for (std::size_t i = 0; i < m; ++i) {
        if (i < snf.rank) {
            const BigInt& d = snf.invariant_factors[i];
            if (lb[i] % d != 0) return std::nullopt;
            y[i] = lb[i] / d;
        } else if (lb[i] != 0) {
            return std::nullopt;
        }
    }
    return snf.right.apply(y);
}

inline std::optional<std::vector<BigInt>> solve_integer(const IntMatrix& M, const std::vector<BigInt>& b) {
    return solve_integer(smith_normal_form(M), b);
}

/// Basis of the integer kernel {x : M x = 0}, as columns.
inline IntMatrix kernel_basis(const SNFResult& snf) {
    const std::size_t n = snf.right.rows();
    return snf.right.block(0, snf.rank, n, n - snf.rank);
}

inline IntMatrix kernel_basis(const IntMatrix& M) { return kernel_basis(smith_normal_form(M)); }

/// Basis (as columns) of the lattice spanned by the columns of S, via integer column echelon form.
inline IntMatrix lattice_basis(const IntMatrix& S) {
    IntMatrix E = S;
    const std::size_t m = E.rows(), n = E.cols();
    std::size_t piv = 0;
    for (std::size_t i = 0; i < m && piv < n; ++i) {
        while (true) {
            std::optional<std::size_t> best;
            std::size_t nonzero = 0;
            for (std::size_t j = piv; j < n; ++j) {
                if (E(i, j) == 0) continue;
                ++nonzero;
                if (!best || abs_big(E(i, j)) < abs_big(E(i, *best))) best = j;
            }
            if (nonzero == 0) break;
            E.swap_cols(piv, *best);
            if (nonzero == 1) {
                if (E(i, piv) < 0)
                    for (std::size_t r = 0; r < m; ++r) E(r, piv) = -E(r, piv);
                ++piv;
                break;
            }
            for (std::size_t j = piv + 1; j < n; ++j) {
                if (E(i, j) == 0) continue;
                BigInt q = E(i, j) / E(i, piv);
                E.add_col(j, piv, -q);
            }
        }
    }
    return E.block(0, 0, m, piv);
}

/// Bareiss fraction-free determinant.
inline BigInt determinant(IntMatrix A) {
    const std::size_t n = A.rows();
    if (n != A.cols()) throw UsageError("determinant: matrix not square");
    if (n == 0) return 1;
    BigInt sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (A(k, k) == 0) {
            std::size_t s = k + 1;
            while (s < n && A(s, k) == 0) ++s;
            if (s == n) return 0;
            A.swap_rows(k, s);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                A(i, j) = (A(i, j) * A(k, k) - A(i, k) * A(k, j)) / prev;
        prev = A(k, k);
    }
    return sign * A(n - 1, n - 1);
}

inline std::size_t rank_over_q(const SNFResult& snf) { return snf.rank; }

/// Rank of M mod p read off from the invariant factors.
inline std::size_t rank_mod_p(const SNFResult& snf, const BigInt& p) {
    std::size_t k = 0;
    for (const auto& d : snf.invariant_factors)
        if (d != 0 && d % p != 0) ++k;
    return k;
}

}  // namespace tandim
