/*
 * Copyright 2026 The linesect authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef LINESECT_MATRIX_HPP
#define LINESECT_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "linesect/rational.hpp"

namespace linesect {

/// Dense matrix over an arbitrary commutative ring T. Elimination-based
/// algorithms below additionally require T to be a field.
template <class T>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix transpose() const {
        Matrix m(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    Matrix operator+(const Matrix& o) const {
        require_same_shape(o);
        Matrix m(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k)
            m.data_[k] = data_[k] + o.data_[k];
        return m;
    }

    Matrix operator-(const Matrix& o) const {
        require_same_shape(o);
        Matrix m(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k)
            m.data_[k] = data_[k] - o.data_[k];
        return m;
    }

    Matrix operator-() const {
        Matrix m(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = -data_[k];
        return m;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_)
            throw std::invalid_argument("matrix product: shape mismatch");
        Matrix m(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == T(0)) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    m(i, j) += a * o(k, j);
            }
        return m;
    }

    Matrix operator*(const T& s) const {
        Matrix m(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k] * s;
        return m;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        if (cols_ != v.size())
            throw std::invalid_argument("matrix apply: shape mismatch");
        std::vector<T> out(rows_, T(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                out[i] += (*this)(i, j) * v[j];
        return out;
    }

    bool is_zero() const {
        for (const T& x : data_)
            if (!(x == T(0))) return false;
        return true;
    }

  private:
    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix op: shape mismatch");
    }

    std::size_t rows_, cols_;
    std::vector<T> data_;
};

template <class T>
Matrix<T> operator*(const T& s, const Matrix<T>& m) {
    return m * s;
}

using RatMatrix = Matrix<Rat>;
using RatVec = std::vector<Rat>;

inline bool is_zero_vec(const RatVec& v) {
    for (const Rat& x : v)
        if (x != 0) return false;
    return true;
}

struct RrefResult {
    RatMatrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;  // pivot column indices, increasing
};

/// Reduced row echelon form by Gauss-Jordan elimination. The RREF of a
/// matrix is unique, so the output does not depend on pivot-row choices.
inline RrefResult rref(RatMatrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    RrefResult out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        // Pick the pivot candidate with smallest representation to limit
        // intermediate coefficient growth.
        std::size_t best = rows;
        std::size_t best_size = 0;
        for (std::size_t i = r; i < rows; ++i) {
            if (m(i, c) == 0) continue;
            const std::size_t sz = mpz_size(m(i, c).get_num().get_mpz_t()) +
                                   mpz_size(m(i, c).get_den().get_mpz_t());
            if (best == rows || sz < best_size) {
                best = i;
                best_size = sz;
            }
        }
        if (best == rows) continue;
        if (best != r)
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(m(r, j), m(best, j));
        const Rat inv_pivot = 1 / m(r, c);
        for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv_pivot;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m(i, c) == 0) continue;
            const Rat f = m(i, c);
            for (std::size_t j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.rank = r;
    out.reduced = std::move(m);
    return out;
}

inline std::size_t rank(const RatMatrix& m) { return rref(m).rank; }

/// Certified lower bound on the rank: elimination over Z/p for the prime
/// p = 2^61 - 1. A successful pivot sequence of length r exhibits an r x r
/// minor that is nonzero mod p, hence nonzero. Entries whose denominator
/// vanishes mod p make the reduction unusable; then 0 is returned and the
/// caller must fall back to exact elimination.
inline std::size_t modular_rank_lower_bound(const RatMatrix& m) {
    constexpr std::uint64_t kP = (std::uint64_t(1) << 61) - 1;
    auto mulmod = [](std::uint64_t a, std::uint64_t b) -> std::uint64_t {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(a) * b) % kP);
    };
    auto powmod = [&](std::uint64_t a, std::uint64_t e) {
        std::uint64_t r = 1;
        while (e) {
            if (e & 1) r = mulmod(r, a);
            a = mulmod(a, a);
            e >>= 1;
        }
        return r;
    };
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::uint64_t> w(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            const Rat& x = m(i, j);
            std::uint64_t num =
                mpz_fdiv_ui(x.get_num().get_mpz_t(), kP);
            const std::uint64_t den =
                mpz_fdiv_ui(x.get_den().get_mpz_t(), kP);
            if (den == 0) return 0;
            w[i * cols + j] = mulmod(num, powmod(den, kP - 2));
        }
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (w[i * cols + c] != 0) {
                piv = i;
                break;
            }
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = c; j < cols; ++j)
                std::swap(w[r * cols + j], w[piv * cols + j]);
        const std::uint64_t inv = powmod(w[r * cols + c], kP - 2);
        for (std::size_t j = c; j < cols; ++j)
            w[r * cols + j] = mulmod(w[r * cols + j], inv);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const std::uint64_t f = w[i * cols + c];
            if (f == 0) continue;
            for (std::size_t j = c; j < cols; ++j) {
                const std::uint64_t sub = mulmod(f, w[r * cols + j]);
                std::uint64_t& cell = w[i * cols + j];
                cell = cell >= sub ? cell - sub : cell + kP - sub;
            }
        }
        ++r;
    }
    return r;
}

/// Canonical kernel basis read off the RREF: one vector per free column,
/// with entry 1 in that column, ordered by free column index.
inline std::vector<RatVec> nullspace(const RatMatrix& m) {
    const RrefResult rr = rref(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : rr.pivots) is_pivot[c] = true;
    std::vector<RatVec> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RatVec v(cols, Rat(0));
        v[free] = 1;
        for (std::size_t r = 0; r < rr.rank; ++r)
            v[rr.pivots[r]] = -rr.reduced(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// One solution of m x = b (the one with all free variables zero), or
/// nullopt when the system is inconsistent.
inline std::optional<RatVec> solve(const RatMatrix& m, const RatVec& b) {
    if (m.rows() != b.size())
        throw std::invalid_argument("solve: shape mismatch");
    RatMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    const RrefResult rr = rref(aug);
    if (!rr.pivots.empty() && rr.pivots.back() == m.cols())
        return std::nullopt;
    RatVec x(m.cols(), Rat(0));
    for (std::size_t r = 0; r < rr.rank; ++r)
        x[rr.pivots[r]] = rr.reduced(r, m.cols());
    return x;
}

inline Rat det(RatMatrix m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("det: matrix not square");
    const std::size_t n = m.rows();
    Rat result(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = n;
        for (std::size_t i = c; i < n; ++i)
            if (m(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv == n) return Rat(0);
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(c, j), m(piv, j));
            result = -result;
        }
        result *= m(c, c);
        const Rat inv_pivot = 1 / m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c) == 0) continue;
            const Rat f = m(i, c) * inv_pivot;
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return result;
}

inline std::optional<RatMatrix> inverse(const RatMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("inverse: matrix not square");
    const std::size_t n = m.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    const RrefResult rr = rref(aug);
    if (rr.rank < n) return std::nullopt;
    for (std::size_t r = 0; r < n; ++r)
        if (rr.pivots[r] != r) return std::nullopt;
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = rr.reduced(i, n + j);
    return inv;
}

/// Stack row vectors into a matrix.
inline RatMatrix from_rows(const std::vector<RatVec>& rows) {
    if (rows.empty()) return RatMatrix(0, 0);
    RatMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size())
            throw std::invalid_argument("from_rows: ragged input");
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

inline RatVec scale_vec(const Rat& s, const RatVec& v) {
    RatVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
    return out;
}

inline RatVec add_vec(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("add_vec: shapes");
    RatVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

inline Rat dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: shapes");
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

/// Bilinear form value  v^T m w.
inline Rat bilinear(const RatVec& v, const RatMatrix& m, const RatVec& w) {
    return dot(v, m.apply(w));
}

}  // namespace linesect

#endif
