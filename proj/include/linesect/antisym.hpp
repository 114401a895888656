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

#ifndef LINESECT_ANTISYM_HPP
#define LINESECT_ANTISYM_HPP

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "linesect/matrix.hpp"
#include "linesect/poly.hpp"
#include "linesect/rational.hpp"

namespace linesect {

/// Antisymmetric matrix over Q: a_ij = -a_ji, zero diagonal.
class AntisymMatrix {
  public:
    explicit AntisymMatrix(std::size_t size) : m_(size, size) {}

    /// Validating constructor from a full square matrix.
    static AntisymMatrix from_full(const RatMatrix& full) {
        if (full.rows() != full.cols())
            throw std::invalid_argument("antisymmetric: matrix not square");
        for (std::size_t i = 0; i < full.rows(); ++i)
            for (std::size_t j = i; j < full.cols(); ++j)
                if (full(i, j) != -full(j, i))
                    throw std::invalid_argument(
                        "antisymmetric: a_ij != -a_ji");
        AntisymMatrix a(full.rows());
        a.m_ = full;
        return a;
    }

    std::size_t size() const { return m_.rows(); }

    const Rat& operator()(std::size_t i, std::size_t j) const {
        return m_(i, j);
    }

    void set(std::size_t i, std::size_t j, const Rat& v) {
        if (i == j) {
            if (v != 0)
                throw std::invalid_argument("antisymmetric: diagonal must be 0");
            return;
        }
        m_(i, j) = v;
        m_(j, i) = -v;
    }

    const RatMatrix& full() const { return m_; }

    bool operator==(const AntisymMatrix& o) const { return m_ == o.m_; }
    bool operator!=(const AntisymMatrix& o) const { return !(*this == o); }

    AntisymMatrix operator+(const AntisymMatrix& o) const {
        AntisymMatrix r(size());
        r.m_ = m_ + o.m_;
        return r;
    }
    AntisymMatrix operator-() const {
        AntisymMatrix r(size());
        r.m_ = -m_;
        return r;
    }
    AntisymMatrix operator*(const Rat& s) const {
        AntisymMatrix r(size());
        r.m_ = m_ * s;
        return r;
    }

    /// Congruence transport T^t a T (again antisymmetric).
    AntisymMatrix congruence(const RatMatrix& t) const {
        AntisymMatrix r(t.cols());
        r.m_ = t.transpose() * m_ * t;
        return r;
    }

  private:
    RatMatrix m_;
};

struct AntisymPencil {
    AntisymMatrix a, b;
    AntisymPencil(AntisymMatrix a_, AntisymMatrix b_)
        : a(std::move(a_)), b(std::move(b_)) {
        if (a.size() != b.size())
            throw std::invalid_argument("pencil: size mismatch");
    }
    std::size_t size() const { return a.size(); }
};

struct AntisymNet {
    AntisymMatrix a, b, c;
    AntisymNet(AntisymMatrix a_, AntisymMatrix b_, AntisymMatrix c_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
        if (a.size() != b.size() || a.size() != c.size())
            throw std::invalid_argument("net: size mismatch");
    }
    std::size_t size() const { return a.size(); }
};

namespace detail {

/// Pfaffian of the submatrix indexed by the set bits of `mask`, by expansion
/// along the lowest active index, memoized on the index subset.
template <class T>
T pfaffian_mask(const Matrix<T>& m, std::uint32_t mask,
                std::unordered_map<std::uint32_t, T>& memo) {
    if (mask == 0) return T(1);
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < 32; ++k)
        if (mask & (1u << k)) idx.push_back(k);
    T total(0);
    const std::size_t i = idx[0];
    // Pf = sum over partners j of the first index, with alternating sign by
    // the partner's position in the active list.
    for (std::size_t pos = 1; pos < idx.size(); ++pos) {
        const std::size_t j = idx[pos];
        if (m(i, j) == T(0)) continue;
        const std::uint32_t sub =
            mask & ~(1u << i) & ~(1u << j);
        T term = m(i, j) * pfaffian_mask(m, sub, memo);
        if (pos % 2 == 0) term = -term;
        total = total + term;
    }
    memo.emplace(mask, total);
    return total;
}

}  // namespace detail

/// Pfaffian of an even-size antisymmetric matrix given as a full Matrix<T>
/// over any commutative ring; returns 0 for odd size (Pf vanishes there).
template <class T>
T pfaffian_full(const Matrix<T>& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("pfaffian: matrix not square");
    if (m.rows() > 31) throw std::invalid_argument("pfaffian: size too large");
    if (m.rows() % 2 == 1) return T(0);
    std::unordered_map<std::uint32_t, T> memo;
    const std::uint32_t mask =
        m.rows() == 0 ? 0u : ((1u << m.rows()) - 1u);
    return detail::pfaffian_mask(m, mask, memo);
}

inline Rat pfaffian(const AntisymMatrix& a) { return pfaffian_full(a.full()); }

/// (-1)^i times the Pfaffian of a with row and column i deleted. For an
/// odd-size a of corank 1 the vector of these minors spans ker a.
inline Rat pfaffian_minor(const AntisymMatrix& a, std::size_t i) {
    const std::size_t n = a.size();
    if (i >= n) throw std::out_of_range("pfaffian_minor: index");
    if (n % 2 == 0)
        throw std::invalid_argument("pfaffian_minor: size must be odd");
    RatMatrix sub(n - 1, n - 1);
    std::size_t r = 0;
    for (std::size_t p = 0; p < n; ++p) {
        if (p == i) continue;
        std::size_t c = 0;
        for (std::size_t q = 0; q < n; ++q) {
            if (q == i) continue;
            sub(r, c++) = a(p, q);
        }
        ++r;
    }
    Rat v = pfaffian_full(sub);
    if (i % 2 == 1) v = -v;
    return v;
}

inline std::size_t corank(const AntisymMatrix& a) {
    return a.size() - rank(a.full());
}

/// Membership in the dual Grassmannian: corank >= 2. (For odd size, corank is
/// odd, so corank >= 2 already means >= 3.)
inline bool dual_grassmannian_member(const AntisymMatrix& a) {
    if (a.size() < 4)
        throw std::invalid_argument("dual_grassmannian_member: size < 4");
    return corank(a) >= 2;
}

/// Tangency through a point pair: both spanning points in ker a.
inline bool tangency_points(const AntisymMatrix& a, const RatVec& p,
                            const RatVec& q) {
    if (p.size() != a.size() || q.size() != a.size())
        throw std::invalid_argument("tangency: dimension mismatch");
    return is_zero_vec(a.full().apply(p)) && is_zero_vec(a.full().apply(q));
}

/// The member lambda*A - mu*B of a pencil.
inline AntisymMatrix pencil_member(const AntisymPencil& pencil, const Rat& lambda,
                                   const Rat& mu) {
    return pencil.a * lambda + (-(pencil.b * mu));
}

/// The member lambda*A + mu*B + nu*C of a net.
inline AntisymMatrix net_member(const AntisymNet& net, const Rat& lambda,
                                const Rat& mu, const Rat& nu) {
    return net.a * lambda + net.b * mu + net.c * nu;
}

/// lambda*A - mu*B as a matrix of degree-1 binary forms in (lambda, mu).
inline PolyMatrix pencil_poly_matrix(const AntisymPencil& pencil) {
    const std::size_t n = pencil.size();
    const HomogPoly lam = HomogPoly::variable(0);
    const HomogPoly mu = HomogPoly::variable(1);
    PolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = lam * pencil.a(i, j) - mu * pencil.b(i, j);
    return m;
}

/// lambda*A + mu*B + nu*C as a matrix of degree-1 ternary forms.
inline PolyMatrix net_poly_matrix(const AntisymNet& net) {
    const std::size_t n = net.size();
    const HomogPoly lam = HomogPoly::variable(0);
    const HomogPoly mu = HomogPoly::variable(1);
    const HomogPoly nu = HomogPoly::variable(2);
    PolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = lam * net.a(i, j) + mu * net.b(i, j) + nu * net.c(i, j);
    return m;
}

/// Pfaffian minor vector of a matrix of polynomials (odd size), component i
/// = (-1)^i Pf(delete row/col i). For corank-1 members this parametrizes the
/// kernel.
inline HomogPolyVec poly_pfaffian_minors(const PolyMatrix& m) {
    const std::size_t n = m.rows();
    if (n % 2 == 0)
        throw std::invalid_argument("poly_pfaffian_minors: size must be odd");
    HomogPolyVec out(n);
    for (std::size_t i = 0; i < n; ++i) {
        PolyMatrix sub(n - 1, n - 1);
        std::size_t r = 0;
        for (std::size_t p = 0; p < n; ++p) {
            if (p == i) continue;
            std::size_t c = 0;
            for (std::size_t q = 0; q < n; ++q) {
                if (q == i) continue;
                sub(r, c++) = m(p, q);
            }
            ++r;
        }
        HomogPoly v = pfaffian_full(sub);
        if (i % 2 == 1) v = -v;
        out[i] = v;
    }
    return out;
}

}  // namespace linesect

#endif
