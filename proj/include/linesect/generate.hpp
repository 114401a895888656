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

#ifndef LINESECT_GENERATE_HPP
#define LINESECT_GENERATE_HPP

#include <array>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "linesect/antisym.hpp"
#include "linesect/grassmann.hpp"
#include "linesect/matrix.hpp"
#include "linesect/rational.hpp"

namespace linesect {

inline constexpr int kRetryCap = 100;

inline RatMatrix random_rat_matrix(Rng& rng, std::size_t rows,
                                   std::size_t cols, long bound) {
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = rng.uniform(-bound, bound);
    return m;
}

inline AntisymMatrix random_antisym(Rng& rng, std::size_t size, long bound) {
    AntisymMatrix a(size);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = i + 1; j < size; ++j)
            a.set(i, j, Rat(rng.uniform(-bound, bound)));
    return a;
}

inline RatMatrix random_invertible(Rng& rng, std::size_t n, long bound) {
    for (int attempt = 0; attempt < kRetryCap; ++attempt) {
        RatMatrix m = random_rat_matrix(rng, n, n, bound);
        if (det(m) != 0) return m;
    }
    throw std::runtime_error("random_invertible: retry cap exceeded");
}

/// Random element of SL(n, Q): draw an invertible matrix and divide the
/// first row by the determinant.
inline RatMatrix random_sl(Rng& rng, std::size_t n, long bound) {
    RatMatrix m = random_invertible(rng, n, bound);
    const Rat d = det(m);
    for (std::size_t j = 0; j < n; ++j) m(0, j) /= d;
    return m;
}

inline RatMatrix random_sl2(Rng& rng, long bound) {
    return random_sl(rng, 2, bound);
}

inline RatMatrix random_symmetric(Rng& rng, std::size_t n, long bound) {
    RatMatrix s(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            s(i, j) = rng.uniform(-bound, bound);
            s(j, i) = s(i, j);
        }
    return s;
}

/// The standard symplectic form on Q^{2n}: [[0, -E], [E, 0]].
inline AntisymMatrix standard_symplectic_form(std::size_t n) {
    AntisymMatrix a(2 * n);
    for (std::size_t i = 0; i < n; ++i) a.set(i, n + i, Rat(-1));
    return a;
}

/// Random element of Sp(2n, Q) for the form [[0, -E], [E, 0]]: a product of
/// upper/lower symmetric shears and a block-diagonal GL(n) twist, each of
/// which preserves the form.
inline RatMatrix random_symplectic(Rng& rng, std::size_t n, long bound) {
    const std::size_t m = 2 * n;
    auto upper = [&](const RatMatrix& s) {
        RatMatrix t = RatMatrix::identity(m);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) t(i, n + j) = s(i, j);
        return t;
    };
    auto lower = [&](const RatMatrix& s) {
        RatMatrix t = RatMatrix::identity(m);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) t(n + i, j) = s(i, j);
        return t;
    };
    const RatMatrix g = random_invertible(rng, n, bound);
    const RatMatrix gti = inverse(g.transpose()).value();
    RatMatrix block(m, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            block(i, j) = g(i, j);
            block(n + i, n + j) = gti(i, j);
        }
    return upper(random_symmetric(rng, n, bound)) * block *
           lower(random_symmetric(rng, n, bound));
}

/// Pencil in 2n variables: A = blockdiag(J, ..., J),
/// B = blockdiag(lambda_1 J, ..., lambda_n J) with J = [[0, -1], [1, 0]].
inline AntisymPencil block_pencil(const std::vector<Rat>& lambdas) {
    const std::size_t n = lambdas.size();
    if (n < 2) throw std::invalid_argument("block_pencil: need >= 2 blocks");
    AntisymMatrix a(2 * n), b(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        a.set(2 * i, 2 * i + 1, Rat(-1));
        b.set(2 * i, 2 * i + 1, -lambdas[i]);
    }
    return AntisymPencil(a, b);
}

/// Pencil normal form in 2n+1 variables (odd size):
/// A(i, n+i) = -1 for i < n with last row and column zero;
/// B(i, n+1+i) = -1 for i < n with row and column n zero.
/// The corank-1 center curve is c(lambda:mu) with c_{n+k} = mu^{n-k} lambda^k.
inline AntisymPencil even_size_pencil(std::size_t n) {
    if (n < 2) throw std::invalid_argument("even_size_pencil: need n >= 2");
    AntisymMatrix a(2 * n + 1), b(2 * n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        a.set(i, n + i, Rat(-1));
        b.set(i, n + 1 + i, Rat(-1));
    }
    return AntisymPencil(a, b);
}

/// Single antisymmetric form of size 2n+1: the standard symplectic form
/// padded with a zero last row and column (corank 1 with center e_{2n}).
inline AntisymMatrix padded_symplectic(std::size_t n) {
    if (n < 2) throw std::invalid_argument("padded_symplectic: need n >= 2");
    AntisymMatrix a(2 * n + 1);
    for (std::size_t i = 0; i < n; ++i) a.set(i, n + i, Rat(-1));
    return a;
}

/// Net normal form in 6 variables parametrized by (alpha, beta, gamma,
/// delta): A = diag(J, J, 0), B = diag(0, J, J), and C with blocks
/// [[0, -alpha E, -t(Cbar)], [alpha E, J, -beta E], [Cbar, beta E, 0]]
/// where Cbar = [[gamma, delta], [0, gamma]].
inline AntisymNet standard_net_g15(const Rat& alpha, const Rat& beta,
                                   const Rat& gamma, const Rat& delta) {
    AntisymMatrix a(6), b(6), c(6);
    a.set(0, 1, Rat(-1));
    a.set(2, 3, Rat(-1));
    b.set(2, 3, Rat(-1));
    b.set(4, 5, Rat(-1));
    c.set(0, 2, -alpha);
    c.set(1, 3, -alpha);
    c.set(2, 4, -beta);
    c.set(3, 5, -beta);
    c.set(2, 3, Rat(-1));
    c.set(0, 4, -gamma);
    c.set(1, 4, -delta);
    c.set(1, 5, -gamma);
    return AntisymNet(a, b, c);
}

/// A basis of the five-dimensional space of ternary quadrics annihilated by
/// the trace pairing with the symmetric 3x3 matrix q: quadrics s with
/// sum_{ij} q_ij s_ij = 0, returned as symmetric matrices.
inline std::vector<RatMatrix> trace_complement_quadrics(const RatMatrix& q) {
    if (q.rows() != 3 || q.cols() != 3 || q != q.transpose())
        throw std::invalid_argument(
            "trace_complement_quadrics: need a symmetric 3x3 matrix");
    // Coordinates (s00, s11, s22, s01, s02, s12); off-diagonal entries count
    // twice in the trace pairing.
    RatMatrix row(1, 6);
    row(0, 0) = q(0, 0);
    row(0, 1) = q(1, 1);
    row(0, 2) = q(2, 2);
    row(0, 3) = 2 * q(0, 1);
    row(0, 4) = 2 * q(0, 2);
    row(0, 5) = 2 * q(1, 2);
    const auto basis = nullspace(row);
    if (basis.size() != 5)
        throw std::invalid_argument(
            "trace_complement_quadrics: zero pairing matrix");
    std::vector<RatMatrix> out;
    for (const RatVec& v : basis) {
        RatMatrix s(3, 3);
        s(0, 0) = v[0];
        s(1, 1) = v[1];
        s(2, 2) = v[2];
        s(0, 1) = s(1, 0) = v[3];
        s(0, 2) = s(2, 0) = v[4];
        s(1, 2) = s(2, 1) = v[5];
        out.push_back(s);
    }
    return out;
}

/// Net of antisymmetric 5x5 forms whose member at (lambda:mu:nu) annihilates
/// the point q(lambda, mu, nu) of the degree-2 map built from the five
/// quadrics trace-orthogonal to the given smooth conic matrix. The defining
/// identity determines the triple (A, B, C) up to one scalar; its three
/// components span the net.
inline AntisymNet net_from_conic(const RatMatrix& conic) {
    if (det(conic) == 0)
        throw std::invalid_argument("net_from_conic: conic must be smooth");
    const std::vector<RatMatrix> quads = trace_complement_quadrics(conic);
    // Unknowns: entries (i < j) of A, then B, then C (30 total). Equations:
    // coefficients of each cubic monomial in each of the 5 components of
    // (lambda A + mu B + nu C) * q(lambda, mu, nu).
    const std::size_t kPairs = 10;
    std::vector<std::array<int, 2>> pairs;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) pairs.push_back({i, j});
    // Monomial index for a degree-3 exponent triple.
    std::vector<std::array<int, 3>> mon3;
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; a + b <= 3; ++b) mon3.push_back({a, b, 3 - a - b});
    auto mon3_index = [&](int a, int b, int c) {
        for (std::size_t k = 0; k < mon3.size(); ++k)
            if (mon3[k][0] == a && mon3[k][1] == b && mon3[k][2] == c)
                return k;
        throw std::logic_error("net_from_conic: bad monomial");
    };
    RatMatrix system(5 * mon3.size(), 3 * kPairs);
    // Quadric s as coefficients on monomials (2,0,0),(0,2,0),(0,0,2),
    // (1,1,0),(1,0,1),(0,1,1).
    auto quad_coeffs = [](const RatMatrix& s) {
        return std::array<Rat, 6>{s(0, 0),     s(1, 1),     s(2, 2),
                                  2 * s(0, 1), 2 * s(0, 2), 2 * s(1, 2)};
    };
    const std::array<std::array<int, 3>, 6> mon2{
        {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}}};
    for (int mat = 0; mat < 3; ++mat) {
        std::array<int, 3> var{0, 0, 0};
        var[mat] = 1;
        for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
            const std::size_t unk = mat * kPairs + pi;
            const auto [i, j] = std::pair(pairs[pi][0], pairs[pi][1]);
            // M(i, j) = +x contributes x * q_j to component i; M(j, i) = -x
            // contributes -x * q_i to component j.
            for (const auto& [row_comp, qidx, sign] :
                 {std::tuple(i, j, 1), std::tuple(j, i, -1)}) {
                const auto qc = quad_coeffs(quads[qidx]);
                for (std::size_t mi = 0; mi < 6; ++mi) {
                    if (qc[mi] == 0) continue;
                    const std::size_t m3 = mon3_index(var[0] + mon2[mi][0],
                                                      var[1] + mon2[mi][1],
                                                      var[2] + mon2[mi][2]);
                    system(row_comp * mon3.size() + m3, unk) +=
                        Rat(sign) * qc[mi];
                }
            }
        }
    }
    const auto kernel = nullspace(system);
    if (kernel.size() != 1)
        throw std::invalid_argument(
            "net_from_conic: defining identity has solution dimension " +
            std::to_string(kernel.size()) + ", expected 1");
    const RatVec& v = kernel[0];
    std::vector<AntisymMatrix> mats;
    for (int mat = 0; mat < 3; ++mat) {
        AntisymMatrix m(5);
        for (std::size_t pi = 0; pi < pairs.size(); ++pi)
            m.set(pairs[pi][0], pairs[pi][1], v[mat * kPairs + pi]);
        mats.push_back(m);
    }
    return AntisymNet(mats[0], mats[1], mats[2]);
}

/// The five quadrics of the degree-2 center map attached to a conic, as
/// polynomials in (lambda, mu, nu).
inline HomogPolyVec conic_center_quadrics(const RatMatrix& conic) {
    HomogPolyVec out;
    for (const RatMatrix& s : trace_complement_quadrics(conic)) {
        HomogPoly p;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                std::array<int, 3> e{0, 0, 0};
                ++e[i];
                ++e[j];
                p += HomogPoly::monomial(s(i, j), {e[0], e[1], e[2]});
            }
        out.push_back(p);
    }
    return out;
}

/// Random section spanned by l independent antisymmetric matrices of size
/// N+1 with integer entries in [-bound, bound].
inline SectionSpec general_section(Rng& rng, std::size_t n_ambient,
                                   std::size_t l, long bound = 20) {
    for (int attempt = 0; attempt < kRetryCap; ++attempt) {
        std::vector<AntisymMatrix> mats;
        for (std::size_t k = 0; k < l; ++k)
            mats.push_back(random_antisym(rng, n_ambient + 1, bound));
        std::vector<RatVec> rows;
        for (const AntisymMatrix& a : mats)
            rows.push_back(SectionSpec::upper_vector(a));
        if (rank(from_rows(rows)) != l) continue;
        return SectionSpec(n_ambient, std::move(mats));
    }
    throw std::runtime_error("general_section: retry cap exceeded");
}

/// Congruence transport: every matrix replaced by t(T) A T.
inline SectionSpec section_congruence(const SectionSpec& s,
                                      const RatMatrix& t) {
    std::vector<AntisymMatrix> mats;
    for (const AntisymMatrix& a : s.matrices()) mats.push_back(a.congruence(t));
    return SectionSpec(s.N(), std::move(mats));
}

inline AntisymPencil pencil_congruence(const AntisymPencil& p,
                                       const RatMatrix& t) {
    return AntisymPencil(p.a.congruence(t), p.b.congruence(t));
}

inline AntisymNet net_congruence(const AntisymNet& n, const RatMatrix& t) {
    return AntisymNet(n.a.congruence(t), n.b.congruence(t),
                      n.c.congruence(t));
}

/// Replace the spanning matrices by independent linear combinations; the
/// combination matrix g is l x l acting by mats'_i = sum_j g(i, j) mats_j.
inline SectionSpec section_recombine(const SectionSpec& s, const RatMatrix& g) {
    if (g.rows() != s.l() || g.cols() != s.l())
        throw std::invalid_argument("section_recombine: bad shape");
    std::vector<AntisymMatrix> mats;
    for (std::size_t i = 0; i < s.l(); ++i) {
        AntisymMatrix acc(s.N() + 1);
        for (std::size_t j = 0; j < s.l(); ++j)
            acc = acc + s.matrices()[j] * g(i, j);
        mats.push_back(acc);
    }
    return SectionSpec(s.N(), std::move(mats));
}

}  // namespace linesect

#endif
