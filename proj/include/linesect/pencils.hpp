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

#ifndef LINESECT_PENCILS_HPP
#define LINESECT_PENCILS_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "linesect/antisym.hpp"
#include "linesect/generate.hpp"
#include "linesect/matrix.hpp"
#include "linesect/poly.hpp"

namespace linesect {

/// Pf(lambda A - mu B) as a binary form in (lambda, mu).
inline HomogPoly pfaffian_binary(const AntisymPencil& pencil) {
    return pfaffian_full(pencil_poly_matrix(pencil));
}

/// Normal form data for a pencil of even size 2n. T carries the original
/// coordinates to normal coordinates: t(inv T) A inv(T) = blockdiag(J),
/// t(inv T) B inv(T) = blockdiag(lambda_i J); equivalently the congruence of
/// the input by inverse(T) is block_pencil(lambdas).
struct PencilNormalFormOdd {
    std::vector<Rat> lambdas;  // ascending
    RatMatrix T;
};

/// Normal form data for a pencil of odd size 2n+1: the congruence of the
/// input by inverse(T) is even_size_pencil(n).
struct PencilNormalFormEven {
    RatMatrix T;
};

namespace detail {

inline std::string degree_list(const std::vector<int>& degs) {
    std::string s;
    for (int d : degs) s += " " + std::to_string(d);
    return s;
}

}  // namespace detail

/// Diagonalize a pencil of even size into 2x2 blocks. Requires all Pfaffian
/// roots rational, simple, and finite (Pf(A) != 0); otherwise throws with a
/// diagnostic. Finite roots always exist after respanning the pencil by a
/// suitable invertible 2x2 recombination.
inline PencilNormalFormOdd pencil_normal_form_odd(const AntisymPencil& pencil) {
    const std::size_t size = pencil.size();
    if (size % 2 != 0 || size < 4)
        throw std::invalid_argument(
            "pencil_normal_form_odd: size must be even and >= 4");
    const std::size_t n = size / 2;
    const HomogPoly pf = pfaffian_binary(pencil);
    if (pf.is_zero())
        throw std::invalid_argument(
            "pencil_normal_form_odd: identically zero Pfaffian (every member "
            "is degenerate)");
    const BinaryRootReport roots = binary_rational_roots(pf);
    if (roots.leftover_degree > 0)
        throw std::invalid_argument(
            "pencil_normal_form_odd: irrational Pfaffian root; remaining "
            "degree " +
            std::to_string(roots.leftover_degree) +
            ", squarefree layer degrees" +
            detail::degree_list(roots.leftover_squarefree_degrees));
    std::vector<Rat> lambdas;
    for (std::size_t k = 0; k < roots.roots.size(); ++k) {
        if (roots.multiplicities[k] != 1)
            throw std::invalid_argument(
                "pencil_normal_form_odd: repeated Pfaffian root");
        if (roots.roots[k].second == 0)
            throw std::invalid_argument(
                "pencil_normal_form_odd: Pf(A) = 0 (root at infinity); "
                "respan the pencil first");
        lambdas.push_back(roots.roots[k].first / roots.roots[k].second);
    }
    if (lambdas.size() != n)
        throw std::logic_error("pencil_normal_form_odd: root count");
    std::sort(lambdas.begin(), lambdas.end());

    RatMatrix basis(size, size);  // columns = new basis vectors
    for (std::size_t k = 0; k < n; ++k) {
        const AntisymMatrix member = pencil_member(pencil, lambdas[k], Rat(1));
        const auto ker = nullspace(member.full());
        if (ker.size() != 2)
            throw std::invalid_argument(
                "pencil_normal_form_odd: corank != 2 at a Pfaffian root");
        const Rat s = bilinear(ker[0], pencil.a.full(), ker[1]);
        if (s == 0)
            throw std::invalid_argument(
                "pencil_normal_form_odd: degenerate restriction at a root");
        for (std::size_t i = 0; i < size; ++i) {
            basis(i, 2 * k) = ker[0][i];
            basis(i, 2 * k + 1) = -ker[1][i] / s;
        }
    }
    const auto inv = inverse(basis);
    if (!inv)
        throw std::logic_error("pencil_normal_form_odd: basis not invertible");
    PencilNormalFormOdd out{std::move(lambdas), *inv};
    const AntisymPencil target = block_pencil(out.lambdas);
    if (pencil.a.congruence(basis) != target.a ||
        pencil.b.congruence(basis) != target.b)
        throw std::logic_error("pencil_normal_form_odd: verification failed");
    return out;
}

/// Bring a pencil of odd size 2n+1 whose generic member has corank 1 and
/// whose center curve is a rational normal curve of degree n into the
/// standard coordinates of even_size_pencil(n). Throws when a corank >= 2
/// member exists or the center curve degenerates.
inline PencilNormalFormEven pencil_normal_form_even(
    const AntisymPencil& pencil) {
    const std::size_t size = pencil.size();
    if (size % 2 != 1 || size < 5)
        throw std::invalid_argument(
            "pencil_normal_form_even: size must be odd and >= 5");
    const std::size_t n = (size - 1) / 2;

    // Step 1: the kernel curve from the Pfaffian minors. Components have
    // degree n in (lambda, mu); the coefficient vectors of
    // lambda^k mu^(n-k) become the new basis vectors f_k (k = 0..n).
    const HomogPolyVec minors =
        poly_pfaffian_minors(pencil_poly_matrix(pencil));
    RatMatrix fcols(size, n + 1);
    bool any = false;
    for (std::size_t i = 0; i < size; ++i) {
        for (const auto& [e, c] : minors[i].terms()) {
            if (e[0] + e[1] != static_cast<int>(n))
                throw std::logic_error("pencil_normal_form_even: degree");
            fcols(i, e[0]) = c;
            any = true;
        }
    }
    if (!any)
        throw std::invalid_argument(
            "pencil_normal_form_even: corank >= 2 member present (minor "
            "vector vanishes identically)");
    if (rank(fcols) != n + 1)
        throw std::invalid_argument(
            "pencil_normal_form_even: center curve is degenerate (spans less "
            "than n+1 coordinates)");

    // Step 2: complete the basis. e_k (k = 0..n-1) solves
    // t(f_i) A e_k = delta_{ik} (i = 0..n) and t(e_j) A e_k = 0 (j < k).
    RatMatrix basis(size, size);
    for (std::size_t k = 0; k <= n; ++k)
        for (std::size_t i = 0; i < size; ++i)
            basis(i, n + k) = fcols(i, k);
    const RatMatrix at = pencil.a.full().transpose();
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<RatVec> rows;
        RatVec rhs;
        for (std::size_t i = 0; i <= n; ++i) {
            RatVec f(size);
            for (std::size_t r = 0; r < size; ++r) f[r] = fcols(r, i);
            rows.push_back(at.apply(f));
            rhs.push_back(i == k ? Rat(1) : Rat(0));
        }
        for (std::size_t j = 0; j < k; ++j) {
            RatVec e(size);
            for (std::size_t r = 0; r < size; ++r) e[r] = basis(r, j);
            rows.push_back(at.apply(e));
            rhs.push_back(Rat(0));
        }
        const auto sol = solve(from_rows(rows), rhs);
        if (!sol)
            throw std::invalid_argument(
                "pencil_normal_form_even: basis completion is inconsistent "
                "(pencil outside the expected congruence class)");
        for (std::size_t r = 0; r < size; ++r) basis(r, k) = (*sol)[r];
    }

    // Step 3: a symmetric shear e_k += sum_i t(i, k) e_{n+i} clears the
    // remaining top-left block of B while preserving A. The defect block
    // b(k, l) demands t(k+1, l) - t(l+1, k) = b(k, l) with row 0 free (set
    // to zero) and the out-of-range row n treated as zero.
    const AntisymMatrix b1 = pencil.b.congruence(basis);
    RatMatrix t(n, n);
    for (std::size_t l = n; l-- > 1;) {
        for (std::size_t k = 0; k < l; ++k) {
            const Rat prev = (l + 1 < n) ? t(k, l + 1) : Rat(0);
            t(k + 1, l) = prev + b1(k, l);
            t(l, k + 1) = t(k + 1, l);
        }
    }
    RatMatrix shear = RatMatrix::identity(size);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) shear(n + i, k) = t(i, k);
    const RatMatrix total = basis * shear;

    const AntisymPencil target = even_size_pencil(n);
    if (pencil.a.congruence(total) != target.a ||
        pencil.b.congruence(total) != target.b)
        throw std::invalid_argument(
            "pencil_normal_form_even: verification failed (pencil outside "
            "the expected congruence class)");
    const auto inv = inverse(total);
    if (!inv)
        throw std::logic_error("pencil_normal_form_even: basis not invertible");
    return PencilNormalFormEven{*inv};
}

}  // namespace linesect

#endif
