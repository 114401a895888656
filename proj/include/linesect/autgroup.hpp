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

#ifndef LINESECT_AUTGROUP_HPP
#define LINESECT_AUTGROUP_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "linesect/generate.hpp"
#include "linesect/grassmann.hpp"
#include "linesect/matrix.hpp"
#include "linesect/nets.hpp"
#include "linesect/rational.hpp"

namespace linesect {

/// Quasihomogeneity verdict for one section.
struct AutReport {
    std::size_t N = 0;
    std::size_t l = 0;
    long aut_dim = 0;
    long section_dim = 0;
    long sample_line_stab_dim = 0;
    long orbit_dim = 0;
    std::string verdict;  // "quasihomogeneous" or "not_quasihomogeneous"
    std::uint64_t seed = 0;
    int samples = 0;
};

/// A projective transformation preserving the section, together with the
/// induced linear action on the spanning matrices:
/// t(inv T) A_i inv(T) = sum_j action(i, j) A_j.
struct GroupElement {
    RatMatrix T;
    RatMatrix induced_span_action;
};

namespace detail {

inline void check_section_range(std::size_t n, std::size_t l,
                                const char* who) {
    if (n < 4 || l < 1 || 2 * n < l + 5)
        throw std::invalid_argument(
            std::string(who) +
            ": parameters outside the valid range N >= 4, 1 <= l <= 2N-5 "
            "(N=" +
            std::to_string(n) + ", l=" + std::to_string(l) + ")");
}

/// Homogeneous system for the symmetry algebra. Unknowns: the (N+1)^2
/// entries of X followed by l*l auxiliary span coefficients mu(i, j);
/// one equation per matrix index i and strict upper pair (r, c):
/// (t(X) A_i + A_i X)(r, c) - sum_j mu(i, j) A_j(r, c) = 0.
inline RatMatrix symmetry_algebra_system(const SectionSpec& s) {
    const std::size_t m = s.N() + 1;
    const std::size_t l = s.l();
    const std::size_t pairs = m * (m - 1) / 2;
    RatMatrix sys(l * pairs, m * m + l * l);
    for (std::size_t i = 0; i < l; ++i) {
        const RatMatrix& a = s.matrices()[i].full();
        std::size_t row = i * pairs;
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = r + 1; c < m; ++c, ++row) {
                for (std::size_t k = 0; k < m; ++k) {
                    sys(row, k * m + r) += a(k, c);
                    sys(row, k * m + c) += a(r, k);
                }
                for (std::size_t j = 0; j < l; ++j)
                    sys(row, m * m + i * l + j) -=
                        s.matrices()[j](r, c);
            }
    }
    return sys;
}

}  // namespace detail

/// Dimension of the symmetry group of the section as an algebraic group:
/// the solution space of t(X) A_i + A_i X in span{A_j} for all i, minus one
/// for the scalar matrices.
inline long infinitesimal_aut_dim(const SectionSpec& s) {
    detail::check_section_range(s.N(), s.l(), "infinitesimal_aut_dim");
    const RatMatrix sys = detail::symmetry_algebra_system(s);
    // The scalar matrices are always in the kernel, so nullity >= 1; if the
    // modular lower bound on the rank already pins the nullity to 1, the
    // dimension is certified to be 0 without exact elimination.
    if (modular_rank_lower_bound(sys) + 1 == sys.cols()) return 0;
    const long nullity =
        static_cast<long>(sys.cols()) - static_cast<long>(rank(sys));
    if (nullity < 1)
        throw std::logic_error(
            "infinitesimal_aut_dim: scalar matrices missing from the kernel");
    return nullity - 1;
}

/// Check that T preserves the section and recover the induced action on the
/// spanning matrices. Throws (naming the offending matrix and the residual)
/// when some transported matrix leaves the span.
inline GroupElement verify_element(const RatMatrix& t, const SectionSpec& s) {
    const std::size_t m = s.N() + 1;
    if (t.rows() != m || t.cols() != m)
        throw std::invalid_argument("verify_element: size mismatch");
    const auto ti = inverse(t);
    if (!ti) throw std::invalid_argument("verify_element: T not invertible");
    std::vector<RatVec> rows;
    for (const AntisymMatrix& a : s.matrices())
        rows.push_back(SectionSpec::upper_vector(a));
    const RatMatrix span_matrix = from_rows(rows).transpose();
    GroupElement out{t, RatMatrix(s.l(), s.l())};
    for (std::size_t i = 0; i < s.l(); ++i) {
        const AntisymMatrix moved = s.matrices()[i].congruence(*ti);
        const RatVec target = SectionSpec::upper_vector(moved);
        const auto coeffs = solve(span_matrix, target);
        if (!coeffs) {
            // Residual: eliminate the span rows from the transported vector.
            RatVec res = target;
            RatMatrix red = from_rows(rows);
            const RrefResult rr = rref(red);
            for (std::size_t k = 0; k < rr.pivots.size(); ++k) {
                const Rat f = res[rr.pivots[k]];
                for (std::size_t c = 0; c < res.size(); ++c)
                    res[c] -= f * rr.reduced(k, c);
            }
            std::string msg =
                "verify_element: not an automorphism; matrix " +
                std::to_string(i) + " leaves the span, residual (";
            for (std::size_t c = 0; c < res.size(); ++c)
                msg += (c ? " " : "") + rat_to_string(res[c]);
            throw std::invalid_argument(msg + ")");
        }
        for (std::size_t j = 0; j < s.l(); ++j)
            out.induced_span_action(i, j) = (*coeffs)[j];
    }
    return out;
}

/// Dimension of the stabilizer of a section line inside the symmetry group:
/// algebra elements X with X p, X q in span{p, q}, imposed through the
/// vanishing of all 3x3 minors of [p q Xp] and [p q Xq], minus the scalars.
inline long stabilizer_dim(const SectionSpec& s, const LineRep& line) {
    detail::check_section_range(s.N(), s.l(), "stabilizer_dim");
    if (!line_in_section(line, s))
        throw std::invalid_argument("stabilizer_dim: line not in section");
    const std::size_t m = s.N() + 1;
    const std::size_t l = s.l();
    const RatMatrix base = detail::symmetry_algebra_system(s);
    const RatVec& p = line.p().coords();
    const RatVec& q = line.q().coords();
    std::vector<RatVec> rows;
    for (std::size_t r = 0; r < base.rows(); ++r) {
        RatVec row(base.cols());
        for (std::size_t c = 0; c < base.cols(); ++c) row[c] = base(r, c);
        rows.push_back(std::move(row));
    }
    // det[p q Xv]_{i,j,k} = sum over the third column of signed 2x2 minors
    // of [p q]; linear in X.
    auto add_minor_rows = [&](const RatVec& v) {
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j)
                for (std::size_t k = j + 1; k < m; ++k) {
                    const Rat ci = p[j] * q[k] - p[k] * q[j];
                    const Rat cj = p[k] * q[i] - p[i] * q[k];
                    const Rat ck = p[i] * q[j] - p[j] * q[i];
                    RatVec row(base.cols());
                    for (std::size_t c = 0; c < m; ++c) {
                        row[i * m + c] += ci * v[c];
                        row[j * m + c] += cj * v[c];
                        row[k * m + c] += ck * v[c];
                    }
                    if (!is_zero_vec(row)) rows.push_back(std::move(row));
                }
    };
    add_minor_rows(p);
    add_minor_rows(q);
    const RatMatrix sys = from_rows(rows);
    // Scalars stabilize every line, so nullity >= 1 here as well.
    if (modular_rank_lower_bound(sys) + 1 == sys.cols()) return 0;
    const long nullity = static_cast<long>(m * m + l * l) -
                         static_cast<long>(rank(sys));
    if (nullity < 1)
        throw std::logic_error("stabilizer_dim: scalars missing");
    return nullity - 1;
}

namespace detail {

/// Sample a section line through a random point: q is drawn from the common
/// kernel of the rows t(p) A_i, which always contains p itself.
inline std::optional<LineRep> sample_section_line(const SectionSpec& s,
                                                  Rng& rng, long bound) {
    const std::size_t m = s.N() + 1;
    RatVec p(m);
    bool nz = false;
    for (std::size_t i = 0; i < m; ++i) {
        p[i] = rng.uniform(-bound, bound);
        if (p[i] != 0) nz = true;
    }
    if (!nz) return std::nullopt;
    const ProjPoint pp(p);
    const auto kernel = lines_through_point_space(pp, s);
    if (kernel.size() < 2) return std::nullopt;
    RatVec q(m);
    for (const RatVec& k : kernel) {
        const Rat c = rng.uniform(-bound, bound);
        for (std::size_t i = 0; i < m; ++i) q[i] += c * k[i];
    }
    if (is_zero_vec(q) ||
        rank(from_rows({pp.coords(), q})) != 2)
        return std::nullopt;
    LineRep line(pp, ProjPoint(q));
    if (!line_in_section(line, s)) return std::nullopt;
    return line;
}

}  // namespace detail

/// Sample general section lines and report the orbit dimension of the most
/// general one against the section dimension.
inline AutReport quasihomogeneity_report(const SectionSpec& s,
                                         std::uint64_t seed,
                                         int samples = 5) {
    detail::check_section_range(s.N(), s.l(), "quasihomogeneity_report");
    AutReport out;
    out.N = s.N();
    out.l = s.l();
    out.seed = seed;
    out.aut_dim = infinitesimal_aut_dim(s);
    out.section_dim = s.section_dim();
    Rng rng(seed);
    std::optional<long> best;
    int found = 0;
    for (int attempt = 0; attempt < kRetryCap && found < samples; ++attempt) {
        const auto line = detail::sample_section_line(s, rng, 20);
        if (!line) continue;
        ++found;
        const long stab = stabilizer_dim(s, *line);
        if (!best || stab < *best) best = stab;
    }
    if (!best)
        throw std::runtime_error(
            "quasihomogeneity_report: no section line found within the retry "
            "cap");
    out.samples = found;
    out.sample_line_stab_dim = *best;
    out.orbit_dim = out.aut_dim - out.sample_line_stab_dim;
    out.verdict = out.orbit_dim == out.section_dim ? "quasihomogeneous"
                                                   : "not_quasihomogeneous";
    return out;
}

/// The action of t = [[a, b], [c, d]] on the coefficients of binary forms
/// along the rational normal curve (mu^n, mu^(n-1) lambda, ..., lambda^n):
/// row r holds the expansion of (d mu + c lambda)^(n-r) (b mu + a lambda)^r.
inline RatMatrix symmetric_power_rep(const RatMatrix& t, std::size_t size) {
    if (t.rows() != 2 || t.cols() != 2 || det(t) == 0)
        throw std::invalid_argument(
            "symmetric_power_rep: need an invertible 2x2 matrix");
    if (size < 1)
        throw std::invalid_argument("symmetric_power_rep: size must be >= 1");
    const std::size_t n = size - 1;
    const Rat a = t(0, 0), b = t(0, 1), c = t(1, 0), d = t(1, 1);
    RatMatrix out(size, size);
    for (std::size_t r = 0; r <= n; ++r) {
        // Product of (d mu + c lambda)^(n-r) and (b mu + a lambda)^r,
        // coefficients indexed by the power of lambda.
        RatVec acc{Rat(1)};
        auto mul_linear = [&](const Rat& mu_c, const Rat& lam_c) {
            RatVec next(acc.size() + 1);
            for (std::size_t i = 0; i < acc.size(); ++i) {
                next[i] += mu_c * acc[i];
                next[i + 1] += lam_c * acc[i];
            }
            acc = std::move(next);
        };
        for (std::size_t i = 0; i < n - r; ++i) mul_linear(d, c);
        for (std::size_t i = 0; i < r; ++i) mul_linear(b, a);
        for (std::size_t k = 0; k <= n; ++k) out(r, k) = acc[k];
    }
    return out;
}

// ---------------------------------------------------------------------------
// Generator constructors for the recognized normal forms.
// ---------------------------------------------------------------------------

namespace detail {

inline bool matches(const AntisymMatrix& a, const AntisymMatrix& b) {
    return a == b;
}

}  // namespace detail

/// The Moebius map (alpha, beta, gamma, delta) with
/// lambda_{sigma(i)} = (gamma + delta x) / (alpha + beta x) at x = lambda_i
/// for all i, when one exists; the permutation sigma is 0-indexed.
inline std::optional<std::array<Rat, 4>> pencil_permutation_moebius(
    const std::vector<Rat>& lambdas, const std::vector<std::size_t>& sigma,
    Rng& rng) {
    const std::size_t n = lambdas.size();
    if (sigma.size() != n)
        throw std::invalid_argument(
            "pencil_permutation_moebius: permutation length mismatch");
    std::vector<bool> seen(n, false);
    for (std::size_t v : sigma) {
        if (v >= n || seen[v])
            throw std::invalid_argument(
                "pencil_permutation_moebius: not a permutation");
        seen[v] = true;
    }
    RatMatrix sys(n, 4);
    for (std::size_t i = 0; i < n; ++i) {
        sys(i, 0) = lambdas[sigma[i]];
        sys(i, 1) = lambdas[sigma[i]] * lambdas[i];
        sys(i, 2) = -1;
        sys(i, 3) = -lambdas[i];
    }
    const auto kernel = nullspace(sys);
    auto admissible = [&](const std::array<Rat, 4>& v) {
        if (v[0] * v[3] - v[1] * v[2] == 0) return false;
        for (const Rat& lam : lambdas)
            if (v[0] + v[1] * lam == 0) return false;
        return true;
    };
    for (const RatVec& k : kernel) {
        const std::array<Rat, 4> v{k[0], k[1], k[2], k[3]};
        if (admissible(v)) return v;
    }
    for (int attempt = 0; attempt < kRetryCap && !kernel.empty(); ++attempt) {
        std::array<Rat, 4> v{Rat(0), Rat(0), Rat(0), Rat(0)};
        for (const RatVec& k : kernel) {
            const Rat c = rng.uniform(-5, 5);
            for (int j = 0; j < 4; ++j) v[j] += c * k[j];
        }
        if (admissible(v)) return v;
    }
    return std::nullopt;
}

/// Block-permutation element of a pencil in block normal form: P_sigma
/// composed with per-block determinant corrections realizing the Moebius
/// map; empty when no Moebius map matches sigma on the lambdas.
inline std::optional<RatMatrix> pencil_permutation_element(
    const std::vector<Rat>& lambdas, const std::vector<std::size_t>& sigma,
    Rng& rng) {
    const auto mob = pencil_permutation_moebius(lambdas, sigma, rng);
    if (!mob) return std::nullopt;
    const std::size_t n = lambdas.size();
    RatMatrix t(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        // P_sigma block followed by diag(1, alpha + beta lambda_i).
        t(2 * sigma[i], 2 * i) = 1;
        t(2 * sigma[i] + 1, 2 * i + 1) = (*mob)[0] + (*mob)[1] * lambdas[i];
    }
    return t;
}

namespace detail {

inline std::optional<std::vector<Rat>> match_block_pencil(
    const SectionSpec& s) {
    if (s.l() != 2 || (s.N() + 1) % 2 != 0 || s.N() + 1 < 6)
        return std::nullopt;
    const std::size_t n = (s.N() + 1) / 2;
    std::vector<Rat> lambdas;
    for (std::size_t i = 0; i < n; ++i)
        lambdas.push_back(-s.matrices()[1](2 * i, 2 * i + 1));
    const AntisymPencil target = block_pencil(lambdas);
    if (s.matrices()[0] == target.a && s.matrices()[1] == target.b)
        return lambdas;
    return std::nullopt;
}

inline std::vector<std::vector<std::size_t>> candidate_sigmas(std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    if (n == 3) {
        std::vector<std::size_t> p{0, 1, 2};
        do out.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
    } else if (n == 4) {
        out = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    } else {
        std::vector<std::size_t> id(n);
        for (std::size_t i = 0; i < n; ++i) id[i] = i;
        out.push_back(id);
    }
    return out;
}

inline RatMatrix hankel_shear(std::size_t n, const RatVec& s,
                              const Rat& alpha) {
    RatMatrix t(2 * n + 1, 2 * n + 1);
    for (std::size_t i = 0; i < n; ++i) t(i, i) = alpha;
    for (std::size_t j = 0; j <= n; ++j) {
        t(n + j, n + j) = 1;
        for (std::size_t i = 0; i < n; ++i) t(n + j, i) = s[i + j];
    }
    return t;
}

}  // namespace detail

/// Explicit generators of the symmetry group for sections in one of the
/// recognized normal forms; every returned element is verified.
inline std::vector<GroupElement> build_generators(const SectionSpec& s,
                                                  Rng& rng) {
    std::vector<GroupElement> out;
    const std::size_t m = s.N() + 1;

    if (const auto lambdas = detail::match_block_pencil(s)) {
        const std::size_t n = m / 2;
        // Per-block unimodular twists and one full random block element.
        RatMatrix all = RatMatrix::identity(m);
        for (std::size_t i = 0; i < n; ++i) {
            const RatMatrix t2 = random_sl2(rng, 3);
            RatMatrix t = RatMatrix::identity(m);
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c) {
                    t(2 * i + r, 2 * i + c) = t2(r, c);
                    all(2 * i + r, 2 * i + c) = t2(r, c);
                }
            out.push_back(verify_element(t, s));
        }
        out.push_back(verify_element(all, s));
        for (const auto& sigma : detail::candidate_sigmas(n)) {
            const auto t = pencil_permutation_element(*lambdas, sigma, rng);
            if (t) out.push_back(verify_element(*t, s));
        }
        return out;
    }

    if (s.l() == 2 && m % 2 == 1 && m >= 5) {
        const std::size_t n = (m - 1) / 2;
        const AntisymPencil target = even_size_pencil(n);
        if (s.matrices()[0] == target.a && s.matrices()[1] == target.b) {
            // Scaling, the Hankel shears, and the reparametrization family.
            out.push_back(verify_element(
                detail::hankel_shear(n, RatVec(2 * n), Rat(2)), s));
            for (std::size_t k = 0; k < 2 * n; ++k) {
                RatVec sv(2 * n);
                sv[k] = 1;
                out.push_back(
                    verify_element(detail::hankel_shear(n, sv, Rat(1)), s));
            }
            for (int rep = 0; rep < 2; ++rep) {
                const RatMatrix t2 = random_invertible(rng, 2, 3);
                const RatMatrix tn = symmetric_power_rep(t2, n);
                const RatMatrix tn1 = symmetric_power_rep(t2, n + 1);
                const RatMatrix tni = inverse(tn.transpose()).value();
                RatMatrix t(m, m);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) t(i, j) = tni(i, j);
                for (std::size_t i = 0; i <= n; ++i)
                    for (std::size_t j = 0; j <= n; ++j)
                        t(n + i, n + j) = tn1(i, j);
                out.push_back(verify_element(t, s));
            }
            return out;
        }
    }

    if (s.l() == 1 && m % 2 == 0 && m >= 6 &&
        s.matrices()[0] == standard_symplectic_form(m / 2)) {
        for (int rep = 0; rep < 3; ++rep)
            out.push_back(
                verify_element(random_symplectic(rng, m / 2, 2), s));
        return out;
    }

    if (s.l() == 1 && m % 2 == 1 && m >= 5 &&
        s.matrices()[0] == padded_symplectic((m - 1) / 2)) {
        const std::size_t n = (m - 1) / 2;
        RatMatrix sp = RatMatrix::identity(m);
        const RatMatrix sbar = random_symplectic(rng, n, 2);
        for (std::size_t i = 0; i < 2 * n; ++i)
            for (std::size_t j = 0; j < 2 * n; ++j) sp(i, j) = sbar(i, j);
        out.push_back(verify_element(sp, s));
        RatMatrix tr = RatMatrix::identity(m);
        for (std::size_t j = 0; j < 2 * n; ++j)
            tr(2 * n, j) = rng.uniform(-5, 5);
        out.push_back(verify_element(tr, s));
        RatMatrix sc = RatMatrix::identity(m);
        sc(2 * n, 2 * n) = 3;
        out.push_back(verify_element(sc, s));
        return out;
    }

    if (s.l() == 3 && m == 6) {
        const Rat alpha = -s.matrices()[2](0, 2);
        const Rat beta = -s.matrices()[2](2, 4);
        const Rat gamma = -s.matrices()[2](0, 4);
        const Rat delta = -s.matrices()[2](1, 4);
        const AntisymNet target =
            standard_net_g15(alpha, beta, gamma, delta);
        if (delta != 0 && s.matrices()[0] == target.a &&
            s.matrices()[1] == target.b && s.matrices()[2] == target.c) {
            for (const Rat& w : {Rat(1), Rat(1, 2), Rat(rng.uniform(2, 9))}) {
                const RatMatrix t2 = g15_family_point(gamma, delta, w);
                const RatMatrix tit = inverse(t2.transpose()).value();
                RatMatrix t(6, 6);
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j) {
                        t(i, j) = t2(i, j);
                        t(2 + i, 2 + j) = tit(i, j);
                        t(4 + i, 4 + j) = t2(i, j);
                    }
                out.push_back(verify_element(t, s));
            }
            return out;
        }
    }

    throw std::invalid_argument(
        "build_generators: section not in a recognized normal form");
}

/// Product in the symmetry group; the induced span actions compose
/// accordingly (re-verified from scratch).
inline GroupElement group_product(const GroupElement& a, const GroupElement& b,
                                  const SectionSpec& s) {
    return verify_element(a.T * b.T, s);
}

inline GroupElement group_inverse(const GroupElement& a,
                                  const SectionSpec& s) {
    const auto inv = inverse(a.T);
    if (!inv) throw std::invalid_argument("group_inverse: singular element");
    return verify_element(*inv, s);
}

/// Rigidity of the pencil normal form of odd size 2n+1: a transformation of
/// the center-fixing shape [[alpha E_n, 0], [S Hankel, E_{n+1}]] that acts
/// as the identity on the two line-pencils through the endpoints of the
/// center curve is a scalar. Checked by solving the linear system for the
/// shape parameters together with one proportionality scalar per pencil.
inline bool even_pencil_rigidity_check(std::size_t n) {
    if (n < 2)
        throw std::invalid_argument(
            "even_pencil_rigidity_check: need n >= 2");
    const std::size_t m = 2 * n + 1;
    // Unknowns: a (top-left scale), b (bottom-right scale), s_0..s_{2n-1}
    // (Hankel parameters), tau_1, tau_2 (pencil proportionality factors).
    const std::size_t vars = 2 + 2 * n + 2;
    std::vector<RatVec> rows;
    // For center index cen (n or 2n) and hyperplane-basis vector x, require
    // (T x)_r = tau * x_r for every coordinate r != cen.
    auto add_pencil = [&](std::size_t cen, std::size_t tau_var,
                          const std::vector<std::size_t>& basis) {
        for (std::size_t bi : basis) {
            for (std::size_t r = 0; r < m; ++r) {
                if (r == cen) continue;
                RatVec row(vars);
                // (T e_bi)_r in the shape parameters.
                if (bi < n) {
                    if (r == bi) row[0] += 1;  // alpha entry
                    if (r >= n) row[2 + (bi + (r - n))] += 1;  // s_{bi+(r-n)}
                } else {
                    if (r == bi) row[1] += 1;
                }
                if (r == bi) row[vars - 2 + tau_var] -= 1;
                if (!is_zero_vec(row)) rows.push_back(std::move(row));
            }
        }
    };
    std::vector<std::size_t> basis1, basis2;
    for (std::size_t i = 0; i < m; ++i) {
        if (i != 0 && i != n) basis1.push_back(i);
        if (i != n - 1 && i != 2 * n) basis2.push_back(i);
    }
    add_pencil(n, 0, basis1);
    add_pencil(2 * n, 1, basis2);
    const auto kernel = nullspace(from_rows(rows));
    if (kernel.size() != 1) return false;
    const RatVec& k = kernel[0];
    if (k[0] != k[1]) return false;
    for (std::size_t i = 0; i < 2 * n; ++i)
        if (k[2 + i] != 0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Orbit census for the three section kinds of G(1,4).
// ---------------------------------------------------------------------------

/// Classify section lines of G(1,4) cap H^l (l = 1, 2, 3 in normal form) by
/// the geometric invariants that separate the symmetry orbits.
inline std::vector<std::string> orbit_census_g14_h1(
    const SectionSpec& s, const std::vector<LineRep>& lines) {
    if (s.N() != 4)
        throw std::invalid_argument("orbit_census: ambient must be P4");
    std::vector<std::string> out;

    if (s.l() == 1) {
        const auto kernel = nullspace(s.matrices()[0].full());
        if (kernel.size() != 1)
            throw std::invalid_argument(
                "orbit_census: hyperplane form must have corank 1");
        const ProjPoint center{kernel[0]};
        for (const LineRep& line : lines)
            out.push_back(line.contains(center) ? "through-center"
                                                : "off-center");
        return out;
    }

    if (s.l() == 2) {
        const AntisymPencil target = even_size_pencil(2);
        if (s.matrices()[0] != target.a || s.matrices()[1] != target.b)
            throw std::invalid_argument(
                "orbit_census: pencil not in normal form");
        // Center conic: (x2, x3, x4) = (mu^2, mu lambda, lambda^2) inside
        // the plane {x0 = x1 = 0}; the conic is x2 x4 = x3^2.
        for (const LineRep& line : lines) {
            const RatVec& p = line.p().coords();
            const RatVec& q = line.q().coords();
            const Rat d = p[0] * q[1] - p[1] * q[0];
            if (d != 0) {
                out.push_back("disjoint");
                continue;
            }
            const bool p_in = p[0] == 0 && p[1] == 0;
            const bool q_in = q[0] == 0 && q[1] == 0;
            if (p_in && q_in) {
                // Line inside the center plane: tangent or secant by the
                // discriminant of the restricted conic.
                const Rat a2 = p[2], a3 = p[3], a4 = p[4];
                const Rat b2 = q[2], b3 = q[3], b4 = q[4];
                // (s a2 + t b2)(s a4 + t b4) - (s a3 + t b3)^2
                const Rat c0 = a2 * a4 - a3 * a3;
                const Rat c1 = a2 * b4 + b2 * a4 - 2 * a3 * b3;
                const Rat c2 = b2 * b4 - b3 * b3;
                out.push_back(c1 * c1 - 4 * c0 * c2 == 0 ? "tangent"
                                                         : "secant");
                continue;
            }
            // Unique intersection with the plane.
            RatVec z(5);
            Rat sc, tc;
            if (p_in) {
                sc = 1;
                tc = 0;
            } else if (q_in) {
                sc = 0;
                tc = 1;
            } else if (p[0] != 0 || q[0] != 0) {
                sc = q[0];
                tc = -p[0];
            } else {
                sc = q[1];
                tc = -p[1];
            }
            for (std::size_t i = 0; i < 5; ++i) z[i] = sc * p[i] + tc * q[i];
            if (z[0] != 0 || z[1] != 0 || is_zero_vec(z))
                throw std::logic_error("orbit_census: intersection");
            if (z[2] * z[4] != z[3] * z[3])
                throw std::invalid_argument(
                    "orbit_census: line meets the center plane away from the "
                    "conic (not a section line)");
            out.push_back("through-conic");
        }
        return out;
    }

    if (s.l() == 3) {
        const AntisymNet net(s.matrices()[0], s.matrices()[1],
                             s.matrices()[2]);
        for (const LineRep& line : lines) {
            const TrisecantReport rep = trisecant_report(net, line);
            if (!rep.in_system)
                throw std::invalid_argument(
                    "orbit_census: line is not a trisecant of the center "
                    "surface");
            out.push_back(rep.repeated_degree == 0   ? "three-points"
                          : rep.repeated_degree == 1 ? "tangent-plus-one"
                                                     : "triple-point");
        }
        return out;
    }

    throw std::invalid_argument("orbit_census: unrecognized section kind");
}

}  // namespace linesect

#endif
