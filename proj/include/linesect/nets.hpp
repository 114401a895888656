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

#ifndef LINESECT_NETS_HPP
#define LINESECT_NETS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "linesect/antisym.hpp"
#include "linesect/diophantine.hpp"
#include "linesect/generate.hpp"
#include "linesect/grassmann.hpp"
#include "linesect/matrix.hpp"
#include "linesect/poly.hpp"

namespace linesect {

/// Pf(lambda A + mu B + nu C): the ternary form cutting out the degenerate
/// members of a net of even size.
inline HomogPoly dual_cubic(const AntisymNet& net) {
    if (net.size() % 2 != 0)
        throw std::invalid_argument("dual_cubic: size must be even");
    return pfaffian_full(net_poly_matrix(net));
}

/// Exact rational square root, if one exists.
inline std::optional<Rat> rational_sqrt(const Rat& x) {
    if (x < 0) return std::nullopt;
    if (x == 0) return Rat(0);
    mpz_class num = x.get_num(), den = x.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0 ||
        mpz_perfect_square_p(den.get_mpz_t()) == 0)
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rat(rn) / Rat(rd);
}

// ---------------------------------------------------------------------------
// Common zeros of ternary forms, decided exactly.
// ---------------------------------------------------------------------------

namespace detail {

/// Thrown inside a residue-ring computation when an element turns out to be
/// a zero divisor; the caller splits the modulus and recurses (dynamic
/// evaluation).
struct FiberSplit {
    UniPoly factor;  // proper monic divisor of the modulus
};

/// Residue of p modulo the monic modulus h.
inline UniPoly res_reduce(const UniPoly& p, const UniPoly& h) {
    return uni_divmod(p, h).second;
}

/// Zero test in Q[x]/(h) for a reduced element; throws FiberSplit when the
/// answer differs between the roots of h.
inline bool res_is_zero(const UniPoly& a, const UniPoly& h) {
    if (a.empty()) return true;
    UniPoly g = uni_gcd(a, h);
    if (uni_deg(g) == 0) return false;  // invertible, nonzero at every root
    throw FiberSplit{std::move(g)};  // zero exactly at the roots of g
}

/// Inverse in Q[x]/(h); throws FiberSplit on a zero divisor.
inline UniPoly res_inverse(const UniPoly& a, const UniPoly& h) {
    auto [g, s] = uni_half_ext_gcd(a, h);
    if (uni_deg(g) != 0) throw FiberSplit{std::move(g)};
    const Rat lead = g.back();
    for (Rat& c : s) c /= lead;
    return res_reduce(s, h);
}

/// Polynomial in one variable with coefficients in Q[x]/(h).
using ResPoly = std::vector<UniPoly>;

inline void res_poly_trim(ResPoly& p, const UniPoly& h) {
    while (!p.empty() && res_is_zero(p.back(), h)) p.pop_back();
}

/// Monic Euclidean gcd of two nonzero polynomials over Q[x]/(h).
inline ResPoly res_poly_gcd(ResPoly a, ResPoly b, const UniPoly& h) {
    while (!b.empty()) {
        const UniPoly lead_inv = res_inverse(b.back(), h);
        // a mod b by repeated leading-term elimination.
        while (a.size() >= b.size()) {
            const UniPoly f =
                res_reduce(uni_mul(a.back(), lead_inv), h);
            const std::size_t shift = a.size() - b.size();
            for (std::size_t k = 0; k < b.size(); ++k)
                a[shift + k] = uni_sub(
                    a[shift + k], res_reduce(uni_mul(f, b[k]), h));
            a.pop_back();  // leading term cancelled exactly
            while (!a.empty() && a.back().empty()) a.pop_back();
        }
        res_poly_trim(a, h);
        std::swap(a, b);
    }
    return a;
}

/// Decide whether some root theta of the squarefree modulus h admits nu with
/// all forms vanishing at (theta : 1 : nu) -- or the whole fiber vanishing.
inline bool fiber_common_root(const UniPoly& h,
                              const std::vector<HomogPoly>& polys) {
    if (uni_deg(h) <= 0) return false;
    try {
        std::vector<ResPoly> specs;
        for (const HomogPoly& p : polys) {
            ResPoly spec(static_cast<std::size_t>(p.degree()) + 1);
            for (const auto& [e, c] : p.terms()) {
                UniPoly& slot = spec[e[2]];
                if (slot.size() <= static_cast<std::size_t>(e[0]))
                    slot.resize(static_cast<std::size_t>(e[0]) + 1, Rat(0));
                slot[e[0]] += c;  // mu evaluates to 1 on the fiber
            }
            for (UniPoly& slot : spec) slot = res_reduce(slot, h);
            res_poly_trim(spec, h);
            if (spec.empty()) continue;  // vanishes on the whole fiber
            if (spec.size() == 1) return false;  // invertibly nonzero there
            specs.push_back(std::move(spec));
        }
        if (specs.empty()) return true;  // every form vanishes identically
        ResPoly d = specs[0];
        for (std::size_t i = 1; i < specs.size(); ++i) {
            d = res_poly_gcd(std::move(d), specs[i], h);
            if (d.size() == 1) return false;  // unit gcd: no shared root
        }
        return d.size() >= 2;
    } catch (const FiberSplit& split) {
        const UniPoly co = uni_monic(uni_divmod(h, split.factor).first);
        return fiber_common_root(split.factor, polys) ||
               fiber_common_root(co, polys);
    }
}

}  // namespace detail

/// Decide, exactly, whether a family of ternary forms has a common
/// projective zero over the algebraic closure. Candidate (lambda : mu)
/// fibers come from forms free of the last variable plus pairwise resultants
/// in it; rational candidates are confirmed by univariate gcds and
/// irrational ones by gcds over the number rings Q[x]/(h).
inline bool has_common_zero(std::vector<HomogPoly> polys) {
    std::erase_if(polys, [](const HomogPoly& p) { return p.is_zero(); });
    if (polys.empty()) return true;  // every form vanishes everywhere
    for (const HomogPoly& p : polys)
        if (p.degree() == 0) return false;  // nonzero constant
    if (polys.size() == 1) return true;  // a nonconstant form has zeros
    // The point (0:0:1) is invisible to elimination in variable 2.
    bool special = true;
    for (const HomogPoly& p : polys)
        if (p.eval({Rat(0), Rat(0), Rat(1)}) != 0) special = false;
    if (special) return true;

    // Binary form whose roots contain every candidate fiber.
    HomogPoly g;
    bool have = false;
    auto contribute = [&](const HomogPoly& r) {
        g = have ? binary_gcd(g, r) : r;
        have = true;
    };
    std::vector<const HomogPoly*> with_nu;
    for (const HomogPoly& p : polys) {
        bool nu_free = true;
        for (const auto& [e, c] : p.terms())
            if (e[2] != 0) nu_free = false;
        if (nu_free)
            contribute(p);
        else
            with_nu.push_back(&p);
    }
    for (std::size_t i = 0; i < with_nu.size() && (!have || g.degree() > 0);
         ++i)
        for (std::size_t j = i + 1; j < with_nu.size(); ++j) {
            const HomogPoly r = resultant(*with_nu[i], *with_nu[j], 2);
            if (r.is_zero()) continue;  // shared factor in this pair
            contribute(r);
            if (g.degree() == 0) break;
        }
    if (!have)
        throw std::runtime_error(
            "has_common_zero: the forms share a common factor; the zero "
            "locus is positive-dimensional and unsupported here");
    if (g.degree() == 0) return false;

    const BinaryRootReport roots = binary_rational_roots(g);
    for (const auto& [lam, mu] : roots.roots) {
        // Confirm: all forms share a root in the last variable there.
        UniPoly common;
        bool first = true, dead = false;
        for (const HomogPoly& p : polys) {
            UniPoly spec(static_cast<std::size_t>(p.degree()) + 1, Rat(0));
            for (const auto& [e, c] : p.terms()) {
                Rat v = c;
                for (int t = 0; t < e[0]; ++t) v *= lam;
                for (int t = 0; t < e[1]; ++t) v *= mu;
                spec[e[2]] += v;
            }
            uni_trim(spec);
            if (spec.empty()) continue;  // vanishes identically on the fiber
            common = first ? spec : uni_gcd(common, spec);
            first = false;
            if (uni_deg(common) == 0) {
                dead = true;
                break;
            }
        }
        if (!dead) return true;
    }
    if (roots.leftover_degree == 0) return false;

    // Irrational candidates: the leftover squarefree factor of g, examined
    // over its own number rings. The candidate (1 : 0) is always rational,
    // so the leftover roots all have mu != 0 and scale to (theta : 1).
    UniPoly gx;  // g(x, 1)
    {
        const RatVec c = binary_coeffs(g);
        gx.assign(c.begin(), c.end());
        uni_trim(gx);
    }
    for (std::size_t i = 0; i < roots.roots.size(); ++i) {
        const auto& [lam, mu] = roots.roots[i];
        if (mu == 0) continue;  // root at infinity: does not divide g(x, 1)
        const UniPoly lin{-lam / mu, Rat(1)};
        for (int k = 0; k < roots.multiplicities[i]; ++k)
            gx = uni_divmod(gx, lin).first;
    }
    const UniPoly h =
        uni_divmod(gx, uni_gcd(gx, uni_derivative(gx))).first;
    return detail::fiber_common_root(uni_monic(h), polys);
}

/// A plane cubic is smooth iff its partial derivatives have no common zero.
inline bool cubic_smooth(const HomogPoly& f) {
    if (f.is_zero() || f.degree() != 3)
        throw std::invalid_argument("cubic_smooth: need a nonzero cubic");
    return !has_common_zero({f.derivative(0), f.derivative(1),
                             f.derivative(2)});
}

// ---------------------------------------------------------------------------
// Normal form for nets of size 6 with smooth dual cubic.
// ---------------------------------------------------------------------------

struct NetNormalFormG15 {
    Rat alpha, beta, gamma, delta;
    RatMatrix T;            // 6x6: congruence by inverse(T) maps the
                            // recombined net to standard_net_g15(...)
    RatMatrix span_change;  // 3x3: recombined_i = sum_j span_change(i,j) m_j
};

namespace detail {

/// Kernel plane of a corank-2 member, normalized so that the given form
/// pairs the two basis vectors to -1.
inline std::pair<RatVec, RatVec> kernel_plane_normalized(
    const AntisymMatrix& member, const AntisymMatrix& form,
    const char* what) {
    const auto ker = nullspace(member.full());
    if (ker.size() != 2)
        throw std::invalid_argument(std::string(what) +
                                    ": singular member has corank != 2");
    const Rat s = bilinear(ker[0], form.full(), ker[1]);
    if (s == 0)
        throw std::invalid_argument(std::string(what) +
                                    ": degenerate pairing on a kernel plane");
    return {ker[0], scale_vec(-1 / s, ker[1])};
}

}  // namespace detail

/// Bring a net of size 6 whose members span a generic plane of the dual
/// space into the four-parameter normal form standard_net_g15(alpha, beta,
/// gamma, delta). Requires the three degenerate members of the first two
/// generators' pencil to be rational, and three rational square roots along
/// the way; failures throw with the offending discriminant.
inline NetNormalFormG15 net_normal_form_g15(const AntisymNet& net) {
    if (net.size() != 6)
        throw std::invalid_argument("net_normal_form_g15: size must be 6");
    // Step 1: the pencil of the first two generators has three degenerate
    // members; move them to the positions of -B, A - B, and A.
    const AntisymPencil pencil(net.a, net.b);
    const HomogPoly pf = pfaffian_full(pencil_poly_matrix(pencil));
    if (pf.is_zero() || pf.degree() != 3)
        throw std::invalid_argument(
            "net_normal_form_g15: generator pencil is degenerate");
    const BinaryRootReport roots = binary_rational_roots(pf);
    if (roots.leftover_degree > 0)
        throw std::invalid_argument(
            "net_normal_form_g15: irrational degenerate member (remaining "
            "factor degree " +
            std::to_string(roots.leftover_degree) + ")");
    for (int m : roots.multiplicities)
        if (m != 1)
            throw std::invalid_argument(
                "net_normal_form_g15: repeated degenerate member in the "
                "generator pencil");
    std::vector<AntisymMatrix> members;
    std::vector<RatVec> member_span;  // coefficients over (m0, m1)
    for (const auto& [lam, mu] : roots.roots) {
        members.push_back(pencil_member(pencil, lam, mu));
        member_span.push_back({lam, -mu});
    }
    // members[1] = u members[0] + v members[2].
    std::vector<RatVec> cols{SectionSpec::upper_vector(members[0]),
                             SectionSpec::upper_vector(members[2])};
    const auto uv = solve(from_rows(cols).transpose(),
                          SectionSpec::upper_vector(members[1]));
    if (!uv || (*uv)[0] == 0 || (*uv)[1] == 0)
        throw std::logic_error("net_normal_form_g15: member decomposition");
    const Rat u = (*uv)[0], v = (*uv)[1];
    const AntisymMatrix a2 = members[2] * v;        // target A
    const AntisymMatrix b2 = members[0] * (-u);     // target B
    RatMatrix span = RatMatrix::identity(3);
    span(0, 0) = v * member_span[2][0];
    span(0, 1) = v * member_span[2][1];
    span(0, 2) = 0;
    span(1, 0) = -u * member_span[0][0];
    span(1, 1) = -u * member_span[0][1];
    span(1, 2) = 0;

    // Step 2: assemble the block basis from the three kernel planes.
    const auto [e0, e1] =
        detail::kernel_plane_normalized(b2, a2, "net_normal_form_g15");
    const auto [e2, e3] = detail::kernel_plane_normalized(
        a2 + (-b2), a2, "net_normal_form_g15");
    const auto [e4, e5] =
        detail::kernel_plane_normalized(a2, b2, "net_normal_form_g15");
    RatMatrix basis(6, 6);
    const RatVec* cols6[6] = {&e0, &e1, &e2, &e3, &e4, &e5};
    for (std::size_t j = 0; j < 6; ++j)
        for (std::size_t i = 0; i < 6; ++i) basis(i, j) = (*cols6[j])[i];
    if (det(basis) == 0)
        throw std::logic_error("net_normal_form_g15: kernel basis singular");
    const AntisymMatrix a3 = a2.congruence(basis);
    const AntisymMatrix b3 = b2.congruence(basis);
    AntisymMatrix c3 = net.c.congruence(basis);

    // Step 3: recenter the third generator so its diagonal blocks become
    // (0, J, 0).
    const Rat cc1 = -c3(0, 1), cc2 = -c3(2, 3), cc3 = -c3(4, 5);
    const Rat denom = cc2 - cc1 - cc3;
    if (denom == 0)
        throw std::invalid_argument(
            "net_normal_form_g15: recentering denominator vanishes");
    c3 = (c3 + (-(a3 * cc1)) + (-(b3 * cc3))) * (1 / denom);
    for (std::size_t j = 0; j < 3; ++j)
        span(2, j) = (span(2, j) - cc1 * span(0, j) - cc3 * span(1, j)) /
                     denom;

    // Step 4: normalize the two off-diagonal coupling blocks to scalar
    // matrices alpha E and beta E.
    auto block = [](const AntisymMatrix& m, std::size_t r, std::size_t c) {
        RatMatrix b(2, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) b(i, j) = m(r + i, c + j);
        return b;
    };
    const RatMatrix c21 = block(c3, 2, 0);
    const RatMatrix c32 = block(c3, 4, 2);
    if (det(c21) == 0 || det(c32) == 0)
        throw std::invalid_argument(
            "net_normal_form_g15: generality violated (singular coupling "
            "block)");
    const auto alpha = rational_sqrt(det(c21));
    if (!alpha)
        throw std::invalid_argument(
            "net_normal_form_g15: irrational square root, discriminant " +
            rat_to_string(det(c21)));
    const auto beta = rational_sqrt(det(c32));
    if (!beta)
        throw std::invalid_argument(
            "net_normal_form_g15: irrational square root, discriminant " +
            rat_to_string(det(c32)));
    RatMatrix u4 = RatMatrix(6, 6);
    const RatMatrix u1 = inverse(c21).value() * *alpha;
    const RatMatrix u3 = inverse(c32.transpose()).value() * *beta;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            u4(i, j) = u1(i, j);
            u4(2 + i, 2 + j) = (i == j) ? Rat(1) : Rat(0);
            u4(4 + i, 4 + j) = u3(i, j);
        }
    AntisymMatrix c4 = c3.congruence(u4);

    // Step 5: bring the remaining corner block to [[gamma, delta],
    // [0, gamma]] by a unimodular 2x2 move applied as diag(t, t(inv t), t).
    // The first column v of t must satisfy t(v) cbar v = gamma, a conic
    // condition solved exactly; the second column then follows by linear
    // algebra, and the (1,1) entry is automatically gamma again because the
    // move has determinant one.
    const RatMatrix cbar = block(c4, 4, 0);
    const Rat dbar = det(cbar);
    if (dbar == 0)
        throw std::invalid_argument(
            "net_normal_form_g15: generality violated (corner block "
            "singular)");
    const auto gamma = rational_sqrt(dbar);
    if (!gamma)
        throw std::invalid_argument(
            "net_normal_form_g15: irrational square root, discriminant " +
            rat_to_string(dbar));
    RatMatrix t = RatMatrix::identity(2);
    if (cbar(1, 0) != 0 || cbar(0, 0) != cbar(1, 1)) {
        RatMatrix sym(2, 2);
        sym(0, 0) = cbar(0, 0);
        sym(1, 1) = cbar(1, 1);
        sym(0, 1) = sym(1, 0) = (cbar(0, 1) + cbar(1, 0)) / 2;
        // Either square root of the discriminant may be the one the corner
        // block represents over the rationals.
        std::optional<RatVec> v = represent_value(sym, *gamma);
        Rat gamma_val = *gamma;
        if (!v) {
            v = represent_value(sym, -*gamma);
            gamma_val = -*gamma;
        }
        if (!v)
            throw std::invalid_argument(
                "net_normal_form_g15: irrational square root, discriminant " +
                rat_to_string(dbar) + " (corner block represents neither "
                "root rationally)");
        // Second column w: t(w) cbar v = 0 and det [v w] = 1. The system
        // matrix has determinant t(v) cbar v = gamma != 0.
        const RatVec cv = cbar.apply(*v);
        const auto w = solve(
            from_rows({RatVec{cv[0], cv[1]},
                       RatVec{-(*v)[1], (*v)[0]}}),
            RatVec{Rat(0), Rat(1)});
        if (!w)
            throw std::logic_error("net_normal_form_g15: column completion");
        t(0, 0) = (*v)[0];
        t(1, 0) = (*v)[1];
        t(0, 1) = (*w)[0];
        t(1, 1) = (*w)[1];
    }
    const RatMatrix tit = inverse(t.transpose()).value();
    RatMatrix u5(6, 6);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            u5(i, j) = t(i, j);
            u5(2 + i, 2 + j) = tit(i, j);
            u5(4 + i, 4 + j) = t(i, j);
        }
    const RatMatrix total = basis * u4 * u5;

    // Read off the last two parameters and verify the whole reduction.
    AntisymMatrix a_r(6), b_r(6), c_r(6);
    const AntisymMatrix* orig[3] = {&net.a, &net.b, &net.c};
    AntisymMatrix* rec[3] = {&a_r, &b_r, &c_r};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            *rec[i] = *rec[i] + *orig[j] * span(i, j);
    const AntisymMatrix a_f = a_r.congruence(total);
    const AntisymMatrix b_f = b_r.congruence(total);
    const AntisymMatrix c_f = c_r.congruence(total);
    NetNormalFormG15 out;
    out.alpha = *alpha;
    out.beta = *beta;
    out.gamma = c_f(4, 0);
    out.delta = c_f(4, 1);
    out.span_change = span;
    const AntisymNet target =
        standard_net_g15(out.alpha, out.beta, out.gamma, out.delta);
    if (a_f != target.a || b_f != target.b || c_f != target.c)
        throw std::logic_error("net_normal_form_g15: verification failed");
    const auto inv = inverse(total);
    if (!inv) throw std::logic_error("net_normal_form_g15: basis singular");
    out.T = *inv;
    return out;
}

/// The dual cubic of the normal form in closed form:
/// l^2 m + m^2 l + l m n - (g^2 + b^2) l n^2 - (a^2 + g^2) m n^2
/// + (a b d - g^2) n^3.
inline HomogPoly standard_net_g15_cubic(const Rat& alpha, const Rat& beta,
                                        const Rat& gamma, const Rat& delta) {
    const HomogPoly l = HomogPoly::variable(0);
    const HomogPoly m = HomogPoly::variable(1);
    const HomogPoly n = HomogPoly::variable(2);
    return l * l * m + m * m * l + l * m * n +
           l * n * n * (-(gamma * gamma + beta * beta)) +
           m * n * n * (-(alpha * alpha + gamma * gamma)) +
           n * n * n * (alpha * beta * delta - gamma * gamma);
}

/// The 2x2 block of the one-parameter symmetry family of the size-6 normal
/// form: t = [[a, (gamma/delta)(a-d)], [(gamma/delta)(d-a), d]], subject to
/// det t = 1. Throws if delta is zero or the determinant constraint fails.
inline RatMatrix g15_family_element(const Rat& gamma, const Rat& delta,
                                    const Rat& a, const Rat& d) {
    if (delta == 0)
        throw std::invalid_argument("g15_family_element: delta must be "
                                    "nonzero");
    const Rat e = gamma / delta;
    RatMatrix t(2, 2);
    t(0, 0) = a;
    t(0, 1) = e * (a - d);
    t(1, 0) = e * (d - a);
    t(1, 1) = d;
    if (det(t) != 1)
        throw std::invalid_argument(
            "g15_family_element: determinant constraint violated");
    return t;
}

/// A rational point of the family: det t = 1 becomes the conic
/// s^2 + (4 e^2 - 1) u^2 = 4 in s = a + d, u = a - d with e = gamma/delta,
/// rationally parametrized by w through (s, u) = (2, 0).
inline RatMatrix g15_family_point(const Rat& gamma, const Rat& delta,
                                  const Rat& w) {
    if (delta == 0)
        throw std::invalid_argument("g15_family_point: delta must be "
                                    "nonzero");
    const Rat e = gamma / delta;
    const Rat k = 4 * e * e - 1;
    const Rat den = 1 + k * w * w;
    if (den == 0)
        throw std::invalid_argument("g15_family_point: parameter on the "
                                    "excluded chord");
    const Rat s = 2 * (1 - k * w * w) / den;
    const Rat u = 4 * w / den;
    return g15_family_element(gamma, delta, (s + u) / 2, (s - u) / 2);
}

/// Verify that T = diag(t, t(inv t), t) maps each generator of the
/// standard size-6 net with the given parameters back into the span of the
/// three generators. True exactly for the one-parameter family above (and
/// its sign twin); false for generic unimodular t.
inline bool g15_identity_component_check(const Rat& alpha, const Rat& beta,
                                         const Rat& gamma, const Rat& delta,
                                         const RatMatrix& t) {
    if (delta == 0)
        throw std::invalid_argument(
            "g15_identity_component_check: delta must be nonzero");
    if (t.rows() != 2 || t.cols() != 2 || det(t) != 1)
        throw std::invalid_argument(
            "g15_identity_component_check: need a unimodular 2x2 block");
    const AntisymNet net = standard_net_g15(alpha, beta, gamma, delta);
    const RatMatrix tit = inverse(t.transpose()).value();
    RatMatrix big(6, 6);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            big(i, j) = t(i, j);
            big(2 + i, 2 + j) = tit(i, j);
            big(4 + i, 4 + j) = t(i, j);
        }
    const auto binv = inverse(big);
    if (!binv)
        throw std::invalid_argument(
            "g15_identity_component_check: singular block");
    std::vector<RatVec> cols{SectionSpec::upper_vector(net.a),
                             SectionSpec::upper_vector(net.b),
                             SectionSpec::upper_vector(net.c)};
    const RatMatrix span_matrix = from_rows(cols).transpose();
    for (const AntisymMatrix* m : {&net.a, &net.b, &net.c}) {
        const AntisymMatrix moved = m->congruence(*binv);
        if (!solve(span_matrix, SectionSpec::upper_vector(moved)))
            return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Nets of size 5: the degree-2 center map and apolarity.
// ---------------------------------------------------------------------------

struct CenterMap {
    HomogPolyVec quadrics;  // 5 components, degree 2 in (lambda, mu, nu)
};

/// The center of each member of a size-5 net, as a quadratic map from the
/// net plane to P^4. Certifies that the five quadrics are independent and
/// that every member has corank exactly 1.
inline CenterMap center_map(const AntisymNet& net) {
    if (net.size() != 5)
        throw std::invalid_argument("center_map: size must be 5");
    CenterMap out;
    out.quadrics = poly_pfaffian_minors(net_poly_matrix(net));
    if (!poly_matrix_kernel_check(net_poly_matrix(net), out.quadrics))
        throw std::logic_error("center_map: kernel identity failed");
    RatMatrix coeffs(5, 6);
    const std::array<std::array<int, 3>, 6> mon2{
        {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}}};
    for (std::size_t k = 0; k < 5; ++k)
        for (std::size_t m = 0; m < 6; ++m)
            coeffs(k, m) = out.quadrics[k].coeff(
                {mon2[m][0], mon2[m][1], mon2[m][2]});
    if (rank(coeffs) != 5)
        throw std::invalid_argument(
            "center_map: quadrics are dependent (degenerate net)");
    if (has_common_zero(out.quadrics))
        throw std::invalid_argument(
            "center_map: a member of corank >= 3 exists");
    return out;
}

struct ApolarityData {
    RatMatrix p_matrix;    // symmetric 3x3: the conic dual to the center map
    RatMatrix c_p_matrix;  // its adjugate: the apolar conic of the net
};

/// The one-dimensional annihilator of the center quadrics under the trace
/// pairing, and its dual conic. Requires the annihilator to be a smooth
/// conic.
inline ApolarityData apolarity_data(const CenterMap& cm) {
    RatMatrix rows(cm.quadrics.size(), 6);
    for (std::size_t k = 0; k < cm.quadrics.size(); ++k) {
        const HomogPoly& q = cm.quadrics[k];
        rows(k, 0) = q.coeff({2, 0, 0});
        rows(k, 1) = q.coeff({0, 2, 0});
        rows(k, 2) = q.coeff({0, 0, 2});
        rows(k, 3) = q.coeff({1, 1, 0});
        rows(k, 4) = q.coeff({1, 0, 1});
        rows(k, 5) = q.coeff({0, 1, 1});
    }
    const auto ann = nullspace(rows);
    if (ann.size() != 1)
        throw std::invalid_argument(
            "apolarity_data: annihilator dimension != 1");
    const RatVec& v = ann[0];
    ApolarityData out{RatMatrix(3, 3), RatMatrix(3, 3)};
    out.p_matrix(0, 0) = v[0];
    out.p_matrix(1, 1) = v[1];
    out.p_matrix(2, 2) = v[2];
    // For a quadric with coefficient row (c200, c020, c002, c110, c101,
    // c011) and a symmetric matrix B, the trace pairing is
    // sum c_diag B_ii + sum c_mixed B_ij, so the kernel vector's mixed
    // entries are the off-diagonal matrix entries as they stand.
    out.p_matrix(0, 1) = out.p_matrix(1, 0) = v[3];
    out.p_matrix(0, 2) = out.p_matrix(2, 0) = v[4];
    out.p_matrix(1, 2) = out.p_matrix(2, 1) = v[5];
    const Rat d = det(out.p_matrix);
    if (d == 0)
        throw std::invalid_argument(
            "apolarity_data: annihilating conic is singular");
    out.c_p_matrix = inverse(out.p_matrix).value() * d;
    return out;
}

struct TrisecantReport {
    int contact_degree;   // degree of the binary contact form (3 = trisecant)
    int repeated_degree;  // 0: three simple contacts, 1: double + simple,
                          // 2: triple contact
    bool in_system;
};

/// Meet a line with the surface of member centers: the contact form is the
/// gcd of the 3x3 minors of [A x | B x | C x] along the line. Lines of the
/// section are exactly the trisecants (contact degree 3).
inline TrisecantReport trisecant_report(const AntisymNet& net,
                                        const LineRep& line) {
    if (net.size() != 5 || line.dim_ambient() != 5)
        throw std::invalid_argument("trisecant_report: need size 5");
    const HomogPoly s = HomogPoly::variable(0);
    const HomogPoly t = HomogPoly::variable(1);
    // Columns A x(s,t), B x(s,t), C x(s,t); entries linear in (s, t).
    PolyMatrix stack(5, 3);
    const AntisymMatrix* mats[3] = {&net.a, &net.b, &net.c};
    for (int c = 0; c < 3; ++c) {
        const RatMatrix& m = mats[c]->full();
        for (std::size_t i = 0; i < 5; ++i) {
            HomogPoly entry;
            for (std::size_t j = 0; j < 5; ++j)
                entry += s * (m(i, j) * line.p().coords()[j]) +
                         t * (m(i, j) * line.q().coords()[j]);
            stack(i, c) = entry;
        }
    }
    HomogPoly g;
    bool have = false;
    for (std::size_t r0 = 0; r0 < 5 && (!have || g.degree() > 0); ++r0)
        for (std::size_t r1 = r0 + 1; r1 < 5; ++r1)
            for (std::size_t r2 = r1 + 1; r2 < 5; ++r2) {
                PolyMatrix sub(3, 3);
                const std::size_t rows[3] = {r0, r1, r2};
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j) sub(i, j) = stack(rows[i], j);
                const HomogPoly d = poly_det(sub);
                if (d.is_zero()) continue;
                g = have ? binary_gcd(g, d) : d;
                have = true;
            }
    if (!have)
        throw std::invalid_argument(
            "trisecant_report: line lies in the center surface");
    TrisecantReport out;
    out.contact_degree = g.degree();
    HomogPoly rep = binary_gcd(g, g.derivative(0));
    rep = binary_gcd(rep, g.derivative(1));
    out.repeated_degree = g.degree() == 0 ? 0 : rep.degree();
    out.in_system = (out.contact_degree == 3);
    return out;
}

}  // namespace linesect

#endif
