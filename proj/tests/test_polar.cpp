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

#include <catch2/catch_amalgamated.hpp>

#include "linesect/generate.hpp"
#include "linesect/polar.hpp"

using namespace linesect;

namespace {

Conic identity_conic() { return Conic(RatMatrix::identity(3)); }

Conic random_smooth_conic(Rng& rng, long bound) {
    for (;;) {
        const RatMatrix m = random_symmetric(rng, 3, bound);
        if (det(m) != 0) return Conic(m);
    }
}

ProjPoint random_point(Rng& rng, long bound) {
    for (;;) {
        RatVec v{Rat(rng.uniform(-bound, bound)),
                 Rat(rng.uniform(-bound, bound)),
                 Rat(rng.uniform(-bound, bound))};
        if (!is_zero_vec(v)) return ProjPoint(v);
    }
}

/// A random non-degenerate polar triangle of c: a vertex, a second on its
/// polar, and the pole of their joining line.
Triangle random_polar_triangle(Rng& rng, const Conic& c) {
    for (;;) {
        const ProjPoint p = random_point(rng, 6);
        const RatVec lp = polar_line(c, p);
        RatMatrix row(1, 3);
        for (std::size_t k = 0; k < 3; ++k) row(0, k) = lp[k];
        const auto ker = nullspace(row);
        if (ker.size() != 2) continue;
        RatVec qv = add_vec(scale_vec(Rat(rng.uniform(-5, 5)), ker[0]),
                            scale_vec(Rat(rng.uniform(-5, 5)), ker[1]));
        if (is_zero_vec(qv)) continue;
        const ProjPoint q(qv);
        if (q == p) continue;
        const RatVec rv = detail::cross3(c.m.apply(p.coords()),
                                         c.m.apply(q.coords()));
        if (is_zero_vec(rv)) continue;
        const ProjPoint r(rv);
        if (r == p || r == q) continue;
        return Triangle(p, q, r);
    }
}

/// A random degenerate polar triangle: a conic through a chosen rational
/// point p, and a second vertex on the tangent at p.
std::pair<Conic, Triangle> random_degenerate_polar_pair(Rng& rng) {
    for (;;) {
        const ProjPoint p = random_point(rng, 4);
        RatMatrix m = random_symmetric(rng, 3, 5);
        // Adjust a diagonal entry at a nonzero coordinate of p to place p
        // on the conic.
        std::size_t k = 0;
        while (p.coords()[k] == 0) ++k;
        const Rat pk = p.coords()[k];
        m(k, k) -= bilinear(p.coords(), m, p.coords()) / (pk * pk);
        if (det(m) == 0) continue;
        const Conic c{m};
        const RatVec tangent = c.m.apply(p.coords());
        RatMatrix row(1, 3);
        for (std::size_t t = 0; t < 3; ++t) row(0, t) = tangent[t];
        const auto ker = nullspace(row);
        if (ker.size() != 2) continue;
        RatVec qv = add_vec(scale_vec(Rat(rng.uniform(-5, 5)), ker[0]),
                            scale_vec(Rat(rng.uniform(-5, 5)), ker[1]));
        if (is_zero_vec(qv)) continue;
        const ProjPoint q(qv);
        if (q == p) continue;
        return {c, Triangle(p, p, q)};
    }
}

/// A random member of the apolar family of c.
Conic random_apolar(Rng& rng, const Conic& c) {
    const auto basis = apolar_family_basis(c);
    for (;;) {
        RatMatrix m(3, 3);
        bool nonzero = false;
        for (const Conic& b : basis) {
            const Rat coeff(rng.uniform(-4, 4));
            if (coeff != 0) nonzero = true;
            m = m + b.m * coeff;
        }
        bool zero = true;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                if (m(i, j) != 0) zero = false;
        if (!nonzero || zero) continue;
        return Conic(m);
    }
}

int count_on(const Conic& b, const Triangle& t) {
    int on = 0;
    for (const ProjPoint* v : {&t.p, &t.q, &t.r})
        if (b.contains(*v)) ++on;
    return on;
}

}  // namespace

TEST_CASE("polarity basics and involution") {
    const Conic c = identity_conic();
    CHECK(polar_line(c, basis_point(0, 3)) == RatVec{Rat(1), Rat(0), Rat(0)});
    Rng rng(901);
    for (int trial = 0; trial < 20; ++trial) {
        const Conic cc = random_smooth_conic(rng, 6);
        const ProjPoint p = random_point(rng, 8);
        CHECK(pole(cc, polar_line(cc, p)) == p);
        // A point of the conic lies on its own polar.
        CHECK((dot(polar_line(cc, p), p.coords()) == 0) == cc.contains(p));
    }
    CHECK_THROWS(polar_line(Conic(from_rows({RatVec{Rat(1), Rat(0), Rat(0)},
                                             RatVec{Rat(0), Rat(1), Rat(0)},
                                             RatVec{Rat(0), Rat(0), Rat(0)}})),
                            basis_point(0, 3)));
}

TEST_CASE("polar triangle recognition") {
    const Conic c = identity_conic();
    CHECK(is_polar_triangle(
        c, Triangle(basis_point(0, 3), basis_point(1, 3), basis_point(2, 3))));
    CHECK(!is_polar_triangle(
        c, Triangle(basis_point(0, 3), basis_point(1, 3),
                    ProjPoint({Rat(1), Rat(1), Rat(1)}))));
    // Degenerate example on an isotropic conic: p = (1 : 1 : 0) lies on
    // x0^2 - x1^2 + x2^2 = 0 and q = (lambda : lambda : 1) on its tangent.
    RatMatrix iso = RatMatrix::identity(3);
    iso(1, 1) = Rat(-1);
    const Conic ci{iso};
    const ProjPoint p({Rat(1), Rat(1), Rat(0)});
    for (long lam = -2; lam <= 2; ++lam) {
        const ProjPoint q({Rat(lam), Rat(lam), Rat(1)});
        CHECK(is_polar_triangle(ci, Triangle(p, p, q)));
    }
    CHECK(!is_polar_triangle(
        ci, Triangle(p, p, ProjPoint({Rat(0), Rat(1), Rat(1)}))));
    CHECK_THROWS(Triangle(p, p, p));
}

TEST_CASE("apolarity pairing") {
    const Conic c = identity_conic();
    RatMatrix traceless(3, 3);
    traceless(0, 0) = Rat(1);
    traceless(1, 1) = Rat(2);
    traceless(2, 2) = Rat(-3);
    traceless(0, 1) = traceless(1, 0) = Rat(7);
    CHECK(apolar(c, Conic(traceless)));
    CHECK(!apolar(c, identity_conic()));
    // Scaling either matrix leaves the verdict unchanged.
    Rng rng(902);
    for (int trial = 0; trial < 10; ++trial) {
        const Conic a = random_smooth_conic(rng, 5);
        const Conic b{random_symmetric(rng, 3, 5)};
        const Rat s(rng.uniform(1, 9)), u(rng.uniform(1, 9));
        CHECK(apolar(a, b) == apolar(Conic(a.m * s), Conic(b.m * u)));
    }
}

TEST_CASE("apolar family basis") {
    Rng rng(903);
    for (int trial = 0; trial < 10; ++trial) {
        const Conic c = random_smooth_conic(rng, 6);
        const auto basis = apolar_family_basis(c);
        REQUIRE(basis.size() == 5);
        RatMatrix coeffs(5, 6);
        for (std::size_t k = 0; k < 5; ++k) {
            CHECK(apolar(c, basis[k]));
            const RatMatrix& b = basis[k].m;
            coeffs(k, 0) = b(0, 0);
            coeffs(k, 1) = b(1, 1);
            coeffs(k, 2) = b(2, 2);
            coeffs(k, 3) = b(0, 1);
            coeffs(k, 4) = b(0, 2);
            coeffs(k, 5) = b(1, 2);
        }
        CHECK(rank(coeffs) == 5);
    }
}

TEST_CASE("forward proposition on seeded polar triangles") {
    Rng rng(904);
    int done = 0;
    while (done < 100) {
        const Conic c = random_smooth_conic(rng, 5);
        const Triangle t = random_polar_triangle(rng, c);
        const Conic b = random_apolar(rng, c);
        REQUIRE(third_point_closure(c, t, b));
        // Explicit reading: never exactly two vertices on the conic.
        CHECK(count_on(b, t) != 2);
        ++done;
    }
}

TEST_CASE("forward proposition on degenerate polar triangles") {
    Rng rng(905);
    int done = 0;
    while (done < 30) {
        const auto [c, t] = random_degenerate_polar_pair(rng);
        REQUIRE(is_polar_triangle(c, t));
        const Conic b = random_apolar(rng, c);
        REQUIRE(third_point_closure(c, t, b));
        ++done;
    }
}

TEST_CASE("the closure example of the coordinate triangle") {
    // b with b00 = b11 = 0 and traceless forces b22 = 0: the third vertex
    // lies on the conic as well.
    const Conic c = identity_conic();
    RatMatrix b(3, 3);
    b(0, 1) = b(1, 0) = Rat(3);
    b(0, 2) = b(2, 0) = Rat(-2);
    b(1, 2) = b(2, 1) = Rat(5);
    const Triangle t(basis_point(0, 3), basis_point(1, 3), basis_point(2, 3));
    CHECK(third_point_closure(c, t, Conic(b)));
    CHECK(count_on(Conic(b), t) == 3);
}

TEST_CASE("witness for the example non-polar triangle") {
    const Conic c = identity_conic();
    const Triangle t(basis_point(0, 3), basis_point(1, 3),
                     ProjPoint({Rat(1), Rat(0), Rat(1)}));
    const Conic w = non_polar_witness(c, t);
    CHECK(apolar(c, w));
    CHECK(count_on(w, t) == 2);
}

TEST_CASE("witness construction on seeded non-polar triangles") {
    Rng rng(906);
    int done = 0;
    while (done < 100) {
        const Conic c = random_smooth_conic(rng, 5);
        const ProjPoint p = random_point(rng, 5);
        const ProjPoint q = random_point(rng, 5);
        const ProjPoint r = random_point(rng, 5);
        if (p == q || p == r || q == r) continue;
        RatMatrix stack(3, 3);
        const ProjPoint* verts[3] = {&p, &q, &r};
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t i = 0; i < 3; ++i)
                stack(i, j) = verts[j]->coords()[i];
        if (det(stack) == 0) continue;
        const Triangle t(p, q, r);
        if (is_polar_triangle(c, t)) continue;
        const Conic w = non_polar_witness(c, t);
        CHECK(apolar(c, w));
        CHECK(count_on(w, t) == 2);
        ++done;
    }
}

TEST_CASE("witness construction on seeded degenerate non-polar pairs") {
    Rng rng(907);
    int done = 0;
    while (done < 100) {
        const Conic c = random_smooth_conic(rng, 5);
        const ProjPoint d = random_point(rng, 5);
        const ProjPoint s = random_point(rng, 5);
        if (d == s) continue;
        const Triangle t(d, d, s);
        if (is_polar_triangle(c, t)) continue;
        const Conic w = non_polar_witness(c, t);
        CHECK(apolar(c, w));
        CHECK(w.contains(d));
        CHECK(w.contains(s));
        CHECK(!contains_doubled(w, c, d, s));
        ++done;
    }
}

TEST_CASE("witness error cases") {
    const Conic c = identity_conic();
    // A polar triangle has no witness.
    CHECK_THROWS_WITH(
        non_polar_witness(c, Triangle(basis_point(0, 3), basis_point(1, 3),
                                      basis_point(2, 3))),
        Catch::Matchers::ContainsSubstring("polar triangle"));
    // Collinear distinct vertices are rejected.
    CHECK_THROWS_WITH(
        non_polar_witness(
            c, Triangle(basis_point(0, 3), basis_point(1, 3),
                        ProjPoint({Rat(1), Rat(1), Rat(0)}))),
        Catch::Matchers::ContainsSubstring("collinear"));
}
