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
#include "linesect/pencils.hpp"

using namespace linesect;

namespace {

// j-style invariant of four unordered points on a line, computed from a
// cross ratio r: 256 (r^2 - r + 1)^3 / (r^2 (1 - r)^2) is unchanged under
// the six-fold cross-ratio ambiguity.
Rat four_point_invariant(const std::vector<Rat>& pts) {
    REQUIRE(pts.size() == 4);
    const Rat r = ((pts[0] - pts[2]) * (pts[1] - pts[3])) /
                  ((pts[1] - pts[2]) * (pts[0] - pts[3]));
    const Rat num = r * r - r + 1;
    return Rat(256) * num * num * num / (r * r * (1 - r) * (1 - r));
}

std::vector<Rat> rand_distinct(Rng& rng, std::size_t n) {
    std::vector<Rat> v;
    while (v.size() < n) {
        const Rat c = rat(rng.uniform(-12, 12), rng.uniform(1, 5));
        if (std::find(v.begin(), v.end(), c) == v.end()) v.push_back(c);
    }
    return v;
}

}  // namespace

TEST_CASE("pfaffian binary form of a diagonal block pencil") {
    const AntisymPencil pencil = block_pencil({Rat(2), Rat(3), Rat(5)});
    const HomogPoly lam = HomogPoly::variable(0);
    const HomogPoly mu = HomogPoly::variable(1);
    // Pf = (-1)^3 (lambda - 2 mu)(lambda - 3 mu)(lambda - 5 mu).
    const HomogPoly expect =
        -((lam - mu * Rat(2)) * (lam - mu * Rat(3)) * (lam - mu * Rat(5)));
    CHECK(pfaffian_binary(pencil) == expect);
}

TEST_CASE("odd pencil normal form is idempotent on normal input") {
    const std::vector<Rat> lambdas{Rat(-1), Rat(0), Rat(2), Rat(7)};
    const auto nf = pencil_normal_form_odd(block_pencil(lambdas));
    CHECK(nf.lambdas == lambdas);
}

TEST_CASE("odd pencil normal form round trip under congruence") {
    Rng rng(701);
    for (std::size_t n = 2; n <= 5; ++n) {
        for (int trial = 0; trial < 4; ++trial) {
            std::vector<Rat> lambdas = rand_distinct(rng, n);
            std::sort(lambdas.begin(), lambdas.end());
            const AntisymPencil normal = block_pencil(lambdas);
            const RatMatrix t = random_invertible(rng, 2 * n, 4);
            const AntisymPencil moved = pencil_congruence(normal, t);
            const auto nf = pencil_normal_form_odd(moved);
            CHECK(nf.lambdas == lambdas);
            const auto back = inverse(nf.T);
            REQUIRE(back.has_value());
            CHECK(moved.a.congruence(*back) == normal.a);
            CHECK(moved.b.congruence(*back) == normal.b);
        }
    }
}

TEST_CASE("recombining the pencil moves the roots by a moebius map") {
    Rng rng(702);
    for (int trial = 0; trial < 6; ++trial) {
        std::vector<Rat> lambdas = rand_distinct(rng, 4);
        std::sort(lambdas.begin(), lambdas.end());
        const AntisymPencil normal = block_pencil(lambdas);
        // a' = p a + q b, b' = r a + s b with ps - qr != 0.
        const RatMatrix g = random_invertible(rng, 2, 3);
        const AntisymPencil respan(
            normal.a * g(0, 0) + normal.b * g(0, 1),
            normal.a * g(1, 0) + normal.b * g(1, 1));
        std::vector<Rat> moved;
        try {
            moved = pencil_normal_form_odd(respan).lambdas;
        } catch (const std::invalid_argument&) {
            continue;  // a root landed at infinity for this draw
        }
        REQUIRE(moved.size() == 4);
        bool distinct = true;
        for (int i = 0; i < 4 && distinct; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (moved[i] == moved[j]) distinct = false;
        REQUIRE(distinct);
        CHECK(four_point_invariant(moved) == four_point_invariant(lambdas));
    }
}

TEST_CASE("odd pencil normal form rejects bad spectra") {
    // Repeated root.
    CHECK_THROWS_WITH(
        pencil_normal_form_odd(block_pencil({Rat(2), Rat(2), Rat(3)})),
        Catch::Matchers::ContainsSubstring("repeated"));
    // Irrational roots: Pf(lambda A - mu B) = lambda^2 - 2 mu^2.
    AntisymMatrix a(4), b(4);
    a.set(0, 2, Rat(-1));
    a.set(1, 3, Rat(-1));
    b.set(0, 3, Rat(-2));
    b.set(1, 2, Rat(-1));
    CHECK_THROWS_WITH(pencil_normal_form_odd(AntisymPencil(a, b)),
                      Catch::Matchers::ContainsSubstring("irrational"));
    // Simple root at infinity: Pf(lambda A - mu B) = -lambda mu.
    AntisymMatrix sing(4), other(4);
    sing.set(0, 1, Rat(1));
    other.set(2, 3, Rat(1));
    CHECK_THROWS_WITH(
        pencil_normal_form_odd(AntisymPencil(sing, other)),
        Catch::Matchers::ContainsSubstring("infinity"));
}

TEST_CASE("even-size normal form kernel identity") {
    for (std::size_t n : {2u, 3u, 4u}) {
        const AntisymPencil pencil = even_size_pencil(n);
        const HomogPolyVec minors =
            poly_pfaffian_minors(pencil_poly_matrix(pencil));
        // The minor curve is supported in coordinates n..2n with components
        // proportional to mu^(n-k) lambda^k.
        RatVec at23;
        for (const HomogPoly& m : minors) at23.push_back(m.eval({Rat(2), Rat(3)}));
        RatVec expect(2 * n + 1, Rat(0));
        for (std::size_t k = 0; k <= n; ++k) {
            Rat v(1);
            for (std::size_t t = 0; t < k; ++t) v *= Rat(2);
            for (std::size_t t = k; t < n; ++t) v *= Rat(3);
            expect[n + k] = v;
        }
        CHECK(ProjPoint(at23) == ProjPoint(expect));
    }
}

TEST_CASE("even-size pencil normal form round trip under congruence") {
    Rng rng(703);
    for (std::size_t n = 2; n <= 4; ++n) {
        const AntisymPencil normal = even_size_pencil(n);
        const std::size_t size = 2 * n + 1;
        for (int trial = 0; trial < 4; ++trial) {
            const RatMatrix t = random_invertible(rng, size, 4);
            const AntisymPencil moved = pencil_congruence(normal, t);
            const auto nf = pencil_normal_form_even(moved);
            const auto back = inverse(nf.T);
            REQUIRE(back.has_value());
            CHECK(moved.a.congruence(*back) == normal.a);
            CHECK(moved.b.congruence(*back) == normal.b);
        }
    }
}

TEST_CASE("even-size normal form absorbs a symmetric shear exactly") {
    // A shear e_k -> e_k + sum_i t(i, k) e_(n+i) with symmetric t fixes A
    // and perturbs only the top-left block of B; the normal form must undo
    // it.
    Rng rng(704);
    const std::size_t n = 3, size = 2 * n + 1;
    for (int trial = 0; trial < 5; ++trial) {
        RatMatrix shear = RatMatrix::identity(size);
        const RatMatrix t = random_symmetric(rng, n, 6);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) shear(n + i, k) = t(i, k);
        const AntisymPencil normal = even_size_pencil(n);
        const AntisymPencil moved = pencil_congruence(normal, shear);
        CHECK(moved.a == normal.a);  // A is invariant under the shear
        CHECK(moved.b != normal.b);
        const auto nf = pencil_normal_form_even(moved);
        const auto back = inverse(nf.T);
        REQUIRE(back.has_value());
        CHECK(moved.b.congruence(*back) == normal.b);
    }
}

TEST_CASE("even-size normal form rejects degenerate pencils") {
    // Shared 2-dimensional kernel: every minor vanishes identically.
    AntisymMatrix a(5), b(5);
    a.set(0, 1, Rat(1));
    b.set(0, 2, Rat(1));
    b.set(1, 2, Rat(1));
    CHECK_THROWS_WITH(pencil_normal_form_even(AntisymPencil(a, b)),
                      Catch::Matchers::ContainsSubstring("corank"));
    // Wrong parity of the size.
    CHECK_THROWS(pencil_normal_form_even(block_pencil({Rat(1), Rat(2)})));
    CHECK_THROWS(pencil_normal_form_odd(even_size_pencil(2)));
}
