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
#include "linesect/grassmann.hpp"
#include "linesect/json_io.hpp"

using namespace linesect;

namespace {

LineRep span_line(std::size_t i, std::size_t j, std::size_t n) {
    return LineRep(basis_point(i, n), basis_point(j, n));
}

}  // namespace

TEST_CASE("projective points canonicalize") {
    CHECK(ProjPoint({Rat(0), Rat(2), Rat(4)}) ==
          ProjPoint({Rat(0), Rat(1), Rat(2)}));
    CHECK(ProjPoint({Rat(-3), Rat(6)}) == ProjPoint({Rat(1), Rat(-2)}));
    CHECK_THROWS(ProjPoint({Rat(0), Rat(0)}));
}

TEST_CASE("pluecker coordinates of coordinate lines") {
    // Line e0 e1 in P^3: p01 = 1, all other coordinates zero.
    const RatVec pl = pluecker(span_line(0, 1, 4));
    REQUIRE(pl.size() == 6);
    CHECK(pl[0] == 1);
    for (std::size_t k = 1; k < 6; ++k) CHECK(pl[k] == 0);
    // Independence of the chosen spanning pair.
    const LineRep l1(ProjPoint({Rat(1), Rat(2), Rat(0), Rat(1)}),
                     ProjPoint({Rat(0), Rat(1), Rat(1), Rat(3)}));
    const LineRep l2(ProjPoint({Rat(1), Rat(3), Rat(1), Rat(4)}),
                     ProjPoint({Rat(2), Rat(5), Rat(1), Rat(5)}));
    REQUIRE(l1.same_line(l2));
    CHECK(pluecker(l1) == pluecker(l2));
}

TEST_CASE("line membership in a hyperplane section") {
    // t(p) A q = 0 picks out the lines of the section.
    const AntisymMatrix a = padded_symplectic(2);  // size 5, N = 4
    const SectionSpec s(4, {a});
    CHECK(s.l() == 1);
    CHECK(s.section_dim() == 5);
    // e0 and e2 pair to -1 under the form: not a section line.
    CHECK(!line_in_section(span_line(0, 2, 5), s));
    // e0 and e1 pair to zero.
    CHECK(line_in_section(span_line(0, 1, 5), s));
    // Every line through the center e4 is in the section.
    for (std::size_t j = 0; j < 4; ++j)
        CHECK(line_in_section(span_line(j, 4, 5), s));
}

TEST_CASE("the family of section lines through a point") {
    const AntisymMatrix a = padded_symplectic(2);
    const SectionSpec s(4, {a});
    // Through the center: all lines, a P^3 worth.
    CHECK(lines_through_point_dim(basis_point(4, 5), s) == 3);
    // Through a general point: a P^2 worth.
    CHECK(lines_through_point_dim(basis_point(0, 5), s) == 2);
    // The kernel space actually spans section lines.
    const ProjPoint p = basis_point(0, 5);
    for (const RatVec& v : lines_through_point_space(p, s)) {
        if (ProjPoint(v) == p) continue;
        CHECK(line_in_section(LineRep(p, ProjPoint(v)), s));
    }
}

TEST_CASE("section dimension formula") {
    Rng rng(601);
    for (std::size_t n = 4; n <= 7; ++n)
        for (std::size_t l = 1; l <= 3; ++l) {
            const SectionSpec s = general_section(rng, n, l, 9);
            CHECK(s.section_dim() ==
                  2 * (static_cast<long>(n) - 1) - static_cast<long>(l));
        }
    CHECK_THROWS(SectionSpec(3, {AntisymMatrix(4)}));
}

TEST_CASE("exceptional lines of a diagonal block pencil") {
    const AntisymPencil pencil = block_pencil({Rat(2), Rat(3), Rat(5)});
    const ExceptionalLocus loc = exceptional_locus_pencil(pencil);
    REQUIRE(loc.odd_case);
    REQUIRE(loc.lines.size() == 3);
    // Kernel of 2A - B is the first block plane, and so on.
    CHECK(loc.lines[0].same_line(span_line(0, 1, 6)));
    CHECK(loc.lines[1].same_line(span_line(2, 3, 6)));
    CHECK(loc.lines[2].same_line(span_line(4, 5, 6)));
    // Each kernel line is annihilated by the corresponding member (it is a
    // tangency locus of that member), though not a member of the section.
    const std::vector<Rat> roots{Rat(2), Rat(3), Rat(5)};
    for (std::size_t k = 0; k < 3; ++k)
        CHECK(tangency(pencil_member(pencil, roots[k], Rat(1)), loc.lines[k]));
}

TEST_CASE("exceptional locus rejects degenerate pencils") {
    // Shared 2-dimensional kernel: minors vanish identically.
    AntisymMatrix a(5), b(5);
    a.set(0, 1, Rat(1));
    b.set(0, 2, Rat(1));
    b.set(1, 2, Rat(1));
    CHECK_THROWS(exceptional_locus_pencil(AntisymPencil(a, b)));
}

TEST_CASE("center curve of the odd-size pencil normal form") {
    for (std::size_t n : {2u, 3u, 4u}) {
        const AntisymPencil pencil = even_size_pencil(n);
        const std::size_t size = 2 * n + 1;
        // Center at (lambda : mu) has coordinates mu^(n-k) lambda^k in
        // positions n..2n and zero elsewhere.
        for (long lam = -2; lam <= 2; ++lam) {
            const Rat mu(3);
            const ProjPoint c = pencil_center(pencil, Rat(lam), mu);
            RatVec expect(size, Rat(0));
            for (std::size_t k = 0; k <= n; ++k) {
                Rat v(1);
                for (std::size_t t = 0; t < k; ++t) v *= Rat(lam);
                for (std::size_t t = k; t < n; ++t) v *= mu;
                expect[n + k] = v;
            }
            CHECK(c == ProjPoint(expect));
            // The center is in the kernel of the member.
            CHECK(is_zero_vec(
                pencil_member(pencil, Rat(lam), mu).full().apply(c.coords())));
        }
    }
}

TEST_CASE("center hyperplane of the odd-size pencil normal form") {
    const std::size_t n = 3;
    const AntisymPencil pencil = even_size_pencil(n);
    const Rat lam(2), mu(5);
    const RatVec h = center_hyperplane(pencil, lam, mu);
    // Expected row: (mu^(n-1), mu^(n-2) lambda, ..., lambda^(n-1), 0, ..., 0)
    // up to scale.
    RatVec expect(2 * n + 1, Rat(0));
    for (std::size_t k = 0; k < n; ++k) {
        Rat v(1);
        for (std::size_t t = 0; t < k; ++t) v *= lam;
        for (std::size_t t = k + 1; t < n; ++t) v *= mu;
        expect[k] = v;
    }
    CHECK(ProjPoint(h) == ProjPoint(expect));
    // Lines through the center inside the section lie in this hyperplane.
    const ProjPoint c = pencil_center(pencil, lam, mu);
    const SectionSpec s(2 * n, {pencil.a, pencil.b});
    for (const RatVec& v : lines_through_point_space(c, s))
        CHECK(dot(h, v) == 0);
}

TEST_CASE("section json round trip") {
    Rng rng(602);
    const SectionSpec s = general_section(rng, 5, 3, 9);
    const SectionSpec back = section_from_json(section_to_json(s));
    CHECK(back.N() == s.N());
    REQUIRE(back.l() == s.l());
    for (std::size_t i = 0; i < s.l(); ++i)
        CHECK(back.matrices()[i] == s.matrices()[i]);
}
