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

#include "linesect/matrix.hpp"
#include "linesect/rational.hpp"

using namespace linesect;

namespace {

RatMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
    RatMatrix m(rows.size(), rows.begin()->size());
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (long v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

RatMatrix random_matrix(Rng& rng, std::size_t r, std::size_t c, long bound) {
    RatMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.uniform(-bound, bound);
    return m;
}

}  // namespace

TEST_CASE("rational parse and format round trip") {
    CHECK(rat_to_string(rat(3, 6)) == "1/2");
    CHECK(rat_to_string(rat(-4, 2)) == "-2");
    CHECK(rat_from_string("7/3") == rat(7, 3));
    CHECK(rat_from_string("-7") == rat(-7));
    CHECK(rat_from_string("4/6") == rat(2, 3));
    CHECK_THROWS(rat_from_string(""));
    CHECK_THROWS(rat_from_string("x"));
}

TEST_CASE("rref of identity") {
    const auto r = rref(RatMatrix::identity(3));
    CHECK(r.rank == 3);
    CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2});
    CHECK(r.reduced == RatMatrix::identity(3));
}

TEST_CASE("rref of zero matrix") {
    const auto r = rref(RatMatrix(2, 4));
    CHECK(r.rank == 0);
    CHECK(r.pivots.empty());
    CHECK(r.reduced == RatMatrix(2, 4));
}

TEST_CASE("rref of rank-one matrix, hand elimination") {
    const auto r = rref(mat({{1, 2}, {2, 4}}));
    CHECK(r.rank == 1);
    CHECK(r.pivots == std::vector<std::size_t>{0});
    CHECK(r.reduced == mat({{1, 2}, {0, 0}}));
}

TEST_CASE("nullspace examples") {
    CHECK(nullspace(RatMatrix::identity(4)).empty());
    CHECK(nullspace(RatMatrix(1, 3)).size() == 3);
    const auto basis = nullspace(mat({{0, -1, 0}, {1, 0, 0}, {0, 0, 0}}));
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == RatVec{0, 0, 1});
}

TEST_CASE("rref properties on random matrices") {
    Rng rng(12345);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t r = static_cast<std::size_t>(rng.uniform(1, 6));
        const std::size_t c = static_cast<std::size_t>(rng.uniform(1, 6));
        const RatMatrix m = random_matrix(rng, r, c, 9);

        const auto rr = rref(m);
        // Idempotence.
        CHECK(rref(rr.reduced).reduced == rr.reduced);
        // Rank symmetry.
        CHECK(rank(m) == rank(m.transpose()));
        // Kernel vectors are exact.
        for (const RatVec& v : nullspace(m)) CHECK(is_zero_vec(m.apply(v)));
        // Rank-nullity.
        CHECK(nullspace(m).size() == c - rr.rank);
    }
}

TEST_CASE("determinant against cofactor expansion on small sizes") {
    Rng rng(777);
    for (int trial = 0; trial < 30; ++trial) {
        const RatMatrix m = random_matrix(rng, 3, 3, 9);
        Rat cof(0);
        // 3x3 rule of Sarrus as an independent oracle.
        cof = m(0, 0) * m(1, 1) * m(2, 2) + m(0, 1) * m(1, 2) * m(2, 0) +
              m(0, 2) * m(1, 0) * m(2, 1) - m(0, 2) * m(1, 1) * m(2, 0) -
              m(0, 0) * m(1, 2) * m(2, 1) - m(0, 1) * m(1, 0) * m(2, 2);
        CHECK(det(m) == cof);
    }
}

TEST_CASE("inverse and solve") {
    Rng rng(4242);
    for (int trial = 0; trial < 20; ++trial) {
        const RatMatrix m = random_matrix(rng, 4, 4, 9);
        const auto inv = inverse(m);
        if (det(m) == 0) {
            CHECK(!inv.has_value());
            continue;
        }
        REQUIRE(inv.has_value());
        CHECK(m * *inv == RatMatrix::identity(4));
        CHECK(*inv * m == RatMatrix::identity(4));

        RatVec b;
        for (int k = 0; k < 4; ++k) b.push_back(rng.uniform(-9, 9));
        const auto x = solve(m, b);
        REQUIRE(x.has_value());
        CHECK(m.apply(*x) == b);
    }
}

TEST_CASE("solve detects inconsistency") {
    const auto x = solve(mat({{1, 1}, {1, 1}}), RatVec{Rat(1), Rat(2)});
    CHECK(!x.has_value());
}

TEST_CASE("deterministic rng is stable across runs") {
    Rng a(9), b(9);
    for (int k = 0; k < 100; ++k) CHECK(a.next() == b.next());
    Rng c(9);
    CHECK(c.uniform(-5, 5) >= -5);
    CHECK(c.uniform(-5, 5) <= 5);
}
