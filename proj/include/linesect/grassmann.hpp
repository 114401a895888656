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

#ifndef LINESECT_GRASSMANN_HPP
#define LINESECT_GRASSMANN_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "linesect/antisym.hpp"
#include "linesect/matrix.hpp"
#include "linesect/poly.hpp"

namespace linesect {

/// Point of projective space, canonically scaled: first nonzero coord = 1.
class ProjPoint {
  public:
    explicit ProjPoint(RatVec coords) : c_(std::move(coords)) {
        std::size_t lead = c_.size();
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != 0) {
                lead = i;
                break;
            }
        if (lead == c_.size())
            throw std::invalid_argument("projective point: zero vector");
        const Rat inv = 1 / c_[lead];
        for (std::size_t i = lead; i < c_.size(); ++i) c_[i] *= inv;
    }

    const RatVec& coords() const { return c_; }
    std::size_t dim_ambient() const { return c_.size(); }

    bool operator==(const ProjPoint& o) const { return c_ == o.c_; }
    bool operator!=(const ProjPoint& o) const { return !(*this == o); }

  private:
    RatVec c_;
};

inline ProjPoint basis_point(std::size_t i, std::size_t n) {
    RatVec v(n, Rat(0));
    v.at(i) = 1;
    return ProjPoint(v);
}

/// Projective line spanned by two independent points.
class LineRep {
  public:
    LineRep(ProjPoint p, ProjPoint q) : p_(std::move(p)), q_(std::move(q)) {
        if (p_.dim_ambient() != q_.dim_ambient())
            throw std::invalid_argument("line: ambient dimension mismatch");
        if (rank(from_rows({p_.coords(), q_.coords()})) != 2)
            throw std::invalid_argument("line: dependent spanning points");
    }

    const ProjPoint& p() const { return p_; }
    const ProjPoint& q() const { return q_; }
    std::size_t dim_ambient() const { return p_.dim_ambient(); }

    bool contains(const ProjPoint& x) const {
        return rank(from_rows({p_.coords(), q_.coords(), x.coords()})) == 2;
    }

    /// Same line as a set of points.
    bool same_line(const LineRep& o) const {
        return rank(from_rows({p_.coords(), q_.coords(), o.p().coords(),
                               o.q().coords()})) == 2;
    }

  private:
    ProjPoint p_, q_;
};

/// Plucker coordinates: 2x2 minors p_i q_j - p_j q_i, (i < j) lexicographic,
/// canonically scaled.
inline RatVec pluecker(const LineRep& line) {
    const RatVec& p = line.p().coords();
    const RatVec& q = line.q().coords();
    RatVec out;
    out.reserve(p.size() * (p.size() - 1) / 2);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            out.push_back(p[i] * q[j] - p[j] * q[i]);
    return ProjPoint(std::move(out)).coords();
}

/// A linear section G(1,N) cap H^l, dually span{A_1..A_l}.
class SectionSpec {
  public:
    SectionSpec(std::size_t n_ambient, std::vector<AntisymMatrix> mats)
        : n_(n_ambient), mats_(std::move(mats)) {
        if (n_ < 4) throw std::invalid_argument("section: N must be >= 4");
        if (mats_.empty())
            throw std::invalid_argument("section: need at least one matrix");
        std::vector<RatVec> rows;
        for (const AntisymMatrix& a : mats_) {
            if (a.size() != n_ + 1)
                throw std::invalid_argument("section: matrix size != N+1");
            rows.push_back(upper_vector(a));
        }
        if (rank(from_rows(rows)) != mats_.size())
            throw std::invalid_argument("section: matrices dependent");
    }

    std::size_t N() const { return n_; }
    std::size_t l() const { return mats_.size(); }
    long section_dim() const {
        return 2 * (static_cast<long>(n_) - 1) - static_cast<long>(l());
    }
    const std::vector<AntisymMatrix>& matrices() const { return mats_; }

    /// Flatten the upper triangle into a coefficient vector (span tests).
    static RatVec upper_vector(const AntisymMatrix& a) {
        RatVec v;
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = i + 1; j < a.size(); ++j) v.push_back(a(i, j));
        return v;
    }

  private:
    std::size_t n_;
    std::vector<AntisymMatrix> mats_;
};

inline bool tangency(const AntisymMatrix& a, const LineRep& line) {
    return tangency_points(a, line.p().coords(), line.q().coords());
}

/// Membership: p^t A_i q = 0 for all i.
inline bool line_in_section(const LineRep& line, const SectionSpec& s) {
    if (line.dim_ambient() != s.N() + 1)
        throw std::invalid_argument("line_in_section: dimension mismatch");
    for (const AntisymMatrix& a : s.matrices())
        if (bilinear(line.p().coords(), a.full(), line.q().coords()) != 0)
            return false;
    return true;
}

/// Projective dimension of the family of section lines through p:
/// N - 1 - rank(stack of rows p^t A_i); -1 means none.
inline long lines_through_point_dim(const ProjPoint& p, const SectionSpec& s) {
    if (p.dim_ambient() != s.N() + 1)
        throw std::invalid_argument("lines_through_point_dim: dimensions");
    std::vector<RatVec> rows;
    for (const AntisymMatrix& a : s.matrices())
        rows.push_back(a.full().transpose().apply(p.coords()));
    return static_cast<long>(s.N()) - 1 -
           static_cast<long>(rank(from_rows(rows)));
}

/// The section lines through p form P(ker of the stacked rows) modulo p;
/// return the kernel basis (each vector spans a line with p, p included).
inline std::vector<RatVec> lines_through_point_space(const ProjPoint& p,
                                                     const SectionSpec& s) {
    std::vector<RatVec> rows;
    for (const AntisymMatrix& a : s.matrices())
        rows.push_back(a.full().transpose().apply(p.coords()));
    return nullspace(from_rows(rows));
}

struct ExceptionalLocus {
    bool odd_case = false;
    std::vector<LineRep> lines;  // odd ambient dimension N: kernel lines
    HomogPolyVec curve;          // even N: center curve components
};

/// Exceptional locus of a pencil section. N odd: the kernel lines of the
/// corank-2 members (requires distinct rational Pfaffian roots). N even: the
/// center curve given by Pfaffian minors (requires corank 1 everywhere).
inline ExceptionalLocus exceptional_locus_pencil(const AntisymPencil& pencil) {
    ExceptionalLocus out;
    const std::size_t size = pencil.size();  // N + 1
    if (size % 2 == 0) {
        out.odd_case = true;
        const HomogPoly pf = pfaffian_full(pencil_poly_matrix(pencil));
        if (pf.is_zero())
            throw std::invalid_argument(
                "exceptional locus: pencil has identically zero Pfaffian");
        const BinaryRootReport roots = binary_rational_roots(pf);
        if (roots.leftover_degree > 0) {
            std::string msg =
                "exceptional locus: non-rational Pfaffian root; remaining "
                "factor degree " +
                std::to_string(roots.leftover_degree) +
                ", squarefree layer degrees";
            for (int d : roots.leftover_squarefree_degrees)
                msg += " " + std::to_string(d);
            throw std::invalid_argument(msg);
        }
        for (std::size_t k = 0; k < roots.roots.size(); ++k) {
            if (roots.multiplicities[k] != 1)
                throw std::invalid_argument(
                    "exceptional locus: repeated Pfaffian root");
            const auto& [lam, mu] = roots.roots[k];
            const AntisymMatrix member = pencil_member(pencil, lam, mu);
            const auto ker = nullspace(member.full());
            if (ker.size() != 2)
                throw std::invalid_argument(
                    "exceptional locus: corank != 2 at a Pfaffian root");
            out.lines.emplace_back(ProjPoint(ker[0]), ProjPoint(ker[1]));
        }
    } else {
        out.curve = poly_pfaffian_minors(pencil_poly_matrix(pencil));
        bool all_zero = true;
        for (const HomogPoly& c : out.curve)
            if (!c.is_zero()) all_zero = false;
        if (all_zero)
            throw std::invalid_argument(
                "exceptional locus: corank >= 2 member present (minor vector "
                "vanishes identically)");
    }
    return out;
}

/// Center of an odd-size corank-1 pencil member at (lambda : mu).
inline ProjPoint pencil_center(const AntisymPencil& pencil, const Rat& lambda,
                               const Rat& mu) {
    if (pencil.size() % 2 == 0)
        throw std::invalid_argument("pencil_center: size must be odd");
    const HomogPolyVec curve =
        poly_pfaffian_minors(pencil_poly_matrix(pencil));
    RatVec c;
    c.reserve(curve.size());
    for (const HomogPoly& comp : curve) c.push_back(comp.eval({lambda, mu}));
    return ProjPoint(std::move(c));
}

/// The hyperplane swept by the section lines through the center at
/// (lambda : mu): the common row c^t A = (mu/lambda) c^t B, canonically
/// scaled.
inline RatVec center_hyperplane(const AntisymPencil& pencil, const Rat& lambda,
                                const Rat& mu) {
    if (lambda == 0 && mu == 0)
        throw std::invalid_argument("center_hyperplane: (0:0) not projective");
    const ProjPoint c = pencil_center(pencil, lambda, mu);
    const RatVec row_a = pencil.a.full().transpose().apply(c.coords());
    const RatVec row_b = pencil.b.full().transpose().apply(c.coords());
    const RatVec& row = is_zero_vec(row_a) ? row_b : row_a;
    if (is_zero_vec(row))
        throw std::invalid_argument(
            "center_hyperplane: center is in the kernel of the whole pencil");
    return ProjPoint(row).coords();
}

}  // namespace linesect

#endif
