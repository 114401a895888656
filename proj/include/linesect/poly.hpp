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

#ifndef LINESECT_POLY_HPP
#define LINESECT_POLY_HPP

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "linesect/matrix.hpp"
#include "linesect/rational.hpp"

namespace linesect {

/// Homogeneous polynomial over Q in up to three variables, stored sparsely by
/// exponent triple. The zero polynomial is the unique degree-0 empty map.
/// Constants have degree 0 and are compatible with any variable count, so the
/// type models a commutative ring usable as a Matrix<T> scalar.
class HomogPoly {
  public:
    using Exp = std::array<int, 3>;

    HomogPoly() : degree_(0) {}
    explicit HomogPoly(int c) : HomogPoly(Rat(c)) {}
    explicit HomogPoly(const Rat& c) : degree_(0) {
        if (c != 0) terms_[{0, 0, 0}] = c;
    }

    static HomogPoly variable(int i) {
        if (i < 0 || i > 2) throw std::invalid_argument("variable index");
        HomogPoly p;
        p.degree_ = 1;
        Exp e{0, 0, 0};
        e[static_cast<std::size_t>(i)] = 1;
        p.terms_[e] = 1;
        return p;
    }

    static HomogPoly monomial(const Rat& c, const Exp& e) {
        if (e[0] < 0 || e[1] < 0 || e[2] < 0)
            throw std::invalid_argument("negative exponent");
        HomogPoly p;
        if (c == 0) return p;
        p.degree_ = e[0] + e[1] + e[2];
        p.terms_[e] = c;
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    int degree() const { return degree_; }

    /// Highest variable index actually used, plus one (0 for constants).
    int num_vars() const {
        int n = 0;
        for (const auto& [e, c] : terms_)
            for (int i = 0; i < 3; ++i)
                if (e[static_cast<std::size_t>(i)] > 0) n = std::max(n, i + 1);
        return n;
    }

    Rat coeff(const Exp& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    const std::map<Exp, Rat>& terms() const { return terms_; }

    bool operator==(const HomogPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const HomogPoly& o) const { return !(*this == o); }

    HomogPoly operator+(const HomogPoly& o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        if (degree_ != o.degree_)
            throw std::invalid_argument("adding inhomogeneous degrees");
        HomogPoly out = *this;
        for (const auto& [e, c] : o.terms_) out.add_term(e, c);
        out.fix_degree();
        return out;
    }

    HomogPoly operator-() const {
        HomogPoly out = *this;
        for (auto& [e, c] : out.terms_) c = -c;
        return out;
    }

    HomogPoly operator-(const HomogPoly& o) const { return *this + (-o); }

    HomogPoly& operator+=(const HomogPoly& o) { return *this = *this + o; }
    HomogPoly& operator-=(const HomogPoly& o) { return *this = *this - o; }

    HomogPoly operator*(const HomogPoly& o) const {
        HomogPoly out;
        if (is_zero() || o.is_zero()) return out;
        out.degree_ = degree_ + o.degree_;
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : o.terms_)
                out.add_term({e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]},
                             c1 * c2);
        out.fix_degree();
        return out;
    }

    HomogPoly operator*(const Rat& s) const {
        HomogPoly out;
        if (s == 0 || is_zero()) return out;
        out.degree_ = degree_;
        for (const auto& [e, c] : terms_) out.terms_[e] = c * s;
        return out;
    }

    HomogPoly derivative(int var) const {
        if (var < 0 || var > 2) throw std::invalid_argument("variable index");
        HomogPoly out;
        const auto v = static_cast<std::size_t>(var);
        for (const auto& [e, c] : terms_) {
            if (e[v] == 0) continue;
            Exp d = e;
            --d[v];
            out.add_term(d, c * e[v]);
        }
        if (!out.terms_.empty()) out.degree_ = degree_ - 1;
        return out;
    }

    Rat eval(const RatVec& x) const {
        Rat total(0);
        for (const auto& [e, c] : terms_) {
            Rat t = c;
            for (std::size_t v = 0; v < 3; ++v)
                for (int k = 0; k < e[v]; ++k)
                    t *= (v < x.size() ? x[v] : Rat(0));
            total += t;
        }
        return total;
    }

    std::string str(const std::vector<std::string>& names = {"x", "y",
                                                             "z"}) const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << rat_to_string(c) << ")";
            for (std::size_t v = 0; v < 3; ++v)
                if (e[v] > 0) {
                    os << "*" << names[v];
                    if (e[v] > 1) os << "^" << e[v];
                }
        }
        return os.str();
    }

  private:
    void add_term(const Exp& e, const Rat& c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (c != 0) terms_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    void fix_degree() {
        if (terms_.empty()) degree_ = 0;
    }

    int degree_;
    std::map<Exp, Rat> terms_;
};

inline HomogPoly operator*(const Rat& s, const HomogPoly& p) { return p * s; }

using HomogPolyVec = std::vector<HomogPoly>;
using PolyMatrix = Matrix<HomogPoly>;

/// True iff the matrix-vector product is the identically-zero polynomial
/// vector (exact coefficient comparison).
inline bool poly_matrix_kernel_check(const PolyMatrix& m,
                                     const HomogPolyVec& v) {
    const HomogPolyVec out = m.apply(v);
    for (const HomogPoly& p : out)
        if (!p.is_zero()) return false;
    return true;
}

/// Determinant of a small polynomial matrix by Laplace expansion along the
/// first row (no division available in the polynomial ring).
inline HomogPoly poly_det(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("poly_det: square");
    const std::size_t n = m.rows();
    if (n == 0) return HomogPoly(1);
    if (n == 1) return m(0, 0);
    HomogPoly total;
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j).is_zero()) continue;
        PolyMatrix sub(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                sub(r - 1, cc++) = m(r, c);
            }
        }
        HomogPoly term = m(0, j) * poly_det(sub);
        if (j % 2 == 1) term = -term;
        total = total.is_zero() ? term : total + term;
    }
    return total;
}

// ---------------------------------------------------------------------------
// Binary forms f(x0, x1) = sum c_k x0^k x1^(d-k), coefficient view.
// ---------------------------------------------------------------------------

/// Coefficients of a binary form in variables (x0, x1): entry k is the
/// coefficient of x0^k x1^(d-k), k = 0..d.
inline RatVec binary_coeffs(const HomogPoly& f) {
    if (f.is_zero()) return {Rat(0)};
    const int d = f.degree();
    RatVec c(static_cast<std::size_t>(d) + 1, Rat(0));
    for (const auto& [e, v] : f.terms()) {
        if (e[2] != 0)
            throw std::invalid_argument("binary_coeffs: third variable used");
        c[static_cast<std::size_t>(e[0])] = v;
    }
    return c;
}

inline HomogPoly binary_from_coeffs(const RatVec& c) {
    const int d = static_cast<int>(c.size()) - 1;
    HomogPoly f;
    for (int k = 0; k <= d; ++k)
        f += HomogPoly::monomial(c[static_cast<std::size_t>(k)],
                                 {k, d - k, 0});
    return f;
}

// ---------------------------------------------------------------------------
// Dense univariate polynomials over Q (coefficient index = power), used for
// exact root isolation. Highest stored coefficient is nonzero except for the
// zero polynomial {}.
// ---------------------------------------------------------------------------

using UniPoly = std::vector<Rat>;  // p(x) = sum p[k] x^k

inline void uni_trim(UniPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int uni_deg(const UniPoly& p) { return static_cast<int>(p.size()) - 1; }

inline Rat uni_eval(const UniPoly& p, const Rat& x) {
    Rat v(0);
    for (std::size_t k = p.size(); k-- > 0;) v = v * x + p[k];
    return v;
}

inline UniPoly uni_derivative(const UniPoly& p) {
    UniPoly d;
    for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * Rat(static_cast<long>(k)));
    uni_trim(d);
    return d;
}

/// Quotient and remainder of polynomial division.
inline std::pair<UniPoly, UniPoly> uni_divmod(UniPoly a, const UniPoly& b) {
    if (b.empty()) throw std::invalid_argument("uni_divmod: divide by zero");
    UniPoly q(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0, Rat(0));
    while (a.size() >= b.size() && !a.empty()) {
        const Rat f = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        q[shift] = f;
        for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= f * b[k];
        uni_trim(a);
        if (!a.empty() && a.size() >= b.size() + shift + 1)
            throw std::logic_error("uni_divmod: no progress");
    }
    uni_trim(q);
    return {q, a};
}

inline UniPoly uni_monic(UniPoly p) {
    if (p.empty()) return p;
    const Rat lead = p.back();
    for (Rat& c : p) c /= lead;
    return p;
}

inline UniPoly uni_gcd(UniPoly a, UniPoly b) {
    uni_trim(a);
    uni_trim(b);
    while (!b.empty()) {
        UniPoly r = uni_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return uni_monic(a);
}

inline UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
    if (a.empty() || b.empty()) return {};
    UniPoly out(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    uni_trim(out);
    return out;
}

inline UniPoly uni_sub(UniPoly a, const UniPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rat(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    uni_trim(a);
    return a;
}

/// Half-extended gcd: (g, s) with g = gcd(a, b) monic and s a = g (mod b).
inline std::pair<UniPoly, UniPoly> uni_half_ext_gcd(UniPoly a, UniPoly b) {
    uni_trim(a);
    uni_trim(b);
    UniPoly r0 = std::move(a), r1 = std::move(b);
    UniPoly s0{Rat(1)}, s1{};
    while (!r1.empty()) {
        auto [q, r] = uni_divmod(r0, r1);
        UniPoly s2 = uni_sub(s0, uni_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.empty()) return {r0, s0};
    const Rat lead = r0.back();
    for (Rat& c : r0) c /= lead;
    for (Rat& c : s0) c /= lead;
    return {r0, s0};
}

/// Sign of p at x: -1, 0, +1.
inline int uni_sign_at(const UniPoly& p, const Rat& x) {
    const Rat v = uni_eval(p, x);
    return v == 0 ? 0 : (v > 0 ? 1 : -1);
}

/// Sturm chain of p.
inline std::vector<UniPoly> sturm_chain(const UniPoly& p) {
    std::vector<UniPoly> chain;
    UniPoly a = p;
    uni_trim(a);
    if (a.empty()) return chain;
    chain.push_back(a);
    UniPoly b = uni_derivative(a);
    while (!b.empty()) {
        chain.push_back(b);
        UniPoly r = uni_divmod(a, b).second;
        for (Rat& c : r) c = -c;
        a = std::move(b);
        b = std::move(r);
    }
    return chain;
}

/// Number of sign changes of the chain at x.
inline int sturm_changes(const std::vector<UniPoly>& chain, const Rat& x) {
    int changes = 0, prev = 0;
    for (const UniPoly& q : chain) {
        const int s = uni_sign_at(q, x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

/// Count of distinct real roots of squarefree p in the half-open interval
/// (a, b].
inline int sturm_count(const std::vector<UniPoly>& chain, const Rat& a,
                       const Rat& b) {
    return sturm_changes(chain, a) - sturm_changes(chain, b);
}

/// Simplest rational (smallest denominator, then smallest numerator) in the
/// closed interval [a, b], by Stern-Brocot descent.
inline Rat simplest_rational_in(const Rat& a, const Rat& b) {
    if (a > b) throw std::invalid_argument("simplest_rational_in: empty");
    if (a <= 0 && 0 <= b) return Rat(0);
    if (b < 0) return -simplest_rational_in(-b, -a);
    // 0 < a <= b
    mpz_class fa = a.get_num() / a.get_den();  // floor for positive a
    Rat fl(fa);
    if (fl >= a) return fl;  // a is a positive integer
    if (fl + 1 <= b) return fl + 1;
    return fl + 1 / simplest_rational_in(1 / (b - fl), 1 / (a - fl));
}

struct RootReport {
    /// Rational roots as finite values x with p(x) = 0, sorted ascending.
    std::vector<Rat> roots;
    std::vector<int> multiplicities;  // parallel to roots
    /// Degree of the remaining factor with no rational root (0 if fully
    /// split), plus degrees of its squarefree layers for diagnostics.
    int leftover_degree = 0;
    std::vector<int> leftover_squarefree_degrees;
};

/// All rational roots of p with multiplicities, exactly. Irrational real and
/// complex roots are left in the remainder, whose degree is reported.
inline RootReport rational_roots(UniPoly p) {
    uni_trim(p);
    RootReport out;
    if (p.empty()) throw std::invalid_argument("rational_roots: zero poly");
    // Squarefree part for isolation.
    UniPoly sf = p;
    {
        const UniPoly g = uni_gcd(p, uni_derivative(p));
        if (uni_deg(g) > 0) sf = uni_divmod(p, g).first;
    }
    const std::vector<UniPoly> chain = sturm_chain(sf);
    // Cauchy bound: all real roots lie in (-M, M).
    Rat m(0);
    for (std::size_t k = 0; k + 1 < sf.size(); ++k) {
        Rat q = sf[k] / sf.back();
        if (q < 0) q = -q;
        if (q > m) m = q;
    }
    const Rat bound = m + 1;
    // Isolate roots of sf by bisection, then recognize rational ones.
    std::vector<std::pair<Rat, Rat>> stack{{-bound, bound}};
    std::vector<Rat> found;
    while (!stack.empty()) {
        auto [a, b] = stack.back();
        stack.pop_back();
        const int count = sturm_count(chain, a, b);
        if (count == 0) continue;
        if (count > 1) {
            // Half-open intervals (a, mid], (mid, b] partition (a, b], so a
            // root at mid is picked up by the left piece's endpoint check.
            const Rat mid = (a + b) / 2;
            stack.push_back({a, mid});
            stack.push_back({mid, b});
            continue;
        }
        // Exactly one root in (a, b]; shrink and test the simplest rational.
        Rat lo = a, hi = b;
        bool recognized = false;
        for (int iter = 0; iter < 128; ++iter) {
            if (uni_eval(sf, hi) == 0) {
                found.push_back(hi);
                recognized = true;
                break;
            }
            // The target root lies in (lo, hi]; lo itself may be a root that
            // belongs to the neighboring interval, so reject cand == lo.
            const Rat cand = simplest_rational_in(lo, hi);
            if (cand > lo && uni_eval(sf, cand) == 0) {
                found.push_back(cand);
                recognized = true;
                break;
            }
            const Rat mid = (lo + hi) / 2;
            if (uni_eval(sf, mid) == 0) {
                found.push_back(mid);
                recognized = true;
                break;
            }
            if (sturm_count(chain, lo, mid) == 1)
                hi = mid;
            else
                lo = mid;
        }
        (void)recognized;  // unrecognized => irrational, stays in leftover
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    // Multiplicities by repeated exact division of the original p.
    for (const Rat& r : found) {
        int mult = 0;
        while (true) {
            const UniPoly lin{-r, Rat(1)};
            auto [q, rem] = uni_divmod(p, lin);
            if (!rem.empty()) break;
            p = q;
            ++mult;
        }
        out.roots.push_back(r);
        out.multiplicities.push_back(mult);
    }
    out.leftover_degree = std::max(uni_deg(p), 0);
    // Squarefree decomposition degrees of the leftover, as a diagnostic.
    UniPoly rest = p;
    while (uni_deg(rest) > 0) {
        const UniPoly g = uni_gcd(rest, uni_derivative(rest));
        const UniPoly layer = uni_divmod(rest, g).first;
        out.leftover_squarefree_degrees.push_back(uni_deg(layer));
        if (uni_deg(g) <= 0) break;
        rest = g;
    }
    return out;
}

struct BinaryRootReport {
    /// Projective roots (x0 : x1); finite roots stored as (r, 1) sorted by r
    /// ascending, the root at infinity (1, 0) last if present.
    std::vector<std::pair<Rat, Rat>> roots;
    std::vector<int> multiplicities;
    int leftover_degree = 0;
    std::vector<int> leftover_squarefree_degrees;
};

/// Rational projective roots of a binary form.
inline BinaryRootReport binary_rational_roots(const HomogPoly& f) {
    if (f.is_zero())
        throw std::invalid_argument("binary_rational_roots: zero form");
    const RatVec c = binary_coeffs(f);
    const int d = static_cast<int>(c.size()) - 1;
    // f = sum c_k x0^k x1^(d-k). Setting x1 = 1 gives p(x) of degree
    // k_max; the deficit d - k_max is the multiplicity of (1 : 0).
    UniPoly p(c.begin(), c.end());
    uni_trim(p);
    const int inf_mult = d - uni_deg(p);
    RootReport finite = rational_roots(p);
    BinaryRootReport out;
    for (std::size_t i = 0; i < finite.roots.size(); ++i) {
        out.roots.emplace_back(finite.roots[i], Rat(1));
        out.multiplicities.push_back(finite.multiplicities[i]);
    }
    if (inf_mult > 0) {
        out.roots.emplace_back(Rat(1), Rat(0));
        out.multiplicities.push_back(inf_mult);
    }
    out.leftover_degree = finite.leftover_degree;
    out.leftover_squarefree_degrees = finite.leftover_squarefree_degrees;
    return out;
}

// ---------------------------------------------------------------------------
// Resultants for ternary elimination.
// ---------------------------------------------------------------------------

/// Resultant of f and g with respect to variable `var`: the determinant of
/// the Sylvester matrix whose entries are binary forms in the remaining two
/// variables. Zero if either polynomial does not involve `var` ... the caller
/// must handle degenerate degrees; here the degrees in `var` are taken as the
/// actual maximal exponents.
inline HomogPoly resultant(const HomogPoly& f, const HomogPoly& g, int var) {
    const auto v = static_cast<std::size_t>(var);
    auto coeffs_in = [&](const HomogPoly& p) {
        int dv = 0;
        for (const auto& [e, c] : p.terms())
            dv = std::max(dv, e[v]);
        std::vector<HomogPoly> cs(static_cast<std::size_t>(dv) + 1);
        for (const auto& [e, c] : p.terms()) {
            HomogPoly::Exp r = e;
            const int k = r[v];
            r[v] = 0;
            cs[static_cast<std::size_t>(k)] += HomogPoly::monomial(c, r);
        }
        return cs;
    };
    const auto fc = coeffs_in(f), gc = coeffs_in(g);
    const int df = static_cast<int>(fc.size()) - 1;
    const int dg = static_cast<int>(gc.size()) - 1;
    if (df <= 0 && dg <= 0)
        throw std::invalid_argument("resultant: variable absent from both");
    if (df <= 0 || dg <= 0) {
        // Res(constant-in-var c, g) = c^{deg g}.
        const auto& cs = (df <= 0) ? fc : gc;
        const int other = (df <= 0) ? dg : df;
        HomogPoly r(1);
        for (int k = 0; k < other; ++k) r = r * cs[0];
        return r;
    }
    const std::size_t n = static_cast<std::size_t>(df + dg);
    PolyMatrix syl(n, n);
    for (int row = 0; row < dg; ++row)
        for (int k = 0; k <= df; ++k)
            syl(static_cast<std::size_t>(row),
                static_cast<std::size_t>(row + k)) =
                fc[static_cast<std::size_t>(df - k)];
    for (int row = 0; row < df; ++row)
        for (int k = 0; k <= dg; ++k)
            syl(static_cast<std::size_t>(dg + row),
                static_cast<std::size_t>(row + k)) =
                gc[static_cast<std::size_t>(dg - k)];
    return poly_det(syl);
}

/// GCD of two binary forms (monic in the sense of leading coefficient 1 on
/// the x0 power), via the univariate reduction. Powers of x1 common to both
/// are included.
inline HomogPoly binary_gcd(const HomogPoly& f, const HomogPoly& g) {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    const RatVec fc = binary_coeffs(f), gc = binary_coeffs(g);
    UniPoly pf(fc.begin(), fc.end()), pg(gc.begin(), gc.end());
    uni_trim(pf);
    uni_trim(pg);
    const int f_inf = f.degree() - uni_deg(pf);
    const int g_inf = g.degree() - uni_deg(pg);
    const UniPoly h = uni_gcd(pf, pg);
    const int inf = std::min(f_inf, g_inf);
    // Rebuild as a binary form of degree deg(h) + inf.
    HomogPoly out;
    const int d = uni_deg(h) + inf;
    for (int k = 0; k <= uni_deg(h); ++k)
        out += HomogPoly::monomial(h[static_cast<std::size_t>(k)],
                                   {k, d - k, 0});
    return out;
}

}  // namespace linesect

#endif
