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

#ifndef LINESECT_DIOPHANTINE_HPP
#define LINESECT_DIOPHANTINE_HPP

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "linesect/matrix.hpp"
#include "linesect/rational.hpp"

namespace linesect {
namespace detail {

inline bool is_probable_prime(const mpz_class& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

/// Append the prime factorization of n > 1 (with multiplicity) to primes,
/// by trial division plus Pollard rho for large cofactors.
inline void factor_into(mpz_class n, std::vector<mpz_class>& primes) {
    if (n <= 1) return;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
        while (n % p == 0) {
            primes.push_back(p);
            n /= p;
        }
    }
    long d = 17;
    while (n > 1 && d <= 100000 && mpz_class(d) * d <= n) {
        while (n % d == 0) {
            primes.push_back(d);
            n /= d;
        }
        d += 2;
    }
    if (n == 1) return;
    if (mpz_class(d) * d > n || is_probable_prime(n)) {
        primes.push_back(n);
        return;
    }
    // Pollard rho for the remaining composite.
    for (mpz_class c(1);; c += 1) {
        mpz_class x(2), y(2), g(1);
        while (g == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            mpz_class diff = x - y;
            if (diff < 0) diff = -diff;
            if (diff == 0) {
                g = n;  // cycle without a factor; retry with the next c
                break;
            }
            mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (g != n) {
            factor_into(g, primes);
            factor_into(n / g, primes);
            return;
        }
    }
}

/// x with x^2 = a (mod p) for an odd prime p, or nullopt.
inline std::optional<mpz_class> sqrt_mod_prime(mpz_class a,
                                               const mpz_class& p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return mpz_class(0);
    if (mpz_legendre(a.get_mpz_t(), p.get_mpz_t()) != 1) return std::nullopt;
    auto powm = [&](const mpz_class& base, const mpz_class& e) {
        mpz_class r;
        mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(),
                 p.get_mpz_t());
        return r;
    };
    if (p % 4 == 3) return powm(a, (p + 1) / 4);
    // Tonelli-Shanks.
    mpz_class q = p - 1;
    unsigned long s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    mpz_class z(2);
    while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) z += 1;
    mpz_class m(s), c = powm(z, q), t = powm(a, q), r = powm(a, (q + 1) / 2);
    while (t != 1) {
        mpz_class tt = t;
        mpz_class i(0);
        while (tt != 1) {
            tt = tt * tt % p;
            i += 1;
        }
        mpz_class b = c;
        for (mpz_class j = 0; j < m - i - 1; j += 1) b = b * b % p;
        m = i;
        c = b * b % p;
        t = t * c % p;
        r = r * b % p;
    }
    return r;
}

/// n = s * f^2 with s squarefree (sign carried by s).
inline std::pair<mpz_class, mpz_class> squarefree_part(const mpz_class& n) {
    if (n == 0) return {mpz_class(0), mpz_class(1)};
    std::vector<mpz_class> primes;
    factor_into(abs(n), primes);
    std::sort(primes.begin(), primes.end());
    mpz_class s(n < 0 ? -1 : 1), f(1);
    for (std::size_t i = 0; i < primes.size();) {
        std::size_t j = i;
        while (j < primes.size() && primes[j] == primes[i]) ++j;
        const std::size_t count = j - i;
        for (std::size_t k = 0; k < count / 2; ++k) f *= primes[i];
        if (count % 2 == 1) s *= primes[i];
        i = j;
    }
    return {s, f};
}

using IsoTriple = std::array<Rat, 3>;

inline std::optional<IsoTriple> isotropic_normalized(const mpz_class& a0,
                                                     const mpz_class& b0,
                                                     const mpz_class& c0,
                                                     int depth);

/// Nontrivial rational solution of a x^2 + b y^2 + c z^2 = 0 for arbitrary
/// nonzero integers: normalize (common gcd, square parts, pairwise
/// coprimality) and delegate to the Legendre descent.
inline std::optional<IsoTriple> isotropic_general(mpz_class a, mpz_class b,
                                                  mpz_class c, int depth) {
    if (depth > 600)
        throw std::runtime_error("ternary_isotropic: descent depth exceeded");
    const mpz_class g0 = gcd(gcd(abs(a), abs(b)), abs(c));
    a /= g0;
    b /= g0;
    c /= g0;
    // Multipliers undoing the variable substitutions: x_orig = x_new / mx.
    Rat mx(1), my(1), mz(1);
    mpz_class* coef[3] = {&a, &b, &c};
    Rat* mult[3] = {&mx, &my, &mz};
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < 3; ++i) {
            const auto [sf, f] = squarefree_part(*coef[i]);
            if (f != 1) {
                *coef[i] = sf;
                *mult[i] *= Rat(f);
                changed = true;
            }
        }
        // Shared prime of two coefficients: u x^2 + v y^2 + w z^2 with
        // g | u, v becomes (u/g) X^2 + (v/g) Y^2 + (w g) Z^2 after
        // multiplying the equation by g and substituting X = g x, Y = g y.
        const int pairs[3][3] = {{0, 1, 2}, {0, 2, 1}, {1, 2, 0}};
        for (const auto& pr : pairs) {
            const mpz_class share =
                gcd(abs(*coef[pr[0]]), abs(*coef[pr[1]]));
            if (share > 1) {
                *coef[pr[0]] /= share;
                *coef[pr[1]] /= share;
                *coef[pr[2]] *= share;
                *mult[pr[0]] *= Rat(share);
                *mult[pr[1]] *= Rat(share);
                changed = true;
            }
        }
    }
    const auto sol = isotropic_normalized(a, b, c, depth);
    if (!sol) return std::nullopt;
    return IsoTriple{(*sol)[0] / mx, (*sol)[1] / my, (*sol)[2] / mz};
}

/// Legendre descent for squarefree, pairwise coprime, nonzero a, b, c.
inline std::optional<IsoTriple> isotropic_normalized(const mpz_class& a0,
                                                     const mpz_class& b0,
                                                     const mpz_class& c0,
                                                     int depth) {
    if (depth > 600)
        throw std::runtime_error("ternary_isotropic: descent depth exceeded");
    mpz_class a = a0, b = b0, c = c0;
    // Order |a| <= |b| <= |c| and undo the permutation on return.
    std::array<mpz_class*, 3> ptr{&a, &b, &c};
    std::array<int, 3> perm{0, 1, 2};
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (abs(*ptr[j]) < abs(*ptr[i])) {
                std::swap(*ptr[i], *ptr[j]);
                std::swap(perm[i], perm[j]);
            }
    auto unpermute = [&](const IsoTriple& t) {
        IsoTriple out;
        for (int i = 0; i < 3; ++i) out[perm[i]] = t[i];
        return out;
    };
    if ((a > 0) == (b > 0) && (b > 0) == (c > 0))
        return std::nullopt;  // definite form
    if (abs(c) == 1) {
        // All three are +-1 with mixed signs.
        if (a + b == 0) return unpermute({Rat(1), Rat(1), Rat(0)});
        if (a + c == 0) return unpermute({Rat(1), Rat(0), Rat(1)});
        return unpermute({Rat(0), Rat(1), Rat(1)});
    }
    // r^2 = -ab (mod |c|) by CRT over the primes of the squarefree c.
    std::vector<mpz_class> primes;
    factor_into(abs(c), primes);
    mpz_class r(0), modulus(1);
    const mpz_class target = -a * b;
    for (const mpz_class& p : primes) {
        mpz_class rp;
        if (p == 2) {
            rp = ((target % 2) + 2) % 2;
        } else {
            const auto s = sqrt_mod_prime(target, p);
            if (!s) return std::nullopt;  // local obstruction at p
            rp = *s;
        }
        mpz_class inv;
        if (mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(),
                       p.get_mpz_t()) == 0)
            throw std::logic_error("ternary_isotropic: crt failure");
        mpz_class k = ((rp - r) * inv) % p;
        if (k < 0) k += p;
        r += modulus * k;
        modulus *= p;
    }
    r %= abs(c);
    if (2 * r > abs(c)) r -= abs(c);
    const mpz_class t = (r * r + a * b) / c;
    if (t == 0) return unpermute({Rat(r), Rat(a), Rat(0)});
    const auto [c1, m] = squarefree_part(t);
    const auto sub = isotropic_general(a, b, c1, depth + 1);
    if (!sub) return std::nullopt;
    const Rat &x1 = (*sub)[0], &y1 = (*sub)[1], &z1 = (*sub)[2];
    if (z1 == 0) return unpermute({x1, y1, Rat(0)});
    // Composition identity: (a u^2 + b v^2)(s^2 + ab t^2)
    //   = a (u s + b v t)^2 + b (v s - a u t)^2, applied with (s, t) = (r, 1)
    // and r^2 + ab = c * c1 * m^2.
    return unpermute({x1 * Rat(r) + y1 * Rat(b), y1 * Rat(r) - x1 * Rat(a),
                      z1 * Rat(c1) * Rat(m)});
}

}  // namespace detail

/// Nontrivial rational solution of a x^2 + b y^2 + c z^2 = 0, or nullopt
/// when the conic has no rational points.
inline std::optional<std::array<Rat, 3>> ternary_isotropic(const Rat& a,
                                                           const Rat& b,
                                                           const Rat& c) {
    if (a == 0) return std::array<Rat, 3>{Rat(1), Rat(0), Rat(0)};
    if (b == 0) return std::array<Rat, 3>{Rat(0), Rat(1), Rat(0)};
    if (c == 0) return std::array<Rat, 3>{Rat(0), Rat(0), Rat(1)};
    const mpz_class ia = a.get_num() * b.get_den() * c.get_den();
    const mpz_class ib = b.get_num() * a.get_den() * c.get_den();
    const mpz_class ic = c.get_num() * a.get_den() * b.get_den();
    const auto sol = detail::isotropic_general(ia, ib, ic, 0);
    if (!sol) return std::nullopt;
    if ((*sol)[0] == 0 && (*sol)[1] == 0 && (*sol)[2] == 0)
        throw std::logic_error("ternary_isotropic: trivial solution");
    if (a * (*sol)[0] * (*sol)[0] + b * (*sol)[1] * (*sol)[1] +
            c * (*sol)[2] * (*sol)[2] !=
        0)
        throw std::logic_error("ternary_isotropic: verification failed");
    return *sol;
}

/// A rational vector v with t(v) S v = value for a symmetric 2x2 S and a
/// nonzero target value, or nullopt when the conic has no rational points.
inline std::optional<RatVec> represent_value(const RatMatrix& s,
                                             const Rat& value) {
    if (s.rows() != 2 || s.cols() != 2 || s(0, 1) != s(1, 0) || value == 0)
        throw std::invalid_argument("represent_value: bad input");
    const Rat p = s(0, 0), q = s(0, 1), r = s(1, 1);
    auto check = [&](const RatVec& v) -> std::optional<RatVec> {
        if (bilinear(v, s, v) != value)
            throw std::logic_error("represent_value: verification failed");
        return v;
    };
    if (p == 0 && r == 0) {
        if (q == 0) return std::nullopt;
        return check({Rat(1), value / (2 * q)});  // 2 q x y = value
    }
    if (p == 0) {
        // Swap coordinates to put the nonzero diagonal entry first.
        RatMatrix sw(2, 2);
        sw(0, 0) = r;
        sw(0, 1) = sw(1, 0) = q;
        sw(1, 1) = p;
        const auto sub = represent_value(sw, value);
        if (!sub) return std::nullopt;
        return RatVec{(*sub)[1], (*sub)[0]};
    }
    const Rat d = p * r - q * q;
    if (d == 0) {
        // Rank one: p x^2 + 2 q x y + r y^2 = (p x + q y)^2 / p; the value
        // is represented iff value * p is a square.
        const Rat vp = value * p;
        mpz_class num = vp.get_num(), den = vp.get_den();
        if (vp < 0 || mpz_perfect_square_p(num.get_mpz_t()) == 0 ||
            mpz_perfect_square_p(den.get_mpz_t()) == 0)
            return std::nullopt;
        mpz_class rn, rd;
        mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
        const Rat root = Rat(rn) / Rat(rd);  // sqrt(value * p)
        return check({root / p, Rat(0)});
    }
    // Substitute X = p x + q y: X^2 + d y^2 - p * value * z^2 = 0; a point
    // with z != 0 gives back v = ((X - q y) / (p z), y / z).
    const auto iso = ternary_isotropic(Rat(1), d, -p * value);
    if (!iso) return std::nullopt;
    auto [X, y, z] = *iso;
    if (z == 0) {
        // Isotropic vector of the binary part; slide along the conic to a
        // point with z != 0 via the reflection w = Q(u) w0 - 2 B(w0, u) u
        // with u = (1, 0, 1). Here X != 0 since d y^2 = -X^2 with d != 0.
        if (X == 0) throw std::logic_error("represent_value: slide failed");
        const Rat qu = Rat(1) - p * value;  // Q(u)
        const Rat bw = X;                   // B(w0, u)
        const Rat x2 = qu * X - 2 * bw;
        const Rat y2 = qu * y;
        const Rat z2 = -2 * bw;
        X = x2;
        y = y2;
        z = z2;
    }
    return check({(X / z - q * (y / z)) / p, y / z});
}

}  // namespace linesect

#endif
