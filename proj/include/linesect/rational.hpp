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

#ifndef LINESECT_RATIONAL_HPP
#define LINESECT_RATIONAL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace linesect {

/// Exact rational scalar. Always canonical: lowest terms, positive denominator.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// Serialize as "p/q", or "p" when the denominator is 1.
inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

/// Deterministic, platform-independent PRNG (splitmix64). std:: distributions
/// are implementation-defined, so all sampling goes through this.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [lo, hi], inclusive.
    long uniform(long lo, long hi) {
        if (lo > hi) throw std::invalid_argument("uniform: empty range");
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next() % span);
    }

    /// Derive an independent child stream (for concurrent cell evaluation).
    Rng spawn() { return Rng(next() ^ 0xd1b54a32d192ed03ULL); }

  private:
    std::uint64_t state_;
};

}  // namespace linesect

#endif
