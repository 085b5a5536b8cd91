// Copyright 2026 The ntsynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "ntsynth/rings.hpp"

namespace ntsynth {

/** Seeded deterministic random stream. */
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed = 0) : seed_(seed), engine_(seed) {}
  std::uint64_t seed() const { return seed_; }
  std::uint64_t next() { return engine_(); }
  /** Uniform integer in [lo, hi]. */
  Integer uniform(const Integer& lo, const Integer& hi);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

struct Factorization {
  std::vector<std::pair<Integer, int>> factors;  // sorted by prime
  bool complete = true;
  std::uint64_t effort_spent = 0;
  /** Unfactored remainder when incomplete. */
  Integer remainder = 1;
};

inline constexpr std::uint64_t kDefaultFactoringEffort = std::uint64_t{1} << 22;

bool is_probable_prime(const Integer& n, RandomSource& rng);
/** Deterministic for n < 2^64; random extra rounds from a fixed stream above. */
bool is_prime(const Integer& n);

Factorization factor_bounded(const Integer& n, std::uint64_t effort,
                             RandomSource& rng);

/** r with r^2 = a (mod p) for prime p, when a is a quadratic residue. */
std::optional<Integer> sqrt_mod(const Integer& a, const Integer& p);

/** Euclidean division with |N(r)| < |N(y)|. */
std::pair<GaussInt, GaussInt> divmod(const GaussInt& x, const GaussInt& y);
std::pair<ZRoot2, ZRoot2> divmod(const ZRoot2& x, const ZRoot2& y);
std::pair<ZOmega, ZOmega> divmod(const ZOmega& x, const ZOmega& y);

/** Greatest common divisor up to units; throws if both are zero. */
GaussInt gcd_ring(const GaussInt& x, const GaussInt& y);
ZRoot2 gcd_ring(const ZRoot2& x, const ZRoot2& y);
ZOmega gcd_ring(const ZOmega& x, const ZOmega& y);

/** alpha with alpha^dagger alpha = m; throws if fact is incomplete. */
std::optional<GaussInt> solve_norm_zi(const Integer& m,
                                      const Factorization& fact);

/** t with t^dagger t = xi; fact must factor xi^bullet xi completely. */
std::optional<ZOmega> solve_norm_zomega(const ZRoot2& xi,
                                        const Factorization& fact);

}  // namespace ntsynth
