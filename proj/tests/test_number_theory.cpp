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


#include <algorithm>
#include <random>

#include "doctest.h"
#include "ntsynth/number_theory.hpp"

using namespace ntsynth;

namespace {

Integer multiply_back(const Factorization& f) {
  Integer p = 1;
  for (const auto& [q, e] : f.factors) {
    for (int i = 0; i < e; ++i) p *= q;
  }
  return p;
}

Factorization factor(const Integer& n) {
  RandomSource rng(0);
  return factor_bounded(n, kDefaultFactoringEffort, rng);
}

}  // namespace

TEST_CASE("factor_bounded") {
  Factorization f = factor(20);
  CHECK(f.complete);
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0] == std::pair<Integer, int>(2, 2));
  CHECK(f.factors[1] == std::pair<Integer, int>(5, 1));
  Factorization one = factor(1);
  CHECK(one.complete);
  CHECK(one.factors.empty());

  // two 40-bit primes
  RandomSource rng(7);
  for (int i = 0; i < 5; ++i) {
    Integer p, q;
    do p = rng.uniform(Integer(1) << 39, (Integer(1) << 40) - 1);
    while (!is_prime(p));
    do q = rng.uniform(Integer(1) << 39, (Integer(1) << 40) - 1);
    while (!is_prime(q));
    Factorization g = factor(p * q);
    CHECK(g.complete);
    CHECK(multiply_back(g) == p * q);
    for (const auto& [r, e] : g.factors) CHECK(is_prime(r));
  }
}

TEST_CASE("factoring effort limits") {
  // a 160-bit semiprime is out of reach with a tiny budget
  Integer p("1208925819614629174706189");  // 2^80 + 13
  Integer q("1208925819614629174706201");
  RandomSource rng(1);
  Factorization f = factor_bounded(p * q, 100, rng);
  if (!f.complete) {
    CHECK(multiply_back(f) * f.remainder == p * q);
  }
}

TEST_CASE("primality") {
  std::vector<int> small = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
  for (int n = 0; n < 32; ++n) {
    bool expect = std::find(small.begin(), small.end(), n) != small.end();
    CHECK(is_prime(n) == expect);
  }
  CHECK(is_prime(Integer("18446744073709551557")));
  CHECK_FALSE(is_prime(Integer("3215031751")));  // strong pseudoprime to 2,3,5,7
}

TEST_CASE("sqrt_mod") {
  auto r = sqrt_mod(-1, 5);
  REQUIRE(r.has_value());
  CHECK(((*r) * (*r) + 1) % 5 == 0);
  CHECK(sqrt_mod(0, 5) == Integer(0));
  CHECK_FALSE(sqrt_mod(3, 7).has_value());
  // exhaustive residues for a few primes
  for (int p : {3, 5, 7, 13, 17, 41, 97, 113}) {
    for (int a = 0; a < p; ++a) {
      bool residue = false;
      for (int x = 0; x < p; ++x) residue |= (x * x) % p == a;
      auto s = sqrt_mod(a, p);
      CHECK(s.has_value() == residue);
      if (s) CHECK(((*s) * (*s) - a) % p == 0);
    }
  }
}

TEST_CASE("Euclidean division and gcd") {
  GaussInt g = gcd_ring(GaussInt(5), GaussInt(2, 1));
  CHECK(g.norm() == 5);
  CHECK(GaussInt(5).div_exact(g).has_value());
  CHECK(GaussInt(2, 1).div_exact(g).has_value());
  CHECK(gcd_ring(GaussInt(3, 4), GaussInt(0)) == GaussInt(3, 4));
  CHECK_THROWS(gcd_ring(GaussInt(0), GaussInt(0)));

  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(-1000, 1000);
  for (int i = 0; i < 300; ++i) {
    ZOmega x(d(rng), d(rng), d(rng), d(rng)), y(d(rng), d(rng), d(rng), d(rng));
    if (y.is_zero()) continue;
    auto [q, r] = divmod(x, y);
    CHECK(q * y + r == x);
    CHECK(abs(r.norm()) < abs(y.norm()));
    ZOmega c(d(rng), d(rng), d(rng), d(rng));
    if (c.is_zero()) continue;
    ZOmega g = gcd_ring(x * c, y * c);
    CHECK((x * c).div_exact(g).has_value());
    CHECK((y * c).div_exact(g).has_value());
    CHECK(g.div_exact(c).has_value());
    GaussInt a(d(rng), d(rng)), b(d(rng), d(rng));
    if (b.is_zero()) continue;
    auto [gq, gr] = divmod(a, b);
    CHECK(gq * b + gr == a);
    CHECK(gr.norm() < b.norm());
  }
}

TEST_CASE("solve_norm_zi") {
  auto a = solve_norm_zi(5, factor(5));
  REQUIRE(a.has_value());
  CHECK(a->norm() == 5);
  auto z = solve_norm_zi(0, Factorization{});
  REQUIRE(z.has_value());
  CHECK(z->is_zero());
  CHECK_FALSE(solve_norm_zi(3, factor(3)).has_value());
  Factorization incomplete;
  incomplete.complete = false;
  CHECK_THROWS(solve_norm_zi(15, incomplete));
}

TEST_CASE("solve_norm_zomega") {
  auto t = solve_norm_zomega(ZRoot2(2), factor(4));
  REQUIRE(t.has_value());
  CHECK(t->dagger() * (*t) == ZOmega(2));
  auto u = solve_norm_zomega(ZRoot2(2, -1), factor(2));
  REQUIRE(u.has_value());
  CHECK(u->dagger() * (*u) == ZOmega(ZRoot2(2, -1)));
  CHECK((ZOmega(1) - ZOmega::omega()).dagger() * (ZOmega(1) - ZOmega::omega()) ==
        ZOmega(ZRoot2(2, -1)));
  // xi = 1 + 2 sqrt2 has a negative conjugate
  ZRoot2 xi(1, 2);
  CHECK_FALSE(solve_norm_zomega(xi, factor(7)).has_value());
}
