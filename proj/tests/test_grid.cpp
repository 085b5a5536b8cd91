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


#include <cmath>
#include <random>
#include <sstream>

#include "doctest.h"
#include "ntsynth/grid.hpp"
#include "oracles.hpp"

using namespace ntsynth;

namespace {

RegionPtr disk(double cx, double cy, const std::string& r2) {
  return std::make_shared<Disk>(Vec2{Real(cx), Real(cy)}, Interval::from_string(r2));
}

}  // namespace

TEST_CASE("Z[i] disk of radius 1.5") {
  PrecisionScope p(128);
  RegionPtr a = disk(0, 0, "2.25");
  ScaledGridZi g(a);
  auto sols = g.solve(0, 0);
  CHECK(sols.size() == 9);
  CHECK(sols == oracle::brute_zi(*a, 0, 0));
}

TEST_CASE("Z[i] lazy order") {
  PrecisionScope p(128);
  ScaledGridZi g(disk(0.2, 0.1, "0.01"), 3);
  int last_l = 0, last_k = 0, n = 0;
  while (auto s = g.next()) {
    CHECK((s->l > last_l || (s->l == last_l && s->k >= last_k)));
    last_l = s->l;
    last_k = s->k;
    ++n;
  }
  CHECK(n > 0);
  CHECK(last_l <= 3);
}

TEST_CASE("Z[i] at least three solutions") {
  PrecisionScope p(128);
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int k = 0; k <= 3; ++k) {
    for (int i = 0; i < 20; ++i) {
      double r = 1.0 / std::pow(std::sqrt(5.0), k);
      RegionPtr a = disk(u(rng), u(rng), std::to_string(r * r * 1.0000001));
      auto sols = ScaledGridZi(a).solve(k, k);
      CHECK(sols == oracle::brute_zi(*a, k, k));
      INFO("k = " << k);
      CHECK(sols.size() >= 3);
    }
  }
}

TEST_CASE("Z[omega] small region against brute force") {
  PrecisionScope p(128);
  RegionPtr a = disk(0.1, 0.05, "0.09");
  RegionPtr b = std::make_shared<Rectangle>(Real(-1), Real(1), Real(-1), Real(1));
  ScaledGridZOmega g(a, b);
  for (int k = 0; k <= 3; ++k) {
    CHECK(g.solve(k) == oracle::brute_zomega(*a, *b, k));
  }
}

TEST_CASE("Z[omega] at least two solutions") {
  PrecisionScope p(128);
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(-1, 1), w(0.2, 1);
  double c = std::pow(1 + std::sqrt(2.0), 2);
  for (int k = 0; k <= 6; ++k) {
    for (int i = 0; i < 5; ++i) {
      double r = w(rng), big = 1.0000001 * c / (std::ldexp(1.0, k) * r);
      RegionPtr a = disk(u(rng), u(rng), std::to_string(r * r));
      RegionPtr b = disk(u(rng), u(rng), std::to_string(big * big));
      CHECK(ScaledGridZOmega(a, b).solve(k).size() >= 2);
    }
  }
}

TEST_CASE("Z[omega] lazy sequence is ordered by k") {
  PrecisionScope p(128);
  ScaledGridZOmega g(disk(0, 0, "1"), disk(0, 0, "1"), 0, 4);
  int last = 0, n = 0;
  while (auto s = g.next()) {
    CHECK(s->k >= last);
    last = s->k;
    ++n;
  }
  CHECK(n > 0);
}

TEST_CASE("dump format") {
  std::ostringstream os;
  dump_solutions(os, std::vector<ZiSolution>{{1, 2, GaussInt(3, -4)}});
  CHECK(os.str() == "1 2 3 -4\n");
  std::ostringstream os2;
  dump_solutions(os2, std::vector<ZOmegaSolution>{{2, ZOmega(1, 0, -1, 5)}});
  CHECK(os2.str() == "2 1 0 -1 5\n");
}
