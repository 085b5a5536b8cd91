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

#include "doctest.h"
#include "ntsynth/circuit.hpp"
#include "ntsynth/matrix.hpp"
#include "ntsynth/rings.hpp"

using namespace ntsynth;

namespace {

std::mt19937_64 rng(20260415);

Integer coef(long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  return d(rng);
}

ZOmega random_zomega(long bound) {
  return {coef(bound), coef(bound), coef(bound), coef(bound)};
}

ZRoot2 random_zroot2(long bound) { return {coef(bound), coef(bound)}; }

}  // namespace

TEST_CASE("bullet and dagger") {
  CHECK(ZRoot2(1, 1).bullet() == ZRoot2(1, -1));
  CHECK(ZRoot2(7).bullet() == ZRoot2(7));
  CHECK(ZOmega(7).bullet() == ZOmega(7));
  CHECK(GaussInt(3, 4).dagger() == GaussInt(3, -4));
  CHECK(ZOmega::omega().dagger() == ZOmega(0, 0, 0, -1));
  CHECK(ZOmega::omega().dagger() == ZOmega::omega_pow(7));
}

TEST_CASE("norms") {
  CHECK(ZRoot2(1, 1).norm() == -1);
  CHECK(ZOmega(1, 1, 0, 0).norm() == 2);
  CHECK(GaussInt(2, 1).norm() == 5);
  CHECK(ZOmega(0).norm() == 0);
  CHECK(ZOmega::omega().norm() == 1);
}

TEST_CASE("homomorphism laws on large random elements") {
  for (int i = 0; i < 500; ++i) {
    ZOmega x = random_zomega(1000000), y = random_zomega(1000000);
    CHECK((x * y).bullet() == x.bullet() * y.bullet());
    CHECK((x + y).bullet() == x.bullet() + y.bullet());
    CHECK((x * y).dagger() == x.dagger() * y.dagger());
    CHECK(x.bullet().bullet() == x);
    CHECK(x.dagger().dagger() == x);
    CHECK(x.bullet().dagger() == x.dagger().bullet());
    CHECK((x * y).norm() == x.norm() * y.norm());
    // product form of the norm
    ZOmega p = x.dagger().bullet() * x.dagger() * x.bullet() * x;
    CHECK(p == ZOmega(x.norm(), 0, 0, 0));
    ZRoot2 a = random_zroot2(1000000), b = random_zroot2(1000000);
    CHECK((a * b).norm() == a.norm() * b.norm());
    CHECK((a * b).bullet() == a.bullet() * b.bullet());
  }
}

TEST_CASE("units have norm +-1") {
  for (long n = -6; n <= 6; ++n) {
    CHECK(abs(ZRoot2::lambda_pow(n).norm()) == 1);
    CHECK(ZOmega::omega_pow(n).norm() == 1);
  }
  CHECK(ZRoot2::lambda().bullet() == -ZRoot2::lambda_inv());
  CHECK(ZRoot2::lambda() * ZRoot2::lambda_inv() == ZRoot2(1));
  CHECK(ZOmega::delta().dagger() * ZOmega::delta() == ZOmega(ZRoot2(2, 1)));
  CHECK_NOTHROW(RingConstants::checked());
}

TEST_CASE("decomposition recomposes") {
  ZOmegaDecomposition w = decompose_zomega(ZOmega::omega());
  CHECK(w.shifted);
  CHECK(w.re.is_zero());
  CHECK(w.im.is_zero());
  // b - d even
  ZOmegaDecomposition e = decompose_zomega(ZOmega(3, 5, 7, 1));
  CHECK_FALSE(e.shifted);
  CHECK(e.re == ZRoot2(3, 2));
  CHECK(e.im == ZRoot2(7, 3));
  for (int i = 0; i < 1000; ++i) {
    ZOmega x = random_zomega(1000);
    CHECK(decompose_zomega(x).recompose() == x);
  }
}

TEST_CASE("fixed points of the automorphisms") {
  for (int i = 0; i < 200; ++i) {
    ZRoot2 r = random_zroot2(50);
    ZOmega x(r);
    CHECK(x.dagger() == x);
    CHECK(x.to_zroot2().has_value());
    GaussInt g(coef(50), coef(50));
    ZOmega y(g);
    CHECK(y.bullet() == y);
    CHECK(y.to_gauss().has_value());
    ZOmega z = random_zomega(50);
    bool real = z.dagger() == z;
    CHECK(real == z.to_zroot2().has_value());
  }
}

TEST_CASE("discreteness of Z[sqrt2]") {
  PrecisionScope p(128);
  for (int i = 0; i < 500; ++i) {
    ZRoot2 a = random_zroot2(1000), b = random_zroot2(1000);
    if (a == b) continue;
    ZRoot2 d = a - b;
    Interval prod = d.certify() * d.bullet().certify();
    CHECK((prod.lo() >= Real(1) || prod.hi() <= Real(-1)));
  }
}

TEST_CASE("certify") {
  PrecisionScope p(64);
  Interval x = ZRoot2(1, 1).certify();
  CHECK(std::abs(x.mid().to_double() - (1 + std::sqrt(2.0))) < 1e-15);
  CHECK(x.contains((Real(1) + Real::sqrt2())));
  CHECK(x.width() <= Real(std::ldexp(1.0, -60)));
  Interval z = ZRoot2(0).certify();
  CHECK(z.lo().is_zero());
  CHECK(z.hi().is_zero());
}

TEST_CASE("denominator exponents") {
  CHECK(TMatrix::identity().k == 0);
  CHECK(VMatrix::identity().k == 0);
  CHECK(VMatrix::identity().l == 0);
  TMatrix h = gate_matrix_t(Gate{GateKind::H});
  CHECK(h.k == 1);
  CHECK(denominator_exponent(ZOmega(0), 5) == 0);
  CHECK(denominator_exponent(ZOmega(2), 2) == 0);
  CHECK(denominator_exponent(ZOmega(2), 3) == 1);
}
