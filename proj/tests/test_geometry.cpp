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
#include <cmath>
#include <random>

#include "doctest.h"
#include "ntsynth/geometry.hpp"

using namespace ntsynth;

namespace {

const double kLambda = 1 + std::sqrt(2.0);

EllipsePairState make_state(double b, double z, double beta, double zeta) {
  auto side = [](double bb, double zz) {
    Real e = sqrt(Real(1) + Real(bb) * Real(bb));
    Real lz = pow(Real(kLambda), Real(zz));
    return Mat2{e / lz, Real(bb), Real(bb), e * lz};
  };
  return {side(b, z), side(beta, zeta)};
}

double up(const Ellipse& e) { return e.uprightness().to_double(); }

}  // namespace

TEST_CASE("one_d_grid listed points") {
  PrecisionScope p(128);
  auto sols = one_d_grid(Real(0), Real(9), Real(-1), Real(1));
  std::vector<ZRoot2> expect = {{0, 0}, {1, 0}, {1, 1}, {2, 1},
                                {2, 2}, {3, 2}, {4, 3}};
  CHECK(sols == expect);
  // 5 + 3 sqrt2 is just beyond 9
  CHECK(ZRoot2(5, 3).certify().lo() > Real(9));
}

TEST_CASE("one_d_grid agrees with direct search") {
  PrecisionScope p(128);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> c(-20, 20), w(0.01, 6);
  for (int i = 0; i < 200; ++i) {
    double x0 = c(rng), y0 = c(rng);
    double x1 = x0 + w(rng), y1 = y0 + w(rng);
    auto sols = one_d_grid(Real(x0), Real(x1), Real(y0), Real(y1));
    // a = (u + u.)/2, b = (u - u.)/(2 sqrt2)
    std::vector<ZRoot2> brute;
    for (long a = -60; a <= 60; ++a) {
      for (long b = -60; b <= 60; ++b) {
        double u = a + b * std::sqrt(2.0), v = a - b * std::sqrt(2.0);
        if (u >= x0 && u <= x1 && v >= y0 && v <= y1) brute.emplace_back(a, b);
      }
    }
    std::sort(brute.begin(), brute.end());
    CHECK(sols == brute);
  }
}

TEST_CASE("uprightness") {
  PrecisionScope p(128);
  Disk unit({Real(0), Real(0)}, Interval(1));
  CHECK(std::abs(uprightness(unit).to_double() - M_PI / 4) < 1e-12);
  Rectangle r(Real(-1), Real(3), Real(0.5), Real(2));
  CHECK(std::abs(uprightness(r).to_double() - 1) < 1e-12);
  CHECK_THROWS(uprightness(Rectangle(Real(0), Real(0), Real(0), Real(1))));

  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u01(0, 1);
  for (int i = 0; i < 5; ++i) {
    double a = 0.5 + 3 * u01(rng), d = 0.5 + 3 * u01(rng);
    double b = (u01(rng) * 2 - 1) * 0.95 * std::sqrt(a * d);
    Ellipse e{{Real(a), Real(b), Real(b), Real(d)}, {Real(0), Real(0)}};
    Box box = e.bounding_box();
    double bx0 = box.x0.to_double(), bx1 = box.x1.to_double();
    double by0 = box.y0.to_double(), by1 = box.y1.to_double();
    int inside = 0, n = 400000;
    for (int s = 0; s < n; ++s) {
      double x = bx0 + (bx1 - bx0) * u01(rng), y = by0 + (by1 - by0) * u01(rng);
      inside += a * x * x + 2 * b * x * y + d * y * y <= 1;
    }
    double mc = static_cast<double>(inside) / n;
    CHECK(std::abs(mc - up(e)) / up(e) < 0.01);
  }
}

TEST_CASE("enclosing ellipse") {
  PrecisionScope p(128);
  Rectangle sq(Real(-1), Real(1), Real(-1), Real(1));
  Ellipse e = enclosing_ellipse(sq);
  CHECK(std::abs(e.center.x.to_double()) < 1e-12);
  CHECK(std::abs(e.center.y.to_double()) < 1e-12);
  // semi-axes sqrt2: D = I/2
  CHECK(std::abs(e.D.a.to_double() - 0.5) < 1e-12);
  CHECK(std::abs(e.D.d.to_double() - 0.5) < 1e-12);
  CHECK(std::abs(e.D.b.to_double()) < 1e-12);
  for (int sx : {-1, 1}) {
    for (int sy : {-1, 1}) {
      ComplexInterval c{Interval(sx), Interval(sy)};
      CHECK(e.contains(c) != Membership::Outside);
    }
  }
  Disk disk({Real(0.3), Real(-2)}, Interval(2));
  Ellipse de = enclosing_ellipse(disk);
  CHECK((de.area() / disk.area()).to_double() <= 2.0);
}

TEST_CASE("tangent lines meet the disk") {
  // |omega^j (1 + omega)|^2 = 2 + sqrt2: the line through that point
  // orthogonal to it touches the circle once.
  for (long prec = 64; prec <= 512; prec += 8) {
    PrecisionScope p(prec);
    Disk disk({Real(0), Real(0)}, Interval(2) + Interval::sqrt2());
    for (long j = 0; j < 8; ++j) {
      ComplexInterval c = (ZOmega::omega_pow(j) * ZOmega::delta()).certify();
      // A few ulps outside, as left by rounding in the grid frame.
      Real out = Real(1) + pow(Real(2), Real(8 - prec));
      Vec2 touch{c.re.mid() * out, c.im.mid() * out};
      Vec2 dir{-c.im.mid(), c.re.mid()};
      CAPTURE(prec);
      CAPTURE(j);
      auto t = disk.intersect_line(touch, dir);
      REQUIRE(t.has_value());
      CHECK(std::abs(t->first.to_double()) < 1e-9);
      CHECK(std::abs(t->second.to_double()) < 1e-9);
    }
  }
}

TEST_CASE("to_upright_zi") {
  PrecisionScope p(256);
  Ellipse round{Mat2::identity(), {Real(0), Real(0)}};
  int rounds = -1;
  IntOperator g = to_upright_zi(round, &rounds);
  CHECK(rounds == 0);
  CHECK(g == IntOperator{});

  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u01(0, 1);
  for (int i = 0; i < 50; ++i) {
    // a long thin ellipse with uprightness near 1e-6
    double t = u01(rng) * M_PI, s = 1e6 * (1 + u01(rng));
    Real c = cos(Real(t)), sn = sin(Real(t));
    Real l1(s), l2 = Real(1) / Real(s);
    Mat2 D{l1 * c * c + l2 * sn * sn, (l1 - l2) * c * sn, (l1 - l2) * c * sn,
           l1 * sn * sn + l2 * c * c};
    Ellipse e{D, {Real(0), Real(0)}};
    IntOperator op = to_upright_zi(e);
    CHECK(abs(op.det()) == 1);
    CHECK(up(transform(e, op.to_real())) >= 0.5);
    auto [x, y] = op.apply(3, -7);
    auto [bx, by] = op.inverse().apply(x, y);
    CHECK(bx == 3);
    CHECK(by == -7);
  }
}

TEST_CASE("grid operators") {
  for (const auto& g : {GridOperator::R(), GridOperator::A(), GridOperator::B(),
                        GridOperator::K(), GridOperator::X(), GridOperator::Z(),
                        GridOperator::A(5), GridOperator::B(-3)}) {
    CHECK(g.satisfies_grid_conditions());
    CHECK(g.is_special());
    CHECK(g * g.inverse() == GridOperator::identity());
    // maps Z[omega] into itself
    ZOmega u(1, -2, 3, 5);
    ZOmega v = g.apply(u);
    CHECK(g.inverse().apply(v) == u);
  }
}

TEST_CASE("step constants verify") {
  PrecisionScope p(128);
  StepConstants c;
  for (const auto& chk : c.verify()) {
    INFO(chk.name);
    CHECK(chk.ok);
  }
}

TEST_CASE("step applies R near the diagonal") {
  PrecisionScope p(128);
  StepConstants c;
  EllipsePairState s = make_state(3.0, 0.1, 3.0, 0.2);
  REQUIRE(s.skew() >= c.P);
  GridOperator g = step(s, c);
  CHECK(g == GridOperator::R());
  CHECK(s.act(g).skew() <= c.Q * s.skew());
  CHECK_THROWS(step(make_state(1.0, 0, 1.0, 0), c));
}

TEST_CASE("to_upright_pair") {
  PrecisionScope p(256);
  StepConstants c;
  Ellipse disk{Mat2::identity(), {Real(0), Real(0)}};
  int steps = -1;
  GridOperator g = to_upright_pair(disk, disk, c, &steps);
  CHECK(steps == 0);
  CHECK(g == GridOperator::identity());

  double bound = M_PI / (4 * std::sqrt(16.0));
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int i = 0; i < 100; ++i) {
    EllipsePairState s = make_state(200 * u(rng), 8 * u(rng), 200 * u(rng), 8 * u(rng));
    Ellipse ea{s.D, {Real(0), Real(0)}}, eb{s.Delta, {Real(0), Real(0)}};
    GridOperator h = to_upright_pair(ea, eb, c);
    CHECK(up(transform(ea, h.to_real())) >= bound);
    CHECK(up(transform(eb, h.bullet().to_real())) >= bound);
  }
}
