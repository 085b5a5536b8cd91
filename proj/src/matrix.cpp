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

#include "ntsynth/matrix.hpp"

#include <sstream>

namespace ntsynth {

namespace {

// sqrt(base)^e as an interval.
Interval radical_power(long base, int e) {
  Interval r(1);
  Interval b(base);
  for (int i = 0; i < e / 2; ++i) r = r * b;
  if (e % 2) r = r * (base == 2 ? Interval::sqrt2() : Interval::sqrt5());
  return r;
}

}  // namespace

// ----------------------------------------------------------------- TMatrix

TMatrix::TMatrix() : m{ZOmega(1), ZOmega(0), ZOmega(0), ZOmega(1)}, k(0) {}

TMatrix::TMatrix(std::array<ZOmega, 4> entries, int k_)
    : m(std::move(entries)), k(k_) {
  normalize();
}

void TMatrix::normalize() {
  bool zero = true;
  for (const auto& e : m) zero = zero && e.is_zero();
  if (zero) {
    k = 0;
    return;
  }
  while (k > 0) {
    for (const auto& e : m) {
      if (!e.divisible_by_sqrt2()) return;
    }
    for (auto& e : m) e = e.div_sqrt2();
    --k;
  }
  while (k < 0) {
    for (auto& e : m) e *= ZOmega(ZRoot2::sqrt2());
    ++k;
  }
}

TMatrix TMatrix::adjoint() const {
  return TMatrix({m[0].dagger(), m[2].dagger(), m[1].dagger(), m[3].dagger()},
                 k);
}

bool TMatrix::is_unitary() const {
  TMatrix p = adjoint() * *this;
  return p == TMatrix::identity();
}

ZOmega TMatrix::det_numerator() const { return m[0] * m[3] - m[1] * m[2]; }

ComplexInterval TMatrix::entry(int idx) const {
  ComplexInterval c = m[idx].certify();
  Interval s = radical_power(2, k);
  return {c.re / s, c.im / s};
}

std::string TMatrix::to_string() const {
  std::ostringstream os;
  os << "1/sqrt2^" << k << " [" << m[0] << " " << m[1] << "; " << m[2] << " "
     << m[3] << "]";
  return os.str();
}

TMatrix operator*(const TMatrix& x, const TMatrix& y) {
  return TMatrix({x.m[0] * y.m[0] + x.m[1] * y.m[2],
                  x.m[0] * y.m[1] + x.m[1] * y.m[3],
                  x.m[2] * y.m[0] + x.m[3] * y.m[2],
                  x.m[2] * y.m[1] + x.m[3] * y.m[3]},
                 x.k + y.k);
}

// ----------------------------------------------------------------- VMatrix

VMatrix::VMatrix()
    : m{GaussInt(1), GaussInt(0), GaussInt(0), GaussInt(1)}, k(0), l(0) {}

VMatrix::VMatrix(std::array<GaussInt, 4> entries, int k_, int l_)
    : m(std::move(entries)), k(k_), l(l_) {
  normalize();
}

void VMatrix::normalize() {
  bool zero = true;
  for (const auto& e : m) zero = zero && e.is_zero();
  if (zero) {
    k = l = 0;
    return;
  }
  auto all_divisible = [&](long d) {
    for (const auto& e : m) {
      if (!e.divisible_by(d)) return false;
    }
    return true;
  };
  while (k >= 2 && all_divisible(2)) {
    for (auto& e : m) e = GaussInt(e.a / 2, e.b / 2);
    k -= 2;
  }
  while (l >= 2 && all_divisible(5)) {
    for (auto& e : m) e = GaussInt(e.a / 5, e.b / 5);
    l -= 2;
  }
}

VMatrix VMatrix::adjoint() const {
  return VMatrix({m[0].dagger(), m[2].dagger(), m[1].dagger(), m[3].dagger()},
                 k, l);
}

bool VMatrix::is_unitary() const {
  VMatrix p = adjoint() * *this;
  return p == VMatrix::identity();
}

GaussInt VMatrix::det_numerator() const { return m[0] * m[3] - m[1] * m[2]; }

bool VMatrix::det_is_power_of_i() const {
  GaussInt d = det_numerator();
  Integer s = 1;
  for (int i = 0; i < k; ++i) s *= 2;
  for (int i = 0; i < l; ++i) s *= 5;
  return d == GaussInt(s) || d == GaussInt(-s) || d == GaussInt(0, s) ||
         d == GaussInt(0, -s);
}

ComplexInterval VMatrix::entry(int idx) const {
  ComplexInterval c = m[idx].certify();
  Interval s = radical_power(2, k) * radical_power(5, l);
  return {c.re / s, c.im / s};
}

std::string VMatrix::to_string() const {
  std::ostringstream os;
  os << "1/(sqrt2^" << k << " sqrt5^" << l << ") [" << m[0] << " " << m[1]
     << "; " << m[2] << " " << m[3] << "]";
  return os.str();
}

VMatrix operator*(const VMatrix& x, const VMatrix& y) {
  return VMatrix({x.m[0] * y.m[0] + x.m[1] * y.m[2],
                  x.m[0] * y.m[1] + x.m[1] * y.m[3],
                  x.m[2] * y.m[0] + x.m[3] * y.m[2],
                  x.m[2] * y.m[1] + x.m[3] * y.m[3]},
                 x.k + y.k, x.l + y.l);
}

int denominator_exponent(const ZOmega& a, int k) {
  if (a.is_zero()) return 0;
  ZOmega x = a;
  while (k > 0 && x.divisible_by_sqrt2()) {
    x = x.div_sqrt2();
    --k;
  }
  return k;
}

std::pair<int, int> denominator_exponents(const GaussInt& a, const GaussInt& b,
                                          int k, int l) {
  if (a.is_zero() && b.is_zero()) return {0, 0};
  GaussInt x = a, y = b;
  while (k >= 2 && x.divisible_by(2) && y.divisible_by(2)) {
    x = GaussInt(x.a / 2, x.b / 2);
    y = GaussInt(y.a / 2, y.b / 2);
    k -= 2;
  }
  while (l >= 2 && x.divisible_by(5) && y.divisible_by(5)) {
    x = GaussInt(x.a / 5, x.b / 5);
    y = GaussInt(y.a / 5, y.b / 5);
    l -= 2;
  }
  return {k, l};
}

}  // namespace ntsynth
