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

#include "ntsynth/rings.hpp"

#include <sstream>
#include <stdexcept>

namespace ntsynth {

namespace {

bool divides(const Integer& d, const Integer& x) {
  return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
}

Integer exact_quotient(const Integer& x, const Integer& d) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
  return q;
}

bool is_even(const Integer& x) { return mpz_even_p(x.get_mpz_t()) != 0; }

}  // namespace

// ------------------------------------------------------------------ ZRoot2

ZRoot2 ZRoot2::lambda_pow(long n) {
  ZRoot2 base = n >= 0 ? lambda() : lambda_inv();
  ZRoot2 r(1);
  for (long m = n >= 0 ? n : -n; m > 0; m >>= 1) {
    if (m & 1) r *= base;
    base *= base;
  }
  return r;
}

int ZRoot2::sign() const {
  int sa = sgn(a), sb = sgn(b);
  if (sa >= 0 && sb >= 0) return (sa > 0 || sb > 0) ? 1 : 0;
  if (sa <= 0 && sb <= 0) return -1;
  Integer d = a * a - 2 * b * b;
  return sa > 0 ? sgn(d) : -sgn(d);
}

bool ZRoot2::divisible_by_sqrt2() const { return is_even(a); }

ZRoot2 ZRoot2::div_sqrt2() const {
  if (!divisible_by_sqrt2()) throw std::domain_error("not divisible by sqrt2");
  return {b, exact_quotient(a, 2)};
}

std::optional<ZRoot2> ZRoot2::div_exact(const ZRoot2& d) const {
  Integer n = d.norm();
  if (n == 0) return std::nullopt;
  ZRoot2 p = *this * d.bullet();
  if (!divides(n, p.a) || !divides(n, p.b)) return std::nullopt;
  return ZRoot2(exact_quotient(p.a, n), exact_quotient(p.b, n));
}

Interval ZRoot2::certify() const {
  if (b == 0) return Interval(a);
  return Interval(a) + Interval(b) * Interval::sqrt2();
}

std::string ZRoot2::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

ZRoot2& ZRoot2::operator+=(const ZRoot2& o) {
  a += o.a;
  b += o.b;
  return *this;
}
ZRoot2& ZRoot2::operator-=(const ZRoot2& o) {
  a -= o.a;
  b -= o.b;
  return *this;
}
ZRoot2& ZRoot2::operator*=(const ZRoot2& o) {
  Integer na = a * o.a + 2 * b * o.b;
  Integer nb = a * o.b + b * o.a;
  a = std::move(na);
  b = std::move(nb);
  return *this;
}

// ---------------------------------------------------------------- GaussInt

bool GaussInt::divisible_by(const Integer& n) const {
  return divides(n, a) && divides(n, b);
}

std::optional<GaussInt> GaussInt::div_exact(const GaussInt& d) const {
  Integer n = d.norm();
  if (n == 0) return std::nullopt;
  GaussInt p = *this * d.dagger();
  if (!p.divisible_by(n)) return std::nullopt;
  return GaussInt(exact_quotient(p.a, n), exact_quotient(p.b, n));
}

ComplexInterval GaussInt::certify() const {
  return {Interval(a), Interval(b)};
}

std::string GaussInt::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

GaussInt& GaussInt::operator+=(const GaussInt& o) {
  a += o.a;
  b += o.b;
  return *this;
}
GaussInt& GaussInt::operator-=(const GaussInt& o) {
  a -= o.a;
  b -= o.b;
  return *this;
}
GaussInt& GaussInt::operator*=(const GaussInt& o) {
  Integer na = a * o.a - b * o.b;
  Integer nb = a * o.b + b * o.a;
  a = std::move(na);
  b = std::move(nb);
  return *this;
}

// ------------------------------------------------------------------ ZOmega

ZOmega ZOmega::omega_pow(long n) {
  long m = ((n % 8) + 8) % 8;
  long s = m >= 4 ? -1 : 1;
  m %= 4;
  ZOmega r(0);
  Integer* c[4] = {&r.a0, &r.a1, &r.a2, &r.a3};
  *c[m] = s;
  return r;
}

Integer ZOmega::norm() const {
  Integer s = a0 * a0 + a1 * a1 + a2 * a2 + a3 * a3;
  Integer t = a3 * a2 + a2 * a1 + a1 * a0 - a3 * a0;
  return s * s - 2 * t * t;
}

std::optional<ZRoot2> ZOmega::to_zroot2() const {
  if (a2 != 0 || a1 != -a3) return std::nullopt;
  return ZRoot2(a0, a1);
}

std::optional<GaussInt> ZOmega::to_gauss() const {
  if (a1 != 0 || a3 != 0) return std::nullopt;
  return GaussInt(a0, a2);
}

bool ZOmega::divisible_by_sqrt2() const {
  return is_even(a0 - a2) && is_even(a1 - a3);
}

ZOmega ZOmega::div_sqrt2() const {
  if (!divisible_by_sqrt2()) throw std::domain_error("not divisible by sqrt2");
  // x*sqrt2 = x*(w - w^3), then halve.
  return {exact_quotient(a1 - a3, 2), exact_quotient(a0 + a2, 2),
          exact_quotient(a1 + a3, 2), exact_quotient(a2 - a0, 2)};
}

std::optional<ZOmega> ZOmega::div_exact(const ZOmega& d) const {
  Integer n = d.norm();
  if (n == 0) return std::nullopt;
  ZOmega db = d.bullet();
  ZOmega p = *this * d.dagger() * db * db.dagger();
  if (!divides(n, p.a0) || !divides(n, p.a1) || !divides(n, p.a2) ||
      !divides(n, p.a3)) {
    return std::nullopt;
  }
  return ZOmega(exact_quotient(p.a0, n), exact_quotient(p.a1, n),
                exact_quotient(p.a2, n), exact_quotient(p.a3, n));
}

ComplexInterval ZOmega::certify() const {
  Interval half_sqrt2 = Interval::sqrt2() / Interval(2);
  Integer dr = a1 - a3, di = a1 + a3;
  Interval re = dr == 0 ? Interval(a0) : Interval(a0) + Interval(dr) * half_sqrt2;
  Interval im = di == 0 ? Interval(a2) : Interval(a2) + Interval(di) * half_sqrt2;
  return {re, im};
}

std::string ZOmega::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

ZOmega& ZOmega::operator+=(const ZOmega& o) {
  a0 += o.a0;
  a1 += o.a1;
  a2 += o.a2;
  a3 += o.a3;
  return *this;
}
ZOmega& ZOmega::operator-=(const ZOmega& o) {
  a0 -= o.a0;
  a1 -= o.a1;
  a2 -= o.a2;
  a3 -= o.a3;
  return *this;
}
ZOmega& ZOmega::operator*=(const ZOmega& o) {
  Integer c0 = a0 * o.a0 - a1 * o.a3 - a2 * o.a2 - a3 * o.a1;
  Integer c1 = a0 * o.a1 + a1 * o.a0 - a2 * o.a3 - a3 * o.a2;
  Integer c2 = a0 * o.a2 + a1 * o.a1 + a2 * o.a0 - a3 * o.a3;
  Integer c3 = a0 * o.a3 + a1 * o.a2 + a2 * o.a1 + a3 * o.a0;
  a0 = std::move(c0);
  a1 = std::move(c1);
  a2 = std::move(c2);
  a3 = std::move(c3);
  return *this;
}

bool lex_less(const ZOmega& x, const ZOmega& y) {
  if (x.a0 != y.a0) return x.a0 < y.a0;
  if (x.a1 != y.a1) return x.a1 < y.a1;
  if (x.a2 != y.a2) return x.a2 < y.a2;
  return x.a3 < y.a3;
}

// ------------------------------------------------------------ decompositions

ZOmega ZOmegaDecomposition::recompose() const {
  ZOmega r = ZOmega(re) + ZOmega(im) * ZOmega::i();
  if (shifted) r += ZOmega::omega();
  return r;
}

ZOmegaDecomposition decompose_zomega(const ZOmega& x) {
  ZOmegaDecomposition d;
  ZOmega y = x;
  if (!is_even(x.a1 - x.a3)) {
    y -= ZOmega::omega();
    d.shifted = true;
  }
  d.re = ZRoot2(y.a0, exact_quotient(y.a1 - y.a3, 2));
  d.im = ZRoot2(y.a2, exact_quotient(y.a1 + y.a3, 2));
  return d;
}

ScaledPoint to_scaled_point(const ZOmega& u) {
  return {ZRoot2(u.a1 - u.a3, u.a0), ZRoot2(u.a1 + u.a3, u.a2)};
}

ZOmega from_scaled_point(const ScaledPoint& p) {
  if (!is_even(p.x.a + p.y.a)) {
    throw std::domain_error("scaled point is not on the Z[omega] lattice");
  }
  return {p.x.b, exact_quotient(p.x.a + p.y.a, 2), p.y.b,
          exact_quotient(p.y.a - p.x.a, 2)};
}

const RingConstants& RingConstants::checked() {
  static const RingConstants c = [] {
    RingConstants k;
    if (k.lambda.bullet() != -ZRoot2::lambda_inv() ||
        k.lambda * ZRoot2::lambda_inv() != ZRoot2(1) || k.lambda.norm() != -1) {
      throw std::logic_error("lambda identities failed");
    }
    if (k.delta.dagger() * k.delta != ZOmega(ZRoot2(2, 1))) {
      throw std::logic_error("delta identity failed");
    }
    return k;
  }();
  return c;
}

std::ostream& operator<<(std::ostream& os, const ZRoot2& x) {
  return os << "(" << x.a << " + " << x.b << "*sqrt2)";
}
std::ostream& operator<<(std::ostream& os, const GaussInt& x) {
  return os << "(" << x.a << " + " << x.b << "*i)";
}
std::ostream& operator<<(std::ostream& os, const ZOmega& x) {
  return os << "[" << x.a0 << "," << x.a1 << "," << x.a2 << "," << x.a3 << "]";
}

}  // namespace ntsynth
