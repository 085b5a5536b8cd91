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

#include "ntsynth/real.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace ntsynth {

namespace {
thread_local long g_precision = 128;
}  // namespace

long working_precision() { return g_precision; }

PrecisionScope::PrecisionScope(long bits) : saved_(g_precision) {
  if (bits < MPFR_PREC_MIN) bits = MPFR_PREC_MIN;
  g_precision = bits;
}
PrecisionScope::~PrecisionScope() { g_precision = saved_; }

Real::Real() {
  mpfr_init2(v_, g_precision);
  mpfr_set_zero(v_, 1);
}
Real::Real(long v) {
  mpfr_init2(v_, g_precision);
  mpfr_set_si(v_, v, MPFR_RNDN);
}
Real::Real(double v) {
  mpfr_init2(v_, g_precision);
  mpfr_set_d(v_, v, MPFR_RNDN);
}
Real::Real(const mpz_class& v) {
  mpfr_init2(v_, g_precision);
  mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN);
}
Real::Real(const Real& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}
Real::Real(Real&& o) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, o.v_);
}
Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}
Real& Real::operator=(Real&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}
Real::~Real() { mpfr_clear(v_); }

Real Real::from_string(const std::string& s, mpfr_rnd_t rnd) {
  Real r;
  if (mpfr_set_str(r.v_, s.c_str(), 10, rnd) != 0 && mpfr_nan_p(r.v_)) {
    throw std::invalid_argument("not a number: " + s);
  }
  return r;
}

Real Real::pi(mpfr_rnd_t rnd) {
  Real r;
  mpfr_const_pi(r.v_, rnd);
  return r;
}

Real Real::sqrt2(mpfr_rnd_t rnd) {
  Real r;
  mpfr_sqrt_ui(r.v_, 2, rnd);
  return r;
}

double Real::to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

mpz_class Real::floor() const {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDD);
  return z;
}
mpz_class Real::ceil() const {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDU);
  return z;
}
mpz_class Real::round() const {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDN);
  return z;
}

std::string Real::to_string(int digits, mpfr_rnd_t rnd) const {
  if (mpfr_zero_p(v_)) return "0";
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*R*e", digits - 1, rnd, v_);
  return std::string(buf.data());
}

Real& Real::operator+=(const Real& o) {
  Real r;
  mpfr_add(r.v_, v_, o.v_, MPFR_RNDN);
  return *this = std::move(r);
}
Real& Real::operator-=(const Real& o) {
  Real r;
  mpfr_sub(r.v_, v_, o.v_, MPFR_RNDN);
  return *this = std::move(r);
}
Real& Real::operator*=(const Real& o) {
  Real r;
  mpfr_mul(r.v_, v_, o.v_, MPFR_RNDN);
  return *this = std::move(r);
}
Real& Real::operator/=(const Real& o) {
  Real r;
  mpfr_div(r.v_, v_, o.v_, MPFR_RNDN);
  return *this = std::move(r);
}
Real Real::operator-() const {
  Real r;
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

#define NTSYNTH_UNARY(name, fn)  \
  Real name(const Real& x) {     \
    Real r;                      \
    fn(r.get(), x.get(), MPFR_RNDN); \
    return r;                    \
  }
NTSYNTH_UNARY(sqrt, mpfr_sqrt)
NTSYNTH_UNARY(abs, mpfr_abs)
NTSYNTH_UNARY(log, mpfr_log)
NTSYNTH_UNARY(exp, mpfr_exp)
NTSYNTH_UNARY(cos, mpfr_cos)
NTSYNTH_UNARY(sin, mpfr_sin)
#undef NTSYNTH_UNARY

Real atan2(const Real& y, const Real& x) {
  Real r;
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}
Real pow(const Real& x, const Real& y) {
  Real r;
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}
Real min(const Real& a, const Real& b) { return a <= b ? a : b; }
Real max(const Real& a, const Real& b) { return a >= b ? a : b; }

// ---------------------------------------------------------------- Interval

namespace {

Real rounded_add(const Real& a, const Real& b, mpfr_rnd_t rnd) {
  Real r;
  mpfr_add(r.get(), a.get(), b.get(), rnd);
  return r;
}
Real rounded_sub(const Real& a, const Real& b, mpfr_rnd_t rnd) {
  Real r;
  mpfr_sub(r.get(), a.get(), b.get(), rnd);
  return r;
}
Real rounded_mul(const Real& a, const Real& b, mpfr_rnd_t rnd) {
  Real r;
  mpfr_mul(r.get(), a.get(), b.get(), rnd);
  return r;
}
Real rounded_div(const Real& a, const Real& b, mpfr_rnd_t rnd) {
  Real r;
  mpfr_div(r.get(), a.get(), b.get(), rnd);
  return r;
}

}  // namespace

Interval::Interval(const mpz_class& v) {
  mpfr_set_z(lo_.get(), v.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(hi_.get(), v.get_mpz_t(), MPFR_RNDU);
}

Interval::Interval(Real lo, Real hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) throw std::invalid_argument("interval with lo > hi");
}

Interval Interval::pi() { return {Real::pi(MPFR_RNDD), Real::pi(MPFR_RNDU)}; }

Interval Interval::sqrt2() {
  return {Real::sqrt2(MPFR_RNDD), Real::sqrt2(MPFR_RNDU)};
}

Interval Interval::sqrt5() {
  Real lo, hi;
  mpfr_sqrt_ui(lo.get(), 5, MPFR_RNDD);
  mpfr_sqrt_ui(hi.get(), 5, MPFR_RNDU);
  return {lo, hi};
}

Interval Interval::from_string(const std::string& s) {
  return {Real::from_string(s, MPFR_RNDD), Real::from_string(s, MPFR_RNDU)};
}

Interval Interval::rational(const mpz_class& p, const mpz_class& q) {
  return Interval(p) / Interval(q);
}

Real Interval::mid() const {
  Real r;
  mpfr_add(r.get(), lo_.get(), hi_.get(), MPFR_RNDN);
  mpfr_div_2ui(r.get(), r.get(), 1, MPFR_RNDN);
  if (r < lo_) return lo_;
  if (r > hi_) return hi_;
  return r;
}

Real Interval::width() const { return rounded_sub(hi_, lo_, MPFR_RNDU); }

Interval Interval::operator-() const { return {-hi_, -lo_}; }

Interval operator+(const Interval& a, const Interval& b) {
  return {rounded_add(a.lo_, b.lo_, MPFR_RNDD),
          rounded_add(a.hi_, b.hi_, MPFR_RNDU)};
}

Interval operator-(const Interval& a, const Interval& b) {
  return {rounded_sub(a.lo_, b.hi_, MPFR_RNDD),
          rounded_sub(a.hi_, b.lo_, MPFR_RNDU)};
}

Interval operator*(const Interval& a, const Interval& b) {
  const Real* xs[2] = {&a.lo_, &a.hi_};
  const Real* ys[2] = {&b.lo_, &b.hi_};
  Real lo, hi;
  bool first = true;
  for (auto* x : xs) {
    for (auto* y : ys) {
      Real d = rounded_mul(*x, *y, MPFR_RNDD);
      Real u = rounded_mul(*x, *y, MPFR_RNDU);
      if (first || d < lo) lo = d;
      if (first || u > hi) hi = u;
      first = false;
    }
  }
  return {lo, hi};
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.lo_.sign() <= 0 && b.hi_.sign() >= 0) {
    throw std::domain_error("interval division by an interval containing 0");
  }
  Interval inv(rounded_div(Real(1), b.hi_, MPFR_RNDD),
               rounded_div(Real(1), b.lo_, MPFR_RNDU));
  return a * inv;
}

Interval sqrt(const Interval& x) {
  if (x.hi().sign() < 0) throw std::domain_error("sqrt of negative interval");
  Real lo, hi;
  if (x.lo().sign() <= 0) {
    lo = Real(0);
  } else {
    mpfr_sqrt(lo.get(), x.lo().get(), MPFR_RNDD);
  }
  mpfr_sqrt(hi.get(), x.hi().get(), MPFR_RNDU);
  return {lo, hi};
}

Interval square(const Interval& x) {
  if (x.lo().sign() >= 0) return x * x;
  if (x.hi().sign() <= 0) return (-x) * (-x);
  Real m = max(-x.lo(), x.hi());
  return {Real(0), rounded_mul(m, m, MPFR_RNDU)};
}

namespace {

// f is 1-Lipschitz, so f([lo,hi]) lies within f(m) +- radius.
Interval lipschitz_enclosure(const Interval& x,
                             int (*f)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)) {
  Real m = x.mid();
  Real r = max(rounded_sub(m, x.lo(), MPFR_RNDU),
               rounded_sub(x.hi(), m, MPFR_RNDU));
  Real lo, hi;
  f(lo.get(), m.get(), MPFR_RNDD);
  f(hi.get(), m.get(), MPFR_RNDU);
  lo = rounded_sub(lo, r, MPFR_RNDD);
  hi = rounded_add(hi, r, MPFR_RNDU);
  if (lo < Real(-1)) lo = Real(-1);
  if (hi > Real(1)) hi = Real(1);
  return {lo, hi};
}

}  // namespace

Interval cos(const Interval& x) { return lipschitz_enclosure(x, mpfr_cos); }
Interval sin(const Interval& x) { return lipschitz_enclosure(x, mpfr_sin); }

Interval hull(const Interval& a, const Interval& b) {
  return {min(a.lo(), b.lo()), max(a.hi(), b.hi())};
}

ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) {
  return {a.re + b.re, a.im + b.im};
}
ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b) {
  return {a.re - b.re, a.im - b.im};
}
ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
ComplexInterval conj(const ComplexInterval& a) { return {a.re, -a.im}; }
Interval norm_sq(const ComplexInterval& a) {
  return square(a.re) + square(a.im);
}

}  // namespace ntsynth
