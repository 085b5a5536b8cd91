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

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace ntsynth {

/** Precision in bits used for newly created reals on this thread. */
long working_precision();

/** RAII override of the thread's working precision. */
class PrecisionScope {
 public:
  explicit PrecisionScope(long bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  long saved_;
};

/**
 * Thin owning wrapper around an MPFR number. Arithmetic rounds to
 * nearest at the working precision; use Interval for certified bounds.
 */
class Real {
 public:
  Real();
  Real(long v);  // NOLINT
  Real(int v) : Real(static_cast<long>(v)) {}  // NOLINT
  Real(double v);  // NOLINT
  Real(const mpz_class& v);  // NOLINT
  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  static Real from_string(const std::string& s, mpfr_rnd_t rnd = MPFR_RNDN);
  static Real pi(mpfr_rnd_t rnd = MPFR_RNDN);
  static Real sqrt2(mpfr_rnd_t rnd = MPFR_RNDN);

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  double to_double() const;
  mpz_class floor() const;
  mpz_class ceil() const;
  mpz_class round() const;
  std::string to_string(int digits = 20, mpfr_rnd_t rnd = MPFR_RNDN) const;
  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real operator-() const;

  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }
  friend bool operator<(const Real& a, const Real& b) {
    return mpfr_less_p(a.v_, b.v_) != 0;
  }
  friend bool operator<=(const Real& a, const Real& b) {
    return mpfr_lessequal_p(a.v_, b.v_) != 0;
  }
  friend bool operator>(const Real& a, const Real& b) { return b < a; }
  friend bool operator>=(const Real& a, const Real& b) { return b <= a; }
  friend bool operator==(const Real& a, const Real& b) {
    return mpfr_equal_p(a.v_, b.v_) != 0;
  }

 private:
  mpfr_t v_;
};

Real sqrt(const Real& x);
Real abs(const Real& x);
Real log(const Real& x);
Real exp(const Real& x);
Real cos(const Real& x);
Real sin(const Real& x);
Real atan2(const Real& y, const Real& x);
Real pow(const Real& x, const Real& y);
Real min(const Real& a, const Real& b);
Real max(const Real& a, const Real& b);

/** Closed interval [lo, hi] with outward-rounded arithmetic. */
class Interval {
 public:
  Interval() = default;
  explicit Interval(const mpz_class& v);
  Interval(long v) : Interval(mpz_class(v)) {}  // NOLINT
  Interval(Real lo, Real hi);

  static Interval pi();
  static Interval sqrt2();
  static Interval sqrt5();
  /** Enclosure of a decimal or integer string. */
  static Interval from_string(const std::string& s);
  /** Enclosure of p/q for integers. */
  static Interval rational(const mpz_class& p, const mpz_class& q);

  const Real& lo() const { return lo_; }
  const Real& hi() const { return hi_; }
  Real mid() const;
  Real width() const;

  bool contains(const Real& x) const { return lo_ <= x && x <= hi_; }
  bool certainly_le(const Interval& o) const { return hi_ <= o.lo_; }
  bool certainly_lt(const Interval& o) const { return hi_ < o.lo_; }
  bool overlaps(const Interval& o) const {
    return !(hi_ < o.lo_) && !(o.hi_ < lo_);
  }

  Interval operator-() const;
  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  /** Requires 0 outside b. */
  friend Interval operator/(const Interval& a, const Interval& b);

 private:
  Real lo_, hi_;
};

Interval sqrt(const Interval& x);
Interval square(const Interval& x);
Interval cos(const Interval& x);
Interval sin(const Interval& x);
Interval hull(const Interval& a, const Interval& b);

struct ComplexInterval {
  Interval re, im;
};

ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval conj(const ComplexInterval& a);
Interval norm_sq(const ComplexInterval& a);

}  // namespace ntsynth
