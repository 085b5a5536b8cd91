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

#include <optional>
#include <ostream>
#include <string>

#include "ntsynth/real.hpp"

namespace ntsynth {

using Integer = mpz_class;

/** a + b*sqrt(2). */
struct ZRoot2 {
  Integer a, b;

  ZRoot2() = default;
  ZRoot2(long a_) : a(a_), b(0) {}  // NOLINT
  ZRoot2(Integer a_, Integer b_ = 0) : a(std::move(a_)), b(std::move(b_)) {}  // NOLINT

  static ZRoot2 sqrt2() { return {0, 1}; }
  static ZRoot2 lambda() { return {1, 1}; }
  static ZRoot2 lambda_inv() { return {-1, 1}; }
  /** lambda^n for any integer n. */
  static ZRoot2 lambda_pow(long n);

  bool is_zero() const { return a == 0 && b == 0; }
  ZRoot2 bullet() const { return {a, -b}; }
  Integer norm() const { return a * a - 2 * b * b; }
  /** Exact sign of the real number a + b*sqrt(2). */
  int sign() const;
  bool divisible_by_sqrt2() const;
  /** x / sqrt(2); requires divisible_by_sqrt2(). */
  ZRoot2 div_sqrt2() const;
  std::optional<ZRoot2> div_exact(const ZRoot2& d) const;
  Interval certify() const;
  std::string to_string() const;

  ZRoot2 operator-() const { return {-a, -b}; }
  ZRoot2& operator+=(const ZRoot2& o);
  ZRoot2& operator-=(const ZRoot2& o);
  ZRoot2& operator*=(const ZRoot2& o);
  friend ZRoot2 operator+(ZRoot2 x, const ZRoot2& y) { return x += y; }
  friend ZRoot2 operator-(ZRoot2 x, const ZRoot2& y) { return x -= y; }
  friend ZRoot2 operator*(ZRoot2 x, const ZRoot2& y) { return x *= y; }
  friend bool operator==(const ZRoot2& x, const ZRoot2& y) {
    return x.a == y.a && x.b == y.b;
  }
  friend bool operator!=(const ZRoot2& x, const ZRoot2& y) { return !(x == y); }
  /** Exact real-order comparison. */
  friend bool operator<(const ZRoot2& x, const ZRoot2& y) {
    return (x - y).sign() < 0;
  }
  friend bool operator<=(const ZRoot2& x, const ZRoot2& y) {
    return (x - y).sign() <= 0;
  }
};

/** a + b*i. */
struct GaussInt {
  Integer a, b;

  GaussInt() = default;
  GaussInt(long a_) : a(a_), b(0) {}  // NOLINT
  GaussInt(Integer a_, Integer b_ = 0) : a(std::move(a_)), b(std::move(b_)) {}  // NOLINT

  static GaussInt i() { return {0, 1}; }

  bool is_zero() const { return a == 0 && b == 0; }
  GaussInt dagger() const { return {a, -b}; }
  Integer norm() const { return a * a + b * b; }
  bool divisible_by(const Integer& n) const;
  std::optional<GaussInt> div_exact(const GaussInt& d) const;
  ComplexInterval certify() const;
  std::string to_string() const;

  GaussInt operator-() const { return {-a, -b}; }
  GaussInt& operator+=(const GaussInt& o);
  GaussInt& operator-=(const GaussInt& o);
  GaussInt& operator*=(const GaussInt& o);
  friend GaussInt operator+(GaussInt x, const GaussInt& y) { return x += y; }
  friend GaussInt operator-(GaussInt x, const GaussInt& y) { return x -= y; }
  friend GaussInt operator*(GaussInt x, const GaussInt& y) { return x *= y; }
  friend bool operator==(const GaussInt& x, const GaussInt& y) {
    return x.a == y.a && x.b == y.b;
  }
  friend bool operator!=(const GaussInt& x, const GaussInt& y) {
    return !(x == y);
  }
};

/** a0 + a1*w + a2*w^2 + a3*w^3 with w = exp(i*pi/4). */
struct ZOmega {
  Integer a0, a1, a2, a3;

  ZOmega() = default;
  ZOmega(long v) : a0(v), a1(0), a2(0), a3(0) {}  // NOLINT
  ZOmega(Integer c0, Integer c1, Integer c2, Integer c3)
      : a0(std::move(c0)), a1(std::move(c1)), a2(std::move(c2)),
        a3(std::move(c3)) {}
  ZOmega(const ZRoot2& x) : a0(x.a), a1(x.b), a2(0), a3(-x.b) {}  // NOLINT
  ZOmega(const GaussInt& x) : a0(x.a), a1(0), a2(x.b), a3(0) {}  // NOLINT

  static ZOmega omega() { return {0, 1, 0, 0}; }
  /** w^n for any integer n. */
  static ZOmega omega_pow(long n);
  static ZOmega i() { return {0, 0, 1, 0}; }
  static ZOmega delta() { return {1, 1, 0, 0}; }

  bool is_zero() const { return a0 == 0 && a1 == 0 && a2 == 0 && a3 == 0; }
  ZOmega bullet() const { return {a0, -a1, a2, -a3}; }
  ZOmega dagger() const { return {a0, -a3, -a2, -a1}; }
  Integer norm() const;
  /** Element of Z[sqrt2] when this is real, i.e. x == dagger(x). */
  std::optional<ZRoot2> to_zroot2() const;
  std::optional<GaussInt> to_gauss() const;
  bool divisible_by_sqrt2() const;
  ZOmega div_sqrt2() const;
  std::optional<ZOmega> div_exact(const ZOmega& d) const;
  ComplexInterval certify() const;
  std::string to_string() const;

  ZOmega operator-() const { return {-a0, -a1, -a2, -a3}; }
  ZOmega& operator+=(const ZOmega& o);
  ZOmega& operator-=(const ZOmega& o);
  ZOmega& operator*=(const ZOmega& o);
  friend ZOmega operator+(ZOmega x, const ZOmega& y) { return x += y; }
  friend ZOmega operator-(ZOmega x, const ZOmega& y) { return x -= y; }
  friend ZOmega operator*(ZOmega x, const ZOmega& y) { return x *= y; }
  friend bool operator==(const ZOmega& x, const ZOmega& y) {
    return x.a0 == y.a0 && x.a1 == y.a1 && x.a2 == y.a2 && x.a3 == y.a3;
  }
  friend bool operator!=(const ZOmega& x, const ZOmega& y) { return !(x == y); }
  /** Lexicographic order on coefficients, for deterministic output. */
  friend bool lex_less(const ZOmega& x, const ZOmega& y);
};

bool lex_less(const ZOmega& x, const ZOmega& y);

inline ZRoot2 bullet(const ZRoot2& x) { return x.bullet(); }
inline ZOmega bullet(const ZOmega& x) { return x.bullet(); }
inline GaussInt dagger(const GaussInt& x) { return x.dagger(); }
inline ZOmega dagger(const ZOmega& x) { return x.dagger(); }
inline Integer norm(const Integer& x) { return x; }
inline Integer norm(const ZRoot2& x) { return x.norm(); }
inline Integer norm(const GaussInt& x) { return x.norm(); }
inline Integer norm(const ZOmega& x) { return x.norm(); }

/** x = a0 + a1*i, or x = a0 + a1*i + w when shifted. */
struct ZOmegaDecomposition {
  ZRoot2 re, im;
  bool shifted = false;
  ZOmega recompose() const;
};

ZOmegaDecomposition decompose_zomega(const ZOmega& x);

/** Real coordinates scaled by sqrt2: sqrt2*Re(x), sqrt2*Im(x). */
struct ScaledPoint {
  ZRoot2 x, y;
};
ScaledPoint to_scaled_point(const ZOmega& u);
ZOmega from_scaled_point(const ScaledPoint& p);

/** Exact identities the rest of the library relies on. */
struct RingConstants {
  ZRoot2 lambda = ZRoot2::lambda();
  ZOmega delta = ZOmega::delta();
  /** Throws std::logic_error if any identity fails. */
  static const RingConstants& checked();
};

std::ostream& operator<<(std::ostream& os, const ZRoot2& x);
std::ostream& operator<<(std::ostream& os, const GaussInt& x);
std::ostream& operator<<(std::ostream& os, const ZOmega& x);

}  // namespace ntsynth
