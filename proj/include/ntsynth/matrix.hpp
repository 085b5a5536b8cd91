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

#include <array>
#include <string>

#include "ntsynth/rings.hpp"

namespace ntsynth {

/**
 * (1/sqrt2^k) * [[m0, m1], [m2, m3]] with entries in Z[omega].
 * Constructors and products keep k least.
 */
struct TMatrix {
  std::array<ZOmega, 4> m;
  int k = 0;

  TMatrix();
  TMatrix(std::array<ZOmega, 4> entries, int k_);

  static TMatrix identity() { return {}; }

  /** Divides out sqrt2 while possible; zero matrix gets k = 0. */
  void normalize();
  TMatrix adjoint() const;
  bool is_unitary() const;
  /** Determinant numerator; det = det_numerator() / 2^k. */
  ZOmega det_numerator() const;
  ComplexInterval entry(int idx) const;
  std::string to_string() const;

  friend TMatrix operator*(const TMatrix& x, const TMatrix& y);
  friend bool operator==(const TMatrix& x, const TMatrix& y) {
    return x.k == y.k && x.m == y.m;
  }
  friend bool operator!=(const TMatrix& x, const TMatrix& y) {
    return !(x == y);
  }
};

/**
 * (1/(sqrt2^k sqrt5^l)) * [[m0, m1], [m2, m3]] with Gaussian entries.
 * Constructors and products keep (k, l) least.
 */
struct VMatrix {
  std::array<GaussInt, 4> m;
  int k = 0;
  int l = 0;

  VMatrix();
  VMatrix(std::array<GaussInt, 4> entries, int k_, int l_);

  static VMatrix identity() { return {}; }

  void normalize();
  VMatrix adjoint() const;
  bool is_unitary() const;
  /** Determinant numerator; det = det_numerator() / (2^k 5^l). */
  GaussInt det_numerator() const;
  /** True when the determinant is 1, i, -1 or -i. */
  bool det_is_power_of_i() const;
  ComplexInterval entry(int idx) const;
  std::string to_string() const;

  friend VMatrix operator*(const VMatrix& x, const VMatrix& y);
  friend bool operator==(const VMatrix& x, const VMatrix& y) {
    return x.k == y.k && x.l == y.l && x.m == y.m;
  }
  friend bool operator!=(const VMatrix& x, const VMatrix& y) {
    return !(x == y);
  }
};

/** Least denominator exponent of a scalar a / sqrt2^k in Z[omega][1/sqrt2]. */
int denominator_exponent(const ZOmega& a, int k);

/** Least exponents (k, l) of a Gaussian column (or scalar) over sqrt2^k sqrt5^l. */
std::pair<int, int> denominator_exponents(const GaussInt& a, const GaussInt& b,
                                          int k, int l);

}  // namespace ntsynth
