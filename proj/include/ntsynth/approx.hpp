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
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "ntsynth/circuit.hpp"
#include "ntsynth/matrix.hpp"
#include "ntsynth/number_theory.hpp"
#include "ntsynth/real.hpp"

namespace ntsynth {

/** A rotation angle: a rational multiple of pi, a decimal, or an enclosure. */
class AngleSpec {
 public:
  enum class Kind { PiRational, Decimal, Enclosure };

  AngleSpec() = default;
  static AngleSpec pi_fraction(Integer num, Integer den);
  static AngleSpec decimal(std::string literal);
  static AngleSpec enclosure(Interval value);

  Kind kind() const { return kind_; }
  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }
  /** Enclosure of the angle at the working precision. */
  Interval value() const;
  bool is_exact_zero() const;
  std::string to_string() const;

 private:
  Kind kind_ = Kind::PiRational;
  Integer num_ = 0, den_ = 1;
  std::string literal_;
  Interval value_;
};

using Matrix2 = std::array<ComplexInterval, 4>;

struct SynthesisOptions {
  std::uint64_t seed = 0;
  std::uint64_t effort = kDefaultFactoringEffort;
  /** Effectively unbounded factoring. */
  bool oracle = false;
  bool up_to_phase = false;
  /** Interleave the two phase branches by T-count. */
  bool interleave = true;
  std::uint64_t candidate_cap = 1000000;
};

struct SynthesisResult {
  Circuit circuit;
  GateSet gate_set = GateSet::CliffordT;
  int t_count = 0;
  int v_count = 0;
  int k = 0;
  int l = 0;
  /** Certified enclosure of the distance to the target. */
  Interval error;
  /** The circuit approximates exp(-i pi/8) times the target. */
  bool phase_pi8 = false;
  bool exact = false;
  std::uint64_t candidates_tried = 0;
  std::uint64_t factoring_effort = 0;
  std::optional<TMatrix> t_matrix;
  std::optional<VMatrix> v_matrix;

  int count() const { return gate_set == GateSet::CliffordT ? t_count : v_count; }
};

/** No circuit exists (epsilon = 0) or the candidate cap was reached. */
class Unachievable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/** Bits of precision for a target accuracy. */
long precision_for(const Interval& eps);

Matrix2 rz_matrix(const Interval& theta);
Matrix2 to_intervals(const TMatrix& u);
Matrix2 to_intervals(const VMatrix& u);

/** Certified enclosure of the operator norm of a - b (largest singular value). */
Interval operator_distance(const Matrix2& a, const Matrix2& b);
/** sqrt(2 - 2 Re(conj(z) x)) for unitaries with top-left entry x. */
Interval rz_distance(const ComplexInterval& z, const ComplexInterval& x);

SynthesisResult approx_rz_t(const AngleSpec& theta, const Interval& eps,
                            const SynthesisOptions& opts = {});
/** Best of the plain and exp(i pi/8) branches. */
SynthesisResult approx_rz_t_phase(const AngleSpec& theta, const Interval& eps,
                                  const SynthesisOptions& opts = {});
SynthesisResult approx_rz_v(const AngleSpec& theta, const Interval& eps,
                            const SynthesisOptions& opts = {},
                            bool pauli_v = false);
/** Dispatch on gate set and opts.up_to_phase. */
SynthesisResult approx_rz(const AngleSpec& theta, const Interval& eps,
                          GateSet gates, const SynthesisOptions& opts = {});

struct EulerAngles {
  Real a, b, c;
};
/** u = Rz(a) H Rz(b) H Rz(c) for u in SU(2). */
EulerAngles euler_decompose(const Matrix2& u);

SynthesisResult approx_su2(const Matrix2& u, const Interval& eps,
                           GateSet gates, const SynthesisOptions& opts = {});

}  // namespace ntsynth
