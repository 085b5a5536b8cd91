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
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ntsynth/circuit.hpp"
#include "ntsynth/matrix.hpp"

namespace ntsynth {

class NotRepresentable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/** Eval of the result equals u exactly; T-count is minimal. */
Circuit exact_synth_t(const TMatrix& u);

/**
 * Eval of the result equals u exactly; V-count is the least sqrt5
 * exponent. pauli_v restricts to Pauli and V gates (k = 0, det = +-1).
 */
Circuit exact_synth_v(const VMatrix& u, bool pauli_v = false);

/** Same operator with each Clifford run replaced by a shortest word. */
Circuit simplify(const Circuit& c, GateSet gates);

/** Least denominator exponent of the Bloch sphere representation. */
int bloch_exponent(const TMatrix& u);

/** All 192 Clifford operators over {H, S, W} with a word each. */
const std::vector<std::pair<TMatrix, Circuit>>& clifford_table();
std::optional<Circuit> find_clifford(const TMatrix& u);

/** (g0 + g1 sqrt2 + g2 sqrt5 + g3 sqrt10) / (2^a 5^b). */
struct RadicalEntry {
  std::array<GaussInt, 4> g;
  int a = 0;
  int b = 0;
};

struct MembershipResult {
  bool representable = false;
  int k = 0;
  int l = 0;
  std::string reason;
};

MembershipResult membership(const TMatrix& u);
MembershipResult membership(const VMatrix& u, bool pauli_v = false);
/** Characterization of the Clifford+V group for general radical entries. */
MembershipResult membership_v(const std::array<RadicalEntry, 4>& entries,
                              VMatrix* out = nullptr);

}  // namespace ntsynth
