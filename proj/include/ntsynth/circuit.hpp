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

#include <stdexcept>
#include <string>
#include <vector>

#include "ntsynth/matrix.hpp"

namespace ntsynth {

enum class GateKind { H, S, T, X, Y, Z, W, Vx, Vy, Vz };

struct Gate {
  GateKind kind = GateKind::H;
  bool inverse = false;

  Gate inverted() const;
  bool is_t() const { return kind == GateKind::T; }
  bool is_v() const {
    return kind == GateKind::Vx || kind == GateKind::Vy || kind == GateKind::Vz;
  }
  std::string token() const;
  friend bool operator==(const Gate&, const Gate&) = default;
};

enum class GateSet { CliffordT, CliffordV, PauliV };

std::string to_string(GateSet g);
/** Accepts clifford_t, clifford_v and pauli_v. */
GateSet parse_gate_set(const std::string& s);

class GateSetMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/** Gate word; word order is matrix product order (leftmost applied last). */
struct Circuit {
  std::vector<Gate> gates;

  int t_count() const;
  int v_count() const;
  bool empty() const { return gates.empty(); }
  Circuit inverse() const;
  /** V-set words are space separated, others concatenated. */
  std::string to_string() const;
  static Circuit parse(const std::string& s);

  Circuit& operator+=(const Circuit& o);
  Circuit& operator+=(Gate g);
  friend Circuit operator+(Circuit a, const Circuit& b) { return a += b; }
  friend bool operator==(const Circuit&, const Circuit&) = default;
};

/** Throws GateSetMismatch for V-gates. */
TMatrix gate_matrix_t(Gate g);
/** Throws GateSetMismatch for T. */
VMatrix gate_matrix_v(Gate g);

TMatrix eval_t(const Circuit& c);
VMatrix eval_v(const Circuit& c);

}  // namespace ntsynth
