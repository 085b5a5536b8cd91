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

#include "ntsynth/circuit.hpp"

#include <algorithm>
#include <cctype>

namespace ntsynth {

Gate Gate::inverted() const {
  Gate g = *this;
  if (kind != GateKind::H && kind != GateKind::X && kind != GateKind::Y &&
      kind != GateKind::Z) {
    g.inverse = !inverse;
  }
  return g;
}

std::string Gate::token() const {
  static const char* names[] = {"H", "S", "T", "X", "Y", "Z", "W",
                                "Vx", "Vy", "Vz"};
  std::string s = names[static_cast<int>(kind)];
  if (inverse) s += '!';
  return s;
}

std::string to_string(GateSet g) {
  switch (g) {
    case GateSet::CliffordT:
      return "clifford_t";
    case GateSet::CliffordV:
      return "clifford_v";
    case GateSet::PauliV:
      return "pauli_v";
  }
  return "";
}

GateSet parse_gate_set(const std::string& s) {
  if (s == "clifford_t") return GateSet::CliffordT;
  if (s == "clifford_v") return GateSet::CliffordV;
  if (s == "pauli_v") return GateSet::PauliV;
  throw std::invalid_argument("unknown gate set: " + s);
}

int Circuit::t_count() const {
  return static_cast<int>(
      std::count_if(gates.begin(), gates.end(), [](Gate g) { return g.is_t(); }));
}

int Circuit::v_count() const {
  return static_cast<int>(
      std::count_if(gates.begin(), gates.end(), [](Gate g) { return g.is_v(); }));
}

Circuit Circuit::inverse() const {
  Circuit c;
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
    c.gates.push_back(it->inverted());
  }
  return c;
}

std::string Circuit::to_string() const {
  bool spaced = v_count() > 0;
  std::string s;
  for (const auto& g : gates) {
    if (spaced && !s.empty()) s += ' ';
    s += g.token();
  }
  return s;
}

Circuit Circuit::parse(const std::string& s) {
  Circuit c;
  std::size_t i = 0;
  while (i < s.size()) {
    char ch = s[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    Gate g;
    std::size_t start = i;
    switch (ch) {
      case 'H': g.kind = GateKind::H; break;
      case 'S': g.kind = GateKind::S; break;
      case 'T': g.kind = GateKind::T; break;
      case 'X': g.kind = GateKind::X; break;
      case 'Y': g.kind = GateKind::Y; break;
      case 'Z': g.kind = GateKind::Z; break;
      case 'W': g.kind = GateKind::W; break;
      case 'V': {
        char axis = i + 1 < s.size() ? s[i + 1] : '\0';
        if (axis == 'x') {
          g.kind = GateKind::Vx;
        } else if (axis == 'y') {
          g.kind = GateKind::Vy;
        } else if (axis == 'z') {
          g.kind = GateKind::Vz;
        } else {
          throw std::invalid_argument("bad V gate at offset " +
                                      std::to_string(start));
        }
        ++i;
        break;
      }
      default:
        throw std::invalid_argument("unknown gate '" + std::string(1, ch) +
                                    "' at offset " + std::to_string(start));
    }
    ++i;
    if (i < s.size() && s[i] == '!') {
      g.inverse = true;
      ++i;
    }
    c.gates.push_back(g);
  }
  return c;
}

Circuit& Circuit::operator+=(const Circuit& o) {
  gates.insert(gates.end(), o.gates.begin(), o.gates.end());
  return *this;
}

Circuit& Circuit::operator+=(Gate g) {
  gates.push_back(g);
  return *this;
}

// ---------------------------------------------------------------- matrices

TMatrix gate_matrix_t(Gate g) {
  const ZOmega w = ZOmega::omega();
  const ZOmega i = ZOmega::i();
  TMatrix m;
  switch (g.kind) {
    case GateKind::H:
      m = TMatrix({1, 1, 1, -1}, 1);
      break;
    case GateKind::S:
      m = TMatrix({1, 0, 0, i}, 0);
      break;
    case GateKind::T:
      m = TMatrix({1, 0, 0, w}, 0);
      break;
    case GateKind::X:
      m = TMatrix({0, 1, 1, 0}, 0);
      break;
    case GateKind::Y:
      m = TMatrix({0, -i, i, 0}, 0);
      break;
    case GateKind::Z:
      m = TMatrix({1, 0, 0, -1}, 0);
      break;
    case GateKind::W:
      m = TMatrix({w, 0, 0, w}, 0);
      break;
    default:
      throw GateSetMismatch("gate " + g.token() + " is not in Clifford+T");
  }
  return g.inverse ? m.adjoint() : m;
}

VMatrix gate_matrix_v(Gate g) {
  const GaussInt i = GaussInt::i();
  VMatrix m;
  switch (g.kind) {
    case GateKind::H:
      m = VMatrix({1, 1, 1, -1}, 1, 0);
      break;
    case GateKind::S:
      m = VMatrix({1, 0, 0, i}, 0, 0);
      break;
    case GateKind::X:
      m = VMatrix({0, 1, 1, 0}, 0, 0);
      break;
    case GateKind::Y:
      m = VMatrix({0, -i, i, 0}, 0, 0);
      break;
    case GateKind::Z:
      m = VMatrix({1, 0, 0, -1}, 0, 0);
      break;
    case GateKind::W:
      m = VMatrix({GaussInt(1, 1), 0, 0, GaussInt(1, 1)}, 1, 0);
      break;
    case GateKind::Vx:
      m = VMatrix({1, GaussInt(0, 2), GaussInt(0, 2), 1}, 0, 1);
      break;
    case GateKind::Vy:
      m = VMatrix({1, 2, -2, 1}, 0, 1);
      break;
    case GateKind::Vz:
      m = VMatrix({GaussInt(1, 2), 0, 0, GaussInt(1, -2)}, 0, 1);
      break;
    default:
      throw GateSetMismatch("gate " + g.token() + " is not in Clifford+V");
  }
  return g.inverse ? m.adjoint() : m;
}

TMatrix eval_t(const Circuit& c) {
  TMatrix m;
  for (const auto& g : c.gates) m = m * gate_matrix_t(g);
  return m;
}

VMatrix eval_v(const Circuit& c) {
  VMatrix m;
  for (const auto& g : c.gates) m = m * gate_matrix_v(g);
  return m;
}

}  // namespace ntsynth
