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


#include <random>

#include "doctest.h"
#include "ntsynth/exact.hpp"
#include "oracles.hpp"

using namespace ntsynth;

namespace {

bool close(const oracle::M2& a, const oracle::M2& b) {
  return oracle::distance(a, b) < 1e-9;
}

}  // namespace

TEST_CASE("gate matrices match their definitions") {
  CHECK(close(oracle::value(gate_matrix_t(Gate{GateKind::H})), oracle::gate_h()));
  CHECK(close(oracle::value(gate_matrix_t(Gate{GateKind::S})), oracle::gate_s()));
  CHECK(close(oracle::value(gate_matrix_t(Gate{GateKind::T})), oracle::gate_t()));
  CHECK(close(oracle::value(gate_matrix_t(Gate{GateKind::W})), oracle::gate_w()));
  CHECK(close(oracle::value(gate_matrix_v(Gate{GateKind::Vz})), oracle::gate_vz()));
  CHECK(close(oracle::value(gate_matrix_v(Gate{GateKind::H})), oracle::gate_h()));
}

TEST_CASE("circuit words") {
  CHECK(eval_t(Circuit{}) == TMatrix::identity());
  CHECK(eval_v(Circuit{}) == VMatrix::identity());
  Circuit c = Circuit::parse("HT!SW");
  CHECK(c.to_string() == "HT!SW");
  CHECK(c.t_count() == 1);
  CHECK(eval_t(c) * eval_t(c.inverse()) == TMatrix::identity());
  Circuit v = Circuit::parse("Vx H Vz!");
  CHECK(v.to_string() == "Vx H Vz!");
  CHECK(v.v_count() == 2);
  CHECK_THROWS_AS(eval_t(v), GateSetMismatch);
  CHECK_THROWS_AS(eval_v(c), GateSetMismatch);
  CHECK_THROWS(Circuit::parse("HQ"));
  // leftmost gate is applied last
  CHECK(eval_t(Circuit::parse("HT")) ==
        gate_matrix_t(Gate{GateKind::H}) * gate_matrix_t(Gate{GateKind::T}));
}

TEST_CASE("Clifford table") {
  CHECK(clifford_table().size() == 192);
  CHECK(oracle::cliffords().size() == 192);
  for (const auto& [m, w] : clifford_table()) CHECK(eval_t(w) == m);
}

TEST_CASE("exact_synth_v examples") {
  VMatrix vz = gate_matrix_v(Gate{GateKind::Vz});
  Circuit c = exact_synth_v(vz);
  CHECK(c.v_count() == 1);
  CHECK(eval_v(c) == vz);
  Circuit h = exact_synth_v(gate_matrix_v(Gate{GateKind::H}));
  CHECK(h.v_count() == 0);
  CHECK(eval_v(h) == gate_matrix_v(Gate{GateKind::H}));
}

TEST_CASE("exact_synth_t examples") {
  Circuit h = exact_synth_t(gate_matrix_t(Gate{GateKind::H}));
  CHECK(h.t_count() == 0);
  Circuit t = exact_synth_t(gate_matrix_t(Gate{GateKind::T}));
  CHECK(t.t_count() == 1);
  CHECK(eval_t(t) == gate_matrix_t(Gate{GateKind::T}));
}

TEST_CASE("not representable") {
  TMatrix bad({ZOmega(1), ZOmega(0), ZOmega(0), ZOmega(1)}, 1);
  CHECK_FALSE(membership(bad).representable);
  CHECK_THROWS_AS(exact_synth_t(bad), NotRepresentable);
  VMatrix badv({GaussInt(1), GaussInt(0), GaussInt(0), GaussInt(1)}, 0, 1);
  CHECK_FALSE(membership(badv).representable);
  CHECK_THROWS_AS(exact_synth_v(badv), NotRepresentable);
  // H is outside the Pauli+V group
  CHECK_FALSE(membership(gate_matrix_v(Gate{GateKind::H}), true).representable);
}

TEST_CASE("membership") {
  MembershipResult id = membership(TMatrix::identity());
  CHECK(id.representable);
  CHECK(id.k == 0);
  MembershipResult idv = membership(VMatrix::identity());
  CHECK(idv.representable);
  CHECK(idv.k == 0);
  CHECK(idv.l == 0);

  // unitary with entries in Z[1/sqrt2, 1/sqrt5, i] that is not in the group
  std::array<RadicalEntry, 4> e;
  e[0] = {{GaussInt(0, 2), GaussInt(0), GaussInt(1), GaussInt(0)}, 0, 3};
  e[1] = {{GaussInt(-80, 96), GaussInt(0), GaussInt(0), GaussInt(0)}, 0, 3};
  e[2] = {{GaussInt(80, 96), GaussInt(0), GaussInt(0), GaussInt(0)}, 0, 3};
  e[3] = {{GaussInt(0, -2), GaussInt(0), GaussInt(1), GaussInt(0)}, 0, 3};
  MembershipResult r = membership_v(e);
  CHECK_FALSE(r.representable);

  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    Circuit w = oracle::random_v_word(rng, 1 + static_cast<int>(rng() % 30));
    CHECK(membership(eval_v(w)).representable);
    Circuit t = oracle::random_t_word(rng, static_cast<int>(rng() % 10));
    CHECK(membership(eval_t(t)).representable);
  }
}

TEST_CASE("random round trips") {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 200; ++i) {
    Circuit w = oracle::random_v_word(rng, 1 + static_cast<int>(rng() % 40));
    VMatrix m = eval_v(w);
    Circuit c = exact_synth_v(m);
    CHECK(eval_v(c) == m);
    CHECK(c.v_count() == m.l);
    CHECK(c.v_count() <= w.v_count());

    Circuit p = oracle::random_v_word(rng, 1 + static_cast<int>(rng() % 40), true);
    VMatrix pm = eval_v(p);
    Circuit pc = exact_synth_v(pm, true);
    CHECK(eval_v(pc) == pm);
    CHECK(pc.v_count() == pm.l);

    Circuit t = oracle::random_t_word(rng, static_cast<int>(rng() % 13));
    TMatrix tm = eval_t(t);
    Circuit tc = exact_synth_t(tm);
    CHECK(eval_t(tc) == tm);
    CHECK(tc.t_count() <= t.t_count());
  }
}

TEST_CASE("simplify keeps the operator") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 100; ++i) {
    Circuit t = oracle::random_t_word(rng, static_cast<int>(rng() % 6));
    Circuit s = simplify(t, GateSet::CliffordT);
    CHECK(eval_t(s) == eval_t(t));
    CHECK(s.t_count() == t.t_count());
    Circuit v = oracle::random_v_word(rng, 20);
    Circuit sv = simplify(v, GateSet::CliffordV);
    CHECK(eval_v(sv) == eval_v(v));
    CHECK(sv.v_count() == v.v_count());
  }
}
