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

#include "ntsynth/exact.hpp"

#include <deque>
#include <map>
#include <tuple>

namespace ntsynth {

namespace {

Gate gate(GateKind k, bool inv = false) { return {k, inv}; }

// ------------------------------------------------------------ Clifford+T

using Mat = std::array<ZOmega, 4>;

Mat mul(const Mat& x, const Mat& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
          x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

Mat adj(const Mat& x) {
  return {x[0].dagger(), x[2].dagger(), x[1].dagger(), x[3].dagger()};
}

// tr(sigma_i a) for i = x, y, z.
ZOmega trace_sigma(int i, const Mat& a) {
  switch (i) {
    case 0:
      return a[2] + a[1];
    case 1:
      return ZOmega::i() * (a[1] - a[2]);
    default:
      return a[0] - a[3];
  }
}

Mat sigma(int i) {
  const ZOmega im = ZOmega::i();
  switch (i) {
    case 0:
      return {0, 1, 1, 0};
    case 1:
      return {0, -im, im, 0};
    default:
      return {1, 0, 0, -1};
  }
}

}  // namespace

int bloch_exponent(const TMatrix& u) {
  // R_ij = tr(s_i M s_j M^dagger) / 2^(k+1) with numerators in Z[sqrt2].
  std::array<ZRoot2, 9> n;
  Mat ma = adj(u.m);
  for (int j = 0; j < 3; ++j) {
    Mat p = mul(mul(u.m, sigma(j)), ma);
    for (int i = 0; i < 3; ++i) {
      auto r = trace_sigma(i, p).to_zroot2();
      if (!r) throw NotRepresentable("matrix is not unitary");
      n[3 * i + j] = *r;
    }
  }
  int e = 2 * u.k + 2;
  while (e > 0) {
    for (const auto& x : n) {
      if (!x.divisible_by_sqrt2()) return e;
    }
    for (auto& x : n) x = x.div_sqrt2();
    --e;
  }
  return 0;
}

const std::vector<std::pair<TMatrix, Circuit>>& clifford_table() {
  static const std::vector<std::pair<TMatrix, Circuit>> table = [] {
    std::vector<std::pair<TMatrix, Circuit>> out;
    std::deque<std::pair<TMatrix, Circuit>> queue{{TMatrix::identity(), {}}};
    out.push_back(queue.front());
    const Gate gens[] = {gate(GateKind::H), gate(GateKind::S),
                         gate(GateKind::W), gate(GateKind::X),
                         gate(GateKind::Y), gate(GateKind::Z),
                         gate(GateKind::S).inverted(),
                         gate(GateKind::W).inverted()};
    while (!queue.empty()) {
      auto [m, w] = queue.front();
      queue.pop_front();
      for (Gate g : gens) {
        TMatrix n = m * gate_matrix_t(g);
        bool seen = false;
        for (const auto& e : out) {
          if (e.first == n) {
            seen = true;
            break;
          }
        }
        if (seen) continue;
        Circuit c = w;
        c += g;
        out.emplace_back(n, c);
        queue.emplace_back(n, c);
      }
    }
    return out;
  }();
  return table;
}

std::optional<Circuit> find_clifford(const TMatrix& u) {
  for (const auto& [m, w] : clifford_table()) {
    if (m == u) return w;
  }
  return std::nullopt;
}

Circuit exact_synth_t(const TMatrix& u) {
  if (!u.is_unitary()) throw NotRepresentable("matrix is not unitary");
  // Normal form (T | e)(HT | SHT)* C, peeled from the left.
  const Circuit syllables[] = {
      Circuit::parse("T"), Circuit::parse("HT"), Circuit::parse("SHT")};
  TMatrix inv[3];
  for (int s = 0; s < 3; ++s) inv[s] = eval_t(syllables[s].inverse());

  Circuit out;
  TMatrix cur = u;
  int e = bloch_exponent(cur);
  while (e > 0) {
    bool found = false;
    for (int s = 0; s < 3 && !found; ++s) {
      TMatrix next = inv[s] * cur;
      if (bloch_exponent(next) == e - 1) {
        out += syllables[s];
        cur = next;
        --e;
        found = true;
      }
    }
    if (!found) throw std::logic_error("no T-count reducing syllable");
  }
  auto c = find_clifford(cur);
  if (!c) throw std::logic_error("residual operator is not a Clifford");
  out += *c;
  return simplify(out, GateSet::CliffordT);
}

// ------------------------------------------------------------ Clifford+V

namespace {

struct Candidate {
  Circuit word;
  VMatrix m;
};

// The 32 monomial matrices with entries in {1, i, -1, -i}.
const std::vector<Candidate>& pauli_s_group() {
  static const std::vector<Candidate> group = [] {
    std::vector<Candidate> out;
    for (int anti = 0; anti < 2; ++anti) {
      for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
          Circuit w;
          if (anti) w += gate(GateKind::X);
          for (int j = 0; j < a; ++j) w += Circuit::parse("XYZ");
          for (int j = 0; j < (b - a + 4) % 4; ++j) w += gate(GateKind::S);
          out.push_back({w, eval_v(w)});
        }
      }
    }
    return out;
  }();
  return group;
}

// The 16 Pauli operators with phases, as Pauli words.
const std::vector<Candidate>& pauli_group() {
  static const std::vector<Candidate> group = [] {
    std::vector<Candidate> out;
    const char* base[] = {"", "X", "Y", "Z"};
    for (int p = 0; p < 4; ++p) {
      for (int ph = 0; ph < 4; ++ph) {
        Circuit w = Circuit::parse(base[p]);
        for (int j = 0; j < ph; ++j) w += Circuit::parse("XYZ");
        out.push_back({w, eval_v(w)});
      }
    }
    return out;
  }();
  return group;
}

int centered_mod5(const Integer& x) {
  Integer r = x % 5;
  long v = r.get_si();
  if (v < 0) v += 5;
  return v > 2 ? static_cast<int>(v - 5) : static_cast<int>(v);
}

const std::map<std::array<int, 4>, Gate>& residue_table() {
  static const std::map<std::array<int, 4>, Gate> table = {
      {{2, 1, 0, 0}, gate(GateKind::Vz)},
      {{2, 0, 1, 0}, gate(GateKind::Vy, true)},
      {{2, 0, 0, 1}, gate(GateKind::Vx)},
      {{2, -1, 0, 0}, gate(GateKind::Vz, true)},
      {{2, 0, -1, 0}, gate(GateKind::Vy)},
      {{2, 0, 0, -1}, gate(GateKind::Vx, true)},
      {{2, 2, 1, 1}, gate(GateKind::Vy, true)},
      {{2, 1, 2, 1}, gate(GateKind::Vx)},
      {{2, 1, 1, 2}, gate(GateKind::Vz)},
      {{2, 1, 2, -1}, gate(GateKind::Vz)},
      {{2, -1, 2, 1}, gate(GateKind::Vz, true)},
      {{2, 2, 1, -1}, gate(GateKind::Vx, true)},
      {{2, -2, 1, 1}, gate(GateKind::Vx)},
      {{2, 1, 1, -2}, gate(GateKind::Vy, true)},
      {{2, -1, 1, 2}, gate(GateKind::Vy, true)},
      {{2, -1, 1, -2}, gate(GateKind::Vz, true)},
      {{2, -1, 2, -1}, gate(GateKind::Vx, true)},
      {{2, -2, 1, -1}, gate(GateKind::Vy, true)},
  };
  return table;
}

std::array<int, 4> residues(const VMatrix& m) {
  return {centered_mod5(m.m[0].a), centered_mod5(m.m[0].b),
          centered_mod5(m.m[2].a), centered_mod5(m.m[2].b)};
}

}  // namespace

namespace {

// Shortest words for the Clifford elements of the V ring.
const std::map<std::string, Circuit>& short_v_words(bool pauli_v) {
  auto build = [](std::vector<Gate> gens) {
    std::map<std::string, Circuit> out;
    std::deque<std::pair<VMatrix, Circuit>> queue{{VMatrix::identity(), {}}};
    out.emplace(VMatrix::identity().to_string(), Circuit{});
    while (!queue.empty()) {
      auto [m, w] = queue.front();
      queue.pop_front();
      for (Gate g : gens) {
        VMatrix n = m * gate_matrix_v(g);
        Circuit c = w;
        c += g;
        if (out.emplace(n.to_string(), c).second) queue.emplace_back(n, c);
      }
    }
    return out;
  };
  static const auto pauli = build({gate(GateKind::X), gate(GateKind::Y),
                                   gate(GateKind::Z)});
  static const auto clifford = build(
      {gate(GateKind::H), gate(GateKind::S), gate(GateKind::S).inverted(),
       gate(GateKind::W), gate(GateKind::W).inverted(), gate(GateKind::X),
       gate(GateKind::Y), gate(GateKind::Z)});
  return pauli_v ? pauli : clifford;
}

const std::map<std::string, Circuit>& short_t_words() {
  static const auto table = [] {
    std::map<std::string, Circuit> out;
    for (const auto& [m, w] : clifford_table()) out.emplace(m.to_string(), w);
    return out;
  }();
  return table;
}

// Rewrites each maximal Clifford run as a shortest word equal to it up to a
// scalar; the scalars are collected into the last run.
template <class Mat, class Eval>
Circuit compress_runs(const Circuit& c, const std::map<std::string, Circuit>& table,
                      const std::vector<Mat>& phases, Eval eval, bool v_core) {
  std::vector<Circuit> runs(1);
  std::vector<Gate> cores;
  for (const Gate& g : c.gates) {
    if (v_core ? g.is_v() : g.is_t()) {
      cores.push_back(g);
      runs.emplace_back();
    } else {
      runs.back() += g;
    }
  }
  const std::size_t n = phases.size();
  Mat carry = Mat::identity();
  Circuit out;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    Mat m = eval(runs[i]);
    if (i + 1 == runs.size()) {
      auto it = table.find((m * carry).to_string());
      if (it == table.end()) return c;
      out += it->second;
      break;
    }
    const Circuit* best = nullptr;
    std::size_t best_j = 0;
    for (std::size_t j = 0; j < n; ++j) {
      auto it = table.find((m * phases[j]).to_string());
      if (it == table.end()) continue;
      if (!best || it->second.gates.size() < best->gates.size()) {
        best = &it->second;
        best_j = j;
      }
    }
    if (!best) return c;
    out += *best;
    carry = carry * phases[(n - best_j) % n];
    out += cores[i];
  }
  return out;
}

template <class Mat, class Eval>
std::vector<Mat> scalar_powers(const Circuit& unit, int order, Eval eval) {
  std::vector<Mat> out;
  Circuit w;
  for (int j = 0; j < order; ++j) {
    out.push_back(eval(w));
    w += unit;
  }
  return out;
}

}  // namespace

Circuit simplify(const Circuit& c, GateSet gates) {
  switch (gates) {
    case GateSet::CliffordT: {
      static const auto ph =
          scalar_powers<TMatrix>(Circuit::parse("W"), 8, eval_t);
      return compress_runs(c, short_t_words(), ph, eval_t, false);
    }
    case GateSet::CliffordV: {
      static const auto ph =
          scalar_powers<VMatrix>(Circuit::parse("W"), 8, eval_v);
      return compress_runs(c, short_v_words(false), ph, eval_v, true);
    }
    case GateSet::PauliV: {
      static const auto ph =
          scalar_powers<VMatrix>(Circuit::parse("XYZ"), 4, eval_v);
      return compress_runs(c, short_v_words(true), ph, eval_v, true);
    }
  }
  return c;
}

namespace {

}  // namespace

Circuit exact_synth_v(const VMatrix& u, bool pauli_v) {
  MembershipResult mr = membership(u, pauli_v);
  if (!mr.representable) throw NotRepresentable(mr.reason);

  // Left factors g_1, g_2, ... with g_n ... g_1 u = I.
  std::vector<Circuit> applied;
  VMatrix cur = u;
  auto apply = [&](const Candidate& c) {
    applied.push_back(c.word);
    cur = c.m * cur;
  };

  if (cur.k > 0) {
    std::vector<Candidate> cs;
    for (const char* w : {"H", "W", "HW"}) {
      Circuit c = Circuit::parse(w);
      cs.push_back({c, eval_v(c)});
    }
    bool done = false;
    for (const auto& p : pauli_s_group()) {
      for (const auto& c : cs) {
        VMatrix next = c.m * (p.m * cur);
        if (next.k == 0 && next.l == cur.l) {
          apply(p);
          apply(c);
          done = true;
          break;
        }
      }
      if (done) break;
    }
    if (!done) throw std::logic_error("could not clear the sqrt2 exponent");
  }

  while (cur.l > 0) {
    int l = cur.l;
    bool done = false;
    for (const auto& p : pauli_group()) {
      VMatrix pc = p.m * cur;
      auto it = residue_table().find(residues(pc));
      if (it == residue_table().end()) continue;
      Circuit v;
      v += it->second;
      VMatrix next = gate_matrix_v(it->second) * pc;
      if (next.l != l - 1 || next.k != 0) continue;
      apply(p);
      apply({v, gate_matrix_v(it->second)});
      done = true;
      break;
    }
    if (!done) throw std::logic_error("no residue table entry applies");
  }

  // First column is now a Gaussian unit times e_1.
  bool done = false;
  for (const auto& p : pauli_group()) {
    VMatrix pc = p.m * cur;
    if (pc.m[0] != GaussInt(1) || !pc.m[2].is_zero()) continue;
    apply(p);
    done = true;
    break;
  }
  if (!done) throw std::logic_error("first column did not reach e_1");
  const GaussInt& lam = cur.m[3];
  const char* fix = nullptr;
  if (lam == GaussInt(1)) {
    fix = "";
  } else if (lam == GaussInt(-1)) {
    fix = "Z";
  } else if (lam == GaussInt(0, -1)) {
    fix = "S";
  } else if (lam == GaussInt(0, 1)) {
    fix = "ZS";
  }
  if (!fix || (pauli_v && lam.a == 0)) {
    throw NotRepresentable("determinant is not a power of i");
  }
  Circuit f = Circuit::parse(fix);
  apply({f, eval_v(f)});
  if (cur != VMatrix::identity()) throw std::logic_error("fix-up failed");

  Circuit out;
  for (const auto& w : applied) out += w.inverse();
  return simplify(out, pauli_v ? GateSet::PauliV : GateSet::CliffordV);
}

// -------------------------------------------------------------- membership

MembershipResult membership(const TMatrix& u) {
  MembershipResult r;
  r.k = u.k;
  if (!u.is_unitary()) {
    r.reason = "matrix is not unitary";
    return r;
  }
  r.representable = true;
  return r;
}

MembershipResult membership(const VMatrix& u, bool pauli_v) {
  MembershipResult r;
  r.k = u.k;
  r.l = u.l;
  if (u.k > 2) {
    r.reason = "sqrt2 exponent exceeds 2";
    return r;
  }
  if (!u.is_unitary()) {
    r.reason = "matrix is not unitary";
    return r;
  }
  if (!u.det_is_power_of_i()) {
    r.reason = "determinant is not a power of i";
    return r;
  }
  if (pauli_v) {
    GaussInt d = u.det_numerator();
    if (u.k != 0 || d.a == 0) {
      r.reason = "not a Pauli+V operator";
      return r;
    }
  }
  r.representable = true;
  return r;
}

namespace {

int valuation(const Integer& x, unsigned long p) {
  if (x == 0) return 1 << 20;
  int v = 0;
  Integer y = x;
  while (mpz_divisible_ui_p(y.get_mpz_t(), p)) {
    y /= p;
    ++v;
  }
  return v;
}

int valuation(const GaussInt& x, unsigned long p) {
  return std::min(valuation(x.a, p), valuation(x.b, p));
}

Integer ipow(unsigned long b, int e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), b, static_cast<unsigned long>(e));
  return r;
}

}  // namespace

MembershipResult membership_v(const std::array<RadicalEntry, 4>& entries,
                              VMatrix* out) {
  MembershipResult r;
  // Entry g / (sqrt2^k sqrt5^l) uses only the radical sqrt2^(k%2) sqrt5^(l%2).
  int component = -1;
  for (const auto& e : entries) {
    for (int j = 0; j < 4; ++j) {
      if (e.g[j].is_zero()) continue;
      if (component >= 0 && component != j) {
        r.reason = "entries mix radicals";
        return r;
      }
      component = j;
    }
  }
  if (component < 0) {
    r.reason = "zero matrix";
    return r;
  }
  const int pk = component % 2, pl = component / 2;
  // Need 2^(K2 - a) 5^(K5 - b) c integral, with k = 2 K2 - pk.
  int K2 = pk, K5 = pl;
  for (const auto& e : entries) {
    const GaussInt& c = e.g[component];
    if (c.is_zero()) continue;
    K2 = std::max(K2, e.a - valuation(c, 2));
    K5 = std::max(K5, e.b - valuation(c, 5));
  }
  std::array<GaussInt, 4> m;
  for (int i = 0; i < 4; ++i) {
    const auto& e = entries[i];
    const GaussInt& c = e.g[component];
    Integer num = ipow(2, std::max(0, K2 - e.a)) * ipow(5, std::max(0, K5 - e.b));
    Integer den = ipow(2, std::max(0, e.a - K2)) * ipow(5, std::max(0, e.b - K5));
    m[i] = GaussInt(c.a * num / den, c.b * num / den);
  }
  VMatrix v(m, 2 * K2 - pk, 2 * K5 - pl);
  if (out) *out = v;
  return membership(v);
}

}  // namespace ntsynth
