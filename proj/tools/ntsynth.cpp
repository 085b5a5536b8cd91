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

// Command-line front end: rz, su2, exact and grid subcommands.

#include <chrono>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ntsynth/approx.hpp"
#include "ntsynth/exact.hpp"
#include "ntsynth/grid.hpp"
#include "ntsynth/report.hpp"

namespace {

using namespace ntsynth;

constexpr int kExitOk = 0;
constexpr int kExitUnachievable = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct CommonFlags {
  std::string epsilon = "1e-10";
  std::string gate_set = "clifford_t";
  bool up_to_phase = false;
  std::uint64_t seed = 0;
  std::uint64_t effort = kDefaultFactoringEffort;
  bool oracle = false;
  bool json = false;
  bool no_interleave = false;
  std::uint64_t candidate_cap = 1000000;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--epsilon", f.epsilon, "Target accuracy (>= 0)")
      ->capture_default_str();
  cmd->add_option("--gateset", f.gate_set, "clifford_t, clifford_v or pauli_v")
      ->check(CLI::IsMember({"clifford_t", "clifford_v", "pauli_v"}))
      ->capture_default_str();
  cmd->add_flag("--up-to-phase", f.up_to_phase,
                "Allow a global phase of exp(i pi/8) (Clifford+T)");
  cmd->add_option("--seed", f.seed, "Random seed")->capture_default_str();
  cmd->add_option("--effort", f.effort, "Factoring effort per candidate")
      ->capture_default_str();
  cmd->add_flag("--oracle", f.oracle, "Effectively unbounded factoring");
  cmd->add_flag("--json", f.json, "Print the run report as JSON");
  cmd->add_flag("--no-interleave", f.no_interleave,
                "Run the two phase branches separately");
  cmd->add_option("--candidate-cap", f.candidate_cap,
                  "Abort after this many candidates")
      ->capture_default_str();
}

SynthesisOptions options(const CommonFlags& f) {
  SynthesisOptions o;
  o.seed = f.seed;
  o.effort = f.effort;
  o.oracle = f.oracle;
  o.up_to_phase = f.up_to_phase;
  o.interleave = !f.no_interleave;
  o.candidate_cap = f.candidate_cap;
  return o;
}

Interval parse_epsilon(const std::string& s) {
  Interval e;
  try {
    e = Interval::from_string(s);
  } catch (const std::exception&) {
    throw UsageError("invalid epsilon: " + s);
  }
  if (e.lo().sign() < 0) throw UsageError("epsilon must be >= 0");
  return e;
}

RunReport base_report(const std::string& command, const std::string& target,
                      const CommonFlags& f) {
  RunReport r;
  r.version = version();
  r.command = command;
  r.target = target;
  r.epsilon = f.epsilon;
  r.gate_set = f.gate_set;
  r.up_to_phase = f.up_to_phase;
  r.seed = f.seed;
  r.effort = f.effort;
  r.oracle = f.oracle;
  return r;
}

void emit(const RunReport& r, bool json) {
  if (json) {
    std::cout << to_json(r).dump(2) << "\n";
    return;
  }
  std::cout << "circuit: " << r.circuit << "\n";
  std::cout << "count: " << r.count << "\n";
  std::cout << "error: " << r.error_bound << "\n";
  if (r.phase_pi8) std::cout << "phase: exp(i pi/8)\n";
}

template <class F>
int timed_run(RunReport& r, bool json, F synth) {
  auto t0 = std::chrono::steady_clock::now();
  SynthesisResult res = synth();
  auto t1 = std::chrono::steady_clock::now();
  fill_result(r, res);
  r.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  emit(r, json);
  return kExitOk;
}

// ------------------------------------------------------------------- rz

int run_rz(const std::string& theta_text, const CommonFlags& f) {
  AngleSpec theta = parse_angle(theta_text);
  Interval eps = parse_epsilon(f.epsilon);
  GateSet gs = parse_gate_set(f.gate_set);
  RunReport r = base_report("rz", theta_text, f);
  return timed_run(r, f.json,
                   [&] { return approx_rz(theta, eps, gs, options(f)); });
}

// ------------------------------------------------------------------ su2

int run_su2(const std::vector<std::string>& entries, const CommonFlags& f) {
  if (entries.size() != 8) throw UsageError("--entries needs 8 numbers");
  Interval eps = parse_epsilon(f.epsilon);
  if (eps.hi().sign() <= 0) throw UsageError("su2 needs epsilon > 0");
  GateSet gs = parse_gate_set(f.gate_set);
  PrecisionScope scope(2 * precision_for(eps));
  Matrix2 u;
  for (int i = 0; i < 4; ++i) {
    try {
      u[i] = {Interval::from_string(entries[2 * i]),
              Interval::from_string(entries[2 * i + 1])};
    } catch (const std::exception&) {
      throw UsageError("invalid matrix entry");
    }
  }
  std::string target;
  for (const auto& e : entries) target += (target.empty() ? "" : " ") + e;
  RunReport r = base_report("su2", target, f);
  return timed_run(r, f.json, [&] { return approx_su2(u, eps, gs, options(f)); });
}

// ---------------------------------------------------------------- exact

int run_exact(const std::vector<long>& ints, int k, int l, const CommonFlags& f) {
  GateSet gs = parse_gate_set(f.gate_set);
  SynthesisResult res;
  res.gate_set = gs;
  res.error = Interval(0);
  res.exact = true;
  std::string target;
  for (long v : ints) target += (target.empty() ? "" : " ") + std::to_string(v);
  if (gs == GateSet::CliffordT) {
    if (ints.size() != 16) throw UsageError("--entries needs 16 integers");
    std::array<ZOmega, 4> m;
    for (int i = 0; i < 4; ++i) {
      m[i] = ZOmega(ints[4 * i], ints[4 * i + 1], ints[4 * i + 2],
                    ints[4 * i + 3]);
    }
    TMatrix u(m, k);
    MembershipResult mr = membership(u);
    if (!mr.representable) throw NotRepresentable(mr.reason);
    res.circuit = exact_synth_t(u);
    res.t_count = res.circuit.t_count();
    u.normalize();
    res.k = u.k;
    res.t_matrix = u;
  } else {
    if (ints.size() != 8) throw UsageError("--entries needs 8 integers");
    std::array<GaussInt, 4> m;
    for (int i = 0; i < 4; ++i) m[i] = GaussInt(ints[2 * i], ints[2 * i + 1]);
    VMatrix u(m, k, l);
    bool pv = gs == GateSet::PauliV;
    MembershipResult mr = membership(u, pv);
    if (!mr.representable) throw NotRepresentable(mr.reason);
    res.circuit = exact_synth_v(u, pv);
    res.v_count = res.circuit.v_count();
    u.normalize();
    res.k = u.k;
    res.l = u.l;
    res.v_matrix = u;
  }
  CommonFlags g = f;
  g.epsilon = "0";
  RunReport r = base_report("exact", target, g);
  return timed_run(r, f.json, [&] { return res; });
}

// ----------------------------------------------------------------- grid

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, sep)) out.push_back(part);
  return out;
}

// disk:CX,CY,R2 | rect:X0,X1,Y0,Y1 | eps:THETA,EPS
RegionPtr parse_region(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw UsageError("bad region: " + spec);
  std::string kind = spec.substr(0, colon);
  std::vector<std::string> a = split(spec.substr(colon + 1), ',');
  try {
    if (kind == "disk" && a.size() == 3) {
      return std::make_shared<Disk>(
          Vec2{Real::from_string(a[0]), Real::from_string(a[1])},
          Interval::from_string(a[2]));
    }
    if (kind == "rect" && a.size() == 4) {
      return std::make_shared<Rectangle>(
          Real::from_string(a[0]), Real::from_string(a[1]),
          Real::from_string(a[2]), Real::from_string(a[3]));
    }
    if (kind == "eps" && a.size() == 2) {
      Interval theta = parse_angle(a[0]).value();
      return std::make_shared<EpsilonRegion>(rz_matrix(theta)[0],
                                             Interval::from_string(a[1]));
    }
  } catch (const AngleParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError("bad region " + spec + ": " + e.what());
  }
  throw UsageError("bad region: " + spec);
}

int run_grid(const std::string& ring, const std::string& region,
             const std::string& region_b, int kmax, int lmax) {
  PrecisionScope scope(256);
  RegionPtr a = parse_region(region);
  if (ring == "zi") {
    ScaledGridZi grid(a);
    std::vector<ZiSolution> sols;
    for (int l = 0; l <= lmax; ++l) {
      for (int k = 0; k <= kmax; ++k) {
        for (const auto& p : grid.solve(k, l)) sols.push_back({k, l, p});
      }
    }
    dump_solutions(std::cout, sols);
    return kExitOk;
  }
  ScaledGridZOmega grid(a, parse_region(region_b));
  std::vector<ZOmegaSolution> sols;
  for (int k = 0; k <= kmax; ++k) {
    for (const auto& p : grid.solve(k)) sols.push_back({k, p});
  }
  dump_solutions(std::cout, sols);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Number-theoretic synthesis of single-qubit unitaries over Clifford+T "
      "and Clifford+V.\n"
      "Gate words read in matrix product order: the leftmost gate is applied "
      "last.\nA trailing '!' marks an inverse gate. Negative angles: "
      "--theta=-pi/4.",
      "ntsynth"};
  app.set_version_flag("--version", ntsynth::version());
  app.require_subcommand(1);

  CommonFlags flags;
  std::string theta;
  auto* rz = app.add_subcommand("rz", "Approximate Rz(theta)");
  rz->add_option("--theta", theta, "Angle: [-][INT*]pi[/INT] or a decimal")
      ->required();
  add_common(rz, flags);

  std::vector<std::string> su2_entries;
  auto* su2 = app.add_subcommand("su2", "Approximate a special unitary");
  su2->add_option("--entries", su2_entries,
                  "Re/Im of u00 u01 u10 u11 (8 numbers)")
      ->required()
      ->expected(8);
  add_common(su2, flags);

  std::vector<long> exact_entries;
  int k = 0, l = 0;
  auto* exact = app.add_subcommand("exact", "Exact synthesis of a ring matrix");
  exact
      ->add_option("--entries", exact_entries,
                   "clifford_t: a0..a3 per entry (16 integers), entry = "
                   "sum a_j omega^j / sqrt2^k; clifford_v: Re Im per entry "
                   "(8 integers), entry = x / (sqrt2^k sqrt5^l)")
      ->required();
  exact->add_option("--k", k, "sqrt2 denominator exponent");
  exact->add_option("--l", l, "sqrt5 denominator exponent");
  add_common(exact, flags);

  std::string ring = "zi", region, region_b = "disk:0,0,1";
  int kmax = 2, lmax = 2;
  auto* grid = app.add_subcommand("grid", "Dump scaled grid solutions");
  grid->add_option("--ring", ring, "zi or zomega")
      ->check(CLI::IsMember({"zi", "zomega"}))
      ->capture_default_str();
  grid->add_option("--region", region,
                   "disk:CX,CY,R2 | rect:X0,X1,Y0,Y1 | eps:THETA,EPS")
      ->required();
  grid->add_option("--region-b", region_b, "Second region (zomega)")
      ->capture_default_str();
  grid->add_option("--kmax", kmax, "Largest sqrt2 exponent")
      ->capture_default_str();
  grid->add_option("--lmax", lmax, "Largest sqrt5 exponent (zi)")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*rz) return run_rz(theta, flags);
    if (*su2) return run_su2(su2_entries, flags);
    if (*exact) return run_exact(exact_entries, k, l, flags);
    if (*grid) return run_grid(ring, region, region_b, kmax, lmax);
  } catch (const Unachievable& e) {
    std::cerr << "unachievable: " << e.what() << "\n";
    return kExitUnachievable;
  } catch (const NotRepresentable& e) {
    std::cerr << "not representable: " << e.what() << "\n";
    return kExitUnachievable;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "aborted: " << e.what() << "\n";
    return kExitUnachievable;
  }
  return kExitUsage;
}
