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

#include "ntsynth/approx.hpp"

#include <algorithm>
#include <limits>
#include <memory>

#include "ntsynth/exact.hpp"
#include "ntsynth/grid.hpp"

namespace ntsynth {

// --------------------------------------------------------------- AngleSpec

AngleSpec AngleSpec::pi_fraction(Integer num, Integer den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Integer g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (g != 0) {
    num /= g;
    den /= g;
  }
  AngleSpec a;
  a.kind_ = Kind::PiRational;
  a.num_ = num;
  a.den_ = den;
  return a;
}

AngleSpec AngleSpec::decimal(std::string literal) {
  AngleSpec a;
  a.kind_ = Kind::Decimal;
  a.literal_ = std::move(literal);
  Interval::from_string(a.literal_);
  return a;
}

AngleSpec AngleSpec::enclosure(Interval value) {
  AngleSpec a;
  a.kind_ = Kind::Enclosure;
  a.value_ = std::move(value);
  return a;
}

Interval AngleSpec::value() const {
  switch (kind_) {
    case Kind::PiRational:
      return Interval::pi() * Interval(num_) / Interval(den_);
    case Kind::Decimal:
      return Interval::from_string(literal_);
    case Kind::Enclosure:
      return value_;
  }
  return Interval(0);
}

bool AngleSpec::is_exact_zero() const {
  switch (kind_) {
    case Kind::PiRational:
      return num_ == 0;
    case Kind::Decimal: {
      Interval v = Interval::from_string(literal_);
      return v.lo().is_zero() && v.hi().is_zero();
    }
    case Kind::Enclosure:
      return value_.lo().is_zero() && value_.hi().is_zero();
  }
  return false;
}

std::string AngleSpec::to_string() const {
  switch (kind_) {
    case Kind::PiRational: {
      std::string s;
      if (num_ == 0) return "0";
      if (num_ == -1) {
        s = "-pi";
      } else if (num_ == 1) {
        s = "pi";
      } else {
        s = num_.get_str() + "*pi";
      }
      if (den_ != 1) s += "/" + den_.get_str();
      return s;
    }
    case Kind::Decimal:
      return literal_;
    case Kind::Enclosure:
      return value_.mid().to_string(30);
  }
  return "";
}

// ---------------------------------------------------------------- distance

long precision_for(const Interval& eps) {
  if (!(eps.lo().sign() > 0)) return 64;
  PrecisionScope scope(64);
  Real bits = -log(eps.lo()) / log(Real(2));
  long need = 2 * static_cast<long>(bits.ceil().get_si()) + 64;
  return std::max(64L, need);
}

Matrix2 rz_matrix(const Interval& theta) {
  Interval half = theta / Interval(2);
  Interval c = cos(half), s = sin(half);
  return {ComplexInterval{c, -s}, ComplexInterval{Interval(0), Interval(0)},
          ComplexInterval{Interval(0), Interval(0)}, ComplexInterval{c, s}};
}

Matrix2 to_intervals(const TMatrix& u) {
  return {u.entry(0), u.entry(1), u.entry(2), u.entry(3)};
}

Matrix2 to_intervals(const VMatrix& u) {
  return {u.entry(0), u.entry(1), u.entry(2), u.entry(3)};
}

Interval operator_distance(const Matrix2& a, const Matrix2& b) {
  Matrix2 m;
  for (int i = 0; i < 4; ++i) m[i] = a[i] - b[i];
  Interval f = norm_sq(m[0]) + norm_sq(m[1]) + norm_sq(m[2]) + norm_sq(m[3]);
  Interval d = norm_sq(m[0] * m[3] - m[1] * m[2]);
  Interval disc = square(f) - Interval(4) * d;
  if (disc.hi().sign() < 0) disc = Interval(0);
  Interval s2 = (f + sqrt(disc)) / Interval(2);
  if (s2.hi().sign() < 0) s2 = Interval(0);
  return sqrt(s2);
}

Interval rz_distance(const ComplexInterval& z, const ComplexInterval& x) {
  Interval d = Interval(2) - Interval(2) * (z.re * x.re + z.im * x.im);
  if (d.hi().sign() < 0) d = Interval(0);
  return sqrt(d);
}

namespace {

ComplexInterval scale(const ComplexInterval& x, const Interval& s) {
  return {x.re / s, x.im / s};
}

ComplexInterval phase_pi8() {
  Interval a = Interval::pi() / Interval(8);
  return {cos(a), sin(a)};
}

Matrix2 times(const ComplexInterval& c, const Matrix2& m) {
  return {c * m[0], c * m[1], c * m[2], c * m[3]};
}

std::uint64_t factoring_budget(const SynthesisOptions& opts) {
  return opts.oracle ? std::numeric_limits<std::uint64_t>::max() / 4
                     : opts.effort;
}

// Shared state of one rotation search.
struct Search {
  const SynthesisOptions& opts;
  Interval eps;
  ComplexInterval z;
  RandomSource rng;
  std::uint64_t tried = 0;
  std::uint64_t effort = 0;

  AngleSpec theta;
  long base_prec;

  Search(const SynthesisOptions& o, const Interval& e, const AngleSpec& t)
      : opts(o), eps(e), rng(o.seed), theta(t), base_prec(working_precision()) {
    z = rz_matrix(theta.value())[0];
  }

  // Target entry at the current working precision.
  ComplexInterval target() const {
    if (working_precision() == base_prec) return z;
    return rz_matrix(theta.value())[0];
  }

  void count_candidate() {
    if (++tried > opts.candidate_cap) {
      throw Unachievable("candidate cap reached after " +
                         std::to_string(opts.candidate_cap) + " candidates");
    }
  }

  bool certified(const Interval& err) const { return err.hi() <= eps.lo(); }

  // Recomputes at doubled precision while the comparison is inconclusive.
  template <class F>
  Interval settle(F f) const {
    Interval e = f();
    long prec = working_precision();
    for (int r = 0; r < 3 && !certified(e) && e.lo() <= eps.hi(); ++r) {
      prec *= 2;
      PrecisionScope up(prec);
      e = f();
    }
    return e;
  }

  std::optional<Factorization> factor(const Integer& n) {
    Factorization f = factor_bounded(n, factoring_budget(opts), rng);
    effort += f.effort_spent;
    if (!f.complete) return std::nullopt;
    return f;
  }

  void finish(SynthesisResult& r) const {
    r.candidates_tried = tried;
    r.factoring_effort = effort;
  }
};

SynthesisResult make_t_result(const Circuit& c, const TMatrix& m,
                              const Interval& err, bool phase) {
  SynthesisResult r;
  r.gate_set = GateSet::CliffordT;
  r.circuit = c;
  r.t_count = c.t_count();
  r.k = m.k;
  r.error = err;
  r.phase_pi8 = phase;
  r.t_matrix = m;
  return r;
}

// Clifford operators within eps, optionally up to exp(i pi/8).
std::optional<SynthesisResult> clifford_t_shortcut(Search& s,
                                                   const Matrix2& target,
                                                   bool with_phase) {
  std::optional<SynthesisResult> best;
  ComplexInterval ph = phase_pi8();
  for (const auto& [m, w] : clifford_table()) {
    Matrix2 mi = to_intervals(m);
    for (int p = 0; p < (with_phase ? 2 : 1); ++p) {
      Interval err = operator_distance(p ? times(ph, mi) : mi, target);
      if (!s.certified(err)) continue;
      if (!best || err.hi() < best->error.hi()) {
        best = make_t_result(w, m, err, p == 1);
      }
    }
  }
  return best;
}

// Clifford+T search over one branch at grid scale k.
class TBranch {
 public:
  TBranch(Search& s, bool phase) : s_(s), phase_(phase) {
    ComplexInterval z = s.z;
    if (!phase) {
      grid_ = std::make_unique<ScaledGridZOmega>(
          std::make_shared<EpsilonRegion>(z, s.eps),
          std::make_shared<Disk>(Vec2{Real(0), Real(0)}, Interval(1)));
    } else {
      Interval r2 = Interval(2) + Interval::sqrt2();
      Interval rb2 = Interval(2) - Interval::sqrt2();
      grid_ = std::make_unique<ScaledGridZOmega>(
          std::make_shared<EpsilonRegion>(z, s.eps, r2),
          std::make_shared<Disk>(Vec2{Real(0), Real(0)}, rb2));
    }
  }

  std::optional<SynthesisResult> level(int k) {
    std::optional<SynthesisResult> found;
    grid_->visit(k, [&](const ZOmega& w) {
      found = candidate(w, k);
      return found.has_value();
    });
    return found;
  }

 private:
  std::optional<SynthesisResult> candidate(const ZOmega& w, int k) {
    const ZOmega omega_inv = ZOmega::omega_pow(7);
    const ZOmega shift = ZOmega::omega() - ZOmega::i();
    if (k > 0 && w.divisible_by_sqrt2()) return std::nullopt;
    s_.count_candidate();
    ZOmega u = phase_ ? w * shift : w;
    int kk = phase_ ? k + 1 : k;
    // lambda x = w / (|delta| sqrt2^k) on the phase branch.
    Interval err = s_.settle([&] {
      if (!phase_) {
        return rz_distance(s_.target(), scale(u.certify(), scale_factor(kk)));
      }
      Interval d = sqrt(Interval(2) + Interval::sqrt2());
      return rz_distance(s_.target(),
                         scale(w.certify(), d * scale_factor(k)));
    });
    if (!s_.certified(err)) return std::nullopt;
    Integer two_k;
    mpz_ui_pow_ui(two_k.get_mpz_t(), 2, static_cast<unsigned long>(kk));
    auto xi = (ZOmega(two_k, 0, 0, 0) - u.dagger() * u).to_zroot2();
    if (!xi || xi->sign() < 0 || xi->bullet().sign() < 0) return std::nullopt;
    std::optional<ZOmega> t;
    if (xi->is_zero()) {
      t = ZOmega(0);
    } else {
      auto f = s_.factor(xi->norm());
      if (!f) return std::nullopt;
      t = solve_norm_zomega(*xi, *f);
    }
    if (!t) return std::nullopt;
    ZOmega ph = phase_ ? omega_inv : ZOmega(1);
    TMatrix m({u, -(t->dagger()) * ph, *t, u.dagger() * ph}, kk);
    TMatrix tm = gate_matrix_t({GateKind::T, false});
    TMatrix m2 = tm * m * tm.adjoint();
    Circuit c1 = exact_synth_t(m), c2 = exact_synth_t(m2);
    if (c2.t_count() < c1.t_count()) {
      return make_t_result(c2, m2, err, phase_);
    }
    return make_t_result(c1, m, err, phase_);
  }

  Search& s_;
  bool phase_;
  std::unique_ptr<ScaledGridZOmega> grid_;
};

constexpr int kMaxLevel = 4000;

bool exact_zero_eps(const Interval& eps) { return eps.hi().sign() <= 0; }

// Rz(theta) or exp(-i pi/8) Rz(theta) as a Clifford+T operator.
std::optional<TMatrix> exact_rz_t(const AngleSpec& theta, bool phase) {
  if (theta.is_exact_zero()) return TMatrix::identity();
  if (theta.kind() != AngleSpec::Kind::PiRational) return std::nullopt;
  Integer four_p = 4 * theta.num();
  if (!mpz_divisible_p(four_p.get_mpz_t(), theta.den().get_mpz_t())) {
    return std::nullopt;
  }
  Integer j = four_p / theta.den();
  long jm = static_cast<long>(Integer(j % 16).get_si());
  bool odd = (jm % 2) != 0;
  if (odd != phase) return std::nullopt;
  // Diagonal exponents of omega: -(j + odd) / 2 and (j - odd) / 2.
  long e0 = -(jm + (odd ? 1 : 0)) / 2, e1 = (jm - (odd ? 1 : 0)) / 2;
  return TMatrix({ZOmega::omega_pow(e0), 0, 0, ZOmega::omega_pow(e1)}, 0);
}

SynthesisResult exact_result_t(const AngleSpec& theta, bool allow_phase) {
  for (int p = 0; p < (allow_phase ? 2 : 1); ++p) {
    if (auto m = exact_rz_t(theta, p == 1)) {
      SynthesisResult r = make_t_result(exact_synth_t(*m), *m, Interval(0), p);
      r.exact = true;
      return r;
    }
  }
  throw Unachievable("the rotation is not exactly representable");
}

}  // namespace

SynthesisResult approx_rz_t(const AngleSpec& theta, const Interval& eps,
                            const SynthesisOptions& opts) {
  if (exact_zero_eps(eps)) return exact_result_t(theta, false);
  PrecisionScope scope(2 * precision_for(eps));
  Search s(opts, eps, theta);
  Matrix2 target = rz_matrix(theta.value());
  if (auto r = clifford_t_shortcut(s, target, false)) {
    s.finish(*r);
    return *r;
  }
  TBranch branch(s, false);
  for (int k = 0; k <= kMaxLevel; ++k) {
    if (auto r = branch.level(k)) {
      s.finish(*r);
      return *r;
    }
  }
  throw Unachievable("no solution up to the maximal exponent");
}

SynthesisResult approx_rz_t_phase(const AngleSpec& theta, const Interval& eps,
                                  const SynthesisOptions& opts) {
  if (exact_zero_eps(eps)) return exact_result_t(theta, true);
  if (!opts.interleave) {
    SynthesisResult a = approx_rz_t(theta, eps, opts);
    if (a.t_count == 0) return a;
    PrecisionScope scope(2 * precision_for(eps));
    Search s(opts, eps, theta);
    std::optional<SynthesisResult> b =
        clifford_t_shortcut(s, rz_matrix(theta.value()), true);
    TBranch phase(s, true);
    for (int k = 0; !b && k <= kMaxLevel; ++k) b = phase.level(k);
    if (!b) return a;
    s.finish(*b);
    SynthesisResult& best = b->t_count < a.t_count ? *b : a;
    best.candidates_tried = a.candidates_tried + b->candidates_tried;
    best.factoring_effort = a.factoring_effort + b->factoring_effort;
    return best;
  }

  PrecisionScope scope(2 * precision_for(eps));
  Search s(opts, eps, theta);
  if (auto r = clifford_t_shortcut(s, rz_matrix(theta.value()), true)) {
    s.finish(*r);
    return *r;
  }
  TBranch plain(s, false), phase(s, true);
  // Ordered by T-count: 0, 0, 1, 1, then 2k-2 and 2k-1 alternately.
  std::vector<std::pair<TBranch*, int>> stages = {
      {&plain, 0}, {&plain, 1}, {&phase, 0}, {&phase, 1}};
  for (int k = 2; k <= kMaxLevel; ++k) {
    stages.push_back({&plain, k});
    stages.push_back({&phase, k});
  }
  for (auto [b, k] : stages) {
    if (auto r = b->level(k)) {
      s.finish(*r);
      return *r;
    }
  }
  throw Unachievable("no solution up to the maximal exponent");
}

// -------------------------------------------------------------- Clifford+V

namespace {

SynthesisResult make_v_result(const Circuit& c, const VMatrix& m,
                              const Interval& err, GateSet g) {
  SynthesisResult r;
  r.gate_set = g;
  r.circuit = c;
  r.v_count = c.v_count();
  r.k = m.k;
  r.l = m.l;
  r.error = err;
  r.v_matrix = m;
  return r;
}

std::vector<Circuit> v_shortcut_words(bool pauli_v) {
  std::vector<Circuit> out;
  if (pauli_v) {
    for (const char* p : {"", "X", "Y", "Z"}) {
      for (int ph = 0; ph < 4; ++ph) {
        Circuit c = Circuit::parse(p);
        for (int j = 0; j < ph; ++j) c += Circuit::parse("XYZ");
        out.push_back(c);
      }
    }
    return out;
  }
  for (const auto& e : clifford_table()) out.push_back(e.second);
  return out;
}

}  // namespace

SynthesisResult approx_rz_v(const AngleSpec& theta, const Interval& eps,
                            const SynthesisOptions& opts, bool pauli_v) {
  const GateSet gs = pauli_v ? GateSet::PauliV : GateSet::CliffordV;
  if (exact_zero_eps(eps)) {
    auto m = exact_rz_t(theta, false);
    if (!m) throw Unachievable("the rotation is not exactly representable");
    // omega^(2j) = i^j; omega^(2j+1) = i^j (1 + i) / sqrt2.
    bool odd = !m->m[0].to_gauss();
    std::array<GaussInt, 4> e{0, 0, 0, 0};
    for (int i : {0, 3}) {
      ZOmega x = odd ? m->m[i] * ZOmega::omega_pow(7) : m->m[i];
      GaussInt g = *x.to_gauss();
      e[i] = odd ? g * GaussInt(1, 1) : g;
    }
    VMatrix v;
    v = VMatrix(e, odd ? 1 : 0, 0);
    SynthesisResult r =
        make_v_result(exact_synth_v(v, pauli_v), v, Interval(0), gs);
    r.exact = true;
    return r;
  }
  PrecisionScope scope(2 * precision_for(eps));
  Search s(opts, eps, theta);
  Matrix2 target = rz_matrix(theta.value());

  std::optional<SynthesisResult> best;
  for (const Circuit& w : v_shortcut_words(pauli_v)) {
    VMatrix m = eval_v(w);
    Interval err = operator_distance(to_intervals(m), target);
    if (!s.certified(err)) continue;
    if (!best || err.hi() < best->error.hi()) {
      best = make_v_result(w, m, err, gs);
    }
  }
  if (best) {
    s.finish(*best);
    return *best;
  }

  ScaledGridZi grid(std::make_shared<EpsilonRegion>(s.z, eps));
  for (int l = 0; l <= kMaxLevel; ++l) {
    for (int k = 0; k <= (pauli_v ? 0 : 2); ++k) {
      std::optional<SynthesisResult> found;
      grid.visit(k, l, [&](const GaussInt& alpha) {
        if (k == 2 && alpha.divisible_by(2)) return false;
        if (l >= 2 && alpha.divisible_by(5)) return false;
        s.count_candidate();
        Interval err = s.settle([&] {
          return rz_distance(s.target(), scale(alpha.certify(), scale_factor(k, l)));
        });
        if (!s.certified(err)) return false;
        Integer bound;
        mpz_ui_pow_ui(bound.get_mpz_t(), 5, static_cast<unsigned long>(l));
        bound <<= k;
        Integer n = bound - alpha.norm();
        if (n < 0) return false;
        std::optional<GaussInt> beta;
        if (n == 0) {
          beta = GaussInt(0);
        } else {
          auto f = s.factor(n);
          if (!f) return false;
          beta = solve_norm_zi(n, *f);
        }
        if (!beta) return false;
        VMatrix m({alpha, -beta->dagger(), *beta, alpha.dagger()}, k, l);
        found = make_v_result(exact_synth_v(m, pauli_v), m, err, gs);
        return true;
      });
      if (found) {
        s.finish(*found);
        return *found;
      }
    }
  }
  throw Unachievable("no solution up to the maximal exponent");
}

SynthesisResult approx_rz(const AngleSpec& theta, const Interval& eps,
                          GateSet gates, const SynthesisOptions& opts) {
  switch (gates) {
    case GateSet::CliffordT:
      return opts.up_to_phase ? approx_rz_t_phase(theta, eps, opts)
                              : approx_rz_t(theta, eps, opts);
    case GateSet::CliffordV:
      return approx_rz_v(theta, eps, opts, false);
    case GateSet::PauliV:
      return approx_rz_v(theta, eps, opts, true);
  }
  throw std::invalid_argument("unknown gate set");
}

// -------------------------------------------------------------------- SU(2)

namespace {

Real arg(const ComplexInterval& c) { return atan2(c.im.mid(), c.re.mid()); }

Real modulus(const ComplexInterval& c) {
  return sqrt(c.re.mid() * c.re.mid() + c.im.mid() * c.im.mid());
}

Matrix2 mul(const Matrix2& x, const Matrix2& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
          x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

Matrix2 rx_matrix(const Interval& theta) {
  Interval half = theta / Interval(2);
  Interval c = cos(half), s = sin(half);
  return {ComplexInterval{c, Interval(0)}, ComplexInterval{Interval(0), -s},
          ComplexInterval{Interval(0), -s}, ComplexInterval{c, Interval(0)}};
}

Interval point(const Real& x) { return Interval(x, x); }

}  // namespace

EulerAngles euler_decompose(const Matrix2& u) {
  ComplexInterval det = u[0] * u[3] - u[1] * u[2];
  Real tol = Real::from_string("1e-6");
  if (abs(det.re.mid() - Real(1)) > tol || abs(det.im.mid()) > tol) {
    throw std::invalid_argument("matrix is not special unitary");
  }
  Interval g = norm_sq(u[0]) + norm_sq(u[2]);
  if (abs(g.mid() - Real(1)) > tol) {
    throw std::invalid_argument("matrix is not unitary");
  }
  const ComplexInterval& alpha = u[0];
  const ComplexInterval& beta = u[2];
  Real ma = modulus(alpha), mb = modulus(beta);
  Real half_pi = Real::pi() / Real(2);
  Real eps = pow(Real(2), Real(-(working_precision() / 2)));
  EulerAngles e{Real(0), Real(2) * atan2(mb, ma), Real(0)};
  if (mb <= eps) {
    e.a = Real(-2) * arg(alpha);
  } else if (ma <= eps) {
    e.a = Real(2) * arg(beta) + Real::pi();
  } else {
    e.a = -arg(alpha) + arg(beta) + half_pi;
    e.c = -arg(alpha) - arg(beta) - half_pi;
  }
  return e;
}

SynthesisResult approx_su2(const Matrix2& u, const Interval& eps, GateSet gates,
                           const SynthesisOptions& opts) {
  if (gates == GateSet::PauliV) {
    throw std::invalid_argument("SU(2) synthesis needs the H gate");
  }
  if (!(eps.lo().sign() > 0)) throw std::invalid_argument("epsilon must be > 0");
  PrecisionScope scope(2 * precision_for(eps));
  EulerAngles e = euler_decompose(u);
  Matrix2 recon = mul(mul(rz_matrix(point(e.a)), rx_matrix(point(e.b))),
                      rz_matrix(point(e.c)));
  Interval recon_err = operator_distance(recon, u);
  Real budget = eps.lo() - recon_err.hi();
  if (budget.sign() <= 0) throw Unachievable("input is not close to SU(2)");

  const Real margin = Real(1) - Real::from_string("1e-6");
  Real sub = budget / Real(3) * margin;
  for (int attempt = 0; attempt < 4; ++attempt, sub = sub / Real(2)) {
    SynthesisResult parts[3];
    const Real* angles[3] = {&e.a, &e.b, &e.c};
    std::uint64_t tried = 0, effort = 0;
    for (int i = 0; i < 3; ++i) {
      parts[i] = approx_rz(AngleSpec::enclosure(point(*angles[i])),
                           Interval(sub, sub), gates, opts);
      tried += parts[i].candidates_tried;
      effort += parts[i].factoring_effort;
    }
    Circuit c = parts[0].circuit;
    c += Gate{GateKind::H, false};
    c += parts[1].circuit;
    c += Gate{GateKind::H, false};
    c += parts[2].circuit;
    int phases = 0;
    for (const auto& p : parts) phases += p.phase_pi8 ? 1 : 0;
    // exp(i pi m / 8) = omega^(m/2) for even m; fold into W gates.
    for (int j = 0; j < phases / 2; ++j) c += Gate{GateKind::W, true};
    bool odd = phases % 2 == 1;
    c = simplify(c, gates);

    SynthesisResult r;
    r.gate_set = gates;
    r.circuit = c;
    r.phase_pi8 = odd;
    Matrix2 m;
    if (gates == GateSet::CliffordT) {
      TMatrix tm = eval_t(c);
      r.t_matrix = tm;
      r.k = tm.k;
      m = to_intervals(tm);
    } else {
      VMatrix vm = eval_v(c);
      r.v_matrix = vm;
      r.k = vm.k;
      r.l = vm.l;
      m = to_intervals(vm);
    }
    if (odd) m = times(phase_pi8(), m);
    r.t_count = c.t_count();
    r.v_count = c.v_count();
    r.error = operator_distance(m, u);
    r.candidates_tried = tried;
    r.factoring_effort = effort;
    if (r.error.hi() <= eps.lo()) return r;
  }
  throw Unachievable("could not certify the composed circuit");
}

}  // namespace ntsynth
