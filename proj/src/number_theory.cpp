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

#include "ntsynth/number_theory.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ntsynth {

namespace {

constexpr unsigned kTrialLimit = 10000;

const std::vector<unsigned>& small_primes() {
  static const std::vector<unsigned> primes = [] {
    std::vector<bool> composite(kTrialLimit + 1, false);
    std::vector<unsigned> out;
    for (unsigned i = 2; i <= kTrialLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (unsigned j = i * i; j <= kTrialLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

Integer mod_pos(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer powmod(const Integer& b, const Integer& e, const Integer& m) {
  Integer r;
  mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Nearest integer to p/n for n > 0.
Integer round_div(const Integer& p, const Integer& n) {
  Integer q;
  Integer t = 2 * p + n;
  Integer d = 2 * n;
  mpz_fdiv_q(q.get_mpz_t(), t.get_mpz_t(), d.get_mpz_t());
  return q;
}

bool strong_probable_prime(const Integer& n, const Integer& base,
                           const Integer& d, unsigned s) {
  Integer nm1 = n - 1;
  Integer x = powmod(base, d, n);
  if (x == 1 || x == nm1) return true;
  for (unsigned i = 1; i < s; ++i) {
    x = x * x % n;
    if (x == nm1) return true;
    if (x == 1) return false;
  }
  return false;
}

// Pollard-Brent; returns a nontrivial factor or 0 when the budget runs out.
Integer rho_factor(const Integer& n, std::uint64_t& budget, std::uint64_t& spent,
                   RandomSource& rng) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  constexpr std::uint64_t kBatch = 64;
  while (budget > 0) {
    Integer y = rng.uniform(1, n - 1);
    Integer c = rng.uniform(1, n - 1);
    Integer g = 1, q = 1, x, ys;
    std::uint64_t r = 1;
    auto f = [&](Integer& v) {
      v = (v * v + c) % n;
      ++spent;
      if (budget > 0) --budget;
    };
    while (g == 1 && budget > 0) {
      x = y;
      for (std::uint64_t i = 0; i < r && budget > 0; ++i) f(y);
      std::uint64_t k = 0;
      while (k < r && g == 1 && budget > 0) {
        ys = y;
        std::uint64_t lim = std::min(kBatch, r - k);
        for (std::uint64_t i = 0; i < lim && budget > 0; ++i) {
          f(y);
          Integer diff = x - y;
          q = q * abs(diff) % n;
        }
        g = gcd(q, n);
        k += kBatch;
      }
      r *= 2;
    }
    if (g == 1) return 0;
    if (g == n) {
      do {
        f(ys);
        Integer diff = x - ys;
        g = gcd(abs(diff), n);
      } while (g == 1 && budget > 0);
    }
    if (g != n && g != 1) return g;
  }
  return 0;
}

// Returns (r, e) with n = r^e and e maximal.
std::pair<Integer, int> perfect_power(const Integer& n) {
  std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  for (unsigned long e = bits; e >= 2; --e) {
    Integer r;
    if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), e) != 0) {
      return {r, static_cast<int>(e)};
    }
  }
  return {n, 1};
}

}  // namespace

Integer RandomSource::uniform(const Integer& lo, const Integer& hi) {
  Integer span = hi - lo + 1;
  if (span <= 0) throw std::invalid_argument("empty range");
  // Rejection sampling over 64-bit limbs.
  std::size_t bits = mpz_sizeinbase(span.get_mpz_t(), 2);
  for (;;) {
    Integer v = 0;
    for (std::size_t got = 0; got < bits; got += 64) {
      v <<= 64;
      std::uint64_t w = next();
      Integer limb;
      mpz_import(limb.get_mpz_t(), 1, 1, sizeof(w), 0, 0, &w);
      v += limb;
    }
    Integer mask = (Integer(1) << bits) - 1;
    v &= mask;
    if (v < span) return lo + v;
  }
}

bool is_probable_prime(const Integer& n, RandomSource& rng) {
  if (n < 2) return false;
  for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  Integer d = n - 1;
  unsigned s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d >>= 1;
    ++s;
  }
  for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (!strong_probable_prime(n, p, d, s)) return false;
  }
  // The twelve bases above are a proof below 3.3e24 > 2^64.
  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) return true;
  for (int round = 0; round < 16; ++round) {
    Integer a = rng.uniform(2, n - 2);
    if (!strong_probable_prime(n, a, d, s)) return false;
  }
  return true;
}

bool is_prime(const Integer& n) {
  RandomSource rng(0x9e3779b97f4a7c15ULL);
  return is_probable_prime(n, rng);
}

Factorization factor_bounded(const Integer& n, std::uint64_t effort,
                             RandomSource& rng) {
  if (n < 1) throw std::invalid_argument("factor_bounded requires n >= 1");
  Factorization out;
  std::map<Integer, int> acc;
  Integer m = n;
  for (unsigned p : small_primes()) {
    if (m == 1) break;
    if (Integer(p) * p > m) break;
    ++out.effort_spent;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      m /= p;
      ++acc[Integer(p)];
    }
  }
  std::uint64_t budget = effort;
  std::vector<std::pair<Integer, int>> work;
  if (m > 1) work.emplace_back(m, 1);
  Integer remainder = 1;
  while (!work.empty()) {
    auto [c, mult] = work.back();
    work.pop_back();
    if (c == 1) continue;
    if (is_probable_prime(c, rng)) {
      acc[c] += mult;
      continue;
    }
    auto [root, e] = perfect_power(c);
    if (e > 1) {
      work.emplace_back(root, mult * e);
      continue;
    }
    Integer f = rho_factor(c, budget, out.effort_spent, rng);
    if (f == 0) {
      out.complete = false;
      for (int i = 0; i < mult; ++i) remainder *= c;
      continue;
    }
    work.emplace_back(f, mult);
    work.emplace_back(c / f, mult);
  }
  // Merge factors that were split into equal primes along different paths.
  for (auto& [p, e] : acc) out.factors.emplace_back(p, e);
  out.remainder = remainder;
  return out;
}

std::optional<Integer> sqrt_mod(const Integer& a_in, const Integer& p) {
  Integer a = mod_pos(a_in, p);
  if (a == 0) return Integer(0);
  if (p == 2) return a;
  if (mpz_legendre(a.get_mpz_t(), p.get_mpz_t()) != 1) return std::nullopt;
  Integer q = p - 1;
  unsigned s = 0;
  while (mpz_even_p(q.get_mpz_t())) {
    q >>= 1;
    ++s;
  }
  if (s == 1) return powmod(a, (p + 1) / 4, p);
  Integer z = 2;
  while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;
  Integer c = powmod(z, q, p);
  Integer r = powmod(a, (q + 1) / 2, p);
  Integer t = powmod(a, q, p);
  unsigned m = s;
  while (t != 1) {
    unsigned i = 0;
    Integer t2 = t;
    while (t2 != 1) {
      t2 = t2 * t2 % p;
      ++i;
    }
    Integer b = c;
    for (unsigned j = 0; j + i + 1 < m; ++j) b = b * b % p;
    r = r * b % p;
    c = b * b % p;
    t = t * c % p;
    m = i;
  }
  return r;
}

// ------------------------------------------------------- Euclidean division

std::pair<GaussInt, GaussInt> divmod(const GaussInt& x, const GaussInt& y) {
  Integer n = y.norm();
  if (n == 0) throw std::domain_error("division by zero");
  GaussInt p = x * y.dagger();
  GaussInt q(round_div(p.a, n), round_div(p.b, n));
  return {q, x - q * y};
}

std::pair<ZRoot2, ZRoot2> divmod(const ZRoot2& x, const ZRoot2& y) {
  Integer n = y.norm();
  if (n == 0) throw std::domain_error("division by zero");
  ZRoot2 p = x * y.bullet();
  if (n < 0) {
    n = -n;
    p = -p;
  }
  ZRoot2 q(round_div(p.a, n), round_div(p.b, n));
  return {q, x - q * y};
}

std::pair<ZOmega, ZOmega> divmod(const ZOmega& x, const ZOmega& y) {
  Integer n = y.norm();
  if (n == 0) throw std::domain_error("division by zero");
  ZOmega yb = y.bullet();
  ZOmega p = x * y.dagger() * yb * yb.dagger();
  ZOmega q(round_div(p.a0, n), round_div(p.a1, n), round_div(p.a2, n),
           round_div(p.a3, n));
  ZOmega r = x - q * y;
  if (r.norm() < n) return {q, r};
  // Rounding ties can leave N(r) = N(y); search the neighbouring lattice box.
  Integer fl[4], num[4] = {p.a0, p.a1, p.a2, p.a3};
  for (int i = 0; i < 4; ++i) {
    mpz_fdiv_q(fl[i].get_mpz_t(), num[i].get_mpz_t(), n.get_mpz_t());
  }
  ZOmega best_q = q, best_r = r;
  Integer best = r.norm();
  for (int mask = 0; mask < 16; ++mask) {
    ZOmega c(fl[0] + (mask & 1), fl[1] + ((mask >> 1) & 1),
             fl[2] + ((mask >> 2) & 1), fl[3] + ((mask >> 3) & 1));
    ZOmega rr = x - c * y;
    Integer nn = rr.norm();
    if (nn < best) {
      best = nn;
      best_q = c;
      best_r = rr;
    }
  }
  return {best_q, best_r};
}

namespace {

template <typename R>
R euclid(R x, R y) {
  if (x.is_zero() && y.is_zero()) throw std::invalid_argument("gcd(0, 0)");
  while (!y.is_zero()) {
    R r = divmod(x, y).second;
    if (abs(Integer(r.norm())) >= abs(Integer(y.norm()))) {
      throw std::logic_error("Euclidean step failed to reduce the norm");
    }
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

template <typename R>
R power(R base, int e) {
  R r(1);
  for (; e > 0; e >>= 1) {
    if (e & 1) r *= base;
    base *= base;
  }
  return r;
}

}  // namespace

GaussInt gcd_ring(const GaussInt& x, const GaussInt& y) { return euclid(x, y); }
ZRoot2 gcd_ring(const ZRoot2& x, const ZRoot2& y) { return euclid(x, y); }
ZOmega gcd_ring(const ZOmega& x, const ZOmega& y) { return euclid(x, y); }

// ---------------------------------------------------------- norm equations

std::optional<GaussInt> solve_norm_zi(const Integer& m,
                                      const Factorization& fact) {
  if (!fact.complete) throw std::invalid_argument("incomplete factorization");
  if (m < 0) return std::nullopt;
  if (m == 0) return GaussInt(0);
  GaussInt result(1);
  for (const auto& [p, e] : fact.factors) {
    if (p == 2) {
      result *= power(GaussInt(1, 1), e);
    } else if (mod_pos(p, 4) == 3) {
      if (e % 2) return std::nullopt;
      result *= power(GaussInt(p), e / 2);
    } else {
      auto r = sqrt_mod(p - 1, p);
      if (!r) throw std::logic_error("-1 must be a square modulo p = 1 mod 4");
      GaussInt g = gcd_ring(GaussInt(p), GaussInt(*r, 1));
      if (g.norm() != p) throw std::logic_error("Gaussian prime split failed");
      result *= power(g, e);
    }
  }
  if (result.norm() != m) throw std::logic_error("norm equation witness failed");
  return result;
}

namespace {

// Number of times d divides x; divides x in place.
int strip(ZRoot2& x, const ZRoot2& d) {
  int count = 0;
  while (!x.is_zero()) {
    auto q = x.div_exact(d);
    if (!q) break;
    x = *q;
    ++count;
  }
  return count;
}

// t in Z[omega] with t^dagger t an associate of the Z[sqrt2] prime pi, given
// y with y^2 = -1 modulo pi.
ZOmega split_over_omega(const ZRoot2& pi, const ZRoot2& y) {
  ZOmega t = gcd_ring(ZOmega(pi), ZOmega(y) + ZOmega::i());
  auto tt = (t.dagger() * t).to_zroot2();
  if (!tt || abs(Integer(tt->norm())) != abs(Integer(pi.norm()))) {
    throw std::logic_error("Z[omega] prime split failed");
  }
  return t;
}

}  // namespace

std::optional<ZOmega> solve_norm_zomega(const ZRoot2& xi,
                                        const Factorization& fact) {
  if (xi.is_zero()) return ZOmega(0);
  if (xi.sign() < 0 || xi.bullet().sign() < 0) return std::nullopt;
  if (!fact.complete) throw std::invalid_argument("incomplete factorization");
  ZRoot2 rem = xi;
  ZOmega t(1);
  for (const auto& [p, e] : fact.factors) {
    long r8 = mpz_fdiv_ui(p.get_mpz_t(), 8);
    if (p == 2) {
      int j = strip(rem, ZRoot2::sqrt2());
      t *= power(ZOmega::delta(), j);
    } else if (r8 == 3 || r8 == 5) {
      if (e % 2) throw std::logic_error("inert prime with odd exponent");
      int j = strip(rem, ZRoot2(p));
      if (j != e / 2) throw std::logic_error("inert prime multiplicity mismatch");
      ZRoot2 y;
      if (r8 == 5) {
        y = ZRoot2(*sqrt_mod(p - 1, p));
      } else {
        Integer s = *sqrt_mod(p - 2, p);
        Integer h = (p + 1) / 2;
        y = ZRoot2(0, s * h % p);
      }
      t *= power(split_over_omega(ZRoot2(p), y), j);
    } else {
      auto s = sqrt_mod(2, p);
      if (!s) throw std::logic_error("2 must be a square modulo p = +-1 mod 8");
      ZRoot2 eta = gcd_ring(ZRoot2(p), ZRoot2(*s, 1));
      if (abs(eta.norm()) != p) throw std::logic_error("Z[sqrt2] split failed");
      ZRoot2 eta_b = eta.bullet();
      int a = strip(rem, eta);
      int b = strip(rem, eta_b);
      if (r8 == 7) {
        if (a % 2 || b % 2) return std::nullopt;
        t *= ZOmega(power(eta, a / 2) * power(eta_b, b / 2));
      } else {
        ZRoot2 y(*sqrt_mod(p - 1, p));
        ZOmega te = split_over_omega(eta, y);
        t *= power(te, a) * power(te.bullet(), b);
      }
    }
  }
  if (abs(rem.norm()) != 1) {
    throw std::logic_error("factorization does not match xi");
  }
  auto tt = (t.dagger() * t).to_zroot2();
  auto u = xi.div_exact(*tt);
  if (!u || abs(u->norm()) != 1 || u->sign() <= 0 || u->bullet().sign() <= 0) {
    throw std::logic_error("unit adjustment failed");
  }
  // u = lambda^(2j); t <- lambda^j t.
  ZRoot2 w = *u;
  long j = 0;
  const ZRoot2 l2 = ZRoot2::lambda_pow(2), l2inv = ZRoot2::lambda_pow(-2);
  while (w != ZRoot2(1)) {
    if (ZRoot2(1) < w) {
      w *= l2inv;
      ++j;
    } else {
      w *= l2;
      --j;
    }
    if (j > 100000 || j < -100000) throw std::logic_error("unit search diverged");
  }
  t *= ZOmega(ZRoot2::lambda_pow(j));
  auto check = (t.dagger() * t).to_zroot2();
  if (!check || *check != xi) throw std::logic_error("witness check failed");
  return t;
}

}  // namespace ntsynth
