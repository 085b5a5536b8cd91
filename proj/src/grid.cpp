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

#include "ntsynth/grid.hpp"

#include <algorithm>
#include <stdexcept>

namespace ntsynth {

namespace {

Real padding(const Real& magnitude) {
  return (abs(magnitude) + Real(1)) *
         pow(Real(2), Real(-(working_precision() / 2)));
}

Ellipse scaled(const Ellipse& e, const Real& s) {
  Real s2 = s * s;
  return {{e.D.a / s2, e.D.b / s2, e.D.c / s2, e.D.d / s2},
          {e.center.x * s, e.center.y * s}};
}

Real to_real(const ZRoot2& x) { return Real(x.a) + Real(x.b) * Real::sqrt2(); }

ComplexInterval divide(const ComplexInterval& z, const Interval& s) {
  return {z.re / s, z.im / s};
}

}  // namespace

Interval scale_factor(int k, int l) {
  Interval r(1);
  for (int i = 0; i < k / 2; ++i) r = r * Interval(2);
  if (k % 2) r = r * Interval::sqrt2();
  for (int i = 0; i < l / 2; ++i) r = r * Interval(5);
  if (l % 2) r = r * Interval::sqrt5();
  return r;
}

// -------------------------------------------------------------------- Z[i]

ScaledGridZi::ScaledGridZi(RegionPtr a, int max_l)
    : a_(std::move(a)), prec_(working_precision()), max_l_(max_l) {
  e_ = a_->enclosing_ellipse();
  g_ = to_upright_zi(e_);
  g_inv_ = g_.inverse();
}

std::vector<GaussInt> ScaledGridZi::solve(int k, int l) const {
  std::vector<GaussInt> out;
  visit(k, l, [&](const GaussInt& g) {
    out.push_back(g);
    return false;
  });
  std::sort(out.begin(), out.end(), [](const GaussInt& p, const GaussInt& q) {
    return p.a != q.a ? p.a < q.a : p.b < q.b;
  });
  return out;
}

bool ScaledGridZi::visit(int k, int l,
                         const std::function<bool(const GaussInt&)>& f) const {
  PrecisionScope scope(prec_);
  Interval s = scale_factor(k, l);
  Real sm = s.mid();
  Ellipse up = transform(scaled(e_, sm), g_.to_real());
  Box bb = up.bounding_box();
  Real py = padding(max(abs(bb.y0), abs(bb.y1)));
  Integer y0 = (bb.y0 - py).ceil() - 1, y1 = (bb.y1 + py).floor() + 1;

  // Row y of the upright frame is the line g^-1 (0, y) + x g^-1 (1, 0).
  Vec2 dir{Real(g_inv_.a) / sm, Real(g_inv_.c) / sm};
  for (Integer y = y0; y <= y1; ++y) {
    Vec2 base{Real(g_inv_.b * y) / sm, Real(g_inv_.d * y) / sm};
    auto range = a_->intersect_line(base, dir);
    if (!range) continue;
    Real px = padding(max(abs(range->first), abs(range->second)));
    Integer x0 = (range->first - px).ceil(), x1 = (range->second + px).floor();
    for (Integer x = x0; x <= x1; ++x) {
      auto [u, v] = g_inv_.apply(x, y);
      GaussInt alpha(u, v);
      ComplexInterval p = divide(alpha.certify(), s);
      if (a_->contains(p) != Membership::Outside && f(alpha)) return true;
    }
  }
  return false;
}

std::optional<ZiSolution> ScaledGridZi::next() {
  while (pending_.empty()) {
    if (done_) return std::nullopt;
    for (const auto& p : solve(k_, l_)) pending_.push_back({k_, l_, p});
    if (++k_ > 2) {
      k_ = 0;
      ++l_;
      if (max_l_ >= 0 && l_ > max_l_) done_ = true;
    }
  }
  ZiSolution s = pending_.front();
  pending_.pop_front();
  return s;
}

// ---------------------------------------------------------------- Z[omega]

ScaledGridZOmega::ScaledGridZOmega(RegionPtr a, RegionPtr b, int k0, int max_k)
    : a_(std::move(a)),
      b_(std::move(b)),
      prec_(working_precision()),
      k_(k0),
      max_k_(max_k) {
  ea_ = a_->enclosing_ellipse();
  eb_ = b_->enclosing_ellipse();
  g_ = to_upright_pair(ea_, eb_, StepConstants(), &steps_);
  g_inv_ = g_.inverse();
}

std::vector<ZOmega> ScaledGridZOmega::solve(int k) const {
  std::vector<ZOmega> out;
  visit(k, [&](const ZOmega& u) {
    out.push_back(u);
    return false;
  });
  std::sort(out.begin(), out.end(),
            [](const ZOmega& p, const ZOmega& q) { return lex_less(p, q); });
  return out;
}

bool ScaledGridZOmega::visit(int k,
                             const std::function<bool(const ZOmega&)>& f) const {
  PrecisionScope scope(prec_);
  Interval s = scale_factor(k);
  Real sm = s.mid();
  Ellipse ak = transform(scaled(ea_, sm), g_.to_real());
  Ellipse bk = scaled(eb_, sm);
  if (k % 2) bk.center = {-bk.center.x, -bk.center.y};
  bk = transform(bk, g_.bullet().to_real());
  Box ba = ak.bounding_box(), bbx = bk.bounding_box();
  auto pad = [](Box b) {
    Real p = padding(max(max(abs(b.x0), abs(b.x1)), max(abs(b.y0), abs(b.y1))));
    return Box{b.x0 - p, b.x1 + p, b.y0 - p, b.y1 + p};
  };
  ba = pad(ba);
  bbx = pad(bbx);

  const Real h = Real(1) / Real::sqrt2();
  const Interval sign_s = (k % 2) ? -s : s;
  const Real sign_sm = (k % 2) ? -sm : sm;
  const Mat2 mi = g_inv_.to_real();
  const Mat2 mbi = g_inv_.bullet().to_real();
  // The coordinate with fewer expected 1-D solutions is collected; the
  // other is streamed.
  const bool x_outer = (ba.x1 - ba.x0) * (bbx.x1 - bbx.x0) <=
                       (ba.y1 - ba.y0) * (bbx.y1 - bbx.y0);
  for (int shifted = 0; shifted < 2; ++shifted) {
    Real off = shifted ? h : Real(0);
    Real ox0 = ba.x0 - off, ox1 = ba.x1 - off, oy0 = bbx.x0 + off,
         oy1 = bbx.x1 + off;
    if (!x_outer) {
      ox0 = ba.y0 - off;
      ox1 = ba.y1 - off;
      oy0 = bbx.y0 + off;
      oy1 = bbx.y1 + off;
    }
    auto outer = one_d_grid(ox0, ox1, oy0, oy1);
    for (const auto& p : outer) {
      // Chords of A and B along the inner axis at the fixed outer value.
      Real pa = to_real(p) + off;
      Real pb = to_real(p.bullet()) - off;
      auto chord = [&](const ConvexRegion& r, const Mat2& m, const Real& c,
                       const Real& scale) {
        Vec2 e_outer = x_outer ? Vec2{m.a, m.c} : Vec2{m.b, m.d};
        Vec2 e_inner = x_outer ? Vec2{m.b, m.d} : Vec2{m.a, m.c};
        Vec2 base{e_outer.x * c / scale, e_outer.y * c / scale};
        Vec2 dir{e_inner.x / scale, e_inner.y / scale};
        return r.intersect_line(base, dir);
      };
      auto ca = chord(*a_, mi, pa, sm);
      if (!ca) continue;
      auto cb = chord(*b_, mbi, pb, sign_sm);
      if (!cb) continue;
      Real qa = padding(max(abs(ca->first), abs(ca->second)));
      Real qb = padding(max(abs(cb->first), abs(cb->second)));
      bool stop = visit_one_d_grid(
          ca->first - qa - off, ca->second + qa - off,
          cb->first - qb + off, cb->second + qb + off, [&](const ZRoot2& q) {
            const ZRoot2& x = x_outer ? p : q;
            const ZRoot2& y = x_outer ? q : p;
            ZOmega v = ZOmega(x) + ZOmega(y) * ZOmega::i();
            if (shifted) v += ZOmega::omega();
            ZOmega u = g_inv_.apply(v);
            if (a_->contains(divide(u.certify(), s)) == Membership::Outside) {
              return false;
            }
            if (b_->contains(divide(u.bullet().certify(), sign_s)) ==
                Membership::Outside) {
              return false;
            }
            return f(u);
          });
      if (stop) return true;
    }
  }
  return false;
}

std::optional<ZOmegaSolution> ScaledGridZOmega::next() {
  while (pending_.empty()) {
    if (done_) return std::nullopt;
    for (const auto& p : solve(k_)) pending_.push_back({k_, p});
    ++k_;
    if (max_k_ >= 0 && k_ > max_k_) done_ = true;
  }
  ZOmegaSolution s = pending_.front();
  pending_.pop_front();
  return s;
}

void dump_solutions(std::ostream& os, const std::vector<ZiSolution>& sols) {
  for (const auto& s : sols) {
    os << s.k << ' ' << s.l << ' ' << s.point.a << ' ' << s.point.b << '\n';
  }
}

void dump_solutions(std::ostream& os,
                    const std::vector<ZOmegaSolution>& sols) {
  for (const auto& s : sols) {
    os << s.k << ' ' << s.point.a0 << ' ' << s.point.a1 << ' ' << s.point.a2
       << ' ' << s.point.a3 << '\n';
  }
}

}  // namespace ntsynth
