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

#include "ntsynth/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace ntsynth {

namespace {

Interval point(const Real& x) { return Interval(x, x); }

Membership classify(const Interval& q, const Interval& bound) {
  if (q.certainly_le(bound)) return Membership::Inside;
  if (bound.certainly_lt(q)) return Membership::Outside;
  return Membership::Unknown;
}

Membership meet(Membership x, Membership y) {
  if (x == Membership::Outside || y == Membership::Outside) {
    return Membership::Outside;
  }
  if (x == Membership::Inside && y == Membership::Inside) {
    return Membership::Inside;
  }
  return Membership::Unknown;
}

// Real roots t0 <= t1 of q2 t^2 + q1 t + q0; a discriminant that is negative by less
// than the rounding of its terms (of size scale) counts as zero.
std::optional<std::pair<Real, Real>> quadratic_roots(const Real& q2,
                                                     const Real& q1,
                                                     const Real& q0,
                                                     const Real& scale) {
  if (q2.is_zero()) return std::nullopt;
  Real disc = q1 * q1 - Real(4) * q2 * q0;
  if (disc.sign() < 0) {
    Real tol = scale * pow(Real(2), Real(-(working_precision() / 2)));
    if (-disc > tol) return std::nullopt;
    disc = Real(0);
  }
  Real s = sqrt(disc);
  Real t0 = (-q1 - s) / (Real(2) * q2);
  Real t1 = (-q1 + s) / (Real(2) * q2);
  if (t1 < t0) std::swap(t0, t1);
  return std::make_pair(t0, t1);
}

// Parameter range of the line p + t d inside {u : (u-c)^T D (u-c) <= 1}.
std::optional<std::pair<Real, Real>> ellipse_line(const Mat2& D, const Vec2& c,
                                                  const Vec2& p, const Vec2& d) {
  Vec2 q{p.x - c.x, p.y - c.y};
  Real dd = D.a * d.x * d.x + Real(2) * D.b * d.x * d.y + D.d * d.y * d.y;
  Real qd = D.a * q.x * d.x + D.b * (q.x * d.y + q.y * d.x) + D.d * q.y * d.y;
  Real qq = D.a * q.x * q.x + Real(2) * D.b * q.x * q.y + D.d * q.y * q.y;
  Real scale = Real(4) * (qd * qd + abs(dd) * (abs(qq) + Real(1)));
  return quadratic_roots(dd, Real(2) * qd, qq - Real(1), scale);
}

// Clips [t0, t1] by the half-plane n . (p + t d) >= s.
bool clip_halfplane(const Vec2& n, const Real& s, const Vec2& p, const Vec2& d,
                    Real& t0, Real& t1) {
  Real nd = n.x * d.x + n.y * d.y;
  Real slack = n.x * p.x + n.y * p.y - s;
  if (nd.is_zero()) return slack.sign() >= 0;
  Real t = -slack / nd;
  if (nd.sign() > 0) {
    t0 = max(t0, t);
  } else {
    t1 = min(t1, t);
  }
  return t0 <= t1;
}

Real lambda_real() { return Real(1) + Real::sqrt2(); }

Real lambda_pow_real(const Real& x) { return pow(lambda_real(), x); }

Real to_real(const ZRoot2& x) { return Real(x.a) + Real(x.b) * Real::sqrt2(); }

}  // namespace

Mat2 Mat2::inverse() const {
  Real dt = det();
  if (dt.is_zero()) throw std::domain_error("singular matrix");
  return {d / dt, -b / dt, -c / dt, a / dt};
}

// ------------------------------------------------------------------ Ellipse

Real Ellipse::area() const { return Real::pi() / sqrt(D.det()); }

Box Ellipse::bounding_box() const {
  Real dt = D.det();
  Real w = sqrt(D.d / dt);
  Real h = sqrt(D.a / dt);
  return {center.x - w, center.x + w, center.y - h, center.y + h};
}

Real Ellipse::uprightness() const {
  return Real::pi() / Real(4) * sqrt(D.det() / (D.a * D.d));
}

Real Ellipse::skew() const { return D.b * D.b / D.det(); }

Membership Ellipse::contains(const ComplexInterval& p) const {
  Interval dx = p.re - point(center.x);
  Interval dy = p.im - point(center.y);
  Interval q = point(D.a) * square(dx) +
               Interval(2) * point(D.b) * dx * dy + point(D.d) * square(dy);
  return classify(q, Interval(1));
}

Ellipse ConvexRegion::enclosing_ellipse() const {
  Box bb = bounding_box();
  Real w = (bb.x1 - bb.x0) / Real(2);
  Real h = (bb.y1 - bb.y0) / Real(2);
  if (w.sign() <= 0 || h.sign() <= 0) {
    throw std::domain_error("degenerate bounding box");
  }
  Mat2 D{Real(1) / (Real(2) * w * w), Real(0), Real(0),
         Real(1) / (Real(2) * h * h)};
  return {D, {(bb.x0 + bb.x1) / Real(2), (bb.y0 + bb.y1) / Real(2)}};
}

// --------------------------------------------------------------------- Disk

Disk::Disk(Vec2 center, Interval radius_sq)
    : c_(std::move(center)), r2_(std::move(radius_sq)) {
  if (r2_.hi().sign() <= 0) throw std::invalid_argument("empty disk");
  r_ = sqrt(r2_.hi());
}

Membership Disk::contains(const ComplexInterval& p) const {
  Interval dx = p.re - point(c_.x);
  Interval dy = p.im - point(c_.y);
  return classify(square(dx) + square(dy), r2_);
}

std::optional<std::pair<Real, Real>> Disk::intersect_line(const Vec2& p,
                                                          const Vec2& d) const {
  Real inv = Real(1) / r2_.hi();
  return ellipse_line({inv, Real(0), Real(0), inv}, c_, p, d);
}

Box Disk::bounding_box() const {
  return {c_.x - r_, c_.x + r_, c_.y - r_, c_.y + r_};
}

Real Disk::area() const { return Real::pi() * r2_.mid(); }

Ellipse Disk::enclosing_ellipse() const {
  Real inv = Real(1) / r2_.hi();
  return {{inv, Real(0), Real(0), inv}, c_};
}

// ---------------------------------------------------------------- Rectangle

Rectangle::Rectangle(Real x0, Real x1, Real y0, Real y1)
    : box_{std::move(x0), std::move(x1), std::move(y0), std::move(y1)} {
  if (!(box_.x0 < box_.x1) || !(box_.y0 < box_.y1)) {
    throw std::invalid_argument("degenerate rectangle");
  }
}

Membership Rectangle::contains(const ComplexInterval& p) const {
  Membership mx = meet(classify(point(box_.x0), p.re),
                       classify(p.re, point(box_.x1)));
  Membership my = meet(classify(point(box_.y0), p.im),
                       classify(p.im, point(box_.y1)));
  return meet(mx, my);
}

std::optional<std::pair<Real, Real>> Rectangle::intersect_line(
    const Vec2& p, const Vec2& d) const {
  Real t0 = -Real::from_string("1e300"), t1 = Real::from_string("1e300");
  bool ok = clip_halfplane({Real(1), Real(0)}, box_.x0, p, d, t0, t1) &&
            clip_halfplane({Real(-1), Real(0)}, -box_.x1, p, d, t0, t1) &&
            clip_halfplane({Real(0), Real(1)}, box_.y0, p, d, t0, t1) &&
            clip_halfplane({Real(0), Real(-1)}, -box_.y1, p, d, t0, t1);
  if (!ok) return std::nullopt;
  return std::make_pair(t0, t1);
}

// ------------------------------------------------------------ EllipseRegion

EllipseRegion::EllipseRegion(Ellipse e) : e_(std::move(e)) {
  if (e_.D.det().sign() <= 0 || e_.D.a.sign() <= 0) {
    throw std::invalid_argument("ellipse matrix is not positive definite");
  }
}

Membership EllipseRegion::contains(const ComplexInterval& p) const {
  return e_.contains(p);
}

std::optional<std::pair<Real, Real>> EllipseRegion::intersect_line(
    const Vec2& p, const Vec2& d) const {
  return ellipse_line(e_.D, e_.center, p, d);
}

// ------------------------------------------------------------------ Polygon

Polygon::Polygon(std::vector<Vec2> vertices) : v_(std::move(vertices)) {
  if (v_.size() < 3) throw std::invalid_argument("polygon needs 3 vertices");
  if (area().sign() <= 0) {
    throw std::invalid_argument("polygon must be counter-clockwise");
  }
}

Membership Polygon::contains(const ComplexInterval& p) const {
  Membership m = Membership::Inside;
  for (std::size_t i = 0; i < v_.size(); ++i) {
    const Vec2& u = v_[i];
    const Vec2& w = v_[(i + 1) % v_.size()];
    Interval cross = point(w.x - u.x) * (p.im - point(u.y)) -
                     point(w.y - u.y) * (p.re - point(u.x));
    m = meet(m, classify(Interval(0), cross));
  }
  return m;
}

std::optional<std::pair<Real, Real>> Polygon::intersect_line(
    const Vec2& p, const Vec2& d) const {
  Real t0 = -Real::from_string("1e300"), t1 = Real::from_string("1e300");
  for (std::size_t i = 0; i < v_.size(); ++i) {
    const Vec2& u = v_[i];
    const Vec2& w = v_[(i + 1) % v_.size()];
    Vec2 n{-(w.y - u.y), w.x - u.x};
    if (!clip_halfplane(n, n.x * u.x + n.y * u.y, p, d, t0, t1)) {
      return std::nullopt;
    }
  }
  return std::make_pair(t0, t1);
}

Box Polygon::bounding_box() const {
  Box b{v_[0].x, v_[0].x, v_[0].y, v_[0].y};
  for (const auto& v : v_) {
    b.x0 = min(b.x0, v.x);
    b.x1 = max(b.x1, v.x);
    b.y0 = min(b.y0, v.y);
    b.y1 = max(b.y1, v.y);
  }
  return b;
}

Real Polygon::area() const {
  Real s(0);
  for (std::size_t i = 0; i < v_.size(); ++i) {
    const Vec2& u = v_[i];
    const Vec2& w = v_[(i + 1) % v_.size()];
    s += u.x * w.y - w.x * u.y;
  }
  return s / Real(2);
}

// ------------------------------------------------------------ EpsilonRegion

EpsilonRegion::EpsilonRegion(ComplexInterval z, Interval eps,
                             Interval radius_sq)
    : z_(std::move(z)), eps_(std::move(eps)), r2_(std::move(radius_sq)) {
  if (!(eps_.lo().sign() > 0)) throw std::invalid_argument("epsilon <= 0");
  r_ = sqrt(r2_);
  s0_ = r_ * (Interval(1) - square(eps_) / Interval(2));
  zx_ = z_.re.mid();
  zy_ = z_.im.mid();
  r_mid_ = r_.mid();
}

Real EpsilonRegion::chord_offset() const {
  Real s = s0_.lo();
  return max(s, -r_mid_);
}

Membership EpsilonRegion::contains(const ComplexInterval& p) const {
  Membership disk = classify(norm_sq(p), r2_);
  Interval dot = p.re * z_.re + p.im * z_.im;
  return meet(disk, classify(s0_, dot));
}

std::optional<std::pair<Real, Real>> EpsilonRegion::intersect_line(
    const Vec2& p, const Vec2& d) const {
  Real inv = Real(1) / r2_.hi();
  auto t = ellipse_line({inv, Real(0), Real(0), inv}, {Real(0), Real(0)}, p, d);
  if (!t) return std::nullopt;
  Real t0 = t->first, t1 = t->second;
  if (!clip_halfplane({zx_, zy_}, s0_.lo(), p, d, t0, t1)) return std::nullopt;
  return std::make_pair(t0, t1);
}

Box EpsilonRegion::bounding_box() const {
  Real s = chord_offset();
  Real w = sqrt(max(r_mid_ * r_mid_ - s * s, Real(0)));
  Real cos_phi = s / r_mid_;
  Vec2 e1{s * zx_ - w * zy_, s * zy_ + w * zx_};
  Vec2 e2{s * zx_ + w * zy_, s * zy_ - w * zx_};
  Box b{min(e1.x, e2.x), max(e1.x, e2.x), min(e1.y, e2.y), max(e1.y, e2.y)};
  if (zx_ >= cos_phi) b.x1 = r_mid_;
  if (-zx_ >= cos_phi) b.x0 = -r_mid_;
  if (zy_ >= cos_phi) b.y1 = r_mid_;
  if (-zy_ >= cos_phi) b.y0 = -r_mid_;
  // Outward padding covers the rounding in z and r.
  Real pad = (eps_.hi() * eps_.hi() + r_.width() + z_.re.width() +
              z_.im.width()) *
                 Real::from_string("1e-6") +
             r_.width() + z_.re.width() + z_.im.width();
  b.x0 -= pad;
  b.x1 += pad;
  b.y0 -= pad;
  b.y1 += pad;
  return b;
}

Real EpsilonRegion::area() const {
  Real s = chord_offset();
  Real w = sqrt(max(r_mid_ * r_mid_ - s * s, Real(0)));
  Real phi = atan2(w, s);
  return r_mid_ * r_mid_ * phi - s * w;
}

Ellipse EpsilonRegion::enclosing_ellipse() const {
  Real s = chord_offset();
  Real h = (r_mid_ - s) / Real(2);
  Real w = s.sign() > 0 ? sqrt(r_mid_ * r_mid_ - s * s) : r_mid_;
  // Slight inflation so rounding never excludes a boundary point.
  Real grow = Real(1) + Real::from_string("1e-9");
  h *= grow;
  w *= grow;
  Real ih = Real(1) / (Real(2) * h * h);
  Real iw = Real(1) / (Real(2) * w * w);
  // D = ih z z^T + iw n n^T with n = (-zy, zx).
  Mat2 D{ih * zx_ * zx_ + iw * zy_ * zy_, (ih - iw) * zx_ * zy_,
         (ih - iw) * zx_ * zy_, ih * zy_ * zy_ + iw * zx_ * zx_};
  Real m = (s + r_mid_) / Real(2);
  return {D, {m * zx_, m * zy_}};
}

Real uprightness(const ConvexRegion& a) {
  Real bb = a.bounding_box().area();
  if (bb.sign() <= 0) throw std::domain_error("degenerate bounding box");
  return a.area() / bb;
}

Real uprightness(const Ellipse& e) { return e.uprightness(); }

Ellipse enclosing_ellipse(const ConvexRegion& a) {
  return a.enclosing_ellipse();
}

// ---------------------------------------------------------------------- 1-D

bool visit_one_d_grid(const Real& x0, const Real& x1, const Real& y0,
                      const Real& y1,
                      const std::function<bool(const ZRoot2&)>& f) {
  if (x1 < x0 || y1 < y0) return false;
  const Real L = log(lambda_real());
  Real wa = x1 - x0, wb = y1 - y0;
  long n = 0;
  if (wa.sign() > 0) {
    n = static_cast<long>((-(log(wa) / L)).ceil().get_si()) - 1;
  } else if (wb.sign() > 0) {
    n = static_cast<long>((log(wb) / L).floor().get_si()) + 1;
  }
  // u in A, u* in B  <=>  lambda^n u in lambda^n A, (lambda^n u)* in
  // (-lambda^-1)^n B.
  Real ln = to_real(ZRoot2::lambda_pow(n));
  Real lb = to_real(ZRoot2::lambda_pow(-n));
  Real a0 = x0 * ln, a1 = x1 * ln;
  Real b0 = y0 * lb, b1 = y1 * lb;
  if (n % 2 != 0) {
    std::swap(b0, b1);
    b0 = -b0;
    b1 = -b1;
  }
  Real tiny = pow(Real(2), Real(-(working_precision() - 16)));
  Real pa = (abs(a0) + abs(a1) + Real(1)) * tiny;
  Real pb = (abs(b0) + abs(b1) + Real(1)) * tiny;
  a0 -= pa;
  a1 += pa;
  b0 -= pb;
  b1 += pb;

  const Real s2 = Real::sqrt2();
  const Real s8 = Real(2) * s2;
  Integer blo = ((a0 - b1) / s8).ceil();
  Integer bhi = ((a1 - b0) / s8).floor();
  const Interval A(x0, x1), B(y0, y1);
  ZRoot2 scale_back = ZRoot2::lambda_pow(-n);
  for (Integer b = blo; b <= bhi; ++b) {
    Real bs = Real(b) * s2;
    Integer alo = (a0 - bs).ceil();
    for (Integer a = alo; Real(a) <= a1 - bs; ++a) {
      Real conj = Real(a) - bs;
      if (conj < b0 || conj > b1) continue;
      ZRoot2 u = ZRoot2(a, b) * scale_back;
      if (!u.certify().overlaps(A)) continue;
      if (!u.bullet().certify().overlaps(B)) continue;
      if (f(u)) return true;
    }
  }
  return false;
}

std::vector<ZRoot2> one_d_grid(const Real& x0, const Real& x1, const Real& y0,
                               const Real& y1) {
  std::vector<ZRoot2> out;
  visit_one_d_grid(x0, x1, y0, y1, [&](const ZRoot2& u) {
    out.push_back(u);
    return false;
  });
  std::sort(out.begin(), out.end(),
            [](const ZRoot2& p, const ZRoot2& q) { return p < q; });
  return out;
}

std::vector<ZRoot2> one_d_grid(const Interval& a, const Interval& b) {
  return one_d_grid(a.lo(), a.hi(), b.lo(), b.hi());
}

// ------------------------------------------------------- Z[i] grid operators

IntOperator IntOperator::inverse() const {
  Integer dt = det();
  if (dt != 1 && dt != -1) throw std::domain_error("operator not invertible");
  return {d * dt, -b * dt, -c * dt, a * dt};
}

Mat2 IntOperator::to_real() const {
  return {Real(a), Real(b), Real(c), Real(d)};
}

Ellipse transform(const Ellipse& e, const Mat2& g) {
  Mat2 m = g.inverse();
  return {m.transpose() * e.D * m, g * e.center};
}

IntOperator to_upright_zi(const Ellipse& e, int* rounds) {
  Real dt = e.D.det();
  if (dt.sign() <= 0) throw std::invalid_argument("degenerate ellipse");
  Real s = sqrt(dt);
  Mat2 D{e.D.a / s, e.D.b / s, e.D.b / s, e.D.d / s};
  IntOperator m;  // accumulated G^-1; D_final = m^T D m
  int count = 0;
  while (D.b * D.b >= Real(1)) {
    IntOperator step;
    if (D.a <= D.d) {
      Integer n = (-D.b / D.a).round();
      step = {1, n, 0, 1};
    } else {
      Integer n = (-D.b / D.d).round();
      step = {1, 0, n, 1};
    }
    Mat2 sr = step.to_real();
    D = sr.transpose() * D * sr;
    D.c = D.b;
    m = m * step;
    if (++count > 4096) throw std::runtime_error("uprighting did not converge");
  }
  if (rounds) *rounds = count;
  return m.inverse();
}

// ------------------------------------------------------------ GridOperator

GridOperator GridOperator::identity() {
  ZRoot2 r2 = ZRoot2::sqrt2();
  return {{r2, ZRoot2(0), ZRoot2(0), r2}};
}

GridOperator GridOperator::from_parts(long a, long a1, long b, long b1, long c,
                                      long c1, long d, long d1) {
  return {{ZRoot2(a1, a), ZRoot2(b1, b), ZRoot2(c1, c), ZRoot2(d1, d)}};
}

GridOperator GridOperator::R() { return {{1, -1, 1, 1}}; }

GridOperator GridOperator::A(const Integer& n) {
  ZRoot2 r2 = ZRoot2::sqrt2();
  return {{r2, ZRoot2(0, -2 * n), ZRoot2(0), r2}};
}

GridOperator GridOperator::B(const Integer& n) {
  ZRoot2 r2 = ZRoot2::sqrt2();
  return {{r2, ZRoot2(2 * n), ZRoot2(0), r2}};
}

GridOperator GridOperator::K() {
  return {{-ZRoot2::lambda_inv(), ZRoot2(-1), ZRoot2::lambda(), ZRoot2(1)}};
}

GridOperator GridOperator::X() {
  ZRoot2 r2 = ZRoot2::sqrt2();
  return {{ZRoot2(0), r2, r2, ZRoot2(0)}};
}

GridOperator GridOperator::Z() {
  ZRoot2 r2 = ZRoot2::sqrt2();
  return {{r2, ZRoot2(0), ZRoot2(0), -r2}};
}

std::pair<Integer, Integer> GridOperator::parts(int idx) const {
  return {e[idx].b, e[idx].a};
}

bool GridOperator::satisfies_grid_conditions() const {
  Integer s = e[0].b + e[1].b + e[2].b + e[3].b;
  if (mpz_odd_p(s.get_mpz_t())) return false;
  int parity = mpz_odd_p(e[0].a.get_mpz_t()) ? 1 : 0;
  for (const auto& x : e) {
    if ((mpz_odd_p(x.a.get_mpz_t()) ? 1 : 0) != parity) return false;
  }
  return true;
}

std::optional<ZRoot2> GridOperator::det() const {
  ZRoot2 n = e[0] * e[3] - e[1] * e[2];
  if (!n.divisible_by_sqrt2()) return std::nullopt;
  n = n.div_sqrt2();
  if (!n.divisible_by_sqrt2()) return std::nullopt;
  return n.div_sqrt2();
}

bool GridOperator::is_special() const {
  auto d = det();
  return d && (*d == ZRoot2(1) || *d == ZRoot2(-1));
}

GridOperator GridOperator::bullet() const {
  GridOperator g;
  for (int i = 0; i < 4; ++i) g.e[i] = -e[i].bullet();
  return g;
}

GridOperator GridOperator::inverse() const {
  auto d = det();
  if (!d || !(*d == ZRoot2(1) || *d == ZRoot2(-1))) {
    throw std::domain_error("grid operator is not special");
  }
  return {{e[3] * *d, -e[1] * *d, -e[2] * *d, e[0] * *d}};
}

GridOperator GridOperator::sigma_conjugate(long k) const {
  return {{e[0] * ZRoot2::lambda_pow(k), e[1], e[2],
           e[3] * ZRoot2::lambda_pow(-k)}};
}

Mat2 GridOperator::to_real() const {
  Real inv = Real(1) / Real::sqrt2();
  auto entry = [&](int i) { return Real(e[i].a) * inv + Real(e[i].b); };
  return {entry(0), entry(1), entry(2), entry(3)};
}

ZOmega GridOperator::apply(const ZOmega& u) const {
  // On scaled coordinates X = sqrt2 Re u, Y = sqrt2 Im u: X' = (e0 X + e1 Y)/sqrt2.
  ScaledPoint p = to_scaled_point(u);
  ZRoot2 x = e[0] * p.x + e[1] * p.y;
  ZRoot2 y = e[2] * p.x + e[3] * p.y;
  if (!x.divisible_by_sqrt2() || !y.divisible_by_sqrt2()) {
    throw std::domain_error("not a grid operator");
  }
  return from_scaled_point({x.div_sqrt2(), y.div_sqrt2()});
}

GridOperator operator*(const GridOperator& x, const GridOperator& y) {
  GridOperator g;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      ZRoot2 s = x.e[2 * i] * y.e[j] + x.e[2 * i + 1] * y.e[2 + j];
      if (!s.divisible_by_sqrt2()) {
        throw std::domain_error("product is not a grid operator");
      }
      g.e[2 * i + j] = s.div_sqrt2();
    }
  }
  return g;
}

// ----------------------------------------------------------- StepConstants

StepConstants::StepConstants()
    : Q(Real::from_string("0.9")),
      r(Real::from_string("0.8")),
      a(Real::from_string("-0.3")),
      b(Real::from_string("0.2")) {}

std::vector<StepConstants::Check> StepConstants::verify() const {
  const Real lam = lambda_real();
  const Real s2 = Real::sqrt2();
  auto lp = [&](const Real& x) { return pow(lam, x); };
  auto sinhl = [&](const Real& x) { return (lp(x) - lp(-x)) / Real(2); };
  auto coshl = [&](const Real& x) { return (lp(x) + lp(-x)) / Real(2); };
  auto sq = [](const Real& x) { return x * x; };
  auto kone = [&](const Real& x) { return sq(s2 - coshl(x)); };
  const Real one(1);

  std::vector<Check> out;
  auto add = [&](std::string name, Real lhs, Real rhs) {
    bool ok = lhs <= rhs;
    out.push_back({std::move(name), std::move(lhs), std::move(rhs), ok});
  };
  add("Q < 1", Q, one - Real::from_string("1e-30"));
  add("1 < P", one + Real::from_string("1e-30"), P);
  add("R", (one + Real(2) / P) * sq(sinhl(r)), Q);
  add("K",
      max(max(kone(r - one), kone(one - a)), kone(Real(0))) +
          max(sq(coshl(r - one)), sq(coshl(one - a))) * Real(2) / P,
      Q);
  add("A small", sq(one / (Real(2) * lam) - one) + Real(2) / P, Q);
  add("A large",
      max(sq(Real(2) * lp(a) - one), sq(one / lam - one)) +
          Real(8) * lp(Real(2) * a) / P,
      Q);
  add("B small", sq(one - s2 / (Real(2) * s2 * lam)) + Real(2) / P, Q);
  add("B large",
      max(sq(one - s2 / (s2 * lam)), sq(one - s2 * lp(b))) +
          Real(4) * lp(Real(2) * b) / P,
      Q);
  add("cover -r <= a", -r, a);
  add("cover -b <= r-1", -b, r - one);
  add("A exponent", log(Real::from_string("0.5")) / log(lam), a);
  add("final uprightness",
      Real::from_string("0.19"), Real::pi() / (Real(4) * sqrt(P + one)));
  return out;
}

// --------------------------------------------------------- EllipsePairState

namespace {

Mat2 det_normalize(const Mat2& m) {
  Real dt = m.det();
  if (dt.sign() <= 0) throw std::invalid_argument("degenerate ellipse");
  Real s = sqrt(dt);
  Real off = (m.b + m.c) / (Real(2) * s);
  return {m.a / s, off, off, m.d / s};
}

Mat2 congruence(const Mat2& m, const Mat2& g) {
  Mat2 r = g.transpose() * m * g;
  Real off = (r.b + r.c) / Real(2);
  r.b = off;
  r.c = off;
  return r;
}

}  // namespace

EllipsePairState EllipsePairState::from_ellipses(const Ellipse& a,
                                                 const Ellipse& b) {
  return {det_normalize(a.D), det_normalize(b.D)};
}

Real EllipsePairState::z() const {
  return log(D.d / D.a) / (Real(2) * log(lambda_real()));
}

Real EllipsePairState::zeta() const {
  return log(Delta.d / Delta.a) / (Real(2) * log(lambda_real()));
}

EllipsePairState EllipsePairState::act(const GridOperator& g) const {
  return {congruence(D, g.to_real()), congruence(Delta, g.bullet().to_real())};
}

EllipsePairState EllipsePairState::shift(long k) const {
  Real lk = lambda_pow_real(Real(k));
  Real lmk = lambda_pow_real(Real(-k));
  Real sign = (k % 2 == 0) ? Real(1) : Real(-1);
  return {{D.a * lk, D.b, D.c, D.d * lmk},
          {Delta.a * lmk, Delta.b * sign, Delta.c * sign, Delta.d * lk}};
}

GridOperator step(const EllipsePairState& s, const StepConstants& c) {
  if (s.skew() < c.P) throw std::invalid_argument("skew below threshold");
  Real bias = s.bias();
  if (bias > Real(1) || bias < Real(-1)) {
    long k = static_cast<long>(((Real(1) - bias) / Real(2)).floor().get_si());
    return step(s.shift(k), c).sigma_conjugate(k);
  }
  GridOperator norm = GridOperator::identity();
  EllipsePairState t = s;
  if (t.beta().sign() < 0) {
    norm = norm * GridOperator::Z();
    t = s.act(norm);
  }
  if ((t.z() + t.zeta()).sign() < 0) {
    norm = norm * GridOperator::X();
    t = s.act(norm);
  }
  const Real z = t.z(), zeta = t.zeta();
  const Real lam = lambda_real();
  auto in_r = [&](const Real& x) { return abs(x) <= c.r; };
  GridOperator g;
  if (in_r(z) && in_r(zeta)) {
    g = GridOperator::R();
  } else if (t.b().sign() >= 0) {
    if (z <= -c.a && zeta >= c.r) {
      g = GridOperator::K();
    } else if (zeta <= -c.a && z >= c.r) {
      g = GridOperator::K().bullet();
    } else {
      Real m = min(z, zeta);
      Integer n = std::max<Integer>(1, (pow(lam, m) / Real(2)).floor());
      g = GridOperator::A(n);
    }
  } else {
    Real m = min(z, zeta);
    Integer n = std::max<Integer>(1, (pow(lam, m) / Real::sqrt2()).floor());
    g = GridOperator::B(n);
  }
  return norm * g;
}

GridOperator to_upright_pair(const Ellipse& ea, const Ellipse& eb,
                             const StepConstants& c, int* steps) {
  EllipsePairState s0 = EllipsePairState::from_ellipses(ea, eb);
  GridOperator acc = GridOperator::identity();
  EllipsePairState s = s0;
  int count = 0;
  while (s.skew() >= c.P) {
    acc = acc * step(s, c);
    s = s0.act(acc);
    if (++count > 100000) throw std::runtime_error("uprighting did not converge");
  }
  if (steps) *steps = count;
  return acc.inverse();
}

}  // namespace ntsynth
