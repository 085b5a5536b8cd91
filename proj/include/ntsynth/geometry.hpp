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
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ntsynth/real.hpp"
#include "ntsynth/rings.hpp"

namespace ntsynth {

struct Vec2 {
  Real x, y;
};

/** [[a, b], [c, d]]. */
struct Mat2 {
  Real a, b, c, d;

  static Mat2 identity() { return {Real(1), Real(0), Real(0), Real(1)}; }
  Mat2 transpose() const { return {a, c, b, d}; }
  Real det() const { return a * d - b * c; }
  Mat2 inverse() const;
  Vec2 operator*(const Vec2& v) const {
    return {a * v.x + b * v.y, c * v.x + d * v.y};
  }
  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
};

struct Box {
  Real x0, x1, y0, y1;
  Real area() const { return (x1 - x0) * (y1 - y0); }
};

enum class Membership { Inside, Outside, Unknown };

/** {u : (u - center)^T D (u - center) <= 1}. */
struct Ellipse {
  Mat2 D;  // symmetric positive definite; b == c
  Vec2 center;

  Real area() const;
  Box bounding_box() const;
  /** Closed-form area(E) / area(BBox(E)). */
  Real uprightness() const;
  /** Skew b^2 of the determinant-1 normalization of D. */
  Real skew() const;
  Membership contains(const ComplexInterval& p) const;
};

class ConvexRegion {
 public:
  virtual ~ConvexRegion() = default;
  /** Certified membership of every point in the box p. */
  virtual Membership contains(const ComplexInterval& p) const = 0;
  /** Parameter range [t0, t1] with p + t*d in the region; approximate. */
  virtual std::optional<std::pair<Real, Real>> intersect_line(
      const Vec2& p, const Vec2& d) const = 0;
  virtual Box bounding_box() const = 0;
  virtual Real area() const = 0;
  /** Default: circumscribed ellipse of the bounding box, scaled by sqrt2. */
  virtual Ellipse enclosing_ellipse() const;
};

using RegionPtr = std::shared_ptr<const ConvexRegion>;

/** Closed disk; radius^2 is the exact defining quantity. */
class Disk : public ConvexRegion {
 public:
  Disk(Vec2 center, Interval radius_sq);
  Membership contains(const ComplexInterval& p) const override;
  std::optional<std::pair<Real, Real>> intersect_line(
      const Vec2& p, const Vec2& d) const override;
  Box bounding_box() const override;
  Real area() const override;
  Ellipse enclosing_ellipse() const override;

 private:
  Vec2 c_;
  Interval r2_;
  Real r_;
};

class Rectangle : public ConvexRegion {
 public:
  Rectangle(Real x0, Real x1, Real y0, Real y1);
  Membership contains(const ComplexInterval& p) const override;
  std::optional<std::pair<Real, Real>> intersect_line(
      const Vec2& p, const Vec2& d) const override;
  Box bounding_box() const override { return box_; }
  Real area() const override { return box_.area(); }

 private:
  Box box_;
};

class EllipseRegion : public ConvexRegion {
 public:
  explicit EllipseRegion(Ellipse e);
  Membership contains(const ComplexInterval& p) const override;
  std::optional<std::pair<Real, Real>> intersect_line(
      const Vec2& p, const Vec2& d) const override;
  Box bounding_box() const override { return e_.bounding_box(); }
  Real area() const override { return e_.area(); }
  Ellipse enclosing_ellipse() const override { return e_; }

 private:
  Ellipse e_;
};

/** Convex polygon given by vertices in counter-clockwise order. */
class Polygon : public ConvexRegion {
 public:
  explicit Polygon(std::vector<Vec2> vertices);
  Membership contains(const ComplexInterval& p) const override;
  std::optional<std::pair<Real, Real>> intersect_line(
      const Vec2& p, const Vec2& d) const override;
  Box bounding_box() const override;
  Real area() const override;

 private:
  std::vector<Vec2> v_;
};

/**
 * r * {u in closed unit disk : u . z >= 1 - eps^2/2}, with z a unit vector
 * given by interval components.
 */
class EpsilonRegion : public ConvexRegion {
 public:
  EpsilonRegion(ComplexInterval z, Interval eps, Interval radius_sq = Interval(1));
  Membership contains(const ComplexInterval& p) const override;
  std::optional<std::pair<Real, Real>> intersect_line(
      const Vec2& p, const Vec2& d) const override;
  Box bounding_box() const override;
  Real area() const override;
  /** Circumscribed ellipse of the bounding rectangle aligned with z. */
  Ellipse enclosing_ellipse() const override;

  const ComplexInterval& direction() const { return z_; }
  const Interval& epsilon() const { return eps_; }

 private:
  Real chord_offset() const;  // r * (1 - eps^2/2), clamped to [-r, r]
  ComplexInterval z_;
  Interval eps_, r2_, r_, s0_;
  Real zx_, zy_, r_mid_;
};

/** area(A) / area(BBox(A)). */
Real uprightness(const ConvexRegion& a);
Real uprightness(const Ellipse& e);
Ellipse enclosing_ellipse(const ConvexRegion& a);

// ------------------------------------------------------------------- 1-D

/** Visits the one_d_grid solutions in a fixed order until f returns true. */
bool visit_one_d_grid(const Real& x0, const Real& x1, const Real& y0,
                      const Real& y1,
                      const std::function<bool(const ZRoot2&)>& f);
/** All u in Z[sqrt2] with u in [x0, x1] and u^bullet in [y0, y1]. */
std::vector<ZRoot2> one_d_grid(const Real& x0, const Real& x1, const Real& y0,
                               const Real& y1);
std::vector<ZRoot2> one_d_grid(const Interval& a, const Interval& b);

// ----------------------------------------------------------- Z[i] operators

/** Integer matrix [[a, b], [c, d]] acting on Z^2. */
struct IntOperator {
  Integer a = 1, b = 0, c = 0, d = 1;

  Integer det() const { return a * d - b * c; }
  IntOperator inverse() const;
  Mat2 to_real() const;
  std::pair<Integer, Integer> apply(const Integer& x, const Integer& y) const {
    return {a * x + b * y, c * x + d * y};
  }
  friend IntOperator operator*(const IntOperator& x, const IntOperator& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const IntOperator&, const IntOperator&) = default;
};

/** The image G(E): defined by (G^-1)^T D G^-1, centered at G p. */
Ellipse transform(const Ellipse& e, const Mat2& g);

/** Product of shears G with up(G(E)) >= 1/2. */
IntOperator to_upright_zi(const Ellipse& e, int* rounds = nullptr);

// ---------------------------------------------------------- grid operators

/**
 * Real 2x2 matrix with entries e_ij / sqrt2, e_ij in Z[sqrt2]; entries of
 * the form a + a'/sqrt2 correspond to e = a' + a*sqrt2.
 */
struct GridOperator {
  std::array<ZRoot2, 4> e;

  static GridOperator identity();
  /** Entries a + a'/sqrt2 from integer pairs (a, a'). */
  static GridOperator from_parts(long a, long a1, long b, long b1, long c,
                                 long c1, long d, long d1);
  static GridOperator R();
  static GridOperator A(const Integer& n = 1);
  static GridOperator B(const Integer& n = 1);
  static GridOperator K();
  static GridOperator X();
  static GridOperator Z();

  /** The pair (a, a') of entry idx. */
  std::pair<Integer, Integer> parts(int idx) const;
  bool satisfies_grid_conditions() const;
  /** Determinant as an element of Z[sqrt2] (exact). */
  std::optional<ZRoot2> det() const;
  bool is_special() const;
  GridOperator bullet() const;
  /** Requires is_special(). */
  GridOperator inverse() const;
  /** sigma^k G sigma^k. */
  GridOperator sigma_conjugate(long k) const;
  Mat2 to_real() const;
  ZOmega apply(const ZOmega& u) const;

  friend GridOperator operator*(const GridOperator& x, const GridOperator& y);
  friend bool operator==(const GridOperator& x, const GridOperator& y) {
    return x.e == y.e;
  }
};

// --------------------------------------------------------------- the state

struct StepConstants {
  Real P{15}, Q, r, a, b;
  StepConstants();

  struct Check {
    std::string name;
    Real lhs, rhs;
    bool ok;
  };
  /** The inequalities the proofs rely on, evaluated at the working precision. */
  std::vector<Check> verify() const;
};

/** Pair (D, Delta) of determinant-1 symmetric positive definite matrices. */
struct EllipsePairState {
  Mat2 D, Delta;

  static EllipsePairState from_ellipses(const Ellipse& a, const Ellipse& b);
  Real b() const { return D.b; }
  Real beta() const { return Delta.b; }
  Real z() const;
  Real zeta() const;
  Real skew() const { return D.b * D.b + Delta.b * Delta.b; }
  Real bias() const { return zeta() - z(); }
  /** (G^T D G, G*^T Delta G*). */
  EllipsePairState act(const GridOperator& g) const;
  EllipsePairState shift(long k) const;
};

/** One Step Lemma round; throws std::invalid_argument if skew < P. */
GridOperator step(const EllipsePairState& s, const StepConstants& c);

/** G with G(EA), G*(EB) both at least pi/(4 sqrt(P+1))-upright. */
GridOperator to_upright_pair(const Ellipse& ea, const Ellipse& eb,
                             const StepConstants& c, int* steps = nullptr);

}  // namespace ntsynth
