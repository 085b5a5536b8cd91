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

#include <deque>
#include <optional>
#include <ostream>
#include <functional>
#include <vector>

#include "ntsynth/geometry.hpp"
#include "ntsynth/rings.hpp"

namespace ntsynth {

struct ZiSolution {
  int k = 0;
  int l = 0;
  GaussInt point;
};

struct ZOmegaSolution {
  int k = 0;
  ZOmega point;
};

/**
 * Solutions of alpha in sqrt2^k sqrt5^l A over Z[i], in order of increasing
 * l, then k in {0, 1, 2}, then lexicographically.
 */
class ScaledGridZi {
 public:
  explicit ScaledGridZi(RegionPtr a, int max_l = -1);

  std::optional<ZiSolution> next();
  /** All solutions at one scale, sorted. */
  std::vector<GaussInt> solve(int k, int l) const;
  /** Visits the solutions at one scale in a fixed order until f returns true. */
  bool visit(int k, int l, const std::function<bool(const GaussInt&)>& f) const;

 private:
  RegionPtr a_;
  Ellipse e_;
  IntOperator g_, g_inv_;
  long prec_;
  int max_l_;
  int k_ = 0, l_ = 0;
  bool done_ = false;
  std::deque<ZiSolution> pending_;
};

/**
 * Solutions of u in sqrt2^k A with u^bullet in (-sqrt2)^k B over Z[omega],
 * in order of increasing k, then lexicographically.
 */
class ScaledGridZOmega {
 public:
  ScaledGridZOmega(RegionPtr a, RegionPtr b, int k0 = 0, int max_k = -1);

  std::optional<ZOmegaSolution> next();
  std::vector<ZOmega> solve(int k) const;
  /** Visits the solutions at one scale in a fixed order until f returns true. */
  bool visit(int k, const std::function<bool(const ZOmega&)>& f) const;
  /** Number of Step Lemma rounds used to upright the pair. */
  int step_count() const { return steps_; }

 private:
  RegionPtr a_, b_;
  Ellipse ea_, eb_;
  GridOperator g_, g_inv_;
  long prec_;
  int steps_ = 0;
  int k_, max_k_;
  bool done_ = false;
  std::deque<ZOmegaSolution> pending_;
};

/** sqrt2^k sqrt5^l as a certified interval. */
Interval scale_factor(int k, int l = 0);

/** Text lines "k l a b". */
void dump_solutions(std::ostream& os, const std::vector<ZiSolution>& sols);
/** Text lines "k a0 a1 a2 a3". */
void dump_solutions(std::ostream& os, const std::vector<ZOmegaSolution>& sols);

}  // namespace ntsynth
