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

#include <cstdint>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "ntsynth/approx.hpp"

namespace ntsynth {

inline constexpr int kReportSchemaVersion = 1;

std::string version();

/** Malformed angle; what() carries the offset. */
class AngleParseError : public std::invalid_argument {
 public:
  AngleParseError(const std::string& msg, std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/** [-] [INT '*'] 'pi' ['/' INT] or a decimal literal. */
AngleSpec parse_angle(const std::string& s);

/** Decimal string not below the upper end of x. */
std::string format_upper(const Interval& x, int digits = 20);

struct RunReport {
  int schema_version = kReportSchemaVersion;
  std::string version;
  std::string command;
  std::string target;
  std::string epsilon;
  std::string gate_set;
  bool up_to_phase = false;
  std::uint64_t seed = 0;
  std::uint64_t effort = 0;
  bool oracle = false;

  std::string circuit;
  int count = 0;
  int t_count = 0;
  int v_count = 0;
  int k = 0;
  int l = 0;
  std::string error_bound;
  bool phase_pi8 = false;
  bool exact = false;
  std::uint64_t candidates_tried = 0;
  std::uint64_t factoring_effort = 0;
  std::string matrix;
  double wall_ms = 0;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

/** Fills the result fields; the caller sets the request fields. */
void fill_result(RunReport& r, const SynthesisResult& res);

nlohmann::json to_json(const RunReport& r);
RunReport report_from_json(const nlohmann::json& j);

}  // namespace ntsynth
