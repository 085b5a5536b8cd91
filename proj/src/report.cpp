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

#include "ntsynth/report.hpp"

#include <cctype>

namespace ntsynth {

std::string version() { return NTSYNTH_VERSION; }

AngleParseError::AngleParseError(const std::string& msg, std::size_t offset)
    : std::invalid_argument(msg + " at offset " + std::to_string(offset)),
      offset_(offset) {}

namespace {

class Cursor {
 public:
  explicit Cursor(const std::string& s) : s_(s) {}

  bool done() const { return i_ >= s_.size(); }
  std::size_t pos() const { return i_; }
  char peek() const { return done() ? '\0' : s_[i_]; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++i_;
    return true;
  }
  bool accept(const char* word) {
    std::size_t n = std::char_traits<char>::length(word);
    if (s_.compare(i_, n, word) != 0) return false;
    i_ += n;
    return true;
  }
  std::string digits() {
    std::size_t start = i_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++i_;
    return s_.substr(start, i_ - start);
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw AngleParseError(what, i_);
  }

 private:
  const std::string& s_;
  std::size_t i_ = 0;
};

bool looks_like_pi(const std::string& s) {
  return s.find("pi") != std::string::npos;
}

AngleSpec parse_pi(const std::string& s) {
  Cursor c(s);
  bool neg = c.accept('-');
  Integer num = 1, den = 1;
  if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
    num = Integer(c.digits());
    if (!c.accept('*')) c.fail("expected '*'");
  }
  if (!c.accept("pi")) c.fail("expected 'pi'");
  if (c.accept('/')) {
    std::string d = c.digits();
    if (d.empty()) c.fail("expected denominator");
    den = Integer(d);
    if (den == 0) c.fail("zero denominator");
  }
  if (!c.done()) c.fail("unexpected character");
  return AngleSpec::pi_fraction(neg ? Integer(-num) : num, den);
}

AngleSpec parse_decimal(const std::string& s) {
  Cursor c(s);
  c.accept('-') || c.accept('+');
  std::string whole = c.digits();
  std::string frac;
  if (c.accept('.')) frac = c.digits();
  if (whole.empty() && frac.empty()) c.fail("expected a number or 'pi'");
  if (c.accept('e') || c.accept('E')) {
    c.accept('-') || c.accept('+');
    if (c.digits().empty()) c.fail("expected exponent digits");
  }
  if (!c.done()) c.fail("unexpected character");
  return AngleSpec::decimal(s);
}

}  // namespace

AngleSpec parse_angle(const std::string& s) {
  if (s.empty()) throw AngleParseError("empty angle", 0);
  return looks_like_pi(s) ? parse_pi(s) : parse_decimal(s);
}

std::string format_upper(const Interval& x, int digits) {
  return x.hi().to_string(digits, MPFR_RNDU);
}

void fill_result(RunReport& r, const SynthesisResult& res) {
  r.gate_set = to_string(res.gate_set);
  r.circuit = res.circuit.to_string();
  r.count = res.count();
  r.t_count = res.t_count;
  r.v_count = res.v_count;
  r.k = res.k;
  r.l = res.l;
  r.error_bound = format_upper(res.error);
  r.phase_pi8 = res.phase_pi8;
  r.exact = res.exact;
  r.candidates_tried = res.candidates_tried;
  r.factoring_effort = res.factoring_effort;
  if (res.t_matrix) r.matrix = res.t_matrix->to_string();
  if (res.v_matrix) r.matrix = res.v_matrix->to_string();
}

nlohmann::json to_json(const RunReport& r) {
  return nlohmann::json{
      {"schema_version", r.schema_version},
      {"version", r.version},
      {"command", r.command},
      {"target", r.target},
      {"epsilon", r.epsilon},
      {"gate_set", r.gate_set},
      {"up_to_phase", r.up_to_phase},
      {"seed", r.seed},
      {"effort", r.effort},
      {"oracle", r.oracle},
      {"circuit", r.circuit},
      {"count", r.count},
      {"t_count", r.t_count},
      {"v_count", r.v_count},
      {"k", r.k},
      {"l", r.l},
      {"error_bound", r.error_bound},
      {"phase_pi8", r.phase_pi8},
      {"exact", r.exact},
      {"candidates_tried", r.candidates_tried},
      {"factoring_effort", r.factoring_effort},
      {"matrix", r.matrix},
      {"wall_ms", r.wall_ms},
  };
}

RunReport report_from_json(const nlohmann::json& j) {
  RunReport r;
  j.at("schema_version").get_to(r.schema_version);
  if (r.schema_version != kReportSchemaVersion) {
    throw std::invalid_argument("unsupported report schema version " +
                                std::to_string(r.schema_version));
  }
  j.at("version").get_to(r.version);
  j.at("command").get_to(r.command);
  j.at("target").get_to(r.target);
  j.at("epsilon").get_to(r.epsilon);
  j.at("gate_set").get_to(r.gate_set);
  j.at("up_to_phase").get_to(r.up_to_phase);
  j.at("seed").get_to(r.seed);
  j.at("effort").get_to(r.effort);
  j.at("oracle").get_to(r.oracle);
  j.at("circuit").get_to(r.circuit);
  j.at("count").get_to(r.count);
  j.at("t_count").get_to(r.t_count);
  j.at("v_count").get_to(r.v_count);
  j.at("k").get_to(r.k);
  j.at("l").get_to(r.l);
  j.at("error_bound").get_to(r.error_bound);
  j.at("phase_pi8").get_to(r.phase_pi8);
  j.at("exact").get_to(r.exact);
  j.at("candidates_tried").get_to(r.candidates_tried);
  j.at("factoring_effort").get_to(r.factoring_effort);
  j.at("matrix").get_to(r.matrix);
  j.at("wall_ms").get_to(r.wall_ms);
  return r;
}

}  // namespace ntsynth
