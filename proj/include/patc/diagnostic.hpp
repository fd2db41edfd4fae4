// Copyright 2026 The patc Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef PATC_DIAGNOSTIC_HPP_
#define PATC_DIAGNOSTIC_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace patc {

struct Span {
  int line = 0;  // 1-based; 0 means unknown
  int col = 0;
  bool operator==(const Span&) const = default;
};

enum class Phase { kParse, kPretype, kConstraints, kSolve, kRuntime, kIo };
enum class Severity { kError, kWarning, kNote };

const char* phase_name(Phase p);
const char* severity_name(Severity s);
std::optional<Phase> phase_from_name(const std::string& s);
std::optional<Severity> severity_from_name(const std::string& s);

struct Diagnostic {
  Severity severity = Severity::kError;
  Phase phase = Phase::kParse;
  std::string file;
  Span span;
  std::string rule;                       // typing rule or parser production
  std::string message;
  std::optional<std::string> constraint;  // "lhs ⊑ rhs" after substitution
  std::vector<std::string> notes;

  bool operator==(const Diagnostic&) const = default;
};

// Human form: "file:line:col: error[phase] (rule): message" plus indented
// constraint and notes.
std::string render(const Diagnostic& d);

// Machine form (JSON object); from_json_text inverts to_json_text.
std::string to_json_text(const Diagnostic& d);
Diagnostic from_json_text(const std::string& text);

class PatError : public std::runtime_error {
 public:
  explicit PatError(Diagnostic d) : std::runtime_error(d.message), diag_(std::move(d)) {}
  const Diagnostic& diag() const { return diag_; }
  Diagnostic& diag() { return diag_; }

 private:
  Diagnostic diag_;
};

[[noreturn]] void fail_at(Phase phase, Span span, std::string rule, std::string message);

}  // namespace patc

#endif  // PATC_DIAGNOSTIC_HPP_
