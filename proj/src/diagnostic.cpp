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
#include "patc/diagnostic.hpp"

#include <fmt/format.h>

#include <json.hpp>

namespace patc {

namespace {

constexpr const char* kPhaseNames[] = {"parse", "pretype", "constraints", "solve", "runtime", "io"};
constexpr const char* kSeverityNames[] = {"error", "warning", "note"};

}  // namespace

const char* phase_name(Phase p) { return kPhaseNames[static_cast<int>(p)]; }
const char* severity_name(Severity s) { return kSeverityNames[static_cast<int>(s)]; }

std::optional<Phase> phase_from_name(const std::string& s) {
  for (int i = 0; i < 6; ++i)
    if (s == kPhaseNames[i]) return static_cast<Phase>(i);
  return std::nullopt;
}

std::optional<Severity> severity_from_name(const std::string& s) {
  for (int i = 0; i < 3; ++i)
    if (s == kSeverityNames[i]) return static_cast<Severity>(i);
  return std::nullopt;
}

std::string render(const Diagnostic& d) {
  std::string loc = d.file.empty() ? "<input>" : d.file;
  if (d.span.line > 0) loc += fmt::format(":{}:{}", d.span.line, d.span.col);
  std::string out = fmt::format("{}: {}[{}]", loc, severity_name(d.severity), phase_name(d.phase));
  if (!d.rule.empty()) out += fmt::format(" ({})", d.rule);
  out += ": " + d.message + "\n";
  if (d.constraint) out += "  constraint: " + *d.constraint + "\n";
  for (auto& n : d.notes) out += "  note: " + n + "\n";
  return out;
}

std::string to_json_text(const Diagnostic& d) {
  nlohmann::json j;
  j["severity"] = severity_name(d.severity);
  j["phase"] = phase_name(d.phase);
  j["file"] = d.file;
  j["line"] = d.span.line;
  j["col"] = d.span.col;
  j["rule"] = d.rule;
  j["message"] = d.message;
  j["constraint"] = d.constraint ? nlohmann::json(*d.constraint) : nlohmann::json(nullptr);
  j["notes"] = d.notes;
  return j.dump();
}

Diagnostic from_json_text(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  Diagnostic d;
  auto sev = severity_from_name(j.at("severity").get<std::string>());
  auto ph = phase_from_name(j.at("phase").get<std::string>());
  if (!sev || !ph) throw std::invalid_argument("diagnostic: bad severity or phase");
  d.severity = *sev;
  d.phase = *ph;
  d.file = j.at("file").get<std::string>();
  d.span.line = j.at("line").get<int>();
  d.span.col = j.at("col").get<int>();
  d.rule = j.at("rule").get<std::string>();
  d.message = j.at("message").get<std::string>();
  if (!j.at("constraint").is_null()) d.constraint = j.at("constraint").get<std::string>();
  d.notes = j.at("notes").get<std::vector<std::string>>();
  return d;
}

void fail_at(Phase phase, Span span, std::string rule, std::string message) {
  Diagnostic d;
  d.phase = phase;
  d.span = span;
  d.rule = std::move(rule);
  d.message = std::move(message);
  throw PatError(std::move(d));
}

}  // namespace patc
