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

#include "patc/driver.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "patc/parser.hpp"
#include "patc/presburger.hpp"
#include "patc/semantics.hpp"

namespace patc {

namespace {

using Clock = std::chrono::steady_clock;

template <class F>
auto timed(CheckReport& r, const char* name, F&& f) {
  auto t0 = Clock::now();
  struct Record {
    CheckReport& r;
    const char* name;
    Clock::time_point t0;
    ~Record() { r.times.push_back({name, std::chrono::duration<double, std::milli>(Clock::now() - t0).count()}); }
  } rec{r, name, t0};
  return f();
}

void fail(CheckReport& r, const Diagnostic& d) {
  r.diags.push_back(d);
  if (r.diags.back().file.empty()) r.diags.back().file = r.file;
  r.exit_code = d.phase == Phase::kParse ? kExitParse : d.phase == Phase::kIo ? kExitIo : kExitType;
}

void back_half(CheckReport& r, const ir::Program& p, const CheckOptions& opt) {
  try {
    auto checker = timed(r, "pretype", [&] { return std::make_unique<Checker>(p, opt.mode); });
    r.typing = timed(r, "constraints", [&] { return checker->check_program(); });
    SolveOptions so;
    so.parallel = opt.parallel;
    auto res = timed(r, "solve", [&] { return solve(r.typing->constraints, so); });
    if (res.ok()) {
      r.solution = std::move(res.solution);
    } else {
      fail(r, unsat_diagnostic(*res.unsat, r.file));
    }
  } catch (const PatError& e) {
    fail(r, e.diag());
  } catch (const presburger::ResourceExhausted& e) {
    fail(r, Diagnostic{Severity::kError, Phase::kSolve, r.file, {}, "resource", e.what(), std::nullopt, {}});
  } catch (const PatternError& e) {
    fail(r, Diagnostic{Severity::kError, Phase::kConstraints, r.file, {}, "pattern", e.what(), std::nullopt, {}});
  }
}

}  // namespace

CheckReport check_source(const std::string& source, const std::string& file, const CheckOptions& opt) {
  CheckReport r;
  r.file = file;
  try {
    auto ast = timed(r, "parse", [&] { return parse_program(source, file); });
    auto sugar = timed(r, "desugar", [&] { return ir::desugar(ast); });
    r.ir = timed(r, "ir", [&] { return ir::to_ir(sugar); });
  } catch (const PatError& e) {
    fail(r, e.diag());
    return r;
  }
  if (opt.typecheck) back_half(r, *r.ir, opt);
  return r;
}

CheckReport check_ir(const ir::Program& p, const CheckOptions& opt) {
  CheckReport r;
  r.file = p.file;
  back_half(r, p, opt);
  return r;
}

std::vector<SmtQuery> smt_queries(const CheckReport& r) {
  std::vector<SmtQuery> out;
  if (!r.typing || !r.solution) return out;
  for (auto& c : r.typing->constraints) {
    Pattern l = substitute(c.lhs, *r.solution), rt = substitute(c.rhs, *r.solution);
    auto alpha = alphabet_of({l, rt});
    auto sentence = presburger::inclusion_sentence(parikh(l, alpha), parikh(rt, alpha));
    SmtQuery q;
    q.constraint = to_string(l) + " ⊑ " + to_string(rt);
    q.holds = includes(l, rt);
    std::string comment = q.constraint + "\n" + c.origin.rule + " @ " + r.file + ":" +
                          std::to_string(c.origin.span.line) + ":" + std::to_string(c.origin.span.col) +
                          "\nexpected: " + (q.holds ? "unsat" : "sat");
    q.script = presburger::to_smtlib(sentence, comment);
    out.push_back(std::move(q));
  }
  return out;
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CheckReport check_file(const std::string& path, const CheckOptions& opt) {
  auto src = read_file(path);
  if (!src) {
    CheckReport r;
    r.file = path;
    fail(r, Diagnostic{Severity::kError, Phase::kIo, path, {}, "io", "cannot read " + path, std::nullopt, {}});
    return r;
  }
  return check_source(*src, path, opt);
}

}  // namespace patc
