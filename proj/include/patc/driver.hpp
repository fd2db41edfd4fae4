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

#ifndef PATC_DRIVER_HPP_
#define PATC_DRIVER_HPP_

#include <optional>
#include <string>
#include <vector>

#include "patc/diagnostic.hpp"
#include "patc/ir.hpp"
#include "patc/solver.hpp"
#include "patc/typecheck.hpp"

namespace patc {

// Exit codes shared by the command line and the tests.
enum Exit : int {
  kExitOk = 0,
  kExitType = 1,
  kExitParse = 2,
  kExitIo = 3,
  kExitDeadlock = 4,
  kExitFailGuard = 5,
  kExitStepLimit = 6,
};

struct PhaseTime {
  std::string name;
  double ms = 0;
};

struct CheckOptions {
  Mode mode = Mode::kInterface;
  bool parallel = true;
  bool typecheck = true;  // false stops after lowering to the IR
};

// Result of the six phases: parse, desugar, IR, pre-typing, constraint
// generation, solving. Later fields are present only if their phase ran.
struct CheckReport {
  int exit_code = kExitOk;
  std::string file;
  std::vector<Diagnostic> diags;
  std::optional<ir::Program> ir;
  std::optional<Typing> typing;
  std::optional<Substitution> solution;
  std::vector<PhaseTime> times;
  bool ok() const { return exit_code == kExitOk; }
};

CheckReport check_source(const std::string& source, const std::string& file, const CheckOptions& opt = {});
CheckReport check_file(const std::string& path, const CheckOptions& opt = {});

// Phases 4 to 6 only, on an already lowered program; used by the benchmark.
CheckReport check_ir(const ir::Program& p, const CheckOptions& opt = {});

// One SMT-LIB2 script per constraint, after substituting the solution.
// Each script asserts the negated inclusion, so "unsat" means it holds.
struct SmtQuery {
  std::string constraint;  // rendered "lhs ⊑ rhs"
  std::string script;
  bool holds = false;      // verdict of the built-in decider
};
std::vector<SmtQuery> smt_queries(const CheckReport& r);

std::optional<std::string> read_file(const std::string& path);

}  // namespace patc

#endif  // PATC_DRIVER_HPP_
