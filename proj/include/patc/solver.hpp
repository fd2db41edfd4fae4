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

#ifndef PATC_SOLVER_HPP_
#define PATC_SOLVER_HPP_

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "patc/diagnostic.hpp"
#include "patc/types.hpp"

namespace patc {

using Substitution = std::map<int, Pattern>;

// Lower bounds per variable (γ ⊑ α grouped with ⊕) and everything else.
std::pair<std::map<int, Pattern>, types::Constraints> group_bounds(const types::Constraints& cs);

// d/dα of a pattern in commutative Kleene algebra.
Pattern derivative(const Pattern& p, int var);

// Least solution of α ⊒ f_α(...) for every bounded α. Variables without a
// bound may remain free in the images.
Substitution close_form(const std::map<int, Pattern>& bounds);

bool check_usable(const Substitution& s);

struct Unsat {
  enum class Kind { kUnsat, kUnusable, kResource };
  Kind kind = Kind::kUnsat;
  types::Constraint constraint;  // as generated
  Pattern lhs;                   // after substitution
  Pattern rhs;
  std::optional<std::vector<std::string>> counterexample;
  std::string message;
};

struct SolveResult {
  std::optional<Substitution> solution;
  std::optional<Unsat> unsat;
  bool ok() const { return solution.has_value(); }
};

struct SolveOptions {
  int max_candidates = 20000;  // inclusion checks spent on unbounded variables
  bool parallel = true;        // batch the final verification
};

SolveResult solve(const types::Constraints& cs, const SolveOptions& opt = {});

Diagnostic unsat_diagnostic(const Unsat& u, const std::string& file);

}  // namespace patc

#endif  // PATC_SOLVER_HPP_
