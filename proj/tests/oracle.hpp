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
#ifndef PATC_TESTS_ORACLE_HPP_
#define PATC_TESTS_ORACLE_HPP_

#include <random>
#include <set>
#include <string>
#include <vector>

#include "patc/pattern.hpp"

// Independent reference semantics used by the tests. Nothing here calls into
// the semilinear or Presburger code.
namespace patc::oracle {

using Counts = std::vector<int>;  // multiplicity per alphabet position

// Every multiset of size <= k denoted by a closed pattern, computed directly
// from the inductive definition of the pattern semantics.
std::set<Counts> bounded_semantics(const Pattern& p, const std::vector<std::string>& alphabet, int k);

// All count vectors over |alphabet| with total <= k.
std::vector<Counts> all_counts(size_t dim, int k);

// Bounded inclusion: every member of p of size <= k is a member of q.
bool bounded_included(const Pattern& p, const Pattern& q, const std::vector<std::string>& alphabet, int k);

// Random closed pattern over `tags`, nesting depth <= depth.
Pattern random_pattern(std::mt19937_64& rng, const std::vector<std::string>& tags, int depth);

std::vector<std::string> abc(int n);  // {"A", "B", "C"}[0..n)

}  // namespace patc::oracle

#endif  // PATC_TESTS_ORACLE_HPP_
