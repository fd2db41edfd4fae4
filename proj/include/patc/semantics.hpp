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

#ifndef PATC_SEMANTICS_HPP_
#define PATC_SEMANTICS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "patc/pattern.hpp"
#include "patc/presburger.hpp"

namespace patc {

enum class Cap { kSend, kRecv };

// Sorted union of the tags of the given patterns.
std::vector<std::string> alphabet_of(const std::vector<Pattern>& ps);

// Parikh image of a closed pattern over `alphabet` (must contain its tags).
presburger::SemilinearSet parikh(const Pattern& e, const std::vector<std::string>& alphabet);
presburger::SemilinearSet parikh(const Pattern& e);

// ⟦e⟧ ⊆ ⟦f⟧ for closed patterns. Results are memoised process-wide.
bool includes(const Pattern& e, const Pattern& f);
bool equivalent(const Pattern& e, const Pattern& f);
bool is_empty(const Pattern& e);  // ⟦e⟧ = ∅

// A multiset in ⟦e⟧ \ ⟦f⟧ with at most `bound` messages, if any.
std::optional<std::vector<std::string>> counterexample(const Pattern& e, const Pattern& f, int bound);

// f is a disjunction of literals 0, 1, or m . F' with F' ≃ e/m.
bool pnf_check(const Pattern& e, const Pattern& f);

struct Classification {
  bool relevant = false;
  bool reliable = false;
  bool usable = false;
};

// relevant: J ≰ !1; reliable: J ≰ ?0; usable: !0 ≰ J.
Classification classify(Cap cap, const Pattern& e);

}  // namespace patc

#endif  // PATC_SEMANTICS_HPP_
