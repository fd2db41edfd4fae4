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

#ifndef PATC_PRESBURGER_HPP_
#define PATC_PRESBURGER_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace patc::presburger {

using Vec = std::vector<int64_t>;

struct LinearSet {
  Vec base;
  std::vector<Vec> periods;  // sorted, unique, nonzero
  bool operator==(const LinearSet& o) const { return base == o.base && periods == o.periods; }
  bool operator<(const LinearSet& o) const {
    return base != o.base ? base < o.base : periods < o.periods;
  }
};

struct SemilinearSet {
  std::vector<std::string> alphabet;  // sorted
  std::vector<LinearSet> components;  // empty means the empty set

  size_t dim() const { return alphabet.size(); }
};

class AlphabetMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The decider gave up: too many atoms, or 64-bit overflow.
class ResourceExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

LinearSet make_linear(Vec base, std::vector<Vec> periods);
SemilinearSet empty_set(std::vector<std::string> alphabet);
SemilinearSet unit_set(std::vector<std::string> alphabet);   // {0}
SemilinearSet point_set(std::vector<std::string> alphabet, Vec v);

SemilinearSet sls_union(const SemilinearSet& a, const SemilinearSet& b);
SemilinearSet sls_sum(const SemilinearSet& a, const SemilinearSet& b);
SemilinearSet sls_star(const SemilinearSet& a);

// Re-embeds `a` into a larger sorted alphabet.
SemilinearSet widen(const SemilinearSet& a, const std::vector<std::string>& alphabet);

bool member(const LinearSet& l, const Vec& v);
bool member(const SemilinearSet& s, const Vec& v);

struct OracleResult {
  bool included = true;
  std::optional<Vec> witness;
};

// Enumerates every vector of total size <= bound. Semi-decision for "false".
OracleResult oracle_inclusion_bounded(const SemilinearSet& a, const SemilinearSet& b, int bound);

// All vectors of dimension `dim` with entry sum <= bound, in a fixed order.
std::vector<Vec> vectors_up_to(size_t dim, int bound);

// ---- formulas ----

struct Term {
  std::map<int, int64_t> coef;  // no zero entries
  int64_t k = 0;

  static Term var(int v, int64_t c = 1);
  static Term constant(int64_t c);
  int64_t at(int v) const;
  bool ground() const { return coef.empty(); }
};
Term operator+(const Term& a, const Term& b);
Term operator-(const Term& a, const Term& b);
Term operator*(int64_t m, const Term& a);

enum class FKind { kTrue, kFalse, kLe, kEq, kNe, kDvd, kNDvd, kAnd, kOr, kNot, kExists, kForall };

struct FNode;
using Formula = std::shared_ptr<const FNode>;

// Atoms: kLe is t <= 0, kEq t = 0, kNe t != 0, kDvd d | t, kNDvd not d | t.
struct FNode {
  FKind kind;
  Term t;
  int64_t d = 0;
  int var = -1;
  std::vector<Formula> kids;
  uint64_t hash = 0;
};

Formula f_true();
Formula f_false();
Formula f_le(const Term& a, const Term& b);  // a <= b
Formula f_lt(const Term& a, const Term& b);
Formula f_ge(const Term& a, const Term& b);
Formula f_eq(const Term& a, const Term& b);
Formula f_ne(const Term& a, const Term& b);
Formula f_dvd(int64_t d, const Term& t);
Formula f_and(std::vector<Formula> fs);
Formula f_or(std::vector<Formula> fs);
Formula f_not(const Formula& f);
Formula f_implies(const Formula& a, const Formula& b);
Formula f_exists(int v, const Formula& body);
Formula f_forall(int v, const Formula& body);

bool is_sentence(const Formula& f);

struct DecideOptions {
  // Maximum number of atoms generated during elimination before giving up.
  uint64_t atom_limit = 1000000;
};

// Default limit, honouring PATC_SOLVER_ATOM_LIMIT.
DecideOptions default_decide_options();

// Cooper-style quantifier elimination followed by ground evaluation.
// Throws ResourceExhausted when the budget runs out.
bool decide(const Formula& sentence, const DecideOptions& opts = default_decide_options());

// Quantifier-free equivalent of the formula (exposed for tests).
Formula eliminate(const Formula& f, const DecideOptions& opts = default_decide_options());

std::string to_string(const Formula& f);
std::string to_smtlib(const Formula& sentence, const std::string& comment = "");

// Sentence "every member of a is a member of b"; variables range over
// naturals via explicit >= 0 guards.
Formula inclusion_sentence(const SemilinearSet& a, const SemilinearSet& b);

// Decides a ⊆ b. Uses cheap exact shortcuts per component and falls back to
// `decide` on the inclusion sentence of the remaining components.
bool sls_inclusion(const SemilinearSet& a, const SemilinearSet& b,
                   const DecideOptions& opts = default_decide_options());

}  // namespace patc::presburger

#endif  // PATC_PRESBURGER_HPP_
