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

#ifndef PATC_TYPES_HPP_
#define PATC_TYPES_HPP_

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "patc/diagnostic.hpp"
#include "patc/pattern.hpp"

namespace patc::types {

// Returnable (●) or second-class (○). Only mailbox types carry one.
enum class Usage { kRet, kSec };

enum class UK { kUnit, kInt, kString, kBool, kSend, kRecv, kPair, kSum, kFun };

struct UType;
using UTypeP = std::shared_ptr<const UType>;

struct UType {
  UK k = UK::kUnit;
  Usage usage = Usage::kSec;
  std::string iface;
  Pattern pat;
  std::vector<UTypeP> args;  // pair/sum components, function parameters
  UTypeP ret;
  bool linear = false;
};

UTypeP base(UK k);
UTypeP mailbox(UK cap, std::string iface, Pattern pat, Usage u);
UTypeP pair(UTypeP a, UTypeP b);
UTypeP sum(UTypeP a, UTypeP b);
UTypeP fun(std::vector<UTypeP> params, UTypeP ret, bool linear);

bool is_mailbox(const UType& t);
bool same(const UType& a, const UType& b);  // structural, patterns by key
std::string to_string(const UType& t);

// No mailbox and no function anywhere inside.
bool is_base(const UType& t);
// No second-class mailbox anywhere inside.
bool is_returnable(const UType& t);
void interfaces_of(const UType& t, std::set<std::string>& out);

UTypeP returnable(const UTypeP& t);    // every mailbox made ●
UTypeP second_class(const UTypeP& t);  // every mailbox made ○
UTypeP subst(const UTypeP& t, const std::map<int, Pattern>& s);

struct Origin {
  Span span;
  std::string rule;
};

struct Constraint {
  Pattern lhs;
  Pattern rhs;
  Origin origin;
};
using Constraints = std::vector<Constraint>;

std::string to_string(const Constraint& c);

// Ordered, duplicate-free variable -> type map.
using Env = std::map<std::string, UTypeP>;

// Either an environment or the null environment (fail clauses).
struct NEnv {
  bool top = false;
  Env env;
  static NEnv null() { return {true, {}}; }
};

std::string to_string(const Env& e);

Env without(Env e, const std::vector<std::string>& xs);
Env mask(const Env& e);  // second_class on every entry

// Type and environment operations. Each call appends its constraints to the
// sink and attributes them to the current origin; errors are raised as
// PatError in the constraints phase.
class Ops {
 public:
  explicit Ops(Constraints& sink) : sink_(sink) {}

  void at(Origin o) { origin_ = std::move(o); }
  const Origin& origin() const { return origin_; }
  Pattern fresh();
  int fresh_count() const { return next_; }

  void constrain(Pattern lhs, Pattern rhs);

  void subty(const UTypeP& t, const UTypeP& s);
  void unr(const UTypeP& t);
  UTypeP join(const UTypeP& a, const UTypeP& b);
  UTypeP merge(const UTypeP& a, const UTypeP& b);

  Env join(const Env& a, const Env& b);
  Env merge(const Env& a, const Env& b);
  Env combine(const Env& a, const Env& b);
  NEnv join(const NEnv& a, const NEnv& b);
  NEnv merge(const NEnv& a, const NEnv& b);
  NEnv combine(const NEnv& a, const NEnv& b);

  // Fig. 8 lookup: x absent -> unr(t); present at s -> t <= s.
  void check_env(const Env& e, const std::string& x, const UTypeP& t);

  [[noreturn]] void error(const std::string& msg) const;

 private:
  UTypeP widen_one_sided(const UTypeP& t);
  Usage usage_join(Usage a, Usage b);

  Constraints& sink_;
  Origin origin_;
  int next_ = 0;
};

}  // namespace patc::types

#endif  // PATC_TYPES_HPP_
