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

#include "patc/types.hpp"

namespace patc::types {

UTypeP base(UK k) {
  auto t = std::make_shared<UType>();
  t->k = k;
  return t;
}

UTypeP mailbox(UK cap, std::string iface, Pattern pat, Usage u) {
  auto t = std::make_shared<UType>();
  t->k = cap;
  t->iface = std::move(iface);
  t->pat = std::move(pat);
  t->usage = u;
  return t;
}

UTypeP pair(UTypeP a, UTypeP b) {
  auto t = std::make_shared<UType>();
  t->k = UK::kPair;
  t->args = {std::move(a), std::move(b)};
  return t;
}

UTypeP sum(UTypeP a, UTypeP b) {
  auto t = std::make_shared<UType>();
  t->k = UK::kSum;
  t->args = {std::move(a), std::move(b)};
  return t;
}

UTypeP fun(std::vector<UTypeP> params, UTypeP ret, bool linear) {
  auto t = std::make_shared<UType>();
  t->k = UK::kFun;
  t->args = std::move(params);
  t->ret = std::move(ret);
  t->linear = linear;
  return t;
}

bool is_mailbox(const UType& t) { return t.k == UK::kSend || t.k == UK::kRecv; }

bool same(const UType& a, const UType& b) {
  if (a.k != b.k || a.args.size() != b.args.size()) return false;
  if (is_mailbox(a) && (a.iface != b.iface || a.usage != b.usage || a.pat != b.pat)) return false;
  if (a.k == UK::kFun && (a.linear != b.linear || !same(*a.ret, *b.ret))) return false;
  for (size_t i = 0; i < a.args.size(); ++i)
    if (!same(*a.args[i], *b.args[i])) return false;
  return true;
}

std::string to_string(const UType& t) {
  switch (t.k) {
    case UK::kUnit: return "Unit";
    case UK::kInt: return "Int";
    case UK::kString: return "String";
    case UK::kBool: return "Bool";
    case UK::kSend:
    case UK::kRecv:
      return std::string(t.usage == Usage::kRet ? "●" : "○") + t.iface + (t.k == UK::kSend ? "!" : "?") + "(" +
             to_string(t.pat) + ")";
    case UK::kPair: return "(" + to_string(*t.args[0]) + ", " + to_string(*t.args[1]) + ")";
    case UK::kSum: {
      std::string l = to_string(*t.args[0]);
      if (t.args[0]->k == UK::kSum) l = "(" + l + ")";
      return l + " + " + to_string(*t.args[1]);
    }
    case UK::kFun: {
      std::string s = t.linear ? "linfun(" : "fun(";
      for (size_t i = 0; i < t.args.size(); ++i) s += (i ? ", " : "") + to_string(*t.args[i]);
      return s + ") -> " + to_string(*t.ret);
    }
  }
  return "?";
}

bool is_base(const UType& t) {
  if (is_mailbox(t) || t.k == UK::kFun) return false;
  for (auto& a : t.args)
    if (!is_base(*a)) return false;
  return true;
}

bool is_returnable(const UType& t) {
  if (is_mailbox(t)) return t.usage == Usage::kRet;
  if (t.k == UK::kFun) return true;
  for (auto& a : t.args)
    if (!is_returnable(*a)) return false;
  return true;
}

void interfaces_of(const UType& t, std::set<std::string>& out) {
  if (is_mailbox(t)) out.insert(t.iface);
  if (t.k == UK::kFun) {
    // a closure may carry names of any interface its signature mentions
    interfaces_of(*t.ret, out);
  }
  for (auto& a : t.args) interfaces_of(*a, out);
}

namespace {

UTypeP with_usage(const UTypeP& t, Usage u) {
  if (is_mailbox(*t)) {
    if (t->usage == u) return t;
    auto c = std::make_shared<UType>(*t);
    c->usage = u;
    return c;
  }
  if (t->k == UK::kPair || t->k == UK::kSum) {
    auto c = std::make_shared<UType>(*t);
    for (auto& a : c->args) a = with_usage(a, u);
    return c;
  }
  return t;  // function types are opaque to masking
}

}  // namespace

UTypeP returnable(const UTypeP& t) { return with_usage(t, Usage::kRet); }
UTypeP second_class(const UTypeP& t) { return with_usage(t, Usage::kSec); }

UTypeP subst(const UTypeP& t, const std::map<int, Pattern>& s) {
  auto c = std::make_shared<UType>(*t);
  if (is_mailbox(*t)) c->pat = substitute(t->pat, s);
  for (auto& a : c->args) a = subst(a, s);
  if (c->ret) c->ret = subst(c->ret, s);
  return c;
}

std::string to_string(const Constraint& c) { return to_string(c.lhs) + " ⊑ " + to_string(c.rhs); }

std::string to_string(const Env& e) {
  std::string s;
  for (auto& [x, t] : e) s += (s.empty() ? "" : ", ") + x + " : " + to_string(*t);
  return s.empty() ? "·" : s;
}

Env without(Env e, const std::vector<std::string>& xs) {
  for (auto& x : xs) e.erase(x);
  return e;
}

Env mask(const Env& e) {
  Env out;
  for (auto& [x, t] : e) out.emplace(x, second_class(t));
  return out;
}

// ---- Ops ----

Pattern Ops::fresh() { return Pattern::var(next_++); }

void Ops::constrain(Pattern lhs, Pattern rhs) { sink_.push_back({std::move(lhs), std::move(rhs), origin_}); }

void Ops::error(const std::string& msg) const { fail_at(Phase::kConstraints, origin_.span, origin_.rule, msg); }

Usage Ops::usage_join(Usage a, Usage b) {
  if (a == Usage::kRet) error("mailbox used after a returnable use (use after free)");
  return b;
}

void Ops::subty(const UTypeP& t, const UTypeP& s) {
  auto mismatch = [&] { error("type " + to_string(*t) + " is not a subtype of " + to_string(*s)); };
  if (t->k != s->k) mismatch();
  switch (t->k) {
    case UK::kUnit:
    case UK::kInt:
    case UK::kString:
    case UK::kBool:
      return;
    case UK::kSend:
    case UK::kRecv:
      if (t->iface != s->iface) mismatch();
      if (t->usage == Usage::kSec && s->usage == Usage::kRet)
        error("second-class " + to_string(*t) + " used where a returnable " + to_string(*s) + " is required");
      if (t->k == UK::kSend) {
        constrain(s->pat, t->pat);
      } else {
        constrain(t->pat, s->pat);
      }
      return;
    case UK::kPair:
    case UK::kSum:
      subty(t->args[0], s->args[0]);
      subty(t->args[1], s->args[1]);
      return;
    case UK::kFun:
      if (t->args.size() != s->args.size() || (t->linear && !s->linear)) mismatch();
      for (size_t i = 0; i < t->args.size(); ++i) subty(s->args[i], t->args[i]);
      subty(t->ret, s->ret);
      return;
  }
}

void Ops::unr(const UTypeP& t) {
  switch (t->k) {
    case UK::kUnit:
    case UK::kInt:
    case UK::kString:
    case UK::kBool:
      return;
    case UK::kSend:
      if (t->usage == Usage::kRet) error("returnable " + to_string(*t) + " must be used");
      constrain(Pattern::one(), t->pat);
      return;
    case UK::kRecv:
      error("receive capability " + to_string(*t) + " must be used");
    case UK::kPair:
    case UK::kSum:
      unr(t->args[0]);
      unr(t->args[1]);
      return;
    case UK::kFun:
      if (t->linear) error("linear function " + to_string(*t) + " must be used");
      return;
  }
}

UTypeP Ops::join(const UTypeP& a, const UTypeP& b) {
  auto mismatch = [&] { error("cannot join " + to_string(*a) + " with " + to_string(*b)); };
  if (is_mailbox(*a) && is_mailbox(*b)) {
    if (a->iface != b->iface) mismatch();
    Usage u = usage_join(a->usage, b->usage);
    if (a->k == UK::kSend && b->k == UK::kSend) return mailbox(UK::kSend, a->iface, Pattern::dot(a->pat, b->pat), u);
    if (a->k == UK::kRecv && b->k == UK::kRecv) error("mailbox " + a->iface + " has two receive capabilities");
    Pattern alpha = fresh();
    const auto& snd = a->k == UK::kSend ? a : b;
    const auto& rcv = a->k == UK::kSend ? b : a;
    constrain(Pattern::dot(snd->pat, alpha), rcv->pat);
    return mailbox(UK::kRecv, a->iface, alpha, u);
  }
  if (a->k != b->k) mismatch();
  switch (a->k) {
    case UK::kFun:
      if (a->linear || b->linear) error("linear function used more than once");
      if (!same(*a, *b)) mismatch();
      return a;
    case UK::kPair:
    case UK::kSum: {
      auto l = join(a->args[0], b->args[0]);
      auto r = join(a->args[1], b->args[1]);
      return a->k == UK::kPair ? pair(l, r) : sum(l, r);
    }
    default:
      return a;
  }
}

UTypeP Ops::merge(const UTypeP& a, const UTypeP& b) {
  auto mismatch = [&] { error("branches disagree: " + to_string(*a) + " versus " + to_string(*b)); };
  if (a->k != b->k) mismatch();
  switch (a->k) {
    case UK::kSend:
    case UK::kRecv: {
      if (a->iface != b->iface) mismatch();
      Usage u = (a->usage == Usage::kRet || b->usage == Usage::kRet) ? Usage::kRet : Usage::kSec;
      if (a->k == UK::kSend) return mailbox(UK::kSend, a->iface, Pattern::plus(a->pat, b->pat), u);
      Pattern alpha = fresh();
      constrain(alpha, a->pat);
      constrain(alpha, b->pat);
      return mailbox(UK::kRecv, a->iface, alpha, u);
    }
    case UK::kFun:
      if (!same(*a, *b)) mismatch();
      return a;
    case UK::kPair:
    case UK::kSum: {
      auto l = merge(a->args[0], b->args[0]);
      auto r = merge(a->args[1], b->args[1]);
      return a->k == UK::kPair ? pair(l, r) : sum(l, r);
    }
    default:
      return a;
  }
}

UTypeP Ops::widen_one_sided(const UTypeP& t) {
  switch (t->k) {
    case UK::kSend:
      return mailbox(UK::kSend, t->iface, Pattern::plus(t->pat, Pattern::one()), t->usage);
    case UK::kRecv:
      error("receive capability " + to_string(*t) + " is used in only one branch");
    case UK::kFun:
      if (t->linear) error("linear function is used in only one branch");
      return t;
    case UK::kPair:
      return pair(widen_one_sided(t->args[0]), widen_one_sided(t->args[1]));
    case UK::kSum:
      return sum(widen_one_sided(t->args[0]), widen_one_sided(t->args[1]));
    default:
      return t;
  }
}

Env Ops::join(const Env& a, const Env& b) {
  Env out = a;
  for (auto& [x, t] : b) {
    auto it = out.find(x);
    if (it == out.end()) {
      out.emplace(x, t);
    } else {
      it->second = join(it->second, t);
    }
  }
  return out;
}

Env Ops::merge(const Env& a, const Env& b) {
  Env out;
  for (auto& [x, t] : a) {
    auto it = b.find(x);
    out.emplace(x, it == b.end() ? widen_one_sided(t) : merge(t, it->second));
  }
  for (auto& [x, t] : b)
    if (!a.count(x)) out.emplace(x, widen_one_sided(t));
  return out;
}

Env Ops::combine(const Env& a, const Env& b) {
  Env out = a;
  for (auto& [x, t] : b) {
    auto it = out.find(x);
    if (it == out.end()) {
      out.emplace(x, t);
      continue;
    }
    const auto& u = it->second;
    bool ok = same(*u, *t) && (is_base(*t) || (t->k == UK::kFun && !t->linear));
    if (!ok) error("variable " + x + " is shared between two parts that must be disjoint (" + to_string(*u) + ", " +
                   to_string(*t) + ")");
  }
  return out;
}

NEnv Ops::join(const NEnv& a, const NEnv& b) {
  if (a.top) return b;
  if (b.top) return a;
  return {false, join(a.env, b.env)};
}

NEnv Ops::merge(const NEnv& a, const NEnv& b) {
  if (a.top) return b;
  if (b.top) return a;
  return {false, merge(a.env, b.env)};
}

NEnv Ops::combine(const NEnv& a, const NEnv& b) {
  if (a.top) return b;
  if (b.top) return a;
  return {false, combine(a.env, b.env)};
}

void Ops::check_env(const Env& e, const std::string& x, const UTypeP& t) {
  auto it = e.find(x);
  if (it == e.end()) {
    unr(t);
  } else {
    subty(t, it->second);
  }
}

}  // namespace patc::types
