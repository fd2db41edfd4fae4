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

#include "patc/typecheck.hpp"

#include <algorithm>

namespace patc {

using namespace types;
using ir::Term;
using ir::TK;
using ir::Value;
using ir::VK;

const char* mode_name(Mode m) { return m == Mode::kStrict ? "strict" : "interface"; }

std::optional<Mode> mode_from_name(const std::string& s) {
  if (s == "strict") return Mode::kStrict;
  if (s == "interface") return Mode::kInterface;
  return std::nullopt;
}

namespace {

UK base_kind(ast::TK k) {
  switch (k) {
    case ast::TK::kInt: return UK::kInt;
    case ast::TK::kString: return UK::kString;
    case ast::TK::kBool: return UK::kBool;
    default: return UK::kUnit;
  }
}

struct BuiltinSig {
  std::vector<UK> args;  // kUnit marks a polymorphic base operand
  UK ret;
};

const BuiltinSig* builtin_sig(const std::string& name) {
  static const std::map<std::string, BuiltinSig> table = {
      {"print", {{UK::kString}, UK::kUnit}},
      {"intToString", {{UK::kInt}, UK::kString}},
      {"not", {{UK::kBool}, UK::kBool}},
      {"+", {{UK::kInt, UK::kInt}, UK::kInt}},
      {"-", {{UK::kInt, UK::kInt}, UK::kInt}},
      {"*", {{UK::kInt, UK::kInt}, UK::kInt}},
      {"/", {{UK::kInt, UK::kInt}, UK::kInt}},
      {"<", {{UK::kInt, UK::kInt}, UK::kBool}},
      {"<=", {{UK::kInt, UK::kInt}, UK::kBool}},
      {">", {{UK::kInt, UK::kInt}, UK::kBool}},
      {">=", {{UK::kInt, UK::kInt}, UK::kBool}},
      {"==", {{UK::kUnit, UK::kUnit}, UK::kBool}},
      {"!=", {{UK::kUnit, UK::kUnit}, UK::kBool}},
      {"&&", {{UK::kBool, UK::kBool}, UK::kBool}},
      {"||", {{UK::kBool, UK::kBool}, UK::kBool}},
  };
  auto it = table.find(name);
  return it == table.end() ? nullptr : &it->second;
}

bool polymorphic_eq(const std::string& op) { return op == "==" || op == "!="; }

std::string pstr(const UTypeP& t) { return t ? to_string(*t) : "_"; }

}  // namespace

// ---- pre-typing ----
//
// A simply-typed pass: mailbox types are compared by interface only and a
// null pointer stands for a type that is not known yet (the other side of
// an injection, the result of a guard that always fails).
class PreTyper {
 public:
  explicit PreTyper(Checker& c) : c_(c) {}

  void run() {
    for (auto& i : c_.prog_.interfaces)
      for (auto& m : i.messages)
        for (size_t k = 0; k < m.payload.size(); ++k) c_.payload(i.name, m.tag, k);
    for (auto& d : c_.prog_.defs) {
      const auto& ft = c_.defs_.at(d.name);
      Bind b(*this);
      for (size_t i = 0; i < d.params.size(); ++i) b.add(d.params[i].name, ft->args[i]);
      expect(ft->ret, term(*d.body), d.span, "result of " + d.name);
    }
    if (c_.prog_.body) expect(base(UK::kUnit), term(*c_.prog_.body), c_.prog_.body->span, "program body");
  }

 private:
  using U = UTypeP;

  [[noreturn]] void err(Span s, const std::string& msg) { fail_at(Phase::kPretype, s, "pre-type", msg); }

  struct Bind {
    PreTyper& p;
    size_t n = 0;
    explicit Bind(PreTyper& p) : p(p) {}
    void add(const std::string& x, U t) {
      p.scope_.emplace_back(x, std::move(t));
      ++n;
    }
    ~Bind() { p.scope_.resize(p.scope_.size() - n); }
  };

  U lookup(const std::string& x, Span s) {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
      if (it->first == x) return it->second;
    err(s, "unbound variable " + x);
  }

  static bool compat(const U& a, const U& b) {
    if (!a || !b) return true;
    if (is_mailbox(*a) && is_mailbox(*b)) return a->iface == b->iface;
    if (a->k != b->k || a->args.size() != b->args.size()) return false;
    for (size_t i = 0; i < a->args.size(); ++i)
      if (!compat(a->args[i], b->args[i])) return false;
    if (a->k == UK::kFun) return compat(a->ret, b->ret);
    return true;
  }

  void expect(const U& want, const U& got, Span s, const std::string& what) {
    if (!compat(want, got)) err(s, what + ": expected " + pstr(want) + ", found " + pstr(got));
  }

  U unify(const U& a, const U& b, Span s) {
    if (!a) return b;
    if (!b) return a;
    if (!compat(a, b)) err(s, "branches have different types: " + pstr(a) + " and " + pstr(b));
    if (a->k == UK::kPair || a->k == UK::kSum) {
      auto l = unify(a->args[0], b->args[0], s);
      auto r = unify(a->args[1], b->args[1], s);
      return a->k == UK::kPair ? pair(l, r) : sum(l, r);
    }
    return a;
  }

  U mailbox_of(const U& t, Span s, const std::string& what) {
    if (!t || !is_mailbox(*t)) err(s, what + " must be a mailbox, found " + pstr(t));
    return t;
  }

  const ast::MessageSig& message(const std::string& iface, const std::string& tag, Span s) {
    for (auto& m : c_.ifaces_.at(iface)->messages)
      if (m.tag == tag) return m;
    err(s, "interface " + iface + " has no message " + tag);
  }

  U value(const Value& v) {
    switch (v.k) {
      case VK::kVar: return lookup(v.name, v.span);
      case VK::kUnit: return base(UK::kUnit);
      case VK::kInt: return base(UK::kInt);
      case VK::kString: return base(UK::kString);
      case VK::kBool: return base(UK::kBool);
      case VK::kPair: return pair(value(*v.kids[0]), value(*v.kids[1]));
      case VK::kInl: return sum(value(*v.kids[0]), nullptr);
      case VK::kInr: return sum(nullptr, value(*v.kids[0]));
      case VK::kLambda: {
        auto ft = c_.lambda_type(v);
        Bind b(*this);
        for (size_t i = 0; i < v.params.size(); ++i) b.add(v.params[i].name, ft->args[i]);
        expect(ft->ret, term(*v.body), v.span, "lambda result");
        return ft;
      }
      case VK::kName: err(v.span, "runtime mailbox names cannot appear in source programs");
    }
    return nullptr;
  }

  U term(const Term& t) {
    switch (t.k) {
      case TK::kVal: return value(*t.vals[0]);
      case TK::kLet: {
        U sub = term(*t.kids[0]);
        U bt = sub;
        if (t.ann) {
          bt = c_.inst(t.ann, false);
          expect(bt, sub, t.span, "let " + t.name);
        }
        c_.term_pre_[&t] = bt;
        Bind b(*this);
        b.add(t.name, bt);
        return term(*t.kids[1]);
      }
      case TK::kLetPair: {
        U v = value(*t.vals[0]);
        if (v && v->k != UK::kPair) err(t.span, "let-pair on a value of type " + pstr(v));
        Bind b(*this);
        for (int i = 0; i < 2; ++i) {
          U ci = v ? v->args[static_cast<size_t>(i)] : nullptr;
          c_.binder_pre_[{&t, i}] = ci;
          b.add(t.names[static_cast<size_t>(i)], ci);
        }
        return term(*t.kids[0]);
      }
      case TK::kCase: {
        U v = value(*t.vals[0]);
        if (v && v->k != UK::kSum) err(t.span, "case on a value of type " + pstr(v));
        U r;
        for (int i = 0; i < 2; ++i) {
          U ci = v ? v->args[static_cast<size_t>(i)] : nullptr;
          c_.binder_pre_[{&t, i}] = ci;
          Bind b(*this);
          b.add(t.names[static_cast<size_t>(i)], ci);
          r = unify(r, term(*t.kids[static_cast<size_t>(i)]), t.span);
        }
        return r;
      }
      case TK::kIf: {
        expect(base(UK::kBool), value(*t.vals[0]), t.span, "condition");
        return unify(term(*t.kids[0]), term(*t.kids[1]), t.span);
      }
      case TK::kCall: {
        auto it = c_.defs_.find(t.name);
        if (it == c_.defs_.end()) err(t.span, "unknown function " + t.name);
        return call(t, it->second, 0, t.name);
      }
      case TK::kApply: {
        U f = value(*t.vals[0]);
        if (!f || f->k != UK::kFun) err(t.span, "applying a value of type " + pstr(f));
        c_.apply_type_[&t] = f;
        return call(t, f, 1, "function");
      }
      case TK::kBuiltin: {
        const BuiltinSig* sig = builtin_sig(t.name);
        if (!sig) err(t.span, "unknown builtin " + t.name);
        if (sig->args.size() != t.vals.size()) err(t.span, t.name + " expects " + std::to_string(sig->args.size()) + " arguments");
        if (polymorphic_eq(t.name)) {
          U a = unify(value(*t.vals[0]), value(*t.vals[1]), t.span);
          if (a && !is_base(*a)) err(t.span, t.name + " compares values of non-base type " + pstr(a));
          c_.operand_[&t] = a ? a : base(UK::kInt);
        } else {
          for (size_t i = 0; i < t.vals.size(); ++i)
            expect(base(sig->args[i]), value(*t.vals[i]), t.span, "argument of " + t.name);
        }
        return base(sig->ret);
      }
      case TK::kSpawn:
        expect(base(UK::kUnit), term(*t.kids[0]), t.span, "spawned computation");
        return base(UK::kUnit);
      case TK::kNew:
        if (!c_.ifaces_.count(t.name)) err(t.span, "unknown interface " + t.name);
        return mailbox(UK::kRecv, t.name, Pattern::one(), Usage::kRet);
      case TK::kSend: {
        U target = mailbox_of(value(*t.vals[0]), t.span, "send target");
        c_.iface_of_[&t] = target->iface;
        const auto& m = message(target->iface, t.name, t.span);
        if (m.payload.size() + 1 != t.vals.size())
          err(t.span, t.name + " carries " + std::to_string(m.payload.size()) + " values");
        for (size_t i = 1; i < t.vals.size(); ++i)
          expect(c_.payload(target->iface, t.name, i - 1), value(*t.vals[i]), t.span, "payload of " + t.name);
        return base(UK::kUnit);
      }
      case TK::kGuard: {
        U subj = mailbox_of(value(*t.vals[0]), t.span, "guard subject");
        c_.iface_of_[&t] = subj->iface;
        U r;
        for (auto& c : t.clauses) {
          if (c.k == ast::ClauseKind::kFail) continue;
          Bind b(*this);
          if (c.k == ast::ClauseKind::kReceive) {
            const auto& m = message(subj->iface, c.tag, c.span);
            if (m.payload.size() != c.binders.size())
              err(c.span, c.tag + " carries " + std::to_string(m.payload.size()) + " values");
            for (size_t i = 0; i < c.binders.size(); ++i) {
              U pt = c_.payload(subj->iface, c.tag, i);
              c_.binder_pre_[{&c, static_cast<int>(i)}] = pt;
              b.add(c.binders[i], pt);
            }
            b.add(c.mailbox, subj);
          }
          r = unify(r, term(*c.body), c.span);
        }
        return r;
      }
    }
    return nullptr;
  }

  U call(const Term& t, const U& f, size_t first, const std::string& what) {
    if (f->args.size() + first != t.vals.size())
      err(t.span, what + " expects " + std::to_string(f->args.size()) + " arguments");
    for (size_t i = first; i < t.vals.size(); ++i)
      expect(f->args[i - first], value(*t.vals[i]), t.span, "argument " + std::to_string(i - first + 1) + " of " + what);
    return f->ret;
  }

  Checker& c_;
  std::vector<std::pair<std::string, U>> scope_;
};

// ---- constraint generation ----

Checker::Checker(ir::Program p, Mode mode) : prog_(std::move(p)), mode_(mode), ops_(cs_) {
  for (auto& i : prog_.interfaces) ifaces_[i.name] = &i;
  for (auto& d : prog_.defs) {
    std::vector<UTypeP> ps;
    for (auto& prm : d.params) ps.push_back(inst(prm.type, true));
    defs_[d.name] = fun(std::move(ps), returnable(inst(d.ret, false)), false);
  }
  PreTyper(*this).run();
}

const UTypeP& Checker::def_type(const std::string& name) const { return defs_.at(name); }

Ops& Checker::at(Span s, const char* rule) {
  ops_.at({s, rule});
  return ops_;
}

UTypeP Checker::inst(const ast::TypeP& t, bool param_pos) {
  switch (t->k) {
    case ast::TK::kUnit:
    case ast::TK::kInt:
    case ast::TK::kString:
    case ast::TK::kBool:
      return base(base_kind(t->k));
    case ast::TK::kSend:
    case ast::TK::kRecv: {
      if (!ifaces_.count(t->iface)) fail_at(Phase::kPretype, t->span, "pre-type", "unknown interface " + t->iface);
      Pattern pat;
      if (t->pat) {
        pat = *t->pat;
      } else {
        auto it = ann_vars_.find(t.get());
        if (it == ann_vars_.end()) it = ann_vars_.emplace(t.get(), ops_.fresh()).first;
        pat = it->second;
      }
      bool send = t->k == ast::TK::kSend;
      return mailbox(send ? UK::kSend : UK::kRecv, t->iface, pat,
                     send && param_pos ? Usage::kSec : Usage::kRet);
    }
    case ast::TK::kPair: return pair(inst(t->args[0], false), inst(t->args[1], false));
    case ast::TK::kSum: return sum(inst(t->args[0], false), inst(t->args[1], false));
    case ast::TK::kFun: {
      std::vector<UTypeP> ps;
      for (auto& a : t->args) ps.push_back(inst(a, true));
      return fun(std::move(ps), returnable(inst(t->ret, false)), t->linear);
    }
  }
  return base(UK::kUnit);
}

UTypeP Checker::payload(const std::string& iface, const std::string& tag, size_t i) {
  for (auto& m : ifaces_.at(iface)->messages)
    if (m.tag == tag) return inst(m.payload.at(i), false);
  fail_at(Phase::kPretype, {}, "pre-type", "interface " + iface + " has no message " + tag);
}

UTypeP Checker::lambda_type(const Value& v) {
  auto it = lambdas_.find(&v);
  if (it != lambdas_.end()) return it->second;
  std::vector<UTypeP> ps;
  for (auto& p : v.params) ps.push_back(inst(p.type, true));
  auto ft = fun(std::move(ps), returnable(inst(v.ret, false)), v.linear);
  lambdas_.emplace(&v, ft);
  return ft;
}

UTypeP Checker::from_pretype(const UTypeP& pre, Span s, const std::string& what) {
  if (!pre) fail_at(Phase::kConstraints, s, "pre-type", "cannot infer the type of " + what + "; add an annotation");
  switch (pre->k) {
    case UK::kSend:
    case UK::kRecv: return mailbox(pre->k, pre->iface, ops_.fresh(), Usage::kSec);
    case UK::kPair: return pair(from_pretype(pre->args[0], s, what), from_pretype(pre->args[1], s, what));
    case UK::kSum: return sum(from_pretype(pre->args[0], s, what), from_pretype(pre->args[1], s, what));
    default: return pre;
  }
}

UTypeP Checker::binder_type(const Env& env, const void* site, int idx, const std::string& x, Span s) {
  auto it = env.find(x);
  if (it != env.end()) return returnable(it->second);
  auto pre = binder_pre_.find({site, idx});
  UTypeP t = from_pretype(pre == binder_pre_.end() ? nullptr : pre->second, s, "unused binder " + x);
  ops_.unr(t);
  return t;
}

namespace {

bool synthesizable(const Term& t) {
  switch (t.k) {
    case TK::kVal: {
      auto k = t.vals[0]->k;
      return k != VK::kVar && k != VK::kInl && k != VK::kInr;
    }
    case TK::kCall:
    case TK::kApply:
    case TK::kBuiltin:
    case TK::kSpawn:
    case TK::kNew:
    case TK::kSend:
      return true;
    default:
      return false;
  }
}

}  // namespace

Env Checker::check_let(const Term& t, const UTypeP& ty) {
  const Term& m = *t.kids[0];
  const Term& n = *t.kids[1];
  if (t.ann) {
    UTypeP ann = returnable(inst(t.ann, false));
    Env e1 = check(m, ann);
    Env e2 = check(n, ty);
    at(t.span, "TC-Let").check_env(e2, t.name, ann);
    return at(t.span, "TC-Let").join(e1, without(e2, {t.name}));
  }
  Env e2 = check(n, ty);
  auto it = e2.find(t.name);
  if (it != e2.end()) {
    Env e1 = check(m, returnable(it->second));
    return at(t.span, "TC-LetNoAnn1").join(e1, without(e2, {t.name}));
  }
  UTypeP s;
  Env e1;
  if (synthesizable(m)) {
    std::tie(s, e1) = synth(m);
  } else {
    s = from_pretype(term_pre_[&t], t.span, "let-bound " + t.name);
    e1 = check(m, s);
  }
  at(t.span, "TC-LetNoAnn2").unr(s);
  return at(t.span, "TC-LetNoAnn2").join(e1, e2);
}

Env Checker::check(const Term& t, const UTypeP& ty) {
  switch (t.k) {
    case TK::kVal: return check_value(*t.vals[0], ty);
    case TK::kLet: return check_let(t, ty);
    case TK::kLetPair: {
      Env e = check(*t.kids[0], ty);
      at(t.span, "TC-LetPair");
      UTypeP a = binder_type(e, &t, 0, t.names[0], t.span);
      UTypeP b = binder_type(e, &t, 1, t.names[1], t.span);
      Env ev = check_value(*t.vals[0], pair(a, b));
      return at(t.span, "TC-LetPair").combine(ev, without(e, t.names));
    }
    case TK::kCase: {
      Env e1 = check(*t.kids[0], ty);
      Env e2 = check(*t.kids[1], ty);
      at(t.span, "TC-Case");
      UTypeP a = binder_type(e1, &t, 0, t.names[0], t.span);
      UTypeP b = binder_type(e2, &t, 1, t.names[1], t.span);
      Env ev = check_value(*t.vals[0], sum(a, b));
      Env m = at(t.span, "TC-Case").merge(without(e1, {t.names[0]}), without(e2, {t.names[1]}));
      return at(t.span, "TC-Case").combine(ev, m);
    }
    case TK::kIf: {
      Env ev = check_value(*t.vals[0], base(UK::kBool));
      Env e1 = check(*t.kids[0], ty);
      Env e2 = check(*t.kids[1], ty);
      Env m = at(t.span, "TC-If").merge(e1, e2);
      return at(t.span, "TC-If").combine(ev, m);
    }
    case TK::kGuard: {
      Guards g = check_guards(t, ty);
      const std::string& iface = iface_of_.at(&t);
      Env ev = check_value(*t.vals[0], mailbox(UK::kRecv, iface, g.lit, Usage::kRet));
      at(t.span, "TC-Guard").constrain(t.pat, g.lit);
      return at(t.span, "TC-Guard").combine(g.env, NEnv{false, ev}).env;
    }
    default: {
      auto [s, e] = synth(t);
      at(t.span, "TC-Sub").subty(s, ty);
      return e;
    }
  }
}

void Checker::alias_check(const ir::Clause& c, const std::string& iface, const Env& rest) {
  std::vector<UTypeP> ps;
  for (size_t i = 0; i < c.binders.size(); ++i) ps.push_back(payload(iface, c.tag, i));
  if (mode_ == Mode::kStrict) {
    bool base_payloads = std::all_of(ps.begin(), ps.end(), [](const UTypeP& p) { return is_base(*p); });
    if (base_payloads) return;
    for (auto& [x, t] : rest)
      if (!is_base(*t))
        at(c.span, "TCG-Recv")
            .error("strict mode: " + c.tag + " carries mailbox payloads while the clause body still uses " + x +
                   " : " + to_string(*t));
    return;
  }
  std::set<std::string> mine;
  for (auto& p : ps) interfaces_of(*p, mine);
  for (auto& [x, t] : rest) {
    std::set<std::string> theirs;
    interfaces_of(*t, theirs);
    for (auto& i : theirs)
      if (mine.count(i))
        at(c.span, "TCG-Recv")
            .error("payload of " + c.tag + " and variable " + x + " both have interface " + i +
                   " (possible aliasing)");
  }
}

Checker::Guards Checker::check_guards(const Term& t, const UTypeP& ty) {
  const Pattern& e = t.pat;
  const std::string& iface = iface_of_.at(&t);
  NEnv acc = NEnv::null();
  std::vector<Pattern> lits;
  bool first = true;
  for (auto& c : t.clauses) {
    NEnv ci = NEnv::null();
    Pattern lit;
    switch (c.k) {
      case ast::ClauseKind::kFail:
        lit = Pattern::zero();
        break;
      case ast::ClauseKind::kFree:
        ci = {false, check(*c.body, ty)};
        lit = Pattern::one();
        break;
      case ast::ClauseKind::kReceive: {
        Env body = check(*c.body, ty);
        auto it = body.find(c.mailbox);
        if (it == body.end() || it->second->k != UK::kRecv || it->second->iface != iface)
          at(c.span, "TCG-Recv")
              .error("the body of the " + c.tag + " clause must go on using mailbox " + c.mailbox +
                     " with its receive capability");
        Pattern gamma = it->second->pat;
        Env rest = without(body, {c.mailbox});
        for (size_t i = 0; i < c.binders.size(); ++i)
          at(c.span, "TCG-Recv").check_env(rest, c.binders[i], second_class(payload(iface, c.tag, i)));
        Env theta = without(rest, c.binders);
        alias_check(c, iface, theta);
        Pattern res = residual(e, c.tag);
        at(c.span, "TCG-Recv").constrain(res, gamma);
        ci = {false, theta};
        lit = Pattern::dot(Pattern::tag(c.tag), res);
        break;
      }
    }
    acc = first ? ci : at(t.span, "TCG-Guards").merge(acc, ci);
    first = false;
    lits.push_back(lit);
  }
  return {acc, Pattern::plus(lits)};
}

std::pair<UTypeP, Env> Checker::synth(const Term& t) {
  switch (t.k) {
    case TK::kVal: return synth_value(*t.vals[0]);
    case TK::kCall:
    case TK::kApply: {
      bool app = t.k == TK::kApply;
      const char* rule = app ? "TS-FnApp" : "TS-App";
      UTypeP ft = app ? apply_type_.at(&t) : defs_.at(t.name);
      size_t first = app ? 1 : 0;
      Env env = app ? check_value(*t.vals[0], ft) : Env{};
      for (size_t i = first; i < t.vals.size(); ++i)
        env = at(t.span, rule).combine(env, check_value(*t.vals[i], ft->args[i - first]));
      return {ft->ret, env};
    }
    case TK::kBuiltin: {
      const BuiltinSig* sig = builtin_sig(t.name);
      Env env;
      for (size_t i = 0; i < t.vals.size(); ++i) {
        UTypeP a = polymorphic_eq(t.name) ? operand_.at(&t) : base(sig->args[i]);
        env = at(t.span, "TS-App").combine(env, check_value(*t.vals[i], a));
      }
      return {base(sig->ret), env};
    }
    case TK::kSpawn: return {base(UK::kUnit), mask(check(*t.kids[0], base(UK::kUnit)))};
    case TK::kNew: return {mailbox(UK::kRecv, t.name, Pattern::one(), Usage::kRet), {}};
    case TK::kSend: {
      const std::string& iface = iface_of_.at(&t);
      Env env = check_value(*t.vals[0], mailbox(UK::kSend, iface, Pattern::tag(t.name), Usage::kSec));
      for (size_t i = 1; i < t.vals.size(); ++i)
        env = at(t.span, "TS-Send").combine(env, check_value(*t.vals[i], second_class(payload(iface, t.name, i - 1))));
      return {base(UK::kUnit), env};
    }
    default:
      fail_at(Phase::kConstraints, t.span, "synth", "cannot synthesise a type for this expression; add an annotation");
  }
}

std::pair<UTypeP, Env> Checker::synth_value(const Value& v) {
  switch (v.k) {
    case VK::kUnit: return {base(UK::kUnit), {}};
    case VK::kInt: return {base(UK::kInt), {}};
    case VK::kString: return {base(UK::kString), {}};
    case VK::kBool: return {base(UK::kBool), {}};
    case VK::kPair: {
      auto [a, ea] = synth_value(*v.kids[0]);
      auto [b, eb] = synth_value(*v.kids[1]);
      return {pair(a, b), at(v.span, "TS-Pair").combine(ea, eb)};
    }
    case VK::kLambda: {
      const char* rule = v.linear ? "TS-LinLam" : "TS-UnLam";
      UTypeP ft = lambda_type(v);
      Env body = check(*v.body, ft->ret);
      std::vector<std::string> names;
      for (size_t i = 0; i < v.params.size(); ++i) {
        at(v.span, rule).check_env(body, v.params[i].name, ft->args[i]);
        names.push_back(v.params[i].name);
      }
      Env rest = without(body, names);
      if (!v.linear) {
        for (auto& [x, t] : rest) at(v.span, rule).unr(t);
        return {ft, rest};
      }
      Env owned;
      for (auto& [x, t] : rest) owned.emplace(x, returnable(t));
      return {ft, owned};
    }
    default:
      fail_at(Phase::kConstraints, v.span, "synth", "cannot synthesise a type for this value; add an annotation");
  }
}

Env Checker::check_value(const Value& v, const UTypeP& ty) {
  switch (v.k) {
    case VK::kVar: return {{v.name, ty}};
    case VK::kPair:
      if (ty->k != UK::kPair) at(v.span, "TC-Pair").error("a pair cannot have type " + to_string(*ty));
      return at(v.span, "TC-Pair").combine(check_value(*v.kids[0], ty->args[0]), check_value(*v.kids[1], ty->args[1]));
    case VK::kInl:
    case VK::kInr: {
      const char* rule = v.k == VK::kInl ? "TC-Inl" : "TC-Inr";
      if (ty->k != UK::kSum) at(v.span, rule).error("an injection cannot have type " + to_string(*ty));
      return check_value(*v.kids[0], ty->args[v.k == VK::kInl ? 0 : 1]);
    }
    case VK::kName:
      fail_at(Phase::kConstraints, v.span, "TC-Var", "runtime mailbox names have no static type");
    default: {
      auto [s, e] = synth_value(v);
      at(v.span, "TC-Sub").subty(s, ty);
      return e;
    }
  }
}

Typing Checker::check_program() {
  Typing out;
  for (auto& d : prog_.defs) {
    const UTypeP& ft = defs_.at(d.name);
    Env e = check(*d.body, ft->ret);
    out.def_envs[d.name] = e;
    std::vector<std::string> names;
    for (size_t i = 0; i < d.params.size(); ++i) {
      at(d.params[i].span, "TC-Def").check_env(e, d.params[i].name, ft->args[i]);
      names.push_back(d.params[i].name);
    }
    Env rest = without(e, names);
    if (!rest.empty()) at(d.span, "TC-Def").error("definition " + d.name + " uses free variables " + to_string(rest));
  }
  if (prog_.body) {
    Env e = check(*prog_.body, base(UK::kUnit));
    if (!e.empty()) at(prog_.body->span, "TC-Program").error("program body uses free variables " + to_string(e));
  }
  out.constraints = cs_;
  out.num_vars = ops_.fresh_count();
  return out;
}

Typing typecheck(const ir::Program& p, Mode mode) { return Checker(p, mode).check_program(); }

}  // namespace patc
