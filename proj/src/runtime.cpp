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

#include "patc/runtime.hpp"

#include <algorithm>
#include <set>

namespace patc::runtime {

using ir::TermP;
using ir::ValueP;
using ir::VK;
using Subst = std::map<std::string, ValueP>;

const char* outcome_name(OutcomeKind k) {
  switch (k) {
    case OutcomeKind::kTerminated: return "Terminated";
    case OutcomeKind::kDeadlock: return "Deadlock";
    case OutcomeKind::kFailGuardHit: return "FailGuardHit";
    case OutcomeKind::kStepLimit: return "StepLimit";
  }
  return "?";
}

namespace {

Subst without(const Subst& s, const std::vector<std::string>& names) {
  Subst out = s;
  for (auto& n : names) out.erase(n);
  return out;
}

ValueP subst_v(const ValueP& v, const Subst& s) {
  if (s.empty()) return v;
  switch (v->k) {
    case VK::kVar: {
      auto it = s.find(v->name);
      return it == s.end() ? v : it->second;
    }
    case VK::kPair:
    case VK::kInl:
    case VK::kInr: {
      std::vector<ValueP> kids;
      bool changed = false;
      for (auto& k : v->kids) {
        kids.push_back(subst_v(k, s));
        changed |= kids.back() != k;
      }
      if (!changed) return v;
      auto c = std::make_shared<ir::Value>(*v);
      c->kids = std::move(kids);
      return c;
    }
    case VK::kLambda: {
      std::vector<std::string> ps;
      for (auto& p : v->params) ps.push_back(p.name);
      auto body = subst(v->body, without(s, ps));
      if (body == v->body) return v;
      auto c = std::make_shared<ir::Value>(*v);
      c->body = body;
      return c;
    }
    default:
      return v;
  }
}

TermP val_term(ValueP v, Span sp = {}) {
  auto t = std::make_shared<ir::Term>();
  t->k = ir::TK::kVal;
  t->span = sp;
  t->vals.push_back(std::move(v));
  return t;
}

ValueP int_v(int64_t i) {
  auto v = std::make_shared<ir::Value>();
  v->k = VK::kInt;
  v->i = i;
  return v;
}

ValueP bool_v(bool b) {
  auto v = std::make_shared<ir::Value>();
  v->k = VK::kBool;
  v->b = b;
  return v;
}

ValueP str_v(std::string s) {
  auto v = std::make_shared<ir::Value>();
  v->k = VK::kString;
  v->s = std::move(s);
  return v;
}

bool base_equal(const ir::Value& a, const ir::Value& b) {
  if (a.k != b.k) return false;
  switch (a.k) {
    case VK::kUnit: return true;
    case VK::kInt: return a.i == b.i;
    case VK::kString: return a.s == b.s;
    case VK::kBool: return a.b == b.b;
    case VK::kName: return a.i == b.i;
    default: return false;
  }
}

// Result of a builtin, or nullopt when stuck (ill-typed input, division by
// zero).
std::optional<ValueP> eval_builtin(const std::string& op, const std::vector<ValueP>& a, std::string* printed) {
  auto ints = [&] { return a.size() == 2 && a[0]->k == VK::kInt && a[1]->k == VK::kInt; };
  auto bools = [&] { return a.size() == 2 && a[0]->k == VK::kBool && a[1]->k == VK::kBool; };
  if (op == "print") {
    if (a.size() != 1 || a[0]->k != VK::kString) return std::nullopt;
    if (printed) *printed = a[0]->s;
    return ir::mk_unit();
  }
  if (op == "intToString") {
    if (a.size() != 1 || a[0]->k != VK::kInt) return std::nullopt;
    return str_v(std::to_string(a[0]->i));
  }
  if (op == "not") {
    if (a.size() != 1 || a[0]->k != VK::kBool) return std::nullopt;
    return bool_v(!a[0]->b);
  }
  if (op == "==" || op == "!=") {
    if (a.size() != 2) return std::nullopt;
    bool eq = base_equal(*a[0], *a[1]);
    return bool_v(op == "==" ? eq : !eq);
  }
  if (op == "&&" || op == "||") {
    if (!bools()) return std::nullopt;
    return bool_v(op == "&&" ? (a[0]->b && a[1]->b) : (a[0]->b || a[1]->b));
  }
  if (!ints()) return std::nullopt;
  int64_t x = a[0]->i, y = a[1]->i;
  if (op == "+") return int_v(x + y);
  if (op == "-") return int_v(x - y);
  if (op == "*") return int_v(x * y);
  if (op == "/") {
    if (y == 0) return std::nullopt;
    return int_v(x / y);
  }
  if (op == "<") return bool_v(x < y);
  if (op == "<=") return bool_v(x <= y);
  if (op == ">") return bool_v(x > y);
  if (op == ">=") return bool_v(x >= y);
  return std::nullopt;
}

std::string vals_str(const std::vector<ValueP>& vs, size_t from) {
  std::string s = "(";
  for (size_t i = from; i < vs.size(); ++i) s += (i > from ? ", " : "") + ir::dump_value(*vs[i]);
  return s + ")";
}

std::string clip(std::string s) {
  if (s.size() > 72) s = s.substr(0, 69) + "...";
  return s;
}

}  // namespace

TermP subst(const TermP& t, const Subst& s) {
  if (s.empty() || !t) return t;
  auto c = std::make_shared<ir::Term>(*t);
  bool changed = false;
  for (auto& v : c->vals) {
    auto nv = subst_v(v, s);
    changed |= nv != v;
    v = nv;
  }
  auto sub_kid = [&](size_t i, const Subst& si) {
    auto nk = subst(c->kids[i], si);
    changed |= nk != c->kids[i];
    c->kids[i] = nk;
  };
  switch (t->k) {
    case ir::TK::kLet:
      sub_kid(0, s);
      sub_kid(1, without(s, {t->name}));
      break;
    case ir::TK::kLetPair:
      sub_kid(0, without(s, t->names));
      break;
    case ir::TK::kCase:
      sub_kid(0, without(s, {t->names[0]}));
      sub_kid(1, without(s, {t->names[1]}));
      break;
    default:
      for (size_t i = 0; i < c->kids.size(); ++i) sub_kid(i, s);
  }
  for (auto& cl : c->clauses) {
    auto bound = cl.binders;
    if (!cl.mailbox.empty()) bound.push_back(cl.mailbox);
    auto nb = subst(cl.body, without(s, bound));
    changed |= nb != cl.body;
    cl.body = nb;
  }
  return changed ? c : t;
}

void count_names(const ir::Value& v, std::map<int64_t, int>& out) {
  if (v.k == VK::kName) ++out[v.i];
  for (auto& k : v.kids) count_names(*k, out);
  if (v.body) count_names(*v.body, out);
}

void count_names(const ir::Term& t, std::map<int64_t, int>& out) {
  for (auto& v : t.vals) count_names(*v, out);
  for (auto& k : t.kids) count_names(*k, out);
  for (auto& c : t.clauses)
    if (c.body) count_names(*c.body, out);
}

Machine::Machine(const ir::Program& p, uint64_t seed) : rng_(seed) {
  for (auto& d : p.defs) defs_[d.name] = &d;
  if (p.body) {
    Thread t;
    t.id = next_thread_++;
    t.term = p.body;
    t.refs = count_thread(t);
    add_refs(t.refs, +1);
    threads_.push_back(std::move(t));
  }
}

std::map<int64_t, int> Machine::count_thread(const Thread& t) const {
  std::map<int64_t, int> m;
  count_names(*t.term, m);
  for (auto& f : t.stack) count_names(*f.cont, m);
  return m;
}

void Machine::add_refs(const std::map<int64_t, int>& m, int sign) {
  for (auto& [n, c] : m) {
    int& r = refs_[n];
    r += sign * c;
    if (r == 0) refs_.erase(n);
  }
}

bool Machine::done(const Thread& t) const { return t.term->k == ir::TK::kVal && t.stack.empty(); }

void Machine::log(int thread, const std::string& rule, const std::string& what) {
  if (!tracing_) return;
  std::string line = std::to_string(steps_) + ", " + std::to_string(thread) + ", " + rule + ", " + clip(what);
  if (trace_sink_) trace_sink_(line);
  trace_.push_back(std::move(line));
}

std::vector<Machine::Redex> Machine::enabled() {
  std::vector<Redex> out;
  for (size_t i = 0; i < threads_.size(); ++i) {
    const Thread& th = threads_[i];
    const ir::Term& t = *th.term;
    const auto& vs = t.vals;
    switch (t.k) {
      case ir::TK::kVal:
        if (!th.stack.empty()) out.push_back({i});
        break;
      case ir::TK::kLet:
      case ir::TK::kSpawn:
      case ir::TK::kNew:
        out.push_back({i});
        break;
      case ir::TK::kLetPair:
        if (vs[0]->k == VK::kPair) out.push_back({i});
        break;
      case ir::TK::kCase:
        if (vs[0]->k == VK::kInl || vs[0]->k == VK::kInr) out.push_back({i});
        break;
      case ir::TK::kIf:
        if (vs[0]->k == VK::kBool) out.push_back({i});
        break;
      case ir::TK::kCall: {
        auto it = defs_.find(t.name);
        if (it != defs_.end() && it->second->params.size() == vs.size()) out.push_back({i});
        break;
      }
      case ir::TK::kApply:
        if (vs[0]->k == VK::kLambda && vs[0]->params.size() + 1 == vs.size()) out.push_back({i});
        break;
      case ir::TK::kBuiltin:
        if (eval_builtin(t.name, vs, nullptr)) out.push_back({i});
        break;
      case ir::TK::kSend:
        if (vs[0]->k == VK::kName) out.push_back({i});
        break;
      case ir::TK::kGuard: {
        if (vs[0]->k != VK::kName) break;
        int64_t a = vs[0]->i;
        auto q = queues_.find(a);
        bool empty = q == queues_.end() || q->second.empty();
        for (size_t c = 0; c < t.clauses.size(); ++c) {
          const auto& cl = t.clauses[c];
          switch (cl.k) {
            case ast::ClauseKind::kFail:
              out.push_back({i, static_cast<int>(c)});
              break;
            case ast::ClauseKind::kFree: {
              auto g = refs_.find(a);
              auto own = th.refs.find(a);
              int global = g == refs_.end() ? 0 : g->second;
              int mine = own == th.refs.end() ? 0 : own->second;
              if (global != mine) break;
              if (empty) {
                out.push_back({i, static_cast<int>(c)});
              } else {
                // Would fire under the bare rule. Only worth reporting when
                // no receive clause can take the queued messages either.
                bool receivable = std::any_of(t.clauses.begin(), t.clauses.end(), [&](const ir::Clause& o) {
                  return o.k == ast::ClauseKind::kReceive &&
                         std::any_of(q->second.begin(), q->second.end(),
                                     [&](const Message& m) { return m.tag == o.tag; });
                });
                std::string n = "free of #" + std::to_string(a) + " withheld: " +
                                std::to_string(q->second.size()) + " unreceivable message(s) queued";
                if (!receivable && std::find(notes_.begin(), notes_.end(), n) == notes_.end())
                  notes_.push_back(n);
              }
              break;
            }
            case ast::ClauseKind::kReceive:
              if (!empty && std::any_of(q->second.begin(), q->second.end(),
                                        [&](const Message& m) { return m.tag == cl.tag; }))
                out.push_back({i, static_cast<int>(c)});
              break;
          }
        }
        break;
      }
    }
  }
  return out;
}

std::optional<Outcome> Machine::fire(const Redex& r) {
  Thread& th = threads_[r.thread];
  add_refs(th.refs, -1);
  const TermP cur = th.term;
  const ir::Term& t = *cur;
  const auto& vs = t.vals;
  int id = th.id;
  std::optional<Thread> spawned;
  std::optional<Outcome> result;

  switch (t.k) {
    case ir::TK::kVal: {
      Frame f = std::move(th.stack.back());
      th.stack.pop_back();
      log(id, "E-Return", f.binder + " := " + ir::dump_value(*vs[0]));
      th.term = subst(f.cont, {{f.binder, vs[0]}});
      break;
    }
    case ir::TK::kLet:
      log(id, "E-Let", "let " + t.name);
      th.stack.push_back({t.name, t.kids[1]});
      th.term = t.kids[0];
      break;
    case ir::TK::kLetPair:
      log(id, "E-LetPair", "let (" + t.names[0] + ", " + t.names[1] + ")");
      th.term = subst(t.kids[0], {{t.names[0], vs[0]->kids[0]}, {t.names[1], vs[0]->kids[1]}});
      break;
    case ir::TK::kCase: {
      bool left = vs[0]->k == VK::kInl;
      log(id, "E-Case", left ? "inl" : "inr");
      th.term = subst(t.kids[left ? 0 : 1], {{t.names[left ? 0 : 1], vs[0]->kids[0]}});
      break;
    }
    case ir::TK::kIf:
      log(id, "E-If", vs[0]->b ? "true" : "false");
      th.term = t.kids[vs[0]->b ? 0 : 1];
      break;
    case ir::TK::kCall: {
      const ir::Def& d = *defs_.at(t.name);
      Subst s;
      for (size_t i = 0; i < vs.size(); ++i) s[d.params[i].name] = vs[i];
      log(id, "E-App", t.name + vals_str(vs, 0));
      th.term = subst(d.body, s);
      break;
    }
    case ir::TK::kApply: {
      const ir::Value& f = *vs[0];
      Subst s;
      for (size_t i = 0; i < f.params.size(); ++i) s[f.params[i].name] = vs[i + 1];
      log(id, "E-App", "lambda" + vals_str(vs, 1));
      th.term = subst(f.body, s);
      break;
    }
    case ir::TK::kBuiltin: {
      std::string printed;
      auto v = *eval_builtin(t.name, vs, &printed);
      log(id, "E-Builtin", t.name + vals_str(vs, 0));
      if (t.name == "print") {
        output_ += printed + "\n";
        if (out_sink_) out_sink_(printed + "\n");
      }
      th.term = val_term(v, t.span);
      break;
    }
    case ir::TK::kSpawn: {
      Thread n;
      n.id = next_thread_++;
      n.term = t.kids[0];
      log(id, "E-Spawn", "thread " + std::to_string(n.id));
      spawned = std::move(n);
      th.term = val_term(ir::mk_unit(), t.span);
      break;
    }
    case ir::TK::kNew: {
      int64_t a = next_name_++;
      log(id, "E-New", "new[" + t.name + "] = #" + std::to_string(a));
      th.term = val_term(ir::mk_name(a), t.span);
      break;
    }
    case ir::TK::kSend: {
      Message m{t.name, {vs.begin() + 1, vs.end()}};
      std::map<int64_t, int> pc;
      for (auto& v : m.payload) count_names(*v, pc);
      add_refs(pc, +1);
      log(id, "E-Send", ir::dump_value(*vs[0]) + " ! " + t.name + vals_str(vs, 1));
      queues_[vs[0]->i].push_back(std::move(m));
      th.term = val_term(ir::mk_unit(), t.span);
      break;
    }
    case ir::TK::kGuard: {
      int64_t a = vs[0]->i;
      const auto& cl = t.clauses[static_cast<size_t>(r.clause)];
      if (cl.k == ast::ClauseKind::kFail) {
        log(id, "E-Fail", "guard #" + std::to_string(a) + " selected fail");
        result = Outcome{OutcomeKind::kFailGuardHit, a, t.span, "fail clause selected on #" + std::to_string(a)};
        break;  // the thread is left as it was
      }
      if (cl.k == ast::ClauseKind::kFree) {
        log(id, "E-Free", "#" + std::to_string(a));
        queues_.erase(a);
        th.term = cl.body;
        break;
      }
      auto& q = queues_[a];
      std::vector<size_t> idx;
      for (size_t i = 0; i < q.size(); ++i)
        if (q[i].tag == cl.tag) idx.push_back(i);
      size_t pick = idx[rng_() % idx.size()];
      Message m = std::move(q[pick]);
      q.erase(q.begin() + static_cast<std::ptrdiff_t>(pick));
      if (q.empty()) queues_.erase(a);
      std::map<int64_t, int> pc;
      for (auto& v : m.payload) count_names(*v, pc);
      add_refs(pc, -1);
      log(id, "E-Recv", "#" + std::to_string(a) + " ? " + m.tag + vals_str(m.payload, 0));
      Subst s;
      for (size_t i = 0; i < cl.binders.size() && i < m.payload.size(); ++i) s[cl.binders[i]] = m.payload[i];
      if (!cl.mailbox.empty()) s[cl.mailbox] = vs[0];
      th.term = subst(cl.body, s);
      break;
    }
  }
  th.refs = count_thread(th);
  add_refs(th.refs, +1);
  if (spawned) {
    spawned->refs = count_thread(*spawned);
    add_refs(spawned->refs, +1);
    threads_.push_back(std::move(*spawned));
  }
  ++steps_;
  return result;
}

void Machine::retire_finished() {
  // Finished threads holding no names cannot affect anything again.
  std::erase_if(threads_, [&](const Thread& t) { return done(t) && t.refs.empty(); });
}

std::optional<Outcome> Machine::step() {
  retire_finished();
  auto en = enabled();
  if (en.empty()) return final_outcome();
  const Redex& r = en[rng_() % en.size()];
  return fire(r);
}

Outcome Machine::final_outcome() const {
  size_t blocked = 0;
  for (auto& t : threads_)
    if (!done(t)) ++blocked;
  size_t queued = 0;
  for (auto& [a, q] : queues_) queued += q.size();
  if (blocked == 0 && queued == 0 && refs_.empty()) return {OutcomeKind::kTerminated, -1, {}, ""};
  Outcome o{OutcomeKind::kDeadlock, -1, {}, ""};
  o.detail = std::to_string(blocked) + " blocked thread(s), " + std::to_string(queued) + " undelivered message(s), " +
             std::to_string(refs_.size()) + " live name(s)";
  return o;
}

bool Machine::refcounts_consistent() const {
  std::map<int64_t, int> all;
  for (auto& t : threads_) {
    auto m = count_thread(t);
    if (m != t.refs) return false;
    for (auto& [n, c] : m) all[n] += c;
  }
  for (auto& [a, q] : queues_)
    for (auto& m : q)
      for (auto& v : m.payload) count_names(*v, all);
  std::erase_if(all, [](const auto& kv) { return kv.second == 0; });
  return all == refs_;
}

bool Machine::blocked_on_receives_only() const {
  for (auto& th : threads_) {
    if (done(th)) continue;
    const ir::Term& t = *th.term;
    if (t.k != ir::TK::kGuard || t.vals[0]->k != VK::kName) return false;
    auto q = queues_.find(t.vals[0]->i);
    for (auto& cl : t.clauses) {
      if (cl.k != ast::ClauseKind::kReceive || q == queues_.end()) continue;
      for (auto& m : q->second)
        if (m.tag == cl.tag) return false;
    }
  }
  return true;
}

RunResult run(const ir::Program& p, const Options& opt) {
  Machine m(p, opt.seed);
  m.set_trace(opt.trace);
  if (opt.on_output) m.set_output_sink(opt.on_output);
  if (opt.on_trace) m.set_trace_sink(opt.on_trace);
  RunResult r;
  std::optional<Outcome> out;
  while (!out && m.steps() < opt.max_steps) out = m.step();
  r.outcome = out ? *out : Outcome{OutcomeKind::kStepLimit, -1, {}, "step limit " + std::to_string(opt.max_steps)};
  r.output = m.output();
  r.trace = m.trace();
  r.notes = m.notes();
  r.steps = m.steps();
  return r;
}

}  // namespace patc::runtime
