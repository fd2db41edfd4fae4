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

#include "patc/ir.hpp"

#include <set>

#include "patc/pretty.hpp"

namespace patc::ir {

using ast::EK;
using ast::Expr;
using ast::ExprP;

bool is_builtin_function(const std::string& name) {
  return name == "print" || name == "intToString" || name == "not";
}

ValueP mk_var(const std::string& name, Span s) {
  auto v = std::make_shared<Value>();
  v->k = VK::kVar;
  v->name = name;
  v->span = s;
  return v;
}

ValueP mk_unit() {
  static const ValueP u = std::make_shared<Value>();
  return u;
}

ValueP mk_name(int64_t id) {
  auto v = std::make_shared<Value>();
  v->k = VK::kName;
  v->i = id;
  return v;
}

// ---- desugaring ----

namespace {

ExprP desugar_expr(const ExprP& e) {
  if (!e) return e;
  auto copy = std::make_shared<Expr>(*e);
  for (auto& k : copy->kids) k = desugar_expr(k);
  for (auto& c : copy->clauses) c.body = desugar_expr(c.body);
  switch (copy->k) {
    case EK::kFree: {
      // free(V)  =>  guard V : 1 { free -> () }
      auto g = std::make_shared<Expr>();
      g->k = EK::kGuard;
      g->span = copy->span;
      g->kids = {copy->kids[0]};
      g->pat = Pattern::one();
      ast::Clause c;
      c.k = ast::ClauseKind::kFree;
      c.span = copy->span;
      c.body = ast::mk(EK::kUnit, copy->span);
      g->clauses.push_back(c);
      return g;
    }
    case EK::kFail: {
      // fail(V)  =>  guard V : 0 { fail }
      auto g = std::make_shared<Expr>();
      g->k = EK::kGuard;
      g->span = copy->span;
      g->kids = {copy->kids[0]};
      g->pat = Pattern::zero();
      ast::Clause c;
      c.k = ast::ClauseKind::kFail;
      c.span = copy->span;
      g->clauses.push_back(c);
      return g;
    }
    case EK::kSeq: {
      // M; N  =>  let _ : Unit = M in N
      auto l = std::make_shared<Expr>();
      l->k = EK::kLet;
      l->span = copy->span;
      l->name = "_";
      l->ann = ast::mk_type(ast::TK::kUnit, copy->span);
      l->kids = copy->kids;
      return l;
    }
    default:
      return copy;
  }
}

}  // namespace

ast::Program desugar(const ast::Program& p) {
  ast::Program out = p;
  for (auto& d : out.defs) d.body = desugar_expr(d.body);
  out.body = desugar_expr(out.body);
  return out;
}

// ---- IR conversion ----

namespace {

struct Binding {
  std::string name;
  TermP term;
};

class Lowering {
 public:
  explicit Lowering(const ast::Program& p) {
    for (auto& d : p.defs) defs_.insert(d.name);
  }

  TermP term(const ExprP& e) {
    std::vector<Binding> binds;
    TermP core = term_core(*e, binds);
    return wrap(std::move(binds), core);
  }

 private:
  std::set<std::string> defs_;
  std::vector<std::string> scope_;
  int fresh_ = 0;

  bool in_scope(const std::string& x) const {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
      if (*it == x) return true;
    return false;
  }

  struct Scoped {
    Lowering& l;
    size_t n;
    Scoped(Lowering& l, const std::vector<std::string>& names) : l(l), n(names.size()) {
      l.scope_.insert(l.scope_.end(), names.begin(), names.end());
    }
    ~Scoped() { l.scope_.resize(l.scope_.size() - n); }
  };

  static TermP wrap(std::vector<Binding> binds, TermP core) {
    for (auto it = binds.rbegin(); it != binds.rend(); ++it) {
      auto t = std::make_shared<Term>();
      t->k = TK::kLet;
      t->span = it->term->span;
      t->name = it->name;
      t->kids = {it->term, core};
      core = t;
    }
    return core;
  }

  static std::shared_ptr<Term> mk_term(TK k, Span s) {
    auto t = std::make_shared<Term>();
    t->k = k;
    t->span = s;
    return t;
  }

  ValueP value(const Expr& e, std::vector<Binding>& binds) {
    auto v = std::make_shared<Value>();
    v->span = e.span;
    switch (e.k) {
      case EK::kVar:
        v->k = VK::kVar;
        v->name = e.name;
        return v;
      case EK::kUnit:
        v->k = VK::kUnit;
        return v;
      case EK::kInt:
        v->k = VK::kInt;
        v->i = e.ival;
        return v;
      case EK::kString:
        v->k = VK::kString;
        v->s = e.sval;
        return v;
      case EK::kBool:
        v->k = VK::kBool;
        v->b = e.bval;
        return v;
      case EK::kPair:
        v->k = VK::kPair;
        v->kids = {value(*e.kids[0], binds), value(*e.kids[1], binds)};
        return v;
      case EK::kInl:
      case EK::kInr:
        v->k = e.k == EK::kInl ? VK::kInl : VK::kInr;
        v->kids = {value(*e.kids[0], binds)};
        return v;
      case EK::kLambda: {
        v->k = VK::kLambda;
        v->params = e.params;
        v->ret = e.ret;
        v->linear = e.linear;
        std::vector<std::string> ps;
        for (auto& p : e.params) ps.push_back(p.name);
        Scoped sc(*this, ps);
        v->body = term(e.kids[0]);
        return v;
      }
      default: {
        std::string t = "_t" + std::to_string(++fresh_);
        binds.push_back({t, term(std::make_shared<Expr>(e))});
        return mk_var(t, e.span);
      }
    }
  }

  TermP term_core(const Expr& e, std::vector<Binding>& binds) {
    switch (e.k) {
      case EK::kVar:
      case EK::kUnit:
      case EK::kInt:
      case EK::kString:
      case EK::kBool:
      case EK::kPair:
      case EK::kInl:
      case EK::kInr:
      case EK::kLambda: {
        auto t = mk_term(TK::kVal, e.span);
        t->vals = {value(e, binds)};
        return t;
      }
      case EK::kLet: {
        auto t = mk_term(TK::kLet, e.span);
        t->name = e.name;
        t->ann = e.ann;
        t->kids.push_back(term(e.kids[0]));
        Scoped sc(*this, {e.name});
        t->kids.push_back(term(e.kids[1]));
        return t;
      }
      case EK::kLetPair: {
        auto t = mk_term(TK::kLetPair, e.span);
        t->names = e.names;
        t->vals = {value(*e.kids[0], binds)};
        Scoped sc(*this, e.names);
        t->kids = {term(e.kids[1])};
        return t;
      }
      case EK::kCase: {
        auto t = mk_term(TK::kCase, e.span);
        t->names = e.names;
        t->vals = {value(*e.kids[0], binds)};
        {
          Scoped sc(*this, {e.names[0]});
          t->kids.push_back(term(e.kids[1]));
        }
        Scoped sc(*this, {e.names[1]});
        t->kids.push_back(term(e.kids[2]));
        return t;
      }
      case EK::kIf: {
        auto t = mk_term(TK::kIf, e.span);
        t->vals = {value(*e.kids[0], binds)};
        t->kids = {term(e.kids[1]), term(e.kids[2])};
        return t;
      }
      case EK::kCall: {
        TK k = in_scope(e.name) ? TK::kApply
               : defs_.count(e.name) ? TK::kCall
               : is_builtin_function(e.name) ? TK::kBuiltin
                                               : TK::kCall;  // unknown: reported by the pre-typer
        auto t = mk_term(k, e.span);
        if (k == TK::kApply) {
          t->vals.push_back(mk_var(e.name, e.span));
        } else {
          t->name = e.name;
        }
        for (auto& a : e.kids) t->vals.push_back(value(*a, binds));
        return t;
      }
      case EK::kApply: {
        auto t = mk_term(TK::kApply, e.span);
        for (auto& a : e.kids) t->vals.push_back(value(*a, binds));
        return t;
      }
      case EK::kBinop: {
        auto t = mk_term(TK::kBuiltin, e.span);
        t->name = e.name;
        for (auto& a : e.kids) t->vals.push_back(value(*a, binds));
        return t;
      }
      case EK::kSpawn: {
        auto t = mk_term(TK::kSpawn, e.span);
        t->kids = {term(e.kids[0])};
        return t;
      }
      case EK::kNew: {
        auto t = mk_term(TK::kNew, e.span);
        t->name = e.name;
        return t;
      }
      case EK::kSend: {
        auto t = mk_term(TK::kSend, e.span);
        t->name = e.tag;
        for (auto& a : e.kids) t->vals.push_back(value(*a, binds));
        return t;
      }
      case EK::kGuard: {
        auto t = mk_term(TK::kGuard, e.span);
        t->pat = e.pat;
        t->vals = {value(*e.kids[0], binds)};
        for (auto& c : e.clauses) {
          Clause ic;
          ic.k = c.k;
          ic.span = c.span;
          ic.tag = c.tag;
          ic.binders = c.binders;
          ic.mailbox = c.mailbox;
          if (c.body) {
            std::vector<std::string> bound = c.binders;
            if (!c.mailbox.empty()) bound.push_back(c.mailbox);
            Scoped sc(*this, bound);
            ic.body = term(c.body);
          }
          t->clauses.push_back(std::move(ic));
        }
        return t;
      }
      case EK::kSeq:
      case EK::kFree:
      case EK::kFail:
        fail_at(Phase::kParse, e.span, "ir", "internal: sugar reached IR conversion");
    }
    return nullptr;
  }

 public:
  void enter(const std::vector<std::string>& names) { scope_ = names; }
};

}  // namespace

Program to_ir(const ast::Program& p) {
  Program out;
  out.file = p.file;
  out.interfaces = p.interfaces;
  Lowering low(p);
  for (auto& d : p.defs) {
    Def id;
    id.name = d.name;
    id.params = d.params;
    id.ret = d.ret;
    id.span = d.span;
    std::vector<std::string> ps;
    for (auto& prm : d.params) ps.push_back(prm.name);
    low.enter(ps);
    id.body = low.term(d.body);
    out.defs.push_back(std::move(id));
  }
  if (p.body) {
    low.enter({});
    out.body = low.term(p.body);
  }
  return out;
}

// ---- well-formedness ----

namespace {

bool wf_term(const TermP& t);

bool wf_value(const ValueP& v) {
  if (!v) return false;
  switch (v->k) {
    case VK::kVar: return !v->name.empty();
    case VK::kPair: return v->kids.size() == 2 && wf_value(v->kids[0]) && wf_value(v->kids[1]);
    case VK::kInl:
    case VK::kInr: return v->kids.size() == 1 && wf_value(v->kids[0]);
    case VK::kLambda: return v->ret && wf_term(v->body);
    default: return true;
  }
}

bool wf_term(const TermP& t) {
  if (!t) return false;
  for (auto& v : t->vals)
    if (!wf_value(v)) return false;
  for (auto& k : t->kids)
    if (!wf_term(k)) return false;
  auto counts = [&](size_t nv, size_t nk) { return t->vals.size() == nv && t->kids.size() == nk; };
  switch (t->k) {
    case TK::kVal: return counts(1, 0);
    case TK::kLet: return counts(0, 2) && !t->name.empty();
    case TK::kLetPair: return counts(1, 1) && t->names.size() == 2;
    case TK::kCase: return counts(1, 2) && t->names.size() == 2;
    case TK::kIf: return counts(1, 2);
    case TK::kCall:
    case TK::kBuiltin: return t->kids.empty() && !t->name.empty();
    case TK::kApply: return t->kids.empty() && !t->vals.empty();
    case TK::kSpawn: return counts(0, 1);
    case TK::kNew: return counts(0, 0) && !t->name.empty();
    case TK::kSend: return t->kids.empty() && !t->vals.empty() && !t->name.empty();
    case TK::kGuard: {
      if (!counts(1, 0)) return false;
      for (auto& c : t->clauses) {
        if (c.k == ast::ClauseKind::kFail) {
          if (c.body) return false;
        } else if (!wf_term(c.body)) {
          return false;
        }
      }
      return true;
    }
  }
  return false;
}

}  // namespace

bool well_formed(const Program& p) {
  for (auto& d : p.defs)
    if (!wf_term(d.body)) return false;
  return !p.body || wf_term(p.body);
}

// ---- printing ----

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '\n') {
      out += "\\n";
    } else if (c == '"') {
      out += "\\\"";
    } else {
      out += c;
    }
  }
  return out + "\"";
}

std::string ind(int d) { return std::string(static_cast<size_t>(d) * 2, ' '); }

std::string params_str(const std::vector<ast::Param>& ps) {
  std::string s = "(";
  for (size_t i = 0; i < ps.size(); ++i) s += (i ? ", " : "") + ps[i].name + ": " + print_type(*ps[i].type);
  return s + ")";
}

std::string pt(const Term& t, int d);

std::string pv(const Value& v, int d) {
  switch (v.k) {
    case VK::kVar: return v.name;
    case VK::kUnit: return "()";
    case VK::kInt: return std::to_string(v.i);
    case VK::kString: return quote(v.s);
    case VK::kBool: return v.b ? "true" : "false";
    case VK::kPair: return "(" + pv(*v.kids[0], d) + ", " + pv(*v.kids[1], d) + ")";
    case VK::kInl: return "inl(" + pv(*v.kids[0], d) + ")";
    case VK::kInr: return "inr(" + pv(*v.kids[0], d) + ")";
    case VK::kLambda:
      return std::string(v.linear ? "linfun" : "fun") + params_str(v.params) + ": " + print_type(*v.ret) + " {\n" +
             ind(d + 1) + pt(*v.body, d + 1) + "\n" + ind(d) + "}";
    case VK::kName: return "<mailbox#" + std::to_string(v.i) + ">";
  }
  return "?";
}

bool is_infix(const std::string& op) {
  return !op.empty() && !std::isalpha(static_cast<unsigned char>(op[0]));
}

std::string pt(const Term& t, int d) {
  auto list = [&](size_t from) {
    std::string s = "(";
    for (size_t i = from; i < t.vals.size(); ++i) s += (i > from ? ", " : "") + pv(*t.vals[i], d);
    return s + ")";
  };
  auto paren_callee = [&](const Value& v) {
    return v.k == VK::kVar ? pv(v, d) : "(" + pv(v, d) + ")";
  };
  switch (t.k) {
    case TK::kVal: return pv(*t.vals[0], d);
    case TK::kLet: {
      std::string s = "let " + t.name;
      if (t.ann) s += " : " + print_type(*t.ann);
      return s + " = " + pt(*t.kids[0], d + 1) + " in\n" + ind(d) + pt(*t.kids[1], d);
    }
    case TK::kLetPair:
      return "let (" + t.names[0] + ", " + t.names[1] + ") = " + pv(*t.vals[0], d) + " in\n" + ind(d) +
             pt(*t.kids[0], d);
    case TK::kCase:
      return "case " + pv(*t.vals[0], d) + " {\n" + ind(d + 1) + "inl " + t.names[0] + " -> " +
             pt(*t.kids[0], d + 2) + "\n" + ind(d + 1) + "inr " + t.names[1] + " -> " + pt(*t.kids[1], d + 2) +
             "\n" + ind(d) + "}";
    case TK::kIf:
      return "if " + pv(*t.vals[0], d) + " {\n" + ind(d + 1) + pt(*t.kids[0], d + 1) + "\n" + ind(d) +
             "} else {\n" + ind(d + 1) + pt(*t.kids[1], d + 1) + "\n" + ind(d) + "}";
    case TK::kCall: return t.name + list(0);
    case TK::kApply: return paren_callee(*t.vals[0]) + list(1);
    case TK::kBuiltin:
      if (is_infix(t.name)) return pv(*t.vals[0], d) + " " + t.name + " " + pv(*t.vals[1], d);
      return t.name + list(0);
    case TK::kSpawn: return "spawn {\n" + ind(d + 1) + pt(*t.kids[0], d + 1) + "\n" + ind(d) + "}";
    case TK::kNew: return "new[" + t.name + "]";
    case TK::kSend: return paren_callee(*t.vals[0]) + " ! " + t.name + list(1);
    case TK::kGuard: {
      std::string s = "guard " + paren_callee(*t.vals[0]) + " : " + to_string(t.pat) + " {\n";
      for (auto& c : t.clauses) {
        s += ind(d + 1);
        switch (c.k) {
          case ast::ClauseKind::kFail: s += "fail"; break;
          case ast::ClauseKind::kFree: s += "free -> " + pt(*c.body, d + 2); break;
          case ast::ClauseKind::kReceive: {
            s += "receive " + c.tag + "(";
            for (size_t i = 0; i < c.binders.size(); ++i) s += (i ? ", " : "") + c.binders[i];
            s += ") from " + c.mailbox + " -> " + pt(*c.body, d + 2);
            break;
          }
        }
        s += "\n";
      }
      return s + ind(d) + "}";
    }
  }
  return "?";
}

}  // namespace

std::string print_ir(const Program& p) {
  std::string out;
  for (auto& i : p.interfaces) {
    out += "interface " + i.name + " {\n";
    for (size_t m = 0; m < i.messages.size(); ++m) {
      auto& sig = i.messages[m];
      out += "  " + sig.tag + "(";
      for (size_t k = 0; k < sig.payload.size(); ++k) out += (k ? ", " : "") + print_type(*sig.payload[k]);
      out += m + 1 < i.messages.size() ? "),\n" : ")\n";
    }
    out += "}\n\n";
  }
  for (auto& d : p.defs)
    out += "def " + d.name + params_str(d.params) + ": " + print_type(*d.ret) + " {\n  " + pt(*d.body, 1) + "\n}\n\n";
  if (p.body) out += pt(*p.body, 0) + "\n";
  return out;
}

std::string dump_value(const Value& v) {
  switch (v.k) {
    case VK::kVar: return v.name;
    case VK::kUnit: return "()";
    case VK::kInt: return std::to_string(v.i);
    case VK::kString: return quote(v.s);
    case VK::kBool: return v.b ? "#t" : "#f";
    case VK::kPair: return "(pair " + dump_value(*v.kids[0]) + " " + dump_value(*v.kids[1]) + ")";
    case VK::kInl: return "(inl " + dump_value(*v.kids[0]) + ")";
    case VK::kInr: return "(inr " + dump_value(*v.kids[0]) + ")";
    case VK::kLambda: {
      std::string s = v.linear ? "(linfun (" : "(fun (";
      for (size_t i = 0; i < v.params.size(); ++i)
        s += (i ? " " : "") + v.params[i].name + ":" + print_type(*v.params[i].type);
      return s + ") " + print_type(*v.ret) + " " + dump_term(*v.body) + ")";
    }
    case VK::kName: return "#" + std::to_string(v.i);
  }
  return "?";
}

std::string dump_term(const Term& t) {
  std::string vs;
  for (auto& v : t.vals) vs += " " + dump_value(*v);
  std::string ks;
  for (auto& k : t.kids) ks += " " + dump_term(*k);
  switch (t.k) {
    case TK::kVal: return dump_value(*t.vals[0]);
    case TK::kLet: return "(let " + t.name + (t.ann ? ":" + print_type(*t.ann) : std::string()) + ks + ")";
    case TK::kLetPair: return "(let-pair " + t.names[0] + " " + t.names[1] + vs + ks + ")";
    case TK::kCase: return "(case" + vs + " " + t.names[0] + " " + t.names[1] + ks + ")";
    case TK::kIf: return "(if" + vs + ks + ")";
    case TK::kCall: return "(call " + t.name + vs + ")";
    case TK::kApply: return "(apply" + vs + ")";
    case TK::kBuiltin: return "(builtin " + t.name + vs + ")";
    case TK::kSpawn: return "(spawn" + ks + ")";
    case TK::kNew: return "(new " + t.name + ")";
    case TK::kSend: return "(send " + t.name + vs + ")";
    case TK::kGuard: {
      std::string s = "(guard" + vs + " [" + to_string(t.pat) + "]";
      for (auto& c : t.clauses) {
        switch (c.k) {
          case ast::ClauseKind::kFail: s += " (fail)"; break;
          case ast::ClauseKind::kFree: s += " (free " + dump_term(*c.body) + ")"; break;
          case ast::ClauseKind::kReceive: {
            s += " (receive " + c.tag + " (";
            for (size_t i = 0; i < c.binders.size(); ++i) s += (i ? " " : "") + c.binders[i];
            s += ") " + c.mailbox + " " + dump_term(*c.body) + ")";
            break;
          }
        }
      }
      return s + ")";
    }
  }
  return "?";
}

std::string dump_ir(const Program& p) {
  std::string out;
  for (auto& d : p.defs) out += "(def " + d.name + " " + dump_term(*d.body) + ")\n";
  if (p.body) out += "(main " + dump_term(*p.body) + ")\n";
  return out;
}

}  // namespace patc::ir
