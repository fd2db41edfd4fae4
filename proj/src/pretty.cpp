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

#include "patc/pretty.hpp"

namespace patc {

using namespace ast;

std::string print_type(const Type& t) {
  switch (t.k) {
    case TK::kUnit: return "Unit";
    case TK::kInt: return "Int";
    case TK::kString: return "String";
    case TK::kBool: return "Bool";
    case TK::kSend:
    case TK::kRecv: {
      std::string s = t.iface + (t.k == TK::kSend ? "!" : "?");
      if (t.pat) s += "(" + to_string(*t.pat) + ")";
      return s;
    }
    case TK::kPair: return "(" + print_type(*t.args[0]) + ", " + print_type(*t.args[1]) + ")";
    case TK::kSum: {
      // sums are right-nested; parenthesise a left operand that is a sum
      std::string l = print_type(*t.args[0]);
      if (t.args[0]->k == TK::kSum) l = "(" + l + ")";
      return l + " + " + print_type(*t.args[1]);
    }
    case TK::kFun: {
      std::string s = t.linear ? "linfun(" : "fun(";
      for (size_t i = 0; i < t.args.size(); ++i) s += (i ? ", " : "") + print_type(*t.args[i]);
      std::string r = print_type(*t.ret);
      return s + ") -> " + r;
    }
  }
  return "?";
}

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

std::string indent(int n) { return std::string(static_cast<size_t>(n) * 2, ' '); }

std::string params_str(const std::vector<Param>& ps) {
  std::string s = "(";
  for (size_t i = 0; i < ps.size(); ++i) s += (i ? ", " : "") + ps[i].name + ": " + print_type(*ps[i].type);
  return s + ")";
}

// Every compound expression is printed fully parenthesised so that the
// output reparses to the same tree regardless of precedence.
std::string pr(const Expr& e, int d);

std::string atom(const Expr& e, int d) {
  switch (e.k) {
    case EK::kVar:
    case EK::kUnit:
    case EK::kInt:
    case EK::kString:
    case EK::kBool:
    case EK::kCall:
    case EK::kPair:
    case EK::kInl:
    case EK::kInr:
    case EK::kNew:
    case EK::kFree:
    case EK::kFail:
      return pr(e, d);
    default:
      return "(" + pr(e, d) + ")";
  }
}

std::string pr(const Expr& e, int d) {
  auto args = [&](size_t from) {
    std::string s = "(";
    for (size_t i = from; i < e.kids.size(); ++i) s += (i > from ? ", " : "") + pr(*e.kids[i], d);
    return s + ")";
  };
  switch (e.k) {
    case EK::kVar: return e.name;
    case EK::kUnit: return "()";
    case EK::kInt: return std::to_string(e.ival);
    case EK::kString: return quote(e.sval);
    case EK::kBool: return e.bval ? "true" : "false";
    case EK::kLet: {
      std::string s = "let " + e.name;
      if (e.ann) s += " : " + print_type(*e.ann);
      return s + " = " + pr(*e.kids[0], d + 1) + " in\n" + indent(d) + pr(*e.kids[1], d);
    }
    case EK::kLetPair:
      return "let (" + e.names[0] + ", " + e.names[1] + ") = " + pr(*e.kids[0], d + 1) + " in\n" + indent(d) +
             pr(*e.kids[1], d);
    case EK::kCase:
      return "case " + pr(*e.kids[0], d) + " {\n" + indent(d + 1) + "inl " + e.names[0] + " -> " +
             pr(*e.kids[1], d + 2) + "\n" + indent(d + 1) + "inr " + e.names[1] + " -> " + pr(*e.kids[2], d + 2) +
             "\n" + indent(d) + "}";
    case EK::kIf:
      return "if " + pr(*e.kids[0], d) + " {\n" + indent(d + 1) + pr(*e.kids[1], d + 1) + "\n" + indent(d) +
             "} else {\n" + indent(d + 1) + pr(*e.kids[2], d + 1) + "\n" + indent(d) + "}";
    case EK::kPair: return "(" + pr(*e.kids[0], d) + ", " + pr(*e.kids[1], d) + ")";
    case EK::kInl: return "inl(" + pr(*e.kids[0], d) + ")";
    case EK::kInr: return "inr(" + pr(*e.kids[0], d) + ")";
    case EK::kLambda:
      return std::string(e.linear ? "linfun" : "fun") + params_str(e.params) + ": " + print_type(*e.ret) + " {\n" +
             indent(d + 1) + pr(*e.kids[0], d + 1) + "\n" + indent(d) + "}";
    case EK::kCall: return e.name + args(0);
    case EK::kApply: return atom(*e.kids[0], d) + args(1);
    case EK::kSpawn: return "spawn {\n" + indent(d + 1) + pr(*e.kids[0], d + 1) + "\n" + indent(d) + "}";
    case EK::kNew: return "new[" + e.name + "]";
    case EK::kSend: return atom(*e.kids[0], d) + " ! " + e.tag + args(1);
    case EK::kGuard: {
      std::string s = "guard " + atom(*e.kids[0], d) + " : " + to_string(e.pat) + " {\n";
      for (auto& c : e.clauses) {
        s += indent(d + 1);
        switch (c.k) {
          case ClauseKind::kFail: s += "fail"; break;
          case ClauseKind::kFree: s += "free -> " + pr(*c.body, d + 2); break;
          case ClauseKind::kReceive: {
            s += "receive " + c.tag + "(";
            for (size_t i = 0; i < c.binders.size(); ++i) s += (i ? ", " : "") + c.binders[i];
            s += ") from " + c.mailbox + " -> " + pr(*c.body, d + 2);
            break;
          }
        }
        s += "\n";
      }
      return s + indent(d) + "}";
    }
    case EK::kSeq: return atom(*e.kids[0], d) + ";\n" + indent(d) + pr(*e.kids[1], d);
    case EK::kFree: return "free(" + pr(*e.kids[0], d) + ")";
    case EK::kFail: return "fail(" + pr(*e.kids[0], d) + ")";
    case EK::kBinop: return atom(*e.kids[0], d) + " " + e.name + " " + atom(*e.kids[1], d);
  }
  return "?";
}

// ---- s-expressions (no spans) ----

std::string sx_type(const Type& t) { return print_type(t); }

std::string sx(const Expr& e) {
  auto kids = [&](size_t from = 0) {
    std::string s;
    for (size_t i = from; i < e.kids.size(); ++i) s += " " + sx(*e.kids[i]);
    return s;
  };
  switch (e.k) {
    case EK::kVar: return e.name;
    case EK::kUnit: return "()";
    case EK::kInt: return std::to_string(e.ival);
    case EK::kString: return quote(e.sval);
    case EK::kBool: return e.bval ? "#t" : "#f";
    case EK::kLet:
      return "(let " + e.name + (e.ann ? " : " + sx_type(*e.ann) : std::string()) + kids() + ")";
    case EK::kLetPair: return "(let-pair (" + e.names[0] + " " + e.names[1] + ")" + kids() + ")";
    case EK::kCase: return "(case" + kids(0) + " inl:" + e.names[0] + " inr:" + e.names[1] + ")";
    case EK::kIf: return "(if" + kids() + ")";
    case EK::kPair: return "(pair" + kids() + ")";
    case EK::kInl: return "(inl" + kids() + ")";
    case EK::kInr: return "(inr" + kids() + ")";
    case EK::kLambda: {
      std::string s = e.linear ? "(linfun (" : "(fun (";
      for (size_t i = 0; i < e.params.size(); ++i)
        s += (i ? " " : "") + e.params[i].name + ":" + sx_type(*e.params[i].type);
      return s + ") " + sx_type(*e.ret) + kids() + ")";
    }
    case EK::kCall: return "(call " + e.name + kids() + ")";
    case EK::kApply: return "(apply" + kids() + ")";
    case EK::kSpawn: return "(spawn" + kids() + ")";
    case EK::kNew: return "(new " + e.name + ")";
    case EK::kSend: return "(send " + e.tag + kids() + ")";
    case EK::kGuard: {
      std::string s = "(guard" + kids() + " [" + to_string(e.pat) + "]";
      for (auto& c : e.clauses) {
        switch (c.k) {
          case ClauseKind::kFail: s += " (fail)"; break;
          case ClauseKind::kFree: s += " (free " + sx(*c.body) + ")"; break;
          case ClauseKind::kReceive: {
            s += " (receive " + c.tag + " (";
            for (size_t i = 0; i < c.binders.size(); ++i) s += (i ? " " : "") + c.binders[i];
            s += ") " + c.mailbox + " " + sx(*c.body) + ")";
            break;
          }
        }
      }
      return s + ")";
    }
    case EK::kSeq: return "(seq" + kids() + ")";
    case EK::kFree: return "(free" + kids() + ")";
    case EK::kFail: return "(fail" + kids() + ")";
    case EK::kBinop: return "(" + e.name + kids() + ")";
  }
  return "?";
}

}  // namespace

std::string print_expr(const Expr& e) { return pr(e, 0); }

std::string print_program(const Program& p) {
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
  for (auto& d : p.defs) {
    out += "def " + d.name + params_str(d.params) + ": " + print_type(*d.ret) + " {\n  " + pr(*d.body, 1) +
           "\n}\n\n";
  }
  if (p.body) out += pr(*p.body, 0) + "\n";
  return out;
}

std::string dump_program(const Program& p) {
  std::string out;
  for (auto& i : p.interfaces) {
    out += "(interface " + i.name;
    for (auto& sig : i.messages) {
      out += " (" + sig.tag;
      for (auto& t : sig.payload) out += " " + sx_type(*t);
      out += ")";
    }
    out += ")\n";
  }
  for (auto& d : p.defs) {
    out += "(def " + d.name + " (";
    for (size_t i = 0; i < d.params.size(); ++i)
      out += (i ? " " : "") + d.params[i].name + ":" + sx_type(*d.params[i].type);
    out += ") " + sx_type(*d.ret) + " " + sx(*d.body) + ")\n";
  }
  if (p.body) out += "(main " + sx(*p.body) + ")\n";
  return out;
}

}  // namespace patc
