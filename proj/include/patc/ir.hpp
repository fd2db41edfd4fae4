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
#ifndef PATC_IR_HPP_
#define PATC_IR_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "patc/ast.hpp"

// Fine-grain IR: every operator argument is a value; compound
// subexpressions are let-bound.
namespace patc::ir {

struct Value;
struct Term;
using ValueP = std::shared_ptr<const Value>;
using TermP = std::shared_ptr<const Term>;

enum class VK { kVar, kUnit, kInt, kString, kBool, kPair, kInl, kInr, kLambda, kName };

struct Value {
  VK k = VK::kUnit;
  Span span;
  std::string name;  // variable
  int64_t i = 0;     // int literal, runtime mailbox id
  std::string s;
  bool b = false;
  std::vector<ValueP> kids;  // pair components, inl/inr payload
  // lambdas
  std::vector<ast::Param> params;
  ast::TypeP ret;
  bool linear = false;
  TermP body;
};

enum class TK {
  kVal,      // vals[0]
  kLet,      // let name [: ann] = kids[0] in kids[1]
  kLetPair,  // let (names[0], names[1]) = vals[0] in kids[0]
  kCase,     // case vals[0] { inl names[0] -> kids[0]  inr names[1] -> kids[1] }
  kIf,       // if vals[0] then kids[0] else kids[1]
  kCall,     // definition name(vals)
  kApply,    // vals[0](vals[1..])
  kBuiltin,  // operator or builtin function name(vals)
  kSpawn,    // spawn kids[0]
  kNew,      // new[name]
  kSend,     // vals[0] ! name(vals[1..])
  kGuard,    // guard vals[0] : pat { clauses }
};

struct Clause {
  ast::ClauseKind k = ast::ClauseKind::kFail;
  Span span;
  std::string tag;
  std::vector<std::string> binders;
  std::string mailbox;
  TermP body;
};

struct Term {
  TK k = TK::kVal;
  Span span;
  std::string name;
  std::vector<std::string> names;
  ast::TypeP ann;
  std::vector<ValueP> vals;
  std::vector<TermP> kids;
  Pattern pat;
  std::vector<Clause> clauses;
};

struct Def {
  std::string name;
  std::vector<ast::Param> params;
  ast::TypeP ret;
  TermP body;
  Span span;
};

struct Program {
  std::string file;
  std::vector<ast::InterfaceDecl> interfaces;
  std::vector<Def> defs;
  TermP body;  // may be null
};

// Builtin functions callable by name.
bool is_builtin_function(const std::string& name);

// free(V), fail(V) and M; N expanded.
ast::Program desugar(const ast::Program& p);

// Expects a desugared program.
Program to_ir(const ast::Program& p);

// Every operator argument is a value, binders are non-empty, lambda bodies
// and clause bodies are themselves well formed.
bool well_formed(const Program& p);

// Surface syntax for the IR; parse + desugar + to_ir maps it back to an
// identical IR.
std::string print_ir(const Program& p);
std::string dump_ir(const Program& p);
std::string dump_term(const Term& t);
std::string dump_value(const Value& v);

ValueP mk_var(const std::string& name, Span s = {});
ValueP mk_unit();
ValueP mk_name(int64_t id);

}  // namespace patc::ir

#endif  // PATC_IR_HPP_
