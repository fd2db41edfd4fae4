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

#ifndef PATC_AST_HPP_
#define PATC_AST_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "patc/diagnostic.hpp"
#include "patc/pattern.hpp"

namespace patc::ast {

struct Type;
using TypeP = std::shared_ptr<const Type>;

enum class TK { kUnit, kInt, kString, kBool, kSend, kRecv, kPair, kSum, kFun };

// Surface type. Mailbox types name an interface and may carry a pattern;
// when the pattern is absent the typechecker invents a variable.
struct Type {
  TK k = TK::kUnit;
  Span span;
  std::string iface;
  std::optional<Pattern> pat;
  std::vector<TypeP> args;  // pair/sum components, function parameters
  TypeP ret;                // function result
  bool linear = false;      // linfun
};

struct Expr;
using ExprP = std::shared_ptr<const Expr>;

enum class EK {
  kVar,
  kUnit,
  kInt,
  kString,
  kBool,
  kLet,      // let name [: ann] = kids[0] in kids[1]
  kLetPair,  // let (names[0], names[1]) = kids[0] in kids[1]
  kCase,     // case kids[0] { inl names[0] -> kids[1]  inr names[1] -> kids[2] }
  kIf,       // if kids[0] { kids[1] } else { kids[2] }
  kPair,
  kInl,
  kInr,
  kLambda,   // fun/linfun (params): ret { kids[0] }
  kCall,     // name(kids...) : definition, builtin, or variable
  kApply,    // kids[0](kids[1..])
  kSpawn,
  kNew,      // new[name]
  kSend,     // kids[0] ! tag(kids[1..])
  kGuard,    // guard kids[0] : pat { clauses }
  kSeq,      // kids[0]; kids[1]
  kFree,     // free(kids[0])
  kFail,     // fail(kids[0])
  kBinop,    // kids[0] op kids[1]
};

struct Param {
  std::string name;
  TypeP type;
  Span span;
};

enum class ClauseKind { kReceive, kFree, kFail };

struct Clause {
  ClauseKind k = ClauseKind::kFail;
  Span span;
  std::string tag;
  std::vector<std::string> binders;
  std::string mailbox;  // rebinding of the guarded mailbox
  ExprP body;
};

struct Expr {
  EK k = EK::kUnit;
  Span span;
  std::string name;  // variable, call target, interface for new, operator
  int64_t ival = 0;
  std::string sval;
  bool bval = false;
  TypeP ann;
  std::vector<std::string> names;
  std::vector<ExprP> kids;
  std::vector<Param> params;
  TypeP ret;
  bool linear = false;
  std::string tag;
  Pattern pat;
  std::vector<Clause> clauses;
};

struct MessageSig {
  std::string tag;
  std::vector<TypeP> payload;
  Span span;
};

struct InterfaceDecl {
  std::string name;
  std::vector<MessageSig> messages;
  Span span;
};

struct DefDecl {
  std::string name;
  std::vector<Param> params;
  TypeP ret;
  ExprP body;
  Span span;
};

struct Program {
  std::string file;
  std::vector<InterfaceDecl> interfaces;
  std::vector<DefDecl> defs;
  ExprP body;  // may be null
};

// helpers for building nodes
ExprP mk(EK k, Span s, std::vector<ExprP> kids = {});
TypeP mk_type(TK k, Span s = {});

}  // namespace patc::ast

#endif  // PATC_AST_HPP_
