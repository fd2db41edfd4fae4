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

#ifndef PATC_TYPECHECK_HPP_
#define PATC_TYPECHECK_HPP_

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "patc/ir.hpp"
#include "patc/types.hpp"

namespace patc {

// Aliasing premise of the receive-clause rule: strict asks for base-typed
// payloads or a base-typed residual environment, interface asks for
// disjoint interfaces.
enum class Mode { kStrict, kInterface };

const char* mode_name(Mode m);
std::optional<Mode> mode_from_name(const std::string& s);

struct Typing {
  types::Constraints constraints;
  int num_vars = 0;
  std::map<std::string, types::Env> def_envs;  // inferred, before removing parameters
};

// Contextual pre-typing followed by co-contextual constraint generation.
// The checker keeps a copy of the program; results of pre-typing are keyed
// by node address.
class Checker {
 public:
  Checker(ir::Program p, Mode mode);

  Typing check_program();

  types::Env check(const ir::Term& t, const types::UTypeP& ty);
  std::pair<types::UTypeP, types::Env> synth(const ir::Term& t);
  types::Env check_value(const ir::Value& v, const types::UTypeP& ty);
  std::pair<types::UTypeP, types::Env> synth_value(const ir::Value& v);

  struct Guards {
    types::NEnv env;
    Pattern lit;  // F
  };
  Guards check_guards(const ir::Term& guard, const types::UTypeP& ty);

  const ir::Program& program() const { return prog_; }
  const types::Constraints& constraints() const { return cs_; }
  types::Ops& ops() { return ops_; }

  // Signature of a definition after annotation instantiation.
  const types::UTypeP& def_type(const std::string& name) const;

 private:
  friend class PreTyper;

  types::Ops& at(Span s, const char* rule);
  types::UTypeP inst(const ast::TypeP& t, bool param_pos);
  types::UTypeP payload(const std::string& iface, const std::string& tag, size_t i);
  types::UTypeP lambda_type(const ir::Value& v);
  types::UTypeP from_pretype(const types::UTypeP& pre, Span s, const std::string& what);
  types::UTypeP binder_type(const types::Env& env, const void* site, int idx, const std::string& x, Span s);
  types::Env check_let(const ir::Term& t, const types::UTypeP& ty);
  void alias_check(const ir::Clause& c, const std::string& iface, const types::Env& rest);

  ir::Program prog_;
  Mode mode_;
  types::Constraints cs_;
  types::Ops ops_;

  std::map<std::string, const ast::InterfaceDecl*> ifaces_;
  std::map<std::string, types::UTypeP> defs_;
  std::map<const ast::Type*, Pattern> ann_vars_;
  std::map<const ir::Value*, types::UTypeP> lambdas_;

  // pre-typing results
  std::map<const ir::Term*, std::string> iface_of_;  // send target / guard subject
  std::map<const ir::Term*, types::UTypeP> apply_type_;
  std::map<const ir::Term*, types::UTypeP> term_pre_;  // let subjects
  std::map<const ir::Term*, types::UTypeP> operand_;   // == and != operands
  std::map<std::pair<const void*, int>, types::UTypeP> binder_pre_;
};

// Convenience: pre-type and generate constraints for a whole program.
Typing typecheck(const ir::Program& p, Mode mode);

}  // namespace patc

#endif  // PATC_TYPECHECK_HPP_
