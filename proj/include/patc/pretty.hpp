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
#ifndef PATC_PRETTY_HPP_
#define PATC_PRETTY_HPP_

#include <string>

#include "patc/ast.hpp"

namespace patc {

// Source form; reparses to a structurally equal program.
std::string print_program(const ast::Program& p);
std::string print_expr(const ast::Expr& e);
std::string print_type(const ast::Type& t);

// Span-free s-expression dump, used for structural comparison and by
// `patc parse`.
std::string dump_program(const ast::Program& p);

}  // namespace patc

#endif  // PATC_PRETTY_HPP_
