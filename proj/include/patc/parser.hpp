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
#ifndef PATC_PARSER_HPP_
#define PATC_PARSER_HPP_

#include <string>

#include "patc/ast.hpp"

namespace patc {

// Throws PatError (phase parse) on lexical/syntax errors and duplicate
// declarations.
ast::Program parse_program(const std::string& source, const std::string& file = "");

// Concrete pattern syntax: 0, 1, Tag, +, ., *, parentheses.
Pattern parse_pattern(const std::string& source);

}  // namespace patc

#endif  // PATC_PARSER_HPP_
