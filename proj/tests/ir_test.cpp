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

#include <gtest/gtest.h>

#include "corpus_util.hpp"
#include "patc/driver.hpp"
#include "patc/parser.hpp"
#include "patc/runtime.hpp"

using namespace patc;

namespace {

ir::Program lower(const std::string& src) { return ir::to_ir(ir::desugar(parse_program(src, "t.pat"))); }

}  // namespace

TEST(Ir, CorpusWellFormedAndRoundTrips) {
  for (auto sub : {"positive", "negative"}) {
    for (auto& f : corpus::files(sub)) {
      SCOPED_TRACE(f);
      auto p = lower(*read_file(f));
      EXPECT_TRUE(ir::well_formed(p));
      auto q = lower(ir::print_ir(p));
      EXPECT_EQ(ir::dump_ir(p), ir::dump_ir(q));
    }
  }
}

TEST(Ir, OperandsBecomeValues) {
  auto p = lower("print(intToString(1 + 2))");
  ASSERT_TRUE(ir::well_formed(p));
  EXPECT_EQ(ir::dump_ir(p),
            "(main (let _t1 (let _t2 (builtin + 1 2) (builtin intToString _t2)) (builtin print _t1)))\n");
}

TEST(Ir, SequencingDesugarsToLet) {
  auto p = lower("print(\"a\"); print(\"b\")");
  ASSERT_EQ(p.body->k, ir::TK::kLet);
  EXPECT_EQ(p.body->kids[1]->k, ir::TK::kBuiltin);
}

TEST(Ir, FreeIsAGuard) {
  auto p = lower("interface I { A() } guard (new[I]) : 1 { free -> () }");
  ASSERT_TRUE(ir::well_formed(p));
  auto d = ir::dump_ir(p);
  EXPECT_NE(d.find("(guard"), std::string::npos);
  EXPECT_NE(d.find("(new I)"), std::string::npos);
}

TEST(Ir, SubstitutionRespectsShadowing) {
  auto p = lower("let x = 1 in let x = 2 in x");
  auto t = runtime::subst(p.body, {{"x", ir::mk_name(7)}});
  // the outer let binds x, so nothing below changes
  EXPECT_EQ(ir::dump_term(*t), ir::dump_term(*p.body));
  auto q = lower("def f(y: Int): Int { y } f(3)");
  auto body = runtime::subst(q.defs[0].body, {{"y", ir::mk_name(2)}});
  EXPECT_EQ(ir::dump_term(*body), "#2");
}

TEST(Ir, SurfaceAndIrRunAlike) {
  // The interpreter runs the IR; evaluating a value-only surface program
  // directly gives the same output.
  auto p = lower("print(intToString((2 + 3) * 4))");
  runtime::Options o;
  auto r = runtime::run(p, o);
  EXPECT_EQ(r.output, "20\n");
}
