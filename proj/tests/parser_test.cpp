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
#include "patc/pretty.hpp"

using namespace patc;

namespace {

int parse_error_line(const std::string& src) {
  try {
    parse_program(src, "t.pat");
  } catch (const PatError& e) {
    EXPECT_EQ(e.diag().phase, Phase::kParse);
    return e.diag().span.line;
  }
  return -1;
}

}  // namespace

TEST(Parser, CorpusRoundTrip) {
  for (auto sub : {"positive", "negative"}) {
    for (auto& f : corpus::files(sub)) {
      SCOPED_TRACE(f);
      auto src = read_file(f);
      ASSERT_TRUE(src);
      auto p = parse_program(*src, f);
      auto printed = print_program(p);
      auto q = parse_program(printed, f);
      EXPECT_EQ(dump_program(p), dump_program(q));
      // printing is a fixed point after one round
      EXPECT_EQ(printed, print_program(q));
    }
  }
}

TEST(Parser, FutureShape) {
  auto p = parse_program(*read_file(corpus::path("positive/future.pat")), "future.pat");
  ASSERT_EQ(p.interfaces.size(), 2u);
  EXPECT_EQ(p.interfaces[0].name, "Future");
  ASSERT_EQ(p.interfaces[0].messages.size(), 2u);
  EXPECT_EQ(p.interfaces[0].messages[0].tag, "Put");
  EXPECT_EQ(p.defs.size(), 3u);
  ASSERT_TRUE(p.body);
  EXPECT_EQ(p.body->k, ast::EK::kCall);
  EXPECT_EQ(p.body->name, "client");
}

TEST(Parser, Precedence) {
  auto p = parse_program("1 + 2 * 3 == 7 && true", "");
  EXPECT_EQ(dump_program(p), "(main (&& (== (+ 1 (* 2 3)) 7) #t))\n");
}

TEST(Parser, PatternSyntax) {
  EXPECT_EQ(to_string(parse_pattern("Put . *Get")), to_string(Pattern::dot(Pattern::tag("Put"), Pattern::star(Pattern::tag("Get")))));
  EXPECT_EQ(parse_pattern("1 + 0"), Pattern::one());
  EXPECT_EQ(parse_pattern("(A + B) . C"), Pattern::dot(Pattern::plus(Pattern::tag("A"), Pattern::tag("B")), Pattern::tag("C")));
}

TEST(Parser, ErrorsCarrySpans) {
  EXPECT_EQ(parse_error_line("def f(): Unit {\n  let x = in x\n}"), 2);
  EXPECT_EQ(parse_error_line("interface I { A(Int) \n B() }"), 2);
  EXPECT_EQ(parse_error_line("guard x : A { receive A() from -> () }"), 1);
  EXPECT_GT(parse_error_line("\"unterminated"), 0);
}

TEST(Parser, EmptyProgram) {
  auto p = parse_program("", "");
  EXPECT_TRUE(p.interfaces.empty());
  EXPECT_TRUE(p.defs.empty());
  EXPECT_FALSE(p.body);
}
