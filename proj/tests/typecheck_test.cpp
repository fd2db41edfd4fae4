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

#include <chrono>

#include "corpus_util.hpp"
#include "patc/driver.hpp"

using namespace patc;

namespace {

CheckReport check(const std::string& src, Mode m = Mode::kInterface) {
  CheckOptions o;
  o.mode = m;
  return check_source(src, "t.pat", o);
}

std::string first_rule(const CheckReport& r) { return r.diags.empty() ? "" : r.diags[0].rule; }
Phase first_phase(const CheckReport& r) { return r.diags.empty() ? Phase::kIo : r.diags[0].phase; }

const char* kIface = "interface I { A(), B(Int) }\n";

}  // namespace

TEST(Typecheck, PositiveCorpusModeSplit) {
  for (auto& f : corpus::files("positive")) {
    SCOPED_TRACE(f);
    auto t0 = std::chrono::steady_clock::now();
    auto ri = check_file(f);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    EXPECT_TRUE(ri.ok()) << (ri.diags.empty() ? "" : render(ri.diags[0]));
    EXPECT_LT(secs, 1.0);
    CheckOptions so;
    so.mode = Mode::kStrict;
    auto rs = check_file(f, so);
    EXPECT_EQ(rs.ok(), corpus::strict_expected(corpus::stem(f)));
    if (!rs.ok()) EXPECT_EQ(first_rule(rs), "TCG-Recv");
  }
}

TEST(Typecheck, NegativeCorpusRejected) {
  for (auto& f : corpus::files("negative")) {
    SCOPED_TRACE(f);
    auto r = check_file(f);
    EXPECT_EQ(r.exit_code, kExitType);
    ASSERT_FALSE(r.diags.empty());
    EXPECT_FALSE(r.diags[0].rule.empty());
  }
}

TEST(Typecheck, SendThenReceive) {
  auto r = check(std::string(kIface) +
                 "let x = new[I] in x ! A(); guard x : A { receive A() from y -> free(y) }");
  EXPECT_TRUE(r.ok()) << render(r.diags.at(0));
}

TEST(Typecheck, PayloadBindersTyped) {
  auto r = check(std::string(kIface) +
                 "let x = new[I] in x ! B(3); guard x : B { receive B(n) from y -> free(y); print(intToString(n + 1)) }");
  EXPECT_TRUE(r.ok()) << render(r.diags.at(0));
}

TEST(Typecheck, ForgottenMailboxRejected) {
  auto r = check(std::string(kIface) + "let x = new[I] in ()");
  EXPECT_EQ(r.exit_code, kExitType);
}

TEST(Typecheck, UnreceivedMessageRejected) {
  auto r = check(std::string(kIface) +
                 "let x = new[I] in x ! A(); x ! B(1); guard x : A { receive A() from y -> free(y) }");
  EXPECT_EQ(r.exit_code, kExitType);
  EXPECT_EQ(first_phase(r), Phase::kSolve);
  ASSERT_TRUE(r.diags[0].constraint);
}

TEST(Typecheck, ImmediateFree) {
  EXPECT_TRUE(check(std::string(kIface) + "guard (new[I]) : 1 { free -> () }").ok());
}

TEST(Typecheck, PretypeErrors) {
  EXPECT_EQ(first_phase(check("x")), Phase::kPretype);
  EXPECT_EQ(first_phase(check("def f(a: Int): Int { a } f(1, 2)")), Phase::kPretype);
  EXPECT_EQ(first_phase(check(std::string(kIface) + "let x = new[I] in x ! C(); free(x)")), Phase::kPretype);
  EXPECT_EQ(first_phase(check("new[Nope]")), Phase::kPretype);
  EXPECT_EQ(first_phase(check("1 + true")), Phase::kPretype);
  EXPECT_EQ(first_phase(check("3 ! A()")), Phase::kPretype);
}

TEST(Typecheck, ModesOnBasePayloads) {
  // base payloads with a base residual environment pass strict mode
  const std::string src = std::string(kIface) +
                          "def loop(self: I?(*B), acc: Int): Int {\n"
                          "  guard self : *B { free -> acc  receive B(n) from s -> loop(s, acc + n) }\n"
                          "}\n"
                          "let x = new[I] in x ! B(1); x ! B(2); print(intToString(loop(x, 0)))";
  EXPECT_TRUE(check(src, Mode::kStrict).ok());
  EXPECT_TRUE(check(src, Mode::kInterface).ok());
}

TEST(Typecheck, StrictRejectsSameInterfaceAliasInInterfaceMode) {
  // receiving a J! while holding another J! is rejected in both modes
  const std::string src =
      "interface I { Give(J!) }\n interface J { Ping() }\n"
      "def serve(self: I?(Give), other: J!): Unit {\n"
      "  guard self : Give { receive Give(j) from s -> free(s); j ! Ping(); other ! Ping() }\n"
      "}\n"
      "def sink(self: J?(*Ping)): Unit { guard self : *Ping { free -> ()  receive Ping() from s -> sink(s) } }\n"
      "let i = new[I] in let j = new[J] in spawn { sink(j) }; i ! Give(j); serve(i, j)";
  EXPECT_EQ(check(src, Mode::kStrict).exit_code, kExitType);
  EXPECT_EQ(check(src, Mode::kInterface).exit_code, kExitType);
}

TEST(Typecheck, FutureSolution) {
  auto r = check_file(corpus::path("positive/future.pat"));
  ASSERT_TRUE(r.ok());
  ASSERT_TRUE(r.solution);
  bool has_reply = false;
  for (auto& [v, p] : *r.solution) has_reply |= to_string(p) == "Reply";
  EXPECT_TRUE(has_reply);
}

TEST(Typecheck, LambdasAndSums) {
  EXPECT_TRUE(check("let f = fun(x: Int): Int { x + 1 } in print(intToString(f(2)))").ok());
  EXPECT_TRUE(check("let s : Int + Bool = inl(3) in case s { inl n -> print(intToString(n)) inr b -> () }").ok());
  EXPECT_TRUE(check("let (a, b) = (1, true) in if b { print(intToString(a)) } else { () }").ok());
}
