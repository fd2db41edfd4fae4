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
using runtime::OutcomeKind;

namespace {

ir::Program lower(const std::string& src) { return ir::to_ir(ir::desugar(parse_program(src, "t.pat"))); }

ir::Program load_corpus(const std::string& f) {
  auto r = check_file(f);
  EXPECT_TRUE(r.ok()) << f;
  return *r.ir;
}

runtime::RunResult go(const ir::Program& p, uint64_t seed = 1, int64_t max = 100000, bool trace = false) {
  runtime::Options o;
  o.seed = seed;
  o.max_steps = max;
  o.trace = trace;
  return runtime::run(p, o);
}

const char* kIface = "interface I { A(), B(Int) }\n";

}  // namespace

TEST(Runtime, EmptyProgramsTerminate) {
  EXPECT_EQ(go(lower("")).outcome.kind, OutcomeKind::kTerminated);
  EXPECT_EQ(go(lower("def f(): Unit { () }")).outcome.kind, OutcomeKind::kTerminated);
}

TEST(Runtime, ImmediateFree) {
  auto r = go(lower(std::string(kIface) + "guard (new[I]) : 1 { free -> () }"), 1, 100, true);
  EXPECT_EQ(r.outcome.kind, OutcomeKind::kTerminated);
  bool freed = false;
  for (auto& l : r.trace) freed |= l.find("E-Free") != std::string::npos;
  EXPECT_TRUE(freed);
}

TEST(Runtime, LetPushesFrame) {
  runtime::Machine m(lower("let x = print(\"a\") in x"), 1);
  ASSERT_EQ(m.threads().size(), 1u);
  EXPECT_TRUE(m.threads()[0].stack.empty());
  EXPECT_FALSE(m.step());
  ASSERT_EQ(m.threads()[0].stack.size(), 1u);
  EXPECT_EQ(m.threads()[0].stack[0].binder, "x");
}

TEST(Runtime, SendQueuesMessage) {
  runtime::Machine m(lower(std::string(kIface) + "let x = new[I] in x ! B(4); guard x : B { receive B(n) from y -> free(y) }"), 1);
  while (m.mailboxes().empty()) ASSERT_FALSE(m.step());
  auto& q = m.mailboxes().begin()->second;
  ASSERT_EQ(q.size(), 1u);
  EXPECT_EQ(q[0].tag, "B");
  EXPECT_EQ(q[0].payload[0]->i, 4);
}

TEST(Runtime, FutureAlwaysPrintsFive) {
  auto p = load_corpus(corpus::path("positive/future.pat"));
  for (uint64_t s = 1; s <= 50; ++s) {
    auto r = go(p, s);
    EXPECT_EQ(r.outcome.kind, OutcomeKind::kTerminated) << s;
    EXPECT_EQ(r.output, "5\n") << s;
  }
}

TEST(Runtime, Deterministic) {
  auto p = load_corpus(corpus::path("positive/master_worker.pat"));
  for (uint64_t s : {1u, 9u, 77u}) {
    auto a = go(p, s, 100000, true), b = go(p, s, 100000, true);
    EXPECT_EQ(a.trace, b.trace);
    EXPECT_EQ(a.output, b.output);
  }
  // distinct seeds explore distinct interleavings
  EXPECT_NE(go(p, 1, 100000, true).trace, go(p, 2, 100000, true).trace);
}

TEST(Runtime, RefcountsConservedEveryStep) {
  for (auto& f : corpus::files("positive")) {
    auto p = load_corpus(f);
    for (uint64_t s = 1; s <= 5; ++s) {
      runtime::Machine m(p, s);
      for (int i = 0; i < 20000; ++i) {
        auto o = m.step();
        ASSERT_TRUE(m.refcounts_consistent()) << f << " seed " << s << " step " << i;
        if (o) {
          EXPECT_EQ(o->kind, OutcomeKind::kTerminated) << f;
          break;
        }
      }
    }
  }
}

TEST(Runtime, SelfDeadlockIsReported) {
  auto r = go(lower(std::string(kIface) + "let x = new[I] in guard x : A { receive A() from y -> free(y) }"));
  EXPECT_EQ(r.outcome.kind, OutcomeKind::kDeadlock);
  runtime::Machine m(lower(std::string(kIface) + "let x = new[I] in guard x : A { receive A() from y -> free(y) }"), 3);
  std::optional<runtime::Outcome> o;
  while (!o) o = m.step();
  EXPECT_EQ(o->kind, OutcomeKind::kDeadlock);
  EXPECT_TRUE(m.blocked_on_receives_only());
}

TEST(Runtime, FailClauseReported) {
  auto r = go(lower(std::string(kIface) + "guard (new[I]) : 0 { fail }"));
  EXPECT_EQ(r.outcome.kind, OutcomeKind::kFailGuardHit);
  EXPECT_EQ(r.outcome.mailbox, 0);
}

TEST(Runtime, FreeWithheldWhileMessagesQueued) {
  auto r = go(lower(std::string(kIface) + "let x = new[I] in x ! A(); guard x : 1 { free -> () }"));
  EXPECT_EQ(r.outcome.kind, OutcomeKind::kDeadlock);
  ASSERT_EQ(r.notes.size(), 1u);
  EXPECT_NE(r.notes[0].find("withheld"), std::string::npos);
}

TEST(Runtime, StepLimit) {
  auto p = load_corpus(corpus::path("positive/future.pat"));
  EXPECT_EQ(go(p, 1, 0).outcome.kind, OutcomeKind::kStepLimit);
  EXPECT_EQ(go(p, 1, 5).outcome.kind, OutcomeKind::kStepLimit);
  EXPECT_EQ(go(p, 1, 5).steps, 5);
}

TEST(Runtime, StuckArithmeticIsNotAStep) {
  EXPECT_EQ(go(lower("print(intToString(1 / 0))")).outcome.kind, OutcomeKind::kDeadlock);
}

TEST(Runtime, ExpectedOutputs) {
  struct Case {
    const char* file;
    const char* out;
  };
  for (auto c : {Case{"fibonacci", "8\n"}, Case{"master_worker", "30\n"}, Case{"account", "42\n"},
                 Case{"kfork", "15\n15\n15\n"}, Case{"ping_pong", "pong\npong\npong\n"}}) {
    auto p = load_corpus(corpus::path(std::string("positive/") + c.file + ".pat"));
    for (uint64_t s = 1; s <= 10; ++s) EXPECT_EQ(go(p, s).output, c.out) << c.file;
  }
}

TEST(Runtime, TraceLineFormat) {
  auto r = go(lower(std::string(kIface) + "let x = new[I] in x ! A(); guard x : A { receive A() from y -> free(y) }"), 1,
              100, true);
  ASSERT_FALSE(r.trace.empty());
  EXPECT_EQ(r.trace[0], "0, 0, E-Let, let x");
  bool recv = false;
  for (auto& l : r.trace) recv |= l.find(", E-Recv, #0 ? A()") != std::string::npos;
  EXPECT_TRUE(recv);
}
