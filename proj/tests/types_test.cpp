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

#include "patc/types.hpp"

using namespace patc;
using namespace patc::types;

namespace {

Pattern T(const char* m) { return Pattern::tag(m); }
UTypeP snd(Pattern p, Usage u = Usage::kSec) { return mailbox(UK::kSend, "I", std::move(p), u); }
UTypeP rcv(Pattern p, Usage u = Usage::kRet) { return mailbox(UK::kRecv, "I", std::move(p), u); }

struct Fixture : ::testing::Test {
  Constraints cs;
  Ops ops{cs};
  std::string last() const { return cs.empty() ? "" : to_string(cs.back()); }
};

template <class F>
bool raises(F&& f) {
  try {
    f();
  } catch (const PatError& e) {
    return e.diag().phase == Phase::kConstraints;
  }
  return false;
}

}  // namespace

using TypesOps = Fixture;

TEST_F(TypesOps, SubtypingDirection) {
  // !E <= !F needs F ⊑ E; ?E <= ?F needs E ⊑ F
  ops.subty(snd(T("A")), snd(T("B")));
  EXPECT_EQ(last(), "B ⊑ A");
  ops.subty(rcv(T("A")), rcv(T("B")));
  EXPECT_EQ(last(), "A ⊑ B");
  // second-class where returnable is required
  EXPECT_TRUE(raises([&] { ops.subty(rcv(T("A"), Usage::kSec), rcv(T("A"), Usage::kRet)); }));
  // returnable may be used as second-class
  ops.subty(rcv(T("A"), Usage::kRet), rcv(T("A"), Usage::kSec));
  EXPECT_TRUE(raises([&] { ops.subty(base(UK::kInt), base(UK::kBool)); }));
  EXPECT_TRUE(raises([&] { ops.subty(snd(T("A")), rcv(T("A"))); }));
}

TEST_F(TypesOps, Unrestricted) {
  ops.unr(base(UK::kInt));
  EXPECT_TRUE(cs.empty());
  ops.unr(snd(T("A")));
  EXPECT_EQ(last(), "1 ⊑ A");
  EXPECT_TRUE(raises([&] { ops.unr(rcv(T("A"))); }));
  EXPECT_TRUE(raises([&] { ops.unr(snd(T("A"), Usage::kRet)); }));
  EXPECT_TRUE(raises([&] { ops.unr(fun({}, base(UK::kUnit), true)); }));
  ops.unr(fun({}, base(UK::kUnit), false));
}

TEST_F(TypesOps, JoinSendSend) {
  auto t = ops.join(snd(T("A")), snd(T("B")));
  EXPECT_EQ(to_string(*t), "○I!(A.B)");
}

TEST_F(TypesOps, JoinSendRecv) {
  auto t = ops.join(snd(T("A")), rcv(T("B")));
  ASSERT_EQ(t->k, UK::kRecv);
  EXPECT_EQ(t->pat.kind(), PatKind::kVar);
  EXPECT_EQ(last(), "A." + to_string(t->pat) + " ⊑ B");
  EXPECT_TRUE(raises([&] { ops.join(rcv(T("A")), rcv(T("B"))); }));
}

TEST_F(TypesOps, JoinUseAfterReturnable) {
  EXPECT_TRUE(raises([&] { ops.join(snd(T("A"), Usage::kRet), snd(T("B"))); }));
}

TEST_F(TypesOps, Merge) {
  EXPECT_EQ(to_string(*ops.merge(snd(T("A")), snd(T("B")))), "○I!(A + B)");
  auto t = ops.merge(rcv(T("A")), rcv(T("B")));
  ASSERT_EQ(cs.size(), 2u);
  EXPECT_EQ(to_string(cs[0].lhs), to_string(t->pat));
  EXPECT_TRUE(raises([&] { ops.merge(base(UK::kInt), snd(T("A"))); }));
}

TEST_F(TypesOps, EnvironmentCombineAndMerge) {
  Env a{{"x", snd(T("A"))}, {"n", base(UK::kInt)}};
  Env b{{"y", rcv(T("B"))}, {"n", base(UK::kInt)}};
  auto c = ops.combine(a, b);
  EXPECT_EQ(c.size(), 3u);
  EXPECT_TRUE(raises([&] { ops.combine(a, Env{{"x", snd(T("C"))}}); }));
  // one-sided send is widened with 1
  auto m = ops.merge(Env{{"x", snd(T("A"))}}, Env{});
  EXPECT_EQ(to_string(*m.at("x")), "○I!(1 + A)");
  EXPECT_TRUE(raises([&] { ops.merge(Env{{"x", rcv(T("A"))}}, Env{}); }));
}

TEST_F(TypesOps, NullEnvironmentIsIdentity) {
  Env a{{"x", snd(T("A"))}};
  NEnv na{false, a};
  auto j = ops.join(NEnv::null(), na);
  EXPECT_FALSE(j.top);
  EXPECT_EQ(to_string(j.env), to_string(a));
  EXPECT_TRUE(ops.merge(NEnv::null(), NEnv::null()).top);
  EXPECT_EQ(to_string(ops.combine(na, NEnv::null()).env), to_string(a));
}

TEST(Types, Predicates) {
  auto p = pair(base(UK::kInt), mailbox(UK::kSend, "I", Pattern::one(), Usage::kSec));
  EXPECT_FALSE(is_base(*p));
  EXPECT_FALSE(is_returnable(*p));
  EXPECT_TRUE(is_returnable(*returnable(p)));
  EXPECT_EQ(to_string(*second_class(returnable(p))), to_string(*p));
  EXPECT_TRUE(is_base(*sum(base(UK::kInt), base(UK::kBool))));
  std::set<std::string> ifs;
  interfaces_of(*pair(p, mailbox(UK::kRecv, "J", Pattern::one(), Usage::kRet)), ifs);
  EXPECT_EQ(ifs, (std::set<std::string>{"I", "J"}));
}

TEST(Types, Substitution) {
  auto t = mailbox(UK::kRecv, "I", Pattern::dot(Pattern::var(0), Pattern::tag("A")), Usage::kRet);
  auto s = subst(t, {{0, Pattern::star(Pattern::tag("B"))}});
  EXPECT_EQ(to_string(*s), "●I?(*B.A)");
}
