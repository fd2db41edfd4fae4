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

#include <random>

#include "oracle.hpp"
#include "patc/pattern.hpp"
#include "patc/semantics.hpp"

namespace patc {
namespace {

const Pattern m = Pattern::tag("m");
const Pattern n = Pattern::tag("n");

TEST(PatternCtor, UnitLawsAndAc) {
  EXPECT_EQ(Pattern::dot(m, Pattern::one()), m);
  EXPECT_EQ(Pattern::plus(m, Pattern::zero()), m);
  EXPECT_TRUE(Pattern::dot(m, Pattern::zero()).is_zero());
  EXPECT_EQ(Pattern::plus(m, n), Pattern::plus(n, m));
  EXPECT_EQ(Pattern::dot(m, Pattern::dot(n, m)), Pattern::dot(Pattern::dot(m, m), n));
  EXPECT_EQ(Pattern::star(Pattern::star(m)), Pattern::star(m));
  EXPECT_TRUE(Pattern::star(Pattern::zero()).is_one());
}

TEST(PatternPrint, ConcreteSyntax) {
  Pattern p = Pattern::dot({Pattern::tag("Inside"), Pattern::tag("Prepared"), Pattern::star(Pattern::tag("Want"))});
  EXPECT_EQ(to_string(p), "*Want.Inside.Prepared");
  EXPECT_EQ(to_string(Pattern::dot(Pattern::plus(m, n), m)), "(m + n).m");
  EXPECT_EQ(to_string(Pattern::star(Pattern::plus(m, n))), "*(m + n)");
}

TEST(Residual, Fig5Rules) {
  EXPECT_TRUE(residual(m, "m").is_one());
  EXPECT_TRUE(residual(Pattern::one(), "m").is_zero());
  EXPECT_TRUE(residual(n, "m").is_zero());
  EXPECT_TRUE(residual(Pattern::plus(m, n), "m").is_one());  // 1 + 0
  EXPECT_EQ(residual(Pattern::star(m), "m"), Pattern::star(m));
  EXPECT_THROW(residual(Pattern::var(0), "m"), PatternError);
}

TEST(Parikh, WorkedExample) {
  // 1 + 0 + m.n  denotes { [], [m,n] }
  auto s = parikh(Pattern::plus({Pattern::one(), Pattern::zero(), Pattern::dot(m, n)}));
  ASSERT_EQ(s.alphabet, (std::vector<std::string>{"m", "n"}));
  EXPECT_TRUE(presburger::member(s, {0, 0}));
  EXPECT_TRUE(presburger::member(s, {1, 1}));
  EXPECT_FALSE(presburger::member(s, {1, 0}));
  EXPECT_TRUE(parikh(Pattern::zero()).components.empty());
}

TEST(Parikh, StarAgainstEnumeration) {
  auto s = parikh(Pattern::star(m));
  for (int k = 0; k <= 6; ++k) EXPECT_TRUE(presburger::member(s, {k}));
}

TEST(Includes, Examples) {
  EXPECT_TRUE(includes(Pattern::tag("Reply"), Pattern::dot(Pattern::tag("Reply"), Pattern::one())));
  EXPECT_TRUE(includes(Pattern::dot(Pattern::star(m), n), Pattern::star(Pattern::plus(m, n))));
  EXPECT_FALSE(includes(Pattern::dot(m, m), m));
  EXPECT_FALSE(includes(Pattern::star(Pattern::plus(m, n)), Pattern::dot(Pattern::star(m), n)));
}

TEST(Pnf, Examples) {
  Pattern reply = Pattern::tag("Reply");
  EXPECT_TRUE(pnf_check(reply, Pattern::dot(reply, Pattern::one())));
  EXPECT_TRUE(pnf_check(m, Pattern::zero()));
  EXPECT_FALSE(pnf_check(m, Pattern::dot(n, Pattern::one())));
  // guard of the full future: *Get gives 1 + Get.*Get
  Pattern get = Pattern::tag("Get");
  EXPECT_TRUE(pnf_check(Pattern::star(get), Pattern::plus(Pattern::one(), Pattern::dot(get, Pattern::star(get)))));
}

TEST(Classify, Examples) {
  auto one = classify(Cap::kSend, Pattern::one());
  EXPECT_FALSE(one.relevant);
  EXPECT_TRUE(one.usable);
  EXPECT_FALSE(classify(Cap::kRecv, Pattern::zero()).reliable);
  auto pg = classify(Cap::kSend, Pattern::dot(Pattern::tag("Put"), Pattern::tag("Get")));
  EXPECT_TRUE(pg.relevant);
  EXPECT_TRUE(pg.usable);
  EXPECT_FALSE(classify(Cap::kSend, Pattern::zero()).usable);
}

// --- properties over random patterns ---

class RandomPatterns : public ::testing::Test {
 protected:
  std::mt19937_64 rng{0x5eed};
  std::vector<std::string> tags = oracle::abc(3);
  Pattern gen(int depth = 4) { return oracle::random_pattern(rng, tags, depth); }
};

TEST_F(RandomPatterns, ParikhMatchesDirectSemantics) {
  for (int i = 0; i < 200; ++i) {
    Pattern p = gen(5);
    auto s = parikh(p, tags);
    auto ref = oracle::bounded_semantics(p, tags, 6);
    for (auto& c : oracle::all_counts(3, 6)) {
      presburger::Vec v(c.begin(), c.end());
      ASSERT_EQ(presburger::member(s, v), ref.count(c) > 0) << to_string(p);
    }
  }
}

TEST_F(RandomPatterns, SemanticLaws) {
  for (int i = 0; i < 100; ++i) {
    Pattern e = gen(), f = gen(), g = gen();
    EXPECT_TRUE(equivalent(Pattern::dot(e, Pattern::one()), e));
    EXPECT_TRUE(equivalent(Pattern::plus(e, Pattern::zero()), e));
    EXPECT_TRUE(is_empty(Pattern::dot(e, Pattern::zero())));
    EXPECT_TRUE(equivalent(Pattern::dot(e, Pattern::plus(f, g)),
                           Pattern::plus(Pattern::dot(e, f), Pattern::dot(e, g))))
        << to_string(e) << " | " << to_string(f) << " | " << to_string(g);
  }
}

TEST_F(RandomPatterns, ResidualSoundness) {
  for (int i = 0; i < 200; ++i) {
    Pattern e = gen(5);
    const std::string& t = tags[static_cast<size_t>(i) % tags.size()];
    auto lhs = oracle::bounded_semantics(residual(e, t), tags, 6);
    auto whole = oracle::bounded_semantics(e, tags, 7);
    size_t idx = static_cast<size_t>(i) % tags.size();
    for (auto& c : oracle::all_counts(3, 6)) {
      auto plus_m = c;
      ++plus_m[idx];
      ASSERT_EQ(lhs.count(c) > 0, whole.count(plus_m) > 0) << to_string(e) << " / " << t;
    }
  }
}

TEST_F(RandomPatterns, IncludesIsPreorder) {
  for (int i = 0; i < 60; ++i) {
    Pattern e = gen(3), f = gen(3), g = gen(3);
    EXPECT_TRUE(includes(e, e));
    if (includes(e, f) && includes(f, g)) EXPECT_TRUE(includes(e, g));
  }
}

TEST_F(RandomPatterns, CancellationOnPnf) {
  for (int i = 0; i < 100; ++i) {
    Pattern e = gen(4);
    for (auto& t : tags) {
      Pattern lit = Pattern::dot(Pattern::tag(t), residual(e, t));
      EXPECT_TRUE(includes(lit, e)) << to_string(e);
    }
  }
}

}  // namespace
}  // namespace patc
