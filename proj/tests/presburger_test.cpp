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
#include "patc/presburger.hpp"
#include "patc/semantics.hpp"

namespace patc::presburger {
namespace {

const std::vector<std::string> kMN{"m", "n"};

TEST(Sls, UnionSumStar) {
  auto e = empty_set(kMN);
  auto u = unit_set(kMN);
  auto pm = point_set(kMN, {1, 0});
  auto pn = point_set(kMN, {0, 1});
  EXPECT_EQ(sls_union(e, pm).components, pm.components);
  EXPECT_EQ(sls_union(pm, pm).components.size(), 1u);
  EXPECT_EQ(sls_sum(u, pm).components, pm.components);
  EXPECT_TRUE(sls_sum(e, pm).components.empty());
  auto mn = sls_sum(pm, pn);
  EXPECT_TRUE(member(mn, {1, 1}));
  EXPECT_EQ(sls_star(e).components, u.components);
  EXPECT_EQ(sls_star(u).components, u.components);
  auto sm = sls_star(pm);
  for (int k = 0; k <= 6; ++k) EXPECT_TRUE(member(sm, {k, 0}));
  EXPECT_FALSE(member(sm, {0, 1}));
  EXPECT_THROW(sls_union(pm, point_set({"m"}, {1})), AlphabetMismatch);
}

TEST(Sls, MembershipMonotoneInPeriods) {
  auto a = make_linear({1, 0}, {{2, 0}});
  auto b = make_linear({1, 0}, {{2, 0}, {0, 1}});
  for (auto& v : vectors_up_to(2, 8))
    if (member(a, v)) EXPECT_TRUE(member(b, v));
}

TEST(Decide, Basics) {
  Term x = Term::var(0), y = Term::var(1), zero = Term::constant(0);
  EXPECT_FALSE(decide(f_exists(0, f_and({f_ge(x, zero), f_lt(x, zero)}))));
  // forall x. exists y. x = 2y or x = 2y + 1
  auto parity = f_forall(0, f_exists(1, f_or({f_eq(x, 2 * y), f_eq(x, 2 * y + Term::constant(1))})));
  EXPECT_TRUE(decide(parity));
  // not every number is even
  EXPECT_FALSE(decide(f_forall(0, f_exists(1, f_eq(x, 2 * y)))));
  // exists x. 3x = 7 : false ; exists x. 3x + 2y = 7 for some y >= 0
  EXPECT_FALSE(decide(f_exists(0, f_eq(3 * x, Term::constant(7)))));
  EXPECT_TRUE(decide(f_exists(0, f_exists(1, f_and({f_ge(x, zero), f_ge(y, zero),
                                                   f_eq(3 * x + 2 * y, Term::constant(7))})))));
  EXPECT_FALSE(decide(f_exists(0, f_exists(1, f_and({f_ge(x, zero), f_ge(y, zero),
                                                    f_eq(3 * x + 5 * y, Term::constant(7))})))));
}

TEST(Decide, ResourceLimit) {
  DecideOptions tiny;
  tiny.atom_limit = 3;
  Term x = Term::var(0), y = Term::var(1), z = Term::var(2);
  auto f = f_forall(0, f_exists(1, f_exists(2, f_and({f_le(Term::constant(0), y), f_le(Term::constant(0), z),
                                                      f_eq(x, 3 * y + 5 * z + Term::constant(0))}))));
  EXPECT_THROW(decide(f, tiny), ResourceExhausted);
  EXPECT_FALSE(decide(f));  // 1, 2, 4, 7 are not representable
}

TEST(Decide, RejectsOpenFormula) {
  EXPECT_THROW(decide(f_le(Term::var(3), Term::constant(0))), std::invalid_argument);
}

TEST(Smtlib, Shape) {
  auto s = to_smtlib(f_true());
  EXPECT_NE(s.find("(set-logic LIA)"), std::string::npos);
  EXPECT_NE(s.find("(assert (not true))"), std::string::npos);
  EXPECT_NE(s.find("(check-sat)"), std::string::npos);
}

TEST(Inclusion, Examples) {
  auto sm = parikh(Pattern::star(Pattern::tag("m")), kMN);
  auto sm_or_n = parikh(Pattern::plus(Pattern::star(Pattern::tag("m")), Pattern::tag("n")), kMN);
  EXPECT_TRUE(sls_inclusion(sm, sm));
  EXPECT_TRUE(sls_inclusion(sm, sm_or_n));
  auto mm = parikh(Pattern::dot(Pattern::tag("m"), Pattern::tag("m")), kMN);
  auto m1 = parikh(Pattern::tag("m"), kMN);
  EXPECT_FALSE(sls_inclusion(mm, m1));
  auto r = oracle_inclusion_bounded(mm, m1, 6);
  EXPECT_FALSE(r.included);
  EXPECT_EQ(*r.witness, (Vec{2, 0}));
  EXPECT_TRUE(oracle_inclusion_bounded(empty_set(kMN), m1, 6).included);
}

TEST(Inclusion, SentenceAgreesWithShortcuts) {
  // The full sentence (no shortcuts) must agree with sls_inclusion.
  std::mt19937_64 rng(7);
  auto tags = oracle::abc(2);
  for (int i = 0; i < 80; ++i) {
    Pattern p = oracle::random_pattern(rng, tags, 3);
    Pattern q = oracle::random_pattern(rng, tags, 3);
    auto a = parikh(p, tags), b = parikh(q, tags);
    EXPECT_EQ(decide(inclusion_sentence(a, b)), sls_inclusion(a, b)) << to_string(p) << " <= " << to_string(q);
  }
}

TEST(Inclusion, DeciderAgreesWithOracle) {
  std::mt19937_64 rng(11);
  auto tags = oracle::abc(3);
  for (int i = 0; i < 200; ++i) {
    Pattern p = oracle::random_pattern(rng, tags, 4);
    Pattern q = oracle::random_pattern(rng, tags, 4);
    bool got = includes(p, q);
    if (got) {
      EXPECT_TRUE(oracle::bounded_included(p, q, tags, 6)) << to_string(p) << " <= " << to_string(q);
    } else {
      EXPECT_FALSE(oracle::bounded_included(p, q, tags, 12)) << to_string(p) << " <= " << to_string(q);
    }
  }
}

}  // namespace
}  // namespace patc::presburger
