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
#include "patc/semantics.hpp"
#include "patc/solver.hpp"

using namespace patc;
using types::Constraint;

namespace {

Pattern T(const char* m) { return Pattern::tag(m); }
Pattern V(int i) { return Pattern::var(i); }
Constraint C(Pattern l, Pattern r) { return {std::move(l), std::move(r), {}}; }

}  // namespace

TEST(Derivative, Rules) {
  EXPECT_EQ(derivative(T("A"), 0), Pattern::zero());
  EXPECT_EQ(derivative(V(0), 0), Pattern::one());
  EXPECT_EQ(derivative(V(1), 0), Pattern::zero());
  EXPECT_EQ(derivative(Pattern::dot(T("A"), V(0)), 0), T("A"));
  EXPECT_EQ(derivative(Pattern::plus(T("B"), Pattern::dot(T("A"), V(0))), 0), T("A"));
  // d(α.α) = α + α = α under idempotent +
  EXPECT_EQ(derivative(Pattern::dot(V(0), V(0)), 0), V(0));
}

TEST(GroupBounds, SplitsLowerBounds) {
  auto [bounds, rest] = group_bounds({C(T("A"), V(0)), C(T("B"), V(0)), C(V(0), T("A"))});
  ASSERT_EQ(bounds.count(0), 1u);
  EXPECT_EQ(bounds.at(0), Pattern::plus(T("A"), T("B")));
  ASSERT_EQ(rest.size(), 1u);
}

TEST(CloseForm, SingleRecursiveBoundAgainstOracle) {
  std::mt19937_64 rng(5);
  auto tags = oracle::abc(3);
  for (int i = 0; i < 60; ++i) {
    Pattern delta = oracle::random_pattern(rng, tags, 3);
    Pattern eps = oracle::random_pattern(rng, tags, 3);
    auto s = close_form({{0, Pattern::plus(delta, Pattern::dot(eps, V(0)))}});
    Pattern sol = s.at(0);
    EXPECT_EQ(sol, Pattern::dot(Pattern::star(eps), delta));
    Pattern lhs = Pattern::plus(delta, Pattern::dot(eps, sol));
    EXPECT_TRUE(oracle::bounded_included(lhs, sol, tags, 6)) << to_string(lhs) << " vs " << to_string(sol);
  }
}

TEST(CloseForm, MutualRecursion) {
  // α0 ⊒ A + B.α1,  α1 ⊒ C.α0 + 1
  auto s = close_form({{0, Pattern::plus(T("A"), Pattern::dot(T("B"), V(1)))},
                       {1, Pattern::plus(Pattern::one(), Pattern::dot(T("C"), V(0)))}});
  ASSERT_TRUE(s.at(0).is_closed());
  ASSERT_TRUE(s.at(1).is_closed());
  auto a0 = s.at(0), a1 = s.at(1);
  EXPECT_TRUE(includes(Pattern::plus(T("A"), Pattern::dot(T("B"), a1)), a0));
  EXPECT_TRUE(includes(Pattern::plus(Pattern::one(), Pattern::dot(T("C"), a0)), a1));
  // least solution is *(B.C).(A + B)
  auto alpha = oracle::abc(3);
  auto sem = oracle::bounded_semantics(a0, alpha, 5);
  auto want = oracle::bounded_semantics(
      Pattern::dot(Pattern::star(Pattern::dot(T("B"), T("C"))), Pattern::plus(T("A"), T("B"))), alpha, 5);
  EXPECT_EQ(sem, want) << to_string(a0);
  EXPECT_TRUE(sem.count({1, 1, 1}));
  EXPECT_FALSE(sem.count({1, 2, 1}));
}

TEST(Solve, SatisfiableSystem) {
  auto r = solve({C(T("A"), V(0)), C(Pattern::dot(T("A"), V(1)), V(0)), C(V(0), Pattern::star(T("A")))});
  ASSERT_TRUE(r.ok());
  for (auto& [v, p] : *r.solution) EXPECT_TRUE(p.is_closed());
}

TEST(Solve, UnsatWithCounterexample) {
  auto r = solve({C(Pattern::dot(T("A"), T("A")), V(0)), C(V(0), T("A"))});
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.unsat->kind, Unsat::Kind::kUnsat);
  ASSERT_TRUE(r.unsat->counterexample);
  EXPECT_EQ(*r.unsat->counterexample, (std::vector<std::string>{"A", "A"}));
  auto d = unsat_diagnostic(*r.unsat, "f.pat");
  EXPECT_EQ(d.phase, Phase::kSolve);
  ASSERT_TRUE(d.constraint);
}

TEST(Solve, UnboundedVariableSearch) {
  // α0 is only bounded above through a product: A.α0 ⊑ A.B*
  auto r = solve({C(Pattern::dot(T("A"), V(0)), Pattern::dot(T("A"), Pattern::star(T("B"))))});
  ASSERT_TRUE(r.ok());
  EXPECT_TRUE(includes(Pattern::dot(T("A"), r.solution->at(0)), Pattern::dot(T("A"), Pattern::star(T("B")))));
}

TEST(Solve, SerialAndParallelVerificationAgree) {
  types::Constraints cs{C(T("A"), V(0)), C(Pattern::dot(T("B"), V(0)), V(1)), C(V(1), Pattern::dot(T("A"), T("B")))};
  SolveOptions s;
  s.parallel = false;
  auto a = solve(cs, s), b = solve(cs);
  ASSERT_TRUE(a.ok() && b.ok());
  EXPECT_EQ(*a.solution, *b.solution);
}
