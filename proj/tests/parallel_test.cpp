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

#include "corpus_util.hpp"
#include "oracle.hpp"
#include "patc/driver.hpp"
#include "patc/parallel.hpp"

using namespace patc;

TEST(Parallel, BatchIncludesMatchesSerial) {
  std::mt19937_64 rng(21);
  auto tags = oracle::abc(3);
  std::vector<par::Query> qs;
  for (int i = 0; i < 200; ++i)
    qs.emplace_back(oracle::random_pattern(rng, tags, 4), oracle::random_pattern(rng, tags, 4));
  EXPECT_EQ(par::batch_includes(qs), par::batch_includes_serial(qs));
}

TEST(Parallel, BatchIncludesRethrows) {
  std::vector<par::Query> qs{{Pattern::tag("A"), Pattern::tag("A")}, {Pattern::var(0), Pattern::tag("A")}};
  EXPECT_THROW(par::batch_includes(qs), PatternError);
}

TEST(Parallel, SeedSweepMatchesSerial) {
  auto r = check_file(corpus::path("positive/lock.pat"));
  ASSERT_TRUE(r.ok());
  std::vector<uint64_t> seeds;
  for (uint64_t s = 1; s <= 24; ++s) seeds.push_back(s);
  auto a = par::sweep_seeds(*r.ir, seeds, 100000);
  auto b = par::sweep_seeds_serial(*r.ir, seeds, 100000);
  ASSERT_EQ(a.size(), b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].outcome.kind, b[i].outcome.kind);
    EXPECT_EQ(a[i].output, b[i].output);
    EXPECT_EQ(a[i].steps, b[i].steps);
  }
  EXPECT_GE(par::max_threads(), 1);
}
