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

// Serial vs OpenMP timings for the two parallel kernels, plus the
// typechecking back half (pre-typing, constraints, solving) per program.

#include <benchmark/benchmark.h>

#include <filesystem>
#include <random>

#include "patc/driver.hpp"
#include "patc/parallel.hpp"
#include "patc/semantics.hpp"

using namespace patc;

namespace {

std::string corpus_dir() { return std::string(PATC_CORPUS_DIR) + "/positive"; }

Pattern random_pattern(std::mt19937_64& rng, int depth) {
  static const char* tags[] = {"A", "B", "C"};
  int pick = static_cast<int>(rng() % (depth > 0 ? 6 : 3));
  switch (pick) {
    case 0: return Pattern::tag(tags[rng() % 3]);
    case 1: return Pattern::one();
    case 2: return Pattern::tag(tags[rng() % 3]);
    case 3: return Pattern::plus(random_pattern(rng, depth - 1), random_pattern(rng, depth - 1));
    case 4: return Pattern::dot(random_pattern(rng, depth - 1), random_pattern(rng, depth - 1));
    default: return Pattern::star(random_pattern(rng, depth - 1));
  }
}

// Fresh queries every batch: a salt tag in every pattern keeps the
// inclusion cache from hitting.
std::vector<par::Query> queries(size_t n, uint64_t salt) {
  std::mt19937_64 rng(salt);
  Pattern s = Pattern::tag("S" + std::to_string(salt));
  std::vector<par::Query> qs;
  for (size_t i = 0; i < n; ++i)
    qs.emplace_back(Pattern::dot(random_pattern(rng, 4), s), Pattern::dot(random_pattern(rng, 4), s));
  return qs;
}

uint64_t g_salt = 1;

void BM_IncludesSerial(benchmark::State& st) {
  for (auto _ : st) {
    st.PauseTiming();
    auto qs = queries(static_cast<size_t>(st.range(0)), g_salt++);
    st.ResumeTiming();
    benchmark::DoNotOptimize(par::batch_includes_serial(qs));
  }
}

void BM_IncludesParallel(benchmark::State& st) {
  for (auto _ : st) {
    st.PauseTiming();
    auto qs = queries(static_cast<size_t>(st.range(0)), g_salt++);
    st.ResumeTiming();
    benchmark::DoNotOptimize(par::batch_includes(qs));
  }
  st.counters["threads"] = par::max_threads();
}

const ir::Program& program(const std::string& name) {
  static std::map<std::string, ir::Program> cache;
  auto it = cache.find(name);
  if (it == cache.end()) {
    auto r = check_file(corpus_dir() + "/" + name + ".pat");
    it = cache.emplace(name, *r.ir).first;
  }
  return it->second;
}

std::vector<uint64_t> seeds(int64_t n) {
  std::vector<uint64_t> s;
  for (int64_t i = 1; i <= n; ++i) s.push_back(static_cast<uint64_t>(i));
  return s;
}

void BM_SweepSerial(benchmark::State& st) {
  auto& p = program("factory");
  for (auto _ : st) benchmark::DoNotOptimize(par::sweep_seeds_serial(p, seeds(st.range(0)), 100000));
}

void BM_SweepParallel(benchmark::State& st) {
  auto& p = program("factory");
  for (auto _ : st) benchmark::DoNotOptimize(par::sweep_seeds(p, seeds(st.range(0)), 100000));
  st.counters["threads"] = par::max_threads();
}

void BM_Typecheck(benchmark::State& st, std::string name, bool parallel) {
  auto& p = program(name);
  CheckOptions o;
  o.parallel = parallel;
  for (auto _ : st) benchmark::DoNotOptimize(check_ir(p, o));
}

}  // namespace

BENCHMARK(BM_IncludesSerial)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IncludesParallel)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SweepSerial)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Arg(100)->Unit(benchmark::kMillisecond)->UseRealTime();

int main(int argc, char** argv) {
  for (auto& e : std::filesystem::directory_iterator(corpus_dir())) {
    if (e.path().extension() != ".pat") continue;
    auto n = e.path().stem().string();
    benchmark::RegisterBenchmark(("BM_Typecheck/" + n + "/serial").c_str(), BM_Typecheck, n, false)
        ->Unit(benchmark::kMillisecond);
    benchmark::RegisterBenchmark(("BM_Typecheck/" + n + "/parallel").c_str(), BM_Typecheck, n, true)
        ->Unit(benchmark::kMillisecond)
        ->UseRealTime();
  }
  benchmark::Initialize(&argc, argv);
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
