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

#include "patc/parallel.hpp"

#include <omp.h>

#include <exception>

#include "patc/semantics.hpp"

namespace patc::par {

namespace {

void rethrow_first(const std::vector<std::exception_ptr>& errs) {
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
}

}  // namespace

std::vector<char> batch_includes(const std::vector<Query>& qs) {
  std::vector<char> out(qs.size(), 0);
  std::vector<std::exception_ptr> errs(qs.size());
  const auto n = static_cast<long>(qs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < n; ++i) {
    auto k = static_cast<size_t>(i);
    try {
      out[k] = includes(qs[k].first, qs[k].second) ? 1 : 0;
    } catch (...) {
      errs[k] = std::current_exception();
    }
  }
  rethrow_first(errs);
  return out;
}

std::vector<char> batch_includes_serial(const std::vector<Query>& qs) {
  std::vector<char> out;
  out.reserve(qs.size());
  for (auto& [a, b] : qs) out.push_back(includes(a, b) ? 1 : 0);
  return out;
}

std::vector<runtime::RunResult> sweep_seeds(const ir::Program& p, const std::vector<uint64_t>& seeds,
                                            int64_t max_steps) {
  std::vector<runtime::RunResult> out(seeds.size());
  const auto n = static_cast<long>(seeds.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < n; ++i) {
    auto k = static_cast<size_t>(i);
    runtime::Options o;
    o.seed = seeds[k];
    o.max_steps = max_steps;
    out[k] = runtime::run(p, o);
  }
  return out;
}

std::vector<runtime::RunResult> sweep_seeds_serial(const ir::Program& p, const std::vector<uint64_t>& seeds,
                                                   int64_t max_steps) {
  std::vector<runtime::RunResult> out;
  for (auto s : seeds) {
    runtime::Options o;
    o.seed = s;
    o.max_steps = max_steps;
    out.push_back(runtime::run(p, o));
  }
  return out;
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace patc::par
