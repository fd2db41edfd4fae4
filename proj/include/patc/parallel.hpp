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

#ifndef PATC_PARALLEL_HPP_
#define PATC_PARALLEL_HPP_

#include <utility>
#include <vector>

#include "patc/pattern.hpp"
#include "patc/runtime.hpp"

// OpenMP kernels. Each has a serial reference with the same contract; the
// tests compare the two and the benchmark times them.
namespace patc::par {

using Query = std::pair<Pattern, Pattern>;

// results[i] == includes(qs[i].first, qs[i].second). Exceptions from any
// query are rethrown (the first by index) after the batch finishes.
std::vector<char> batch_includes(const std::vector<Query>& qs);
std::vector<char> batch_includes_serial(const std::vector<Query>& qs);

// One run per seed; results[i] is the run under seeds[i]. Runs share the
// program read-only and are otherwise independent.
std::vector<runtime::RunResult> sweep_seeds(const ir::Program& p, const std::vector<uint64_t>& seeds,
                                            int64_t max_steps);
std::vector<runtime::RunResult> sweep_seeds_serial(const ir::Program& p, const std::vector<uint64_t>& seeds,
                                                   int64_t max_steps);

int max_threads();

}  // namespace patc::par

#endif  // PATC_PARALLEL_HPP_
