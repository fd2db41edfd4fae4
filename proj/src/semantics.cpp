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

#include "patc/semantics.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace patc {

namespace ps = presburger;

std::vector<std::string> alphabet_of(const std::vector<Pattern>& ps) {
  std::set<std::string> all;
  for (auto& p : ps) {
    auto t = tags_of(p);
    all.insert(t.begin(), t.end());
  }
  return {all.begin(), all.end()};
}

ps::SemilinearSet parikh(const Pattern& e, const std::vector<std::string>& alphabet) {
  switch (e.kind()) {
    case PatKind::kZero:
      return ps::empty_set(alphabet);
    case PatKind::kOne:
      return ps::unit_set(alphabet);
    case PatKind::kTag: {
      auto it = std::lower_bound(alphabet.begin(), alphabet.end(), e.tag());
      if (it == alphabet.end() || *it != e.tag()) throw PatternError("tag " + e.tag() + " not in alphabet");
      ps::Vec v(alphabet.size(), 0);
      v[static_cast<size_t>(it - alphabet.begin())] = 1;
      return ps::point_set(alphabet, v);
    }
    case PatKind::kVar:
      throw PatternError("parikh image of open pattern " + to_string(e));
    case PatKind::kPlus: {
      ps::SemilinearSet acc = ps::empty_set(alphabet);
      for (auto& k : e.kids()) acc = ps::sls_union(acc, parikh(k, alphabet));
      return acc;
    }
    case PatKind::kDot: {
      ps::SemilinearSet acc = ps::unit_set(alphabet);
      for (auto& k : e.kids()) acc = ps::sls_sum(acc, parikh(k, alphabet));
      return acc;
    }
    case PatKind::kStar:
      return ps::sls_star(parikh(e.kids()[0], alphabet));
  }
  return ps::empty_set(alphabet);
}

ps::SemilinearSet parikh(const Pattern& e) { return parikh(e, alphabet_of({e})); }

namespace {

std::mutex g_memo_mu;
std::map<std::pair<std::string, std::string>, bool> g_memo;

void require_closed(const Pattern& p) {
  if (!p.is_closed()) throw PatternError("inclusion on open pattern " + to_string(p));
}

}  // namespace

bool includes(const Pattern& e, const Pattern& f) {
  require_closed(e);
  require_closed(f);
  if (e.is_zero() || e == f) return true;
  auto key = std::make_pair(e.key(), f.key());
  {
    std::lock_guard<std::mutex> lock(g_memo_mu);
    auto it = g_memo.find(key);
    if (it != g_memo.end()) return it->second;
  }
  auto alpha = alphabet_of({e, f});
  bool r = ps::sls_inclusion(parikh(e, alpha), parikh(f, alpha));
  std::lock_guard<std::mutex> lock(g_memo_mu);
  g_memo.emplace(key, r);
  return r;
}

bool equivalent(const Pattern& e, const Pattern& f) { return includes(e, f) && includes(f, e); }

bool is_empty(const Pattern& e) { return includes(e, Pattern::zero()); }

std::optional<std::vector<std::string>> counterexample(const Pattern& e, const Pattern& f, int bound) {
  auto alpha = alphabet_of({e, f});
  auto r = ps::oracle_inclusion_bounded(parikh(e, alpha), parikh(f, alpha), bound);
  if (r.included) return std::nullopt;
  std::vector<std::string> out;
  for (size_t i = 0; i < alpha.size(); ++i)
    for (int64_t c = 0; c < (*r.witness)[i]; ++c) out.push_back(alpha[i]);
  return out;
}

namespace {

bool pnf_literal(const Pattern& e, const Pattern& lit) {
  if (lit.is_zero() || lit.is_one()) return true;
  if (lit.kind() == PatKind::kTag) return equivalent(Pattern::one(), residual(e, lit.tag()));
  if (lit.kind() != PatKind::kDot) return false;
  const auto& ks = lit.kids();
  for (size_t i = 0; i < ks.size(); ++i) {
    if (ks[i].kind() != PatKind::kTag) continue;
    if (i > 0 && ks[i] == ks[i - 1]) continue;
    std::vector<Pattern> rest;
    for (size_t j = 0; j < ks.size(); ++j)
      if (j != i) rest.push_back(ks[j]);
    if (equivalent(Pattern::dot(std::move(rest)), residual(e, ks[i].tag()))) return true;
  }
  return false;
}

}  // namespace

bool pnf_check(const Pattern& e, const Pattern& f) {
  require_closed(f);
  if (f.kind() == PatKind::kPlus) {
    return std::all_of(f.kids().begin(), f.kids().end(),
                       [&](const Pattern& l) { return pnf_literal(e, l); });
  }
  return pnf_literal(e, f);
}

Classification classify(Cap cap, const Pattern& e) {
  Classification c;
  bool empty = is_empty(e);
  if (cap == Cap::kSend) {
    c.relevant = !includes(Pattern::one(), e);
    c.reliable = true;
    c.usable = !empty;
  } else {
    c.relevant = true;
    c.reliable = !empty;
    c.usable = true;
  }
  return c;
}

}  // namespace patc
