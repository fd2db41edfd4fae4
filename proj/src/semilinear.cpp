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

#include <algorithm>
#include <numeric>

#include "patc/presburger.hpp"

namespace patc::presburger {

namespace {

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](int64_t x) { return x == 0; });
}

Vec add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

void check_alphabet(const SemilinearSet& a, const SemilinearSet& b) {
  if (a.alphabet != b.alphabet) throw AlphabetMismatch("semilinear sets over different alphabets");
}

// Is `r` a non-negative integer combination of `periods`? Breadth-first
// search over the box [0, r]; cheap for the small vectors we see.
bool in_cone(const Vec& r, const std::vector<Vec>& periods) {
  if (is_zero(r)) return true;
  for (int64_t x : r)
    if (x < 0) return false;
  std::vector<const Vec*> useful;
  for (auto& p : periods) {
    bool fits = true;
    for (size_t i = 0; i < r.size() && fits; ++i) fits = p[i] <= r[i];
    if (fits) useful.push_back(&p);
  }
  if (useful.empty()) return false;
  // every positive coordinate needs some period touching it
  for (size_t i = 0; i < r.size(); ++i) {
    if (r[i] == 0) continue;
    bool touched = false;
    for (auto* p : useful) touched = touched || (*p)[i] > 0;
    if (!touched) return false;
  }
  std::vector<int64_t> stride(r.size());
  int64_t total = 1;
  for (size_t i = r.size(); i-- > 0;) {
    stride[i] = total;
    total *= (r[i] + 1);
    if (total > (int64_t{1} << 26)) throw ResourceExhausted("membership box too large");
  }
  std::vector<char> seen(static_cast<size_t>(total), 0);
  std::vector<Vec> frontier{Vec(r.size(), 0)};
  seen[0] = 1;
  int64_t target = 0;
  for (size_t i = 0; i < r.size(); ++i) target += r[i] * stride[i];
  while (!frontier.empty()) {
    Vec cur = std::move(frontier.back());
    frontier.pop_back();
    for (auto* p : useful) {
      Vec nxt = add(cur, *p);
      int64_t idx = 0;
      bool ok = true;
      for (size_t i = 0; i < r.size() && ok; ++i) {
        ok = nxt[i] <= r[i];
        idx += nxt[i] * stride[i];
      }
      if (!ok || seen[idx]) continue;
      if (idx == target) return true;
      seen[idx] = 1;
      frontier.push_back(std::move(nxt));
    }
  }
  return false;
}

// Sound syntactic test for x ⊆ y.
bool component_subsumed(const LinearSet& x, const LinearSet& y) {
  if (x.base == y.base &&
      std::includes(y.periods.begin(), y.periods.end(), x.periods.begin(), x.periods.end()))
    return true;
  if (!member(y, x.base)) return false;
  for (auto& p : x.periods)
    if (!in_cone(p, y.periods)) return false;
  return true;
}

void normalize(SemilinearSet& s) {
  auto& cs = s.components;
  std::sort(cs.begin(), cs.end());
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
  if (cs.size() < 2) return;
  std::vector<char> dead(cs.size(), 0);
  for (size_t i = 0; i < cs.size(); ++i) {
    for (size_t j = 0; j < cs.size() && !dead[i]; ++j) {
      if (i == j || dead[j]) continue;
      try {
        if (component_subsumed(cs[i], cs[j])) dead[i] = 1;
      } catch (const ResourceExhausted&) {
        // keep both; subsumption is only an optimisation
      }
    }
  }
  std::vector<LinearSet> kept;
  for (size_t i = 0; i < cs.size(); ++i)
    if (!dead[i]) kept.push_back(std::move(cs[i]));
  cs = std::move(kept);
}

}  // namespace

LinearSet make_linear(Vec base, std::vector<Vec> periods) {
  LinearSet l;
  l.base = std::move(base);
  for (auto& p : periods)
    if (!is_zero(p)) l.periods.push_back(std::move(p));
  std::sort(l.periods.begin(), l.periods.end());
  l.periods.erase(std::unique(l.periods.begin(), l.periods.end()), l.periods.end());
  return l;
}

SemilinearSet empty_set(std::vector<std::string> alphabet) {
  SemilinearSet s;
  s.alphabet = std::move(alphabet);
  return s;
}

SemilinearSet unit_set(std::vector<std::string> alphabet) {
  SemilinearSet s = empty_set(std::move(alphabet));
  s.components.push_back(make_linear(Vec(s.dim(), 0), {}));
  return s;
}

SemilinearSet point_set(std::vector<std::string> alphabet, Vec v) {
  SemilinearSet s = empty_set(std::move(alphabet));
  s.components.push_back(make_linear(std::move(v), {}));
  return s;
}

SemilinearSet sls_union(const SemilinearSet& a, const SemilinearSet& b) {
  check_alphabet(a, b);
  SemilinearSet r = a;
  r.components.insert(r.components.end(), b.components.begin(), b.components.end());
  normalize(r);
  return r;
}

SemilinearSet sls_sum(const SemilinearSet& a, const SemilinearSet& b) {
  check_alphabet(a, b);
  SemilinearSet r = empty_set(a.alphabet);
  for (auto& x : a.components) {
    for (auto& y : b.components) {
      std::vector<Vec> ps = x.periods;
      ps.insert(ps.end(), y.periods.begin(), y.periods.end());
      r.components.push_back(make_linear(add(x.base, y.base), std::move(ps)));
    }
  }
  normalize(r);
  return r;
}

SemilinearSet sls_star(const SemilinearSet& a) {
  // star({b;P}) = {0} ∪ {b; P ∪ {b}}; star of a union is the sum of stars.
  // Zero-based components contribute periods only.
  std::vector<Vec> shared;
  std::vector<const LinearSet*> others;
  for (auto& c : a.components) {
    if (is_zero(c.base)) {
      shared.insert(shared.end(), c.periods.begin(), c.periods.end());
    } else {
      others.push_back(&c);
    }
  }
  if (others.size() > 16) throw ResourceExhausted("star of a semilinear set with too many components");
  SemilinearSet r = empty_set(a.alphabet);
  r.components.push_back(make_linear(Vec(a.dim(), 0), shared));
  for (uint32_t mask = 1; mask < (1u << others.size()); ++mask) {
    Vec base(a.dim(), 0);
    std::vector<Vec> ps = shared;
    for (size_t i = 0; i < others.size(); ++i) {
      if (!(mask & (1u << i))) continue;
      base = add(base, others[i]->base);
      ps.insert(ps.end(), others[i]->periods.begin(), others[i]->periods.end());
      ps.push_back(others[i]->base);
    }
    r.components.push_back(make_linear(std::move(base), std::move(ps)));
  }
  normalize(r);
  return r;
}

SemilinearSet widen(const SemilinearSet& a, const std::vector<std::string>& alphabet) {
  if (a.alphabet == alphabet) return a;
  std::vector<size_t> pos;
  for (auto& t : a.alphabet) {
    auto it = std::lower_bound(alphabet.begin(), alphabet.end(), t);
    if (it == alphabet.end() || *it != t) throw AlphabetMismatch("tag " + t + " missing from alphabet");
    pos.push_back(static_cast<size_t>(it - alphabet.begin()));
  }
  auto embed = [&](const Vec& v) {
    Vec r(alphabet.size(), 0);
    for (size_t i = 0; i < v.size(); ++i) r[pos[i]] = v[i];
    return r;
  };
  SemilinearSet r = empty_set(alphabet);
  for (auto& c : a.components) {
    std::vector<Vec> ps;
    for (auto& p : c.periods) ps.push_back(embed(p));
    r.components.push_back(make_linear(embed(c.base), std::move(ps)));
  }
  return r;
}

bool member(const LinearSet& l, const Vec& v) {
  Vec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    r[i] = v[i] - l.base[i];
    if (r[i] < 0) return false;
  }
  if (l.periods.empty()) return is_zero(r);
  return in_cone(r, l.periods);
}

bool member(const SemilinearSet& s, const Vec& v) {
  return std::any_of(s.components.begin(), s.components.end(),
                     [&](const LinearSet& l) { return member(l, v); });
}

std::vector<Vec> vectors_up_to(size_t dim, int bound) {
  std::vector<Vec> out;
  Vec cur(dim, 0);
  // odometer over compositions with sum <= bound
  auto rec = [&](auto&& self, size_t i, int left) -> void {
    if (i == dim) {
      out.push_back(cur);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      cur[i] = x;
      self(self, i + 1, left - x);
    }
    cur[i] = 0;
  };
  rec(rec, 0, bound);
  return out;
}

OracleResult oracle_inclusion_bounded(const SemilinearSet& a, const SemilinearSet& b, int bound) {
  check_alphabet(a, b);
  OracleResult res;
  if (a.components.empty()) return res;
  for (auto& v : vectors_up_to(a.dim(), bound)) {
    if (member(a, v) && !member(b, v)) {
      res.included = false;
      res.witness = v;
      return res;
    }
  }
  return res;
}

}  // namespace patc::presburger
