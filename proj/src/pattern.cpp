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

#include "patc/pattern.hpp"

#include <algorithm>

namespace patc {

Pattern::Pattern() : Pattern(zero()) {}

Pattern Pattern::make(PatKind k, std::string tag, int var, std::vector<Pattern> kids) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->tag = std::move(tag);
  n->var = var;
  n->kids = std::move(kids);
  switch (k) {
    case PatKind::kZero: n->key = "0"; break;
    case PatKind::kOne: n->key = "1"; break;
    case PatKind::kTag: n->key = "T" + n->tag; break;
    case PatKind::kVar:
      n->key = "V" + std::to_string(var);
      n->closed = false;
      break;
    case PatKind::kPlus:
    case PatKind::kDot:
    case PatKind::kStar: {
      n->key = k == PatKind::kPlus ? "+[" : k == PatKind::kDot ? ".[" : "*[";
      for (size_t i = 0; i < n->kids.size(); ++i) {
        if (i) n->key += '|';
        n->key += n->kids[i].key();
        n->closed = n->closed && n->kids[i].is_closed();
      }
      n->key += ']';
      break;
    }
  }
  return Pattern(std::move(n));
}

Pattern Pattern::zero() {
  static const Pattern z = make(PatKind::kZero, "", -1, {});
  return z;
}

Pattern Pattern::one() {
  static const Pattern o = make(PatKind::kOne, "", -1, {});
  return o;
}

Pattern Pattern::tag(const std::string& m) { return make(PatKind::kTag, m, -1, {}); }
Pattern Pattern::var(int id) { return make(PatKind::kVar, "", id, {}); }

namespace {

void sort_unique(std::vector<Pattern>& v, bool dedupe) {
  std::sort(v.begin(), v.end());
  if (dedupe) v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

Pattern Pattern::plus(std::vector<Pattern> ps) {
  std::vector<Pattern> flat;
  for (auto& p : ps) {
    if (p.kind() == PatKind::kPlus) {
      flat.insert(flat.end(), p.kids().begin(), p.kids().end());
    } else if (!p.is_zero()) {
      flat.push_back(p);
    }
  }
  sort_unique(flat, true);
  if (flat.empty()) return zero();
  if (flat.size() == 1) return flat[0];
  return make(PatKind::kPlus, "", -1, std::move(flat));
}

Pattern Pattern::dot(std::vector<Pattern> ps) {
  std::vector<Pattern> flat;
  for (auto& p : ps) {
    if (p.is_zero()) return zero();
    if (p.kind() == PatKind::kDot) {
      flat.insert(flat.end(), p.kids().begin(), p.kids().end());
    } else if (!p.is_one()) {
      flat.push_back(p);
    }
  }
  sort_unique(flat, false);
  if (flat.empty()) return one();
  if (flat.size() == 1) return flat[0];
  return make(PatKind::kDot, "", -1, std::move(flat));
}

Pattern Pattern::star(const Pattern& p) {
  if (p.is_zero() || p.is_one()) return one();
  if (p.kind() == PatKind::kStar) return p;
  if (p.kind() == PatKind::kPlus) {
    // *(1 + E) = *E
    std::vector<Pattern> rest;
    for (auto& k : p.kids())
      if (!k.is_one()) rest.push_back(k);
    if (rest.size() != p.kids().size()) return star(plus(std::move(rest)));
  }
  return make(PatKind::kStar, "", -1, {p});
}

namespace {

void print(const Pattern& p, int ctx, std::string& out) {
  // precedence: + is 1, . is 2, * is 3
  switch (p.kind()) {
    case PatKind::kZero: out += '0'; return;
    case PatKind::kOne: out += '1'; return;
    case PatKind::kTag: out += p.tag(); return;
    case PatKind::kVar: out += "α" + std::to_string(p.var()); return;
    case PatKind::kStar:
      out += '*';
      print(p.kids()[0], 3, out);
      return;
    case PatKind::kPlus:
    case PatKind::kDot: {
      int prec = p.kind() == PatKind::kPlus ? 1 : 2;
      bool paren = prec < ctx;
      if (paren) out += '(';
      for (size_t i = 0; i < p.kids().size(); ++i) {
        if (i) out += prec == 1 ? " + " : ".";
        print(p.kids()[i], prec + 1, out);
      }
      if (paren) out += ')';
      return;
    }
  }
}

}  // namespace

std::string to_string(const Pattern& p) {
  std::string out;
  print(p, 0, out);
  return out;
}

namespace {

void walk(const Pattern& p, const std::function<void(const Pattern&)>& f) {
  f(p);
  for (auto& k : p.kids()) walk(k, f);
}

}  // namespace

std::set<std::string> tags_of(const Pattern& p) {
  std::set<std::string> out;
  walk(p, [&](const Pattern& q) {
    if (q.kind() == PatKind::kTag) out.insert(q.tag());
  });
  return out;
}

std::set<int> vars_of(const Pattern& p) {
  std::set<int> out;
  if (p.is_closed()) return out;
  walk(p, [&](const Pattern& q) {
    if (q.kind() == PatKind::kVar) out.insert(q.var());
  });
  return out;
}

bool mentions_var(const Pattern& p, int v) {
  if (p.is_closed()) return false;
  if (p.kind() == PatKind::kVar) return p.var() == v;
  for (auto& k : p.kids())
    if (mentions_var(k, v)) return true;
  return false;
}

Pattern substitute(const Pattern& p, const std::map<int, Pattern>& s) {
  if (p.is_closed()) return p;
  switch (p.kind()) {
    case PatKind::kVar: {
      auto it = s.find(p.var());
      return it == s.end() ? p : it->second;
    }
    case PatKind::kPlus:
    case PatKind::kDot: {
      std::vector<Pattern> ks;
      ks.reserve(p.kids().size());
      for (auto& k : p.kids()) ks.push_back(substitute(k, s));
      return p.kind() == PatKind::kPlus ? Pattern::plus(std::move(ks)) : Pattern::dot(std::move(ks));
    }
    case PatKind::kStar:
      return Pattern::star(substitute(p.kids()[0], s));
    default:
      return p;
  }
}

Pattern residual(const Pattern& p, const std::string& m) {
  switch (p.kind()) {
    case PatKind::kZero:
    case PatKind::kOne:
      return Pattern::zero();
    case PatKind::kTag:
      return p.tag() == m ? Pattern::one() : Pattern::zero();
    case PatKind::kVar:
      throw PatternError("residual of pattern variable " + to_string(p) + " by " + m);
    case PatKind::kPlus: {
      std::vector<Pattern> ks;
      for (auto& k : p.kids()) ks.push_back(residual(k, m));
      return Pattern::plus(std::move(ks));
    }
    case PatKind::kDot: {
      // (E1 . ... . En)/m = sum_i E1 . ... . (Ei/m) . ... . En
      std::vector<Pattern> terms;
      const auto& ks = p.kids();
      for (size_t i = 0; i < ks.size(); ++i) {
        Pattern r = residual(ks[i], m);
        if (r.is_zero()) continue;
        std::vector<Pattern> prod;
        for (size_t j = 0; j < ks.size(); ++j) prod.push_back(i == j ? r : ks[j]);
        terms.push_back(Pattern::dot(std::move(prod)));
      }
      return Pattern::plus(std::move(terms));
    }
    case PatKind::kStar:
      return Pattern::dot(residual(p.kids()[0], m), p);
  }
  return Pattern::zero();
}

}  // namespace patc
