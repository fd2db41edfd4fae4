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

#include "patc/solver.hpp"

#include <algorithm>
#include <set>

#include "patc/parallel.hpp"
#include "patc/presburger.hpp"
#include "patc/semantics.hpp"

namespace patc {

using types::Constraint;
using types::Constraints;

std::pair<std::map<int, Pattern>, Constraints> group_bounds(const Constraints& cs) {
  std::map<int, std::vector<Pattern>> acc;
  Constraints rest;
  for (auto& c : cs) {
    if (c.rhs.kind() == PatKind::kVar) {
      acc[c.rhs.var()].push_back(c.lhs);
    } else {
      rest.push_back(c);
    }
  }
  std::map<int, Pattern> bounds;
  for (auto& [v, ps] : acc) bounds.emplace(v, Pattern::plus(ps));
  return {bounds, rest};
}

Pattern derivative(const Pattern& p, int var) {
  switch (p.kind()) {
    case PatKind::kZero:
    case PatKind::kOne:
    case PatKind::kTag:
      return Pattern::zero();
    case PatKind::kVar:
      return p.var() == var ? Pattern::one() : Pattern::zero();
    case PatKind::kPlus: {
      std::vector<Pattern> ds;
      for (auto& k : p.kids()) ds.push_back(derivative(k, var));
      return Pattern::plus(ds);
    }
    case PatKind::kDot: {
      const auto& ks = p.kids();
      std::vector<Pattern> terms;
      for (size_t i = 0; i < ks.size(); ++i) {
        if (!mentions_var(ks[i], var)) continue;
        std::vector<Pattern> prod{derivative(ks[i], var)};
        for (size_t j = 0; j < ks.size(); ++j)
          if (j != i) prod.push_back(ks[j]);
        terms.push_back(Pattern::dot(prod));
      }
      return Pattern::plus(terms);
    }
    case PatKind::kStar:
      return Pattern::dot(derivative(p.kids()[0], var), p);
  }
  return Pattern::zero();
}

Substitution close_form(const std::map<int, Pattern>& bounds) {
  std::map<int, Pattern> f = bounds;
  std::set<int> remaining;
  for (auto& [v, _] : bounds) remaining.insert(v);
  Substitution sol;
  std::vector<int> order;
  while (!remaining.empty()) {
    // prefer a variable whose bound only mentions itself and solved ones
    int pick = *remaining.begin();
    for (int v : remaining) {
      auto vs = vars_of(f[v]);
      bool ready = std::none_of(vs.begin(), vs.end(), [&](int w) { return w != v && remaining.count(w); });
      if (ready) {
        pick = v;
        break;
      }
    }
    const Pattern& g = f[pick];
    Pattern closed = g;
    if (mentions_var(g, pick)) {
      Pattern g0 = substitute(g, {{pick, Pattern::zero()}});
      Pattern d = substitute(derivative(g, pick), {{pick, g0}});
      closed = Pattern::dot(Pattern::star(d), g0);
    }
    sol[pick] = closed;
    remaining.erase(pick);
    order.push_back(pick);
    for (int v : remaining) f[v] = substitute(f[v], {{pick, closed}});
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) sol[*it] = substitute(sol[*it], sol);
  return sol;
}

bool check_usable(const Substitution& s) {
  return std::none_of(s.begin(), s.end(), [](const auto& kv) { return is_empty(kv.second); });
}

namespace {

Unsat make_unsat(Unsat::Kind kind, const Constraint& c, const Substitution& s, std::string msg) {
  Unsat u;
  u.kind = kind;
  u.constraint = c;
  u.lhs = substitute(c.lhs, s);
  u.rhs = substitute(c.rhs, s);
  u.message = std::move(msg);
  if (kind == Unsat::Kind::kUnsat && u.lhs.is_closed() && u.rhs.is_closed()) {
    try {
      u.counterexample = counterexample(u.lhs, u.rhs, 8);
    } catch (const std::exception&) {
    }
  }
  return u;
}

// rhs / ρ for a product ρ of tags; nullopt when ρ is anything else.
std::optional<Pattern> divide(const Pattern& rhs, const Pattern& rho) {
  std::vector<Pattern> fs = rho.kind() == PatKind::kDot ? rho.kids() : std::vector<Pattern>{rho};
  Pattern out = rhs;
  for (auto& f : fs) {
    if (f.is_one()) continue;
    if (f.kind() != PatKind::kTag) return std::nullopt;
    out = residual(out, f.tag());
  }
  return out;
}

class Search {
 public:
  Search(const Constraints& rs, std::vector<int> fv, int budget) : rs_(rs), fv_(std::move(fv)), budget_(budget) {
    std::map<int, size_t> pos;
    for (size_t i = 0; i < fv_.size(); ++i) pos[fv_[i]] = i;
    at_.resize(fv_.size());
    for (size_t k = 0; k < rs_.size(); ++k) {
      auto a = vars_of(rs_[k].lhs);
      auto b = vars_of(rs_[k].rhs);
      a.insert(b.begin(), b.end());
      if (a.empty()) continue;
      size_t last = 0;
      for (int v : a) last = std::max(last, pos.at(v));
      at_[last].push_back(k);
    }
  }

  bool run() { return dfs(0); }
  const Substitution& assignment() const { return asg_; }

  std::vector<Pattern> candidates(int u) const {
    std::vector<Pattern> out{Pattern::one()};
    auto add = [&](const Pattern& p) {
      if (p.is_closed() && std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    };
    for (auto& c : rs_) {
      Pattern rhs = substitute(c.rhs, asg_);
      if (!rhs.is_closed()) continue;
      if (c.lhs.kind() == PatKind::kVar && c.lhs.var() == u) {
        add(rhs);
      } else if (c.lhs.kind() == PatKind::kDot) {
        std::vector<Pattern> others;
        int hits = 0;
        for (auto& k : c.lhs.kids()) {
          if (k.kind() == PatKind::kVar && k.var() == u) {
            ++hits;
          } else {
            others.push_back(substitute(k, asg_));
          }
        }
        if (hits != 1) continue;
        Pattern rho = Pattern::dot(others);
        if (!rho.is_closed()) continue;
        if (auto q = divide(rhs, rho)) add(*q);
      }
    }
    return out;
  }

 private:
  bool dfs(size_t i) {
    if (i == fv_.size()) return true;
    for (auto& cand : candidates(fv_[i])) {
      if (budget_ <= 0) return false;
      asg_[fv_[i]] = cand;
      bool ok = true;
      for (size_t k : at_[i]) {
        --budget_;
        if (!includes(substitute(rs_[k].lhs, asg_), substitute(rs_[k].rhs, asg_))) {
          ok = false;
          break;
        }
      }
      if (ok && dfs(i + 1)) return true;
    }
    asg_.erase(fv_[i]);
    return false;
  }

  const Constraints& rs_;
  std::vector<int> fv_;
  int budget_;
  std::vector<std::vector<size_t>> at_;  // constraints that close at position i
  Substitution asg_;
};

}  // namespace

SolveResult solve(const Constraints& cs, const SolveOptions& opt) {
  SolveResult out;
  auto [bounds, residual_cs] = group_bounds(cs);
  Substitution base = close_form(bounds);

  std::set<int> all;
  for (auto& c : cs) {
    auto a = vars_of(c.lhs);
    auto b = vars_of(c.rhs);
    all.insert(a.begin(), a.end());
    all.insert(b.begin(), b.end());
  }
  std::vector<int> fv;
  for (int v : all)
    if (!bounds.count(v)) fv.push_back(v);

  Constraints rs;
  for (auto& c : residual_cs) rs.push_back({substitute(c.lhs, base), substitute(c.rhs, base), c.origin});

  Substitution full;
  const Constraint* current = nullptr;
  try {
    for (size_t k = 0; k < rs.size(); ++k) {
      current = &residual_cs[k];
      if (rs[k].lhs.is_closed() && rs[k].rhs.is_closed() && !includes(rs[k].lhs, rs[k].rhs)) {
        out.unsat = make_unsat(Unsat::Kind::kUnsat, residual_cs[k], base, "pattern constraint does not hold");
        return out;
      }
    }
    current = nullptr;
    Search search(rs, fv, opt.max_candidates);
    Substitution asg;
    if (search.run()) {
      asg = search.assignment();
    } else {
      for (int v : fv) asg[v] = Pattern::one();
    }
    for (auto& [v, p] : base) full[v] = substitute(p, asg);
    for (auto& [v, p] : asg) full[v] = p;

    std::vector<par::Query> qs;
    for (auto& c : cs) qs.emplace_back(substitute(c.lhs, full), substitute(c.rhs, full));
    std::vector<char> verdict;
    try {
      verdict = opt.parallel ? par::batch_includes(qs) : par::batch_includes_serial(qs);
    } catch (const presburger::ResourceExhausted&) {
      verdict.clear();
      for (size_t k = 0; k < qs.size(); ++k) {
        current = &cs[k];
        verdict.push_back(includes(qs[k].first, qs[k].second) ? 1 : 0);
      }
      current = nullptr;
    }
    for (size_t k = 0; k < cs.size(); ++k) {
      if (!verdict[k]) {
        out.unsat = make_unsat(Unsat::Kind::kUnsat, cs[k], full, "pattern constraint does not hold");
        return out;
      }
    }
    for (auto& [v, p] : full) {
      if (!is_empty(p)) continue;
      for (auto& c : cs) {
        if (mentions_var(c.lhs, v) || mentions_var(c.rhs, v)) {
          out.unsat = make_unsat(Unsat::Kind::kUnusable, c, full,
                                 "no usable solution: " + to_string(Pattern::var(v)) + " can only be 0");
          return out;
        }
      }
    }
  } catch (const presburger::ResourceExhausted& e) {
    Constraint c = current ? *current : (cs.empty() ? Constraint{} : cs.front());
    out.unsat = make_unsat(Unsat::Kind::kResource, c, full.empty() ? base : full,
                           std::string("decision procedure gave up: ") + e.what());
    return out;
  }
  out.solution = std::move(full);
  return out;
}

Diagnostic unsat_diagnostic(const Unsat& u, const std::string& file) {
  Diagnostic d;
  d.phase = Phase::kSolve;
  d.file = file;
  d.span = u.constraint.origin.span;
  d.rule = u.constraint.origin.rule;
  d.message = u.message;
  d.constraint = to_string(u.lhs) + " ⊑ " + to_string(u.rhs);
  d.notes.push_back("generated as " + types::to_string(u.constraint));
  if (u.counterexample) {
    std::string ms;
    for (auto& m : *u.counterexample) ms += (ms.empty() ? "" : ", ") + m;
    d.notes.push_back("counterexample: the mailbox may hold {" + ms + "}");
  }
  return d;
}

}  // namespace patc
