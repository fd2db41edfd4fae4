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

#include "patc/presburger.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace patc::presburger {

namespace {

int64_t checked_add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ResourceExhausted("integer overflow in decider");
  return r;
}

int64_t checked_mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ResourceExhausted("integer overflow in decider");
  return r;
}

int64_t gcd64(int64_t a, int64_t b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

int64_t lcm64(int64_t a, int64_t b) {
  if (a == 0 || b == 0) return a == 0 ? b : a;
  return checked_mul(a / gcd64(a, b), b < 0 ? -b : b);
}

int64_t floor_div(int64_t a, int64_t b) {
  int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int64_t ceil_div(int64_t a, int64_t b) { return -floor_div(-a, b); }

int64_t floor_mod(int64_t a, int64_t m) {
  int64_t r = a % m;
  return r < 0 ? r + m : r;
}

uint64_t mix(uint64_t h, uint64_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
}

uint64_t term_hash(const Term& t) {
  uint64_t h = static_cast<uint64_t>(t.k);
  for (auto& [v, c] : t.coef) h = mix(mix(h, static_cast<uint64_t>(v)), static_cast<uint64_t>(c));
  return h;
}

Formula node(FKind k, Term t, int64_t d, int var, std::vector<Formula> kids) {
  auto n = std::make_shared<FNode>();
  n->kind = k;
  n->t = std::move(t);
  n->d = d;
  n->var = var;
  n->kids = std::move(kids);
  uint64_t h = mix(static_cast<uint64_t>(k), term_hash(n->t));
  h = mix(mix(h, static_cast<uint64_t>(d)), static_cast<uint64_t>(var));
  for (auto& c : n->kids) h = mix(h, c->hash);
  n->hash = h;
  return n;
}

bool same(const Formula& a, const Formula& b) {
  if (a == b) return true;
  if (a->hash != b->hash || a->kind != b->kind || a->d != b->d || a->var != b->var) return false;
  if (a->t.k != b->t.k || a->t.coef != b->t.coef) return false;
  if (a->kids.size() != b->kids.size()) return false;
  for (size_t i = 0; i < a->kids.size(); ++i)
    if (!same(a->kids[i], b->kids[i])) return false;
  return true;
}

bool is_atom(FKind k) {
  return k == FKind::kLe || k == FKind::kEq || k == FKind::kNe || k == FKind::kDvd ||
         k == FKind::kNDvd;
}

// Normalised atom constructor; folds ground atoms to constants.
Formula atom(FKind k, Term t, int64_t d = 0) {
  switch (k) {
    case FKind::kLe: {
      if (t.ground()) return t.k <= 0 ? f_true() : f_false();
      int64_t g = 0;
      for (auto& [v, c] : t.coef) g = gcd64(g, c);
      if (g > 1) {
        for (auto& [v, c] : t.coef) c /= g;
        t.k = ceil_div(t.k, g);
      }
      return node(k, std::move(t), 0, -1, {});
    }
    case FKind::kEq:
    case FKind::kNe: {
      bool eq = k == FKind::kEq;
      if (t.ground()) return (t.k == 0) == eq ? f_true() : f_false();
      int64_t g = 0;
      for (auto& [v, c] : t.coef) g = gcd64(g, c);
      if (t.k % g != 0) return eq ? f_false() : f_true();
      bool flip = t.coef.begin()->second < 0;
      for (auto& [v, c] : t.coef) c = (flip ? -c : c) / g;
      t.k = (flip ? -t.k : t.k) / g;
      return node(k, std::move(t), 0, -1, {});
    }
    case FKind::kDvd:
    case FKind::kNDvd: {
      bool pos = k == FKind::kDvd;
      d = d < 0 ? -d : d;
      if (d == 0) return atom(pos ? FKind::kEq : FKind::kNe, std::move(t));
      // symmetric residues keep unit coefficients small
      auto red = [d](int64_t c) {
        int64_t r = floor_mod(c, d);
        return r > d / 2 ? r - d : r;
      };
      Term u;
      u.k = floor_mod(t.k, d);
      for (auto& [v, c] : t.coef) {
        int64_t r = red(c);
        if (r != 0) u.coef[v] = r;
      }
      if (u.ground()) return (u.k == 0) == pos ? f_true() : f_false();
      int64_t g = d;
      for (auto& [v, c] : u.coef) g = gcd64(g, c);
      g = gcd64(g, u.k);
      if (g > 1) {
        d /= g;
        for (auto& [v, c] : u.coef) c /= g;
        u.k /= g;
      }
      if (d == 1) return pos ? f_true() : f_false();
      return node(k, std::move(u), d, -1, {});
    }
    default:
      throw std::logic_error("atom(): not an atom kind");
  }
}

// ---- elimination context ----

struct Ctx {
  uint64_t atoms = 0;
  uint64_t limit;
  void tick(uint64_t n = 1) {
    atoms += n;
    if (atoms > limit)
      throw ResourceExhausted("quantifier elimination exceeded " + std::to_string(limit) + " atoms");
  }
};

Formula map_atoms(const Formula& f, const std::function<Formula(const Formula&)>& fn) {
  if (is_atom(f->kind)) return fn(f);
  if (f->kind == FKind::kAnd || f->kind == FKind::kOr) {
    std::vector<Formula> ks;
    ks.reserve(f->kids.size());
    for (auto& k : f->kids) ks.push_back(map_atoms(k, fn));
    return f->kind == FKind::kAnd ? f_and(std::move(ks)) : f_or(std::move(ks));
  }
  return f;
}

void for_atoms(const Formula& f, const std::function<void(const Formula&)>& fn) {
  if (is_atom(f->kind)) {
    fn(f);
    return;
  }
  for (auto& k : f->kids) for_atoms(k, fn);
}

bool mentions(const Formula& f, int x) {
  if (is_atom(f->kind)) return f->t.coef.count(x) > 0;
  for (auto& k : f->kids)
    if (mentions(k, x)) return true;
  return false;
}

Term subst_term(const Term& t, int x, const Term& e) {
  int64_t c = t.at(x);
  if (c == 0) return t;
  Term r = t;
  r.coef.erase(x);
  for (auto& [v, ce] : e.coef) {
    int64_t nc = checked_add(r.at(v), checked_mul(c, ce));
    if (nc == 0) {
      r.coef.erase(v);
    } else {
      r.coef[v] = nc;
    }
  }
  r.k = checked_add(r.k, checked_mul(c, e.k));
  return r;
}

Formula subst(const Formula& f, int x, const Term& e, Ctx& ctx) {
  return map_atoms(f, [&](const Formula& a) {
    if (!a->t.coef.count(x)) return a;
    ctx.tick();
    return atom(a->kind, subst_term(a->t, x, e), a->d);
  });
}

Formula negate_nnf(const Formula& f) {
  switch (f->kind) {
    case FKind::kTrue: return f_false();
    case FKind::kFalse: return f_true();
    case FKind::kLe: {
      // not (t <= 0)  <=>  -t + 1 <= 0
      Term t = (-1) * f->t;
      t.k = checked_add(t.k, 1);
      return atom(FKind::kLe, std::move(t));
    }
    case FKind::kEq: return atom(FKind::kNe, f->t);
    case FKind::kNe: return atom(FKind::kEq, f->t);
    case FKind::kDvd: return atom(FKind::kNDvd, f->t, f->d);
    case FKind::kNDvd: return atom(FKind::kDvd, f->t, f->d);
    case FKind::kAnd:
    case FKind::kOr: {
      std::vector<Formula> ks;
      for (auto& k : f->kids) ks.push_back(negate_nnf(k));
      return f->kind == FKind::kAnd ? f_or(std::move(ks)) : f_and(std::move(ks));
    }
    default:
      throw std::logic_error("negate_nnf on quantified formula");
  }
}

// Scales every x-atom so the coefficient of x is ±1, reinterpreting x as
// l*x; adds l | x. Returns the formula and l.
Formula unit_coefficients(const Formula& phi, int x, Ctx& ctx) {
  int64_t l = 1;
  for_atoms(phi, [&](const Formula& a) {
    int64_t c = a->t.at(x);
    if (c != 0) l = lcm64(l, c);
  });
  if (l == 1) return phi;
  Formula scaled = map_atoms(phi, [&](const Formula& a) -> Formula {
    int64_t c = a->t.at(x);
    if (c == 0) return a;
    ctx.tick();
    int64_t m = l / (c < 0 ? -c : c);
    Term t = m * a->t;
    t.coef[x] = c < 0 ? -1 : 1;
    if (a->kind == FKind::kDvd || a->kind == FKind::kNDvd)
      return atom(a->kind, std::move(t), checked_mul(a->d, m));
    // bypass gcd normalisation: coefficient of x is already ±1
    return atom(a->kind, std::move(t));
  });
  return f_and({scaled, atom(FKind::kDvd, Term::var(x), l)});
}

// Looks for a top-level conjunct x*s + r = 0 with |s| == 1; substitutes.
std::optional<Formula> eliminate_by_equality(const Formula& phi, int x, Ctx& ctx) {
  std::vector<Formula> conj = phi->kind == FKind::kAnd ? phi->kids : std::vector<Formula>{phi};
  for (size_t i = 0; i < conj.size(); ++i) {
    const auto& a = conj[i];
    if (a->kind != FKind::kEq) continue;
    int64_t s = a->t.at(x);
    if (s != 1 && s != -1) continue;
    // s x + r = 0  =>  x = -s r
    Term r = a->t;
    r.coef.erase(x);
    Term e = (-s) * r;
    std::vector<Formula> rest;
    for (size_t j = 0; j < conj.size(); ++j)
      if (j != i) rest.push_back(subst(conj[j], x, e, ctx));
    return f_and(std::move(rest));
  }
  return std::nullopt;
}

Formula cooper(int x, const Formula& input, Ctx& ctx) {
  if (auto r = eliminate_by_equality(input, x, ctx)) return *r;
  Formula phi = unit_coefficients(input, x, ctx);
  if (auto r = eliminate_by_equality(phi, x, ctx)) return *r;

  std::vector<Term> lower, upper;
  int64_t delta = 1;
  for_atoms(phi, [&](const Formula& a) {
    int64_t s = a->t.at(x);
    if (s == 0) return;
    Term r = a->t;
    r.coef.erase(x);
    switch (a->kind) {
      case FKind::kLe: {
        // s = 1: x <= -r ; s = -1: x >= r
        if (s > 0) {
          Term ub = (-1) * r;
          ub.k = checked_add(ub.k, 1);
          upper.push_back(ub);
        } else {
          Term lb = r;
          lb.k = checked_add(lb.k, -1);
          lower.push_back(lb);
        }
        break;
      }
      case FKind::kEq: {
        Term e = (-s) * r;
        Term lb = e, ub = e;
        lb.k = checked_add(lb.k, -1);
        ub.k = checked_add(ub.k, 1);
        lower.push_back(lb);
        upper.push_back(ub);
        break;
      }
      case FKind::kNe: {
        Term e = (-s) * r;
        lower.push_back(e);
        upper.push_back(e);
        break;
      }
      case FKind::kDvd:
      case FKind::kNDvd:
        delta = lcm64(delta, a->d);
        break;
      default:
        break;
    }
  });
  auto dedupe = [](std::vector<Term>& ts) {
    std::sort(ts.begin(), ts.end(), [](const Term& a, const Term& b) {
      return a.coef != b.coef ? a.coef < b.coef : a.k < b.k;
    });
    ts.erase(std::unique(ts.begin(), ts.end(),
                         [](const Term& a, const Term& b) { return a.coef == b.coef && a.k == b.k; }),
             ts.end());
  };
  dedupe(lower);
  dedupe(upper);
  bool use_lower = lower.size() <= upper.size();

  // phi at -infinity (lower side) or +infinity (upper side)
  Formula inf = map_atoms(phi, [&](const Formula& a) -> Formula {
    int64_t s = a->t.at(x);
    if (s == 0) return a;
    switch (a->kind) {
      case FKind::kLe: return (s > 0) == use_lower ? f_true() : f_false();
      case FKind::kEq: return f_false();
      case FKind::kNe: return f_true();
      default: return a;
    }
  });

  std::vector<Formula> out;
  for (int64_t j = 1; j <= delta; ++j) {
    out.push_back(subst(inf, x, Term::constant(use_lower ? j : -j), ctx));
    if (out.back()->kind == FKind::kTrue) return f_true();
  }
  for (auto& b : use_lower ? lower : upper) {
    for (int64_t j = 1; j <= delta; ++j) {
      Term e = b;
      e.k = checked_add(e.k, use_lower ? j : -j);
      out.push_back(subst(phi, x, e, ctx));
      if (out.back()->kind == FKind::kTrue) return f_true();
    }
  }
  return f_or(std::move(out));
}

Formula exists_elim(int x, const Formula& phi, Ctx& ctx) {
  if (!mentions(phi, x)) return phi;
  if (phi->kind == FKind::kOr) {
    std::vector<Formula> ks;
    for (auto& k : phi->kids) {
      ks.push_back(exists_elim(x, k, ctx));
      if (ks.back()->kind == FKind::kTrue) return f_true();
    }
    return f_or(std::move(ks));
  }
  if (phi->kind == FKind::kAnd) {
    std::vector<Formula> with, without;
    for (auto& k : phi->kids) (mentions(k, x) ? with : without).push_back(k);
    without.push_back(cooper(x, f_and(std::move(with)), ctx));
    return f_and(std::move(without));
  }
  return cooper(x, phi, ctx);
}

Formula qe(const Formula& f, Ctx& ctx) {
  switch (f->kind) {
    case FKind::kAnd:
    case FKind::kOr: {
      std::vector<Formula> ks;
      for (auto& k : f->kids) ks.push_back(qe(k, ctx));
      return f->kind == FKind::kAnd ? f_and(std::move(ks)) : f_or(std::move(ks));
    }
    case FKind::kNot:
      return negate_nnf(qe(f->kids[0], ctx));
    case FKind::kExists:
      return exists_elim(f->var, qe(f->kids[0], ctx), ctx);
    case FKind::kForall:
      return negate_nnf(exists_elim(f->var, negate_nnf(qe(f->kids[0], ctx)), ctx));
    default:
      return f;
  }
}

void free_vars(const Formula& f, std::set<int>& bound, std::set<int>& out) {
  if (is_atom(f->kind)) {
    for (auto& [v, c] : f->t.coef)
      if (!bound.count(v)) out.insert(v);
    return;
  }
  if (f->kind == FKind::kExists || f->kind == FKind::kForall) {
    bool fresh = bound.insert(f->var).second;
    free_vars(f->kids[0], bound, out);
    if (fresh) bound.erase(f->var);
    return;
  }
  for (auto& k : f->kids) free_vars(k, bound, out);
}

}  // namespace

// ---- terms ----

Term Term::var(int v, int64_t c) {
  Term t;
  if (c != 0) t.coef[v] = c;
  return t;
}

Term Term::constant(int64_t c) {
  Term t;
  t.k = c;
  return t;
}

int64_t Term::at(int v) const {
  auto it = coef.find(v);
  return it == coef.end() ? 0 : it->second;
}

Term operator+(const Term& a, const Term& b) {
  Term r = a;
  for (auto& [v, c] : b.coef) {
    int64_t n = checked_add(r.at(v), c);
    if (n == 0) {
      r.coef.erase(v);
    } else {
      r.coef[v] = n;
    }
  }
  r.k = checked_add(r.k, b.k);
  return r;
}

Term operator*(int64_t m, const Term& a) {
  Term r;
  if (m == 0) return r;
  for (auto& [v, c] : a.coef) r.coef[v] = checked_mul(m, c);
  r.k = checked_mul(m, a.k);
  return r;
}

Term operator-(const Term& a, const Term& b) { return a + (-1) * b; }

// ---- formula builders ----

Formula f_true() {
  static const Formula t = node(FKind::kTrue, {}, 0, -1, {});
  return t;
}

Formula f_false() {
  static const Formula f = node(FKind::kFalse, {}, 0, -1, {});
  return f;
}

Formula f_le(const Term& a, const Term& b) { return atom(FKind::kLe, a - b); }
Formula f_lt(const Term& a, const Term& b) { return atom(FKind::kLe, a - b + Term::constant(1)); }
Formula f_ge(const Term& a, const Term& b) { return f_le(b, a); }
Formula f_eq(const Term& a, const Term& b) { return atom(FKind::kEq, a - b); }
Formula f_ne(const Term& a, const Term& b) { return atom(FKind::kNe, a - b); }
Formula f_dvd(int64_t d, const Term& t) { return atom(FKind::kDvd, t, d); }

namespace {

Formula junction(FKind k, std::vector<Formula> fs) {
  FKind unit = k == FKind::kAnd ? FKind::kTrue : FKind::kFalse;
  FKind absorb = k == FKind::kAnd ? FKind::kFalse : FKind::kTrue;
  std::vector<Formula> flat;
  for (auto& f : fs) {
    if (f->kind == absorb) return f;
    if (f->kind == unit) continue;
    if (f->kind == k) {
      flat.insert(flat.end(), f->kids.begin(), f->kids.end());
    } else {
      flat.push_back(f);
    }
  }
  std::vector<Formula> uniq;
  for (auto& f : flat) {
    bool dup = false;
    for (auto& g : uniq) {
      if (same(f, g)) {
        dup = true;
        break;
      }
    }
    if (!dup) uniq.push_back(f);
  }
  if (uniq.empty()) return k == FKind::kAnd ? f_true() : f_false();
  if (uniq.size() == 1) return uniq[0];
  return node(k, {}, 0, -1, std::move(uniq));
}

}  // namespace

Formula f_and(std::vector<Formula> fs) { return junction(FKind::kAnd, std::move(fs)); }
Formula f_or(std::vector<Formula> fs) { return junction(FKind::kOr, std::move(fs)); }

Formula f_not(const Formula& f) {
  if (f->kind == FKind::kTrue) return f_false();
  if (f->kind == FKind::kFalse) return f_true();
  if (f->kind == FKind::kNot) return f->kids[0];
  return node(FKind::kNot, {}, 0, -1, {f});
}

Formula f_implies(const Formula& a, const Formula& b) { return f_or({f_not(a), b}); }
Formula f_exists(int v, const Formula& body) { return node(FKind::kExists, {}, 0, v, {body}); }
Formula f_forall(int v, const Formula& body) { return node(FKind::kForall, {}, 0, v, {body}); }

bool is_sentence(const Formula& f) {
  std::set<int> bound, out;
  free_vars(f, bound, out);
  return out.empty();
}

DecideOptions default_decide_options() {
  DecideOptions o;
  if (const char* env = std::getenv("PATC_SOLVER_ATOM_LIMIT")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) o.atom_limit = v;
  }
  return o;
}

Formula eliminate(const Formula& f, const DecideOptions& opts) {
  Ctx ctx{0, opts.atom_limit};
  return qe(f, ctx);
}

bool decide(const Formula& sentence, const DecideOptions& opts) {
  if (!is_sentence(sentence)) throw std::invalid_argument("decide: formula has free variables");
  // conjunctions are decided piecewise so cheap false parts short-circuit
  if (sentence->kind == FKind::kAnd) {
    for (auto& k : sentence->kids)
      if (!decide(k, opts)) return false;
    return true;
  }
  Formula r = eliminate(sentence, opts);
  if (r->kind == FKind::kTrue) return true;
  if (r->kind == FKind::kFalse) return false;
  throw std::logic_error("decide: elimination left a non-ground formula: " + to_string(r));
}

// ---- printing ----

namespace {

std::string term_str(const Term& t) {
  std::ostringstream os;
  bool first = true;
  for (auto& [v, c] : t.coef) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    int64_t a = c < 0 ? -c : c;
    if (a != 1) os << a << "*";
    os << "x" << v;
    first = false;
  }
  if (first) {
    os << t.k;
  } else if (t.k != 0) {
    os << (t.k < 0 ? " - " : " + ") << (t.k < 0 ? -t.k : t.k);
  }
  return os.str();
}

void print_formula(const Formula& f, std::ostream& os) {
  switch (f->kind) {
    case FKind::kTrue: os << "true"; return;
    case FKind::kFalse: os << "false"; return;
    case FKind::kLe: os << term_str(f->t) << " <= 0"; return;
    case FKind::kEq: os << term_str(f->t) << " = 0"; return;
    case FKind::kNe: os << term_str(f->t) << " != 0"; return;
    case FKind::kDvd: os << f->d << " | " << term_str(f->t); return;
    case FKind::kNDvd: os << "!(" << f->d << " | " << term_str(f->t) << ")"; return;
    case FKind::kAnd:
    case FKind::kOr:
      os << "(";
      for (size_t i = 0; i < f->kids.size(); ++i) {
        if (i) os << (f->kind == FKind::kAnd ? " & " : " | ");
        print_formula(f->kids[i], os);
      }
      os << ")";
      return;
    case FKind::kNot:
      os << "!";
      print_formula(f->kids[0], os);
      return;
    case FKind::kExists:
    case FKind::kForall:
      os << (f->kind == FKind::kExists ? "E" : "A") << " x" << f->var << ". ";
      print_formula(f->kids[0], os);
      return;
  }
}

std::string smt_int(int64_t v) { return v < 0 ? "(- " + std::to_string(-v) + ")" : std::to_string(v); }

std::string smt_term(const Term& t) {
  std::vector<std::string> parts;
  for (auto& [v, c] : t.coef) {
    std::string x = "x" + std::to_string(v);
    parts.push_back(c == 1 ? x : "(* " + smt_int(c) + " " + x + ")");
  }
  if (t.k != 0 || parts.empty()) parts.push_back(smt_int(t.k));
  if (parts.size() == 1) return parts[0];
  std::string s = "(+";
  for (auto& p : parts) s += " " + p;
  return s + ")";
}

void smt_formula(const Formula& f, std::ostream& os) {
  switch (f->kind) {
    case FKind::kTrue: os << "true"; return;
    case FKind::kFalse: os << "false"; return;
    case FKind::kLe: os << "(<= " << smt_term(f->t) << " 0)"; return;
    case FKind::kEq: os << "(= " << smt_term(f->t) << " 0)"; return;
    case FKind::kNe: os << "(not (= " << smt_term(f->t) << " 0))"; return;
    case FKind::kDvd: os << "(= (mod " << smt_term(f->t) << " " << f->d << ") 0)"; return;
    case FKind::kNDvd: os << "(not (= (mod " << smt_term(f->t) << " " << f->d << ") 0))"; return;
    case FKind::kAnd:
    case FKind::kOr:
      os << (f->kind == FKind::kAnd ? "(and" : "(or");
      for (auto& k : f->kids) {
        os << " ";
        smt_formula(k, os);
      }
      os << ")";
      return;
    case FKind::kNot:
      os << "(not ";
      smt_formula(f->kids[0], os);
      os << ")";
      return;
    case FKind::kExists:
    case FKind::kForall:
      os << (f->kind == FKind::kExists ? "(exists" : "(forall") << " ((x" << f->var << " Int)) ";
      smt_formula(f->kids[0], os);
      os << ")";
      return;
  }
}

}  // namespace

std::string to_string(const Formula& f) {
  std::ostringstream os;
  print_formula(f, os);
  return os.str();
}

std::string to_smtlib(const Formula& sentence, const std::string& comment) {
  std::ostringstream os;
  if (!comment.empty()) {
    std::istringstream lines(comment);
    std::string line;
    while (std::getline(lines, line)) os << "; " << line << "\n";
  }
  os << "(set-logic LIA)\n(assert (not ";
  smt_formula(sentence, os);
  os << "))\n(check-sat)\n";
  return os.str();
}

// ---- inclusion ----

namespace {

Formula component_sentence(const LinearSet& a, const SemilinearSet& b) {
  const size_t dim = a.base.size();
  int next = 0;
  std::vector<int> lam;
  for (size_t i = 0; i < a.periods.size(); ++i) lam.push_back(next++);
  // left-hand vector as terms over lambda
  std::vector<Term> lhs(dim);
  for (size_t d = 0; d < dim; ++d) {
    lhs[d] = Term::constant(a.base[d]);
    for (size_t i = 0; i < a.periods.size(); ++i)
      if (a.periods[i][d]) lhs[d] = lhs[d] + Term::var(lam[i], a.periods[i][d]);
  }
  std::vector<Formula> alts;
  for (auto& c : b.components) {
    std::vector<int> mu;
    for (size_t j = 0; j < c.periods.size(); ++j) mu.push_back(next++);
    std::vector<Formula> conj;
    for (int m : mu) conj.push_back(f_ge(Term::var(m), Term::constant(0)));
    for (size_t d = 0; d < dim; ++d) {
      Term rhs = Term::constant(c.base[d]);
      for (size_t j = 0; j < c.periods.size(); ++j)
        if (c.periods[j][d]) rhs = rhs + Term::var(mu[j], c.periods[j][d]);
      conj.push_back(f_eq(lhs[d], rhs));
    }
    Formula body = f_and(std::move(conj));
    for (size_t j = mu.size(); j-- > 0;) body = f_exists(mu[j], body);
    alts.push_back(body);
  }
  std::vector<Formula> guards;
  for (int l : lam) guards.push_back(f_ge(Term::var(l), Term::constant(0)));
  Formula body = f_implies(f_and(std::move(guards)), f_or(std::move(alts)));
  for (size_t i = lam.size(); i-- > 0;) body = f_forall(lam[i], body);
  return body;
}

// Small members of a linear set: base plus up to two copies of each period
// (bounded enumeration).
std::vector<Vec> sample_members(const LinearSet& a) {
  std::vector<Vec> out{a.base};
  const size_t k = a.periods.size();
  if (k <= 5) {
    std::vector<int> cnt(k, 0);
    while (true) {
      size_t i = 0;
      while (i < k && cnt[i] == 2) cnt[i++] = 0;
      if (i == k) break;
      ++cnt[i];
      Vec v = a.base;
      for (size_t p = 0; p < k; ++p)
        for (size_t d = 0; d < v.size(); ++d) v[d] += cnt[p] * a.periods[p][d];
      out.push_back(std::move(v));
    }
  } else {
    for (auto& p : a.periods) {
      for (int m = 1; m <= 2; ++m) {
        Vec v = a.base;
        for (size_t d = 0; d < v.size(); ++d) v[d] += m * p[d];
        out.push_back(std::move(v));
      }
    }
  }
  return out;
}

bool cone_contains(const LinearSet& outer, const LinearSet& inner) {
  LinearSet zero_based = make_linear(Vec(outer.base.size(), 0), outer.periods);
  if (!member(outer, inner.base)) return false;
  for (auto& p : inner.periods)
    if (!member(zero_based, p)) return false;
  return true;
}

}  // namespace

Formula inclusion_sentence(const SemilinearSet& a, const SemilinearSet& b) {
  if (a.alphabet != b.alphabet) throw AlphabetMismatch("semilinear sets over different alphabets");
  std::vector<Formula> parts;
  for (auto& c : a.components) parts.push_back(component_sentence(c, b));
  return f_and(std::move(parts));
}

bool sls_inclusion(const SemilinearSet& a, const SemilinearSet& b, const DecideOptions& opts) {
  if (a.alphabet != b.alphabet) throw AlphabetMismatch("semilinear sets over different alphabets");
  for (auto& c : a.components) {
    bool done = false;
    for (auto& d : b.components) {
      if (cone_contains(d, c)) {
        done = true;
        break;
      }
    }
    if (done) continue;
    if (c.periods.empty()) {
      if (!member(b, c.base)) return false;
      continue;
    }
    for (auto& v : sample_members(c))
      if (!member(b, v)) return false;
    if (!decide(component_sentence(c, b), opts)) return false;
  }
  return true;
}

}  // namespace patc::presburger
