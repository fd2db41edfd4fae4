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

#include "patc/parser.hpp"

#include <fmt/format.h>

#include <cctype>
#include <set>

namespace patc {

namespace ast {

ExprP mk(EK k, Span s, std::vector<ExprP> kids) {
  auto e = std::make_shared<Expr>();
  e->k = k;
  e->span = s;
  e->kids = std::move(kids);
  return e;
}

TypeP mk_type(TK k, Span s) {
  auto t = std::make_shared<Type>();
  t->k = k;
  t->span = s;
  return t;
}

}  // namespace ast

namespace {

using namespace ast;

enum class Tok { kLid, kUid, kInt, kStr, kSym, kEnd };

struct Token {
  Tok kind;
  std::string text;
  Span span;
  int64_t ival = 0;
};

const std::set<std::string> kKeywords = {
    "interface", "def", "let", "in", "case", "inl", "inr", "if", "else", "spawn", "new", "guard",
    "receive", "from", "free", "fail", "fun", "linfun", "true", "false"};

[[noreturn]] void syntax_error(Span s, const std::string& msg) {
  fail_at(Phase::kParse, s, "syntax", msg);
}

std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto adv = [&](size_t n = 1) {
    for (size_t j = 0; j < n && i < src.size(); ++j, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else if ((static_cast<unsigned char>(src[i]) & 0xC0) != 0x80) {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') adv();
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      adv();
      continue;
    }
    Span sp{line, col};
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      std::string w = src.substr(i, j - i);
      Tok k = std::isupper(static_cast<unsigned char>(c)) ? Tok::kUid : Tok::kLid;
      out.push_back({k, w, sp});
      adv(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      std::string w = src.substr(i, j - i);
      Token t{Tok::kInt, w, sp};
      try {
        t.ival = std::stoll(w);
      } catch (const std::out_of_range&) {
        fail_at(Phase::kParse, sp, "lexical", "integer literal out of range: " + w);
      }
      out.push_back(t);
      adv(j - i);
      continue;
    }
    if (c == '"') {
      std::string s;
      adv();
      while (true) {
        if (i >= src.size() || src[i] == '\n') fail_at(Phase::kParse, sp, "lexical", "unterminated string literal");
        if (src[i] == '"') {
          adv();
          break;
        }
        if (src[i] == '\\') {
          if (i + 1 >= src.size()) fail_at(Phase::kParse, sp, "lexical", "unterminated string literal");
          char e = src[i + 1];
          if (e == 'n') {
            s += '\n';
          } else if (e == '"') {
            s += '"';
          } else {
            fail_at(Phase::kParse, Span{line, col}, "lexical", fmt::format("unknown escape \\{}", e));
          }
          adv(2);
          continue;
        }
        s += src[i];
        adv();
      }
      out.push_back({Tok::kStr, s, sp});
      continue;
    }
    // unicode arrow
    if (src.compare(i, 3, "\xE2\x86\x92") == 0) {
      out.push_back({Tok::kSym, "->", sp});
      adv(3);
      continue;
    }
    static const char* two[] = {"->", "==", "!=", "<=", ">=", "&&", "||"};
    bool matched = false;
    for (auto* t : two) {
      if (src.compare(i, 2, t) == 0) {
        out.push_back({Tok::kSym, t, sp});
        adv(2);
        matched = true;
        break;
      }
    }
    if (matched) continue;
    if (std::string("(){}[],:;.+-*/!?=<>").find(c) != std::string::npos) {
      out.push_back({Tok::kSym, std::string(1, c), sp});
      adv();
      continue;
    }
    fail_at(Phase::kParse, sp, "lexical", fmt::format("unexpected character '{}'", c));
  }
  out.push_back({Tok::kEnd, "<end of input>", Span{line, col}});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Program program() {
    Program p;
    std::set<std::string> ifaces, defs;
    while (true) {
      if (is_kw("interface")) {
        auto d = interface_decl();
        if (!ifaces.insert(d.name).second)
          fail_at(Phase::kParse, d.span, "duplicate", "duplicate interface " + d.name);
        p.interfaces.push_back(std::move(d));
      } else if (is_kw("def")) {
        auto d = def_decl();
        if (!defs.insert(d.name).second) fail_at(Phase::kParse, d.span, "duplicate", "duplicate definition " + d.name);
        p.defs.push_back(std::move(d));
      } else {
        break;
      }
    }
    if (peek().kind != Tok::kEnd) p.body = expr();
    if (peek().kind != Tok::kEnd) unexpected("end of input");
    return p;
  }

  Pattern pattern_only() {
    Pattern p = pattern();
    if (peek().kind != Tok::kEnd) unexpected("end of pattern");
    return p;
  }

 private:
  std::vector<Token> toks_;
  size_t pos_ = 0;

  const Token& peek(size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  Token next() {
    Token t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }
  bool is_sym(const std::string& s, size_t ahead = 0) const {
    return peek(ahead).kind == Tok::kSym && peek(ahead).text == s;
  }
  bool is_kw(const std::string& s, size_t ahead = 0) const {
    return peek(ahead).kind == Tok::kLid && peek(ahead).text == s;
  }
  [[noreturn]] void unexpected(const std::string& wanted) {
    syntax_error(peek().span, fmt::format("expected {}, found '{}'", wanted, peek().text));
  }
  Token expect_sym(const std::string& s) {
    if (!is_sym(s)) unexpected("'" + s + "'");
    return next();
  }
  Token expect_kw(const std::string& s) {
    if (!is_kw(s)) unexpected("'" + s + "'");
    return next();
  }
  std::string lid() {
    if (peek().kind != Tok::kLid || kKeywords.count(peek().text)) unexpected("identifier");
    return next().text;
  }
  std::string uid() {
    if (peek().kind != Tok::kUid) unexpected("capitalised name");
    return next().text;
  }

  // ---- declarations ----

  InterfaceDecl interface_decl() {
    InterfaceDecl d;
    d.span = expect_kw("interface").span;
    d.name = uid();
    expect_sym("{");
    std::set<std::string> tags;
    while (!is_sym("}")) {
      MessageSig m;
      m.span = peek().span;
      m.tag = uid();
      expect_sym("(");
      if (!is_sym(")")) {
        m.payload.push_back(type());
        while (is_sym(",")) {
          next();
          m.payload.push_back(type());
        }
      }
      expect_sym(")");
      if (!tags.insert(m.tag).second)
        fail_at(Phase::kParse, m.span, "duplicate", fmt::format("duplicate message {} in interface {}", m.tag, d.name));
      d.messages.push_back(std::move(m));
      if (!is_sym(",")) break;
      next();
    }
    expect_sym("}");
    return d;
  }

  std::vector<Param> params() {
    std::vector<Param> ps;
    std::set<std::string> seen;
    expect_sym("(");
    if (!is_sym(")")) {
      while (true) {
        Param p;
        p.span = peek().span;
        p.name = lid();
        expect_sym(":");
        p.type = type();
        if (!seen.insert(p.name).second) syntax_error(p.span, "duplicate parameter " + p.name);
        ps.push_back(std::move(p));
        if (!is_sym(",")) break;
        next();
      }
    }
    expect_sym(")");
    return ps;
  }

  DefDecl def_decl() {
    DefDecl d;
    d.span = expect_kw("def").span;
    d.name = lid();
    d.params = params();
    expect_sym(":");
    d.ret = type();
    expect_sym("{");
    d.body = expr();
    expect_sym("}");
    return d;
  }

  // ---- types ----

  TypeP type() {
    TypeP t = type_atom();
    if (is_sym("+")) {
      Span s = next().span;
      auto sum = std::make_shared<Type>();
      sum->k = TK::kSum;
      sum->span = s;
      sum->args = {t, type()};
      return sum;
    }
    return t;
  }

  TypeP type_atom() {
    Span s = peek().span;
    if (peek().kind == Tok::kUid) {
      std::string name = next().text;
      if (name == "Unit") return mk_type(TK::kUnit, s);
      if (name == "Int") return mk_type(TK::kInt, s);
      if (name == "String") return mk_type(TK::kString, s);
      if (name == "Bool") return mk_type(TK::kBool, s);
      auto t = std::make_shared<Type>();
      t->span = s;
      t->iface = name;
      if (is_sym("!")) {
        t->k = TK::kSend;
      } else if (is_sym("?")) {
        t->k = TK::kRecv;
      } else {
        unexpected("'!' or '?' after interface name " + name);
      }
      next();
      if (is_sym("(")) {
        next();
        t->pat = pattern();
        expect_sym(")");
      }
      return t;
    }
    if (is_kw("fun") || is_kw("linfun")) {
      auto t = std::make_shared<Type>();
      t->k = TK::kFun;
      t->span = s;
      t->linear = next().text == "linfun";
      expect_sym("(");
      if (!is_sym(")")) {
        t->args.push_back(type());
        while (is_sym(",")) {
          next();
          t->args.push_back(type());
        }
      }
      expect_sym(")");
      expect_sym("->");
      t->ret = type();
      return t;
    }
    if (is_sym("(")) {
      next();
      TypeP a = type();
      if (is_sym(",")) {
        next();
        auto t = std::make_shared<Type>();
        t->k = TK::kPair;
        t->span = s;
        t->args = {a, type()};
        expect_sym(")");
        return t;
      }
      expect_sym(")");
      return a;
    }
    unexpected("type");
  }

  // ---- patterns: * > . > + ----

  Pattern pattern() {
    std::vector<Pattern> alts{pattern_dot()};
    while (is_sym("+")) {
      next();
      alts.push_back(pattern_dot());
    }
    return alts.size() == 1 ? alts[0] : Pattern::plus(std::move(alts));
  }

  Pattern pattern_dot() {
    std::vector<Pattern> fs{pattern_star()};
    while (is_sym(".")) {
      next();
      fs.push_back(pattern_star());
    }
    return fs.size() == 1 ? fs[0] : Pattern::dot(std::move(fs));
  }

  Pattern pattern_star() {
    if (is_sym("*")) {
      next();
      return Pattern::star(pattern_star());
    }
    if (peek().kind == Tok::kInt && (peek().text == "0" || peek().text == "1"))
      return next().text == "0" ? Pattern::zero() : Pattern::one();
    if (peek().kind == Tok::kUid) return Pattern::tag(next().text);
    if (is_sym("(")) {
      next();
      Pattern p = pattern();
      expect_sym(")");
      return p;
    }
    unexpected("pattern");
  }

  // ---- expressions ----

  ExprP expr() {
    ExprP first = binop_or();
    if (is_sym(";")) {
      Span s = next().span;
      return mk(EK::kSeq, s, {first, expr()});
    }
    return first;
  }

  ExprP binop(EK, Span s, const std::string& op, ExprP a, ExprP b) {
    auto e = std::make_shared<Expr>();
    e->k = EK::kBinop;
    e->span = s;
    e->name = op;
    e->kids = {std::move(a), std::move(b)};
    return e;
  }

  ExprP binop_or() {
    ExprP e = binop_and();
    while (is_sym("||")) {
      Span s = next().span;
      e = binop(EK::kBinop, s, "||", e, binop_and());
    }
    return e;
  }

  ExprP binop_and() {
    ExprP e = compare();
    while (is_sym("&&")) {
      Span s = next().span;
      e = binop(EK::kBinop, s, "&&", e, compare());
    }
    return e;
  }

  ExprP compare() {
    ExprP e = additive();
    for (const char* op : {"==", "!=", "<=", ">=", "<", ">"}) {
      if (is_sym(op)) {
        Span s = next().span;
        return binop(EK::kBinop, s, op, e, additive());
      }
    }
    return e;
  }

  ExprP additive() {
    ExprP e = multiplicative();
    while (is_sym("+") || is_sym("-")) {
      Token t = next();
      e = binop(EK::kBinop, t.span, t.text, e, multiplicative());
    }
    return e;
  }

  ExprP multiplicative() {
    ExprP e = send();
    while (is_sym("*") || is_sym("/")) {
      Token t = next();
      e = binop(EK::kBinop, t.span, t.text, e, send());
    }
    return e;
  }

  std::vector<ExprP> args() {
    std::vector<ExprP> as;
    expect_sym("(");
    if (!is_sym(")")) {
      as.push_back(expr());
      while (is_sym(",")) {
        next();
        as.push_back(expr());
      }
    }
    expect_sym(")");
    return as;
  }

  ExprP send() {
    ExprP target = postfix();
    if (!is_sym("!")) return target;
    Span s = next().span;
    auto e = std::make_shared<Expr>();
    e->k = EK::kSend;
    e->span = s;
    e->tag = uid();
    e->kids.push_back(target);
    for (auto& a : args()) e->kids.push_back(a);
    return e;
  }

  ExprP postfix() {
    ExprP e = primary();
    while (is_sym("(")) {
      Span s = peek().span;
      auto as = args();
      auto app = std::make_shared<Expr>();
      app->span = s;
      if (e->k == EK::kVar) {
        app->k = EK::kCall;
        app->name = e->name;
        app->span = e->span;
        app->kids = std::move(as);
      } else {
        app->k = EK::kApply;
        app->kids.push_back(e);
        for (auto& a : as) app->kids.push_back(a);
      }
      e = app;
    }
    return e;
  }

  ExprP primary() {
    const Token& t = peek();
    Span s = t.span;
    switch (t.kind) {
      case Tok::kInt: {
        auto e = std::make_shared<Expr>();
        e->k = EK::kInt;
        e->span = s;
        e->ival = next().ival;
        return e;
      }
      case Tok::kStr: {
        auto e = std::make_shared<Expr>();
        e->k = EK::kString;
        e->span = s;
        e->sval = next().text;
        return e;
      }
      case Tok::kUid:
        unexpected("expression");
      case Tok::kEnd:
        unexpected("expression");
      case Tok::kSym:
        return symbol_primary();
      case Tok::kLid:
        break;
    }
    const std::string& w = t.text;
    if (w == "true" || w == "false") {
      auto e = std::make_shared<Expr>();
      e->k = EK::kBool;
      e->span = s;
      e->bval = next().text == "true";
      return e;
    }
    if (w == "let") return let_expr();
    if (w == "case") return case_expr();
    if (w == "if") return if_expr();
    if (w == "guard") return guard_expr();
    if (w == "fun" || w == "linfun") return lambda();
    if (w == "inl" || w == "inr") {
      next();
      expect_sym("(");
      ExprP v = expr();
      expect_sym(")");
      return mk(w == "inl" ? EK::kInl : EK::kInr, s, {v});
    }
    if (w == "spawn") {
      next();
      expect_sym("{");
      ExprP body = expr();
      expect_sym("}");
      return mk(EK::kSpawn, s, {body});
    }
    if (w == "new") {
      next();
      expect_sym("[");
      auto e = std::make_shared<Expr>();
      e->k = EK::kNew;
      e->span = s;
      e->name = uid();
      expect_sym("]");
      return e;
    }
    if (w == "free" || w == "fail") {
      next();
      expect_sym("(");
      ExprP v = expr();
      expect_sym(")");
      return mk(w == "free" ? EK::kFree : EK::kFail, s, {v});
    }
    auto e = std::make_shared<Expr>();
    e->k = EK::kVar;
    e->span = s;
    e->name = lid();
    return e;
  }

  ExprP symbol_primary() {
    Span s = peek().span;
    if (is_sym("-") && peek(1).kind == Tok::kInt) {
      next();
      auto e = std::make_shared<Expr>();
      e->k = EK::kInt;
      e->span = s;
      e->ival = -next().ival;
      return e;
    }
    if (!is_sym("(")) unexpected("expression");
    next();
    if (is_sym(")")) {
      next();
      return mk(EK::kUnit, s);
    }
    ExprP a = expr();
    if (is_sym(",")) {
      next();
      ExprP b = expr();
      expect_sym(")");
      return mk(EK::kPair, s, {a, b});
    }
    expect_sym(")");
    return a;
  }

  ExprP let_expr() {
    Span s = expect_kw("let").span;
    auto e = std::make_shared<Expr>();
    e->span = s;
    if (is_sym("(")) {
      next();
      e->k = EK::kLetPair;
      e->names.push_back(lid());
      expect_sym(",");
      e->names.push_back(lid());
      expect_sym(")");
      if (e->names[0] == e->names[1]) syntax_error(s, "pair pattern binds " + e->names[0] + " twice");
    } else {
      e->k = EK::kLet;
      e->name = lid();
      if (is_sym(":")) {
        next();
        e->ann = type();
      }
    }
    expect_sym("=");
    ExprP bound = expr();
    expect_kw("in");
    e->kids = {bound, expr()};
    return e;
  }

  ExprP case_expr() {
    Span s = expect_kw("case").span;
    auto e = std::make_shared<Expr>();
    e->k = EK::kCase;
    e->span = s;
    ExprP scrut = expr();
    expect_sym("{");
    expect_kw("inl");
    e->names.push_back(lid());
    expect_sym("->");
    ExprP l = expr();
    expect_kw("inr");
    e->names.push_back(lid());
    expect_sym("->");
    ExprP r = expr();
    expect_sym("}");
    e->kids = {scrut, l, r};
    return e;
  }

  ExprP if_expr() {
    Span s = expect_kw("if").span;
    ExprP c = expr();
    expect_sym("{");
    ExprP a = expr();
    expect_sym("}");
    expect_kw("else");
    ExprP b;
    if (is_kw("if")) {
      b = if_expr();
    } else {
      expect_sym("{");
      b = expr();
      expect_sym("}");
    }
    return mk(EK::kIf, s, {c, a, b});
  }

  ExprP lambda() {
    Span s = peek().span;
    auto e = std::make_shared<Expr>();
    e->k = EK::kLambda;
    e->span = s;
    e->linear = next().text == "linfun";
    e->params = params();
    expect_sym(":");
    e->ret = type();
    expect_sym("{");
    e->kids = {expr()};
    expect_sym("}");
    return e;
  }

  ExprP guard_expr() {
    Span s = expect_kw("guard").span;
    auto e = std::make_shared<Expr>();
    e->k = EK::kGuard;
    e->span = s;
    e->kids = {postfix()};
    expect_sym(":");
    e->pat = pattern();
    expect_sym("{");
    std::set<std::string> tags;
    bool seen_free = false, seen_fail = false;
    while (!is_sym("}")) {
      Clause c;
      c.span = peek().span;
      if (is_kw("receive")) {
        next();
        c.k = ClauseKind::kReceive;
        c.tag = uid();
        expect_sym("(");
        if (!is_sym(")")) {
          c.binders.push_back(lid());
          while (is_sym(",")) {
            next();
            c.binders.push_back(lid());
          }
        }
        expect_sym(")");
        expect_kw("from");
        c.mailbox = lid();
        expect_sym("->");
        c.body = expr();
        if (!tags.insert(c.tag).second) syntax_error(c.span, "duplicate receive clause for " + c.tag);
      } else if (is_kw("free")) {
        next();
        c.k = ClauseKind::kFree;
        expect_sym("->");
        c.body = expr();
        if (seen_free) syntax_error(c.span, "duplicate free clause");
        seen_free = true;
      } else if (is_kw("fail")) {
        next();
        c.k = ClauseKind::kFail;
        if (seen_fail) syntax_error(c.span, "duplicate fail clause");
        seen_fail = true;
      } else {
        unexpected("guard clause (receive, free or fail)");
      }
      e->clauses.push_back(std::move(c));
    }
    expect_sym("}");
    return e;
  }
};

}  // namespace

ast::Program parse_program(const std::string& source, const std::string& file) {
  try {
    Parser p(lex(source));
    ast::Program prog = p.program();
    prog.file = file;
    return prog;
  } catch (PatError& e) {
    e.diag().file = file;
    throw;
  }
}

Pattern parse_pattern(const std::string& source) {
  Parser p(lex(source));
  return p.pattern_only();
}

}  // namespace patc
