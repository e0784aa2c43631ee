// Copyright 2026 The shls Authors.
// SPDX-License-Identifier: Apache-2.0

#include "shls/parse.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

#include "shls/validate.hpp"

namespace shls {
namespace {

enum class Tok {
  Ident,
  Int,
  Float,
  Punct,
  End,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::int64_t ival = 0;
  double fval = 0.0;
  SourceLoc loc;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return cur_; }

  Token next() {
    Token t = cur_;
    advance();
    return t;
  }

 private:
  void advance() {
    skip_ws();
    cur_ = Token{};
    cur_.loc = {line_, col_};
    if (pos_ >= src_.size()) {
      cur_.kind = Tok::End;
      return;
    }
    char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        bump();
      cur_.kind = Tok::Ident;
      cur_.text = std::string(src_.substr(start, pos_ - start));
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      bool is_float = false;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) bump();
      if (pos_ + 1 < src_.size() && src_[pos_] == '.' && src_[pos_ + 1] != '.') {
        // '.' not followed by another '.' (range operator) starts a fraction
        is_float = true;
        bump();
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) bump();
      }
      if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
        is_float = true;
        bump();
        if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) bump();
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) bump();
      }
      std::string text(src_.substr(start, pos_ - start));
      if (is_float) {
        cur_.kind = Tok::Float;
        cur_.fval = std::strtod(text.c_str(), nullptr);
      } else {
        cur_.kind = Tok::Int;
        cur_.ival = std::strtoll(text.c_str(), nullptr, 10);
      }
      cur_.text = std::move(text);
      return;
    }
    // multi-char punctuation first
    static const char* two[] = {"+=", "==", "&&", ".."};
    for (const char* p : two) {
      if (src_.substr(pos_, 2) == p) {
        cur_.kind = Tok::Punct;
        cur_.text = p;
        bump();
        bump();
        return;
      }
    }
    cur_.kind = Tok::Punct;
    cur_.text = std::string(1, c);
    bump();
  }

  void skip_ws() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') bump();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        bump();
      } else {
        break;
      }
    }
  }

  void bump() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token cur_;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) {}

  AffineProgram program() {
    AffineProgram p;
    while (!at_end()) {
      if (peek_ident("array")) {
        p.arrays.push_back(array_decl());
      } else if (peek_ident("for")) {
        std::vector<std::string> scope;
        p.nests.push_back(nest(scope));
      } else {
        fail("expected 'array' declaration or 'for' nest");
      }
    }
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(lex_.peek().loc, msg);
  }

  bool at_end() { return lex_.peek().kind == Tok::End; }

  bool peek_ident(const char* kw) {
    return lex_.peek().kind == Tok::Ident && lex_.peek().text == kw;
  }

  bool peek_punct(const char* p) {
    return lex_.peek().kind == Tok::Punct && lex_.peek().text == p;
  }

  void expect_punct(const char* p) {
    if (!peek_punct(p)) fail(std::string("expected '") + p + "'");
    lex_.next();
  }

  void expect_kw(const char* kw) {
    if (!peek_ident(kw)) fail(std::string("expected '") + kw + "'");
    lex_.next();
  }

  std::string ident() {
    if (lex_.peek().kind != Tok::Ident) fail("expected identifier");
    return lex_.next().text;
  }

  std::int64_t int_lit() {
    if (lex_.peek().kind != Tok::Int) {
      if (lex_.peek().kind == Tok::Ident) fail("non-constant bound");
      fail("expected integer literal");
    }
    return lex_.next().ival;
  }

  ArrayInfo array_decl() {
    expect_kw("array");
    ArrayInfo a;
    a.name = ident();
    expect_punct(":");
    std::string ty = ident();
    if (ty == "f32") {
      a.type = ElemType::F32;
    } else if (ty == "i32") {
      a.type = ElemType::I32;
    } else {
      fail("unknown element type '" + ty + "'");
    }
    while (peek_punct("[")) {
      lex_.next();
      a.dims.push_back(int_lit());
      expect_punct("]");
    }
    std::string io = ident();
    if (io == "input") {
      a.io = IoClass::Input;
    } else if (io == "output") {
      a.io = IoClass::Output;
    } else if (io == "internal") {
      a.io = IoClass::Internal;
    } else {
      fail("unknown io class '" + io + "'");
    }
    expect_punct(";");
    return a;
  }

  LoopNest nest(std::vector<std::string>& scope) {
    expect_kw("for");
    LoopNest n;
    Loop l;
    l.id = ident();
    for (auto& s : scope)
      if (s == l.id) fail("loop id '" + l.id + "' shadows an enclosing loop");
    expect_kw("in");
    if (lex_.peek().kind != Tok::Int || lex_.peek().ival != 0) {
      if (lex_.peek().kind == Tok::Ident) fail("non-constant bound");
      fail("loop lower bound must be 0");
    }
    lex_.next();
    expect_punct("..");
    l.trip = int_lit();
    scope.push_back(l.id);
    expect_punct("{");
    n.loops.push_back(l);
    if (peek_ident("for")) {
      LoopNest inner = nest(scope);
      n.loops.insert(n.loops.end(), inner.loops.begin(), inner.loops.end());
      n.body = std::move(inner.body);
      if (!peek_punct("}")) fail("imperfect nest: statements alongside an inner loop");
    } else {
      while (!peek_punct("}")) {
        n.body.push_back(statement(scope));
        if (peek_ident("for")) fail("imperfect nest: inner loop after statements");
      }
      if (n.body.empty()) fail("empty loop body");
    }
    expect_punct("}");
    scope.pop_back();
    return n;
  }

  Statement statement(const std::vector<std::string>& scope) {
    Guard g;
    if (peek_ident("if")) {
      lex_.next();
      expect_punct("(");
      while (true) {
        std::string id = ident();
        bool bound = false;
        for (auto& s : scope) bound |= (s == id);
        if (!bound) fail("guard loop '" + id + "' is not bound by the enclosing nest");
        expect_punct("==");
        g.add(id, int_lit());
        if (peek_punct("&&")) {
          lex_.next();
          continue;
        }
        break;
      }
      expect_punct(")");
    }
    Statement st;
    st.write = array_ref(scope);
    bool plus_eq = false;
    if (peek_punct("+=")) {
      plus_eq = true;
      lex_.next();
    } else {
      expect_punct("=");
    }
    Expr rhs = expr(scope);
    if (plus_eq) {
      st.accumulate = true;
      ArrayRef self = st.write;
      rhs = Expr::make_op(OpKind::Add, {Expr::make_ref(self), std::move(rhs)});
    }
    expect_punct(";");
    st.rhs = std::move(rhs);
    if (!g.empty()) apply_guard(st, g);
    return st;
  }

  static void apply_guard_expr(Expr& e, const Guard& g) {
    if (e.tag == Expr::Tag::Ref) {
      e.ref.guard = g;
    } else if (e.tag == Expr::Tag::Op) {
      for (auto& a : e.args) apply_guard_expr(a, g);
    }
  }

  static void apply_guard(Statement& st, const Guard& g) {
    st.write.guard = g;
    apply_guard_expr(st.rhs, g);
  }

  ArrayRef array_ref(const std::vector<std::string>& scope) {
    ArrayRef r;
    r.array = ident();
    while (peek_punct("[")) {
      lex_.next();
      r.indices.push_back(affine(scope));
      expect_punct("]");
    }
    return r;
  }

  // affine := aterm (("+"|"-") aterm)*
  // aterm  := INT ["*" NAME] | NAME
  AffineExpr affine(const std::vector<std::string>& scope) {
    AffineExpr e = affine_term(scope);
    while (peek_punct("+") || peek_punct("-")) {
      bool neg = lex_.next().text == "-";
      AffineExpr t = affine_term(scope);
      if (neg)
        e -= t;
      else
        e += t;
    }
    return e;
  }

  AffineExpr affine_term(const std::vector<std::string>& scope) {
    if (lex_.peek().kind == Tok::Int) {
      std::int64_t c = lex_.next().ival;
      if (peek_punct("*")) {
        lex_.next();
        std::string id = loop_use(scope);
        return AffineExpr::loop(id, c);
      }
      return AffineExpr::constant_expr(c);
    }
    if (lex_.peek().kind == Tok::Ident) {
      std::string id = loop_use(scope);
      if (peek_punct("*"))
        fail("non-affine index expression: product of iterators");
      return AffineExpr::loop(id);
    }
    fail("non-affine index expression");
  }

  std::string loop_use(const std::vector<std::string>& scope) {
    std::string id = ident();
    bool bound = false;
    for (auto& s : scope) bound |= (s == id);
    if (!bound) fail("loop '" + id + "' is not bound by the enclosing nest");
    return id;
  }

  // expr := prod ("+" prod)*
  Expr expr(const std::vector<std::string>& scope) {
    Expr e = prod(scope);
    while (peek_punct("+")) {
      lex_.next();
      Expr r = prod(scope);
      e = Expr::make_op(OpKind::Add, {std::move(e), std::move(r)});
    }
    if (peek_punct("-")) fail("subtraction is not supported in statement expressions");
    return e;
  }

  Expr prod(const std::vector<std::string>& scope) {
    Expr e = unary(scope);
    while (peek_punct("*") || peek_punct("/")) {
      OpKind k = lex_.next().text == "*" ? OpKind::Mul : OpKind::Div;
      Expr r = unary(scope);
      e = Expr::make_op(k, {std::move(e), std::move(r)});
    }
    return e;
  }

  Expr unary(const std::vector<std::string>& scope) {
    if (peek_ident("max")) {
      lex_.next();
      expect_punct("(");
      Expr a = expr(scope);
      expect_punct(",");
      Expr b = expr(scope);
      expect_punct(")");
      return Expr::make_op(OpKind::Max, {std::move(a), std::move(b)});
    }
    if (peek_ident("exp")) {
      lex_.next();
      expect_punct("(");
      Expr a = expr(scope);
      expect_punct(")");
      return Expr::make_op(OpKind::Exp, {std::move(a)});
    }
    if (peek_punct("(")) {
      lex_.next();
      Expr e = expr(scope);
      expect_punct(")");
      return e;
    }
    if (lex_.peek().kind == Tok::Int) {
      Token t = lex_.next();
      return Expr::make_const(static_cast<double>(t.ival), false);
    }
    if (lex_.peek().kind == Tok::Float) {
      Token t = lex_.next();
      return Expr::make_const(t.fval, true);
    }
    if (lex_.peek().kind == Tok::Ident) return Expr::make_ref(array_ref(scope));
    fail("expected expression");
  }

  Lexer lex_;
};

}  // namespace

ParseError::ParseError(SourceLoc l, const std::string& msg)
    : std::runtime_error("parse error at " + std::to_string(l.line) + ":" +
                         std::to_string(l.col) + ": " + msg),
      loc(l) {}

ValidationError::ValidationError(std::vector<std::string> diags)
    : std::runtime_error(diags.empty() ? "validation failed"
                                       : "validation failed: " + diags.front() +
                                             (diags.size() > 1 ? " (and " +
                                                  std::to_string(diags.size() - 1) +
                                                  " more)"
                                                               : "")),
      diagnostics(std::move(diags)) {}

AffineProgram parse_program_unchecked(std::string_view text) {
  Parser p(text);
  return p.program();
}

AffineProgram parse_program(std::string_view text) {
  AffineProgram prog = parse_program_unchecked(text);
  auto diags = validate(prog);
  if (!diags.empty()) throw ValidationError(std::move(diags));
  return prog;
}

}  // namespace shls
