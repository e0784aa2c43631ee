// Copyright 2026 The shls Authors.
// SPDX-License-Identifier: Apache-2.0

#include "shls/print.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace shls {
namespace {

void print_term(std::ostringstream& os, const std::string& id, std::int64_t c,
                bool first) {
  std::int64_t mag = c < 0 ? -c : c;
  if (first) {
    if (c < 0) os << "0 - ";
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  if (mag != 1) os << mag << "*";
  os << id;
}

std::string print_const(double v, bool is_float) {
  if (!is_float) {
    std::ostringstream os;
    os << static_cast<std::int64_t>(v);
    return os.str();
  }
  // shortest decimal form that parses back to the same value
  std::string s;
  for (int prec = 6; prec <= 17; ++prec) {
    std::ostringstream os;
    os.precision(prec);
    os << v;
    s = os.str();
    if (std::strtod(s.c_str(), nullptr) == v) break;
  }
  if (s.find('.') == std::string::npos && s.find('e') == std::string::npos) s += ".0";
  return s;
}

void print_expr(std::ostringstream& os, const Expr& e, int parent_prec) {
  switch (e.tag) {
    case Expr::Tag::Ref:
      os << print_ref(e.ref);
      return;
    case Expr::Tag::Const:
      os << print_const(e.cval, e.cval_is_float);
      return;
    case Expr::Tag::Op:
      break;
  }
  if (e.op == OpKind::Max) {
    os << "max(";
    print_expr(os, e.args[0], 0);
    os << ", ";
    print_expr(os, e.args[1], 0);
    os << ")";
    return;
  }
  if (e.op == OpKind::Exp) {
    os << "exp(";
    print_expr(os, e.args[0], 0);
    os << ")";
    return;
  }
  int prec = e.op == OpKind::Add ? 1 : 2;
  const char* sym = e.op == OpKind::Add ? " + " : (e.op == OpKind::Mul ? " * " : " / ");
  bool paren = prec < parent_prec;
  if (paren) os << "(";
  print_expr(os, e.args[0], prec);
  os << sym;
  // right operand of '/' needs a tighter context so a/(b*c) round-trips
  print_expr(os, e.args[1], e.op == OpKind::Div ? prec + 1 : prec);
  if (paren) os << ")";
}

void print_statement(std::ostringstream& os, const Statement& st, const std::string& indent) {
  os << indent;
  if (!st.guard().empty()) {
    os << "if (";
    bool first = true;
    for (auto& [id, v] : st.guard().pins) {
      if (!first) os << " && ";
      os << id << " == " << v;
      first = false;
    }
    os << ") ";
  }
  // strip the guard for printing; it is re-attached by the parser
  ArrayRef w = st.write;
  w.guard = Guard{};
  os << print_ref(w);
  bool sugar = false;
  if (st.accumulate && st.rhs.tag == Expr::Tag::Op && st.rhs.op == OpKind::Add &&
      st.rhs.args.size() == 2 && st.rhs.args[0].tag == Expr::Tag::Ref &&
      st.rhs.args[0].ref.array == st.write.array &&
      st.rhs.args[0].ref.indices == st.write.indices) {
    sugar = true;
  }
  if (sugar) {
    os << " += ";
    print_expr(os, st.rhs.args[1], 0);
  } else {
    os << " = ";
    print_expr(os, st.rhs, 0);
  }
  os << ";\n";
}

}  // namespace

std::string print_affine(const AffineExpr& e) {
  std::ostringstream os;
  if (e.terms.empty()) {
    os << e.constant;
    return os.str();
  }
  bool first = true;
  for (auto& [id, c] : e.terms) {
    print_term(os, id, c, first);
    first = false;
  }
  if (e.constant > 0) os << " + " << e.constant;
  if (e.constant < 0) os << " - " << -e.constant;
  return os.str();
}

std::string print_ref(const ArrayRef& r) {
  std::ostringstream os;
  os << r.array;
  for (auto& ix : r.indices) os << "[" << print_affine(ix) << "]";
  return os.str();
}

std::string print_program(const AffineProgram& p) {
  std::ostringstream os;
  for (auto& a : p.arrays) {
    os << "array " << a.name << ": " << to_string(a.type);
    for (auto d : a.dims) os << "[" << d << "]";
    os << " " << to_string(a.io) << ";\n";
  }
  for (auto& nest : p.nests) {
    os << "\n";
    std::string indent;
    for (auto& l : nest.loops) {
      os << indent << "for " << l.id << " in 0.." << l.trip << " {\n";
      indent += "  ";
    }
    for (auto& st : nest.body) print_statement(os, st, indent);
    for (std::size_t i = nest.loops.size(); i > 0; --i) {
      indent.resize(indent.size() - 2);
      os << indent << "}\n";
    }
  }
  return os.str();
}

}  // namespace shls
