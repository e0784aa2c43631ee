// Copyright 2026 The shls Authors.
// SPDX-License-Identifier: Apache-2.0

#include "shls/ir.hpp"

#include <algorithm>
#include <map>

namespace shls {

const char* to_string(ElemType t) {
  return t == ElemType::F32 ? "f32" : "i32";
}

const char* to_string(IoClass c) {
  switch (c) {
    case IoClass::Input: return "input";
    case IoClass::Output: return "output";
    default: return "internal";
  }
}

const char* to_string(OpKind k) {
  switch (k) {
    case OpKind::Add: return "add";
    case OpKind::Mul: return "mul";
    case OpKind::Div: return "div";
    case OpKind::Max: return "max";
    case OpKind::Exp: return "exp";
  }
  return "?";
}

AffineExpr AffineExpr::constant_expr(std::int64_t c) {
  AffineExpr e;
  e.constant = c;
  return e;
}

AffineExpr AffineExpr::loop(const std::string& id, std::int64_t coeff) {
  AffineExpr e;
  e.terms.emplace_back(id, coeff);
  e.canonicalize();
  return e;
}

void AffineExpr::canonicalize() {
  std::map<std::string, std::int64_t> acc;
  for (auto& [id, c] : terms) acc[id] += c;
  terms.clear();
  for (auto& [id, c] : acc)
    if (c != 0) terms.emplace_back(id, c);
}

std::int64_t AffineExpr::coeff(const std::string& id) const {
  for (auto& [lid, c] : terms)
    if (lid == id) return c;
  return 0;
}

bool AffineExpr::uses(const std::string& id) const { return coeff(id) != 0; }

bool AffineExpr::is_single_iterator() const {
  return constant == 0 && terms.size() == 1 && terms[0].second == 1;
}

AffineExpr& AffineExpr::operator+=(const AffineExpr& o) {
  for (auto& t : o.terms) terms.push_back(t);
  constant += o.constant;
  canonicalize();
  return *this;
}

AffineExpr& AffineExpr::operator-=(const AffineExpr& o) {
  for (auto& [id, c] : o.terms) terms.emplace_back(id, -c);
  constant -= o.constant;
  canonicalize();
  return *this;
}

void AffineExpr::scale(std::int64_t k) {
  for (auto& t : terms) t.second *= k;
  constant *= k;
  canonicalize();
}

void Guard::add(const std::string& id, std::int64_t v) {
  pins.emplace_back(id, v);
  std::sort(pins.begin(), pins.end());
  pins.erase(std::unique(pins.begin(), pins.end()), pins.end());
}

std::optional<std::int64_t> Guard::pin_of(const std::string& id) const {
  for (auto& [lid, v] : pins)
    if (lid == id) return v;
  return std::nullopt;
}

Expr Expr::make_ref(ArrayRef r) {
  Expr e;
  e.tag = Tag::Ref;
  e.ref = std::move(r);
  return e;
}

Expr Expr::make_const(double v, bool is_float) {
  Expr e;
  e.tag = Tag::Const;
  e.cval = v;
  e.cval_is_float = is_float;
  return e;
}

Expr Expr::make_op(OpKind k, std::vector<Expr> args) {
  Expr e;
  e.tag = Tag::Op;
  e.op = k;
  e.args = std::move(args);
  return e;
}

void Expr::collect_reads(std::vector<ArrayRef>& out) const {
  if (tag == Tag::Ref) {
    out.push_back(ref);
  } else if (tag == Tag::Op) {
    for (auto& a : args) a.collect_reads(out);
  }
}

std::vector<ArrayRef> Statement::reads() const {
  std::vector<ArrayRef> out;
  rhs.collect_reads(out);
  return out;
}

const Loop* LoopNest::find_loop(const std::string& id) const {
  for (auto& l : loops)
    if (l.id == id) return &l;
  return nullptr;
}

std::int64_t LoopNest::trip_of(const std::string& id) const {
  const Loop* l = find_loop(id);
  return l ? l->trip : 0;
}

std::int64_t LoopNest::iteration_count() const {
  std::int64_t n = 1;
  for (auto& l : loops) n *= l.trip;
  return n;
}

std::int64_t ArrayInfo::numel() const {
  std::int64_t n = 1;
  for (auto d : dims) n *= d;
  return n;
}

const ArrayInfo* AffineProgram::find_array(const std::string& name) const {
  for (auto& a : arrays)
    if (a.name == name) return &a;
  return nullptr;
}

ArrayInfo* AffineProgram::find_array(const std::string& name) {
  for (auto& a : arrays)
    if (a.name == name) return &a;
  return nullptr;
}

std::vector<std::size_t> AffineProgram::writers_of(const std::string& array) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < nests.size(); ++i) {
    for (auto& st : nests[i].body) {
      if (st.write.array == array) {
        out.push_back(i);
        break;
      }
    }
  }
  return out;
}

std::vector<std::size_t> AffineProgram::readers_of(const std::string& array,
                                                   std::int64_t except_nest) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < nests.size(); ++i) {
    if (static_cast<std::int64_t>(i) == except_nest) continue;
    bool reads = false;
    for (auto& st : nests[i].body) {
      for (auto& r : st.reads()) {
        if (r.array == array) {
          reads = true;
          break;
        }
      }
      if (reads) break;
    }
    if (reads) out.push_back(i);
  }
  return out;
}

std::vector<std::string> written_arrays(const LoopNest& nest) {
  std::vector<std::string> out;
  for (auto& st : nest.body) {
    if (std::find(out.begin(), out.end(), st.write.array) == out.end())
      out.push_back(st.write.array);
  }
  return out;
}

std::vector<std::string> read_arrays(const LoopNest& nest) {
  std::vector<std::string> out;
  for (auto& st : nest.body) {
    for (auto& r : st.reads()) {
      if (std::find(out.begin(), out.end(), r.array) == out.end())
        out.push_back(r.array);
    }
  }
  return out;
}

}  // namespace shls
