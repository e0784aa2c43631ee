// Copyright 2026 The shls Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace shls {

enum class ElemType { F32, I32 };
enum class IoClass { Input, Output, Internal };

const char* to_string(ElemType t);
const char* to_string(IoClass c);

/// Affine function of loop iterators: sum of coeff*loop terms plus a
/// constant. Kept canonical: terms sorted by loop id, zero coefficients
/// dropped. Canonical form makes equality structural.
struct AffineExpr {
  std::vector<std::pair<std::string, std::int64_t>> terms;
  std::int64_t constant = 0;

  AffineExpr() = default;
  static AffineExpr constant_expr(std::int64_t c);
  static AffineExpr loop(const std::string& id, std::int64_t coeff = 1);

  void canonicalize();
  std::int64_t coeff(const std::string& id) const;
  bool uses(const std::string& id) const;
  bool is_constant() const { return terms.empty(); }
  /// True iff the expression is exactly one loop with coefficient 1 and
  /// no constant offset.
  bool is_single_iterator() const;

  AffineExpr& operator+=(const AffineExpr& o);
  AffineExpr& operator-=(const AffineExpr& o);
  void scale(std::int64_t k);

  bool operator==(const AffineExpr&) const = default;
};

/// Conjunction of `loop == value` pins. The only guards the IR admits pin
/// loops to their final iteration value; validation enforces that.
struct Guard {
  std::vector<std::pair<std::string, std::int64_t>> pins;  // sorted by loop id

  bool empty() const { return pins.empty(); }
  void add(const std::string& id, std::int64_t v);
  std::optional<std::int64_t> pin_of(const std::string& id) const;

  bool operator==(const Guard&) const = default;
};

struct ArrayRef {
  std::string array;
  std::vector<AffineExpr> indices;
  Guard guard;

  bool operator==(const ArrayRef&) const = default;
};

enum class OpKind { Add, Mul, Div, Max, Exp };

const char* to_string(OpKind k);

/// Statement right-hand side: an operator tree whose leaves are array
/// references or scalar literals.
struct Expr {
  enum class Tag { Ref, Const, Op };

  Tag tag = Tag::Const;
  ArrayRef ref;          // Tag::Ref
  double cval = 0.0;     // Tag::Const (holds i32 values exactly as well)
  bool cval_is_float = false;
  OpKind op = OpKind::Add;  // Tag::Op
  std::vector<Expr> args;

  static Expr make_ref(ArrayRef r);
  static Expr make_const(double v, bool is_float);
  static Expr make_op(OpKind k, std::vector<Expr> args);

  void collect_reads(std::vector<ArrayRef>& out) const;
  bool operator==(const Expr&) const = default;
};

/// One innermost-level assignment. `accumulate` records that the source
/// used `+=`; the rhs is stored desugared, i.e. it already contains the
/// self-read of the written reference as the first operand of an Add.
struct Statement {
  ArrayRef write;
  Expr rhs;
  bool accumulate = false;

  std::vector<ArrayRef> reads() const;
  /// Guard shared by every ref of the statement (empty if unguarded).
  const Guard& guard() const { return write.guard; }

  bool operator==(const Statement&) const = default;
};

struct Loop {
  std::string id;
  std::int64_t trip = 0;  // lower bound 0, step 1

  bool operator==(const Loop&) const = default;
};

/// Perfect loop nest: statements only at the innermost level.
struct LoopNest {
  std::vector<Loop> loops;  // outermost first
  std::vector<Statement> body;

  const Loop* find_loop(const std::string& id) const;
  std::int64_t trip_of(const std::string& id) const;
  /// Product of all trip counts.
  std::int64_t iteration_count() const;

  bool operator==(const LoopNest&) const = default;
};

struct ArrayInfo {
  std::string name;
  std::vector<std::int64_t> dims;  // empty for rank-0 scalars
  ElemType type = ElemType::F32;
  IoClass io = IoClass::Internal;

  std::int64_t rank() const { return static_cast<std::int64_t>(dims.size()); }
  std::int64_t numel() const;

  bool operator==(const ArrayInfo&) const = default;
};

struct AffineProgram {
  std::vector<ArrayInfo> arrays;
  std::vector<LoopNest> nests;

  const ArrayInfo* find_array(const std::string& name) const;
  ArrayInfo* find_array(const std::string& name);
  bool has_array(const std::string& name) const { return find_array(name) != nullptr; }

  /// Nest indices that write `array` (via any statement).
  std::vector<std::size_t> writers_of(const std::string& array) const;
  /// Nest indices that read `array`, excluding `except_nest` when >= 0.
  std::vector<std::size_t> readers_of(const std::string& array,
                                      std::int64_t except_nest = -1) const;

  bool operator==(const AffineProgram&) const = default;
};

/// Arrays written by a nest (deduplicated, in first-write order).
std::vector<std::string> written_arrays(const LoopNest& nest);
/// Arrays read by a nest (deduplicated, in first-read order).
std::vector<std::string> read_arrays(const LoopNest& nest);

}  // namespace shls
