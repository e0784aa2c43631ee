// Copyright 2026 The shls Authors.
// SPDX-License-Identifier: Apache-2.0

#include "shls/interp.hpp"

#include <cmath>

namespace shls {

Tensor Tensor::zeros(ElemType t, std::vector<std::int64_t> dims) {
  Tensor out;
  out.type = t;
  out.dims = std::move(dims);
  std::int64_t n = out.numel();
  if (t == ElemType::F32)
    out.f.assign(static_cast<std::size_t>(n), 0.0f);
  else
    out.i.assign(static_cast<std::size_t>(n), 0);
  return out;
}

std::int64_t Tensor::numel() const {
  std::int64_t n = 1;
  for (auto d : dims) n *= d;
  return n;
}

namespace {

// Index expressions, guards, and op trees are compiled against the loop
// order of the nest once, then evaluated per iteration.
struct CompiledIndex {
  std::vector<std::pair<std::size_t, std::int64_t>> terms;  // (loop slot, coeff)
  std::int64_t constant = 0;

  std::int64_t eval(const std::vector<std::int64_t>& iv) const {
    std::int64_t v = constant;
    for (auto& [slot, c] : terms) v += c * iv[slot];
    return v;
  }
};

struct CompiledRef {
  Tensor* tensor = nullptr;
  const std::string* name = nullptr;
  std::vector<CompiledIndex> indices;
  std::vector<std::int64_t> strides;

  std::int64_t flat(const std::vector<std::int64_t>& iv) const {
    std::int64_t off = 0;
    for (std::size_t d = 0; d < indices.size(); ++d) {
      std::int64_t ix = indices[d].eval(iv);
      if (ix < 0 || ix >= tensor->dims[d])
        throw InterpError("index out of bounds for array '" + *name + "'");
      off += ix * strides[d];
    }
    return off;
  }
};

struct CompiledExpr {
  Expr::Tag tag;
  OpKind op = OpKind::Add;
  double cval = 0.0;
  CompiledRef ref;
  std::vector<CompiledExpr> args;
};

struct CompiledStmt {
  std::vector<std::pair<std::size_t, std::int64_t>> guard;  // (loop slot, value)
  CompiledRef write;
  CompiledExpr rhs;
  ElemType type;
};

class NestRunner {
 public:
  NestRunner(const LoopNest& nest, std::map<std::string, Tensor>& store,
             const AffineProgram& prog, InterpStats* stats)
      : nest_(nest), store_(store), prog_(prog), stats_(stats) {
    for (std::size_t s = 0; s < nest.loops.size(); ++s) slot_[nest.loops[s].id] = s;
    for (auto& st : nest.body) stmts_.push_back(compile_stmt(st));
  }

  void run() {
    std::vector<std::int64_t> iv(nest_.loops.size(), 0);
    const std::size_t depth = nest_.loops.size();
    while (true) {
      for (auto& st : stmts_) exec(st, iv);
      // lexicographic odometer
      std::size_t d = depth;
      while (d > 0) {
        --d;
        if (++iv[d] < nest_.loops[d].trip) break;
        iv[d] = 0;
        if (d == 0) return;
      }
      if (depth == 0) return;
    }
  }

 private:
  CompiledIndex compile_index(const AffineExpr& e) {
    CompiledIndex out;
    out.constant = e.constant;
    for (auto& [id, c] : e.terms) out.terms.emplace_back(slot_.at(id), c);
    return out;
  }

  CompiledRef compile_ref(const ArrayRef& r) {
    CompiledRef out;
    auto it = store_.find(r.array);
    if (it == store_.end()) throw InterpError("unknown array '" + r.array + "'");
    out.tensor = &it->second;
    out.name = &it->first;
    for (auto& ix : r.indices) out.indices.push_back(compile_index(ix));
    out.strides.assign(out.tensor->dims.size(), 1);
    for (std::size_t d = out.tensor->dims.size(); d-- > 1;)
      out.strides[d - 1] = out.strides[d] * out.tensor->dims[d];
    return out;
  }

  CompiledExpr compile_expr(const Expr& e) {
    CompiledExpr out;
    out.tag = e.tag;
    switch (e.tag) {
      case Expr::Tag::Const:
        out.cval = e.cval;
        break;
      case Expr::Tag::Ref:
        out.ref = compile_ref(e.ref);
        break;
      case Expr::Tag::Op:
        out.op = e.op;
        for (auto& a : e.args) out.args.push_back(compile_expr(a));
        break;
    }
    return out;
  }

  CompiledStmt compile_stmt(const Statement& st) {
    CompiledStmt out;
    out.write = compile_ref(st.write);
    out.rhs = compile_expr(st.rhs);
    out.type = out.write.tensor->type;
    for (auto& [id, v] : st.guard().pins) out.guard.emplace_back(slot_.at(id), v);
    return out;
  }

  float eval_f(const CompiledExpr& e, const std::vector<std::int64_t>& iv) {
    switch (e.tag) {
      case Expr::Tag::Const:
        return static_cast<float>(e.cval);
      case Expr::Tag::Ref: {
        if (stats_) ++stats_->loads[*e.ref.name];
        return e.ref.tensor->f[static_cast<std::size_t>(e.ref.flat(iv))];
      }
      case Expr::Tag::Op:
        break;
    }
    switch (e.op) {
      case OpKind::Add: return eval_f(e.args[0], iv) + eval_f(e.args[1], iv);
      case OpKind::Mul: return eval_f(e.args[0], iv) * eval_f(e.args[1], iv);
      case OpKind::Div: return eval_f(e.args[0], iv) / eval_f(e.args[1], iv);
      case OpKind::Max: return std::max(eval_f(e.args[0], iv), eval_f(e.args[1], iv));
      case OpKind::Exp: return std::exp(eval_f(e.args[0], iv));
    }
    return 0.0f;
  }

  std::int32_t eval_i(const CompiledExpr& e, const std::vector<std::int64_t>& iv) {
    switch (e.tag) {
      case Expr::Tag::Const:
        return static_cast<std::int32_t>(static_cast<std::int64_t>(e.cval));
      case Expr::Tag::Ref: {
        if (stats_) ++stats_->loads[*e.ref.name];
        return e.ref.tensor->i[static_cast<std::size_t>(e.ref.flat(iv))];
      }
      case Expr::Tag::Op:
        break;
    }
    auto wrap = [](std::uint32_t v) { return static_cast<std::int32_t>(v); };
    switch (e.op) {
      case OpKind::Add:
        return wrap(static_cast<std::uint32_t>(eval_i(e.args[0], iv)) +
                    static_cast<std::uint32_t>(eval_i(e.args[1], iv)));
      case OpKind::Mul:
        return wrap(static_cast<std::uint32_t>(eval_i(e.args[0], iv)) *
                    static_cast<std::uint32_t>(eval_i(e.args[1], iv)));
      case OpKind::Div: {
        std::int32_t d = eval_i(e.args[1], iv);
        if (d == 0) throw InterpError("i32 division by zero");
        return eval_i(e.args[0], iv) / d;
      }
      case OpKind::Max:
        return std::max(eval_i(e.args[0], iv), eval_i(e.args[1], iv));
      case OpKind::Exp:
        throw InterpError("exp is only defined for f32");
    }
    return 0;
  }

  void exec(const CompiledStmt& st, const std::vector<std::int64_t>& iv) {
    for (auto& [slot, v] : st.guard)
      if (iv[slot] != v) return;
    std::int64_t flat = st.write.flat(iv);
    if (st.type == ElemType::F32)
      st.write.tensor->f[static_cast<std::size_t>(flat)] = eval_f(st.rhs, iv);
    else
      st.write.tensor->i[static_cast<std::size_t>(flat)] = eval_i(st.rhs, iv);
    if (stats_) ++stats_->stores[*st.write.name];
  }

  const LoopNest& nest_;
  std::map<std::string, Tensor>& store_;
  const AffineProgram& prog_;
  InterpStats* stats_;
  std::map<std::string, std::size_t> slot_;
  std::vector<CompiledStmt> stmts_;
};

}  // namespace

TensorMap interpret(const AffineProgram& program, const TensorMap& inputs,
                    InterpStats* stats) {
  TensorMap store;
  for (auto& a : program.arrays) {
    if (a.io == IoClass::Input) {
      auto it = inputs.find(a.name);
      if (it == inputs.end()) throw InterpError("missing input '" + a.name + "'");
      if (it->second.dims != a.dims || it->second.type != a.type)
        throw InterpError("shape or type mismatch for input '" + a.name + "'");
      store[a.name] = it->second;
    } else {
      store[a.name] = Tensor::zeros(a.type, a.dims);
    }
  }
  for (auto& nest : program.nests) {
    NestRunner runner(nest, store, program, stats);
    runner.run();
  }
  TensorMap out;
  for (auto& a : program.arrays)
    if (a.io == IoClass::Output) out[a.name] = store[a.name];
  return out;
}

}  // namespace shls
