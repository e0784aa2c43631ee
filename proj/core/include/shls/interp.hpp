// Copyright 2026 The shls Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "shls/ir.hpp"

namespace shls {

/// Dense tensor with either f32 or i32 payload. Rank-0 tensors hold one
/// element.
struct Tensor {
  ElemType type = ElemType::F32;
  std::vector<std::int64_t> dims;
  std::vector<float> f;
  std::vector<std::int32_t> i;

  static Tensor zeros(ElemType t, std::vector<std::int64_t> dims);
  std::int64_t numel() const;

  float& f_at(std::int64_t flat) { return f[static_cast<std::size_t>(flat)]; }
  std::int32_t& i_at(std::int64_t flat) { return i[static_cast<std::size_t>(flat)]; }
};

using TensorMap = std::map<std::string, Tensor>;

class InterpError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InterpStats {
  /// Executed store events per array (guarded stores that do not fire are
  /// not counted).
  std::map<std::string, std::int64_t> stores;
  std::map<std::string, std::int64_t> loads;
};

/// Runs the nests sequentially, iterations in lexicographic loop order.
/// Internal and output arrays start zero-initialized; i32 arithmetic wraps.
/// Returns every output array.
TensorMap interpret(const AffineProgram& program, const TensorMap& inputs,
                    InterpStats* stats = nullptr);

}  // namespace shls
