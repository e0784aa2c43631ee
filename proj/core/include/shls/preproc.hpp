// Copyright 2026 The shls Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <set>
#include <stdexcept>
#include <string>

#include "shls/ir.hpp"

namespace shls {

/// Raised for buffer patterns the dataflow transforms cannot legalize,
/// e.g. multi-producer buffers with ambiguous final values.
class TransformError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rewrites the program so every internal array has exactly one producer
/// nest and at most one consumer nest. Multi-consumer buffers are
/// duplicated (`_dup0`, `_dup1`, ... suffixes, consumers ordered by nest
/// index); the producer mirrors each write into the duplicates. Output
/// semantics are preserved exactly. Idempotent.
AffineProgram canonicalize_spsc(const AffineProgram& program);

/// Loop ids of `nest` that carry no nonzero coefficient in any write
/// access function of `out_array` (the accumulation dimensions).
std::set<std::string> detect_reduction_loops(const LoopNest& nest,
                                             const std::string& out_array);

/// Equalizes write and read counts on internal producer-consumer buffers:
/// a buffer written under reduction loops keeps its local accumulator and
/// gains a guarded final-value store into a fresh `_shared` buffer (or the
/// existing mirror copy is guarded in place). Buffers whose consumer reads
/// cells multiple times are left untouched; they stay shared. Idempotent.
AffineProgram reduce_writes(const AffineProgram& program);

/// Number of executed stores to `array` per full run of `nest`, counting
/// guards analytically.
std::int64_t analytic_store_count(const LoopNest& nest, const std::string& array);

/// Number of executed loads of `array` per full run of `nest`.
std::int64_t analytic_load_count(const LoopNest& nest, const std::string& array);

}  // namespace shls
