// Copyright 2026 The shls Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "shls/ir.hpp"

namespace shls {

/// Renders a program back to DSL source. Re-parsing the result yields a
/// structurally equal program.
std::string print_program(const AffineProgram& program);

std::string print_affine(const AffineExpr& e);
std::string print_ref(const ArrayRef& r);

}  // namespace shls
