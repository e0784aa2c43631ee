// Copyright 2026 The shls Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "shls/ir.hpp"

namespace shls {

/// Structural and semantic checks. Returns one message per violation;
/// an empty list means the program is well-formed:
///   - declared arrays are unique, with positive dimension sizes
///   - loop trip counts are >= 1 and loop ids are unique per nest
///   - references resolve, with index count matching array rank
///   - index expressions and guards only use loops of the enclosing nest
///   - guards pin loops to their final iteration value
///   - reads come from inputs or arrays written by the same or an earlier
///     nest; input arrays are never written
///   - element types are consistent within each statement
std::vector<std::string> validate(const AffineProgram& program);

}  // namespace shls
