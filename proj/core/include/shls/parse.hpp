// Copyright 2026 The shls Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "shls/ir.hpp"

namespace shls {

struct SourceLoc {
  int line = 0;
  int col = 0;
};

/// Syntax-level failure: malformed tokens, non-affine index expressions,
/// non-constant bounds, imperfect nests.
class ParseError : public std::runtime_error {
 public:
  ParseError(SourceLoc loc, const std::string& msg);
  SourceLoc loc;
};

/// Semantic failure raised when a syntactically valid program fails
/// validation (see validate.hpp for the diagnostic list).
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<std::string> diagnostics);
  std::vector<std::string> diagnostics;
};

/// Parses kernel DSL source into a validated program. Affine expressions
/// come back canonicalized and loop ids are unique within each nest.
AffineProgram parse_program(std::string_view text);

/// Syntax-only variant; the result may fail validate().
AffineProgram parse_program_unchecked(std::string_view text);

}  // namespace shls
