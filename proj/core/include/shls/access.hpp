// Copyright 2026 The shls Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

namespace shls {

/// Access function in positional form: a mapping from an ordered iteration
/// domain to array indices. The domain keeps only loops that matter (trip
/// count > 1, not pinned by a guard, nonzero coefficient somewhere), so two
/// functions over differently named loops compare structurally.
struct AccessFunction {
  std::vector<std::int64_t> domain;                 // trip counts, execution order
  std::vector<std::vector<std::int64_t>> coeffs;    // [array dim][domain slot]
  std::vector<std::int64_t> constants;              // [array dim]

  std::size_t rank() const { return constants.size(); }
  std::int64_t domain_product() const;

  /// Drops degenerate domain slots (trip 1 or unused by every dimension).
  void normalize();

  /// Index tuple produced at flat iteration `t` (row-major over `domain`).
  std::vector<std::int64_t> index_at(std::int64_t t) const;

  bool operator==(const AccessFunction&) const = default;
};

enum class FifoVerdict {
  No,           // orders provably differ
  Yes,          // orders provably match
  UndecidedNo,  // domain too large to enumerate; treated as not convertible
};

/// Cond. 2: true when the producer's write-order index sequence equals the
/// consumer's read-order sequence. Fast path is structural equality of the
/// normalized functions; otherwise both sequences are enumerated when the
/// domain product is at most `enum_limit`.
FifoVerdict fifo_convertible(const AccessFunction& waf, const AccessFunction& raf,
                             std::int64_t enum_limit = std::int64_t(1) << 20);

/// Brute-force sequence comparison, used as the oracle in tests. Requires
/// both domain products to be enumerable.
bool sequences_equal(const AccessFunction& waf, const AccessFunction& raf);

}  // namespace shls
