// Copyright 2026 The shls Authors.
// SPDX-License-Identifier: Apache-2.0

#include "shls/access.hpp"

namespace shls {

std::int64_t AccessFunction::domain_product() const {
  std::int64_t n = 1;
  for (auto d : domain) n *= d;
  return n;
}

void AccessFunction::normalize() {
  std::vector<std::size_t> keep;
  for (std::size_t s = 0; s < domain.size(); ++s) {
    if (domain[s] <= 1) continue;
    bool used = false;
    for (auto& dim : coeffs) used |= (dim[s] != 0);
    if (used) keep.push_back(s);
  }
  if (keep.size() == domain.size()) return;
  std::vector<std::int64_t> nd;
  for (auto s : keep) nd.push_back(domain[s]);
  for (auto& dim : coeffs) {
    std::vector<std::int64_t> nc;
    for (auto s : keep) nc.push_back(dim[s]);
    dim = std::move(nc);
  }
  domain = std::move(nd);
}

std::vector<std::int64_t> AccessFunction::index_at(std::int64_t t) const {
  std::vector<std::int64_t> iv(domain.size(), 0);
  for (std::size_t s = domain.size(); s-- > 0;) {
    iv[s] = t % domain[s];
    t /= domain[s];
  }
  std::vector<std::int64_t> out(constants);
  for (std::size_t d = 0; d < coeffs.size(); ++d)
    for (std::size_t s = 0; s < coeffs[d].size(); ++s) out[d] += coeffs[d][s] * iv[s];
  return out;
}

bool sequences_equal(const AccessFunction& waf, const AccessFunction& raf) {
  if (waf.rank() != raf.rank()) return false;
  std::int64_t n = waf.domain_product();
  if (n != raf.domain_product()) return false;
  for (std::int64_t t = 0; t < n; ++t)
    if (waf.index_at(t) != raf.index_at(t)) return false;
  return true;
}

FifoVerdict fifo_convertible(const AccessFunction& waf, const AccessFunction& raf,
                             std::int64_t enum_limit) {
  if (waf.rank() != raf.rank()) return FifoVerdict::No;
  if (waf.domain_product() != raf.domain_product()) return FifoVerdict::No;
  if (waf == raf) return FifoVerdict::Yes;
  if (waf.domain_product() <= enum_limit)
    return sequences_equal(waf, raf) ? FifoVerdict::Yes : FifoVerdict::No;
  return FifoVerdict::UndecidedNo;
}

}  // namespace shls
