// Copyright 2026 The shls Authors.
// SPDX-License-Identifier: Apache-2.0

#include "shls/preproc.hpp"

#include <algorithm>
#include <map>

namespace shls {
namespace {

// Fire count of a single guarded ref: product of trips of loops the guard
// does not pin.
std::int64_t fire_count(const LoopNest& nest, const Guard& g) {
  std::int64_t n = 1;
  for (auto& l : nest.loops)
    if (!g.pin_of(l.id)) n *= l.trip;
  return n;
}

void rename_reads_expr(Expr& e, const std::string& from, const std::string& to) {
  if (e.tag == Expr::Tag::Ref) {
    if (e.ref.array == from) e.ref.array = to;
  } else if (e.tag == Expr::Tag::Op) {
    for (auto& a : e.args) rename_reads_expr(a, from, to);
  }
}

void rename_reads(LoopNest& nest, const std::string& from, const std::string& to) {
  for (auto& st : nest.body) rename_reads_expr(st.rhs, from, to);
}

std::string fresh_name(const AffineProgram& p, const std::string& base) {
  if (!p.has_array(base)) return base;
  for (int k = 0;; ++k) {
    std::string cand = base + "_" + std::to_string(k);
    if (!p.has_array(cand)) return cand;
  }
}

void declare_after(AffineProgram& p, const std::string& anchor, ArrayInfo info) {
  auto it = std::find_if(p.arrays.begin(), p.arrays.end(),
                         [&](const ArrayInfo& a) { return a.name == anchor; });
  if (it == p.arrays.end())
    p.arrays.push_back(std::move(info));
  else
    p.arrays.insert(it + 1, std::move(info));
}

// A mirror copy statement replicating `src`'s write into `dst`.
Statement mirror_copy(const Statement& src, const std::string& dst) {
  Statement copy;
  copy.write = src.write;
  copy.write.array = dst;
  ArrayRef read = src.write;  // same indices and guard, original array
  copy.rhs = Expr::make_ref(read);
  return copy;
}

}  // namespace

AffineProgram canonicalize_spsc(const AffineProgram& program) {
  AffineProgram p = program;
  // Iterate over a snapshot of names; duplication appends new arrays.
  std::vector<std::string> names;
  for (auto& a : p.arrays) names.push_back(a.name);

  for (auto& name : names) {
    const ArrayInfo* info = p.find_array(name);
    if (!info || info->io == IoClass::Input) continue;
    auto writers = p.writers_of(name);
    if (writers.empty()) continue;
    if (writers.size() > 1)
      throw TransformError("multi-producer shared buffer '" + name +
                           "' is unsupported (ambiguous final value)");
    std::size_t producer = writers[0];
    auto readers = p.readers_of(name, static_cast<std::int64_t>(producer));
    if (readers.size() <= 1) continue;
    if (info->io == IoClass::Output)
      throw TransformError("output array '" + name +
                           "' is read by multiple nests; fan-out of outputs is unsupported");

    // First consumer keeps the original buffer; later consumers read
    // fresh duplicates fed by mirrored writes in the producer.
    std::vector<std::string> dups;
    for (std::size_t k = 1; k < readers.size(); ++k) {
      ArrayInfo dup = *info;
      dup.name = fresh_name(p, name + "_dup" + std::to_string(k - 1));
      dup.io = IoClass::Internal;
      dups.push_back(dup.name);
      declare_after(p, k == 1 ? name : dups[k - 2], dup);
      rename_reads(p.nests[readers[k]], name, dup.name);
    }
    LoopNest& pn = p.nests[producer];
    std::vector<Statement> body;
    for (auto& st : pn.body) {
      body.push_back(st);
      if (st.write.array == name)
        for (auto& d : dups) body.push_back(mirror_copy(st, d));
    }
    pn.body = std::move(body);
  }
  return p;
}

std::set<std::string> detect_reduction_loops(const LoopNest& nest,
                                             const std::string& out_array) {
  std::set<std::string> used;
  bool found = false;
  for (auto& st : nest.body) {
    if (st.write.array != out_array) continue;
    found = true;
    for (auto& ix : st.write.indices)
      for (auto& [id, c] : ix.terms) used.insert(id);
  }
  if (!found)
    throw TransformError("nest does not write array '" + out_array + "'");
  std::set<std::string> out;
  for (auto& l : nest.loops)
    if (!used.count(l.id)) out.insert(l.id);
  return out;
}

AffineProgram reduce_writes(const AffineProgram& program) {
  AffineProgram p = program;
  std::vector<std::string> names;
  for (auto& a : p.arrays) names.push_back(a.name);

  for (auto& name : names) {
    const ArrayInfo* info = p.find_array(name);
    if (!info || info->io != IoClass::Internal) continue;
    auto writers = p.writers_of(name);
    if (writers.size() != 1) continue;
    std::size_t producer = writers[0];
    auto readers = p.readers_of(name, static_cast<std::int64_t>(producer));
    if (readers.empty()) continue;   // local scratch or dead buffer
    if (readers.size() > 1) continue;  // not SPSC-canonical; leave shared
    std::size_t consumer = readers[0];

    LoopNest& pn = p.nests[producer];
    std::set<std::string> reduction = detect_reduction_loops(pn, name);

    // Loops already pinned by every write guard are not carried.
    std::set<std::string> effective;
    for (auto& r : reduction) {
      bool pinned_everywhere = true;
      for (auto& st : pn.body)
        if (st.write.array == name && !st.guard().pin_of(r)) pinned_everywhere = false;
      if (!pinned_everywhere) effective.insert(r);
    }
    if (effective.empty()) continue;

    // Cond. 1 feasibility: post-transform write count must match the
    // consumer's read count, otherwise the buffer stays shared as-is.
    Guard extra;
    for (auto& r : effective) extra.add(r, pn.trip_of(r) - 1);
    std::int64_t writes = 0;
    for (auto& st : pn.body) {
      if (st.write.array != name) continue;
      Guard g = st.guard();
      for (auto& [id, v] : extra.pins) g.add(id, v);
      writes += fire_count(pn, g);
    }
    std::int64_t reads = analytic_load_count(p.nests[consumer], name);
    if (writes != reads) continue;

    // Pure mirror copies are guarded in place; accumulators get a fresh
    // `_shared` buffer holding only final values.
    bool all_copies = true;
    for (auto& st : pn.body) {
      if (st.write.array != name) continue;
      // A guardable mirror copy reads another array of this nest at the
      // write's own indices; guarding it keeps the final values intact.
      bool is_copy = st.rhs.tag == Expr::Tag::Ref && st.rhs.ref.indices == st.write.indices &&
                     st.rhs.ref.array != name;
      if (is_copy) {
        bool local_src = false;
        for (auto& other : pn.body)
          if (other.write.array == st.rhs.ref.array) local_src = true;
        is_copy = local_src;
      }
      all_copies &= is_copy;
    }

    if (all_copies) {
      for (auto& st : pn.body) {
        if (st.write.array != name) continue;
        Guard g = st.guard();
        for (auto& [id, v] : extra.pins) g.add(id, v);
        st.write.guard = g;
        st.rhs.ref.guard = g;
      }
      continue;
    }

    ArrayInfo shared = *info;
    shared.name = fresh_name(p, name + "_shared");
    shared.io = IoClass::Internal;
    declare_after(p, name, shared);

    std::vector<Statement> body;
    for (auto& st : pn.body) {
      body.push_back(st);
      if (st.write.array != name) continue;
      Statement store = mirror_copy(st, shared.name);
      Guard g = st.guard();
      for (auto& [id, v] : extra.pins) g.add(id, v);
      store.write.guard = g;
      store.rhs.ref.guard = g;
      body.push_back(store);
    }
    pn.body = std::move(body);
    rename_reads(p.nests[consumer], name, shared.name);
  }
  return p;
}

std::int64_t analytic_store_count(const LoopNest& nest, const std::string& array) {
  std::int64_t n = 0;
  for (auto& st : nest.body)
    if (st.write.array == array) n += fire_count(nest, st.guard());
  return n;
}

std::int64_t analytic_load_count(const LoopNest& nest, const std::string& array) {
  std::int64_t n = 0;
  for (auto& st : nest.body)
    for (auto& r : st.reads())
      if (r.array == array) n += fire_count(nest, r.guard);
  return n;
}

}  // namespace shls
