// Copyright 2026 The shls Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "shls/ir.hpp"

namespace shls {

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ChannelKind { SharedBuffer, Fifo };

struct Node {
  std::string name;        // derived from the primary output buffer
  std::size_t nest_index;  // into program.nests
  /// Communicated buffers this node produces (program outputs and internal
  /// buffers read by later nests). Duplicate buffers mirroring one value
  /// root all belong to the same node.
  std::vector<std::string> out_buffers;
  /// External input arrays this node reads.
  std::vector<std::string> external_inputs;
};

struct Edge {
  std::size_t producer = 0;
  std::size_t consumer = 0;
  std::string buffer;
  ChannelKind kind = ChannelKind::SharedBuffer;
};

/// DAG over loop nests. Node order equals nest order, which is already a
/// topological order because reads may only reference earlier nests.
struct DataflowGraph {
  AffineProgram program;
  std::vector<Node> nodes;
  std::vector<Edge> edges;
  std::vector<std::string> sources;        // external input arrays
  std::vector<std::size_t> output_nodes;   // nodes writing program outputs

  const LoopNest& nest_of(std::size_t node) const {
    return program.nests[nodes[node].nest_index];
  }
  std::vector<std::size_t> in_edges(std::size_t node) const;
  std::vector<std::size_t> out_edges(std::size_t node) const;
  /// Last output-producing node; the model's total is the max over all
  /// output nodes, which collapses to this node for single-sink programs.
  std::size_t sink() const;
  bool node_reaches_output(std::size_t node) const;
};

/// Builds the dataflow DAG from an SPSC-canonical program: one node per
/// nest, one edge per communicated buffer. Throws GraphError when a nest
/// produces more than one distinct value (single-output rule) or when a
/// buffer has multiple producers.
DataflowGraph build_graph(const AffineProgram& program);

}  // namespace shls
