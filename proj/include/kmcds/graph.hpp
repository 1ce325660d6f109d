#pragma once

#include <span>
#include <utility>
#include <vector>

#include "kmcds/node_set.hpp"

namespace kmcds {

/// Immutable simple undirected graph. Neighbor lists are ascending.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n), adj_sets_(n, NodeSet(n)) {}

  /// Duplicate edges are merged; self-loops are rejected.
  static Graph from_edges(std::size_t n, const std::vector<std::pair<NodeId, NodeId>>& edges,
                          bool unit_disk = false);

  std::size_t size() const { return adj_.size(); }
  std::size_t edge_count() const { return edges_; }
  std::span<const NodeId> neighbors(NodeId v) const { return adj_[v]; }
  const NodeSet& neighbor_set(NodeId v) const { return adj_sets_[v]; }
  std::size_t degree(NodeId v) const { return adj_[v].size(); }
  bool adjacent(NodeId u, NodeId v) const { return adj_sets_[u].contains(v); }

  /// True when the graph came from unit-disk geometry; gates the disk-specific assertions.
  bool is_unit_disk() const { return unit_disk_; }

  NodeSet all() const { return NodeSet::full(size()); }
  NodeSet empty_set() const { return NodeSet(size()); }

 private:
  std::vector<std::vector<NodeId>> adj_;
  std::vector<NodeSet> adj_sets_;
  std::size_t edges_ = 0;
  bool unit_disk_ = false;
};

/// Open neighborhood: nodes outside X adjacent to X.
NodeSet gamma(const Graph& g, const NodeSet& x);
/// Open neighborhood restricted to T.
NodeSet gamma(const Graph& g, const NodeSet& x, const NodeSet& t);
/// X together with its open neighborhood.
NodeSet closure(const Graph& g, const NodeSet& x);

std::vector<NodeSet> components(const Graph& g, const NodeSet& within);
bool is_connected(const Graph& g, const NodeSet& within);

/// Every node outside S has at least m neighbors in S.
bool is_m_dominating(const Graph& g, const NodeSet& s, std::size_t m);

/// Star, cycle, path, complete graph and wheel builders used by tests and fixtures.
namespace shapes {
Graph path(std::size_t n);
Graph cycle(std::size_t n);
Graph complete(std::size_t n);
Graph star(std::size_t leaves);
/// Hub 0 joined to the rim cycle 1..rim.
Graph wheel(std::size_t rim);
}  // namespace shapes

}  // namespace kmcds
