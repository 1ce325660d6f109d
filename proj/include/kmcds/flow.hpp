#pragma once

#include <cstdint>
#include <vector>

#include "kmcds/graph.hpp"

namespace kmcds {

/// How a node participates in a vertex-cut flow network.
enum class NodeCap : std::uint8_t {
  Absent,    // not part of the network
  Free,      // present but carries no flow (capacity 0); may sit on a cut for free
  Unit,      // cuttable at cost 1
  Infinite,  // protected: never on a cut
};

/// Node-split flow network over a fixed graph and capacity assignment.
///
/// Each present node v becomes v_in -> v_out with its capacity; every edge uv becomes
/// u_out -> v_in and v_out -> u_in with infinite capacity. A query names
///   sources     nodes forced into the source side X (their capacity is lifted),
///   hard sinks  nodes that must lie outside X and outside Gamma(X),
///   soft sinks  nodes that must lie outside X but may lie on the cut.
/// Augmenting paths are found by BFS; the network is reused across queries.
class FlowNetwork {
 public:
  FlowNetwork(const Graph& g, std::vector<NodeCap> caps);

  struct Query {
    const NodeSet* sources = nullptr;
    const NodeSet* hard_sinks = nullptr;
    const NodeSet* soft_sinks = nullptr;
    /// Drop edges joining a source directly to a hard sink.
    bool ignore_direct_edges = false;
  };

  /// Max-flow value, capped at `limit`. Returns `limit` when the flow reaches it or
  /// when sources and sinks are joined by a path of infinite capacity.
  std::size_t run(const Query& q, std::size_t limit);

  /// True when the last run hit an infinite-capacity path.
  bool last_infinite() const { return infinite_; }

  /// Valid after a run that stopped below its limit.
  NodeSet min_side() const;
  NodeSet max_side() const;
  NodeSet cut() const;

  const Graph& graph() const { return *g_; }
  NodeCap cap(NodeId v) const { return caps_[v]; }

 private:
  bool augment();
  int internal_capacity(NodeId v) const;
  void reach_from_sources(std::vector<std::uint8_t>& in, std::vector<std::uint8_t>& out) const;

  const Graph* g_;
  std::vector<NodeCap> caps_;
  // CSR adjacency over present nodes; rev_[a] is the arc index of the opposite direction.
  std::vector<std::size_t> offset_;
  std::vector<NodeId> head_;
  std::vector<std::size_t> rev_;
  std::vector<int> arc_flow_;
  std::vector<int> through_;

  Query q_;
  bool infinite_ = false;

  // BFS scratch
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  std::vector<std::int64_t> parent_;
};

struct VertexCut {
  std::size_t size = 0;
  NodeSet cut;
  NodeSet min_side;
  NodeSet max_side;
};

/// Minimum vertex cut between two node groups. Direct source-sink edges are ignored;
/// protected nodes are never cut. Throws InfiniteCut if no finite separator exists.
VertexCut min_vertex_cut(const Graph& g, const NodeSet& sources, const NodeSet& sinks,
                         const NodeSet& protected_nodes);

}  // namespace kmcds
