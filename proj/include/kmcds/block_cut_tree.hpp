#pragma once

#include <utility>
#include <vector>

#include "kmcds/graph.hpp"

namespace kmcds {

/// Biconnected decomposition of an induced subgraph. Isolated nodes belong to no block.
struct BlockCutTree {
  std::vector<NodeSet> blocks;
  NodeSet cut_nodes;
  /// (block index, cut node) incidences.
  std::vector<std::pair<std::size_t, NodeId>> tree_edges;
};

BlockCutTree block_cut_tree(const Graph& g, const NodeSet& within);
inline BlockCutTree block_cut_tree(const Graph& g) { return block_cut_tree(g, g.all()); }

}  // namespace kmcds
