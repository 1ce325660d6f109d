#include "kmcds/block_cut_tree.hpp"

#include <algorithm>

namespace kmcds {

BlockCutTree block_cut_tree(const Graph& g, const NodeSet& within) {
  const std::size_t n = g.size();
  BlockCutTree out;
  out.cut_nodes = NodeSet(n);

  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> disc(n, kUnvisited), low(n, 0);
  std::vector<std::pair<NodeId, NodeId>> edge_stack;
  struct Frame {
    NodeId v;
    NodeId parent;
    std::size_t next;
    std::size_t children;
  };
  std::vector<Frame> stack;
  std::size_t timer = 0;

  auto pop_block = [&](NodeId u, NodeId v) {
    NodeSet block(n);
    while (!edge_stack.empty()) {
      auto e = edge_stack.back();
      edge_stack.pop_back();
      block.insert(e.first);
      block.insert(e.second);
      if (e.first == u && e.second == v) break;
    }
    out.blocks.push_back(std::move(block));
  };

  for (NodeId root : within) {
    if (disc[root] != kUnvisited) continue;
    disc[root] = low[root] = timer++;
    stack.push_back({root, root, 0, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto nbrs = g.neighbors(f.v);
      if (f.next < nbrs.size()) {
        NodeId w = nbrs[f.next++];
        if (!within.contains(w)) continue;
        if (disc[w] == kUnvisited) {
          edge_stack.emplace_back(f.v, w);
          disc[w] = low[w] = timer++;
          ++f.children;
          stack.push_back({w, f.v, 0, 0});
        } else if (w != f.parent && disc[w] < disc[f.v]) {
          edge_stack.emplace_back(f.v, w);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      Frame done = f;
      stack.pop_back();
      if (stack.empty()) {
        if (done.children >= 2) out.cut_nodes.insert(done.v);
        continue;
      }
      Frame& parent = stack.back();
      low[parent.v] = std::min(low[parent.v], low[done.v]);
      if (low[done.v] >= disc[parent.v]) {
        // the DFS root is classified when its frame is popped
        if (parent.v != parent.parent) out.cut_nodes.insert(parent.v);
        pop_block(parent.v, done.v);
      }
    }
  }

  std::sort(out.blocks.begin(), out.blocks.end(), [](const NodeSet& a, const NodeSet& b) { return lex_less(a, b); });
  for (std::size_t b = 0; b < out.blocks.size(); ++b) {
    for (NodeId v : out.blocks[b] & out.cut_nodes) out.tree_edges.emplace_back(b, v);
  }
  return out;
}

}  // namespace kmcds
