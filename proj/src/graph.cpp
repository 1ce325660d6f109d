#include "kmcds/graph.hpp"

#include <algorithm>

#include "kmcds/errors.hpp"

namespace kmcds {

Graph Graph::from_edges(std::size_t n, const std::vector<std::pair<NodeId, NodeId>>& edges,
                        bool unit_disk) {
  Graph g(n);
  g.unit_disk_ = unit_disk;
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw ValidationError("edge endpoint out of range");
    if (u == v) throw ValidationError("self-loop at node " + std::to_string(u));
    if (g.adj_sets_[u].contains(v)) continue;
    g.adj_sets_[u].insert(v);
    g.adj_sets_[v].insert(u);
    ++g.edges_;
  }
  for (NodeId v = 0; v < n; ++v) g.adj_[v] = g.adj_sets_[v].to_vector();
  return g;
}

NodeSet gamma(const Graph& g, const NodeSet& x) {
  NodeSet out(g.size());
  for (NodeId v : x) out |= g.neighbor_set(v);
  out -= x;
  return out;
}

NodeSet gamma(const Graph& g, const NodeSet& x, const NodeSet& t) { return gamma(g, x) & t; }

NodeSet closure(const Graph& g, const NodeSet& x) { return gamma(g, x) | x; }

std::vector<NodeSet> components(const Graph& g, const NodeSet& within) {
  std::vector<NodeSet> out;
  NodeSet seen(g.size());
  std::vector<NodeId> stack;
  for (NodeId s : within) {
    if (seen.contains(s)) continue;
    NodeSet comp(g.size());
    seen.insert(s);
    comp.insert(s);
    stack.push_back(s);
    while (!stack.empty()) {
      NodeId u = stack.back();
      stack.pop_back();
      for (NodeId v : g.neighbors(u)) {
        if (within.contains(v) && !seen.contains(v)) {
          seen.insert(v);
          comp.insert(v);
          stack.push_back(v);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g, const NodeSet& within) {
  if (within.empty()) return false;
  NodeSet seen(g.size());
  std::vector<NodeId> stack{within.first()};
  seen.insert(within.first());
  std::size_t reached = 1;
  while (!stack.empty()) {
    NodeId u = stack.back();
    stack.pop_back();
    for (NodeId v : g.neighbors(u)) {
      if (within.contains(v) && !seen.contains(v)) {
        seen.insert(v);
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == within.size();
}

bool is_m_dominating(const Graph& g, const NodeSet& s, std::size_t m) {
  for (NodeId v = 0; v < g.size(); ++v) {
    if (s.contains(v)) continue;
    if (g.neighbor_set(v).intersection_size(s) < m) return false;
  }
  return true;
}

namespace shapes {

Graph path(std::size_t n) {
  std::vector<std::pair<NodeId, NodeId>> e;
  for (NodeId i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

Graph cycle(std::size_t n) {
  std::vector<std::pair<NodeId, NodeId>> e;
  for (NodeId i = 0; i < n; ++i) e.emplace_back(i, static_cast<NodeId>((i + 1) % n));
  return Graph::from_edges(n, e);
}

Graph complete(std::size_t n) {
  std::vector<std::pair<NodeId, NodeId>> e;
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edges(n, e);
}

Graph star(std::size_t leaves) {
  std::vector<std::pair<NodeId, NodeId>> e;
  for (NodeId i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, e);
}

Graph wheel(std::size_t rim) {
  std::vector<std::pair<NodeId, NodeId>> e;
  for (NodeId i = 1; i <= rim; ++i) {
    e.emplace_back(0, i);
    e.emplace_back(i, static_cast<NodeId>(i % rim + 1));
  }
  return Graph::from_edges(rim + 1, e);
}

}  // namespace shapes

}  // namespace kmcds
