#include "kmcds/validate.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/push_relabel_max_flow.hpp>

#include <vector>

namespace kmcds {

namespace {

using Traits = boost::adjacency_list_traits<boost::vecS, boost::vecS, boost::directedS>;
using FlowGraph = boost::adjacency_list<
    boost::vecS, boost::vecS, boost::directedS, boost::no_property,
    boost::property<boost::edge_capacity_t, long,
                    boost::property<boost::edge_residual_capacity_t, long,
                                    boost::property<boost::edge_reverse_t, Traits::edge_descriptor>>>>;

class SplitGraph {
 public:
  SplitGraph(const Graph& g, const std::vector<NodeId>& nodes) : fg_(2 * nodes.size()) {
    std::vector<long> local(g.size(), -1);
    for (std::size_t i = 0; i < nodes.size(); ++i) local[nodes[i]] = static_cast<long>(i);
    const long big = static_cast<long>(nodes.size()) + 1;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      arc(2 * i, 2 * i + 1, 1);
      for (NodeId u : g.neighbors(nodes[i])) {
        if (local[u] >= 0) arc(2 * i + 1, 2 * static_cast<std::size_t>(local[u]), big);
      }
    }
  }

  long flow(std::size_t from, std::size_t to) {
    return boost::push_relabel_max_flow(fg_, 2 * from + 1, 2 * to);
  }

 private:
  void arc(std::size_t a, std::size_t b, long cap) {
    auto cap_map = boost::get(boost::edge_capacity, fg_);
    auto rev_map = boost::get(boost::edge_reverse, fg_);
    auto e = boost::add_edge(a, b, fg_).first;
    auto r = boost::add_edge(b, a, fg_).first;
    cap_map[e] = cap;
    cap_map[r] = 0;
    rev_map[e] = r;
    rev_map[r] = e;
  }

  FlowGraph fg_;
};

}  // namespace

bool independent_k_connected(const Graph& g, const NodeSet& s, std::size_t k) {
  if (k == 0) return true;
  std::vector<NodeId> nodes = s.to_vector();
  if (nodes.empty()) return false;
  auto adjacent = [&](NodeId a, NodeId b) {
    for (NodeId u : g.neighbors(a)) {
      if (u == b) return true;
    }
    return false;
  };
  if (nodes.size() <= k) {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      for (std::size_t j = i + 1; j < nodes.size(); ++j) {
        if (!adjacent(nodes[i], nodes[j])) return false;
      }
    }
    return true;
  }
  // a separator of size < k misses one of any k nodes; test those against everything
  SplitGraph sg(g, nodes);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (j == i || adjacent(nodes[i], nodes[j])) continue;
      if (sg.flow(i, j) < static_cast<long>(k)) return false;
    }
  }
  return true;
}

bool independent_m_dominating(const Graph& g, const NodeSet& s, std::size_t m) {
  std::vector<bool> in(g.size(), false);
  for (NodeId v : s.to_vector()) in[v] = true;
  for (NodeId v = 0; v < g.size(); ++v) {
    if (in[v]) continue;
    std::size_t count = 0;
    for (NodeId u : g.neighbors(v)) count += in[u] ? 1 : 0;
    if (count < m) return false;
  }
  return true;
}

Validity validate_kmcds(const Graph& g, const NodeSet& s, std::size_t k, std::size_t m) {
  return {independent_k_connected(g, s, k), independent_m_dominating(g, s, m)};
}

}  // namespace kmcds
