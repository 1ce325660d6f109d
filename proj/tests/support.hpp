#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "kmcds/graph.hpp"
#include "kmcds/instance.hpp"

namespace kmcds::test {

// Edges written as letter pairs: "ab bc cd da" on nodes a=0, b=1, ...
inline Graph letters(std::size_t n, const std::string& spec) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (std::size_t i = 0; i + 1 < spec.size(); ++i) {
    if (spec[i] == ' ' || spec[i + 1] == ' ') continue;
    edges.emplace_back(static_cast<NodeId>(spec[i] - 'a'), static_cast<NodeId>(spec[i + 1] - 'a'));
    ++i;
  }
  return Graph::from_edges(n, edges);
}

inline NodeSet set_of(std::size_t n, const std::string& members) {
  NodeSet s(n);
  for (char c : members) s.insert(static_cast<NodeId>(c - 'a'));
  return s;
}

// C4 a-b-c-d-a
inline Graph c4() { return letters(4, "ab bc cd da"); }
// C4 plus e adjacent to a and c
inline Graph c4e() { return letters(5, "ab bc cd da ae ec"); }

inline Micro units(std::int64_t v) { return Micro{v * Micro::kScale}; }

// Small unit disk instance on a side x side square with radius 20.
inline UnitDiskInstance small_udg(std::size_t n, std::uint64_t seed, std::int64_t side = 40,
                                  WeightMode mode = WeightMode::unit()) {
  return random_instance(n, units(side), units(side), units(20), seed, mode);
}

inline NodeSet random_subset(std::size_t n, std::mt19937_64& rng, double p = 0.5) {
  std::bernoulli_distribution coin(p);
  NodeSet s(n);
  for (NodeId v = 0; v < n; ++v) {
    if (coin(rng)) s.insert(v);
  }
  return s;
}

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

inline NodeSet from_mask(std::size_t n, std::uint64_t mask) {
  NodeSet s(n);
  for (NodeId v = 0; v < n; ++v) {
    if ((mask >> v) & 1u) s.insert(v);
  }
  return s;
}

// Connectivity of G[S] after deleting every subset of size < k; no flows involved.
inline bool brute_k_connected(const Graph& g, const NodeSet& s, std::size_t k) {
  if (k == 0) return true;
  std::vector<NodeId> nodes = s.to_vector();
  if (nodes.empty()) return false;
  if (nodes.size() <= k) {
    for (NodeId a : nodes) {
      for (NodeId b : nodes) {
        if (a != b && !g.adjacent(a, b)) return false;
      }
    }
    return true;
  }
  const std::size_t q = nodes.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << q); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) >= k) continue;
    NodeSet rest = s;
    for (std::size_t i = 0; i < q; ++i) {
      if ((mask >> i) & 1u) rest.erase(nodes[i]);
    }
    if (!is_connected(g, rest)) return false;
  }
  return true;
}

struct Case {
  Graph g;
  NodeSet t;
  std::size_t k = 0;
  std::size_t m = 0;
};

// Small unit disk graph with a random T that is a (k-1, m)-CDS, checked by brute force.
// The graph itself is required to be k-connected.
inline std::optional<Case> random_case(std::uint64_t seed, std::size_t n, std::size_t k, std::size_t m,
                                       std::int64_t side = 40) {
  std::mt19937_64 rng(seed * 7919 + n);
  Case c{build_unit_disk(small_udg(n, seed, side)), NodeSet(n), k, m};
  if (!brute_k_connected(c.g, c.g.all(), k)) return std::nullopt;
  for (int attempt = 0; attempt < 200; ++attempt) {
    NodeSet t = random_subset(n, rng, 0.35 + 0.05 * static_cast<double>(attempt % 10));
    if (t.empty() || !is_m_dominating(c.g, t, m)) continue;
    if (k >= 2 && !brute_k_connected(c.g, t, k - 1)) continue;
    c.t = t;
    return c;
  }
  return std::nullopt;
}

}  // namespace kmcds::test
