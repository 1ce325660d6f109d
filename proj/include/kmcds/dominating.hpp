#pragma once

#include <vector>

#include "kmcds/graph.hpp"
#include "kmcds/instance.hpp"

namespace kmcds {

struct LayeredMis {
  std::vector<NodeSet> layers;  // I_1..I_m
  NodeSet connector;

  NodeSet nodes() const;
};

/// Layer i is the lowest-index greedy MIS of the graph left after removing layers 1..i-1.
LayeredMis layered_mis(const Graph& g, std::size_t m);

/// Nodes joining the components of G[I1]. Prefers one node touching the most components,
/// otherwise an adjacent pair bridging two of them.
NodeSet connector(const Graph& g, const NodeSet& i1);

/// Drops nodes of T in descending (weight, index) order while G[T] stays connected and
/// m-dominating. Empty `w` means unit weights.
NodeSet prune_minimal(const Graph& g, const NodeSet& t, std::size_t m, const std::vector<Weight>& w = {});

struct FractionalSolution {
  std::vector<double> x;
  double objective = 0.0;
  std::size_t rounds = 0;
  std::size_t constraints = 0;
};

/// Largest violation of the m-domination relaxation at x and the set S that attains it at v.
/// Returns 0 when node v is satisfied.
double most_violated(const Graph& g, const std::vector<double>& x, std::size_t m, NodeId v,
                     std::vector<NodeId>* removed = nullptr);

/// Cutting-plane solve of the m-domination relaxation, separating with sorted neighbor lists.
FractionalSolution solve_lp_mds(const Graph& g, const std::vector<Weight>& w, std::size_t m);

struct MulticoverInstance {
  std::vector<std::size_t> demand;               // per point
  std::vector<Weight> weight;                    // per disk
  std::vector<std::vector<std::size_t>> disks;   // points contained in each disk
  std::vector<NodeId> disk_node;                 // graph node behind each disk

  bool feasible() const;
};

/// Repeatedly takes the disk with the least weight per newly covered demand unit (ties to the
/// lowest index). Returns ascending disk indices. Throws InfeasibleInstance when infeasible.
std::vector<std::size_t> greedy_disk_multicover(const MulticoverInstance& inst);

/// Threshold rounding: U = {x <= 1/2}, residual multicover over U, output D' plus V \ U.
NodeSet round_mds(const Graph& g, const std::vector<Weight>& w, std::size_t m, const FractionalSolution& xs);

/// Every node is a point of demand m covered by the closed neighborhoods of its selectors.
NodeSet mds_for_kcds_reduction(const Graph& g, const std::vector<Weight>& w, std::size_t k, std::size_t m);

/// The reduction when m is k or k+1, the relaxation pipeline otherwise.
NodeSet weighted_m_dominating(const Graph& g, const std::vector<Weight>& w, std::size_t k, std::size_t m);

}  // namespace kmcds
