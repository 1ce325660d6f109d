#pragma once

#include <iosfwd>
#include <vector>

#include "kmcds/connectivity.hpp"

namespace kmcds {

struct AugmentationTrace {
  std::vector<CutCertificate> chosen_cuts;
  std::vector<std::vector<NodeId>> added_paths;
  std::size_t iterations = 0;
};

struct AugmentOptions {
  /// Verify that the whole graph is k-connected before starting.
  bool check_graph = true;
  /// Pairwise laminarity check of the per-root witness family, run when |T| is at most this.
  std::size_t laminarity_limit = 60;
};

struct AugmentResult {
  NodeSet s;
  AugmentationTrace trace;
};

/// Iteration budget k(2|T| - 3), clamped at zero.
std::size_t iteration_bound(std::size_t k, std::size_t t_size);

/// Covers minimal uncovered demand cuts with shortest T-paths until G[T u S] is k-connected.
AugmentResult augment_simple(const Graph& g, const NodeSet& t, std::size_t k, std::size_t m,
                             const AugmentOptions& opt = {});

/// Counting checks on a finished trace: the iteration budget, the per-root budget 2|T|-3 and,
/// for small T, laminarity of the per-root witness sets. Throws InvariantViolation.
void check_trace(const Graph& g, const NodeSet& t, std::size_t k, const AugmentationTrace& trace,
                 std::size_t laminarity_limit = 60);

/// `iter <i> cut <set> path <nodes>` lines.
void write_trace(std::ostream& os, const AugmentationTrace& trace);

struct UnweightedRun {
  NodeSet t_pre;    // layered MIS plus connector
  NodeSet t_post;   // after pruning
  NodeSet solution;
  std::size_t iterations = 0;
  AugmentationTrace trace;  // concatenated over the k' stages
};

UnweightedRun run_unweighted_kmcds(const Graph& g, std::size_t k, std::size_t m, bool prune = true);
NodeSet solve_unweighted_kmcds(const Graph& g, std::size_t k, std::size_t m);

}  // namespace kmcds
