#pragma once

#include <optional>
#include <vector>

#include "kmcds/flow.hpp"
#include "kmcds/graph.hpp"

namespace kmcds {

/// G[S] is k-connected; complete graphs on at most k nodes count as k-connected.
bool is_k_connected(const Graph& g, const NodeSet& s, std::size_t k);

/// Graph on the same index space whose edges join u,v in T when uv is an edge of G[T] or
/// some T-path with all inner nodes in S joins them. Nodes outside T are isolated.
Graph shortcut_graph(const Graph& g, const NodeSet& t, const NodeSet& s);

enum class CutKind { TCut, SteinerTCut, TRCut, DemandCut };

struct CutCertificate {
  NodeSet x;
  NodeSet boundary;       // Gamma(X) in G
  NodeSet boundary_in_t;  // Gamma_T(X)
  CutKind kind = CutKind::DemandCut;
  std::optional<NodeId> root;
  bool covered = false;
};

CutCertificate make_certificate(const Graph& g, const NodeSet& t, const NodeSet& x, CutKind kind,
                                std::optional<NodeId> root = std::nullopt);
/// Throws InvariantViolation when the certificate breaks a kind invariant.
void check_certificate(const Graph& g, const NodeSet& t, std::size_t k, const CutCertificate& c);

/// Lowest-index nodes of T used as roots (at most k of them).
std::vector<NodeId> lowest_roots(const NodeSet& t, std::size_t k);

/// Keeps the inclusion-minimal sets, deduplicated, in lexicographic order.
std::vector<NodeSet> minimal_sets(std::vector<NodeSet> sets);

/// Uncovered demand cuts of T for a growing set S of bought nodes. Answers come from flows in
/// G[T u S] with S protected; results for source/sink pairs survive additions that do not
/// touch their side.
class DemandCutOracle {
 public:
  DemandCutOracle(const Graph& g, NodeSet t, std::size_t k);
  void add(const NodeSet& nodes);
  const NodeSet& bought() const { return s_; }
  /// Lexicographically smallest inclusion-minimal uncovered demand cut, if any.
  std::optional<CutCertificate> find();

 private:
  enum class State { Unknown, Loose, Tight };
  struct Pair {
    NodeId source;
    NodeId sink;
    State state = State::Unknown;
    NodeSet side;
  };
  const Graph* g_;
  NodeSet t_;
  std::size_t k_;
  NodeSet s_;
  std::vector<Pair> pairs_;
};

/// Throws PreconditionViolation if G[T] is not (k-1)-connected.
std::optional<CutCertificate> find_min_violated_demand_cut(const Graph& g, const NodeSet& t,
                                                           const NodeSet& s, std::size_t k);

/// Minimum-length T-path from X to T \ X+ with inner nodes outside T, as the full node sequence.
/// Ties: fewest inner nodes, then lexicographic inner sequence, then smallest endpoints.
std::vector<NodeId> find_covering_path(const Graph& g, const NodeSet& t, const NodeSet& s,
                                       const CutCertificate& x);

/// Minimal tight sides of a family of Steiner cuts rooted at r. Seed i asks for the smallest
/// X containing seeds[i] with r outside X+, X avoiding soft_sinks[i], Gamma(X) missing every
/// protected node and |Gamma_T(X)| = k-1. The flow lives on G[T u protected].
class SteinerCutOracle {
 public:
  SteinerCutOracle(const Graph& g, NodeSet t, std::size_t k, NodeId r, std::vector<NodeSet> seeds,
                   std::vector<NodeSet> soft_sinks = {});
  /// Incremental when `p` contains the previous protected set, otherwise recomputes.
  void set_protected(const NodeSet& p);
  const NodeSet& protected_nodes() const { return p_; }

  /// Tight side per seed (nullopt when the seed's cut value is at least k).
  const std::vector<std::optional<NodeSet>>& sides();
  /// Inclusion-minimal tight sides.
  std::vector<NodeSet> minimal_sides();
  /// No seed is tight. Stops at the first tight seed.
  bool all_loose();

  std::size_t seed_count() const { return seeds_.size(); }
  std::size_t flow_queries() const { return queries_; }

 private:
  void evaluate(std::size_t i);
  FlowNetwork& network();

  const Graph* g_;
  NodeSet t_;
  std::size_t k_;
  NodeId r_;
  std::vector<NodeSet> seeds_;
  std::vector<NodeSet> soft_;
  NodeSet p_;
  NodeSet sink_;
  std::vector<bool> known_;
  std::vector<std::optional<NodeSet>> side_;
  std::optional<FlowNetwork> net_;
  std::size_t queries_ = 0;
};

/// Seeds for the residual demand family rooted at r: every t in T outside r+.
std::vector<NodeSet> demand_seeds(const Graph& g, const NodeSet& t, NodeId r);

/// Min-cores of the demand family rooted at r that S leaves uncovered.
std::vector<CutCertificate> min_cores(const Graph& g, const NodeSet& t, const NodeSet& s,
                                      std::size_t k, NodeId r);

}  // namespace kmcds
