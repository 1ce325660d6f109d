#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <memory>
#include <vector>

#include "kmcds/connectivity.hpp"
#include "kmcds/instance.hpp"

namespace kmcds {

struct LexLess {
  bool operator()(const NodeSet& a, const NodeSet& b) const { return lex_less(a, b); }
};

struct CoverEvent {
  Weight alpha;
  std::vector<NodeSet> min_cores;
  NodeId bought = 0;
};

struct DualState {
  std::map<NodeSet, Weight, LexLess> y;
  std::vector<Weight> residual;
  std::vector<CoverEvent> events;

  Weight total() const;
};

/// A cut family seen only through its min-cores after buying a set of nodes.
class CutFamily {
 public:
  virtual ~CutFamily() = default;
  /// Minimal members of the family left uncovered by `bought`.
  virtual std::vector<NodeSet> min_cores(const NodeSet& bought) = 0;
  virtual bool covered(const NodeSet& bought) = 0;
};

/// Demand cuts rooted at r left uncovered by P (the nodes already bought).
class ResidualDemandFamily : public CutFamily {
 public:
  ResidualDemandFamily(const Graph& g, const NodeSet& t, std::size_t k, NodeId r, NodeSet p);
  std::vector<NodeSet> min_cores(const NodeSet& bought) override;
  bool covered(const NodeSet& bought) override;

 private:
  NodeSet p_;
  SteinerCutOracle oracle_;
};

/// Union of the core families of pairwise independent min-cores.
class CoreUnionFamily : public CutFamily {
 public:
  CoreUnionFamily(const Graph& g, const NodeSet& t, std::size_t k, NodeId r, NodeSet p,
                  const std::vector<NodeSet>& members, const std::vector<NodeSet>& all_min_cores);
  std::vector<NodeSet> min_cores(const NodeSet& bought) override;
  bool covered(const NodeSet& bought) override;

 private:
  NodeSet p_;
  SteinerCutOracle oracle_;
};

/// Largest demand cut rooted at r containing Z and no other min-core.
CutCertificate max_core(const Graph& g, const NodeSet& t, const NodeSet& s, std::size_t k, NodeId r,
                        const NodeSet& z, const std::vector<NodeSet>& other_min_cores);

/// Z and W are dependent when Z n T lies in Gamma(W') or W n T lies in Gamma(Z').
bool dependent(const Graph& g, const NodeSet& t, const NodeSet& z, const NodeSet& z_max,
               const NodeSet& w, const NodeSet& w_max);

/// Greedy colouring of the dependence graph in degeneracy order. Each returned family lists
/// indices into min_cores. At most 2 floor((k-1)/gamma) + 1 families.
std::vector<std::vector<std::size_t>> decompose_independent(const Graph& g, const NodeSet& t,
                                                            const std::vector<NodeSet>& min_cores,
                                                            const std::vector<NodeSet>& max_cores,
                                                            std::size_t k, std::size_t gamma);

struct CoverOptions {
  /// Re-derive a witness cut for every kept node (one extra oracle pass per kept node).
  bool verify_witnesses = false;
  /// Pairwise strong-laminarity check over all event min-cores, skipped above this many sets.
  std::size_t laminarity_limit = 4000;
};

struct CoverResult {
  NodeSet chosen;
  std::vector<NodeId> order;  // purchase order in the increase phase
  DualState dual;
  std::size_t max_degree = 0;     // largest d(v) seen at any event
  double worst_degree_sum = 0.0;     // max over events of sum d / (15|M| - 5)
};

/// Increase phase then reverse delete. `t_cur` holds T and every node bought earlier.
CoverResult cover_uncrossable(const Graph& g, const NodeSet& t_cur, const std::vector<Weight>& w,
                              CutFamily& family, const CoverOptions& opt = {});

struct CoverCall {
  NodeId root = 0;
  std::size_t gamma = 0;  // 0 for the final call on the whole residual family
  std::size_t min_cores = 0;
  NodeSet chosen;
  Weight dual_total;
  Weight weight;
  std::size_t events = 0;
  std::size_t max_degree = 0;
};

struct PrimalDualOptions {
  bool check_graph = true;
  CoverOptions cover;
  std::ostream* events = nullptr;  // `event <t> alpha <a> mincores <count> buy <node>`
  std::ostream* duals = nullptr;   // `dual <cut> <value>`
  /// Sees every cover call with the T u S it started from.
  std::function<void(const NodeSet& t_cur, const CoverResult&)> on_cover;
};

struct PrimalDualRun {
  NodeSet s;
  std::vector<CoverCall> calls;
  std::size_t events = 0;
};

/// Buys S outside T so that T u S is k-connected, root by root over the k lowest nodes of T.
PrimalDualRun augment_primal_dual(const Graph& g, const NodeSet& t, std::size_t k,
                                  const std::vector<Weight>& w, const PrimalDualOptions& opt = {});

struct WeightedRun {
  NodeSet t0;
  NodeSet t_post;
  NodeSet solution;
  std::size_t cover_calls = 0;
  std::size_t events = 0;
};

/// Weighted m-dominating set, joined when needed, then raised from connectivity 1 to k.
WeightedRun run_weighted_kmcds(const Graph& g, std::size_t k, std::size_t m, const std::vector<Weight>& w,
                               const PrimalDualOptions& opt = {});
NodeSet solve_weighted_kmcds(const Graph& g, std::size_t k, std::size_t m, const std::vector<Weight>& w);

}  // namespace kmcds
