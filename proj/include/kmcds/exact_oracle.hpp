#pragma once

#include <optional>
#include <vector>

#include "kmcds/connectivity.hpp"
#include "kmcds/dominating.hpp"
#include "kmcds/instance.hpp"

namespace kmcds {

struct OracleResult {
  Weight optimum;
  NodeSet witness;
  std::size_t explored = 0;
  std::size_t limit = 0;
};

/// Minimum (k,m)-CDS by subset enumeration. Empty `w` means unit weights, enumerated by
/// cardinality then lexicographically; otherwise subsets are taken best-first by weight.
/// Throws BudgetExceeded above `budget` nodes and InfeasibleInstance when nothing qualifies.
OracleResult exact_min_kmcds(const Graph& g, std::size_t k, std::size_t m, const std::vector<Weight>& w = {},
                             std::size_t budget = 18);

/// Cheapest S outside T with G[T u S] k-connected.
OracleResult exact_augmentation(const Graph& g, const NodeSet& t, std::size_t k, const std::vector<Weight>& w,
                                std::size_t budget = 18);

/// All demand cuts. With a root: Steiner (T,r)-cuts X of V with |Gamma_T(X)| = k-1 that S does
/// not touch. Without: T-cuts X of T with |Gamma_T(X)| = k-1 crossed by no T-path through S.
std::vector<CutCertificate> enumerate_demand_cuts(const Graph& g, const NodeSet& t, const NodeSet& s,
                                                  std::size_t k, std::optional<NodeId> r,
                                                  std::size_t budget = 16);

/// Members of the family holding Z and no other minimal member.
std::vector<NodeSet> cores_of(const std::vector<NodeSet>& family, const NodeSet& z);

struct UncrossReport {
  std::size_t pairs = 0;
  std::size_t by_meet_join = 0;    // X n Y and X u Y both in the family
  std::size_t by_difference = 0;   // X \ Y+ and Y \ X+ both in the family
  std::size_t failures = 0;
  std::size_t failures_sharing_t = 0;  // failing pairs with X n Y n T nonempty
};

/// Uncrossing dichotomy checked on every pair of an explicit family.
UncrossReport check_uncrossable(const Graph& g, const NodeSet& t, const std::vector<NodeSet>& family);

/// Cheapest node set outside t_cur touching Gamma(X) for every X in the family.
OracleResult exact_family_cover(const Graph& g, const NodeSet& t_cur, const std::vector<NodeSet>& family,
                                const std::vector<Weight>& w, std::size_t budget = 20);

OracleResult exact_multicover(const MulticoverInstance& inst, std::size_t cap = 20);

}  // namespace kmcds
