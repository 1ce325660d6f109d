#include "kmcds/exact_oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "kmcds/errors.hpp"

namespace kmcds {

namespace {

using Mask = std::uint64_t;

Mask to_mask(const NodeSet& s) {
  Mask m = 0;
  for (NodeId v : s) m |= Mask{1} << v;
  return m;
}

NodeSet from_mask(std::size_t n, Mask m) {
  NodeSet s(n);
  while (m != 0) {
    s.insert(static_cast<NodeId>(std::countr_zero(m)));
    m &= m - 1;
  }
  return s;
}

bool lex_mask_less(Mask a, Mask b) {
  while (a != b) {
    if (a == 0) return true;
    if (b == 0) return false;
    int la = std::countr_zero(a), lb = std::countr_zero(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  return false;
}

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(g.size(), 0);
  for (NodeId v = 0; v < g.size(); ++v) {
    for (NodeId u : g.neighbors(v)) adj[v] |= Mask{1} << u;
  }
  return adj;
}

bool dominates(const std::vector<Mask>& adj, Mask s, std::size_t m) {
  for (std::size_t v = 0; v < adj.size(); ++v) {
    if (s >> v & 1) continue;
    if (static_cast<std::size_t>(std::popcount(adj[v] & s)) < m) return false;
  }
  return true;
}

Weight mask_weight(const std::vector<Weight>& w, Mask s) {
  Weight sum = 0;
  while (s != 0) {
    sum += w[static_cast<std::size_t>(std::countr_zero(s))];
    s &= s - 1;
  }
  return sum;
}

/// Subsets of `pool` passing `keep`, ordered best-first: by weight (when given), then size,
/// then lexicographically.
template <class Keep>
std::vector<Mask> ordered_subsets(const std::vector<NodeId>& pool, const std::vector<Weight>& w, Keep keep) {
  std::vector<Mask> out;
  const std::size_t p = pool.size();
  for (Mask bits = 0; bits < (Mask{1} << p); ++bits) {
    Mask s = 0;
    for (std::size_t i = 0; i < p; ++i) {
      if (bits >> i & 1) s |= Mask{1} << pool[i];
    }
    if (keep(s)) out.push_back(s);
  }
  if (w.empty()) {
    std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
      int pa = std::popcount(a), pb = std::popcount(b);
      return pa != pb ? pa < pb : lex_mask_less(a, b);
    });
    return out;
  }
  std::vector<std::pair<Weight, Mask>> keyed;
  keyed.reserve(out.size());
  for (Mask s : out) keyed.emplace_back(mask_weight(w, s), s);
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    int pa = std::popcount(a.second), pb = std::popcount(b.second);
    return pa != pb ? pa < pb : lex_mask_less(a.second, b.second);
  });
  for (std::size_t i = 0; i < keyed.size(); ++i) out[i] = keyed[i].second;
  return out;
}

void check_budget(std::size_t n, std::size_t budget) {
  if (n > budget) {
    throw BudgetExceeded("instance has " + std::to_string(n) + " nodes, oracle cap is " + std::to_string(budget));
  }
  if (n > 30) throw BudgetExceeded("oracle caps above 30 nodes are not supported");
}

}  // namespace

OracleResult exact_min_kmcds(const Graph& g, std::size_t k, std::size_t m, const std::vector<Weight>& w,
                             std::size_t budget) {
  const std::size_t n = g.size();
  check_budget(n, budget);
  if (!w.empty() && w.size() != n) throw PreconditionViolation("one weight per node");
  std::vector<Mask> adj = adjacency_masks(g);
  std::vector<NodeId> pool(n);
  for (NodeId v = 0; v < n; ++v) pool[v] = v;
  OracleResult res;
  res.limit = budget;
  for (Mask s : ordered_subsets(pool, w, [&](Mask s) { return dominates(adj, s, m); })) {
    ++res.explored;
    NodeSet set = from_mask(n, s);
    if (!is_k_connected(g, set, k)) continue;
    res.witness = set;
    res.optimum = w.empty() ? Weight(static_cast<long>(set.size())) : total_weight(w, set);
    return res;
  }
  throw InfeasibleInstance("no (k,m)-CDS exists");
}

OracleResult exact_augmentation(const Graph& g, const NodeSet& t, std::size_t k, const std::vector<Weight>& w,
                                std::size_t budget) {
  const std::size_t n = g.size();
  check_budget(n, budget);
  std::vector<NodeId> pool = (g.all() - t).to_vector();
  OracleResult res;
  res.limit = budget;
  for (Mask s : ordered_subsets(pool, w, [](Mask) { return true; })) {
    ++res.explored;
    NodeSet set = from_mask(n, s);
    if (!is_k_connected(g, t | set, k)) continue;
    res.witness = set;
    res.optimum = w.empty() ? Weight(static_cast<long>(set.size())) : total_weight(w, set);
    return res;
  }
  throw InfeasibleInstance("no augmentation exists");
}

std::vector<CutCertificate> enumerate_demand_cuts(const Graph& g, const NodeSet& t, const NodeSet& s,
                                                  std::size_t k, std::optional<NodeId> r, std::size_t budget) {
  const std::size_t n = g.size();
  check_budget(n, budget);
  if (k == 0) return {};
  std::vector<Mask> adj = adjacency_masks(g);
  const Mask tm = to_mask(t), sm = to_mask(s);
  auto nbr = [&](Mask x) {
    Mask out = 0;
    for (Mask b = x; b != 0; b &= b - 1) out |= adj[static_cast<std::size_t>(std::countr_zero(b))];
    return out & ~x;
  };
  std::vector<Mask> found;
  if (r) {
    const Mask rm = Mask{1} << *r;
    for (Mask x = 1; x < (Mask{1} << n); ++x) {
      if ((x & tm) == 0) continue;
      Mask bd = nbr(x);
      if ((x | bd) & rm) continue;
      if (static_cast<std::size_t>(std::popcount(bd & tm)) + 1 != k) continue;
      if (bd & sm) continue;
      found.push_back(x);
    }
  } else {
    std::vector<NodeId> tv = t.to_vector();
    for (Mask bits = 1; bits < (Mask{1} << tv.size()); ++bits) {
      Mask x = 0;
      for (std::size_t i = 0; i < tv.size(); ++i) {
        if (bits >> i & 1) x |= Mask{1} << tv[i];
      }
      Mask bd = nbr(x);
      Mask far = tm & ~(x | bd);
      if (far == 0) continue;
      if (static_cast<std::size_t>(std::popcount(bd & tm)) + 1 != k) continue;
      // spread from X through S only; reaching a neighbor of the far side means a T-path
      Mask reach = bd & sm, frontier = reach;
      while (frontier != 0) {
        Mask next = nbr(reach) & sm & ~reach;
        reach |= next;
        frontier = next;
      }
      bool covered = false;
      for (Mask b = reach; b != 0; b &= b - 1) {
        if (adj[static_cast<std::size_t>(std::countr_zero(b))] & far) covered = true;
      }
      if (!covered) found.push_back(x);
    }
  }
  std::sort(found.begin(), found.end(), lex_mask_less);
  std::vector<CutCertificate> out;
  for (Mask x : found) {
    out.push_back(make_certificate(g, t, from_mask(n, x), CutKind::DemandCut, r));
    check_certificate(g, t, k, out.back());
  }
  return out;
}

std::vector<NodeSet> cores_of(const std::vector<NodeSet>& family, const NodeSet& z) {
  std::vector<NodeSet> mins = minimal_sets(family);
  std::vector<NodeSet> out;
  for (const NodeSet& x : family) {
    if (!z.is_subset_of(x)) continue;
    bool single = true;
    for (const NodeSet& w : mins) {
      if (w != z && w.is_subset_of(x)) single = false;
    }
    if (single) out.push_back(x);
  }
  return out;
}

UncrossReport check_uncrossable(const Graph& g, const NodeSet& t, const std::vector<NodeSet>& family) {
  UncrossReport rep;
  std::vector<NodeSet> sorted = family;
  std::sort(sorted.begin(), sorted.end(), [](const NodeSet& a, const NodeSet& b) { return lex_less(a, b); });
  auto in = [&](const NodeSet& x) {
    return std::binary_search(sorted.begin(), sorted.end(), x,
                              [](const NodeSet& a, const NodeSet& b) { return lex_less(a, b); });
  };
  std::vector<NodeSet> plus;
  for (const NodeSet& x : family) plus.push_back(closure(g, x));
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      const NodeSet& x = family[i];
      const NodeSet& y = family[j];
      ++rep.pairs;
      if (in(x & y) && in(x | y)) {
        ++rep.by_meet_join;
      } else if (in(x - plus[j]) && in(y - plus[i])) {
        ++rep.by_difference;
      } else {
        ++rep.failures;
        if ((x & y).intersects(t)) ++rep.failures_sharing_t;
      }
    }
  }
  return rep;
}

OracleResult exact_family_cover(const Graph& g, const NodeSet& t_cur, const std::vector<NodeSet>& family,
                                const std::vector<Weight>& w, std::size_t budget) {
  const std::size_t n = g.size();
  std::vector<NodeId> pool = (g.all() - t_cur).to_vector();
  check_budget(pool.size(), budget);
  std::vector<Mask> bds;
  for (const NodeSet& x : family) bds.push_back(to_mask(gamma(g, x) - t_cur));
  OracleResult res;
  res.limit = budget;
  auto covers = [&](Mask s) {
    for (Mask b : bds) {
      if ((b & s) == 0) return false;
    }
    return true;
  };
  std::vector<Mask> order = ordered_subsets(pool, w, covers);
  if (order.empty()) throw InfeasibleInstance("family cannot be covered");
  res.explored = order.size();
  res.witness = from_mask(n, order.front());
  res.optimum = w.empty() ? Weight(static_cast<long>(res.witness.size())) : total_weight(w, res.witness);
  return res;
}

OracleResult exact_multicover(const MulticoverInstance& inst, std::size_t cap) {
  const std::size_t d = inst.disks.size();
  if (d > cap || d > 30) throw BudgetExceeded("multicover oracle cap is " + std::to_string(cap) + " disks");
  if (!inst.feasible()) throw InfeasibleInstance("some point lies in fewer disks than its demand");
  OracleResult res;
  res.limit = cap;
  bool have = false;
  Mask best = 0;
  for (Mask s = 0; s < (Mask{1} << d); ++s) {
    ++res.explored;
    std::vector<std::size_t> hits(inst.demand.size(), 0);
    Weight cost = 0;
    for (std::size_t i = 0; i < d; ++i) {
      if (!(s >> i & 1)) continue;
      cost += inst.weight[i];
      for (std::size_t p : inst.disks[i]) ++hits[p];
    }
    bool ok = true;
    for (std::size_t p = 0; p < hits.size(); ++p) ok = ok && hits[p] >= inst.demand[p];
    if (!ok) continue;
    bool better = !have || cost < res.optimum ||
                  (cost == res.optimum && (std::popcount(s) < std::popcount(best) ||
                                           (std::popcount(s) == std::popcount(best) && lex_mask_less(s, best))));
    if (better) {
      have = true;
      best = s;
      res.optimum = cost;
    }
  }
  res.witness = from_mask(d, best);
  return res;
}

}  // namespace kmcds
