#include "kmcds/primal_dual.hpp"

#include <algorithm>
#include <ostream>

#include "kmcds/dominating.hpp"
#include "kmcds/errors.hpp"

namespace kmcds {

Weight DualState::total() const {
  Weight sum = 0;
  for (const auto& [x, v] : y) sum += v;
  return sum;
}

ResidualDemandFamily::ResidualDemandFamily(const Graph& g, const NodeSet& t, std::size_t k, NodeId r, NodeSet p)
    : p_(std::move(p)), oracle_(g, t, k, r, demand_seeds(g, t, r)) {
  oracle_.set_protected(p_);
}

std::vector<NodeSet> ResidualDemandFamily::min_cores(const NodeSet& bought) {
  oracle_.set_protected(p_ | bought);
  return oracle_.minimal_sides();
}

bool ResidualDemandFamily::covered(const NodeSet& bought) {
  oracle_.set_protected(p_ | bought);
  return oracle_.all_loose();
}

namespace {

std::vector<NodeSet> soft_sinks_for(const NodeSet& t, const std::vector<NodeSet>& members,
                                    const std::vector<NodeSet>& all) {
  std::vector<NodeSet> out;
  for (const NodeSet& z : members) {
    NodeSet soft(t.universe());
    for (const NodeSet& w : all) {
      if (w != z) soft |= w & t;
    }
    out.push_back(std::move(soft));
  }
  return out;
}

}  // namespace

CoreUnionFamily::CoreUnionFamily(const Graph& g, const NodeSet& t, std::size_t k, NodeId r, NodeSet p,
                                 const std::vector<NodeSet>& members, const std::vector<NodeSet>& all_min_cores)
    : p_(std::move(p)), oracle_(g, t, k, r, members, soft_sinks_for(t, members, all_min_cores)) {
  oracle_.set_protected(p_);
}

std::vector<NodeSet> CoreUnionFamily::min_cores(const NodeSet& bought) {
  oracle_.set_protected(p_ | bought);
  return oracle_.minimal_sides();
}

bool CoreUnionFamily::covered(const NodeSet& bought) {
  oracle_.set_protected(p_ | bought);
  return oracle_.all_loose();
}

CutCertificate max_core(const Graph& g, const NodeSet& t, const NodeSet& s, std::size_t k, NodeId r,
                        const NodeSet& z, const std::vector<NodeSet>& other_min_cores) {
  std::vector<NodeCap> caps(g.size(), NodeCap::Free);
  for (NodeId v : s) caps[v] = NodeCap::Infinite;
  for (NodeId v : t) caps[v] = NodeCap::Unit;
  NodeSet soft(g.size());
  for (const NodeSet& w : other_min_cores) {
    if (w != z) soft |= w & t;
  }
  NodeSet sink(g.size(), {r});
  FlowNetwork net(g, std::move(caps));
  FlowNetwork::Query q;
  q.sources = &z;
  q.hard_sinks = &sink;
  q.soft_sinks = soft.empty() ? nullptr : &soft;
  std::size_t value = net.run(q, k);
  KMCDS_ENSURE(value + 1 == k, "min-core " + z.to_string() + " has no tight core");
  NodeSet x = net.max_side();
  CutCertificate c = make_certificate(g, t, x, CutKind::DemandCut, r);
  check_certificate(g, t, k, c);
  KMCDS_ENSURE(z.is_subset_of(x), "max-core misses its min-core");
  KMCDS_ENSURE(!c.boundary.intersects(s - t), "max-core is covered");
  for (const NodeSet& w : other_min_cores) {
    KMCDS_ENSURE(w == z || !w.is_subset_of(x), "max-core swallows another min-core");
  }
  return c;
}

bool dependent(const Graph& g, const NodeSet& t, const NodeSet& z, const NodeSet& z_max,
               const NodeSet& w, const NodeSet& w_max) {
  return (z & t).is_subset_of(gamma(g, w_max)) || (w & t).is_subset_of(gamma(g, z_max));
}

std::vector<std::vector<std::size_t>> decompose_independent(const Graph& g, const NodeSet& t,
                                                            const std::vector<NodeSet>& min_cores,
                                                            const std::vector<NodeSet>& max_cores,
                                                            std::size_t k, std::size_t gamma_min) {
  const std::size_t q = min_cores.size();
  if (max_cores.size() != q) throw PreconditionViolation("one max-core per min-core");
  if (gamma_min == 0 || gamma_min + 1 > k) throw PreconditionViolation("decomposition needs 1 <= gamma <= k-1");
  const std::size_t kp = (k - 1) / gamma_min;
  std::vector<NodeSet> boundary;
  for (const NodeSet& x : max_cores) boundary.push_back(gamma(g, x));
  std::vector<std::vector<bool>> adj(q, std::vector<bool>(q, false));
  std::vector<std::size_t> indeg(q, 0);
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t b = 0; b < q; ++b) {
      if (a == b || !(min_cores[a] & t).is_subset_of(boundary[b])) continue;
      ++indeg[b];
      adj[a][b] = adj[b][a] = true;
    }
  }
  for (std::size_t b = 0; b < q; ++b) {
    KMCDS_ENSURE(indeg[b] <= kp, "dependence in-degree above floor((k-1)/gamma)");
  }
  std::vector<std::size_t> degree(q, 0), order;
  for (std::size_t a = 0; a < q; ++a) degree[a] = static_cast<std::size_t>(std::count(adj[a].begin(), adj[a].end(), true));
  std::vector<bool> removed(q, false);
  for (std::size_t step = 0; step < q; ++step) {
    std::size_t pick = q;
    for (std::size_t a = 0; a < q; ++a) {
      if (!removed[a] && (pick == q || degree[a] < degree[pick])) pick = a;
    }
    removed[pick] = true;
    order.push_back(pick);
    for (std::size_t b = 0; b < q; ++b) {
      if (adj[pick][b] && !removed[b]) --degree[b];
    }
  }
  std::vector<std::size_t> color(q, q);
  std::size_t colors = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    std::vector<bool> used(q + 1, false);
    for (std::size_t b = 0; b < q; ++b) {
      if (adj[*it][b] && color[b] < q) used[color[b]] = true;
    }
    std::size_t c = 0;
    while (used[c]) ++c;
    color[*it] = c;
    colors = std::max(colors, c + 1);
  }
  KMCDS_ENSURE(colors <= 2 * kp + 1, "more than 2 floor((k-1)/gamma) + 1 families");
  std::vector<std::vector<std::size_t>> families(colors);
  for (std::size_t a = 0; a < q; ++a) families[color[a]].push_back(a);
  return families;
}

CoverResult cover_uncrossable(const Graph& g, const NodeSet& t_cur, const std::vector<Weight>& w,
                              CutFamily& family, const CoverOptions& opt) {
  const std::size_t n = g.size();
  if (w.size() != n) throw PreconditionViolation("one weight per node");
  const bool udg = g.is_unit_disk();
  CoverResult res;
  res.dual.residual = w;
  NodeSet bought(n);
  std::vector<std::size_t> d(n);
  while (true) {
    std::vector<NodeSet> cores = family.min_cores(bought);
    if (cores.empty()) break;
    std::vector<NodeSet> plus;
    std::fill(d.begin(), d.end(), 0);
    for (const NodeSet& x : cores) {
      NodeSet bd = gamma(g, x);
      KMCDS_ENSURE(!bd.intersects(bought), "min-core already covered");
      for (NodeId v : bd - t_cur) ++d[v];
      plus.push_back(x | bd);
    }
    // min-cores of an uncrossable family are pairwise strongly disjoint
    for (std::size_t i = 0; i < cores.size(); ++i) {
      for (std::size_t j = 0; j < cores.size(); ++j) {
        KMCDS_ENSURE(i == j || !cores[i].intersects(plus[j]),
                     "min-cores " + cores[i].to_string() + " and " + cores[j].to_string() + " touch");
      }
    }
    NodeId best = static_cast<NodeId>(n);
    for (NodeId v = 0; v < n; ++v) {
      if (d[v] == 0) continue;
      res.max_degree = std::max(res.max_degree, d[v]);
      if (best == n || res.dual.residual[v] * d[best] < res.dual.residual[best] * d[v]) best = v;
    }
    if (best == n) throw Stall("uncovered cuts but no node can cover them");
    if (udg) KMCDS_ENSURE(res.max_degree <= 5, "a node borders more than five min-cores");
    Weight alpha = res.dual.residual[best] / d[best];
    for (const NodeSet& x : cores) res.dual.y[x] += alpha;
    for (NodeId v = 0; v < n; ++v) {
      if (d[v] == 0) continue;
      res.dual.residual[v] -= alpha * d[v];
      KMCDS_ENSURE(res.dual.residual[v] >= 0, "dual infeasible at node " + std::to_string(v));
    }
    KMCDS_ENSURE(res.dual.residual[best] == 0, "bought node is not tight");
    res.dual.events.push_back({alpha, std::move(cores), best});
    bought.insert(best);
    res.order.push_back(best);
  }

  NodeSet keep = bought;
  for (auto it = res.order.rbegin(); it != res.order.rend(); ++it) {
    NodeSet trial = keep;
    trial.erase(*it);
    if (family.covered(trial)) keep = std::move(trial);
  }
  res.chosen = keep;

  // dual feasibility recomputed from y
  std::vector<Weight> load(n, 0);
  for (const auto& [x, val] : res.dual.y) {
    KMCDS_ENSURE(val >= 0, "negative dual");
    for (NodeId v : gamma(g, x) - t_cur) load[v] += val;
  }
  for (NodeId v = 0; v < n; ++v) {
    if (!t_cur.contains(v)) KMCDS_ENSURE(load[v] <= w[v], "dual constraint violated at node " + std::to_string(v));
  }

  for (const CoverEvent& ev : res.dual.events) {
    std::size_t sum = 0;
    for (const NodeSet& x : ev.min_cores) sum += gamma(g, x).intersection_size(keep);
    const double cap = 15.0 * static_cast<double>(ev.min_cores.size()) - 5.0;
    res.worst_degree_sum = std::max(res.worst_degree_sum, static_cast<double>(sum) / cap);
    if (udg) KMCDS_ENSURE(sum + 5 <= 15 * ev.min_cores.size(), "sum of d over the cover exceeds 15|M|-5");
  }
  Weight cost = total_weight(w, keep);
  if (udg) KMCDS_ENSURE(cost <= 15 * res.dual.total(), "cover weight exceeds 15 times the dual");

  std::vector<NodeSet> all;
  for (const auto& [x, val] : res.dual.y) all.push_back(x);
  if (all.size() <= opt.laminarity_limit) {
    std::vector<NodeSet> plus;
    for (const NodeSet& x : all) plus.push_back(closure(g, x));
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t j = i + 1; j < all.size(); ++j) {
        bool ok = all[i].is_subset_of(all[j]) || all[j].is_subset_of(all[i]) ||
                  (!all[i].intersects(plus[j]) && !all[j].intersects(plus[i]));
        KMCDS_ENSURE(ok, "event min-cores are not strongly laminar");
      }
    }
  }

  if (opt.verify_witnesses) {
    NodeSet prefix(n);
    for (const CoverEvent& ev : res.dual.events) {
      NodeId v = ev.bought;
      prefix.insert(v);
      if (!keep.contains(v)) continue;
      NodeSet without = (keep | prefix);
      without.erase(v);
      std::vector<NodeSet> ws = family.min_cores(without);
      KMCDS_ENSURE(!ws.empty(), "kept node " + std::to_string(v) + " has no witness cut");
      for (const NodeSet& wc : ws) KMCDS_ENSURE(gamma(g, wc).contains(v), "witness cut not covered by its node");
      const NodeSet& wc = ws.front();
      NodeSet wplus = closure(g, wc);
      bool paired = false;
      for (const NodeSet& x : ev.min_cores) {
        NodeSet xplus = closure(g, x);
        if (!xplus.contains(v) || x.contains(v)) continue;
        if (x.is_subset_of(wc) || (!x.intersects(wplus) && !xplus.intersects(wc))) paired = true;
      }
      KMCDS_ENSURE(paired, "no witness pair for node " + std::to_string(v));
    }
  }
  return res;
}

PrimalDualRun augment_primal_dual(const Graph& g, const NodeSet& t, std::size_t k, const std::vector<Weight>& w,
                                  const PrimalDualOptions& opt) {
  if (k == 0) throw PreconditionViolation("k must be positive");
  if (w.size() != g.size()) throw PreconditionViolation("one weight per node");
  if (opt.check_graph && !is_k_connected(g, g.all(), k)) {
    throw PreconditionViolation("graph is not " + std::to_string(k) + "-connected");
  }
  if (!is_m_dominating(g, t, k) || !is_k_connected(g, t, k - 1)) {
    throw PreconditionViolation("T is not a (" + std::to_string(k - 1) + ",m)-CDS with m >= k");
  }
  PrimalDualRun run;
  run.s = g.empty_set();

  auto do_cover = [&](CutFamily& fam, NodeId r, std::size_t gam, std::size_t cores) {
    CoverResult cr = cover_uncrossable(g, t | run.s, w, fam, opt.cover);
    if (opt.on_cover) opt.on_cover(t | run.s, cr);
    if (opt.events != nullptr) {
      for (const CoverEvent& ev : cr.dual.events) {
        *opt.events << "event " << run.events++ << " alpha " << format_weight(ev.alpha) << " mincores "
                    << ev.min_cores.size() << " buy " << ev.bought << '\n';
      }
    } else {
      run.events += cr.dual.events.size();
    }
    if (opt.duals != nullptr) {
      for (const auto& [x, val] : cr.dual.y) *opt.duals << "dual " << x << ' ' << format_weight(val) << '\n';
    }
    CoverCall call;
    call.root = r;
    call.gamma = gam;
    call.min_cores = cores;
    call.chosen = cr.chosen;
    call.dual_total = cr.dual.total();
    call.weight = total_weight(w, cr.chosen);
    call.events = cr.dual.events.size();
    call.max_degree = cr.max_degree;
    run.calls.push_back(std::move(call));
    return cr.chosen;
  };

  for (NodeId r : lowest_roots(t, k)) {
    ResidualDemandFamily residual(g, t, k, r, run.s);
    std::vector<NodeSet> cores = residual.min_cores(g.empty_set());
    std::size_t prev_gamma = 0;
    while (!cores.empty()) {
      std::size_t gam = cores.front().intersection_size(t);
      for (const NodeSet& z : cores) gam = std::min(gam, z.intersection_size(t));
      if (gam >= k) break;
      if (prev_gamma > 0) KMCDS_ENSURE(gam >= 2 * prev_gamma, "gamma failed to double");
      std::vector<NodeSet> maxes;
      for (const NodeSet& z : cores) maxes.push_back(max_core(g, t, run.s, k, r, z, cores).x);
      NodeSet fresh = g.empty_set();
      for (const auto& idx : decompose_independent(g, t, cores, maxes, k, gam)) {
        std::vector<NodeSet> members;
        for (std::size_t i : idx) members.push_back(cores[i]);
        CoreUnionFamily fam(g, t, k, r, run.s, members, cores);
        fresh |= do_cover(fam, r, gam, members.size());
      }
      run.s |= fresh;
      prev_gamma = gam;
      ResidualDemandFamily next(g, t, k, r, run.s);
      cores = next.min_cores(g.empty_set());
    }
    if (!cores.empty()) {
      ResidualDemandFamily fam(g, t, k, r, run.s);
      run.s |= do_cover(fam, r, 0, cores.size());
    }
    ResidualDemandFamily check(g, t, k, r, run.s);
    KMCDS_ENSURE(check.covered(g.empty_set()), "root " + std::to_string(r) + " still has demand cuts");
  }
  KMCDS_ENSURE(is_k_connected(g, t | run.s, k), "augmented set is not k-connected");
  return run;
}

WeightedRun run_weighted_kmcds(const Graph& g, std::size_t k, std::size_t m, const std::vector<Weight>& w,
                               const PrimalDualOptions& opt) {
  if (k == 0) throw PreconditionViolation("k must be positive");
  if (m < k) throw PreconditionViolation("m must be at least k");
  if (w.size() != g.size()) throw PreconditionViolation("one weight per node");
  if (!is_k_connected(g, g.all(), k)) throw InfeasibleInstance("graph is not " + std::to_string(k) + "-connected");
  WeightedRun out;
  out.t0 = weighted_m_dominating(g, w, k, m);
  PrimalDualOptions stage = opt;
  stage.check_graph = false;
  NodeSet cur = out.t0;
  auto raise = [&](std::size_t kk) {
    PrimalDualRun r = augment_primal_dual(g, cur, kk, w, stage);
    cur |= r.s;
    out.cover_calls += r.calls.size();
    out.events += r.events;
  };
  raise(1);
  out.t_post = prune_minimal(g, cur, m, w);
  cur = out.t_post;
  for (std::size_t kk = 2; kk <= k; ++kk) raise(kk);
  KMCDS_ENSURE(is_m_dominating(g, cur, m) && is_k_connected(g, cur, k), "result is not a (k,m)-CDS");
  out.solution = cur;
  return out;
}

NodeSet solve_weighted_kmcds(const Graph& g, std::size_t k, std::size_t m, const std::vector<Weight>& w) {
  return run_weighted_kmcds(g, k, m, w).solution;
}

}  // namespace kmcds
