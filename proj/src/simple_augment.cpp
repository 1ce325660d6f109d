#include "kmcds/simple_augment.hpp"

#include <ostream>

#include "kmcds/dominating.hpp"
#include "kmcds/errors.hpp"

namespace kmcds {

std::size_t iteration_bound(std::size_t k, std::size_t t_size) {
  return 2 * t_size < 3 ? 0 : k * (2 * t_size - 3);
}

AugmentResult augment_simple(const Graph& g, const NodeSet& t, std::size_t k, std::size_t m,
                             const AugmentOptions& opt) {
  if (k == 0) throw PreconditionViolation("k must be positive");
  if (m < k) throw PreconditionViolation("m < k: covering paths may not exist");
  if (opt.check_graph && !is_k_connected(g, g.all(), k)) {
    throw PreconditionViolation("graph is not " + std::to_string(k) + "-connected");
  }
  if (!is_m_dominating(g, t, m)) throw PreconditionViolation("T is not " + std::to_string(m) + "-dominating");
  if (!is_k_connected(g, t, k - 1)) {
    throw PreconditionViolation("G[T] is not " + std::to_string(k - 1) + "-connected");
  }
  AugmentResult out;
  out.s = g.empty_set();
  const std::size_t bound = iteration_bound(k, t.size());
  DemandCutOracle oracle(g, t, k);
  while (auto cut = oracle.find()) {
    std::vector<NodeId> path = find_covering_path(g, t, out.s, *cut);
    KMCDS_ENSURE(path.size() <= 4, "covering path with more than two inner nodes");
    NodeSet inner(g.size());
    for (std::size_t i = 1; i + 1 < path.size(); ++i) inner.insert(path[i]);
    KMCDS_ENSURE(!inner.is_subset_of(out.s), "covering path adds nothing");
    out.s |= inner;
    oracle.add(inner);
    out.trace.chosen_cuts.push_back(std::move(*cut));
    out.trace.added_paths.push_back(std::move(path));
    ++out.trace.iterations;
    KMCDS_ENSURE(out.trace.iterations <= bound, "iteration budget k(2|T|-3) exceeded");
  }
  KMCDS_ENSURE(is_k_connected(g, t | out.s, k), "augmented set is not k-connected");
  check_trace(g, t, k, out.trace, opt.laminarity_limit);
  return out;
}

void check_trace(const Graph& g, const NodeSet& t, std::size_t k, const AugmentationTrace& trace,
                 std::size_t laminarity_limit) {
  KMCDS_ENSURE(trace.iterations == trace.chosen_cuts.size() && trace.iterations == trace.added_paths.size(),
               "trace length mismatch");
  KMCDS_ENSURE(trace.iterations <= iteration_bound(k, t.size()), "iteration budget k(2|T|-3) exceeded");
  const std::size_t per_root = 2 * t.size() < 3 ? 0 : 2 * t.size() - 3;
  for (NodeId r : lowest_roots(t, k)) {
    std::vector<NodeSet> family;
    for (const CutCertificate& c : trace.chosen_cuts) {
      if (c.boundary_in_t.contains(r)) continue;
      // flip cuts holding r so every member lives in T \ {r}
      family.push_back(c.x.contains(r) ? t - closure(g, c.x) : c.x);
    }
    KMCDS_ENSURE(family.size() <= per_root, "per-root budget 2|T|-3 exceeded at root " + std::to_string(r));
    if (t.size() > laminarity_limit) continue;
    for (std::size_t i = 0; i < family.size(); ++i) {
      for (std::size_t j = i + 1; j < family.size(); ++j) {
        const NodeSet& a = family[i];
        const NodeSet& b = family[j];
        KMCDS_ENSURE(!a.intersects(b) || a.is_subset_of(b) || b.is_subset_of(a),
                     "witness sets cross at root " + std::to_string(r));
      }
    }
  }
}

void write_trace(std::ostream& os, const AugmentationTrace& trace) {
  for (std::size_t i = 0; i < trace.iterations; ++i) {
    os << "iter " << i + 1 << " cut " << trace.chosen_cuts[i].x << " path";
    for (NodeId v : trace.added_paths[i]) os << ' ' << v;
    os << '\n';
  }
}

UnweightedRun run_unweighted_kmcds(const Graph& g, std::size_t k, std::size_t m, bool prune) {
  if (k == 0) throw PreconditionViolation("k must be positive");
  if (m < k) throw PreconditionViolation("m must be at least k");
  if (!is_k_connected(g, g.all(), k)) throw InfeasibleInstance("graph is not " + std::to_string(k) + "-connected");
  UnweightedRun run;
  LayeredMis lm = layered_mis(g, m);
  lm.connector = connector(g, lm.layers.front());
  run.t_pre = lm.nodes();
  run.t_post = prune ? prune_minimal(g, run.t_pre, m) : run.t_pre;
  NodeSet cur = run.t_post;
  AugmentOptions opt;
  opt.check_graph = false;
  for (std::size_t kk = 2; kk <= k; ++kk) {
    AugmentResult r = augment_simple(g, cur, kk, m, opt);
    cur |= r.s;
    run.iterations += r.trace.iterations;
    for (auto& c : r.trace.chosen_cuts) run.trace.chosen_cuts.push_back(std::move(c));
    for (auto& p : r.trace.added_paths) run.trace.added_paths.push_back(std::move(p));
  }
  run.trace.iterations = run.iterations;
  KMCDS_ENSURE(is_m_dominating(g, cur, m) && is_k_connected(g, cur, k), "result is not a (k,m)-CDS");
  run.solution = cur;
  return run;
}

NodeSet solve_unweighted_kmcds(const Graph& g, std::size_t k, std::size_t m) {
  return run_unweighted_kmcds(g, k, m).solution;
}

}  // namespace kmcds
