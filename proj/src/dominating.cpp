#include "kmcds/dominating.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "kmcds/errors.hpp"
#include "kmcds/lp.hpp"

namespace kmcds {

NodeSet LayeredMis::nodes() const {
  NodeSet out = connector;
  for (const NodeSet& l : layers) out |= l;
  return out;
}

LayeredMis layered_mis(const Graph& g, std::size_t m) {
  if (m == 0) throw PreconditionViolation("layered MIS needs m >= 1");
  LayeredMis out;
  out.connector = g.empty_set();
  NodeSet left = g.all();
  for (std::size_t i = 0; i < m; ++i) {
    NodeSet layer(g.size()), blocked(g.size());
    for (NodeId v : left) {
      if (blocked.contains(v)) continue;
      layer.insert(v);
      blocked |= g.neighbor_set(v);
    }
    left -= layer;
    out.layers.push_back(std::move(layer));
  }
  return out;
}

NodeSet connector(const Graph& g, const NodeSet& i1) {
  if (!is_connected(g, g.all())) throw PreconditionViolation("connector needs a connected graph");
  if (!is_m_dominating(g, i1, 1)) throw PreconditionViolation("connector needs a dominating I1");
  NodeSet c(g.size());
  if (i1.size() <= 1) return c;
  const std::size_t n = g.size();
  std::vector<int> label(n);
  while (true) {
    NodeSet cur = i1 | c;
    std::vector<NodeSet> comps = components(g, cur);
    if (comps.size() <= 1) break;
    std::fill(label.begin(), label.end(), -1);
    for (std::size_t i = 0; i < comps.size(); ++i) {
      for (NodeId v : comps[i]) label[v] = static_cast<int>(i);
    }
    NodeId best = static_cast<NodeId>(n);
    std::size_t best_count = 1;
    std::vector<int> seen;
    for (NodeId v = 0; v < n; ++v) {
      if (cur.contains(v)) continue;
      seen.clear();
      for (NodeId u : g.neighbors(v)) {
        if (label[u] >= 0 && std::find(seen.begin(), seen.end(), label[u]) == seen.end()) seen.push_back(label[u]);
      }
      if (seen.size() > best_count) {
        best_count = seen.size();
        best = v;
      }
    }
    if (best < n) {
      c.insert(best);
      continue;
    }
    // every outside node touches one component here; bridge two of them with an edge
    auto touching = [&](NodeId v) {
      for (NodeId u : g.neighbors(v)) {
        if (label[u] >= 0) return label[u];
      }
      return -1;
    };
    bool joined = false;
    for (NodeId u = 0; u < n && !joined; ++u) {
      if (cur.contains(u)) continue;
      int cu = touching(u);
      for (NodeId v : g.neighbors(u)) {
        if (cur.contains(v)) continue;
        int cv = touching(v);
        if (cu >= 0 && cv >= 0 && cu != cv) {
          c.insert(u);
          c.insert(v);
          joined = true;
          break;
        }
      }
    }
    if (!joined) throw PreconditionViolation("components of I1 cannot be joined");
  }
  return c;
}

NodeSet prune_minimal(const Graph& g, const NodeSet& t, std::size_t m, const std::vector<Weight>& w) {
  if (!is_connected(g, t) || !is_m_dominating(g, t, m)) {
    throw PreconditionViolation("pruning needs a connected m-dominating set");
  }
  std::vector<NodeId> order = t.to_vector();
  std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    if (!w.empty() && w[a] != w[b]) return w[a] > w[b];
    return a > b;
  });
  NodeSet cur = t;
  bool changed = true;
  while (changed) {
    changed = false;
    for (NodeId v : order) {
      if (!cur.contains(v) || cur.size() == 1) continue;
      NodeSet next = cur;
      next.erase(v);
      bool dominated = g.neighbor_set(v).intersection_size(next) >= m;
      for (NodeId u : g.neighbors(v)) {
        if (!dominated) break;
        if (!next.contains(u)) dominated = g.neighbor_set(u).intersection_size(next) >= m;
      }
      if (dominated && is_connected(g, next)) {
        cur = std::move(next);
        changed = true;
      }
    }
  }
  return cur;
}

double most_violated(const Graph& g, const std::vector<double>& x, std::size_t m, NodeId v,
                     std::vector<NodeId>* removed) {
  std::vector<NodeId> nb(g.neighbors(v).begin(), g.neighbors(v).end());
  std::stable_sort(nb.begin(), nb.end(), [&](NodeId a, NodeId b) { return x[a] > x[b]; });
  double rest = 0.0;
  for (NodeId u : nb) rest += x[u];
  double best = 0.0;
  std::size_t best_prefix = 0;
  bool found = false;
  const std::size_t top = std::min(m, nb.size() + 1);
  for (std::size_t mp = 0; mp < top; ++mp) {
    if (mp > 0) rest -= x[nb[mp - 1]];
    const double need = static_cast<double>(m - mp);
    double viol = need - (rest + need * x[v]);
    if (viol > best) {
      best = viol;
      best_prefix = mp;
      found = true;
    }
  }
  if (removed != nullptr) {
    removed->clear();
    if (found) removed->assign(nb.begin(), nb.begin() + static_cast<std::ptrdiff_t>(best_prefix));
  }
  return best;
}

FractionalSolution solve_lp_mds(const Graph& g, const std::vector<Weight>& w, std::size_t m) {
  const std::size_t n = g.size();
  if (w.size() != n) throw PreconditionViolation("one weight per node");
  FractionalSolution out;
  out.x.assign(n, 0.0);
  if (m == 0 || n == 0) return out;

  // substitute y = 1 - x so that the all-ones point becomes the feasible origin
  std::vector<double> c(n);
  for (std::size_t v = 0; v < n; ++v) c[v] = w[v].get_d();
  BoundedSimplex lp(c, std::vector<double>(n, 1.0));
  std::set<std::pair<NodeId, std::vector<NodeId>>> present;
  auto add_row = [&](NodeId v, std::vector<NodeId> removed) {
    std::sort(removed.begin(), removed.end());
    if (!present.emplace(v, removed).second) return false;
    std::vector<std::pair<std::size_t, double>> row;
    std::size_t kept = 0;
    for (NodeId u : g.neighbors(v)) {
      if (std::binary_search(removed.begin(), removed.end(), u)) continue;
      row.emplace_back(u, 1.0);
      ++kept;
    }
    row.emplace_back(v, static_cast<double>(m - removed.size()));
    lp.add_row(row, static_cast<double>(kept));
    return true;
  };
  for (NodeId v = 0; v < n; ++v) add_row(v, {});

  std::vector<NodeId> removed;
  while (true) {
    ++out.rounds;
    LpResult res = lp.solve();
    for (std::size_t v = 0; v < n; ++v) out.x[v] = std::clamp(1.0 - res.x[v], 0.0, 1.0);
    std::size_t added = 0, violated = 0;
    for (NodeId v = 0; v < n; ++v) {
      if (most_violated(g, out.x, m, v, &removed) <= 1e-9) continue;
      ++violated;
      added += add_row(v, removed);
    }
    if (violated == 0) break;
    KMCDS_ENSURE(added > 0, "separation returned only known constraints");
  }
  out.constraints = lp.rows();
  for (std::size_t v = 0; v < n; ++v) out.objective += c[v] * out.x[v];
  return out;
}

bool MulticoverInstance::feasible() const {
  std::vector<std::size_t> hits(demand.size(), 0);
  for (const auto& d : disks) {
    for (std::size_t p : d) ++hits[p];
  }
  for (std::size_t p = 0; p < demand.size(); ++p) {
    if (hits[p] < demand[p]) return false;
  }
  return true;
}

std::vector<std::size_t> greedy_disk_multicover(const MulticoverInstance& inst) {
  if (inst.weight.size() != inst.disks.size()) throw PreconditionViolation("one weight per disk");
  if (!inst.feasible()) throw InfeasibleInstance("some point lies in fewer disks than its demand");
  std::vector<std::size_t> residual = inst.demand;
  std::vector<bool> taken(inst.disks.size(), false);
  std::size_t open = std::accumulate(residual.begin(), residual.end(), std::size_t{0});
  std::vector<std::size_t> out;
  while (open > 0) {
    std::size_t best = inst.disks.size(), best_gain = 0;
    for (std::size_t i = 0; i < inst.disks.size(); ++i) {
      if (taken[i]) continue;
      std::size_t gain = 0;
      for (std::size_t p : inst.disks[i]) gain += residual[p] > 0;
      if (gain == 0) continue;
      // w_i / gain_i < w_best / gain_best
      if (best == inst.disks.size() || inst.weight[i] * best_gain < inst.weight[best] * gain) {
        best = i;
        best_gain = gain;
      }
    }
    KMCDS_ENSURE(best < inst.disks.size(), "multicover stalled");
    taken[best] = true;
    out.push_back(best);
    for (std::size_t p : inst.disks[best]) {
      if (residual[p] > 0) {
        --residual[p];
        --open;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

NodeSet round_mds(const Graph& g, const std::vector<Weight>& w, std::size_t m, const FractionalSolution& xs) {
  const std::size_t n = g.size();
  NodeSet u(n);
  for (NodeId v = 0; v < n; ++v) {
    if (xs.x[v] <= 0.5 + 1e-9) u.insert(v);
  }
  MulticoverInstance inst;
  std::vector<std::size_t> point_of(n, 0);
  for (NodeId v : u) {
    point_of[v] = inst.demand.size();
    std::size_t outside = g.degree(v) - g.neighbor_set(v).intersection_size(u);
    inst.demand.push_back(outside >= m ? 0 : m - outside);
  }
  for (NodeId v : u) {
    std::vector<std::size_t> pts{point_of[v]};
    for (NodeId x : g.neighbors(v)) {
      if (u.contains(x)) pts.push_back(point_of[x]);
    }
    std::sort(pts.begin(), pts.end());
    inst.disks.push_back(std::move(pts));
    inst.weight.push_back(w[v]);
    inst.disk_node.push_back(v);
  }
  NodeSet out = g.all() - u;
  for (std::size_t d : greedy_disk_multicover(inst)) out.insert(inst.disk_node[d]);
  KMCDS_ENSURE(is_m_dominating(g, out, m), "rounded set is not m-dominating");
  return out;
}

NodeSet mds_for_kcds_reduction(const Graph& g, const std::vector<Weight>& w, std::size_t k, std::size_t m) {
  if (m != k && m != k + 1) throw PreconditionViolation("reduction needs m in {k, k+1}");
  const std::size_t n = g.size();
  if (w.size() != n) throw PreconditionViolation("one weight per node");
  MulticoverInstance inst;
  inst.demand.assign(n, m);
  for (NodeId v = 0; v < n; ++v) {
    std::vector<std::size_t> pts{v};
    for (NodeId x : g.neighbors(v)) pts.push_back(x);
    std::sort(pts.begin(), pts.end());
    inst.disks.push_back(std::move(pts));
    inst.weight.push_back(w[v]);
    inst.disk_node.push_back(v);
  }
  NodeSet out(n);
  for (std::size_t d : greedy_disk_multicover(inst)) out.insert(inst.disk_node[d]);
  KMCDS_ENSURE(is_m_dominating(g, out, m), "multicover output is not m-dominating");
  return out;
}

NodeSet weighted_m_dominating(const Graph& g, const std::vector<Weight>& w, std::size_t k, std::size_t m) {
  if (m == k || m == k + 1) return mds_for_kcds_reduction(g, w, k, m);
  return round_mds(g, w, m, solve_lp_mds(g, w, m));
}

}  // namespace kmcds
