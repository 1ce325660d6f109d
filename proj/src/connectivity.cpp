#include "kmcds/connectivity.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "kmcds/errors.hpp"

namespace kmcds {

bool is_k_connected(const Graph& g, const NodeSet& s, std::size_t k) {
  if (k == 0) return true;
  const std::size_t size = s.size();
  if (size == 0) return false;
  if (size <= k) {
    for (NodeId v : s) {
      if (g.neighbor_set(v).intersection_size(s) + 1 != size) return false;
    }
    return true;
  }
  for (NodeId v : s) {
    if (g.neighbor_set(v).intersection_size(s) < k) return false;
  }
  std::vector<NodeCap> caps(g.size(), NodeCap::Absent);
  for (NodeId v : s) caps[v] = NodeCap::Unit;
  FlowNetwork net(g, std::move(caps));
  std::vector<NodeId> roots = lowest_roots(s, k);
  NodeSet src(g.size()), dst(g.size());
  FlowNetwork::Query q;
  q.sources = &src;
  q.hard_sinks = &dst;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    NodeId r = roots[i];
    src.clear();
    src.insert(r);
    for (NodeId b : s) {
      if (b == r || g.adjacent(r, b)) continue;
      // pairs between two roots were already checked from the lower one
      if (b < r && std::find(roots.begin(), roots.begin() + static_cast<std::ptrdiff_t>(i), b) !=
                       roots.begin() + static_cast<std::ptrdiff_t>(i))
        continue;
      dst.clear();
      dst.insert(b);
      if (net.run(q, k) < k) return false;
    }
  }
  return true;
}

Graph shortcut_graph(const Graph& g, const NodeSet& t, const NodeSet& s) {
  if (t.intersects(s)) throw PreconditionViolation("shortcut graph needs disjoint T and S");
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId u : t) {
    for (NodeId v : g.neighbors(u)) {
      if (u < v && t.contains(v)) edges.emplace_back(u, v);
    }
  }
  for (const NodeSet& comp : components(g, s)) {
    std::vector<NodeId> ends = gamma(g, comp, t).to_vector();
    for (std::size_t i = 0; i < ends.size(); ++i) {
      for (std::size_t j = i + 1; j < ends.size(); ++j) edges.emplace_back(ends[i], ends[j]);
    }
  }
  return Graph::from_edges(g.size(), edges);
}

CutCertificate make_certificate(const Graph& g, const NodeSet& t, const NodeSet& x, CutKind kind,
                                std::optional<NodeId> root) {
  CutCertificate c;
  c.x = x;
  c.boundary = gamma(g, x);
  c.boundary_in_t = c.boundary & t;
  c.kind = kind;
  c.root = root;
  return c;
}

void check_certificate(const Graph& g, const NodeSet& t, std::size_t k, const CutCertificate& c) {
  KMCDS_ENSURE(!c.x.empty(), "cut with empty inside");
  NodeSet plus = closure(g, c.x);
  KMCDS_ENSURE(!(t - plus).empty(), "cut with empty far side " + c.x.to_string());
  KMCDS_ENSURE(c.boundary == gamma(g, c.x), "stale boundary");
  KMCDS_ENSURE(c.boundary_in_t == (c.boundary & t), "stale T-boundary");
  switch (c.kind) {
    case CutKind::TCut:
      KMCDS_ENSURE(c.x.is_subset_of(t), "T-cut leaves T");
      break;
    case CutKind::SteinerTCut:
      KMCDS_ENSURE(c.x.intersects(t), "Steiner cut misses T");
      break;
    case CutKind::TRCut:
      KMCDS_ENSURE(c.root.has_value() && !plus.contains(*c.root), "root inside X+");
      break;
    case CutKind::DemandCut:
      KMCDS_ENSURE(c.boundary_in_t.size() + 1 == k, "demand cut boundary size");
      if (c.root) KMCDS_ENSURE(!plus.contains(*c.root), "root inside X+");
      break;
  }
}

std::vector<NodeId> lowest_roots(const NodeSet& t, std::size_t k) {
  std::vector<NodeId> out;
  for (NodeId v : t) {
    if (out.size() == k) break;
    out.push_back(v);
  }
  return out;
}

std::vector<NodeSet> minimal_sets(std::vector<NodeSet> sets) {
  std::sort(sets.begin(), sets.end(), [](const NodeSet& a, const NodeSet& b) {
    std::size_t sa = a.size(), sb = b.size();
    return sa != sb ? sa < sb : lex_less(a, b);
  });
  std::vector<NodeSet> kept;
  for (NodeSet& s : sets) {
    bool dominated = false;
    for (const NodeSet& k : kept) {
      if (k.is_subset_of(s)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(std::move(s));
  }
  std::sort(kept.begin(), kept.end(), [](const NodeSet& a, const NodeSet& b) { return lex_less(a, b); });
  return kept;
}

DemandCutOracle::DemandCutOracle(const Graph& g, NodeSet t, std::size_t k)
    : g_(&g), t_(std::move(t)), k_(k), s_(g.size()) {
  for (NodeId r : lowest_roots(t_, k_)) {
    NodeSet far = t_ - closure(g, NodeSet(g.size(), {r}));
    for (NodeId v : far) {
      pairs_.push_back({v, r, State::Unknown, {}});
      pairs_.push_back({r, v, State::Unknown, {}});
    }
  }
}

void DemandCutOracle::add(const NodeSet& nodes) {
  NodeSet fresh = nodes - s_ - t_;
  if (fresh.empty()) return;
  for (Pair& p : pairs_) {
    if (p.state != State::Tight) continue;
    for (NodeId u : fresh) {
      if (g_->neighbor_set(u).intersects(p.side)) {
        p.state = State::Unknown;
        break;
      }
    }
  }
  s_ |= fresh;
}

std::optional<CutCertificate> DemandCutOracle::find() {
  const std::size_t n = g_->size();
  std::optional<FlowNetwork> net;
  NodeSet src(n), dst(n);
  FlowNetwork::Query q;
  q.sources = &src;
  q.hard_sinks = &dst;
  std::vector<NodeSet> tight;
  for (Pair& p : pairs_) {
    if (p.state == State::Unknown) {
      if (!net) {
        std::vector<NodeCap> caps(n, NodeCap::Absent);
        for (NodeId v : t_) caps[v] = NodeCap::Unit;
        for (NodeId v : s_) caps[v] = NodeCap::Infinite;
        net.emplace(*g_, std::move(caps));
      }
      src.clear();
      src.insert(p.source);
      dst.clear();
      dst.insert(p.sink);
      std::size_t value = net->run(q, k_);
      if (value >= k_) {
        p.state = State::Loose;
      } else {
        KMCDS_ENSURE(value + 1 == k_, "T is not (k-1)-connected");
        p.state = State::Tight;
        p.side = net->min_side();
      }
    }
    if (p.state == State::Tight) tight.push_back(p.side & t_);
  }
  if (tight.empty()) return std::nullopt;
  std::vector<NodeSet> minimal = minimal_sets(std::move(tight));
  CutCertificate c = make_certificate(*g_, t_, minimal.front(), CutKind::DemandCut);
  check_certificate(*g_, t_, k_, c);
  return c;
}

std::optional<CutCertificate> find_min_violated_demand_cut(const Graph& g, const NodeSet& t,
                                                           const NodeSet& s, std::size_t k) {
  if (k == 0) return std::nullopt;
  if (!is_k_connected(g, t, k - 1)) throw PreconditionViolation("G[T] is not (k-1)-connected");
  DemandCutOracle oracle(g, t, k);
  oracle.add(s);
  return oracle.find();
}

std::vector<NodeId> find_covering_path(const Graph& g, const NodeSet& t, const NodeSet& /*s*/,
                                       const CutCertificate& cert) {
  const std::size_t n = g.size();
  NodeSet x = cert.x & t;
  NodeSet far = t - closure(g, x);
  if (x.empty() || far.empty()) throw PreconditionViolation("not a T-cut");
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  // dist[u]: inner nodes on the shortest continuation from u (inclusive) into `far`
  std::vector<std::size_t> dist(n, kNone);
  std::deque<NodeId> queue;
  for (NodeId u = 0; u < n; ++u) {
    if (!t.contains(u) && g.neighbor_set(u).intersects(far)) {
      dist[u] = 1;
      queue.push_back(u);
    }
  }
  while (!queue.empty()) {
    NodeId u = queue.front();
    queue.pop_front();
    for (NodeId w : g.neighbors(u)) {
      if (t.contains(w) || dist[w] != kNone) continue;
      dist[w] = dist[u] + 1;
      queue.push_back(w);
    }
  }
  std::size_t best = kNone;
  NodeId first = 0;
  for (NodeId u = 0; u < n; ++u) {
    if (dist[u] < best && !t.contains(u) && g.neighbor_set(u).intersects(x)) {
      best = dist[u];
      first = u;
    }
  }
  if (best == kNone) throw NoPath("no T-path covers " + x.to_string());
  std::vector<NodeId> inner{first};
  while (inner.size() < best) {
    NodeId cur = inner.back();
    std::size_t want = best - inner.size();
    for (NodeId w : g.neighbors(cur)) {
      if (!t.contains(w) && dist[w] == want) {
        inner.push_back(w);
        break;
      }
    }
  }
  std::vector<NodeId> path;
  path.push_back((g.neighbor_set(inner.front()) & x).first());
  path.insert(path.end(), inner.begin(), inner.end());
  path.push_back((g.neighbor_set(inner.back()) & far).first());
  return path;
}

SteinerCutOracle::SteinerCutOracle(const Graph& g, NodeSet t, std::size_t k, NodeId r,
                                   std::vector<NodeSet> seeds, std::vector<NodeSet> soft_sinks)
    : g_(&g),
      t_(std::move(t)),
      k_(k),
      r_(r),
      seeds_(std::move(seeds)),
      soft_(std::move(soft_sinks)),
      p_(g.size()),
      sink_(g.size(), {r}),
      known_(seeds_.size(), false),
      side_(seeds_.size()) {
  if (soft_.empty()) soft_.assign(seeds_.size(), NodeSet(g.size()));
  if (soft_.size() != seeds_.size()) throw PreconditionViolation("one soft-sink set per seed");
}

void SteinerCutOracle::set_protected(const NodeSet& p) {
  if (p == p_) return;
  if (p_.is_subset_of(p)) {
    NodeSet fresh = p - p_;
    for (std::size_t i = 0; i < seeds_.size(); ++i) {
      if (!known_[i] || !side_[i]) continue;
      for (NodeId u : fresh) {
        if (g_->neighbor_set(u).intersects(*side_[i])) {
          known_[i] = false;
          break;
        }
      }
    }
  } else {
    std::fill(known_.begin(), known_.end(), false);
  }
  p_ = p;
  net_.reset();
}

FlowNetwork& SteinerCutOracle::network() {
  if (!net_) {
    std::vector<NodeCap> caps(g_->size(), NodeCap::Absent);
    for (NodeId v : p_) caps[v] = NodeCap::Infinite;
    for (NodeId v : t_) caps[v] = NodeCap::Unit;
    net_.emplace(*g_, std::move(caps));
  }
  return *net_;
}

void SteinerCutOracle::evaluate(std::size_t i) {
  FlowNetwork& net = network();
  FlowNetwork::Query q;
  q.sources = &seeds_[i];
  q.hard_sinks = &sink_;
  q.soft_sinks = soft_[i].empty() ? nullptr : &soft_[i];
  ++queries_;
  std::size_t value = net.run(q, k_);
  known_[i] = true;
  if (value >= k_) {
    side_[i].reset();
    return;
  }
  KMCDS_ENSURE(value + 1 == k_, "Steiner cut below k-1: T is not (k-1)-connected");
  side_[i] = net.min_side();
}

const std::vector<std::optional<NodeSet>>& SteinerCutOracle::sides() {
  for (std::size_t i = 0; i < seeds_.size(); ++i) {
    if (!known_[i]) evaluate(i);
  }
  return side_;
}

std::vector<NodeSet> SteinerCutOracle::minimal_sides() {
  std::vector<NodeSet> tight;
  for (const auto& s : sides()) {
    if (s) tight.push_back(*s);
  }
  return minimal_sets(std::move(tight));
}

bool SteinerCutOracle::all_loose() {
  for (std::size_t i = 0; i < seeds_.size(); ++i) {
    if (known_[i] && side_[i]) return false;
  }
  for (std::size_t i = 0; i < seeds_.size(); ++i) {
    if (!known_[i]) evaluate(i);
    if (side_[i]) return false;
  }
  return true;
}

std::vector<NodeSet> demand_seeds(const Graph& g, const NodeSet& t, NodeId r) {
  std::vector<NodeSet> seeds;
  for (NodeId v : t - closure(g, NodeSet(g.size(), {r}))) seeds.emplace_back(g.size(), std::initializer_list<NodeId>{v});
  return seeds;
}

std::vector<CutCertificate> min_cores(const Graph& g, const NodeSet& t, const NodeSet& s,
                                      std::size_t k, NodeId r) {
  if (!t.contains(r)) throw PreconditionViolation("root outside T");
  if (k == 0) return {};
  SteinerCutOracle oracle(g, t, k, r, demand_seeds(g, t, r));
  oracle.set_protected(s - t);
  std::vector<CutCertificate> out;
  for (const NodeSet& x : oracle.minimal_sides()) {
    out.push_back(make_certificate(g, t, x, CutKind::DemandCut, r));
    check_certificate(g, t, k, out.back());
  }
  return out;
}

}  // namespace kmcds
