#include "kmcds/flow.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "kmcds/errors.hpp"

namespace kmcds {

namespace {
constexpr int kInf = 1 << 29;

bool has(const NodeSet* s, NodeId v) { return s != nullptr && s->contains(v); }
}  // namespace

FlowNetwork::FlowNetwork(const Graph& g, std::vector<NodeCap> caps) : g_(&g), caps_(std::move(caps)) {
  const std::size_t n = g.size();
  if (caps_.size() != n) throw PreconditionViolation("capacity vector size mismatch");
  offset_.assign(n + 1, 0);
  for (NodeId v = 0; v < n; ++v) {
    std::size_t d = 0;
    if (caps_[v] != NodeCap::Absent) {
      for (NodeId u : g.neighbors(v)) d += caps_[u] != NodeCap::Absent;
    }
    offset_[v + 1] = offset_[v] + d;
  }
  head_.resize(offset_[n]);
  rev_.resize(offset_[n]);
  std::vector<std::size_t> fill(offset_.begin(), offset_.end() - 1);
  for (NodeId v = 0; v < n; ++v) {
    if (caps_[v] == NodeCap::Absent) continue;
    for (NodeId u : g.neighbors(v)) {
      if (caps_[u] != NodeCap::Absent) head_[fill[v]++] = u;
    }
  }
  // neighbor lists are ascending, so the reverse arc is found by binary search
  for (NodeId v = 0; v < n; ++v) {
    for (std::size_t a = offset_[v]; a < offset_[v + 1]; ++a) {
      NodeId u = head_[a];
      auto first = head_.begin() + static_cast<std::ptrdiff_t>(offset_[u]);
      auto last = head_.begin() + static_cast<std::ptrdiff_t>(offset_[u + 1]);
      rev_[a] = static_cast<std::size_t>(std::lower_bound(first, last, v) - head_.begin());
    }
  }
  arc_flow_.assign(head_.size(), 0);
  through_.assign(n, 0);
  stamp_.assign(2 * n, 0);
  parent_.assign(2 * n, -1);
}

int FlowNetwork::internal_capacity(NodeId v) const {
  if (has(q_.sources, v)) return kInf;
  switch (caps_[v]) {
    case NodeCap::Unit:
      return 1;
    case NodeCap::Infinite:
      return kInf;
    default:
      return 0;
  }
}

std::size_t FlowNetwork::run(const Query& q, std::size_t limit) {
  q_ = q;
  infinite_ = false;
  std::fill(arc_flow_.begin(), arc_flow_.end(), 0);
  std::fill(through_.begin(), through_.end(), 0);
  if (q.sources == nullptr || q.sources->empty()) throw PreconditionViolation("flow query without sources");
  for (NodeId s : *q.sources) {
    if (caps_[s] == NodeCap::Absent) throw PreconditionViolation("source outside the network");
    if (has(q.hard_sinks, s) || has(q.soft_sinks, s)) {
      infinite_ = true;
      return limit;
    }
  }
  std::size_t value = 0;
  while (value < limit) {
    if (!augment()) break;
    if (infinite_) return limit;
    ++value;
  }
  return value;
}

// One BFS over the residual graph. State 2v is v_in, 2v+1 is v_out. parent_ holds
// (previous state << 1 | via_edge) with the arc index kept separately in arc_of.
bool FlowNetwork::augment() {
  const std::size_t n = g_->size();
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
  static thread_local std::vector<std::int64_t> arc_of;
  arc_of.assign(2 * n, -1);
  std::deque<std::size_t> queue;
  auto visit = [&](std::size_t s, std::int64_t from, std::int64_t arc) {
    if (stamp_[s] == epoch_) return false;
    stamp_[s] = epoch_;
    parent_[s] = from;
    arc_of[s] = arc;
    queue.push_back(s);
    return true;
  };
  for (NodeId s : *q_.sources) visit(2 * std::size_t{s}, -1, -1);

  std::int64_t target = -1;
  while (!queue.empty() && target < 0) {
    std::size_t st = queue.front();
    queue.pop_front();
    NodeId v = static_cast<NodeId>(st / 2);
    if (st % 2 == 0) {
      if (has(q_.hard_sinks, v)) {
        target = static_cast<std::int64_t>(st);
        break;
      }
      if (through_[v] < internal_capacity(v)) visit(st + 1, static_cast<std::int64_t>(st), -1);
      // backward along arcs w_out -> v_in carrying flow
      for (std::size_t a = offset_[v]; a < offset_[v + 1]; ++a) {
        std::size_t b = rev_[a];
        if (arc_flow_[b] > 0) visit(2 * std::size_t{head_[a]} + 1, static_cast<std::int64_t>(st),
                                    static_cast<std::int64_t>(b));
      }
    } else {
      if (has(q_.soft_sinks, v)) {
        target = static_cast<std::int64_t>(st);
        break;
      }
      if (through_[v] > 0) visit(st - 1, static_cast<std::int64_t>(st), -1);
      bool src = has(q_.sources, v);
      for (std::size_t a = offset_[v]; a < offset_[v + 1]; ++a) {
        NodeId w = head_[a];
        if (q_.ignore_direct_edges && src && has(q_.hard_sinks, w)) continue;
        visit(2 * std::size_t{w}, static_cast<std::int64_t>(st), static_cast<std::int64_t>(a));
      }
    }
  }
  if (target < 0) return false;

  // bottleneck: finite only through unit internal arcs or backward arcs
  int bottleneck = kInf;
  for (std::size_t st = static_cast<std::size_t>(target); parent_[st] >= 0;
       st = static_cast<std::size_t>(parent_[st])) {
    std::size_t prev = static_cast<std::size_t>(parent_[st]);
    NodeId v = static_cast<NodeId>(st / 2);
    if (arc_of[st] < 0) {
      if (st % 2 == 1) bottleneck = std::min(bottleneck, internal_capacity(v) - through_[v]);
      else bottleneck = std::min(bottleneck, through_[v]);
    } else if (prev % 2 == 0) {
      bottleneck = std::min(bottleneck, arc_flow_[static_cast<std::size_t>(arc_of[st])]);
    }
  }
  if (bottleneck >= kInf) {
    infinite_ = true;
    return true;
  }
  for (std::size_t st = static_cast<std::size_t>(target); parent_[st] >= 0;
       st = static_cast<std::size_t>(parent_[st])) {
    std::size_t prev = static_cast<std::size_t>(parent_[st]);
    NodeId v = static_cast<NodeId>(st / 2);
    if (arc_of[st] < 0) {
      through_[v] += st % 2 == 1 ? 1 : -1;
    } else {
      arc_flow_[static_cast<std::size_t>(arc_of[st])] += prev % 2 == 1 ? 1 : -1;
    }
  }
  return true;
}

void FlowNetwork::reach_from_sources(std::vector<std::uint8_t>& in, std::vector<std::uint8_t>& out) const {
  const std::size_t n = g_->size();
  in.assign(n, 0);
  out.assign(n, 0);
  std::vector<std::size_t> stack;
  auto push = [&](std::size_t st) {
    auto& mark = st % 2 == 0 ? in[st / 2] : out[st / 2];
    if (mark) return;
    mark = 1;
    stack.push_back(st);
  };
  for (NodeId s : *q_.sources) push(2 * std::size_t{s});
  while (!stack.empty()) {
    std::size_t st = stack.back();
    stack.pop_back();
    NodeId v = static_cast<NodeId>(st / 2);
    if (st % 2 == 0) {
      if (has(q_.hard_sinks, v)) continue;
      if (through_[v] < internal_capacity(v)) push(st + 1);
      for (std::size_t a = offset_[v]; a < offset_[v + 1]; ++a) {
        if (arc_flow_[rev_[a]] > 0) push(2 * std::size_t{head_[a]} + 1);
      }
    } else {
      if (has(q_.soft_sinks, v)) continue;
      if (through_[v] > 0) push(st - 1);
      bool src = has(q_.sources, v);
      for (std::size_t a = offset_[v]; a < offset_[v + 1]; ++a) {
        NodeId w = head_[a];
        if (q_.ignore_direct_edges && src && has(q_.hard_sinks, w)) continue;
        push(2 * std::size_t{w});
      }
    }
  }
}

NodeSet FlowNetwork::min_side() const {
  std::vector<std::uint8_t> in, out;
  reach_from_sources(in, out);
  NodeSet x(g_->size());
  for (NodeId v = 0; v < g_->size(); ++v) {
    if (in[v] && out[v]) x.insert(v);
  }
  return x;
}

NodeSet FlowNetwork::cut() const {
  std::vector<std::uint8_t> in, out;
  reach_from_sources(in, out);
  NodeSet c(g_->size());
  for (NodeId v = 0; v < g_->size(); ++v) {
    if (in[v] && !out[v]) c.insert(v);
  }
  return c;
}

NodeSet FlowNetwork::max_side() const {
  const std::size_t n = g_->size();
  std::vector<std::uint8_t> in(n, 0), out(n, 0);
  std::vector<std::size_t> stack;
  auto push = [&](std::size_t st) {
    auto& mark = st % 2 == 0 ? in[st / 2] : out[st / 2];
    if (mark) return;
    mark = 1;
    stack.push_back(st);
  };
  for (NodeId v = 0; v < n; ++v) {
    if (caps_[v] == NodeCap::Absent) continue;
    if (has(q_.hard_sinks, v)) push(2 * std::size_t{v});
    if (has(q_.soft_sinks, v)) push(2 * std::size_t{v} + 1);
  }
  // walk residual arcs backwards
  while (!stack.empty()) {
    std::size_t st = stack.back();
    stack.pop_back();
    NodeId v = static_cast<NodeId>(st / 2);
    if (st % 2 == 0) {
      bool sink = has(q_.hard_sinks, v);
      for (std::size_t a = offset_[v]; a < offset_[v + 1]; ++a) {
        NodeId u = head_[a];
        if (q_.ignore_direct_edges && sink && has(q_.sources, u)) continue;
        push(2 * std::size_t{u} + 1);
      }
      if (through_[v] > 0) push(st + 1);
    } else {
      if (through_[v] < internal_capacity(v)) push(st - 1);
      for (std::size_t a = offset_[v]; a < offset_[v + 1]; ++a) {
        if (arc_flow_[a] > 0) push(2 * std::size_t{head_[a]});
      }
    }
  }
  NodeSet x(n);
  for (NodeId v = 0; v < n; ++v) {
    if (caps_[v] != NodeCap::Absent && !in[v] && !out[v]) x.insert(v);
  }
  return x;
}

VertexCut min_vertex_cut(const Graph& g, const NodeSet& sources, const NodeSet& sinks,
                         const NodeSet& protected_nodes) {
  if (sources.empty() || sinks.empty()) throw PreconditionViolation("empty source or sink group");
  if (sources.intersects(sinks)) throw InfiniteCut("source and sink groups overlap");
  std::vector<NodeCap> caps(g.size(), NodeCap::Unit);
  for (NodeId v : protected_nodes) caps[v] = NodeCap::Infinite;
  FlowNetwork net(g, std::move(caps));
  FlowNetwork::Query q;
  q.sources = &sources;
  q.hard_sinks = &sinks;
  q.ignore_direct_edges = true;
  const std::size_t limit = g.size() + 1;
  std::size_t value = net.run(q, limit);
  if (net.last_infinite() || value >= limit) throw InfiniteCut("no finite separator");
  VertexCut out;
  out.size = value;
  out.cut = net.cut();
  out.min_side = net.min_side();
  out.max_side = net.max_side();
  return out;
}

}  // namespace kmcds
