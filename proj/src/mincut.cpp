#include "lnec/mincut.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "lnec/error.hpp"

namespace lnec {
namespace {

struct ResidualStep {
  std::uint32_t arc;
  bool forward;  // true: traverse arc tail->head (needs flow 0)
};

std::vector<std::vector<ResidualStep>> residual_adjacency(const Digraph& g,
                                                          const MaxFlowOptions& options) {
  std::vector<std::vector<ResidualStep>> adj(g.node_count);
  for (std::uint32_t a = 0; a < g.arcs.size(); ++a) {
    adj[g.arcs[a].tail].push_back({a, true});
    adj[g.arcs[a].head].push_back({a, false});
  }
  if (options.shuffle_seed) {
    std::mt19937_64 rng(*options.shuffle_seed);
    for (auto& list : adj) std::shuffle(list.begin(), list.end(), rng);
  }
  return adj;
}

}  // namespace

ArcFlow max_flow_arcs(const Digraph& g, std::uint32_t src, std::uint32_t dst,
                      const MaxFlowOptions& options) {
  if (src == dst) throw std::invalid_argument("max flow endpoints must differ");
  ArcFlow result;
  result.flow.assign(g.arcs.size(), 0);
  auto adj = residual_adjacency(g, options);

  // Breadth-first augmenting paths; each augmentation adds one unit.
  std::vector<std::int64_t> via(g.node_count);
  std::vector<std::uint32_t> queue;
  queue.reserve(g.node_count);
  for (;;) {
    std::fill(via.begin(), via.end(), -1);
    via[src] = static_cast<std::int64_t>(g.arcs.size());
    queue.assign(1, src);
    for (std::size_t head = 0; head < queue.size() && via[dst] < 0; ++head) {
      std::uint32_t v = queue[head];
      for (const auto& step : adj[v]) {
        const auto& arc = g.arcs[step.arc];
        std::uint32_t u = step.forward ? arc.head : arc.tail;
        bool usable = step.forward ? result.flow[step.arc] == 0 : result.flow[step.arc] == 1;
        if (!usable || via[u] >= 0) continue;
        via[u] = step.forward ? static_cast<std::int64_t>(step.arc)
                              : ~static_cast<std::int64_t>(step.arc);
        queue.push_back(u);
      }
    }
    if (via[dst] < 0) break;
    for (std::uint32_t v = dst; v != src;) {
      std::int64_t tag = via[v];
      if (tag >= 0) {
        result.flow[tag] = 1;
        v = g.arcs[tag].tail;
      } else {
        auto arc = static_cast<std::size_t>(~tag);
        result.flow[arc] = 0;
        v = g.arcs[arc].head;
      }
    }
    ++result.value;
  }
  return result;
}

std::vector<char> residual_sink_side(const Digraph& g, const ArcFlow& flow, std::uint32_t dst) {
  std::vector<std::vector<std::uint32_t>> into(g.node_count), out_of(g.node_count);
  for (std::uint32_t a = 0; a < g.arcs.size(); ++a) {
    into[g.arcs[a].head].push_back(a);
    out_of[g.arcs[a].tail].push_back(a);
  }
  std::vector<char> in_s(g.node_count, 0);
  std::vector<std::uint32_t> work{dst};
  in_s[dst] = 1;
  while (!work.empty()) {
    std::uint32_t v = work.back();
    work.pop_back();
    for (std::uint32_t a : into[v]) {
      std::uint32_t u = g.arcs[a].tail;
      if (!in_s[u] && flow.flow[a] == 0) {
        in_s[u] = 1;
        work.push_back(u);
      }
    }
    for (std::uint32_t a : out_of[v]) {
      std::uint32_t u = g.arcs[a].head;
      if (!in_s[u] && flow.flow[a] == 1) {
        in_s[u] = 1;
        work.push_back(u);
      }
    }
  }
  return in_s;
}

FlowAssignment max_flow_unit(const Network& net, NodeId src, NodeId dst, const MaxFlowOptions& options) {
  net.check_node(src);
  net.check_node(dst);
  if (src == dst) fail(ErrorKind::validation, "same_endpoints", "max flow endpoints must differ");

  Digraph g;
  g.node_count = net.node_count();
  for (const auto& e : net.edges()) g.add_arc(e.tail, e.head);
  ArcFlow arc_flow = max_flow_arcs(g, src, dst, options);

  FlowAssignment out;
  out.edge_flow = arc_flow.flow;
  out.value = arc_flow.value;

  // Acyclic, so following unused unit-flow edges from src always ends at dst.
  std::vector<char> used(net.edge_count(), 0);
  for (std::size_t p = 0; p < out.value; ++p) {
    std::vector<EdgeId> path;
    NodeId v = src;
    while (v != dst) {
      EdgeId next = static_cast<EdgeId>(net.edge_count());
      for (EdgeId e : net.out_edges(v)) {
        if (out.edge_flow[e] && !used[e]) {
          next = e;
          break;
        }
      }
      if (next == net.edge_count()) throw std::logic_error("flow decomposition failed");
      used[next] = 1;
      path.push_back(next);
      v = net.edge(next).head;
    }
    out.paths.push_back(std::move(path));
  }
  return out;
}

std::size_t source_capacity(const Network& net, NodeId t) {
  if (t == net.source()) return 0;
  return max_flow_unit(net, net.source(), t).value;
}

Gadget build_sink_gadget(const Network& net, const EdgeSet& rho, NodeId t) {
  net.check_node(t);
  net.check_edges(rho);
  EdgeSet reach = reachable_edges(net, t);

  Gadget gad;
  gad.graph.node_count = net.node_count();
  std::vector<std::uint32_t> split_nodes;
  for (EdgeId e : reach) {
    const Edge& ed = net.edge(e);
    if (rho.contains(e)) {
      std::uint32_t mid = gad.graph.add_node();
      split_nodes.push_back(mid);
      gad.graph.add_arc(ed.tail, mid);
      gad.origin.emplace_back(e);
      gad.kind.push_back(ArcKind::first_half);
      gad.graph.add_arc(mid, ed.head);
      gad.origin.emplace_back(e);
      gad.kind.push_back(ArcKind::second_half);
    } else {
      gad.graph.add_arc(ed.tail, ed.head);
      gad.origin.emplace_back(e);
      gad.kind.push_back(ArcKind::plain);
    }
  }
  gad.super_node = gad.graph.add_node();
  for (std::uint32_t mid : split_nodes) {
    gad.graph.add_arc(gad.super_node, mid);
    gad.origin.emplace_back(std::nullopt);
    gad.kind.push_back(ArcKind::super);
  }
  return gad;
}

Gadget build_source_gadget(const Network& net, const EdgeSet& xi) {
  net.check_edges(xi);
  Gadget gad;
  gad.graph.node_count = net.node_count();
  std::vector<std::uint32_t> split_nodes;
  for (EdgeId e = 0; e < net.edge_count(); ++e) {
    const Edge& ed = net.edge(e);
    if (xi.contains(e)) {
      std::uint32_t mid = gad.graph.add_node();
      split_nodes.push_back(mid);
      gad.graph.add_arc(ed.tail, mid);
      gad.origin.emplace_back(e);
      gad.kind.push_back(ArcKind::first_half);
      gad.graph.add_arc(mid, ed.head);
      gad.origin.emplace_back(e);
      gad.kind.push_back(ArcKind::second_half);
    } else {
      gad.graph.add_arc(ed.tail, ed.head);
      gad.origin.emplace_back(e);
      gad.kind.push_back(ArcKind::plain);
    }
  }
  gad.super_node = gad.graph.add_node();
  for (std::uint32_t mid : split_nodes) {
    gad.graph.add_arc(mid, gad.super_node);
    gad.origin.emplace_back(std::nullopt);
    gad.kind.push_back(ArcKind::super);
  }
  return gad;
}

std::size_t mincut_edges_to_node(const Network& net, const EdgeSet& rho, NodeId t) {
  if (rho.empty()) {
    net.check_node(t);
    return 0;
  }
  Gadget gad = build_sink_gadget(net, rho, t);
  return max_flow_arcs(gad.graph, gad.super_node, t).value;
}

std::size_t mincut_node_to_edges(const Network& net, NodeId u, const EdgeSet& xi) {
  net.check_node(u);
  if (xi.empty()) return 0;
  Gadget gad = build_source_gadget(net, xi);
  return max_flow_arcs(gad.graph, u, gad.super_node).value;
}

EdgeSet primary_min_cut(const Network& net, const EdgeSet& rho, NodeId t, const MaxFlowOptions& options) {
  if (rho.empty()) fail(ErrorKind::validation, "empty_edge_set", "primary minimum cut needs a nonempty edge set");
  Gadget gad = build_sink_gadget(net, rho, t);
  ArcFlow flow = max_flow_arcs(gad.graph, gad.super_node, t, options);
  if (flow.value == 0) return {};

  std::vector<char> sink_side = residual_sink_side(gad.graph, flow, t);
  std::vector<EdgeId> cut;
  for (std::size_t a = 0; a < gad.graph.arcs.size(); ++a) {
    const auto& arc = gad.graph.arcs[a];
    if (sink_side[arc.tail] || !sink_side[arc.head]) continue;
    if (gad.kind[a] == ArcKind::super) throw std::logic_error("primary minimum cut contains a super-edge");
    cut.push_back(*gad.origin[a]);
  }
  EdgeSet result(std::move(cut));
  if (result.size() != flow.value) throw std::logic_error("primary minimum cut size differs from flow value");
  return result;
}

}  // namespace lnec
