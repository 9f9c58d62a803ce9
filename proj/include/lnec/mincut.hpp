#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "lnec/network.hpp"

namespace lnec {

// Topology-only directed multigraph used as the flow substrate. Arc order is
// the order augmenting-path searches scan adjacency lists in.
struct Digraph {
  struct Arc {
    std::uint32_t tail;
    std::uint32_t head;
  };
  std::size_t node_count = 0;
  std::vector<Arc> arcs;

  std::uint32_t add_node() { return static_cast<std::uint32_t>(node_count++); }
  std::size_t add_arc(std::uint32_t tail, std::uint32_t head) {
    arcs.push_back({tail, head});
    return arcs.size() - 1;
  }
};

struct MaxFlowOptions {
  // When set, adjacency lists are shuffled with this seed before searching.
  std::optional<std::uint64_t> shuffle_seed;
};

// Unit-capacity max flow. flow[a] is 0 or 1 per arc.
struct ArcFlow {
  std::vector<std::uint8_t> flow;
  std::size_t value = 0;
};

ArcFlow max_flow_arcs(const Digraph& g, std::uint32_t src, std::uint32_t dst,
                      const MaxFlowOptions& options = {});

// Nodes that can still reach dst in the residual graph of `flow`: grown from
// dst backwards over zero-flow arcs and forwards over unit-flow arcs.
std::vector<char> residual_sink_side(const Digraph& g, const ArcFlow& flow, std::uint32_t dst);

struct FlowAssignment {
  std::vector<std::uint8_t> edge_flow;   // indexed by EdgeId
  std::size_t value = 0;                 // number of edge-disjoint paths
  std::vector<std::vector<EdgeId>> paths;
};

// Max flow from src to dst on the real network, with its decomposition into
// edge-disjoint paths. Value 0 and no paths when dst is unreachable.
FlowAssignment max_flow_unit(const Network& net, NodeId src, NodeId dst,
                             const MaxFlowOptions& options = {});

// C_t: minimum cut capacity separating t from the source.
std::size_t source_capacity(const Network& net, NodeId t);

enum class ArcKind : std::uint8_t { plain, first_half, second_half, super };

// The subdivision construction: every edge e of a chosen subset is split into
// e^1 = (tail(e), v_e) and e^2 = (v_e, head(e)), and a super node is joined to
// each v_e by a unit-capacity super-edge.
struct Gadget {
  Digraph graph;
  std::vector<std::optional<EdgeId>> origin;  // per arc; nullopt for super-edges
  std::vector<ArcKind> kind;
  std::uint32_t super_node = 0;
};

// Super-edges point v_rho -> v_e. Only the subgraph on E_t is kept; node ids of
// the network are preserved.
Gadget build_sink_gadget(const Network& net, const EdgeSet& rho, NodeId t);

// Super-edges point v_e -> v_xi; the whole network is kept.
Gadget build_source_gadget(const Network& net, const EdgeSet& xi);

// mincut(rho, t). 0 when no edge of rho reaches t.
std::size_t mincut_edges_to_node(const Network& net, const EdgeSet& rho, NodeId t);

// Minimum cut capacity separating the edge subset xi from node u.
std::size_t mincut_node_to_edges(const Network& net, NodeId u, const EdgeSet& xi);

// The primary minimum cut separating t from rho: a max flow from v_rho to t on
// the sink gadget followed by residual labelling from t. Empty when
// mincut(rho, t) = 0. Throws if rho is empty.
EdgeSet primary_min_cut(const Network& net, const EdgeSet& rho, NodeId t,
                        const MaxFlowOptions& options = {});

}  // namespace lnec
