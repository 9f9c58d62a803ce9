#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace lnec {

// Nodes are numbered in declaration order.
using NodeId = std::uint32_t;

// Edges are numbered by their position in the ancestral order, so sorting a
// list of EdgeIds sorts it ancestrally. The declaration index is kept on the
// Edge record.
using EdgeId = std::uint32_t;

enum class NodeRole { relay, source, sink };

struct Node {
  std::string name;
  NodeRole role = NodeRole::relay;
};

struct Edge {
  std::string name;
  NodeId tail = 0;
  NodeId head = 0;
  std::size_t declared = 0;
};

// An ordered set of edge ids. Iteration follows the ancestral order.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(std::vector<EdgeId> ids);
  EdgeSet(std::initializer_list<EdgeId> ids) : EdgeSet(std::vector<EdgeId>(ids)) {}

  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  EdgeId operator[](std::size_t i) const { return ids_[i]; }
  std::span<const EdgeId> ids() const { return ids_; }

  bool contains(EdgeId e) const;
  bool is_subset_of(const EdgeSet& other) const;
  EdgeSet with(EdgeId e) const;
  EdgeSet set_union(const EdgeSet& other) const;
  EdgeSet set_difference(const EdgeSet& other) const;
  EdgeSet set_intersection(const EdgeSet& other) const;

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;
  friend auto operator<=>(const EdgeSet& a, const EdgeSet& b) { return a.ids_ <=> b.ids_; }

 private:
  std::vector<EdgeId> ids_;
};

struct NodeDecl {
  std::string name;
  NodeRole role = NodeRole::relay;
};

struct EdgeDecl {
  std::string name;
  std::string tail;
  std::string head;
};

// A finite directed acyclic multigraph with a single source and a nonempty
// set of sinks. The source has no input edges and no sink has output edges.
// Immutable once built.
class Network {
 public:
  // Validates and builds a network from declarations. Declaration order
  // drives the tie-breaks of the ancestral order.
  static Network build(std::vector<NodeDecl> nodes, std::vector<EdgeDecl> edges);

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const Node& node(NodeId v) const { return nodes_.at(v); }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  std::span<const Node> nodes() const { return nodes_; }
  std::span<const Edge> edges() const { return edges_; }

  NodeId source() const { return source_; }
  std::span<const NodeId> sinks() const { return sinks_; }
  bool is_sink(NodeId v) const { return nodes_.at(v).role == NodeRole::sink; }

  // Both lists are in ancestral order.
  std::span<const EdgeId> in_edges(NodeId v) const { return in_.at(v); }
  std::span<const EdgeId> out_edges(NodeId v) const { return out_.at(v); }

  // Position of e within in_edges(head(e)) / out_edges(tail(e)).
  std::size_t in_slot(EdgeId e) const { return in_slot_.at(e); }
  std::size_t out_slot(EdgeId e) const { return out_slot_.at(e); }

  // Topological position of each node (Kahn order, declaration tie-break).
  std::size_t topo_index(NodeId v) const { return topo_index_.at(v); }

  NodeId find_node(std::string_view name) const;
  EdgeId find_edge(std::string_view name) const;
  EdgeSet edge_set(std::span<const std::string> names) const;
  std::vector<std::string> edge_names(const EdgeSet& set) const;

  // Throws if any member is not an edge of this network.
  void check_edges(const EdgeSet& set) const;
  void check_node(NodeId v) const;

  // Edge ids sorted by declaration index.
  std::vector<EdgeId> declaration_order() const;

  // Canonical text form, nodes and edges in declaration order.
  std::string to_text() const;

 private:
  Network() = default;

  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  NodeId source_ = 0;
  std::vector<NodeId> sinks_;
  std::vector<std::vector<EdgeId>> in_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<std::size_t> in_slot_;
  std::vector<std::size_t> out_slot_;
  std::vector<std::size_t> topo_index_;
  std::unordered_map<std::string, NodeId> node_index_;
  std::unordered_map<std::string, EdgeId> edge_index_;
};

// Parses the line-oriented network description:
//   node <id> [source|sink]
//   edge <id> <tail> <head>
// `#` starts a comment.
Network parse_network(std::string_view text);
Network load_network(const std::string& path);

// Kahn topological sort over nodes (ties broken by declaration index), then
// edges ordered by (topological index of tail, declaration index). Inputs are
// declaration-indexed; the result lists declaration indices in ancestral
// order. Throws on a directed cycle.
struct AncestralOrder {
  std::vector<std::size_t> node_order;
  std::vector<std::size_t> edge_order;
};
AncestralOrder compute_ancestral_order(std::size_t node_count,
                                       std::span<const std::pair<std::size_t, std::size_t>> edges);

// Edge names of `net` in ancestral order.
std::vector<std::string> ancestral_order(const Network& net);

// E_t: every edge with a directed path to t (an edge into t counts).
EdgeSet reachable_edges(const Network& net, NodeId t);

struct ReachPartition {
  EdgeSet reaching;  // E_{t,rho}: still reaches t once rho is deleted
  EdgeSet cut_off;   // E_t minus reaching
};

// Backward marking search from t that skips edges of rho.
ReachPartition partition_reachable(const Network& net, NodeId t, const EdgeSet& rho);

}  // namespace lnec
