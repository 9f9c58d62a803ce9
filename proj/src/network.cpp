#include "lnec/network.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <queue>
#include <sstream>

#include "lnec/error.hpp"

namespace lnec {

EdgeSet::EdgeSet(std::vector<EdgeId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool EdgeSet::contains(EdgeId e) const {
  return std::binary_search(ids_.begin(), ids_.end(), e);
}

bool EdgeSet::is_subset_of(const EdgeSet& other) const {
  return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
}

EdgeSet EdgeSet::with(EdgeId e) const {
  EdgeSet out = *this;
  auto it = std::lower_bound(out.ids_.begin(), out.ids_.end(), e);
  if (it == out.ids_.end() || *it != e) out.ids_.insert(it, e);
  return out;
}

EdgeSet EdgeSet::set_union(const EdgeSet& other) const {
  EdgeSet out;
  std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                 std::back_inserter(out.ids_));
  return out;
}

EdgeSet EdgeSet::set_difference(const EdgeSet& other) const {
  EdgeSet out;
  std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                      std::back_inserter(out.ids_));
  return out;
}

EdgeSet EdgeSet::set_intersection(const EdgeSet& other) const {
  EdgeSet out;
  std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                        std::back_inserter(out.ids_));
  return out;
}

AncestralOrder compute_ancestral_order(std::size_t node_count,
                                       std::span<const std::pair<std::size_t, std::size_t>> edges) {
  std::vector<std::size_t> indegree(node_count, 0);
  std::vector<std::vector<std::size_t>> succ(node_count);
  for (const auto& [tail, head] : edges) {
    ++indegree[head];
    succ[tail].push_back(head);
  }

  // Min-heap on declaration index gives the declaration-order tie-break.
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t v = 0; v < node_count; ++v)
    if (indegree[v] == 0) ready.push(v);

  AncestralOrder order;
  order.node_order.reserve(node_count);
  while (!ready.empty()) {
    std::size_t v = ready.top();
    ready.pop();
    order.node_order.push_back(v);
    for (std::size_t u : succ[v])
      if (--indegree[u] == 0) ready.push(u);
  }
  if (order.node_order.size() != node_count)
    fail(ErrorKind::validation, "cycle_detected", "network contains a directed cycle");

  std::vector<std::size_t> topo(node_count);
  for (std::size_t i = 0; i < node_count; ++i) topo[order.node_order[i]] = i;

  order.edge_order.resize(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) order.edge_order[i] = i;
  std::stable_sort(order.edge_order.begin(), order.edge_order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return topo[edges[a].first] < topo[edges[b].first];
                   });
  return order;
}

Network Network::build(std::vector<NodeDecl> nodes, std::vector<EdgeDecl> edges) {
  Network net;
  std::size_t sources = 0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    auto& decl = nodes[i];
    if (!net.node_index_.emplace(decl.name, static_cast<NodeId>(i)).second)
      fail(ErrorKind::validation, "duplicate_node", "duplicate node id '" + decl.name + "'");
    if (decl.role == NodeRole::source) {
      ++sources;
      net.source_ = static_cast<NodeId>(i);
    }
    if (decl.role == NodeRole::sink) net.sinks_.push_back(static_cast<NodeId>(i));
    net.nodes_.push_back(Node{std::move(decl.name), decl.role});
  }
  if (sources != 1)
    fail(ErrorKind::validation, "source_count",
         "exactly one source node is required, found " + std::to_string(sources));
  if (net.sinks_.empty()) fail(ErrorKind::validation, "no_sink", "at least one sink node is required");

  std::vector<std::pair<std::size_t, std::size_t>> endpoints;
  std::unordered_map<std::string, std::size_t> seen_edges;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& decl = edges[i];
    if (!seen_edges.emplace(decl.name, i).second)
      fail(ErrorKind::validation, "duplicate_edge", "duplicate edge id '" + decl.name + "'");
    auto resolve = [&](const std::string& name) -> std::size_t {
      auto it = net.node_index_.find(name);
      if (it == net.node_index_.end())
        fail(ErrorKind::validation, "unknown_node",
             "edge '" + decl.name + "' references unknown node '" + name + "'");
      return it->second;
    };
    endpoints.emplace_back(resolve(decl.tail), resolve(decl.head));
  }

  // Cycles are reported ahead of role violations.
  AncestralOrder order = compute_ancestral_order(nodes.size(), endpoints);

  for (const auto& [tail, head] : endpoints) {
    if (head == net.source_)
      fail(ErrorKind::validation, "source_has_input",
           "source node '" + net.nodes_[head].name + "' has an input edge");
    if (net.nodes_[tail].role == NodeRole::sink)
      fail(ErrorKind::validation, "sink_has_output",
           "sink node '" + net.nodes_[tail].name + "' has an output edge");
  }

  net.topo_index_.resize(nodes.size());
  for (std::size_t i = 0; i < order.node_order.size(); ++i) net.topo_index_[order.node_order[i]] = i;

  net.in_.resize(nodes.size());
  net.out_.resize(nodes.size());
  net.edges_.reserve(edges.size());
  for (std::size_t pos = 0; pos < order.edge_order.size(); ++pos) {
    std::size_t decl_index = order.edge_order[pos];
    auto id = static_cast<EdgeId>(pos);
    Edge e{std::move(edges[decl_index].name), static_cast<NodeId>(endpoints[decl_index].first),
           static_cast<NodeId>(endpoints[decl_index].second), decl_index};
    net.edge_index_.emplace(e.name, id);
    net.out_[e.tail].push_back(id);
    net.in_[e.head].push_back(id);
    net.edges_.push_back(std::move(e));
  }

  net.in_slot_.resize(net.edges_.size());
  net.out_slot_.resize(net.edges_.size());
  for (std::size_t v = 0; v < nodes.size(); ++v) {
    for (std::size_t i = 0; i < net.in_[v].size(); ++i) net.in_slot_[net.in_[v][i]] = i;
    for (std::size_t i = 0; i < net.out_[v].size(); ++i) net.out_slot_[net.out_[v][i]] = i;
  }
  return net;
}

NodeId Network::find_node(std::string_view name) const {
  auto it = node_index_.find(std::string(name));
  if (it == node_index_.end())
    fail(ErrorKind::validation, "unknown_node", "unknown node '" + std::string(name) + "'");
  return it->second;
}

EdgeId Network::find_edge(std::string_view name) const {
  auto it = edge_index_.find(std::string(name));
  if (it == edge_index_.end())
    fail(ErrorKind::validation, "unknown_edge", "unknown edge '" + std::string(name) + "'");
  return it->second;
}

EdgeSet Network::edge_set(std::span<const std::string> names) const {
  std::vector<EdgeId> ids;
  ids.reserve(names.size());
  for (const auto& name : names) ids.push_back(find_edge(name));
  return EdgeSet(std::move(ids));
}

std::vector<std::string> Network::edge_names(const EdgeSet& set) const {
  std::vector<std::string> names;
  names.reserve(set.size());
  for (EdgeId e : set) names.push_back(edge(e).name);
  return names;
}

void Network::check_edges(const EdgeSet& set) const {
  if (!set.empty() && set.ids().back() >= edges_.size())
    fail(ErrorKind::validation, "unknown_edge",
         "edge id " + std::to_string(set.ids().back()) + " is not in the network");
}

void Network::check_node(NodeId v) const {
  if (v >= nodes_.size())
    fail(ErrorKind::validation, "unknown_node", "node id " + std::to_string(v) + " is not in the network");
}

std::vector<EdgeId> Network::declaration_order() const {
  std::vector<EdgeId> ids(edges_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) ids[edges_[i].declared] = static_cast<EdgeId>(i);
  return ids;
}

std::string Network::to_text() const {
  std::ostringstream out;
  for (const auto& n : nodes_) {
    out << "node " << n.name;
    if (n.role == NodeRole::source) out << " source";
    if (n.role == NodeRole::sink) out << " sink";
    out << '\n';
  }
  for (EdgeId e : declaration_order()) {
    const Edge& ed = edges_[e];
    out << "edge " << ed.name << ' ' << nodes_[ed.tail].name << ' ' << nodes_[ed.head].name << '\n';
  }
  return out.str();
}

Network parse_network(std::string_view text) {
  std::vector<NodeDecl> nodes;
  std::vector<EdgeDecl> edges;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::vector<std::string> words;
    for (std::string w; tokens >> w;) words.push_back(std::move(w));
    if (words.empty()) continue;

    auto where = "line " + std::to_string(line_no) + ": ";
    if (words[0] == "node") {
      if (words.size() < 2 || words.size() > 3)
        fail(ErrorKind::validation, "parse_error", where + "expected 'node <id> [source|sink]'");
      NodeRole role = NodeRole::relay;
      if (words.size() == 3) {
        if (words[2] == "source") role = NodeRole::source;
        else if (words[2] == "sink") role = NodeRole::sink;
        else fail(ErrorKind::validation, "parse_error", where + "unknown node role '" + words[2] + "'");
      }
      nodes.push_back(NodeDecl{words[1], role});
    } else if (words[0] == "edge") {
      if (words.size() != 4)
        fail(ErrorKind::validation, "parse_error", where + "expected 'edge <id> <tail> <head>'");
      edges.push_back(EdgeDecl{words[1], words[2], words[3]});
    } else {
      fail(ErrorKind::validation, "parse_error", where + "unknown directive '" + words[0] + "'");
    }
  }
  return Network::build(std::move(nodes), std::move(edges));
}

Network load_network(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::validation, "io_error", "cannot open network file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_network(buf.str());
}

std::vector<std::string> ancestral_order(const Network& net) {
  std::vector<std::string> names;
  names.reserve(net.edge_count());
  for (const auto& e : net.edges()) names.push_back(e.name);
  return names;
}

ReachPartition partition_reachable(const Network& net, NodeId t, const EdgeSet& rho) {
  net.check_node(t);
  net.check_edges(rho);

  std::vector<char> blocked(net.edge_count(), 0);
  for (EdgeId e : rho) blocked[e] = 1;

  std::vector<char> marked(net.node_count(), 0);
  std::vector<char> reaching(net.edge_count(), 0);
  std::vector<char> in_et(net.edge_count(), 0);
  std::vector<NodeId> frontier{t};
  marked[t] = 1;
  while (!frontier.empty()) {
    NodeId v = frontier.back();
    frontier.pop_back();
    for (EdgeId e : net.in_edges(v)) {
      if (blocked[e]) continue;
      reaching[e] = 1;
      NodeId u = net.edge(e).tail;
      if (!marked[u]) {
        marked[u] = 1;
        frontier.push_back(u);
      }
    }
  }

  // E_t itself, for the complement. Same search with nothing blocked.
  std::vector<char> seen(net.node_count(), 0);
  frontier.assign(1, t);
  seen[t] = 1;
  while (!frontier.empty()) {
    NodeId v = frontier.back();
    frontier.pop_back();
    for (EdgeId e : net.in_edges(v)) {
      in_et[e] = 1;
      NodeId u = net.edge(e).tail;
      if (!seen[u]) {
        seen[u] = 1;
        frontier.push_back(u);
      }
    }
  }

  std::vector<EdgeId> keep, cut;
  for (EdgeId e = 0; e < net.edge_count(); ++e) {
    if (reaching[e]) keep.push_back(e);
    else if (in_et[e]) cut.push_back(e);
  }
  return ReachPartition{EdgeSet(std::move(keep)), EdgeSet(std::move(cut))};
}

EdgeSet reachable_edges(const Network& net, NodeId t) {
  return partition_reachable(net, t, EdgeSet{}).reaching;
}

}  // namespace lnec
