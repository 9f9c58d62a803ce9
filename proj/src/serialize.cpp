#include "lnec/serialize.hpp"

#include <fstream>
#include <sstream>

#include "lnec/error.hpp"

namespace lnec {
namespace {

const char* role_name(NodeRole role) {
  switch (role) {
    case NodeRole::source: return "source";
    case NodeRole::sink: return "sink";
    case NodeRole::relay: break;
  }
  return "relay";
}

[[noreturn]] void bad(const std::string& what) { fail(ErrorKind::validation, "bad_code_json", what); }

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing key '") + key + "'");
  return j.at(key);
}

template <class T>
T read(const Json& j, const char* key) {
  try {
    return member(j, key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("key '") + key + "': " + e.what());
  }
}

std::string source_row_label(std::size_t i) { return "d'" + std::to_string(i + 1); }

}  // namespace

Json network_to_json(const Network& net) {
  Json nodes = Json::array();
  for (const Node& v : net.nodes()) nodes.push_back({{"name", v.name}, {"role", role_name(v.role)}});
  Json edges = Json::array();
  for (EdgeId e : net.declaration_order()) {
    const Edge& ed = net.edge(e);
    edges.push_back({{"name", ed.name}, {"tail", net.node(ed.tail).name}, {"head", net.node(ed.head).name}});
  }
  return {{"nodes", nodes}, {"edges", edges}};
}

Network network_from_json(const Json& j) {
  std::vector<NodeDecl> nodes;
  for (const Json& v : member(j, "nodes")) {
    auto role = read<std::string>(v, "role");
    NodeRole r = NodeRole::relay;
    if (role == "source") r = NodeRole::source;
    else if (role == "sink") r = NodeRole::sink;
    else if (role != "relay") bad("unknown node role '" + role + "'");
    nodes.push_back({read<std::string>(v, "name"), r});
  }
  std::vector<EdgeDecl> edges;
  for (const Json& e : member(j, "edges"))
    edges.push_back({read<std::string>(e, "name"), read<std::string>(e, "tail"), read<std::string>(e, "head")});
  return Network::build(std::move(nodes), std::move(edges));
}

Json edge_set_to_json(const Network& net, const EdgeSet& set) { return net.edge_names(set); }

Json code_to_json(const LnecCode& code) {
  const Network& net = code.network();
  const Field& f = code.field();
  Json locals = Json::array();
  for (NodeId v = 0; v < net.node_count(); ++v) {
    if (net.is_sink(v)) continue;
    Json rows = Json::array();
    if (v == net.source()) {
      for (std::size_t i = 0; i < code.rate(); ++i) rows.push_back(source_row_label(i));
    } else {
      for (EdgeId d : net.in_edges(v)) rows.push_back(net.edge(d).name);
    }
    Json cols = Json::array();
    for (EdgeId e : net.out_edges(v)) cols.push_back(net.edge(e).name);
    const Matrix& k = code.local(v);
    Json entries = Json::array();
    for (std::size_t r = 0; r < k.rows(); ++r) {
      auto row = k.row(r);
      entries.push_back(std::vector<Field::Element>(row.begin(), row.end()));
    }
    locals.push_back({{"node", net.node(v).name}, {"rows", rows}, {"cols", cols}, {"entries", entries}});
  }
  return {{"schema_version", kCodeSchemaVersion},
          {"field", {{"q", f.order()}, {"p", f.characteristic()}, {"m", f.degree()}, {"modulus", f.modulus()}}},
          {"rate", code.rate()},
          {"network", network_to_json(net)},
          {"locals", locals}};
}

LnecCode code_from_json(const Json& doc) {
  const Json& j = doc.is_object() && doc.contains("code") ? doc.at("code") : doc;
  if (read<int>(j, "schema_version") != kCodeSchemaVersion)
    bad("unsupported schema_version " + member(j, "schema_version").dump());

  const Json& fj = member(j, "field");
  Field field(read<std::uint32_t>(fj, "q"));
  if (fj.contains("p") && read<std::uint32_t>(fj, "p") != field.characteristic()) bad("field characteristic mismatch");
  if (fj.contains("m") && read<std::uint32_t>(fj, "m") != field.degree()) bad("field degree mismatch");
  if (fj.contains("modulus") && read<std::vector<std::uint32_t>>(fj, "modulus") != field.modulus())
    bad("field modulus differs from the canonical one");

  const auto w = read<std::size_t>(j, "rate");
  auto net = std::make_shared<const Network>(network_from_json(member(j, "network")));

  std::vector<Matrix> locals(net->node_count());
  std::vector<char> seen(net->node_count(), 0);
  for (const Json& lj : member(j, "locals")) {
    const NodeId v = net->find_node(read<std::string>(lj, "node"));
    if (net->is_sink(v)) bad("sink '" + net->node(v).name + "' carries no local kernel");
    if (seen[v]) bad("duplicate local kernel for '" + net->node(v).name + "'");
    seen[v] = 1;

    auto row_labels = read<std::vector<std::string>>(lj, "rows");
    auto col_labels = read<std::vector<std::string>>(lj, "cols");
    auto entries = read<std::vector<std::vector<Field::Element>>>(lj, "entries");
    const std::size_t nrows = v == net->source() ? w : net->in_edges(v).size();
    const std::size_t ncols = net->out_edges(v).size();
    if (row_labels.size() != nrows || col_labels.size() != ncols || entries.size() != nrows)
      bad("local kernel at '" + net->node(v).name + "' has the wrong shape");

    // Labels may come in any order; they are mapped onto In/Out slots.
    std::vector<std::size_t> row_slot(nrows), col_slot(ncols);
    std::vector<char> row_used(nrows, 0), col_used(ncols, 0);
    for (std::size_t r = 0; r < nrows; ++r) {
      std::size_t slot = nrows;
      if (v == net->source()) {
        for (std::size_t i = 0; i < w; ++i)
          if (row_labels[r] == source_row_label(i)) slot = i;
      } else {
        EdgeId d = net->find_edge(row_labels[r]);
        if (net->edge(d).head == v) slot = net->in_slot(d);
      }
      if (slot == nrows || row_used[slot]) bad("bad row label '" + row_labels[r] + "' at '" + net->node(v).name + "'");
      row_used[slot] = 1;
      row_slot[r] = slot;
    }
    for (std::size_t c = 0; c < ncols; ++c) {
      EdgeId e = net->find_edge(col_labels[c]);
      if (net->edge(e).tail != v || col_used[net->out_slot(e)])
        bad("bad column label '" + col_labels[c] + "' at '" + net->node(v).name + "'");
      col_used[net->out_slot(e)] = 1;
      col_slot[c] = net->out_slot(e);
    }
    Matrix k(nrows, ncols);
    for (std::size_t r = 0; r < nrows; ++r) {
      if (entries[r].size() != ncols) bad("ragged local kernel at '" + net->node(v).name + "'");
      for (std::size_t c = 0; c < ncols; ++c) k(row_slot[r], col_slot[c]) = entries[r][c];
    }
    locals[v] = std::move(k);
  }
  for (NodeId v = 0; v < net->node_count(); ++v)
    if (!net->is_sink(v) && !seen[v]) bad("missing local kernel for '" + net->node(v).name + "'");

  LnecCode code = LnecCode::derive(net, field, w, std::move(locals));
  for (NodeId t : net->sinks()) sink_view(code, t);
  return code;
}

LnecCode load_code(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::validation, "io_error", "cannot open '" + path + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::validation, "bad_code_json", "'" + path + "' is not valid JSON: " + e.what());
  }
  return code_from_json(doc);
}

Json bound_to_json(const Network& net, const BoundReport& report) {
  Json sinks = Json::array();
  for (const SinkBound& sb : report.per_sink)
    sinks.push_back({{"sink", net.node(sb.sink).name},
                     {"capacity", sb.capacity},
                     {"in_degree", sb.in_degree},
                     {"beta", sb.beta},
                     {"primary", sb.primary},
                     {"r_count", sb.r_count},
                     {"naive", sb.naive},
                     {"floor", sb.floor}});
  return {{"rate", report.rate},
          {"per_sink", sinks},
          {"improved", report.improved},
          {"r_bound", report.r_bound},
          {"naive", report.naive},
          {"min_prime_power", report.min_prime_power}};
}

}  // namespace lnec
