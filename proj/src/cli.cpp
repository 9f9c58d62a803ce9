#include "lnec/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>

#include "lnec/code.hpp"
#include "lnec/error.hpp"
#include "lnec/mincut.hpp"
#include "lnec/network.hpp"
#include "lnec/primaries.hpp"
#include "lnec/serialize.hpp"

namespace lnec {
namespace {

struct Options {
  std::string format = "text";
  bool force = false;
  std::string net, code, sink, method = "primaries", count_method, out;
  std::vector<std::string> edges;
  std::vector<std::size_t> beta;
  std::vector<Field::Element> recv;
  std::size_t r = 0, w = 0;
  std::optional<std::size_t> r_opt, radius;
  std::optional<std::uint64_t> seed;
  bool mds = false;
  std::uint32_t q = 0;
  std::size_t max_attempts = 50;
};

std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

bool all_scalar(const Json& a) {
  return std::all_of(a.begin(), a.end(), [](const Json& v) { return v.is_primitive(); });
}

std::string braces(const Json& a) {
  std::string s = "{";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? ", " : "") + scalar_text(a[i]);
  return s + "}";
}

void render(const Json& obj, std::ostream& out, const std::string& pad) {
  for (const auto& [key, v] : obj.items()) {
    out << pad << key << ":";
    if (v.is_primitive()) {
      out << ' ' << scalar_text(v) << '\n';
    } else if (v.is_object()) {
      out << '\n';
      render(v, out, pad + "  ");
    } else if (all_scalar(v)) {
      out << ' ' << braces(v) << '\n';
    } else {
      out << '\n';
      for (const Json& item : v) {
        if (item.is_object()) {
          out << pad << "  -\n";
          render(item, out, pad + "    ");
        } else if (item.is_array() && all_scalar(item)) {
          out << pad << "  " << braces(item) << '\n';
        } else {
          out << pad << "  " << item.dump() << '\n';
        }
      }
    }
  }
}

void emit(const Options& o, const Json& doc, std::ostream& out) {
  if (o.format == "json") out << doc.dump(2) << '\n';
  else render(doc, out, "");
}

void emit_error(std::ostream& err, const std::string& code, const char* kind, const std::string& message) {
  Json j = {{"error", {{"code", code}, {"kind", kind}, {"message", message}}}};
  err << j.dump() << '\n';
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::usage: return kExitUsage;
    case ErrorKind::validation: return kExitValidation;
    case ErrorKind::computation: return kExitComputation;
    case ErrorKind::scan_guard: return kExitScanGuard;
  }
  return kExitComputation;
}

[[noreturn]] void usage(const std::string& message) { fail(ErrorKind::usage, "usage", message); }

NodeId sink_of(const Network& net, const std::string& name) {
  NodeId t = net.find_node(name);
  if (!net.is_sink(t)) fail(ErrorKind::validation, "not_a_sink", "'" + name + "' is not a sink");
  return t;
}

ScanOptions scan(const Options& o) { return ScanOptions{o.force, 0}; }

Json cmd_mincut(const Options& o) {
  Network net = load_network(o.net);
  NodeId t = net.find_node(o.sink);
  EdgeSet rho = net.edge_set(o.edges);
  MaxFlowOptions mf;
  mf.shuffle_seed = o.seed;
  EdgeSet cut = primary_min_cut(net, rho, t, mf);
  return {{"sink", o.sink},
          {"edges", edge_set_to_json(net, rho)},
          {"capacity", mincut_edges_to_node(net, rho, t)},
          {"primary_cut", edge_set_to_json(net, cut)}};
}

Json cmd_primary(const Options& o) {
  Network net = load_network(o.net);
  PrimaryFamily fam = enumerate_primary(net, net.find_node(o.sink), o.r);
  Json members = Json::array();
  for (const EdgeSet& m : fam.members) members.push_back(edge_set_to_json(net, m));
  return {{"sink", o.sink},
          {"r", o.r},
          {"count", fam.members.size()},
          {"candidates_examined", fam.candidates_examined},
          {"members", members}};
}

Json cmd_partition(const Options& o) {
  Network net = load_network(o.net);
  EdgeSet rho = net.edge_set(o.edges);
  ReachPartition part = partition_reachable(net, net.find_node(o.sink), rho);
  return {{"sink", o.sink},
          {"edges", edge_set_to_json(net, rho)},
          {"reaching", edge_set_to_json(net, part.reaching)},
          {"cut_off", edge_set_to_json(net, part.cut_off)}};
}

void check_beta_choice(const Options& o) {
  if (o.mds && !o.beta.empty()) usage("--beta and --mds are mutually exclusive");
  if (!o.mds && o.beta.empty()) usage("one of --beta or --mds is required");
}

Json cmd_bound(const Options& o) {
  check_beta_choice(o);
  Network net = load_network(o.net);
  BoundReport report = o.mds ? mds_field_size_bound(net, o.w, scan(o)) : field_size_bound(net, o.w, o.beta, scan(o));
  return bound_to_json(net, report);
}

Json sink_summary(const LnecCode& code) {
  const Network& net = code.network();
  Json sinks = Json::array();
  for (NodeId t : net.sinks()) {
    SinkView view = sink_view(code, t);
    const std::size_t c = source_capacity(net, t);
    Json s = {{"sink", net.node(t).name}, {"capacity", c}, {"decodable", view.decodable()}};
    if (view.decodable()) {
      s["min_distance"] = min_distance(view, DistanceMethod::primaries);
      s["singleton"] = c - code.rate() + 1;
    }
    sinks.push_back(s);
  }
  return sinks;
}

Json cmd_construct(const Options& o) {
  check_beta_choice(o);
  auto net = std::make_shared<const Network>(load_network(o.net));
  std::vector<std::size_t> beta = o.beta;
  if (o.mds) {
    if (o.w == 0) fail(ErrorKind::validation, "rate_zero", "rate w must be positive");
    for (NodeId t : net->sinks()) {
      std::size_t c = source_capacity(*net, t);
      if (o.w > c)
        fail(ErrorKind::validation, "rate_exceeds_capacity",
             "rate " + std::to_string(o.w) + " exceeds C_t = " + std::to_string(c) + " at sink '" +
                 net->node(t).name + "'");
      beta.push_back(c - o.w);
    }
  }
  Field field(o.q);
  const std::uint64_t seed = o.seed.value_or(1);
  Construction c = construct(net, o.w, beta, field, seed, o.max_attempts);

  Json doc = {{"seed", seed},
              {"attempts", c.attempts},
              {"beta", beta},
              {"sinks", sink_summary(c.code)},
              {"mds", is_mds(c.code)},
              {"code", code_to_json(c.code)}};
  if (!o.out.empty()) {
    std::ofstream f(o.out);
    if (!f) fail(ErrorKind::validation, "io_error", "cannot write '" + o.out + "'");
    f << doc.dump(2) << '\n';
    doc.erase("code");
    doc["written"] = o.out;
  }
  return doc;
}

DistanceMethod method_of(const std::string& name) {
  return name == "exhaustive" ? DistanceMethod::exhaustive : DistanceMethod::primaries;
}

Json cmd_mindist(const Options& o) {
  LnecCode code = load_code(o.code);
  const Network& net = code.network();
  NodeId t = sink_of(net, o.sink);
  SinkView view = sink_view(code, t);
  const std::size_t c = source_capacity(net, t);
  Json doc = {{"sink", o.sink}, {"method", o.method}};
  std::size_t d = 0;
  if (o.method == "both") {
    std::size_t a = min_distance(view, DistanceMethod::exhaustive);
    d = min_distance(view, DistanceMethod::primaries);
    if (a != d)
      fail(ErrorKind::computation, "method_mismatch",
           "exhaustive gives " + std::to_string(a) + ", primaries gives " + std::to_string(d));
  } else {
    d = min_distance(view, method_of(o.method));
  }
  doc["min_distance"] = d;
  doc["capacity"] = c;
  doc["singleton"] = c - code.rate() + 1;
  return doc;
}

Json cmd_decode(const Options& o) {
  LnecCode code = load_code(o.code);
  NodeId t = sink_of(code.network(), o.sink);
  SinkView view = sink_view(code, t);
  std::size_t radius = 0;
  if (o.radius) {
    radius = *o.radius;
  } else {
    radius = (min_distance(view, DistanceMethod::primaries) - 1) / 2;
  }
  Decoder::Result res = Decoder(view, radius).decode(o.recv);
  return {{"sink", o.sink}, {"radius", radius}, {"message", res.message}, {"error_level", res.level}};
}

Json cmd_verify(const Options& o) {
  LnecCode code = load_code(o.code);
  const Network& net = code.network();
  const Field& f = code.field();
  std::mt19937_64 rng(o.seed.value_or(1));
  std::uniform_int_distribution<Field::Element> symbol(0, f.order() - 1);

  bool ok = true;
  Json sinks = Json::array();
  for (NodeId t : net.sinks()) {
    const std::size_t c = source_capacity(net, t);
    Json s = {{"sink", net.node(t).name}};
    if (c < code.rate()) {
      s["skipped"] = "capacity below rate";
      sinks.push_back(s);
      continue;
    }
    const std::size_t r = o.r_opt.value_or(c - code.rate());
    Theorem3Report rep = verify_theorem3(code, t, r, o.force);
    s["theorem3"] = {{"r", r},
                     {"primary", rep.primary},
                     {"hamming", rep.hamming},
                     {"enhanced", rep.enhanced},
                     {"containment", rep.containment},
                     {"subsets", rep.subsets_checked},
                     {"holds", rep.holds()}};

    SinkView view = sink_view(code, t);
    constexpr int kTriples = 8;
    bool metric = true;
    const std::size_t n = view.inputs().size();
    for (int i = 0; i < kTriples; ++i) {
      Vector a(n), b(n), cc(n);
      for (std::size_t j = 0; j < n; ++j) {
        a[j] = symbol(rng);
        b[j] = symbol(rng);
        cc[j] = symbol(rng);
      }
      const std::size_t ab = distance(view, a, b), ba = distance(view, b, a);
      const std::size_t bc = distance(view, b, cc), ac = distance(view, a, cc);
      metric = metric && distance(view, a, a) == 0 && (ab == 0) == (a == b) && ab == ba && ac <= ab + bc;
    }
    s["metric"] = {{"triples", kTriples}, {"holds", metric}};

    bool sums = true;
    std::size_t pairs = 0;
    for (EdgeId e = 0; e < net.edge_count(); ++e)
      for (EdgeId e_hat : net.in_edges(t)) {
        sums = sums && verify_path_sums(code, e, e_hat);
        ++pairs;
      }
    s["path_sums"] = {{"pairs", pairs}, {"holds", sums}};
    ok = ok && rep.holds() && metric && sums;
    sinks.push_back(s);
  }
  Json doc = {{"sinks", sinks}, {"ok", ok}};
  return doc;
}

Json cmd_count(const Options& o) {
  Network net = load_network(o.net);
  NodeId t = net.find_node(o.sink);
  std::string method = o.count_method.empty() ? (o.r <= 1 ? "classes" : "exhaustive") : o.count_method;
  Json doc = {{"sink", o.sink}, {"r", o.r}, {"method", method}};
  if (method == "both") {
    auto a = count_correctable(net, t, o.r, CountMethod::exhaustive, scan(o));
    auto b = count_correctable(net, t, o.r, CountMethod::classes, scan(o));
    if (a != b)
      fail(ErrorKind::computation, "method_mismatch",
           "exhaustive gives " + std::to_string(a) + ", classes gives " + std::to_string(b));
    doc["count"] = a;
  } else {
    doc["count"] = count_correctable(net, t, o.r,
                                     method == "classes" ? CountMethod::classes : CountMethod::exhaustive, scan(o));
  }
  return doc;
}

Json cmd_classes(const Options& o) {
  Network net = load_network(o.net);
  Json classes = Json::array();
  for (const EquivalenceClass& cls : classify_by_primary(net, net.find_node(o.sink)))
    classes.push_back({{"key", edge_set_to_json(net, cls.key)}, {"members", edge_set_to_json(net, cls.members)}});
  return {{"sink", o.sink}, {"count", classes.size()}, {"classes", classes}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Linear network error correction: cuts, bounds, code construction and decoding.", "lnec"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--force-scan", o.force, "Lift the size guard on exhaustive scans");

  auto sub = [&](const char* name, const char* help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };
  auto net_opt = [&](CLI::App* s) { s->add_option("--net", o.net, "Network description file")->required(); };
  auto code_opt = [&](CLI::App* s) { s->add_option("--code", o.code, "Code JSON file")->required(); };
  auto sink_opt = [&](CLI::App* s) { s->add_option("--sink", o.sink, "Sink node")->required(); };
  auto edges_opt = [&](CLI::App* s) {
    s->add_option("--edges", o.edges, "Comma-separated edge names")->required()->delimiter(',');
  };
  auto beta_opts = [&](CLI::App* s) {
    s->add_option("--w", o.w, "Rate")->required();
    s->add_option("--beta", o.beta, "Per-sink beta, comma-separated in sink order")->delimiter(',');
    s->add_flag("--mds", o.mds, "Use beta_t = C_t - w");
  };

  CLI::App* mincut = sub("mincut", "Minimum cut capacity and primary minimum cut separating a node from edges");
  net_opt(mincut);
  sink_opt(mincut);
  edges_opt(mincut);
  mincut->add_option("--seed", o.seed, "Shuffle augmentation order");

  CLI::App* primary = sub("primary", "List the size-r primary edge subsets");
  net_opt(primary);
  sink_opt(primary);
  primary->add_option("--r", o.r, "Subset size")->required();

  CLI::App* partition = sub("partition", "Edges still reaching the sink once the given edges are removed");
  net_opt(partition);
  sink_opt(partition);
  edges_opt(partition);

  CLI::App* bound = sub("bound", "Field-size bounds");
  net_opt(bound);
  beta_opts(bound);

  CLI::App* cons = sub("construct", "Randomized code construction");
  net_opt(cons);
  beta_opts(cons);
  cons->add_option("--field", o.q, "Field order q")->required();
  cons->add_option("--seed", o.seed, "Random seed (default 1)");
  cons->add_option("--max-attempts", o.max_attempts, "Attempt limit")->check(CLI::PositiveNumber);
  cons->add_option("--out", o.out, "Write the code document here");

  CLI::App* mindist = sub("mindist", "Minimum distance at a sink");
  code_opt(mindist);
  sink_opt(mindist);
  mindist->add_option("--method", o.method)->check(CLI::IsMember({"exhaustive", "primaries", "both"}));

  CLI::App* dec = sub("decode", "Minimum-distance decoding of a received word");
  code_opt(dec);
  sink_opt(dec);
  dec->add_option("--recv", o.recv, "Received symbols in In(t) order")->required()->delimiter(',');
  dec->add_option("--radius", o.radius, "Error level searched (default floor((d-1)/2))");

  CLI::App* ver = sub("verify", "Check cut-family equivalence, metric axioms and path sums on a code");
  code_opt(ver);
  ver->add_option("--r", o.r_opt, "Level checked (default C_t - w per sink)");
  ver->add_option("--seed", o.seed, "Seed for sampled metric checks");

  CLI::App* count = sub("count", "Count edge subsets with mincut <= r");
  net_opt(count);
  sink_opt(count);
  count->add_option("--r", o.r)->required();
  count->add_option("--method", o.count_method)->check(CLI::IsMember({"exhaustive", "classes", "both"}));

  CLI::App* classes = sub("classes", "Group edges by their single-edge primary minimum cut");
  net_opt(classes);
  sink_opt(classes);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    emit_error(err, "usage", "usage", e.what());
    return kExitUsage;
  }

  try {
    Json doc;
    if (app.got_subcommand(mincut)) doc = cmd_mincut(o);
    else if (app.got_subcommand(primary)) doc = cmd_primary(o);
    else if (app.got_subcommand(partition)) doc = cmd_partition(o);
    else if (app.got_subcommand(bound)) doc = cmd_bound(o);
    else if (app.got_subcommand(cons)) doc = cmd_construct(o);
    else if (app.got_subcommand(mindist)) doc = cmd_mindist(o);
    else if (app.got_subcommand(dec)) doc = cmd_decode(o);
    else if (app.got_subcommand(ver)) doc = cmd_verify(o);
    else if (app.got_subcommand(count)) doc = cmd_count(o);
    else doc = cmd_classes(o);
    emit(o, doc, out);
    if (doc.contains("ok") && !doc["ok"].get<bool>()) {
      emit_error(err, "verification_failed", "computation", "at least one check failed");
      return kExitComputation;
    }
    return kExitOk;
  } catch (const Error& e) {
    emit_error(err, e.code(), to_string(e.kind()), e.what());
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    emit_error(err, "internal_error", "computation", e.what());
    return kExitComputation;
  }
}

}  // namespace lnec
