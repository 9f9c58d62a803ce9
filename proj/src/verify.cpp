#include <bit>
#include <string>

#include "lnec/code.hpp"
#include "lnec/error.hpp"
#include "lnec/mincut.hpp"

namespace lnec {

Theorem3Report verify_theorem3(const LnecCode& code, NodeId t, std::size_t r, bool force) {
  const Network& g = code.network();
  SinkView view = sink_view(code, t);
  const std::size_t capacity = source_capacity(g, t);
  if (capacity < code.rate() || r > capacity - code.rate())
    fail(ErrorKind::validation, "r_out_of_range",
         "r = " + std::to_string(r) + " is outside [0, C_t - w] at sink '" + g.node(t).name + "'");
  const std::size_t n = g.edge_count();
  if (n >= 32 || (!force && n > kMaxTheorem3Edges))
    fail(ErrorKind::scan_guard, "scan_guard",
         "exhaustive scan over 2^" + std::to_string(n) + " edge subsets refused without force");

  const Field& f = code.field();
  const Matrix& F = view.message_part();
  auto clear = [&](const EdgeSet& rho) { return trivial_intersection(f, F, view.error_space(rho)); };

  Theorem3Report report;
  report.r = r;
  if (r > 0)
    for (const EdgeSet& rho : enumerate_primary(g, t, r).members) report.primary = report.primary && clear(rho);

  std::vector<EdgeId> ids;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    ids.clear();
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) ids.push_back(static_cast<EdgeId>(i));
    EdgeSet rho(ids);
    EdgeSet key = primary_min_cut(g, rho, t);
    const bool in_h = static_cast<std::size_t>(std::popcount(mask)) <= r;
    const bool in_e = key.size() <= r;
    if (in_h || in_e) {
      bool ok = clear(rho);
      if (in_h) report.hamming = report.hamming && ok;
      if (in_e) report.enhanced = report.enhanced && ok;
    }
    if (!rowspace_contains(f, view.error_space(key), view.error_space(rho))) report.containment = false;
    ++report.subsets_checked;
  }
  return report;
}

bool verify_path_sums(const LnecCode& code, EdgeId e, EdgeId e_hat) {
  const Network& g = code.network();
  g.check_edges(EdgeSet{e, e_hat});
  const Field& f = code.field();

  // Edges from which e_hat can be reached; the search only enters these.
  std::vector<char> leads(g.edge_count(), 0);
  leads[e_hat] = 1;
  for (EdgeId d = e_hat; d-- > 0;)
    for (EdgeId next : g.out_edges(g.edge(d).head))
      if (leads[next]) {
        leads[d] = 1;
        break;
      }

  Field::Element sum = 0;
  std::size_t paths = 0;
  struct Frame {
    EdgeId edge;
    Field::Element gain;
  };
  std::vector<Frame> stack;
  if (leads[e]) stack.push_back({e, 1});
  while (!stack.empty()) {
    Frame top = stack.back();
    stack.pop_back();
    if (top.edge == e_hat) {
      if (++paths > kMaxPaths)
        fail(ErrorKind::scan_guard, "scan_guard", "more than " + std::to_string(kMaxPaths) + " paths to enumerate");
      sum = f.add(sum, top.gain);
      continue;
    }
    for (EdgeId next : g.out_edges(g.edge(top.edge).head))
      if (leads[next]) stack.push_back({next, f.mul(top.gain, code.coefficient(top.edge, next))});
  }
  return sum == code.kernels()(code.error_row(e), e_hat);
}

}  // namespace lnec
