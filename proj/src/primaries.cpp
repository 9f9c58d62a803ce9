#include "lnec/primaries.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>

#include "lnec/error.hpp"
#include "lnec/mincut.hpp"
#include "combinations.hpp"

namespace lnec {
namespace {

using detail::first_combination;
using detail::next_combination;
using detail::pick;

void check_rank_range(const Network& net, NodeId t, std::size_t r, std::size_t capacity) {
  if (r > capacity)
    fail(ErrorKind::validation, "r_out_of_range",
         "r = " + std::to_string(r) + " exceeds C_t = " + std::to_string(capacity) + " for sink '" +
             net.node(t).name + "'");
}

}  // namespace

PrimaryFamily enumerate_primary(const Network& net, NodeId t, std::size_t r) {
  net.check_node(t);
  check_rank_range(net, t, r, source_capacity(net, t));

  PrimaryFamily family;
  family.sink = t;
  family.r = r;
  if (r == 0) return family;

  const EdgeSet reach = reachable_edges(net, t);
  if (reach.size() < r) return family;

  // The candidate pool B is implicit: a candidate counts as removed once it
  // lies inside the cut-off region E^c_{t,rho} of an accepted member rho.
  std::vector<std::vector<char>> cut_off_regions;
  auto separated = [&](const EdgeSet& eta) {
    for (const auto& region : cut_off_regions) {
      bool inside = std::all_of(eta.begin(), eta.end(), [&](EdgeId e) { return region[e] != 0; });
      if (inside) return true;
    }
    return false;
  };

  auto idx = first_combination(r);
  do {
    EdgeSet eta = pick(reach.ids(), idx);
    if (separated(eta)) continue;
    ++family.candidates_examined;
    EdgeSet rho = primary_min_cut(net, eta, t);
    if (rho.size() < r) continue;
    if (std::find(family.members.begin(), family.members.end(), rho) != family.members.end())
      throw std::logic_error("primary edge subset discovered twice");
    ++family.productive_iterations;

    std::vector<char> region(net.edge_count(), 0);
    for (EdgeId e : partition_reachable(net, t, rho).cut_off) region[e] = 1;
    cut_off_regions.push_back(std::move(region));
    family.members.push_back(std::move(rho));
  } while (next_combination(idx, reach.size()));

  if (family.productive_iterations != family.members.size())
    throw std::logic_error("productive iteration count differs from family size");
  return family;
}

unsigned scan_threads(const ScanOptions& options) {
  unsigned n = options.threads;
  if (n == 0) {
    if (const char* env = std::getenv("LNEC_THREADS")) n = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
  }
  if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
  return n;
}

std::vector<EdgeSet> enumerate_R(const Network& net, NodeId t, std::size_t r, const ScanOptions& options) {
  net.check_node(t);
  if (r == 0) fail(ErrorKind::validation, "r_out_of_range", "R_t(r) is only defined for r >= 1");
  check_rank_range(net, t, r, source_capacity(net, t));
  const std::size_t n = net.edge_count();
  if (!options.force && n > kMaxExhaustiveEdges)
    fail(ErrorKind::scan_guard, "scan_guard",
         "exhaustive scan over " + std::to_string(n) + " edges refused without force");

  std::vector<EdgeId> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<EdgeId>(i);

  std::vector<EdgeSet> out;
  if (n < r) return out;
  auto idx = first_combination(r);
  do {
    EdgeSet rho = pick(all, idx);
    if (mincut_edges_to_node(net, rho, t) == r) out.push_back(std::move(rho));
  } while (next_combination(idx, n));
  return out;
}

std::vector<EquivalenceClass> classify_by_primary(const Network& net, NodeId t) {
  net.check_node(t);
  std::map<EdgeSet, std::vector<EdgeId>> groups;
  for (EdgeId e = 0; e < net.edge_count(); ++e) groups[primary_min_cut(net, EdgeSet{e}, t)].push_back(e);

  std::vector<EquivalenceClass> classes;
  for (auto& [key, members] : groups) classes.push_back(EquivalenceClass{key, EdgeSet(std::move(members))});
  std::sort(classes.begin(), classes.end(),
            [](const EquivalenceClass& a, const EquivalenceClass& b) { return a.members[0] < b.members[0]; });
  return classes;
}

std::uint64_t count_correctable(const Network& net, NodeId t, std::size_t r, CountMethod method,
                                const ScanOptions& options) {
  net.check_node(t);
  check_rank_range(net, t, r, source_capacity(net, t));
  const std::size_t n = net.edge_count();

  if (method == CountMethod::classes) {
    if (r > 1)
      fail(ErrorKind::validation, "unsupported_method", "the class formula only covers r <= 1");
    if (n >= 64) fail(ErrorKind::scan_guard, "scan_guard", "count overflows 64 bits");
    const std::uint64_t unreachable = n - reachable_edges(net, t).size();
    const std::uint64_t free_part = std::uint64_t{1} << unreachable;
    if (r == 0) return free_part - 1;
    // For r = 1 a subset qualifies iff its part inside E_t lies within one
    // class with a single-edge key (the class is exactly that key's cut-off
    // region); the part outside E_t is arbitrary.
    std::uint64_t inside = 1;
    for (const auto& cls : classify_by_primary(net, t))
      if (!cls.key.empty()) inside += (std::uint64_t{1} << cls.members.size()) - 1;
    return free_part * inside - 1;
  }

  if (n >= 64 || (!options.force && n > kMaxExhaustiveEdges))
    fail(ErrorKind::scan_guard, "scan_guard",
         "exhaustive scan over 2^" + std::to_string(n) + " subsets refused without force");

  const std::uint64_t total = std::uint64_t{1} << n;
  const unsigned threads = std::max(1u, std::min<unsigned>(scan_threads(options), 64));
  std::vector<std::uint64_t> partial(threads, 0);
  auto worker = [&](unsigned k) {
    std::vector<EdgeId> ids;
    for (std::uint64_t mask = 1 + k; mask < total; mask += threads) {
      ids.clear();
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) ids.push_back(static_cast<EdgeId>(i));
      if (mincut_edges_to_node(net, EdgeSet(ids), t) <= r) ++partial[k];
    }
  };
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < threads; ++k) pool.emplace_back(worker, k);
  worker(0);
  for (auto& th : pool) th.join();

  std::uint64_t sum = 0;
  for (auto c : partial) sum += c;
  return sum;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

bool is_prime_power(std::uint64_t q) {
  if (q < 2) return false;
  for (std::uint64_t p = 2; p * p <= q; ++p) {
    if (q % p == 0) {
      while (q % p == 0) q /= p;
      return q == 1;
    }
  }
  return true;
}

std::uint64_t least_prime_power_above(std::uint64_t bound) {
  std::uint64_t q = bound + 1;
  while (!is_prime_power(q)) ++q;
  return q;
}

BoundReport field_size_bound(const Network& net, std::size_t w, std::span<const std::size_t> beta,
                             const ScanOptions& options) {
  if (w == 0) fail(ErrorKind::validation, "rate_zero", "rate w must be positive");
  if (beta.size() != net.sinks().size())
    fail(ErrorKind::validation, "beta_count",
         "expected " + std::to_string(net.sinks().size()) + " beta values, got " + std::to_string(beta.size()));

  BoundReport report;
  report.rate = w;
  for (std::size_t i = 0; i < net.sinks().size(); ++i) {
    SinkBound sb;
    sb.sink = net.sinks()[i];
    sb.capacity = source_capacity(net, sb.sink);
    sb.in_degree = net.in_edges(sb.sink).size();
    sb.beta = beta[i];
    const auto& name = net.node(sb.sink).name;
    if (w > sb.capacity)
      fail(ErrorKind::validation, "rate_exceeds_capacity",
           "rate " + std::to_string(w) + " exceeds C_t = " + std::to_string(sb.capacity) + " at sink '" + name + "'");
    if (sb.beta > sb.capacity - w)
      fail(ErrorKind::validation, "beta_out_of_range",
           "beta = " + std::to_string(sb.beta) + " exceeds C_t - w = " + std::to_string(sb.capacity - w) +
               " at sink '" + name + "'");
    // beta_t = 0 imposes no error condition; every family is empty.
    if (sb.beta > 0) {
      sb.primary = enumerate_primary(net, sb.sink, sb.beta).members.size();
      sb.r_count = enumerate_R(net, sb.sink, sb.beta, options).size();
      sb.naive = binomial(net.edge_count(), sb.beta);
      sb.floor = binomial(sb.in_degree, sb.beta);
    }
    report.improved += sb.primary;
    report.r_bound += sb.r_count;
    report.naive += sb.naive;
    report.per_sink.push_back(sb);
  }
  report.min_prime_power = least_prime_power_above(report.improved);
  return report;
}

BoundReport mds_field_size_bound(const Network& net, std::size_t w, const ScanOptions& options) {
  if (w == 0) fail(ErrorKind::validation, "rate_zero", "rate w must be positive");
  std::vector<std::size_t> beta;
  for (NodeId t : net.sinks()) {
    std::size_t c = source_capacity(net, t);
    if (w > c)
      fail(ErrorKind::validation, "rate_exceeds_capacity",
           "rate " + std::to_string(w) + " exceeds C_t = " + std::to_string(c) + " at sink '" +
               net.node(t).name + "'");
    beta.push_back(c - w);
  }
  return field_size_bound(net, w, beta, options);
}

}  // namespace lnec
