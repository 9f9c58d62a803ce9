#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lnec/network.hpp"

namespace lnec {

// A_t(r): every size-r edge subset that is its own primary minimum cut for t.
struct PrimaryFamily {
  NodeId sink = 0;
  std::size_t r = 0;
  std::vector<EdgeSet> members;  // in discovery order
  std::size_t candidates_examined = 0;
  std::size_t productive_iterations = 0;
};

// Enumerates A_t(r) by walking the size-r subsets of E_t in lexicographic
// ancestral order, skipping every candidate already separated from t by an
// accepted member. Requires r <= C_t.
PrimaryFamily enumerate_primary(const Network& net, NodeId t, std::size_t r);

struct ScanOptions {
  bool force = false;       // lift the subset-count guard
  unsigned threads = 0;     // 0: LNEC_THREADS or hardware concurrency
};

// Size guard for exhaustive subset scans over E.
inline constexpr std::size_t kMaxExhaustiveEdges = 24;

unsigned scan_threads(const ScanOptions& options);

// R_t(r) = { rho : |rho| = mincut(rho, t) = r }, by brute force over all
// size-r subsets of E. r must be in [1, C_t].
std::vector<EdgeSet> enumerate_R(const Network& net, NodeId t, std::size_t r,
                                 const ScanOptions& options = {});

enum class CountMethod { exhaustive, classes };

// Number of nonempty rho subsets of E with mincut(rho, t) <= r. The class
// method covers r <= 1 only.
std::uint64_t count_correctable(const Network& net, NodeId t, std::size_t r, CountMethod method,
                                const ScanOptions& options = {});

struct EquivalenceClass {
  EdgeSet key;      // common primary minimum cut; empty for edges not reaching t
  EdgeSet members;
};

// Groups every single edge by the primary minimum cut separating t from it.
// Classes are ordered by their first member.
std::vector<EquivalenceClass> classify_by_primary(const Network& net, NodeId t);

struct SinkBound {
  NodeId sink = 0;
  std::size_t capacity = 0;   // C_t
  std::size_t in_degree = 0;  // |In(t)|
  std::size_t beta = 0;
  std::uint64_t primary = 0;  // |A_t(beta)|
  std::uint64_t r_count = 0;  // |R_t(beta)|
  std::uint64_t naive = 0;    // binom(|E|, beta)
  std::uint64_t floor = 0;    // binom(|In(t)|, beta)
};

struct BoundReport {
  std::size_t rate = 0;
  std::vector<SinkBound> per_sink;
  std::uint64_t improved = 0;
  std::uint64_t r_bound = 0;
  std::uint64_t naive = 0;
  std::uint64_t min_prime_power = 2;
};

// beta is indexed like net.sinks(). Each beta_t must satisfy
// 0 <= beta_t <= C_t - w.
BoundReport field_size_bound(const Network& net, std::size_t w, std::span<const std::size_t> beta,
                             const ScanOptions& options = {});

// field_size_bound with beta_t = C_t - w.
BoundReport mds_field_size_bound(const Network& net, std::size_t w, const ScanOptions& options = {});

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);
bool is_prime_power(std::uint64_t q);
std::uint64_t least_prime_power_above(std::uint64_t bound);

}  // namespace lnec
