#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lnec/network.hpp"

namespace lnec::detail {

// Advances idx (strictly increasing, values < n) to the next combination in
// lexicographic order. Returns false after the last one.
inline bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

inline std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  return idx;
}

inline EdgeSet pick(std::span<const EdgeId> pool, const std::vector<std::size_t>& idx) {
  std::vector<EdgeId> ids;
  ids.reserve(idx.size());
  for (std::size_t i : idx) ids.push_back(pool[i]);
  return EdgeSet(std::move(ids));
}

// Calls fn(EdgeSet) for every size-k subset of pool in lexicographic order
// until fn returns true. Returns whether it stopped early.
template <class Fn>
bool for_each_subset(std::span<const EdgeId> pool, std::size_t k, Fn&& fn) {
  if (k > pool.size()) return false;
  auto idx = first_combination(k);
  do {
    if (fn(pick(pool, idx))) return true;
  } while (k > 0 && next_combination(idx, pool.size()));
  return false;
}

}  // namespace lnec::detail
