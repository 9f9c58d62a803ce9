#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace oracle {
namespace {

template <class Fn>
bool any_subset(std::size_t n, std::size_t k, Fn&& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return false;
  for (;;) {
    std::vector<EdgeId> ids;
    for (std::size_t i : idx) ids.push_back(static_cast<EdgeId>(i));
    if (fn(EdgeSet(ids))) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

Matrix rows_of(const Matrix& g, const EdgeSet& rho) {
  Matrix out(0, g.cols());
  for (EdgeId e : rho) out.append_row(g.row(e));
  return out;
}

std::vector<lnec::Vector> span_of(const Field& f, const Matrix& m) {
  std::vector<lnec::Vector> out;
  std::vector<Field::Element> coef(m.rows(), 0);
  for (;;) {
    out.push_back(lnec::row_times(f, coef, m));
    std::size_t i = 0;
    while (i < coef.size() && coef[i] == f.order() - 1) coef[i++] = 0;
    if (i == coef.size()) break;
    ++coef[i];
  }
  return out;
}

}  // namespace

EdgeSet from_mask(std::uint64_t mask, std::size_t n) {
  std::vector<EdgeId> ids;
  for (std::size_t i = 0; i < n; ++i)
    if (mask >> i & 1) ids.push_back(static_cast<EdgeId>(i));
  return EdgeSet(ids);
}

bool reaches(const Network& net, EdgeId e, NodeId t, const std::vector<char>& removed) {
  if (removed[e]) return false;
  std::vector<char> seen(net.node_count(), 0);
  std::vector<NodeId> work{net.edge(e).head};
  while (!work.empty()) {
    NodeId v = work.back();
    work.pop_back();
    if (v == t) return true;
    if (seen[v]) continue;
    seen[v] = 1;
    for (EdgeId d : net.out_edges(v))
      if (!removed[d]) work.push_back(net.edge(d).head);
  }
  return false;
}

bool separates(const Network& net, const EdgeSet& cut, const EdgeSet& rho, NodeId t) {
  std::vector<char> removed(net.edge_count(), 0);
  for (EdgeId e : cut) removed[e] = 1;
  return std::none_of(rho.begin(), rho.end(), [&](EdgeId e) { return reaches(net, e, t, removed); });
}

EdgeSet reachable(const Network& net, NodeId t) { return still_reaching(net, t, {}); }

EdgeSet still_reaching(const Network& net, NodeId t, const EdgeSet& removed_set) {
  std::vector<char> removed(net.edge_count(), 0);
  for (EdgeId e : removed_set) removed[e] = 1;
  std::vector<EdgeId> ids;
  for (EdgeId e = 0; e < net.edge_count(); ++e)
    if (reaches(net, e, t, removed)) ids.push_back(e);
  return EdgeSet(ids);
}

std::size_t mincut(const Network& net, const EdgeSet& rho, NodeId t) {
  for (std::size_t k = 0;; ++k)
    if (any_subset(net.edge_count(), k, [&](const EdgeSet& c) { return separates(net, c, rho, t); })) return k;
}

std::vector<EdgeSet> minimum_cuts(const Network& net, const EdgeSet& rho, NodeId t) {
  const std::size_t k = mincut(net, rho, t);
  std::vector<EdgeSet> cuts;
  any_subset(net.edge_count(), k, [&](const EdgeSet& c) {
    if (separates(net, c, rho, t)) cuts.push_back(c);
    return false;
  });
  return cuts;
}

EdgeSet primary_cut(const Network& net, const EdgeSet& rho, NodeId t) {
  std::vector<EdgeSet> cuts = minimum_cuts(net, rho, t);
  std::vector<EdgeSet> primary;
  for (const EdgeSet& eta : cuts)
    if (std::all_of(cuts.begin(), cuts.end(), [&](const EdgeSet& c) { return separates(net, eta, c, t); }))
      primary.push_back(eta);
  if (primary.size() != 1) throw std::logic_error("primary cut is not unique");
  return primary.front();
}

std::vector<EdgeSet> primary_family(const Network& net, NodeId t, std::size_t r) {
  std::vector<EdgeSet> out;
  if (r == 0) return out;
  any_subset(net.edge_count(), r, [&](const EdgeSet& rho) {
    if (mincut(net, rho, t) == r && primary_cut(net, rho, t) == rho) out.push_back(rho);
    return false;
  });
  return out;
}

std::size_t capacity(const Network& net, NodeId t) {
  if (t == net.source()) return 0;
  auto out = net.out_edges(net.source());
  return mincut(net, EdgeSet(std::vector<EdgeId>(out.begin(), out.end())), t);
}

Field::Element determinant(const Field& f, const Matrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  Field::Element det = 0;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    Field::Element term = 1;
    for (std::size_t i = 0; i < n; ++i) term = f.mul(term, a(i, perm[i]));
    det = inversions % 2 ? f.sub(det, term) : f.add(det, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

std::size_t rank_by_minors(const Field& f, const Matrix& m) {
  for (std::size_t k = std::min(m.rows(), m.cols()); k > 0; --k) {
    bool found = any_subset(m.rows(), k, [&](const EdgeSet& rows) {
      return any_subset(m.cols(), k, [&](const EdgeSet& cols) {
        Matrix sq(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sq(i, j) = m(rows[i], cols[j]);
        return determinant(f, sq) != 0;
      });
    });
    if (found) return k;
  }
  return 0;
}

bool meets_trivially(const Field& f, const Matrix& a, const Matrix& b) {
  auto in_b = span_of(f, b);
  std::set<lnec::Vector> members(in_b.begin(), in_b.end());
  for (const auto& v : span_of(f, a)) {
    bool zero = std::all_of(v.begin(), v.end(), [](Field::Element x) { return x == 0; });
    if (!zero && members.count(v)) return false;
  }
  return true;
}

std::vector<lnec::Vector> plain_kernels(const lnec::LnecCode& code) {
  const Network& net = code.network();
  const Field& f = code.field();
  std::vector<lnec::Vector> memo(net.edge_count());
  std::vector<char> done(net.edge_count(), 0);
  std::function<const lnec::Vector&(EdgeId)> kernel = [&](EdgeId e) -> const lnec::Vector& {
    if (done[e]) return memo[e];
    const NodeId v = net.edge(e).tail;
    lnec::Vector k(code.rate(), 0);
    if (v == net.source()) {
      for (std::size_t i = 0; i < code.rate(); ++i) k[i] = code.local(v)(i, net.out_slot(e));
    } else {
      for (EdgeId d : net.in_edges(v)) {
        const lnec::Vector& kd = kernel(d);
        Field::Element c = code.coefficient(d, e);
        for (std::size_t i = 0; i < k.size(); ++i) k[i] = f.add(k[i], f.mul(c, kd[i]));
      }
    }
    memo[e] = std::move(k);
    done[e] = 1;
    return memo[e];
  };
  for (EdgeId e = 0; e < net.edge_count(); ++e) kernel(e);
  return memo;
}

std::size_t distance(const lnec::SinkView& view, const lnec::Vector& y, const lnec::Vector& y2) {
  const Field& f = view.field();
  const std::size_t n = view.network().edge_count();
  Matrix diff(1, y.size());
  for (std::size_t j = 0; j < y.size(); ++j) diff(0, j) = f.sub(y[j], y2[j]);
  std::size_t best = n + 1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::size_t size = static_cast<std::size_t>(std::popcount(mask));
    if (size >= best) continue;
    Matrix g = rows_of(view.error_part(), from_mask(mask, n));
    if (lnec::rank(f, g) == lnec::rank(f, g.stacked(diff))) best = size;
  }
  return best;
}

std::size_t min_distance(const lnec::SinkView& view) {
  const Field& f = view.field();
  const std::size_t n = view.network().edge_count();
  const Matrix& F = view.message_part();
  const std::size_t rf = lnec::rank(f, F);
  std::size_t best = n + 1;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::size_t size = static_cast<std::size_t>(std::popcount(mask));
    if (size >= best) continue;
    Matrix g = rows_of(view.error_part(), from_mask(mask, n));
    if (rf + lnec::rank(f, g) != lnec::rank(f, F.stacked(g))) best = size;
  }
  return best;
}

}  // namespace oracle
