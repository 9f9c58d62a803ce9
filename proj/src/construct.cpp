#include <random>
#include <string>

#include "lnec/code.hpp"
#include "lnec/error.hpp"
#include "lnec/mincut.hpp"

namespace lnec {

Construction construct(std::shared_ptr<const Network> net, std::size_t w, std::span<const std::size_t> beta,
                       const Field& field, std::uint64_t seed, std::size_t max_attempts) {
  if (!net) throw std::invalid_argument("null network");
  const Network& g = *net;
  if (w == 0) fail(ErrorKind::validation, "rate_zero", "rate w must be positive");
  if (beta.size() != g.sinks().size())
    fail(ErrorKind::validation, "beta_count",
         "expected " + std::to_string(g.sinks().size()) + " beta values, got " + std::to_string(beta.size()));
  if (max_attempts == 0) fail(ErrorKind::validation, "attempts_zero", "max_attempts must be positive");

  std::vector<std::vector<EdgeSet>> families;
  for (std::size_t i = 0; i < g.sinks().size(); ++i) {
    const NodeId t = g.sinks()[i];
    const std::size_t capacity = source_capacity(g, t);
    const std::string& name = g.node(t).name;
    if (w > capacity)
      fail(ErrorKind::validation, "rate_exceeds_capacity",
           "rate " + std::to_string(w) + " exceeds C_t = " + std::to_string(capacity) + " at sink '" + name + "'");
    if (beta[i] > capacity - w)
      fail(ErrorKind::validation, "beta_out_of_range",
           "beta = " + std::to_string(beta[i]) + " exceeds C_t - w = " + std::to_string(capacity - w) +
               " at sink '" + name + "'");
    families.push_back(beta[i] == 0 ? std::vector<EdgeSet>{} : enumerate_primary(g, t, beta[i]).members);
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Field::Element> symbol(0, field.order() - 1);
  for (std::size_t attempt = 1; attempt <= max_attempts; ++attempt) {
    std::vector<Matrix> locals;
    for (NodeId v = 0; v < g.node_count(); ++v) {
      const std::size_t rows = v == g.source() ? w : g.in_edges(v).size();
      Matrix k(rows, g.out_edges(v).size());
      for (std::size_t r = 0; r < k.rows(); ++r)
        for (std::size_t c = 0; c < k.cols(); ++c) k(r, c) = symbol(rng);
      locals.push_back(std::move(k));
    }
    LnecCode code = LnecCode::derive(net, field, w, std::move(locals));

    bool ok = true;
    for (std::size_t i = 0; ok && i < g.sinks().size(); ++i) {
      SinkView view = sink_view(code, g.sinks()[i]);
      ok = view.decodable();
      for (std::size_t j = 0; ok && j < families[i].size(); ++j)
        ok = trivial_intersection(field, view.message_part(), view.error_space(families[i][j]));
    }
    if (ok) return Construction{std::move(code), attempt};
  }
  fail(ErrorKind::computation, "construction_exhausted",
       "no admissible code over GF(" + std::to_string(field.order()) + ") after " + std::to_string(max_attempts) +
           " attempts");
}

}  // namespace lnec
