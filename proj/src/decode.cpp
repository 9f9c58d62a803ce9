#include <algorithm>
#include <string>

#include "lnec/code.hpp"
#include "lnec/error.hpp"
#include "lnec/mincut.hpp"

namespace lnec {

Decoder::Decoder(SinkView view, std::size_t radius) : view_(std::move(view)), radius_(radius) {
  const Network& g = view_.network();
  const std::string& name = g.node(view_.sink()).name;
  if (!view_.decodable())
    fail(ErrorKind::validation, "not_decodable", "rank of F_t is below w at sink '" + name + "'");
  const std::size_t capacity = source_capacity(g, view_.sink());
  if (radius_ > capacity)
    fail(ErrorKind::validation, "radius_out_of_range",
         "radius " + std::to_string(radius_) + " exceeds C_t = " + std::to_string(capacity) + " at sink '" + name + "'");

  systems_.push_back({view_.message_part()});
  for (std::size_t r = 1; r <= radius_; ++r) {
    std::vector<Matrix> level;
    for (const EdgeSet& rho : enumerate_primary(g, view_.sink(), r).members)
      level.push_back(view_.message_part().stacked(view_.error_space(rho)));
    systems_.push_back(std::move(level));
  }
}

Decoder::Result Decoder::decode(std::span<const Field::Element> y) const {
  const Field& f = view_.field();
  const std::size_t w = view_.rate();
  if (y.size() != view_.inputs().size())
    fail(ErrorKind::validation, "dimension_mismatch",
         "received vector has length " + std::to_string(y.size()) + ", expected " +
             std::to_string(view_.inputs().size()));
  for (auto v : y)
    if (!f.contains(v))
      fail(ErrorKind::validation, "element_out_of_range", "received symbol " + std::to_string(v) + " is not in the field");

  for (std::size_t level = 0; level < systems_.size(); ++level) {
    std::vector<Vector> found;
    for (const Matrix& m : systems_[level]) {
      auto sol = solve_left(f, m, y);
      if (!sol) continue;
      for (const auto& basis : sol->null_basis)
        if (std::any_of(basis.begin(), basis.begin() + w, [](Field::Element v) { return v != 0; }))
          fail(ErrorKind::computation, "decode_ambiguous",
               "message not determined at error level " + std::to_string(level));
      Vector x(sol->particular.begin(), sol->particular.begin() + w);
      if (std::find(found.begin(), found.end(), x) == found.end()) found.push_back(std::move(x));
    }
    if (found.size() > 1)
      fail(ErrorKind::computation, "decode_ambiguous",
           std::to_string(found.size()) + " distinct messages explain the word at error level " + std::to_string(level));
    if (found.size() == 1) return Result{std::move(found.front()), level};
  }
  fail(ErrorKind::computation, "decode_no_solution",
       "no message explains the word within radius " + std::to_string(radius_));
}

Vector decode(const SinkView& view, std::span<const Field::Element> y, std::size_t radius) {
  return Decoder(view, radius).decode(y).message;
}

}  // namespace lnec
