#include "lnec/code.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "combinations.hpp"
#include "lnec/error.hpp"
#include "lnec/mincut.hpp"

namespace lnec {

LnecCode LnecCode::derive(std::shared_ptr<const Network> net, Field field, std::size_t w,
                          std::vector<Matrix> locals) {
  if (!net) throw std::invalid_argument("null network");
  if (w == 0) fail(ErrorKind::validation, "rate_zero", "rate w must be positive");
  const Network& g = *net;
  if (locals.size() != g.node_count())
    fail(ErrorKind::validation, "dimension_mismatch",
         "expected local kernels for " + std::to_string(g.node_count()) + " nodes, got " +
             std::to_string(locals.size()));

  for (NodeId v = 0; v < g.node_count(); ++v) {
    const std::size_t rows = v == g.source() ? w : g.in_edges(v).size();
    const std::size_t cols = g.out_edges(v).size();
    Matrix& k = locals[v];
    if (g.is_sink(v) && k.rows() == 0 && k.cols() == 0) k = Matrix(rows, 0);
    if (k.rows() != rows || k.cols() != cols)
      fail(ErrorKind::validation, "dimension_mismatch",
           "local kernel at '" + g.node(v).name + "' must be " + std::to_string(rows) + "x" + std::to_string(cols) +
               ", got " + std::to_string(k.rows()) + "x" + std::to_string(k.cols()));
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c)
        if (!field.contains(k(r, c)))
          fail(ErrorKind::validation, "element_out_of_range",
               "local coefficient " + std::to_string(k(r, c)) + " at '" + g.node(v).name + "' is not in GF(" +
                   std::to_string(field.order()) + ")");
  }

  LnecCode code;
  code.net_ = std::move(net);
  code.field_ = std::move(field);
  code.w_ = w;
  code.locals_ = std::move(locals);

  // One pass in ancestral order; every input kernel is ready before use.
  const std::size_t n = g.edge_count();
  Matrix kern(w + n, n);
  for (EdgeId e = 0; e < n; ++e) {
    const NodeId v = g.edge(e).tail;
    const Matrix& k = code.locals_[v];
    const std::size_t col = g.out_slot(e);
    if (v == g.source()) {
      for (std::size_t i = 0; i < w; ++i) kern(i, e) = k(i, col);
    } else {
      for (EdgeId d : g.in_edges(v)) {
        Field::Element c = k(g.in_slot(d), col);
        if (c == 0) continue;
        for (std::size_t r = 0; r < w + n; ++r) kern(r, e) = code.field_.add(kern(r, e), code.field_.mul(c, kern(r, d)));
      }
    }
    kern(w + e, e) = code.field_.add(kern(w + e, e), 1);
  }
  code.kernels_ = std::move(kern);
  return code;
}

LnecCode derive_kernels(std::shared_ptr<const Network> net, Field field, std::size_t w,
                        std::vector<Matrix> locals) {
  return LnecCode::derive(std::move(net), std::move(field), w, std::move(locals));
}

Field::Element LnecCode::coefficient(EdgeId d, EdgeId e) const {
  const Network& g = *net_;
  if (g.edge(d).head != g.edge(e).tail)
    fail(ErrorKind::validation, "not_adjacent",
         "edge '" + g.edge(d).name + "' does not feed edge '" + g.edge(e).name + "'");
  return locals_[g.edge(e).tail](g.in_slot(d), g.out_slot(e));
}

Vector LnecCode::kernel(EdgeId e) const {
  net_->check_edges(EdgeSet{e});
  Vector col(kernel_rows());
  for (std::size_t r = 0; r < col.size(); ++r) col[r] = kernels_(r, e);
  return col;
}

EdgeSet ErrorVector::support() const {
  std::vector<EdgeId> ids;
  for (std::size_t e = 0; e < values_.size(); ++e)
    if (values_[e] != 0) ids.push_back(static_cast<EdgeId>(e));
  return EdgeSet(std::move(ids));
}

namespace {

Vector concat(std::span<const Field::Element> x, std::span<const Field::Element> z) {
  Vector xz(x.begin(), x.end());
  xz.insert(xz.end(), z.begin(), z.end());
  return xz;
}

void check_message(const Field& field, std::size_t w, std::span<const Field::Element> x, const char* what) {
  if (x.size() != w)
    fail(ErrorKind::validation, "dimension_mismatch",
         std::string(what) + " has length " + std::to_string(x.size()) + ", expected " + std::to_string(w));
  for (auto v : x)
    if (!field.contains(v))
      fail(ErrorKind::validation, "element_out_of_range",
           std::string(what) + " entry " + std::to_string(v) + " is not in GF(" + std::to_string(field.order()) + ")");
}

}  // namespace

Vector transmit(const LnecCode& code, std::span<const Field::Element> x, const ErrorVector& z) {
  const Network& g = code.network();
  const Field& f = code.field();
  const std::size_t w = code.rate();
  check_message(f, w, x, "message");
  check_message(f, g.edge_count(), z.values(), "error vector");

  Vector y(g.edge_count(), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const NodeId v = g.edge(e).tail;
    const Matrix& k = code.local(v);
    const std::size_t col = g.out_slot(e);
    Field::Element acc = 0;
    if (v == g.source()) {
      for (std::size_t i = 0; i < w; ++i) acc = f.add(acc, f.mul(x[i], k(i, col)));
    } else {
      for (EdgeId d : g.in_edges(v)) acc = f.add(acc, f.mul(k(g.in_slot(d), col), y[d]));
    }
    y[e] = f.add(acc, z[e]);
  }

  if (row_times(f, concat(x, z.values()), code.kernels()) != y)
    throw std::logic_error("transmitted symbols disagree with the extended kernels");
  return y;
}

SinkView sink_view(const LnecCode& code, NodeId t) {
  const Network& g = code.network();
  g.check_node(t);
  if (!g.is_sink(t)) fail(ErrorKind::validation, "not_a_sink", "'" + g.node(t).name + "' is not a sink");

  SinkView view;
  view.net_ = code.network_ptr();
  view.field_ = code.field();
  view.sink_ = t;
  view.inputs_.assign(g.in_edges(t).begin(), g.in_edges(t).end());

  const std::size_t w = code.rate();
  const std::size_t cols = view.inputs_.size();
  view.Ft_ = Matrix(code.kernel_rows(), cols);
  for (std::size_t r = 0; r < code.kernel_rows(); ++r)
    for (std::size_t j = 0; j < cols; ++j) view.Ft_(r, j) = code.kernels()(r, view.inputs_[j]);
  view.F_ = Matrix(w, cols);
  view.G_ = Matrix(g.edge_count(), cols);
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t i = 0; i < w; ++i) view.F_(i, j) = view.Ft_(i, j);
    for (EdgeId e = 0; e < g.edge_count(); ++e) view.G_(e, j) = view.Ft_(w + e, j);
  }

  for (std::size_t i = 0; i < cols; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (view.G_(view.inputs_[i], j) != (i == j ? 1u : 0u))
        throw std::logic_error("error rows of the sink inputs do not form an identity");

  std::vector<EdgeId> active;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto row = view.G_.row(e);
    if (std::any_of(row.begin(), row.end(), [](Field::Element v) { return v != 0; })) active.push_back(e);
  }
  view.active_ = EdgeSet(std::move(active));
  return view;
}

Matrix SinkView::error_space(const EdgeSet& rho) const {
  Matrix out(0, G_.cols());
  for (EdgeId e : rho) out.append_row(G_.row(e));
  return out;
}

bool SinkView::decodable() const { return rank(field_, F_) == F_.rows(); }

Vector SinkView::receive(std::span<const Field::Element> x, const ErrorVector& z) const {
  check_message(field_, rate(), x, "message");
  check_message(field_, net_->edge_count(), z.values(), "error vector");
  return row_times(field_, concat(x, z.values()), Ft_);
}

std::size_t distance(const SinkView& view, std::span<const Field::Element> y, std::span<const Field::Element> y2) {
  const std::size_t n = view.inputs().size();
  check_message(view.field(), n, y, "received vector");
  check_message(view.field(), n, y2, "received vector");
  Vector diff(n);
  bool zero = true;
  for (std::size_t j = 0; j < n; ++j) {
    diff[j] = view.field().sub(y[j], y2[j]);
    zero = zero && diff[j] == 0;
  }
  if (zero) return 0;

  const auto pool = view.active_edges().ids();
  for (std::size_t k = 1; k <= pool.size(); ++k) {
    bool found = detail::for_each_subset(pool, k, [&](const EdgeSet& rho) {
      return solve_left(view.field(), view.error_space(rho), diff).has_value();
    });
    if (found) return k;
  }
  throw std::logic_error("difference outside the span of all error rows");
}

std::size_t min_distance(const SinkView& view, DistanceMethod method) {
  const Network& g = view.network();
  if (!view.decodable())
    fail(ErrorKind::validation, "not_decodable", "rank of F_t is below w at sink '" + g.node(view.sink()).name + "'");
  const Matrix& F = view.message_part();
  auto violates = [&](const EdgeSet& rho) { return !trivial_intersection(view.field(), F, view.error_space(rho)); };

  if (method == DistanceMethod::exhaustive) {
    // Edges with a zero error row never change Delta(t, rho), so a smallest
    // violating subset uses active edges only.
    const auto pool = view.active_edges().ids();
    for (std::size_t r = 1; r <= pool.size(); ++r)
      if (detail::for_each_subset(pool, r, violates)) return r;
    throw std::logic_error("no violating edge subset for a decodable sink");
  }

  const std::size_t capacity = source_capacity(g, view.sink());
  const std::size_t w = view.rate();
  for (std::size_t r = 1; r + w <= capacity; ++r)
    for (const EdgeSet& rho : enumerate_primary(g, view.sink(), r).members)
      if (violates(rho)) return r;
  return capacity - w + 1;
}

std::size_t min_distance(const LnecCode& code, NodeId t, DistanceMethod method) {
  return min_distance(sink_view(code, t), method);
}

std::vector<bool> is_decodable(const LnecCode& code) {
  std::vector<bool> out;
  for (NodeId t : code.network().sinks()) out.push_back(sink_view(code, t).decodable());
  return out;
}

bool is_mds(const LnecCode& code) {
  for (NodeId t : code.network().sinks()) {
    SinkView view = sink_view(code, t);
    if (!view.decodable()) return false;
    const std::size_t capacity = source_capacity(code.network(), t);
    if (min_distance(view, DistanceMethod::primaries) != capacity - code.rate() + 1) return false;
  }
  return true;
}

}  // namespace lnec
