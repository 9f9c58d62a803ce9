#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "lnec/galois.hpp"
#include "lnec/network.hpp"
#include "lnec/primaries.hpp"

namespace lnec {

using Vector = std::vector<Field::Element>;

// Local encoding kernels plus the derived extended global encoding kernels.
// Kernel rows are d'_1..d'_w followed by e' for every edge in ancestral
// order; the imaginary error edges exist only as these row labels.
class LnecCode {
 public:
  // locals[v] is |In(v)| x |Out(v)| (w x |Out(s)| at the source). Sinks may
  // pass an empty matrix.
  static LnecCode derive(std::shared_ptr<const Network> net, Field field, std::size_t w,
                         std::vector<Matrix> locals);

  const Network& network() const { return *net_; }
  std::shared_ptr<const Network> network_ptr() const { return net_; }
  const Field& field() const { return field_; }
  std::size_t rate() const { return w_; }
  std::size_t kernel_rows() const { return w_ + net_->edge_count(); }
  std::size_t error_row(EdgeId e) const { return w_ + e; }

  const Matrix& local(NodeId v) const { return locals_.at(v); }
  std::span<const Matrix> locals() const { return locals_; }
  // k_{d,e} for real edges d into tail(e).
  Field::Element coefficient(EdgeId d, EdgeId e) const;

  // Column e of this matrix is the extended kernel of edge e.
  const Matrix& kernels() const { return kernels_; }
  Vector kernel(EdgeId e) const;

 private:
  LnecCode() : field_(2) {}

  std::shared_ptr<const Network> net_;
  Field field_;
  std::size_t w_ = 0;
  std::vector<Matrix> locals_;
  Matrix kernels_;
};

LnecCode derive_kernels(std::shared_ptr<const Network> net, Field field, std::size_t w,
                        std::vector<Matrix> locals);

class ErrorVector {
 public:
  explicit ErrorVector(Vector values) : values_(std::move(values)) {}
  static ErrorVector zero(std::size_t edges) { return ErrorVector(Vector(edges, 0)); }

  std::span<const Field::Element> values() const { return values_; }
  Field::Element operator[](EdgeId e) const { return values_[e]; }
  std::size_t size() const { return values_.size(); }
  EdgeSet support() const;
  bool matches(const EdgeSet& rho) const { return support().is_subset_of(rho); }

 private:
  Vector values_;
};

// Symbols on every edge for message x and error z. Checks each against
// (x z) times the extended kernel.
Vector transmit(const LnecCode& code, std::span<const Field::Element> x, const ErrorVector& z);

// The received-side matrices at one sink: columns follow In(t).
class SinkView {
 public:
  NodeId sink() const { return sink_; }
  const Network& network() const { return *net_; }
  const Field& field() const { return field_; }
  std::size_t rate() const { return F_.rows(); }
  std::span<const EdgeId> inputs() const { return inputs_; }

  const Matrix& extended() const { return Ft_; }  // (w + |E|) x |In(t)|
  const Matrix& message_part() const { return F_; }  // F_t
  const Matrix& error_part() const { return G_; }    // G_t, row e = e'
  std::span<const Field::Element> message_row(std::size_t i) const { return F_.row(i); }
  std::span<const Field::Element> error_row(EdgeId e) const { return G_.row(e); }

  // Rows of G_t selected by rho; spans Delta(t, rho).
  Matrix error_space(const EdgeSet& rho) const;
  // Edges whose G_t row is nonzero.
  const EdgeSet& active_edges() const { return active_; }
  bool decodable() const;

  Vector receive(std::span<const Field::Element> x, const ErrorVector& z) const;

 private:
  friend SinkView sink_view(const LnecCode& code, NodeId t);
  SinkView() : field_(2) {}

  std::shared_ptr<const Network> net_;
  Field field_;
  NodeId sink_ = 0;
  std::vector<EdgeId> inputs_;
  Matrix Ft_, F_, G_;
  EdgeSet active_;
};

SinkView sink_view(const LnecCode& code, NodeId t);

// Least |rho| such that y - y2 lies in Delta(t, rho).
std::size_t distance(const SinkView& view, std::span<const Field::Element> y, std::span<const Field::Element> y2);

enum class DistanceMethod { exhaustive, primaries };

std::size_t min_distance(const SinkView& view, DistanceMethod method);
std::size_t min_distance(const LnecCode& code, NodeId t, DistanceMethod method);

// Indexed like network().sinks().
std::vector<bool> is_decodable(const LnecCode& code);
bool is_mds(const LnecCode& code);

struct Construction {
  LnecCode code;
  std::size_t attempts = 0;
};

// Samples locals uniformly (seeded) until every sink t has rank F_t = w and
// Phi(t) meets Delta(t, rho) trivially for all rho in A_t(beta_t).
Construction construct(std::shared_ptr<const Network> net, std::size_t w, std::span<const std::size_t> beta,
                       const Field& field, std::uint64_t seed, std::size_t max_attempts);

// Minimum-distance decoder at one sink. Errors are searched in increasing
// level r' = 0..radius, over supports inside members of A_t(r').
class Decoder {
 public:
  Decoder(SinkView view, std::size_t radius);

  const SinkView& view() const { return view_; }
  std::size_t radius() const { return radius_; }

  struct Result {
    Vector message;
    std::size_t level = 0;
  };
  Result decode(std::span<const Field::Element> y) const;

 private:
  SinkView view_;
  std::size_t radius_;
  std::vector<std::vector<Matrix>> systems_;  // per level: [F_t; G_rho]
};

Vector decode(const SinkView& view, std::span<const Field::Element> y, std::size_t radius);

struct Theorem3Report {
  std::size_t r = 0;
  bool primary = true;     // condition over A_t(r)
  bool hamming = true;     // condition over H(r)
  bool enhanced = true;    // condition over E_t(r)
  bool containment = true; // Delta(t, rho) inside Delta(t, pmc(rho)) for every rho
  std::size_t subsets_checked = 0;

  bool holds() const { return primary == hamming && hamming == enhanced && containment; }
};

// Exhaustive over all edge subsets; refused above 20 edges unless forced.
inline constexpr std::size_t kMaxTheorem3Edges = 20;
Theorem3Report verify_theorem3(const LnecCode& code, NodeId t, std::size_t r, bool force = false);

// Sum of path gains over every directed path from e to e_hat against the e'
// component of the extended kernel of e_hat.
inline constexpr std::size_t kMaxPaths = 100000;
bool verify_path_sums(const LnecCode& code, EdgeId e, EdgeId e_hat);

}  // namespace lnec
