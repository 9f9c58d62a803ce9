#include "lnec/galois.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "lnec/error.hpp"

namespace lnec {
namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients low to high

std::uint32_t ipow(std::uint32_t base, std::uint32_t exp) {
  std::uint32_t r = 1;
  while (exp--) r *= base;
  return r;
}

Poly to_digits(std::uint32_t value, std::uint32_t p, std::uint32_t m) {
  Poly d(m);
  for (std::uint32_t i = 0; i < m; ++i) {
    d[i] = value % p;
    value /= p;
  }
  return d;
}

std::uint32_t from_digits(const Poly& d, std::uint32_t p) {
  std::uint32_t v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

// Remainder of a modulo monic b over GF(p).
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    std::uint32_t lead = a.back();
    if (lead != 0) {
      std::size_t shift = a.size() - 1 - db;
      for (std::size_t i = 0; i <= db; ++i) a[shift + i] = (a[shift + i] + (p - lead) * b[i]) % p;
    }
    a.pop_back();
  }
  return a;
}

bool irreducible(const Poly& f, std::uint32_t p) {
  const std::uint32_t m = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; d <= m / 2; ++d) {
    for (std::uint32_t low = 0; low < ipow(p, d); ++low) {
      Poly g = to_digits(low, p, d);
      g.push_back(1);
      Poly r = poly_mod(f, g, p);
      if (std::all_of(r.begin(), r.end(), [](std::uint32_t c) { return c == 0; })) return false;
    }
  }
  return true;
}

}  // namespace

Field::Field(std::uint32_t q) {
  if (q < 2 || q > kMaxOrder)
    fail(ErrorKind::validation, "unsupported_field", "field order " + std::to_string(q) + " is outside [2, 65536]");
  std::uint32_t p = 0;
  for (std::uint32_t d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) p = q;
  std::uint32_t m = 0;
  for (std::uint32_t r = q; r > 1; r /= p) {
    if (r % p != 0) fail(ErrorKind::validation, "unsupported_field", std::to_string(q) + " is not a prime power");
    ++m;
  }

  auto t = std::make_shared<Tables>();
  t->q = q;
  t->p = p;
  t->m = m;

  if (m > 1) {
    for (std::uint32_t low = 0;; ++low) {
      Poly f = to_digits(low, p, m);
      f.push_back(1);
      if (f[0] != 0 && irreducible(f, p)) {
        t->modulus = std::move(f);
        break;
      }
    }
  }

  auto raw_mul = [&](std::uint32_t a, std::uint32_t b) -> std::uint32_t {
    if (m == 1) return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
    Poly da = to_digits(a, p, m), db = to_digits(b, p, m);
    Poly prod(2 * m - 1, 0);
    for (std::uint32_t i = 0; i < m; ++i)
      for (std::uint32_t j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    return from_digits(poly_mod(std::move(prod), t->modulus, p), p);
  };

  // Smallest primitive element; its powers fill the exp/log tables.
  t->exp.assign(2 * (q - 1), 0);
  t->log.assign(q, 0);
  for (std::uint32_t g = (q == 2 ? 1 : 2); g < q; ++g) {
    std::uint32_t x = 1;
    std::uint32_t k = 0;
    bool primitive = true;
    for (; k < q - 1; ++k) {
      if (k > 0 && x == 1) {
        primitive = false;
        break;
      }
      t->exp[k] = x;
      x = raw_mul(x, g);
    }
    if (primitive && x == 1) break;
  }
  for (std::uint32_t k = 0; k < q - 1; ++k) {
    t->exp[k + q - 1] = t->exp[k];
    t->log[t->exp[k]] = k;
  }
  tables_ = std::move(t);
}

Field::Element Field::add(Element a, Element b) const {
  const auto& t = *tables_;
  if (t.m == 1) return (a + b) % t.p;
  if (t.p == 2) return a ^ b;
  Element out = 0, scale = 1;
  for (std::uint32_t i = 0; i < t.m; ++i) {
    out += ((a % t.p + b % t.p) % t.p) * scale;
    a /= t.p;
    b /= t.p;
    scale *= t.p;
  }
  return out;
}

Field::Element Field::sub(Element a, Element b) const {
  const auto& t = *tables_;
  if (t.m == 1) return (a + t.p - b) % t.p;
  if (t.p == 2) return a ^ b;
  Element out = 0, scale = 1;
  for (std::uint32_t i = 0; i < t.m; ++i) {
    out += ((a % t.p + t.p - b % t.p) % t.p) * scale;
    a /= t.p;
    b /= t.p;
    scale *= t.p;
  }
  return out;
}

Field::Element Field::inv(Element a) const {
  if (a == 0) fail(ErrorKind::computation, "division_by_zero", "inverse of zero");
  const auto& t = *tables_;
  return t.exp[(t.q - 1 - t.log[a]) % (t.q - 1)];
}

Field::Element Field::pow(Element a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const auto& t = *tables_;
  return t.exp[(std::uint64_t{t.log[a]} * (e % (t.q - 1))) % (t.q - 1)];
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Field::Element>>& rows) {
  Matrix m(0, rows.empty() ? 0 : rows.front().size());
  for (const auto& r : rows) m.append_row(r);
  return m;
}

void Matrix::append_row(std::span<const Field::Element> values) {
  if (rows_ == 0 && data_.empty()) cols_ = values.size();
  if (values.size() != cols_) throw std::invalid_argument("row length mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

Matrix Matrix::select_rows(std::span<const std::size_t> indices) const {
  Matrix out(indices.size(), cols_);
  for (std::size_t i = 0; i < indices.size(); ++i) {
    auto src = row(indices[i]);
    std::copy(src.begin(), src.end(), out.row(i).begin());
  }
  return out;
}

Matrix Matrix::stacked(const Matrix& below) const {
  if (below.cols_ != cols_ && below.rows_ != 0 && rows_ != 0)
    fail(ErrorKind::validation, "dimension_mismatch", "stacked matrices need equal column counts");
  Matrix out = *this;
  if (rows_ == 0) out.cols_ = below.cols_;
  out.data_.insert(out.data_.end(), below.data_.begin(), below.data_.end());
  out.rows_ += below.rows_;
  return out;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Field::Element v) { return v == 0; });
}

namespace {

// In-place reduced row echelon form restricted to the first `limit` columns.
// Returns pivot columns.
std::vector<std::size_t> reduce(const Field& f, Matrix& m, std::size_t limit) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < limit && row < m.rows(); ++col) {
    std::size_t pr = row;
    while (pr < m.rows() && m(pr, col) == 0) ++pr;
    if (pr == m.rows()) continue;
    if (pr != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pr, c), m(row, c));
    Field::Element scale = f.inv(m(row, col));
    for (std::size_t c = 0; c < m.cols(); ++c) m(row, c) = f.mul(m(row, c), scale);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      Field::Element factor = m(r, col);
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = f.sub(m(r, c), f.mul(factor, m(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const Field& field, const Matrix& m) {
  Matrix work = m;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < work.cols() && rank < work.rows(); ++col) {
    std::size_t pr = rank;
    while (pr < work.rows() && work(pr, col) == 0) ++pr;
    if (pr == work.rows()) continue;
    if (pr != rank)
      for (std::size_t c = col; c < work.cols(); ++c) std::swap(work(pr, c), work(rank, c));
    Field::Element scale = field.inv(work(rank, col));
    for (std::size_t r = rank + 1; r < work.rows(); ++r) {
      if (work(r, col) == 0) continue;
      Field::Element factor = field.mul(work(r, col), scale);
      for (std::size_t c = col; c < work.cols(); ++c)
        work(r, c) = field.sub(work(r, c), field.mul(factor, work(rank, c)));
    }
    ++rank;
  }
  return rank;
}

bool trivial_intersection(const Field& field, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols())
    fail(ErrorKind::validation, "dimension_mismatch", "trivial_intersection needs equal column counts");
  return rank(field, a) + rank(field, b) == rank(field, a.stacked(b));
}

bool rowspace_contains(const Field& field, const Matrix& space, const Matrix& sub) {
  if (sub.rows() == 0) return true;
  if (space.cols() != sub.cols())
    fail(ErrorKind::validation, "dimension_mismatch", "rowspace_contains needs equal column counts");
  return rank(field, space) == rank(field, space.stacked(sub));
}

std::optional<LeftSolution> solve_left(const Field& field, const Matrix& m, std::span<const Field::Element> y) {
  if (y.size() != m.cols())
    fail(ErrorKind::validation, "dimension_mismatch", "right-hand side length differs from column count");
  // u m = y  <=>  m^T u^T = y^T; reduce the augmented system [m^T | y^T].
  const std::size_t unknowns = m.rows();
  Matrix aug(m.cols(), unknowns + 1);
  for (std::size_t r = 0; r < m.cols(); ++r) {
    for (std::size_t c = 0; c < unknowns; ++c) aug(r, c) = m(c, r);
    aug(r, unknowns) = y[r];
  }
  auto pivots = reduce(field, aug, unknowns);
  for (std::size_t r = pivots.size(); r < aug.rows(); ++r)
    if (aug(r, unknowns) != 0) return std::nullopt;

  LeftSolution sol;
  sol.particular.assign(unknowns, 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) sol.particular[pivots[i]] = aug(i, unknowns);

  std::vector<char> is_pivot(unknowns, 0);
  for (std::size_t c : pivots) is_pivot[c] = 1;
  for (std::size_t free = 0; free < unknowns; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Field::Element> v(unknowns, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = field.neg(aug(i, free));
    sol.null_basis.push_back(std::move(v));
  }
  return sol;
}

std::vector<Field::Element> row_times(const Field& field, std::span<const Field::Element> x, const Matrix& m) {
  if (x.size() != m.rows())
    fail(ErrorKind::validation, "dimension_mismatch", "vector length differs from matrix row count");
  std::vector<Field::Element> out(m.cols(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (x[r] == 0) continue;
    for (std::size_t c = 0; c < m.cols(); ++c) out[c] = field.add(out[c], field.mul(x[r], m(r, c)));
  }
  return out;
}

}  // namespace lnec
