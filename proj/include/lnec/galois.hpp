#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lnec {

// GF(q), q = p^m <= 2^16. Elements are the integers 0..q-1 read as base-p
// digit vectors (least significant digit = constant coefficient). The modulus
// is the lexicographically smallest monic irreducible polynomial of degree m.
class Field {
 public:
  using Element = std::uint32_t;

  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  // Throws lnec::Error if q is not a supported prime power.
  explicit Field(std::uint32_t q);

  std::uint32_t order() const { return tables_->q; }
  std::uint32_t characteristic() const { return tables_->p; }
  std::uint32_t degree() const { return tables_->m; }
  // Coefficients low to high, monic; {} for prime fields.
  const std::vector<std::uint32_t>& modulus() const { return tables_->modulus; }

  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element neg(Element a) const { return sub(0, a); }
  Element mul(Element a, Element b) const {
    if (a == 0 || b == 0) return 0;
    const auto& t = *tables_;
    return t.exp[t.log[a] + t.log[b]];
  }
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  Element pow(Element a, std::uint64_t e) const;

  bool contains(std::uint64_t a) const { return a < tables_->q; }

  friend bool operator==(const Field& a, const Field& b) { return a.order() == b.order(); }

 private:
  struct Tables {
    std::uint32_t q = 0, p = 0, m = 0;
    std::vector<std::uint32_t> modulus;
    std::vector<Element> exp;  // 2(q-1) entries, so log a + log b never wraps
    std::vector<std::uint32_t> log;
  };
  std::shared_ptr<const Tables> tables_;
};

// Dense row-major matrix of field elements.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Field::Element>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Field::Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Field::Element operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Field::Element> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Field::Element> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Field::Element> values);
  Matrix select_rows(std::span<const std::size_t> indices) const;
  Matrix stacked(const Matrix& below) const;
  Matrix transposed() const;
  bool is_zero() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Field::Element> data_;
};

// Row rank by Gaussian elimination; the pivot in each column is the first
// nonzero entry at or below the current row.
std::size_t rank(const Field& field, const Matrix& m);

// rowspace(a) and rowspace(b) meet only in {0}.
bool trivial_intersection(const Field& field, const Matrix& a, const Matrix& b);

// rowspace(sub) is contained in rowspace(space).
bool rowspace_contains(const Field& field, const Matrix& space, const Matrix& sub);

// Solutions u of u * m = y: one particular solution plus a basis of the left
// null space. nullopt when the system is inconsistent.
struct LeftSolution {
  std::vector<Field::Element> particular;
  std::vector<std::vector<Field::Element>> null_basis;
};
std::optional<LeftSolution> solve_left(const Field& field, const Matrix& m, std::span<const Field::Element> y);

// Row vector times matrix.
std::vector<Field::Element> row_times(const Field& field, std::span<const Field::Element> x, const Matrix& m);

}  // namespace lnec
