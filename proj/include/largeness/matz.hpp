#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace largeness {

using Integer = mpz_class;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Integer> row(std::size_t i) const;
  IntMatrix without_row(std::size_t i) const;
  IntMatrix transpose() const;
  bool is_zero() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor);
  /// col[target] += factor * col[source]
  void add_col_multiple(std::size_t target, std::size_t source, const Integer& factor);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  bool operator==(const IntMatrix& other) const = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Row vector times matrix.
std::vector<Integer> row_times(std::span<const Integer> v, const IntMatrix& m);

/// Exact determinant (fraction-free Bareiss elimination). Square input only.
Integer determinant(const IntMatrix& m);

struct SmithDecomposition {
  IntMatrix U;  // rows x rows, unimodular
  IntMatrix D;  // rows x cols, diagonal
  IntMatrix V;  // cols x cols, unimodular
  std::vector<Integer> invariant_factors;  // d_1 | d_2 | ... | d_r, all positive
  std::size_t rank = 0;
};

/// U * M * V = D with D in Smith normal form. Deterministic: each elimination
/// round pivots on the entry of least absolute value, ties to the lowest
/// (row, col).
SmithDecomposition smith_normal_form(const IntMatrix& m);

/// Elementary column operation, recorded so a caller can replay it on words.
struct ColumnOp {
  enum class Kind { Swap, AddMultiple, Negate };
  Kind kind = Kind::Swap;
  std::size_t target = 0;  // column changed (for Swap: one of the pair)
  std::size_t source = 0;  // AddMultiple: col[target] += factor * col[source]
  Integer factor = 0;
};

struct HermiteResult {
  IntMatrix H;  // lower triangular, nonnegative diagonal
  IntMatrix V;  // unimodular, M * V = H
  std::vector<ColumnOp> ops;  // applied to M left to right
};

/// Column echelon form by unimodular column operations. Entries left of a
/// pivot are not reduced, so a lower-triangular input with nonnegative
/// diagonal is returned unchanged with V = I.
HermiteResult column_hermite(const IntMatrix& m);

/// Coefficients x with x * M = v when v lies in the row lattice of M.
/// Throws E_DIM_MISMATCH if v.size() != M.cols().
std::optional<std::vector<Integer>> in_row_lattice(const IntMatrix& m, std::span<const Integer> v);

/// Order of an element: a positive integer, or infinite.
class Order {
 public:
  static Order infinite() { return Order(); }
  static Order finite(Integer n) { return Order(std::move(n)); }

  bool is_finite() const noexcept { return finite_; }
  bool is_infinite() const noexcept { return !finite_; }
  /// Only meaningful when is_finite().
  const Integer& value() const { return value_; }

  std::string to_string() const { return finite_ ? value_.get_str() : "infinite"; }
  bool operator==(const Order& o) const {
    return finite_ == o.finite_ && (!finite_ || value_ == o.value_);
  }

 private:
  Order() = default;
  explicit Order(Integer n) : finite_(true), value_(std::move(n)) {}
  bool finite_ = false;
  Integer value_ = 0;
};

/// Least k >= 1 with k*v in the row lattice of M, or infinite.
Order order_in_quotient(const IntMatrix& m, std::span<const Integer> v);

/// Same computation against an existing decomposition of M.
Order order_in_quotient(const SmithDecomposition& snf, std::span<const Integer> v);

}  // namespace largeness
