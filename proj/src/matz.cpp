#include "largeness/matz.hpp"

#include <sstream>
#include <utility>

#include "largeness/error.hpp"

namespace largeness {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
    for (long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorCode::DimensionMismatch, "row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Integer> IntMatrix::row(std::size_t i) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

IntMatrix IntMatrix::without_row(std::size_t skip) const {
  IntMatrix m(rows_ - 1, cols_);
  for (std::size_t i = 0, k = 0; i < rows_; ++i) {
    if (i == skip) continue;
    for (std::size_t j = 0; j < cols_; ++j) m(k, j) = (*this)(i, j);
    ++k;
  }
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source, const Integer& factor) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(target, j) += factor * (*this)(source, j);
}

void IntMatrix::add_col_multiple(std::size_t target, std::size_t source, const Integer& factor) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, target) += factor * (*this)(i, source);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "matrix product shape");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

std::vector<Integer> row_times(std::span<const Integer> v, const IntMatrix& m) {
  if (v.size() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "vector/matrix shape");
  std::vector<Integer> out(m.cols(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m(i, j);
  }
  return out;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && a(r, k) == 0) ++r;
      if (r == n) return 0;
      a.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

// Quotient rounded toward zero, so |a - q*b| < |b|.
Integer tquot(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

int cmpabs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);
  std::size_t t = 0;

  for (; t < rows && t < cols; ++t) {
    bool exhausted = false;
    for (;;) {
      // Pivot: least absolute value in the trailing block.
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (a(i, j) == 0) continue;
          if (pi == rows || cmpabs(a(i, j), a(pi, pj)) < 0) {
            pi = i;
            pj = j;
          }
        }
      if (pi == rows) {
        exhausted = true;
        break;
      }
      a.swap_rows(t, pi);
      u.swap_rows(t, pi);
      a.swap_cols(t, pj);
      v.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        Integer q = tquot(a(i, t), a(t, t));
        a.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        Integer q = tquot(a(t, j), a(t, t));
        a.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // The pivot must divide the whole trailing block.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      a.add_row_multiple(t, bad, 1);
      u.add_row_multiple(t, bad, 1);
    }
    if (exhausted) break;
    if (a(t, t) < 0) {
      a.negate_row(t);
      u.negate_row(t);
    }
  }

  SmithDecomposition out{std::move(u), std::move(a), std::move(v), {}, 0};
  for (std::size_t i = 0; i < t; ++i) out.invariant_factors.push_back(out.D(i, i));
  out.rank = t;
  return out;
}

HermiteResult column_hermite(const IntMatrix& m) {
  HermiteResult out{m, IntMatrix::identity(m.cols()), {}};
  IntMatrix& a = out.H;
  IntMatrix& v = out.V;
  const std::size_t cols = m.cols();

  // Columns >= i vanish on rows above i, so they can be mixed freely.
  for (std::size_t i = 0; i < m.rows() && i < cols; ++i) {
    for (;;) {
      std::size_t p = cols;
      for (std::size_t j = i; j < cols; ++j)
        if (a(i, j) != 0 && (p == cols || cmpabs(a(i, j), a(i, p)) < 0)) p = j;
      if (p == cols) break;
      bool rest_zero = true;
      for (std::size_t j = i; j < cols; ++j)
        if (j != p && a(i, j) != 0) rest_zero = false;
      if (rest_zero && p == i) break;
      if (p != i) {
        a.swap_cols(i, p);
        v.swap_cols(i, p);
        out.ops.push_back({ColumnOp::Kind::Swap, i, p, 0});
      }
      for (std::size_t j = i + 1; j < cols; ++j) {
        if (a(i, j) == 0) continue;
        Integer q = -tquot(a(i, j), a(i, i));
        a.add_col_multiple(j, i, q);
        v.add_col_multiple(j, i, q);
        out.ops.push_back({ColumnOp::Kind::AddMultiple, j, i, q});
      }
    }
    if (a(i, i) < 0) {
      a.negate_col(i);
      v.negate_col(i);
      out.ops.push_back({ColumnOp::Kind::Negate, i, i, 0});
    }
  }
  return out;
}

std::optional<std::vector<Integer>> in_row_lattice(const IntMatrix& m, std::span<const Integer> vec) {
  if (vec.size() != m.cols())
    throw Error(ErrorCode::DimensionMismatch, "vector length differs from matrix column count");
  SmithDecomposition snf = smith_normal_form(m);
  // x M = v  <=>  (x U^-1) D = v V
  std::vector<Integer> w = row_times(vec, snf.V);
  std::vector<Integer> y(m.rows(), 0);
  for (std::size_t i = 0; i < m.cols(); ++i) {
    if (i < snf.rank) {
      const Integer& d = snf.invariant_factors[i];
      if (!mpz_divisible_p(w[i].get_mpz_t(), d.get_mpz_t())) return std::nullopt;
      mpz_divexact(y[i].get_mpz_t(), w[i].get_mpz_t(), d.get_mpz_t());
    } else if (w[i] != 0) {
      return std::nullopt;
    }
  }
  return row_times(y, snf.U);
}

Order order_in_quotient(const SmithDecomposition& snf, std::span<const Integer> vec) {
  if (vec.size() != snf.V.rows())
    throw Error(ErrorCode::DimensionMismatch, "vector length differs from matrix column count");
  std::vector<Integer> w = row_times(vec, snf.V);
  Integer order = 1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i >= snf.rank) {
      if (w[i] != 0) return Order::infinite();
      continue;
    }
    const Integer& d = snf.invariant_factors[i];
    Integer g = gcd(d, w[i]);
    order = lcm(order, Integer(d / g));
  }
  return Order::finite(order);
}

Order order_in_quotient(const IntMatrix& m, std::span<const Integer> vec) {
  if (vec.size() != m.cols())
    throw Error(ErrorCode::DimensionMismatch, "vector length differs from matrix column count");
  return order_in_quotient(smith_normal_form(m), vec);
}

}  // namespace largeness
