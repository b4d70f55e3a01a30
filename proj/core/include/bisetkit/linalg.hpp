#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bisetkit {

using Integer = mpz_class;
using Rational = mpq_class;

enum class ScalarMode { Integer, Rational };

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < m.rows_; ++i)
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i].at(j);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> row(std::size_t r) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }
  std::vector<T> col(std::size_t c) const {
    std::vector<T> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }
  void set_col(std::size_t c, const std::vector<T>& v) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (x != 0) return false;
    return true;
  }
  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using QMatrix = Matrix<Rational>;
using ZMatrix = Matrix<Integer>;
using QVector = std::vector<Rational>;
using ZVector = std::vector<Integer>;

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

template <class T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
  return c;
}

template <class T>
std::vector<T> operator*(const Matrix<T>& a, const std::vector<T>& v) {
  std::vector<T> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (v[k] != 0) out[i] += a(i, k) * v[k];
  return out;
}

QMatrix to_rational(const ZMatrix& m);
// Throws InvalidArgument if an entry is not an integer.
ZMatrix to_integer(const QMatrix& m);

std::string to_string(const Rational& q);
// Accepts "a", "a/b" and "-a/b".  Throws Parse.
Rational parse_rational(const std::string& s);

struct RrefResult {
  QMatrix echelon;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};
RrefResult rref(QMatrix m);

struct SmithResult {
  ZMatrix s;  // u * m * v
  ZMatrix u;
  ZMatrix v;
  ZMatrix v_inv;
  std::vector<Integer> diagonal;  // d_1 | d_2 | ..., zeros last
};
SmithResult smith_normal_form(const ZMatrix& m);

// Fraction-free elimination.
Integer bareiss_determinant(ZMatrix m);
std::size_t bareiss_rank(ZMatrix m);

/// Dense solver for A x = b over Q.  The particular solution sets every free
/// variable to zero, so results are deterministic.
class LinearSolver {
 public:
  explicit LinearSolver(const QMatrix& a);
  std::optional<QVector> solve(const QVector& b) const;
  // Basis of the right kernel, one vector per free column.
  std::vector<QVector> nullspace() const;
  std::size_t rank() const { return rank_; }

 private:
  QMatrix a_;
  QMatrix rref_;     // of a_
  QMatrix transform_;  // rref_ = transform_ * a_
  std::vector<std::size_t> pivots_;
  std::size_t rank_ = 0;
};

std::vector<QVector> nullspace(const QMatrix& a);

using SparseRow = std::vector<std::pair<std::size_t, Rational>>;  // sorted by column

enum class PivotOrder {
  Leading,   // eliminate low columns first; free columns are the high ones
  Trailing,  // eliminate high columns first; free columns are the low ones
};

// Kernel of the matrix whose rows are given, one vector per non-pivot column.
std::vector<QVector> sparse_nullspace(std::size_t n, const std::vector<SparseRow>& rows);

/// A module Z^n / L or Q^n / L given by relation rows, with a canonical-form
/// reducer.  Over Q the canonical representative vanishes on pivot columns, so
/// the free columns carry coordinates on the quotient.  Over Z reduction goes
/// through Smith normal form coordinates.
class PresentedModule {
 public:
  PresentedModule() = default;
  static PresentedModule from_sparse(std::size_t n, const std::vector<SparseRow>& rows,
                                     ScalarMode mode = ScalarMode::Rational,
                                     PivotOrder order = PivotOrder::Leading);
  static PresentedModule from_matrix(const QMatrix& relations, ScalarMode mode = ScalarMode::Rational,
                                     PivotOrder order = PivotOrder::Leading);

  std::size_t n_gens() const { return n_; }
  ScalarMode mode() const { return mode_; }
  // Free rank of the quotient.
  std::size_t rank() const { return n_ - relation_rank_; }
  // Invariant factors d_i > 1 (integer mode only).
  const std::vector<Integer>& torsion() const { return torsion_; }
  // Non-pivot columns in increasing order (rational mode).
  const std::vector<std::size_t>& free_columns() const { return free_; }

  QVector reduce(const QVector& v) const;
  // Entries of reduce(v) on free_columns() (rational mode).
  QVector coords(const QVector& v) const;
  QVector coords_of_reduced(const QVector& reduced) const;

 private:
  std::size_t n_ = 0;
  ScalarMode mode_ = ScalarMode::Rational;
  std::size_t relation_rank_ = 0;
  // Rational mode: fully reduced pivot rows keyed by pivot column.
  std::map<std::size_t, SparseRow> pivot_rows_;
  std::vector<std::size_t> free_;
  // Integer mode.
  ZMatrix v_;
  ZMatrix v_inv_;
  std::vector<Integer> diag_;
  std::vector<Integer> torsion_;
};

}  // namespace bisetkit
