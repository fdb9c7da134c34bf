#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace torelli {

/// Arbitrary-precision integer. Every matrix entry and coefficient in the
/// library is one of these; nothing is ever narrowed to a machine word.
using Integer = mpz_class;
using IntVector = std::vector<Integer>;

IntVector make_vector(std::initializer_list<long> values);
IntVector zero_vector(std::size_t n);
IntVector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const IntVector& v);
/// gcd of the entries (0 for the zero vector); always nonnegative.
Integer content(const IntVector& v);
Integer dot(const IntVector& a, const IntVector& b);
IntVector operator+(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a);
IntVector operator*(const Integer& k, const IntVector& v);
std::string to_string(const IntVector& v);

/// Dense row-major integer matrix with exact entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix zeros(std::size_t rows, std::size_t cols);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols = 0);
  static IntMatrix from_columns(const std::vector<IntVector>& columns, std::size_t rows = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  IntVector col(std::size_t j) const;
  std::vector<IntVector> columns() const;
  void set_col(std::size_t j, const IntVector& v);

  IntMatrix transpose() const;
  IntMatrix select_rows(const std::vector<std::size_t>& which) const;
  IntMatrix select_cols(const std::vector<std::size_t>& which) const;

  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;
  bool is_symmetric() const;
  bool is_skew_symmetric() const;

  // Elementary operations, used by the Smith reduction.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor);
  /// col[target] += factor * col[source]
  void add_col_multiple(std::size_t target, std::size_t source, const Integer& factor);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  IntMatrix& operator+=(const IntMatrix& other);
  IntMatrix& operator-=(const IntMatrix& other);

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator+(IntMatrix a, const IntMatrix& b);
IntMatrix operator-(IntMatrix a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a);
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator*(const Integer& k, const IntMatrix& a);
IntVector operator*(const IntMatrix& a, const IntVector& v);

/// Block diagonal sum [[a, 0], [0, b]].
IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b);

/// Fraction-free (Bareiss) determinant. Throws DimensionMismatch when not square.
Integer determinant(const IntMatrix& m);
bool is_unimodular(const IntMatrix& m);

std::string to_string(const IntMatrix& m);
std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace torelli
