#pragma once

// Exact integer and rational matrices. Entries are GMP integers/rationals,
// so nothing here can overflow.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "disc24/errors.hpp"

namespace disc24 {

using Int = mpz_class;
using Rat = mpq_class;
using IntVector = std::vector<Int>;
using RatVector = std::vector<Rat>;

template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const;
  void set_row(std::size_t i, const std::vector<T>& values);
  void append_row(const std::vector<T>& values);
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  Matrix transpose() const;
  bool is_symmetric() const;

  /// Rows [first, first + count).
  Matrix row_block(std::size_t first, std::size_t count) const;
  /// Block-diagonal sum.
  Matrix direct_sum(const Matrix& other) const;

  /// Compact "[[a,b],[c,d]]" rendering used in certificates.
  std::string to_string() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b);
template <typename T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b);
template <typename T>
Matrix<T> operator*(const T& scalar, const Matrix<T>& m);
/// Row vector times matrix.
template <typename T>
std::vector<T> operator*(const std::vector<T>& v, const Matrix<T>& m);
/// Matrix times column vector.
template <typename T>
std::vector<T> operator*(const Matrix<T>& m, const std::vector<T>& v);

template <typename T>
T dot(const std::vector<T>& a, const std::vector<T>& b);

RatMatrix to_rational(const IntMatrix& m);
/// Throws InvalidArgument if some entry is not an integer.
IntMatrix to_integer(const RatMatrix& m);

std::string to_string(const IntVector& v);
std::string to_string(const Rat& q);

struct SmithForm {
  IntMatrix diagonal;  // D
  IntMatrix left;      // U
  IntMatrix right;     // V
  /// Nonzero diagonal entries d1 | d2 | ... in order.
  IntVector invariant_factors() const;
  std::size_t rank() const { return invariant_factors().size(); }
};

/// U * M * V = D with D diagonal, d1 | d2 | ..., all di >= 0, U and V unimodular.
SmithForm smith_normal_form(const IntMatrix& m);

/// Row-style Hermite normal form of the lattice spanned by the rows; zero
/// rows are dropped, so the result is a basis of the row lattice.
IntMatrix hermite_row_basis(const IntMatrix& m);

/// Rows form a basis (in Hermite form) of the saturated kernel {x : M x = 0}.
IntMatrix kernel_basis(const IntMatrix& m);

Int determinant(const IntMatrix& m);
Rat determinant(const RatMatrix& m);
std::size_t rank(const IntMatrix& m);
/// Throws Degenerate for singular input.
RatMatrix inverse(const RatMatrix& m);
/// Inverse of a unimodular matrix; throws InvalidArgument otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);

struct Signature {
  std::size_t n_plus = 0;
  std::size_t n_minus = 0;
  std::size_t n_zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

std::string to_string(const Signature& s);

/// Exact inertia via symmetric congruence over Q. Throws NonSymmetric.
Signature signature_of_symmetric(const IntMatrix& g);

}  // namespace disc24
