#include "disc24/exact_linalg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace disc24 {

template <typename T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

template <typename T>
Matrix<T> Matrix<T>::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

template <typename T>
Matrix<T> Matrix<T>::from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

template <typename T>
std::vector<T> Matrix<T>::row(std::size_t i) const {
  return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                        data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

template <typename T>
void Matrix<T>::set_row(std::size_t i, const std::vector<T>& values) {
  if (values.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "row length");
  std::copy(values.begin(), values.end(), data_.begin() + static_cast<std::ptrdiff_t>(i * cols_));
}

template <typename T>
void Matrix<T>::append_row(const std::vector<T>& values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "row length");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

template <typename T>
void Matrix<T>::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

template <typename T>
void Matrix<T>::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

template <typename T>
Matrix<T> Matrix<T>::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

template <typename T>
bool Matrix<T>::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

template <typename T>
Matrix<T> Matrix<T>::row_block(std::size_t first, std::size_t count) const {
  Matrix m(count, cols_);
  for (std::size_t i = 0; i < count; ++i) m.set_row(i, row(first + i));
  return m;
}

template <typename T>
Matrix<T> Matrix<T>::direct_sum(const Matrix& other) const {
  Matrix m(rows_ + other.rows_, cols_ + other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
  for (std::size_t i = 0; i < other.rows_; ++i)
    for (std::size_t j = 0; j < other.cols_; ++j) m(rows_ + i, cols_ + j) = other(i, j);
  return m;
}

namespace {
std::string entry_string(const Int& v) { return v.get_str(); }
std::string entry_string(const Rat& v) { return v.get_str(); }
}  // namespace

template <typename T>
std::string Matrix<T>::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) out += ",";
    out += "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out += ",";
      out += entry_string((*this)(i, j));
    }
    out += "]";
  }
  return out + "]";
}

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "matrix product");
  Matrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

template <typename T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::DimensionMismatch, "matrix sum");
  Matrix<T> c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

template <typename T>
Matrix<T> operator*(const T& scalar, const Matrix<T>& m) {
  Matrix<T> c(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) c(i, j) = scalar * m(i, j);
  return c;
}

template <typename T>
std::vector<T> operator*(const std::vector<T>& v, const Matrix<T>& m) {
  if (v.size() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "vector-matrix product");
  std::vector<T> out(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m(i, j);
  }
  return out;
}

template <typename T>
std::vector<T> operator*(const Matrix<T>& m, const std::vector<T>& v) {
  if (v.size() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector product");
  std::vector<T> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

template <typename T>
T dot(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "dot product");
  T s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

template class Matrix<Int>;
template class Matrix<Rat>;
template IntMatrix operator*(const IntMatrix&, const IntMatrix&);
template RatMatrix operator*(const RatMatrix&, const RatMatrix&);
template IntMatrix operator+(const IntMatrix&, const IntMatrix&);
template RatMatrix operator+(const RatMatrix&, const RatMatrix&);
template IntMatrix operator*(const Int&, const IntMatrix&);
template RatMatrix operator*(const Rat&, const RatMatrix&);
template IntVector operator*(const IntVector&, const IntMatrix&);
template RatVector operator*(const RatVector&, const RatMatrix&);
template IntVector operator*(const IntMatrix&, const IntVector&);
template RatVector operator*(const RatMatrix&, const RatVector&);
template Int dot(const IntVector&, const IntVector&);
template Rat dot(const RatVector&, const RatVector&);

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

IntMatrix to_integer(const RatMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).get_den() != 1) throw Error(ErrorCode::InvalidArgument, "non-integral entry");
      r(i, j) = m(i, j).get_num();
    }
  return r;
}

std::string to_string(const IntVector& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].get_str();
  }
  return out + "]";
}

std::string to_string(const Rat& q) { return q.get_str(); }

std::string to_string(const Signature& s) {
  std::ostringstream os;
  os << "(" << s.n_plus << "," << s.n_minus << "," << s.n_zero << ")";
  return os.str();
}

// ---------------------------------------------------------------------------
// Smith normal form

IntVector SmithForm::invariant_factors() const {
  IntVector out;
  const std::size_t k = std::min(diagonal.rows(), diagonal.cols());
  for (std::size_t i = 0; i < k; ++i)
    if (diagonal(i, i) != 0) out.push_back(diagonal(i, i));
  return out;
}

namespace {

// row_a += q * row_b (on A and on the row-tracking matrix)
void add_row(IntMatrix& a, std::size_t dst, std::size_t src, const Int& q) {
  for (std::size_t j = 0; j < a.cols(); ++j) a(dst, j) += q * a(src, j);
}

void add_col(IntMatrix& a, std::size_t dst, std::size_t src, const Int& q) {
  for (std::size_t i = 0; i < a.rows(); ++i) a(i, dst) += q * a(i, src);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);
  const std::size_t k = std::min(rows, cols);

  for (std::size_t t = 0; t < k; ++t) {
    bool done = false;
    while (true) {
      // smallest nonzero entry of the trailing block becomes the pivot
      std::size_t pi = rows, pj = cols;
      Int best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (a(i, j) == 0) continue;
          Int mag = abs(a(i, j));
          if (pi == rows || mag < best) {
            best = mag;
            pi = i;
            pj = j;
          }
        }
      if (pi == rows) {
        done = true;
        break;
      }
      a.swap_rows(t, pi);
      u.swap_rows(t, pi);
      a.swap_cols(t, pj);
      v.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        Int q = a(i, t) / a(t, t);  // truncating: remainder is smaller than the pivot
        add_row(a, i, t, -q);
        add_row(u, i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        Int q = a(t, j) / a(t, t);
        add_col(a, j, t, -q);
        add_col(v, j, t, -q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // divisibility condition on the trailing block
      std::size_t bad_row = rows;
      for (std::size_t i = t + 1; i < rows && bad_row == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(i, j) % a(t, t) != 0) {
            bad_row = i;
            break;
          }
      if (bad_row == rows) break;
      add_row(a, t, bad_row, Int(1));
      add_row(u, t, bad_row, Int(1));
    }
    if (done) break;
    if (a(t, t) < 0) {
      for (std::size_t j = 0; j < cols; ++j) a(t, j) = -a(t, j);
      for (std::size_t j = 0; j < rows; ++j) u(t, j) = -u(t, j);
    }
  }
  return SmithForm{std::move(a), std::move(u), std::move(v)};
}

// ---------------------------------------------------------------------------
// Hermite form and kernels

IntMatrix hermite_row_basis(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    while (true) {
      std::size_t pi = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (a(i, c) != 0 && (pi == rows || abs(a(i, c)) < abs(a(pi, c)))) pi = i;
      if (pi == rows) break;
      a.swap_rows(r, pi);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (a(i, c) == 0) continue;
        Int q = a(i, c) / a(r, c);
        add_row(a, i, r, -q);
        if (a(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (a(r, c) == 0) continue;
    if (a(r, c) < 0)
      for (std::size_t j = 0; j < cols; ++j) a(r, j) = -a(r, j);
    for (std::size_t i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(), a(r, c).get_mpz_t());
      if (q != 0) add_row(a, i, r, -q);
    }
    ++r;
  }
  return a.row_block(0, r);
}

IntMatrix kernel_basis(const IntMatrix& m) {
  if (m.rows() == 0) return IntMatrix::identity(m.cols());
  SmithForm snf = smith_normal_form(m);
  const std::size_t r = snf.rank();
  IntMatrix k(m.cols() - r, m.cols());
  for (std::size_t i = r; i < m.cols(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) k(i - r, j) = snf.right(j, i);
  if (k.rows() == 0) return k;
  return hermite_row_basis(k);
}

// ---------------------------------------------------------------------------
// Determinants, rank, inverses

Int determinant(const IntMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination
  IntMatrix a = m;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t s = k + 1;
      while (s < n && a(s, k) == 0) ++s;
      if (s == n) return 0;
      a.swap_rows(k, s);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Rat determinant(const RatMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  RatMatrix a = m;
  const std::size_t n = a.rows();
  Rat det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      a.swap_rows(k, p);
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rat f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

std::size_t rank(const IntMatrix& m) {
  if (m.empty()) return 0;
  return smith_normal_form(m).rank();
}

RatMatrix inverse(const RatMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) throw Error(ErrorCode::Degenerate, "singular matrix");
    a.swap_rows(k, p);
    inv.swap_rows(k, p);
    Rat pivot = a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) /= pivot;
      inv(k, j) /= pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      Rat f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  if (abs(determinant(m)) != 1) throw Error(ErrorCode::InvalidArgument, "matrix is not unimodular");
  return to_integer(inverse(to_rational(m)));
}

// ---------------------------------------------------------------------------
// Signature

Signature signature_of_symmetric(const IntMatrix& g) {
  if (!g.is_symmetric()) throw Error(ErrorCode::NonSymmetric, "Gram matrix is not symmetric");
  RatMatrix a = to_rational(g);
  const std::size_t n = a.rows();
  Signature sig;
  std::size_t k = 0;

  auto sym_swap = [&](std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    a.swap_cols(i, j);
  };

  while (k < n) {
    std::size_t p = k;
    while (p < n && a(p, p) == 0) ++p;
    if (p == n) {
      // zero diagonal: find an off-diagonal entry and make a nonzero diagonal
      std::size_t oi = n, oj = n;
      for (std::size_t i = k; i < n && oi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (a(i, j) != 0) {
            oi = i;
            oj = j;
            break;
          }
      if (oi == n) {
        sig.n_zero += n - k;
        break;
      }
      // e_i -> e_i + e_j: new a(i,i) = 2 a(i,j)
      for (std::size_t c = 0; c < n; ++c) a(oi, c) += a(oj, c);
      for (std::size_t r = 0; r < n; ++r) a(r, oi) += a(r, oj);
      p = oi;
    }
    sym_swap(k, p);
    const Rat d = a(k, k);
    if (d > 0)
      ++sig.n_plus;
    else
      ++sig.n_minus;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rat f = a(i, k) / d;
      for (std::size_t c = k; c < n; ++c) a(i, c) -= f * a(k, c);
      for (std::size_t r = k; r < n; ++r) a(r, i) -= f * a(r, k);
    }
    ++k;
  }
  return sig;
}

}  // namespace disc24
