#pragma once

// Exact scalar and dense-matrix types shared by every module.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vinberg {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense row-major matrix over an exact ring.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
      for (const auto& v : row) data_.push_back(v);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_symmetric() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  void swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

RatMatrix to_rational(const IntMatrix& m);

/// Hermite basis (lower triangular, positive diagonal) of the lattice spanned
/// by the columns of `gens`; throws std::domain_error if they do not span rank n.
IntMatrix column_hermite_basis(IntMatrix gens);

/// num / den in lowest terms; gmpxx leaves the two-argument constructor uncanonicalized.
inline Rational ratio(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Fraction-free (Bareiss) determinant.
Integer determinant(const IntMatrix& m);
Rational determinant(const RatMatrix& m);

/// Inverse over Q; throws std::domain_error when singular.
RatMatrix inverse(const RatMatrix& m);

/// Solves m x = b over Q; throws std::domain_error when singular.
RatVector solve(const RatMatrix& m, const RatVector& b);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
Integer gcd_of(const IntVector& v);

/// Floor of the square root of a non-negative integer.
Integer isqrt(const Integer& n);
bool is_perfect_square(const Integer& n);

/// Largest e with p^e | n (n != 0).
unsigned valuation(const Integer& n, const Integer& p);

/// Distinct prime divisors of |n| in increasing order (trial division).
std::vector<Integer> prime_divisors(const Integer& n);
bool is_prime(const Integer& n);

/// Squarefree integer in the same square class of Q* as q.
Integer square_class(const Rational& q);

std::string to_string(const Integer& n);
std::string to_string(const Rational& q);

/// x^T m y.
Integer bilinear(const IntMatrix& m, const IntVector& x, const IntVector& y);
Rational bilinear(const RatMatrix& m, const RatVector& x, const RatVector& y);

}  // namespace vinberg
