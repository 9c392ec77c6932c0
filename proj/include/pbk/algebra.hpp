#pragma once

// Exact arithmetic: Laurent polynomials over Z, integer matrices, and the
// signature/rank computations built on rational elimination.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace pbk {

using Integer = mpz_class;
using Rational = mpq_class;

class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(int min_degree, std::vector<Integer> coeffs);

  /// c * t^k
  static LaurentPoly monomial(const Integer& c, int k);

  bool is_zero() const { return coeffs_.empty(); }
  int min_degree() const { return min_degree_; }
  /// Highest exponent; equals min_degree() - 1 for zero.
  int max_degree() const { return min_degree_ + static_cast<int>(coeffs_.size()) - 1; }
  int span() const { return is_zero() ? 0 : max_degree() - min_degree(); }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  Integer coeff(int degree) const;
  const Integer& leading() const { return coeffs_.back(); }
  const Integer& trailing() const { return coeffs_.front(); }

  Integer eval_at_one() const;

  LaurentPoly shifted(int k) const;
  /// Shifted to min degree 0 with a positive leading coefficient.
  LaurentPoly normalized() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(LaurentPoly a);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.min_degree_ == b.min_degree_ && a.coeffs_ == b.coeffs_;
  }

  /// Low-to-high display, e.g. "1 - t + t^2", "t^-1 - 1".
  std::string to_string() const;

 private:
  void trim();

  int min_degree_ = 0;
  std::vector<Integer> coeffs_;
};

/// The indeterminate t.
LaurentPoly t_var();

/// p == +-t^k * q for some k.
bool equal_up_to_unit(const LaurentPoly& p, const LaurentPoly& q);

/// p == +-t^k.
bool is_unit(const LaurentPoly& p);

/// Exact quotient a / b in Z[t^{+-1}]; throws InternalError if b does not divide a.
LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b);

template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n, T(0));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transposed() const {
    Matrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using PolyMatrix = Matrix<LaurentPoly>;

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix int_matrix(const std::vector<std::vector<long>>& rows);

/// A - t A^T
PolyMatrix alexander_matrix(const IntMatrix& a);

/// Exact determinant by fraction-free (Bareiss) elimination over Z[t].
LaurentPoly poly_det(const PolyMatrix& m);

/// Exact integer determinant (Bareiss).
Integer int_det(const IntMatrix& m);

/// Signature of a symmetric integer matrix by rational congruence diagonalisation.
int symmetric_signature(const IntMatrix& s);

/// (positive, negative, zero) inertia counts of a symmetric matrix.
struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};
Inertia symmetric_inertia(const IntMatrix& s);

std::size_t matrix_rank_rational(const IntMatrix& m);

}  // namespace pbk
