#pragma once

// Exact integer and rational linear algebra on top of GMP.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "latmin/error.hpp"

namespace latmin {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw Error(Status::DimensionMismatch, "matrix data size");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    if (rows.empty()) return {};
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw Error(Status::DimensionMismatch, "ragged rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::vector<T> row_vector(std::size_t i) const { return {row(i).begin(), row(i).end()}; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(Status::DimensionMismatch, "matrix product");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (sgn(a(i, k)) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

RatMatrix to_rational(const IntMatrix& m);
IntMatrix int_matrix(const std::vector<std::vector<long>>& rows);
IntVector int_vector(std::span<const long> v);
IntVector int_vector(std::initializer_list<long> v);

/// Canonical scaled form of a rational matrix: the smallest positive integer
/// `scale` such that scale * M is integral, and that integral matrix.
std::pair<Integer, IntMatrix> clear_denominators(const RatMatrix& m);

/// Smallest-content integer multiple of a rational vector, sign preserved.
IntVector primitive_integer(std::span<const Rational> v);
/// Divide by the gcd of the entries. Zero vectors are returned unchanged.
IntVector primitive(std::span<const Integer> v);
/// Flip sign so that the first nonzero entry is positive.
IntVector sign_normalized(IntVector v);

// ---------------------------------------------------------------------------
// Normal forms

struct HermiteForm {
  IntMatrix H;  ///< row-style Hermite normal form
  IntMatrix U;  ///< unimodular transform, H = U * M
  std::size_t rank = 0;
};

/// Row-style Hermite normal form. Nonzero rows come first; the pivot (first
/// nonzero entry) of each row is positive and lies strictly to the right of
/// the previous row's pivot; entries above a pivot lie in [0, pivot).
HermiteForm hnf(const IntMatrix& m);

/// Elementary divisors d1 | d2 | ... of the cokernel of the row lattice of M.
/// Returns min(rows, cols) entries; zero divisors (rank deficiency) come last.
std::vector<Integer> snf(const IntMatrix& m);

Integer determinant(const IntMatrix& m);   // Bareiss, exact
Rational determinant(const RatMatrix& m);
std::size_t rank(const IntMatrix& m);
std::size_t rank(const RatMatrix& m);

/// Basis of the right kernel {x : M x = 0}, as the columns of the result.
RatMatrix kernel(const RatMatrix& m);
/// Basis of the left kernel {y : y M = 0}, as the rows of the result.
RatMatrix left_kernel(const RatMatrix& m);

/// Solve M x = b. Returns nullopt when inconsistent; otherwise one solution.
std::optional<RatVector> solve(const RatMatrix& m, std::span<const Rational> b);

std::optional<RatMatrix> inverse(const RatMatrix& m);

// ---------------------------------------------------------------------------
// Quadratic forms

/// v^T G v.
Rational quadratic_value(const RatMatrix& g, std::span<const Rational> v);
Rational quadratic_value(const RatMatrix& g, std::span<const Integer> v);
Integer quadratic_value(const IntMatrix& g, std::span<const Integer> v);

struct PdResult {
  bool positive_definite = false;
  RatVector witness;  ///< set iff not PD: witness^T G witness <= 0
  Rational witness_value;
};

/// Symmetric Gaussian elimination. On the first nonpositive pivot, the vector
/// mapping to that pivot's unit direction is returned as witness.
PdResult pd_check(const RatMatrix& g);

/// A vector with v^T G v < 0, or nullopt if G is positive semidefinite.
std::optional<RatVector> negative_vector(const RatMatrix& g);

// ---------------------------------------------------------------------------
// Linear programming

enum class Sense { Maximize, Minimize };

struct LinearConstraint {
  RatVector coeffs;
  Rational rhs;
};

struct LPProblem {
  std::size_t variables = 0;
  std::vector<LinearConstraint> equalities;    ///< coeffs . x == rhs
  std::vector<LinearConstraint> inequalities;  ///< coeffs . x >= rhs
  RatVector objective;                         ///< empty means pure feasibility
  Sense sense = Sense::Maximize;
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct FarkasCertificate {
  RatVector eq_multipliers;    ///< free sign
  RatVector ineq_multipliers;  ///< nonnegative
};

struct LPResult {
  LPStatus status = LPStatus::Infeasible;
  RatVector point;  ///< optimal point, or a feasible point when unbounded
  Rational value;
  RatVector ray;    ///< improving ray when unbounded
  FarkasCertificate farkas;
};

/// Exact two-phase simplex with Bland's rule. Variables are free.
/// Every returned certificate has been re-verified by substitution.
LPResult lp_solve(const LPProblem& p);

/// min c.y subject to A y >= b (rows of `a`), y free, through the dual
/// simplex tableau with only dim(y) rows. Unbounded means the ray r satisfies
/// A r >= 0 and c.r < 0; the constraint set itself may still be empty.
/// Infeasible carries no certificate; use lp_solve for one.
LPResult minimize_over_inequalities(const std::vector<RatVector>& a, const RatVector& b, const RatVector& c);

/// y_eq . A_eq + y_in . A_in == 0, y_in >= 0, y_eq . b_eq + y_in . b_in > 0.
bool verify_farkas(const LPProblem& p, const FarkasCertificate& c);
bool is_feasible_point(const LPProblem& p, std::span<const Rational> x);

// ---------------------------------------------------------------------------

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

}  // namespace latmin
