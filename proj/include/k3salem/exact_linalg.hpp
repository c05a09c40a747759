#ifndef K3SALEM_EXACT_LINALG_HPP
#define K3SALEM_EXACT_LINALG_HPP

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace k3salem {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when a documented precondition of an operation is violated.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an exact computation hits a state that can only come from a bug
/// upstream (a division that should be exact is not, a matrix that should be
/// integral is not, ...).
class ArithmeticError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Dense integer row vector. Also serves as the coordinate vector of a lattice
/// element (see lattice.hpp).
class IntVector {
 public:
  IntVector() = default;
  explicit IntVector(std::size_t n) : entries_(n) {}
  IntVector(std::initializer_list<long> values);
  explicit IntVector(std::vector<Integer> values) : entries_(std::move(values)) {}

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  Integer& operator[](std::size_t i) { return entries_[i]; }
  const Integer& operator[](std::size_t i) const { return entries_[i]; }
  auto begin() { return entries_.begin(); }
  auto end() { return entries_.end(); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  const std::vector<Integer>& entries() const { return entries_; }

  bool is_zero() const;

  IntVector& operator+=(const IntVector& other);
  IntVector& operator-=(const IntVector& other);
  IntVector& operator*=(const Integer& scalar);
  IntVector operator-() const;

  friend IntVector operator+(IntVector a, const IntVector& b) { return a += b; }
  friend IntVector operator-(IntVector a, const IntVector& b) { return a -= b; }
  friend IntVector operator*(const Integer& s, IntVector a) { return a *= s; }

  friend bool operator==(const IntVector& a, const IntVector& b) { return a.entries_ == b.entries_; }
  /// Lexicographic on coordinates; shorter vectors first.
  friend std::strong_ordering operator<=>(const IntVector& a, const IntVector& b);

  std::string to_string() const;

 private:
  std::vector<Integer> entries_;
};

using RatVector = std::vector<Rational>;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::span<Integer> row_span(std::size_t i) { return {entries_.data() + i * cols_, cols_}; }
  std::span<const Integer> row_span(std::size_t i) const { return {entries_.data() + i * cols_, cols_}; }
  IntVector row(std::size_t i) const;
  void set_row(std::size_t i, const IntVector& v);
  void swap_rows(std::size_t a, std::size_t b);

  IntMatrix transpose() const;
  bool is_symmetric() const;
  Integer trace() const;
  /// Square submatrix on the given row/column indices.
  IntMatrix block(std::size_t first, std::size_t size) const;

  IntMatrix& operator+=(const IntMatrix& other);
  IntMatrix& operator-=(const IntMatrix& other);
  IntMatrix& operator*=(const Integer& scalar);
  IntMatrix operator-() const;

  friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) { return a += b; }
  friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) { return a -= b; }
  friend IntMatrix operator*(const Integer& s, IntMatrix a) { return a *= s; }
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

/// Row vector times matrix.
IntVector operator*(const IntVector& v, const IntMatrix& m);
/// Matrix times column vector (returned as a flat vector).
IntVector operator*(const IntMatrix& m, const IntVector& v);
Integer dot(const IntVector& a, const IntVector& b);

/// Block-diagonal direct sum.
IntMatrix direct_sum(const std::vector<IntMatrix>& blocks);

class IntPolynomial;

/// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
Integer determinant(const IntMatrix& m);

/// Monic det(tI - m) by Faddeev-LeVerrier; every division is checked exact.
IntPolynomial char_poly(const IntMatrix& m);

struct LllResult {
  IntMatrix gram;       ///< transform * input * transform^T
  IntMatrix transform;  ///< unimodular, rows are the reduced basis in input coordinates
  /// Gram-Schmidt data of the reduced basis: squared lengths and mu coefficients
  /// (mu(i, j) for j < i), exact.
  std::vector<Rational> gs_norms;
  std::vector<std::vector<Rational>> mu;
};

/// Integral LLL on a positive definite Gram matrix (no basis vectors needed).
/// delta is the Lovasz parameter, 1/4 < delta <= 1.
LllResult lll_reduce(const IntMatrix& gram, const Rational& delta = Rational(3, 4));

/// Exact solution of m x = rhs over the rationals.
RatVector solve_exact(const IntMatrix& m, const RatVector& rhs);

/// Exact inverse over the rationals, row-major.
std::vector<RatVector> inverse_exact(const IntMatrix& m);

/// Rank over the rationals.
std::size_t rank(const IntMatrix& m);

/// Result of the integer row echelon reduction u * a = echelon, u unimodular.
struct IntegerEchelon {
  IntMatrix unimodular;        ///< n x n
  IntMatrix echelon;           ///< n x k, rows >= rank are zero
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;  ///< pivot column of each of the first rank rows
};

/// Unimodular row reduction of an n x k integer matrix to row echelon form.
IntegerEchelon integer_echelon(const IntMatrix& a);

/// Sign of a Rational / Integer as -1, 0, 1.
inline int sign(const Integer& x) { return sgn(x); }
inline int sign(const Rational& x) { return sgn(x); }

/// Nearest integer, ties away from zero.
Integer round_nearest(const Rational& x);

}  // namespace k3salem

#endif  // K3SALEM_EXACT_LINALG_HPP
