#ifndef K3SALEM_POLYNOMIAL_HPP
#define K3SALEM_POLYNOMIAL_HPP

#include "k3salem/exact_linalg.hpp"

#include <string>
#include <vector>

namespace k3salem {

/// Dense univariate polynomial over the integers, coefficients in ascending
/// degree. The zero polynomial has no coefficients and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> ascending);
  IntPolynomial(std::initializer_list<long> ascending);

  static IntPolynomial monomial(const Integer& coeff, int degree);
  static IntPolynomial from_descending(const std::vector<Integer>& descending);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const Integer& leading() const { return coeffs_.back(); }
  /// Coefficient of t^i; zero beyond the degree.
  Integer coeff(int i) const;
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  std::vector<Integer> descending() const;

  Integer eval(const Integer& x) const;
  /// Sign of the value at num/den (den > 0), without forming a rational.
  int sign_at(const Integer& num, const Integer& den) const;
  int sign_at(const Rational& x) const { return sign_at(x.get_num(), x.get_den()); }
  /// Sign as x -> +infinity (positive) or -infinity (negative).
  int sign_at_infinity(bool positive) const;

  IntPolynomial derivative() const;
  Integer content() const;
  IntPolynomial primitive_part() const;

  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);
  IntPolynomial& operator*=(const Integer& scalar);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const Integer& s, IntPolynomial a) { return a *= s; }
  IntPolynomial operator-() const;
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

  /// Quotient when divisor divides *this exactly over the integers; nullopt-like
  /// behaviour is expressed by the bool out-parameter of try_divide.
  bool try_divide(const IntPolynomial& divisor, IntPolynomial& quotient) const;
  IntPolynomial exact_divide(const IntPolynomial& divisor) const;
  /// lc(b)^(deg a - deg b + 1) * a mod b, scaled by a positive factor only.
  IntPolynomial pseudo_remainder_positive(const IntPolynomial& divisor) const;

  /// Human readable, highest degree first, e.g. "t^2 - 3*t + 1".
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// Primitive gcd over Z[t] with positive leading coefficient.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// f / gcd(f, f'), primitive, positive leading coefficient.
IntPolynomial squarefree_part(const IntPolynomial& f);

}  // namespace k3salem

#endif  // K3SALEM_POLYNOMIAL_HPP
