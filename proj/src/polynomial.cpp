#include "k3salem/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace k3salem {

IntPolynomial::IntPolynomial(std::vector<Integer> ascending) : coeffs_(std::move(ascending)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> ascending) {
  for (long c : ascending) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::monomial(const Integer& coeff, int degree) {
  std::vector<Integer> c(static_cast<std::size_t>(degree) + 1);
  c.back() = coeff;
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::from_descending(const std::vector<Integer>& descending) {
  return IntPolynomial(std::vector<Integer>(descending.rbegin(), descending.rend()));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPolynomial::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

std::vector<Integer> IntPolynomial::descending() const {
  return std::vector<Integer>(coeffs_.rbegin(), coeffs_.rend());
}

Integer IntPolynomial::eval(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int IntPolynomial::sign_at(const Integer& num, const Integer& den) const {
  // den^deg * f(num/den) = sum c_i num^i den^(deg-i), evaluated by Horner in
  // homogeneous form.
  if (is_zero()) return 0;
  Integer acc = coeffs_.back();
  Integer den_pow = 1;
  for (int i = degree() - 1; i >= 0; --i) {
    den_pow *= den;
    acc = acc * num + coeffs_[static_cast<std::size_t>(i)] * den_pow;
  }
  return sgn(acc);
}

int IntPolynomial::sign_at_infinity(bool positive) const {
  if (is_zero()) return 0;
  int s = sgn(leading());
  if (!positive && degree() % 2 == 1) s = -s;
  return s;
}

IntPolynomial IntPolynomial::derivative() const {
  if (degree() < 1) return {};
  std::vector<Integer> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPolynomial(std::move(d));
}

Integer IntPolynomial::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  Integer g = content();
  if (leading() < 0) g = -g;
  std::vector<Integer> c(coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) mpz_divexact(c[i].get_mpz_t(), coeffs_[i].get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(c));
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const Integer& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

bool IntPolynomial::try_divide(const IntPolynomial& divisor, IntPolynomial& quotient) const {
  if (divisor.is_zero()) throw PreconditionError("polynomial division by zero");
  if (is_zero()) {
    quotient = {};
    return true;
  }
  if (degree() < divisor.degree()) return false;
  std::vector<Integer> rem = coeffs_;
  std::vector<Integer> q(static_cast<std::size_t>(degree() - divisor.degree()) + 1);
  const Integer& lc = divisor.leading();
  const int dd = divisor.degree();
  Integer r;
  for (int i = degree() - dd; i >= 0; --i) {
    Integer& top = rem[static_cast<std::size_t>(i + dd)];
    if (top == 0) continue;
    mpz_fdiv_qr(q[static_cast<std::size_t>(i)].get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
    if (r != 0) return false;
    const Integer& qi = q[static_cast<std::size_t>(i)];
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i + j)] -= qi * divisor.coeffs_[static_cast<std::size_t>(j)];
  }
  for (const auto& c : rem) {
    if (c != 0) return false;
  }
  quotient = IntPolynomial(std::move(q));
  return true;
}

IntPolynomial IntPolynomial::exact_divide(const IntPolynomial& divisor) const {
  IntPolynomial q;
  if (!try_divide(divisor, q)) throw ArithmeticError("polynomial division is not exact");
  return q;
}

IntPolynomial IntPolynomial::pseudo_remainder_positive(const IntPolynomial& divisor) const {
  if (divisor.is_zero()) throw PreconditionError("pseudo-remainder by zero");
  if (degree() < divisor.degree()) return *this;
  const Integer lc = abs(divisor.leading());
  const bool negative_lc = divisor.leading() < 0;
  std::vector<Integer> rem = coeffs_;
  const int dd = divisor.degree();
  // Work with |lc| so every scaling step multiplies by a positive number:
  // rem <- |lc| * rem - sign(lc) * top * t^k * divisor.
  for (int i = degree(); i >= dd; --i) {
    Integer top = rem[static_cast<std::size_t>(i)];
    for (auto& c : rem) c *= lc;
    if (top == 0) continue;
    if (negative_lc) top = -top;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i - dd + j)] -= top * divisor.coeffs_[static_cast<std::size_t>(j)];
  }
  return IntPolynomial(std::move(rem));
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Integer& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) {
      out << mag.get_str();
      if (i > 0) out << "*";
    }
    if (i >= 1) out << var;
    if (i >= 2) out << "^" << i;
  }
  return out.str();
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial x = a.primitive_part();
  IntPolynomial y = b.primitive_part();
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPolynomial r = x.pseudo_remainder_positive(y).primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  return x.primitive_part();
}

IntPolynomial squarefree_part(const IntPolynomial& f) {
  if (f.degree() < 1) return f.primitive_part();
  IntPolynomial g = gcd(f, f.derivative());
  IntPolynomial q = f.primitive_part();
  if (g.degree() > 0) q = q.exact_divide(g);
  return q.primitive_part();
}

}  // namespace k3salem
