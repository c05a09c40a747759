#ifndef K3SALEM_SALEM_HPP
#define K3SALEM_SALEM_HPP

#include "k3salem/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace k3salem {

bool is_reciprocal(const IntPolynomial& phi);

/// Q of degree d with phi(t) = t^d Q(t + 1/t), for reciprocal phi of degree 2d.
IntPolynomial trace_polynomial(const IntPolynomial& phi);

/// t^d Q(t + 1/t); inverse of trace_polynomial.
IntPolynomial expand_trace_polynomial(const IntPolynomial& q);

/// Interval endpoint: a rational or +-infinity.
struct Endpoint {
  enum class Kind { NegInfinity, Finite, PosInfinity };
  Kind kind = Kind::Finite;
  Rational value;

  static Endpoint neg_inf() { return {Kind::NegInfinity, 0}; }
  static Endpoint pos_inf() { return {Kind::PosInfinity, 0}; }
  static Endpoint at(const Rational& x) { return {Kind::Finite, x}; }
};

/// Sturm sequence of the squarefree part of a polynomial.
class SturmSequence {
 public:
  explicit SturmSequence(const IntPolynomial& f);
  /// Number of distinct real roots in the open interval (lo, hi).
  std::size_t count(const Endpoint& lo, const Endpoint& hi) const;
  const IntPolynomial& squarefree() const { return seq_.front(); }

 private:
  std::size_t variations(const Endpoint& x) const;
  std::vector<IntPolynomial> seq_;
};

std::size_t sturm_count(const IntPolynomial& q, const Endpoint& lo, const Endpoint& hi);

/// n-th cyclotomic polynomial.
IntPolynomial cyclotomic(unsigned n);

/// Every n with Euler phi(n) <= degree, ascending.
std::vector<unsigned> cyclotomic_indices_up_to_degree(int degree);

struct CyclotomicScan {
  bool free = true;
  std::vector<unsigned> tested;
  std::vector<unsigned> dividing;
};

CyclotomicScan cyclotomic_free(const IntPolynomial& phi);

enum class SieveOutcome { ProvedIrreducible, Inconclusive };

struct SieveReport {
  SieveOutcome outcome = SieveOutcome::Inconclusive;
  std::vector<std::uint64_t> primes;  ///< primes used, in order
};

/// Factor-degree patterns modulo small primes (distinct-degree factorization);
/// proves irreducibility when no proper subset sum of factor degrees survives
/// every prime.
SieveReport degree_pattern_sieve(const IntPolynomial& phi, int prime_budget = 25);

/// Largest real root > 1, enclosed in [lo, hi] with hi - lo <= rel_tol * lo.
struct RootEnclosure {
  Rational lo;
  Rational hi;
  double value = 0;
  double entropy = 0;        ///< natural log of the midpoint
  double entropy_error = 0;  ///< bound on |log(lambda) - entropy|
};

RootEnclosure leading_root(const IntPolynomial& phi, const Rational& rel_tol = Rational(1, 1000000000000));

enum class SalemContext { FromK3Automorphism, Standalone };
enum class Irreducibility { SieveProved, ContextImplied };

std::string to_string(Irreducibility i);

struct SalemCertificate {
  IntPolynomial poly;
  IntPolynomial trace_poly;
  RootEnclosure root;
  std::size_t roots_above_two = 0;
  std::size_t roots_in_unit_range = 0;  ///< trace roots in (-2, 2)
  std::vector<unsigned> cyclotomic_tested;
  Irreducibility irreducibility = Irreducibility::SieveProved;
  std::vector<std::uint64_t> sieve_primes;
};

struct SalemVerdict {
  bool accepted = false;
  std::string reason;  ///< empty when accepted
  std::optional<SalemCertificate> certificate;
};

SalemVerdict salem_check(const IntPolynomial& phi, SalemContext context = SalemContext::Standalone, int prime_budget = 25,
                         const Rational& rel_tol = Rational(1, 1000000000000));

/// Decimal rendering of a positive double with significant digits, e.g. 4.2539e+100.
std::string format_root(double x, int digits = 10);

}  // namespace k3salem

#endif  // K3SALEM_SALEM_HPP
