#include "k3salem/salem.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>

namespace k3salem {

bool is_reciprocal(const IntPolynomial& phi) {
  if (phi.is_zero()) return false;
  const auto& c = phi.coefficients();
  return std::equal(c.begin(), c.end(), c.rbegin());
}

IntPolynomial trace_polynomial(const IntPolynomial& phi) {
  if (!is_reciprocal(phi) || phi.degree() % 2 != 0) throw PreconditionError("trace polynomial needs a reciprocal polynomial of even degree");
  const int d = phi.degree() / 2;
  // t^j + t^-j = T_j(s): T_0 = 2, T_1 = s, T_{j+1} = s T_j - T_{j-1}
  const IntPolynomial s{0, 1};
  IntPolynomial prev{2};
  IntPolynomial cur = s;
  IntPolynomial q = IntPolynomial::monomial(phi.coeff(d), 0);
  for (int j = 1; j <= d; ++j) {
    q += phi.coeff(d + j) * cur;
    IntPolynomial next = s * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return q;
}

IntPolynomial expand_trace_polynomial(const IntPolynomial& q) {
  const int d = q.degree();
  if (d < 0) return {};
  const IntPolynomial t2p1{1, 0, 1};
  IntPolynomial pow{1};
  IntPolynomial out;
  for (int i = 0; i <= d; ++i) {
    out += q.coeff(i) * (IntPolynomial::monomial(1, d - i) * pow);
    pow = pow * t2p1;
  }
  return out;
}

// ---------------------------------------------------------------- Sturm

namespace {

IntPolynomial divide_by_content(const IntPolynomial& f) {
  if (f.is_zero()) return f;
  Integer g = f.content();
  std::vector<Integer> c = f.coefficients();
  for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(c));
}

}  // namespace

SturmSequence::SturmSequence(const IntPolynomial& f) {
  if (f.is_zero()) throw PreconditionError("Sturm sequence of the zero polynomial");
  seq_.push_back(squarefree_part(f));
  if (seq_.front().degree() < 1) return;
  seq_.push_back(divide_by_content(seq_.front().derivative()));
  for (;;) {
    const auto& a = seq_[seq_.size() - 2];
    const auto& b = seq_.back();
    if (b.degree() < 1) break;
    IntPolynomial r = -a.pseudo_remainder_positive(b);
    if (r.is_zero()) break;
    seq_.push_back(divide_by_content(r));
  }
}

std::size_t SturmSequence::variations(const Endpoint& x) const {
  std::size_t v = 0;
  int last = 0;
  for (const auto& p : seq_) {
    int s = 0;
    switch (x.kind) {
      case Endpoint::Kind::NegInfinity: s = p.sign_at_infinity(false); break;
      case Endpoint::Kind::PosInfinity: s = p.sign_at_infinity(true); break;
      case Endpoint::Kind::Finite: s = p.sign_at(x.value); break;
    }
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

std::size_t SturmSequence::count(const Endpoint& lo, const Endpoint& hi) const {
  if (seq_.front().degree() < 1) return 0;
  const std::size_t vlo = variations(lo);
  const std::size_t vhi = variations(hi);
  if (vlo <= vhi) return 0;
  std::size_t n = vlo - vhi;
  // variations(x) counts as if just right of x, so a root at hi is included
  if (hi.kind == Endpoint::Kind::Finite && seq_.front().sign_at(hi.value) == 0) --n;
  return n;
}

std::size_t sturm_count(const IntPolynomial& q, const Endpoint& lo, const Endpoint& hi) { return SturmSequence(q).count(lo, hi); }

// ---------------------------------------------------------------- cyclotomic

namespace {

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

}  // namespace

IntPolynomial cyclotomic(unsigned n) {
  if (n == 0) throw PreconditionError("cyclotomic index must be positive");
  IntPolynomial f = IntPolynomial::monomial(1, static_cast<int>(n)) - IntPolynomial{1};
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0) f = f.exact_divide(cyclotomic(d));
  return f;
}

std::vector<unsigned> cyclotomic_indices_up_to_degree(int degree) {
  std::vector<unsigned> out;
  if (degree < 1) return out;
  // phi(n) >= sqrt(n / 2), so n <= 2 degree^2 covers everything
  const unsigned limit = 2u * static_cast<unsigned>(degree) * static_cast<unsigned>(degree) + 2u;
  for (unsigned n = 1; n <= limit; ++n)
    if (euler_phi(n) <= static_cast<unsigned>(degree)) out.push_back(n);
  return out;
}

CyclotomicScan cyclotomic_free(const IntPolynomial& phi) {
  CyclotomicScan scan;
  std::map<unsigned, IntPolynomial> cache;
  auto get = [&](auto&& self, unsigned n) -> const IntPolynomial& {
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    IntPolynomial f = IntPolynomial::monomial(1, static_cast<int>(n)) - IntPolynomial{1};
    for (unsigned d = 1; d < n; ++d)
      if (n % d == 0) f = f.exact_divide(self(self, d));
    return cache.emplace(n, std::move(f)).first->second;
  };
  for (unsigned n : cyclotomic_indices_up_to_degree(phi.degree())) {
    scan.tested.push_back(n);
    IntPolynomial q;
    if (phi.try_divide(get(get, n), q)) {
      scan.free = false;
      scan.dividing.push_back(n);
    }
  }
  return scan;
}

// ---------------------------------------------------------------- degree sieve

namespace {

using ModPoly = std::vector<std::uint64_t>;  // ascending, trimmed

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1;
  std::uint64_t e = p - 2;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

ModPoly mod_rem(ModPoly a, const ModPoly& b, std::uint64_t p) {
  trim(a);
  const std::uint64_t inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t f = a.back() * inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = (a[shift + i] + (p - f) * b[i]) % p;
    trim(a);
  }
  return a;
}

ModPoly mod_div(ModPoly a, const ModPoly& b, std::uint64_t p) {
  trim(a);
  if (a.size() < b.size()) return {};
  const std::uint64_t inv = inv_mod(b.back(), p);
  ModPoly q(a.size() - b.size() + 1);
  while (a.size() >= b.size()) {
    const std::uint64_t f = a.back() * inv % p;
    const std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = (a[shift + i] + (p - f) * b[i]) % p;
    trim(a);
  }
  return q;
}

ModPoly mod_mul(const ModPoly& a, const ModPoly& b, const ModPoly& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  ModPoly c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return mod_rem(std::move(c), m, p);
}

ModPoly mod_gcd(ModPoly a, ModPoly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    ModPoly r = mod_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

ModPoly mod_pow_x(std::uint64_t e, const ModPoly& base, const ModPoly& m, std::uint64_t p) {
  ModPoly result{1};
  ModPoly b = base;
  while (e) {
    if (e & 1) result = mod_mul(result, b, m, p);
    b = mod_mul(b, b, m, p);
    e >>= 1;
  }
  return result;
}

// Factor degrees of a squarefree polynomial mod p.
std::vector<int> distinct_degree(ModPoly f, std::uint64_t p) {
  std::vector<int> degrees;
  ModPoly h{0, 1};
  const ModPoly x{0, 1};
  for (int i = 1; 2 * i <= static_cast<int>(f.size()) - 1; ++i) {
    h = mod_pow_x(p, h, f, p);
    ModPoly hx = h;
    hx.resize(std::max<std::size_t>(hx.size(), 2));
    hx[1] = (hx[1] + p - 1) % p;
    trim(hx);
    ModPoly g = mod_gcd(f, hx, p);
    const int dg = static_cast<int>(g.size()) - 1;
    if (dg > 0) {
      for (int k = 0; k < dg / i; ++k) degrees.push_back(i);
      f = mod_div(f, g, p);
      h = mod_rem(h, f, p);
    }
  }
  if (f.size() > 1) degrees.push_back(static_cast<int>(f.size()) - 1);
  return degrees;
}

}  // namespace

SieveReport degree_pattern_sieve(const IntPolynomial& phi, int prime_budget) {
  const int n = phi.degree();
  if (n < 1) throw PreconditionError("sieve needs a polynomial of positive degree");
  if (phi.leading() != 1) throw PreconditionError("sieve needs a monic polynomial");
  if (squarefree_part(phi).degree() != n) throw PreconditionError("sieve needs a squarefree polynomial");
  SieveReport report;
  std::vector<bool> possible(static_cast<std::size_t>(n) + 1, true);
  int tried = 0;
  for (std::uint64_t p = 2; static_cast<int>(report.primes.size()) < prime_budget && tried < 20 * prime_budget; ++p) {
    bool prime = p >= 2;
    for (std::uint64_t d = 2; d * d <= p && prime; ++d)
      if (p % d == 0) prime = false;
    if (!prime) continue;
    ++tried;
    ModPoly f(static_cast<std::size_t>(n) + 1);
    Integer r;
    for (int i = 0; i <= n; ++i) {
      mpz_fdiv_r_ui(r.get_mpz_t(), phi.coeff(i).get_mpz_t(), p);
      f[static_cast<std::size_t>(i)] = r.get_ui();
    }
    ModPoly df(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) df[static_cast<std::size_t>(i - 1)] = f[static_cast<std::size_t>(i)] * (static_cast<std::uint64_t>(i) % p) % p;
    trim(df);
    if (df.empty() || mod_gcd(f, df, p).size() != 1) continue;  // p divides the discriminant
    report.primes.push_back(p);
    std::vector<bool> sums(static_cast<std::size_t>(n) + 1, false);
    sums[0] = true;
    for (int d : distinct_degree(f, p))
      for (int s = n; s >= d; --s)
        if (sums[static_cast<std::size_t>(s - d)]) sums[static_cast<std::size_t>(s)] = true;
    bool proper = false;
    for (int s = 1; s < n; ++s) {
      possible[static_cast<std::size_t>(s)] = possible[static_cast<std::size_t>(s)] && sums[static_cast<std::size_t>(s)];
      proper = proper || possible[static_cast<std::size_t>(s)];
    }
    if (!proper) {
      report.outcome = SieveOutcome::ProvedIrreducible;
      return report;
    }
  }
  return report;
}

// ---------------------------------------------------------------- roots

namespace {

double log_rational(const Rational& x) {
  long e_num = 0;
  long e_den = 0;
  double m_num = mpz_get_d_2exp(&e_num, x.get_num().get_mpz_t());
  double m_den = mpz_get_d_2exp(&e_den, x.get_den().get_mpz_t());
  return std::log(m_num) - std::log(m_den) + static_cast<double>(e_num - e_den) * std::log(2.0);
}

}  // namespace

RootEnclosure leading_root(const IntPolynomial& phi, const Rational& rel_tol) {
  const SturmSequence sturm(phi);
  const IntPolynomial& sq = sturm.squarefree();
  if (sturm.count(Endpoint::at(1), Endpoint::pos_inf()) == 0) throw PreconditionError("polynomial has no real root greater than 1");
  Integer big = 0;
  for (const auto& c : sq.coefficients())
    if (abs(c) > big) big = abs(c);
  Rational lo = 1;
  Rational hi = 1 + Rational(big, abs(sq.leading()));
  hi.canonicalize();

  auto finish = [&](const Rational& a, const Rational& b) {
    RootEnclosure e;
    e.lo = a;
    e.hi = b;
    Rational mid = (a + b) / 2;
    e.value = mid.get_d();
    e.entropy = log_rational(mid);
    e.entropy_error = Rational((b - a) / a).get_d();
    return e;
  };

  // isolate the largest root with Sturm counts
  while (sturm.count(Endpoint::at(lo), Endpoint::at(hi)) > 1) {
    Rational mid = (lo + hi) / 2;
    if (sturm.count(Endpoint::at(mid), Endpoint::pos_inf()) >= 1) {
      lo = mid;
    } else if (sq.sign_at(mid) == 0) {
      return finish(mid, mid);
    } else {
      hi = mid;
    }
  }
  int slo = sq.sign_at(lo);
  while (slo == 0) {
    // lo = 1 is itself a root; move lo inside the isolating interval
    Rational mid = (lo + hi) / 2;
    int s = sq.sign_at(mid);
    if (s == 0) return finish(mid, mid);
    if (sturm.count(Endpoint::at(mid), Endpoint::at(hi)) == 1) {
      lo = mid;
      slo = s;
    } else {
      hi = mid;
    }
  }
  while (hi - lo > rel_tol * lo) {
    Rational mid = (lo + hi) / 2;
    int s = sq.sign_at(mid);
    if (s == 0) return finish(mid, mid);
    if (s == slo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return finish(lo, hi);
}

std::string to_string(Irreducibility i) { return i == Irreducibility::SieveProved ? "sieve-proved" : "context-implied"; }

SalemVerdict salem_check(const IntPolynomial& phi, SalemContext context, int prime_budget, const Rational& rel_tol) {
  SalemVerdict v;
  auto reject = [&](std::string reason) {
    v.accepted = false;
    v.reason = std::move(reason);
    return v;
  };
  if (phi.degree() < 2 || phi.degree() % 2 != 0) return reject("degree is not even and at least 2");
  if (phi.leading() != 1) return reject("not monic");
  if (!is_reciprocal(phi)) return reject("not reciprocal");

  SalemCertificate cert;
  cert.poly = phi;
  const CyclotomicScan cyc = cyclotomic_free(phi);
  cert.cyclotomic_tested = cyc.tested;
  if (!cyc.free) return reject("cyclotomic factor found");
  cert.trace_poly = trace_polynomial(phi);
  const std::size_t d = static_cast<std::size_t>(cert.trace_poly.degree());
  const SturmSequence sturm(cert.trace_poly);
  if (static_cast<std::size_t>(sturm.squarefree().degree()) != d) return reject("repeated roots");
  cert.roots_above_two = sturm.count(Endpoint::at(2), Endpoint::pos_inf());
  cert.roots_in_unit_range = sturm.count(Endpoint::at(-2), Endpoint::at(2));
  if (cert.roots_above_two != 1 || cert.roots_in_unit_range != d - 1) return reject("wrong root counts");

  const SieveReport sieve = degree_pattern_sieve(phi, prime_budget);
  cert.sieve_primes = sieve.primes;
  if (sieve.outcome == SieveOutcome::ProvedIrreducible) {
    cert.irreducibility = Irreducibility::SieveProved;
  } else if (context == SalemContext::FromK3Automorphism) {
    cert.irreducibility = Irreducibility::ContextImplied;
  } else {
    return reject("irreducibility unresolved");
  }
  cert.root = leading_root(phi, rel_tol);
  v.accepted = true;
  v.certificate = std::move(cert);
  return v;
}

std::string format_root(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

}  // namespace k3salem
