#include "k3salem/rs_lattice.hpp"

#include <optional>
#include <vector>
#include <array>

namespace k3salem {

namespace {

long powmod(long base, long exp, long mod) {
  unsigned __int128 result = 1;
  unsigned __int128 b = static_cast<unsigned long>(((base % mod) + mod) % mod);
  while (exp > 0) {
    if (exp & 1) result = result * b % static_cast<unsigned long>(mod);
    b = b * b % static_cast<unsigned long>(mod);
    exp >>= 1;
  }
  return static_cast<long>(result);
}

constexpr std::array<std::pair<int, int>, 7> kE8Edges = {{{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {0, 3}}};

}  // namespace

bool is_prime(long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (long d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

int legendre(long a, long p) {
  long r = powmod(a, (p - 1) / 2, p);
  if (r == 0) return 0;
  return r == 1 ? 1 : -1;
}

std::pair<long, long> find_q_gamma(long p) {
  if (p < 3 || !is_prime(p)) throw PreconditionError("find_q_gamma needs an odd prime");
  for (long q = 3; q < 1000000; q += 8) {
    if (q == p || !is_prime(q)) continue;
    if (legendre(-q, p) != -1) continue;
    for (long gamma = 0; gamma < q; ++gamma)
      if ((gamma * gamma + p) % q == 0) return {q, gamma};
    throw ArithmeticError("no square root of -p modulo q although (-q | p) = -1");
  }
  throw ArithmeticError("search for the auxiliary prime q exceeded its cap");
}

IntMatrix gram_H(const RSParams& params) {
  const long p = params.p;
  const long q = params.q;
  const long g = params.gamma;
  if (q % 8 != 3 || !is_prime(q)) throw PreconditionError("q must be a prime congruent to 3 mod 8");
  if ((g * g + p) % q != 0) throw PreconditionError("gamma^2 + p must vanish mod q");
  Integer last = 2 * (Integer(p) + Integer(g) * g);
  if (!mpz_divisible_ui_p(last.get_mpz_t(), static_cast<unsigned long>(q))) throw PreconditionError("2(p + gamma^2) not divisible by q");
  last /= q;
  IntMatrix h{{2, 1, 0, 0}, {1, (q + 1) / 2, 0, g}, {0, 0, p * ((q + 1) / 2), p}, {0, g, p, 0}};
  h(3, 3) = last;
  h = -h;
  if (determinant(h) != Integer(p) * p) throw ArithmeticError("H block has the wrong discriminant");
  if (signature(h).negative != 4) throw ArithmeticError("H block is not negative definite");
  return h;
}

IntMatrix gram_E8(long scale) {
  if (scale >= 0) throw PreconditionError("E8 scale must be negative");
  const long s = -scale;
  IntMatrix e(8, 8);
  for (int i = 0; i < 8; ++i) e(i, i) = -2 * s;
  for (auto [a, b] : kE8Edges) {
    e(a, b) = s;
    e(b, a) = s;
  }
  return e;
}

IntMatrix gram_U(long scale) {
  if (scale <= 0) throw PreconditionError("U scale must be positive");
  IntMatrix u(2, 2);
  u(0, 1) = scale;
  u(1, 0) = scale;
  return u;
}

std::size_t RSLattice::block_start(BasisTag::Kind kind, int block_index) const {
  for (std::size_t i = 0; i < tags.size(); ++i)
    if (tags[i].kind == kind && tags[i].block_index == block_index) return i;
  throw PreconditionError("lattice has no such block");
}

RSLattice build_lambda(long p, int sigma, std::optional<std::pair<long, long>> q_gamma) {
  if (p < 3 || !is_prime(p)) throw PreconditionError("p must be an odd prime");
  if (sigma < 1 || sigma > 10) throw PreconditionError("sigma must lie in [1, 10]");
  RSParams params;
  params.p = p;
  params.sigma = sigma;
  std::tie(params.q, params.gamma) = q_gamma ? *q_gamma : find_q_gamma(p);

  // sigma in {1,2}: H + E8(-1)^2; {3,4}: H^3 + E8(-1); {5,6}: H + E8(-1) + E8(-p);
  // {7,8}: H^3 + E8(-p); {9,10}: H + E8(-p)^2.
  const int row = (sigma + 1) / 2;
  const int h_count = (row == 2 || row == 4) ? 3 : 1;
  std::vector<long> e8_scales;
  switch (row) {
    case 1: e8_scales = {-1, -1}; break;
    case 2: e8_scales = {-1}; break;
    case 3: e8_scales = {-1, -p}; break;
    case 4: e8_scales = {-p}; break;
    default: e8_scales = {-p, -p}; break;
  }

  RSLattice rs;
  rs.params = params;
  std::vector<IntMatrix> blocks;
  const long u_scale = params.p_prime();
  blocks.push_back(gram_U(u_scale));
  for (int i = 1; i <= 2; ++i) rs.tags.push_back({BasisTag::Kind::UPair, 0, i, u_scale, "u" + std::to_string(i)});
  const IntMatrix h = gram_H(params);
  for (int b = 0; b < h_count; ++b) {
    blocks.push_back(h);
    for (int i = 1; i <= 4; ++i) {
      std::string name = "eta" + std::to_string(i);
      if (h_count > 1) name = "eta" + std::to_string(b + 1) + "_" + std::to_string(i);
      rs.tags.push_back({BasisTag::Kind::HBlock, b, i, -p, name});
    }
  }
  for (std::size_t b = 0; b < e8_scales.size(); ++b) {
    blocks.push_back(gram_E8(e8_scales[b]));
    for (int i = 1; i <= 8; ++i)
      rs.tags.push_back({BasisTag::Kind::E8Block, static_cast<int>(b), i, e8_scales[b], (b == 0 ? "e" : "e'") + std::to_string(i)});
  }
  rs.lattice = Lattice::hyperbolic(direct_sum(blocks));
  Integer expected;
  mpz_ui_pow_ui(expected.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(2 * sigma));
  if (abs(determinant(rs.lattice.gram())) != expected) throw ArithmeticError("lattice has the wrong discriminant");
  return rs;
}

namespace {

// a * b = m with a, b >= 2, uniform over such divisors a.
std::optional<std::pair<Integer, Integer>> random_split(const Integer& m, std::mt19937_64& rng) {
  if (m < 4 || !m.fits_slong_p()) return std::nullopt;
  const long mm = m.get_si();
  std::vector<long> divisors;
  for (long d = 2; d * d <= mm; ++d)
    if (mm % d == 0) {
      divisors.push_back(d);
      if (d * d != mm) divisors.push_back(mm / d);
    }
  if (divisors.empty()) return std::nullopt;
  const long a = divisors[std::uniform_int_distribution<std::size_t>(0, divisors.size() - 1)(rng)];
  return std::make_pair(Integer(a), Integer(mm / a));
}

}  // namespace

LatticeVector random_square2(const RSLattice& rs, std::mt19937_64& rng, const SquareTwoSampling& sampling) {
  const Lattice& l = rs.lattice;
  const std::size_t n = l.rank();
  const Integer two_pp = 2 * Integer(rs.params.p_prime());
  long box = sampling.box;
  LatticeVector v(n);
  for (long attempt = 0; attempt < sampling.max_attempts; ++attempt) {
    if (attempt > 0 && attempt % sampling.widen_every == 0) box *= 2;
    std::uniform_int_distribution<long> coord(-box, box);
    for (std::size_t i = 0; i < 2; ++i) v[i] = 0;
    for (std::size_t i = 2; i < n; ++i) v[i] = coord(rng);
    Integer rest = 2 - l.norm(v);
    if (!mpz_divisible_p(rest.get_mpz_t(), two_pp.get_mpz_t())) continue;
    const Integer m = rest / two_pp;
    if (sampling.split_u_part && rs.params.p_prime() == 1) {
      std::optional<std::pair<Integer, Integer>> ab = random_split(m, rng);
      if (!ab) continue;
      v[0] = ab->first;
      v[1] = ab->second;
      return v;
    }
    v[0] = m;
    v[1] = 1;
    return v;
  }
  throw BudgetExhausted("random_square2: attempt budget exhausted");
}

std::vector<LatticeVector> scaled_dual_basis(const Lattice& lattice, long p) {
  const auto inv = inverse_exact(lattice.gram());
  std::vector<LatticeVector> out;
  for (const auto& row : inv) {
    LatticeVector v(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) {
      Rational x = row[j] * p;
      if (x.get_den() != 1) throw ArithmeticError("p times the dual basis is not integral");
      v[j] = x.get_num();
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace k3salem
