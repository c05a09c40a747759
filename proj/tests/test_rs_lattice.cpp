#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "k3salem/rs_lattice.hpp"
#include "support.hpp"

using namespace k3salem;
using namespace k3salem::testing;

namespace {

long powmod(long a, long e, long m) {
  long r = 1;
  a %= m;
  if (a < 0) a += m;
  for (; e > 0; e >>= 1) {
    if (e & 1) r = r * a % m;
    a = a * a % m;
  }
  return r;
}

// Euler's criterion
int euler(long a, long p) {
  const long r = powmod(a, (p - 1) / 2, p);
  return r == 0 ? 0 : (r == 1 ? 1 : -1);
}

}  // namespace

TEST_CASE("primes and Legendre symbols") {
  CHECK(is_prime(2));
  CHECK(is_prime(17389));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  for (long p : {3L, 5L, 7L, 11L, 13L, 59L, 101L})
    for (long a = -30; a <= 30; ++a) CHECK(legendre(a, p) == euler(a, p));
}

TEST_CASE("q and gamma") {
  CHECK(find_q_gamma(7) == std::pair<long, long>{11, 2});
  CHECK(find_q_gamma(17389) == std::pair<long, long>{59, 4});
  for (long p : {3L, 5L, 11L, 13L, 17L, 19L, 101L, 499L}) {
    const auto [q, gamma] = find_q_gamma(p);
    CHECK(is_prime(q));
    CHECK(q % 8 == 3);
    CHECK(euler(-q, p) == -1);
    CHECK((gamma * gamma + p) % q == 0);
    // minimality: no smaller q qualifies
    for (long s = 3; s < q; s += 8)
      if (is_prime(s)) CHECK(euler(-s, p) != -1);
  }
}

TEST_CASE("H block Gram matrices") {
  const Json x7 = reference("x7_reference.json");
  CHECK(gram_H({7, 1, 11, 2}) == matrix_from_json(x7.at("gram_H")));
  CHECK(gram_H({7, 1, 11, 2}) == IntMatrix{{-2, -1, 0, 0}, {-1, -6, 0, -2}, {0, 0, -42, -7}, {0, -2, -7, -2}});
  const Json s10 = reference("sigma10_p17389_reference.json");
  CHECK(gram_H({17389, 10, 59, 4}) == matrix_from_json(s10.at("gram_H")));
  CHECK(determinant(gram_H({7, 1, 11, 2})) == 49);
  for (long p : {3L, 7L, 13L, 17389L}) {
    const auto [q, gamma] = find_q_gamma(p);
    const IntMatrix neg = -gram_H({p, 1, q, gamma});
    for (std::size_t k = 1; k <= 4; ++k) CHECK(determinant(neg.block(0, k)) > 0);
    CHECK(determinant(neg) == Integer(p) * p);
  }
}

TEST_CASE("E8 and U blocks") {
  const IntMatrix e8 = gram_E8(-1);
  for (std::size_t i = 0; i < 8; ++i) CHECK(e8(i, i) == -2);
  CHECK(e8(0, 3) == 1);
  CHECK(determinant(e8) == 1);
  Integer p8 = 1;
  for (int i = 0; i < 8; ++i) p8 *= 7;
  CHECK(determinant(gram_E8(-7)) == p8);
  CHECK(gram_U(5) == IntMatrix{{0, 5}, {5, 0}});
  CHECK_THROWS_AS(gram_E8(2), PreconditionError);
}

TEST_CASE("supersingular lattices") {
  const RSLattice r7 = build_lambda(7, 1);
  CHECK(determinant(r7.lattice.gram()) == -49);
  CHECK(r7.tags[0].name == "u1");
  CHECK(r7.tags[2].name == "eta1");
  CHECK(r7.tags[6].name == "e1");
  CHECK(r7.tags[14].name == "e'1");
  CHECK(r7.block_start(BasisTag::Kind::E8Block, 1) == 14);

  const RSLattice r11 = build_lambda(11, 5);
  CHECK(abs(determinant(r11.lattice.gram())) == 25937424601L);  // 11^10

  const RSLattice big = build_lambda(17389, 10);
  CHECK(big.lattice.gram()(0, 1) == 17389);
  CHECK(big.lattice.gram()(6, 6) == -2 * 17389);

  for (long p : {3L, 5L, 11L})
    for (int sigma = 1; sigma <= 10; ++sigma) {
      const RSLattice rs = build_lambda(p, sigma);
      Integer expected = 1;
      for (int i = 0; i < 2 * sigma; ++i) expected *= p;
      CHECK(abs(determinant(rs.lattice.gram())) == expected);
      CHECK(rs.lattice.is_hyperbolic());
      CHECK(rs.lattice.rank() == 22);
    }
  CHECK_THROWS_AS(build_lambda(9, 1), PreconditionError);
  CHECK_THROWS_AS(build_lambda(7, 11), PreconditionError);
}

TEST_CASE("square-2 vectors") {
  const RSLattice rs = build_lambda(7, 1);
  std::mt19937_64 rng(0);
  for (int i = 0; i < 1000; ++i) {
    const LatticeVector v = random_square2(rs, rng);
    CHECK(rs.lattice.norm(v) == 2);
    CHECK(v[1] == 1);
  }
  const RSLattice r10 = build_lambda(11, 10);
  for (int i = 0; i < 200; ++i) {
    const LatticeVector v = random_square2(r10, rng);
    CHECK(r10.lattice.norm(v) == 2);
    CHECK(v[1] == 1);
  }
  // split mode avoids the isotropic u1, u2 partners
  SquareTwoSampling split;
  split.split_u_part = true;
  for (int i = 0; i < 200; ++i) {
    const LatticeVector v = random_square2(rs, rng, split);
    CHECK(rs.lattice.norm(v) == 2);
    CHECK(v[0] >= 2);
    CHECK(v[1] >= 2);
  }
}

TEST_CASE("scaled dual basis") {
  const RSLattice rs = build_lambda(7, 1);
  const auto duals = scaled_dual_basis(rs.lattice, 7);
  REQUIRE(duals.size() == 22);
  for (std::size_t i = 0; i < 22; ++i) {
    const IntVector pairing = rs.lattice.pairing(duals[i]);
    for (std::size_t j = 0; j < 22; ++j) CHECK(pairing[j] == (i == j ? 7 : 0));
  }
  CHECK_THROWS_AS(scaled_dual_basis(rs.lattice, 3), ArithmeticError);
}
