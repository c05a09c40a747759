#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "k3salem/rs_lattice.hpp"
#include "support.hpp"

using namespace k3salem;
using namespace k3salem::testing;

TEST_CASE("inner products") {
  const Lattice u(IntMatrix{{0, 1}, {1, 0}});
  CHECK(u.inner({1, 0}, {0, 1}) == 1);
  CHECK(u.inner({3, -2}, {0, 0}) == 0);
  const RSLattice rs = build_lambda(7, 1);
  LatticeVector h0(22);
  h0[0] = h0[1] = 1;
  CHECK(rs.lattice.norm(h0) == 2);
  CHECK(u.pairing({2, 5}) == IntVector{5, 2});
}

TEST_CASE("lattice validation") {
  CHECK_THROWS_AS(Lattice(IntMatrix{{1, 0}, {0, 2}}), PreconditionError);   // odd
  CHECK_THROWS_AS(Lattice(IntMatrix{{2, 1}, {0, 2}}), PreconditionError);   // not symmetric
  CHECK_THROWS_AS(Lattice(IntMatrix{{2, 2}, {2, 2}}), PreconditionError);   // degenerate
  CHECK_THROWS_AS(Lattice::hyperbolic(IntMatrix{{-2, 0}, {0, -2}}), PreconditionError);
  const Lattice u(IntMatrix{{0, 1}, {1, 0}});
  CHECK(u.is_hyperbolic());
  CHECK(u.signature() == Signature{1, 1, 0});
  CHECK_THROWS_AS(u.check_vector({1, 2, 3}), PreconditionError);
  CHECK_THROWS_AS(u.with_anchor({1, 0}), PreconditionError);  // isotropic anchor
}

TEST_CASE("signature of the supersingular lattices") {
  for (long p : {3L, 7L, 11L})
    for (int sigma = 1; sigma <= 10; ++sigma) {
      const RSLattice rs = build_lambda(p, sigma);
      CHECK(signature(rs.lattice.gram()) == Signature{1, 21, 0});
    }
  CHECK(signature(IntMatrix{{2, 0, 0}, {0, -2, 0}, {0, 0, 0}}) == Signature{1, 1, 1});
}

TEST_CASE("reflections") {
  const Lattice l(IntMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, -2}});
  const LatticeVector r{0, 0, 1};
  CHECK(reflect(l, r, r) == -r);
  CHECK(reflect(l, r, {1, 0, 0}) == LatticeVector{1, 0, 0});
  CHECK(reflect(l, r, {1, 1, 1}) == LatticeVector{1, 1, -1});
  CHECK_THROWS_AS(reflect(l, {1, 1, 0}, r), PreconditionError);

  std::mt19937_64 rng(4);
  std::uniform_int_distribution<long> d(-3, 3);
  int checked = 0;
  for (int trial = 0; trial < 6000 && checked < 150; ++trial) {
    const Lattice lat(random_hyperbolic(rng, 2 + trial % 3));
    LatticeVector root(lat.rank()), x(lat.rank()), y(lat.rank());
    for (std::size_t i = 0; i < lat.rank(); ++i) {
      root[i] = d(rng);
      x[i] = d(rng);
      y[i] = d(rng);
    }
    if (lat.norm(root) != -2) continue;
    ++checked;
    CHECK(reflect(lat, root, reflect(lat, root, x)) == x);
    CHECK(lat.inner(reflect(lat, root, x), reflect(lat, root, y)) == lat.inner(x, y));
    CHECK(lat.norm(x) % 2 == 0);
  }
  CHECK(checked > 20);
}

TEST_CASE("isometries") {
  const Lattice u(IntMatrix{{0, 1}, {1, 0}});
  CHECK(is_isometry(u, IntMatrix::identity(2)));
  CHECK_FALSE(is_isometry(u, Integer(2) * IntMatrix::identity(2)));
  CHECK(is_isometry(u, IntMatrix{{0, 1}, {1, 0}}));
  const RSLattice rs = build_lambda(7, 1);
  const Json ref = reference("x7_reference.json");
  CHECK(is_isometry(rs.lattice, matrix_from_json(ref.at("polarizations")[1].at("matrix"))));
}

TEST_CASE("positive cone") {
  const RSLattice rs = build_lambda(7, 1);
  LatticeVector h0(22);
  h0[0] = h0[1] = 1;
  const Lattice l = rs.lattice.with_anchor(h0);
  CHECK(in_positive_cone(l, h0));
  CHECK_FALSE(in_positive_cone(l, -h0));
  const Json ref = reference("x7_reference.json");
  CHECK(in_positive_cone(l, vector_from_json(ref.at("polarizations")[0].at("h"))));
  CHECK_FALSE(in_positive_cone(l, LatticeVector(22)));
}
