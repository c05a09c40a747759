#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "k3salem/chamber.hpp"
#include "k3salem/rs_lattice.hpp"
#include "support.hpp"

using namespace k3salem;
using namespace k3salem::testing;

namespace {

struct X7 {
  RSLattice rs = build_lambda(7, 1);
  LatticeVector h0 = [] {
    LatticeVector h(22);
    h[0] = h[1] = 1;
    return h;
  }();
  Lattice lattice = rs.lattice.with_anchor(h0);
  AmpleList ample{h0, scaled_dual_basis(rs.lattice, 7)};
};

const X7& x7() {
  static const X7 instance;
  return instance;
}

// U + <-2>, h0 = (1, 1, 0): R(h0) = {+-(0, 0, 1), +-(1, -1, 0)}.
const Lattice kToy(IntMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, -2}}, LatticeVector{1, 1, 0});
const AmpleList kToyAmple{{1, 1, 0}, {{1, 2, 1}}};

}  // namespace

TEST_CASE("ample lists") {
  const Lattice u(IntMatrix{{0, 1}, {1, 0}}, LatticeVector{1, 2});
  CHECK(is_ample_list(u, {{1, 2}, {}}));  // R(h0) is empty
  CHECK(is_ample_list(x7().lattice, x7().ample));
  CHECK_FALSE(is_ample_list(x7().lattice, {x7().h0, {}}));
  CHECK(is_ample_list(kToy, kToyAmple));
  CHECK_FALSE(is_ample_list(kToy, {{1, 1, 0}, {{1, 1, 0}}}));
}

TEST_CASE("lexicographic sign") {
  const auto& x = x7();
  CHECK(lex_sign(x.lattice, x.ample, x.h0) == 1);
  CHECK(lex_sign(x.lattice, x.ample, LatticeVector(22)) == 0);
  for (const auto& r : set_R(x.lattice, x.h0)) {
    const int s = lex_sign(x.lattice, x.ample, r);
    CHECK(s != 0);
    CHECK(lex_sign(x.lattice, x.ample, -r) == -s);
  }
}

TEST_CASE("positive roots") {
  CHECK(positive_roots_at(x7().lattice, x7().ample).size() == 243);
  const auto toy = positive_roots_at(kToy, kToyAmple);
  const auto toy_oracle = brute_force_oracle(kToy, 3, [&](const LatticeVector& s) {
    return kToy.norm(s) == -2 && kToy.inner(s, {1, 1, 0}) == 0 && kToy.inner(s, {1, 2, 1}) > 0;
  });
  CHECK(as_set(toy) == as_set(toy_oracle));
  CHECK(as_set(toy) == std::set<LatticeVector>{{0, 0, -1}, {1, -1, 0}});
  const Lattice u(IntMatrix{{0, 1}, {1, 0}}, LatticeVector{1, 2});
  CHECK(positive_roots_at(u, {{1, 2}, {}}).empty());
}

TEST_CASE("chamber membership") {
  const auto& x = x7();
  const Chamber c(x.lattice, x.ample);
  CHECK(c.contains(x.h0));
  const Json ref = reference("x7_reference.json");
  for (const auto& pol : ref.at("polarizations")) CHECK(c.contains(vector_from_json(pol.at("h"))));
  // roots with <h0, r> = 1 separate h0 from h0 + r
  const auto crossing = enumerate_constrained(x.lattice, {{x.h0, 1}}, -2);
  REQUIRE(!crossing.empty());
  for (std::size_t i = 0; i < crossing.size(); i += 1 + crossing.size() / 20)
    CHECK_FALSE(c.contains(reflect(x.lattice, crossing[i], x.h0)));
  // toy case checked against the oracle: (1, 1, 0) reflected in (1, 0, 1)
  const LatticeVector r{1, 0, 1};
  REQUIRE(kToy.norm(r) == -2);
  const LatticeVector v = reflect(kToy, r, {1, 1, 0});
  const auto sep = brute_force_oracle(kToy, 4, [&](const LatticeVector& s) {
    return kToy.norm(s) == -2 && kToy.inner(s, {1, 1, 0}) > 0 && kToy.inner(s, v) < 0;
  });
  CHECK(!sep.empty());
  CHECK_FALSE(chamber_contains(kToy, kToyAmple, v));
}

TEST_CASE("sending vectors to the chamber") {
  std::mt19937_64 rng(1);
  // one reflection on the toy lattice
  const LatticeVector r{1, 0, 1};
  const LatticeVector v = reflect(kToy, r, {1, 1, 0});
  const ChamberPlacement pl = send_to_chamber(kToy, kToyAmple, v, rng);
  CHECK(pl.h == LatticeVector{1, 1, 0});
  CHECK(!pl.word.empty());
  LatticeVector replay = v;
  for (const auto& w : pl.word) replay = reflect(kToy, w, replay);
  CHECK(replay == pl.h);

  const ChamberPlacement same = send_to_chamber(kToy, kToyAmple, {1, 1, 0}, rng);
  CHECK(same.h == LatticeVector{1, 1, 0});
  CHECK(same.word.empty());

  const auto& x = x7();
  const Chamber c(x.lattice, x.ample);
  SquareTwoSampling split;
  split.split_u_part = true;
  for (int i = 0; i < 8; ++i) {
    LatticeVector w = random_square2(x.rs, rng, split);
    if (x.lattice.inner(w, x.h0) < 0) w = -w;
    const std::uint64_t seed = rng();
    std::mt19937_64 a(seed), b(seed);
    const ChamberPlacement p1 = c.send(w, a);
    const ChamberPlacement p2 = c.send(w, b);
    CHECK(p1.h == p2.h);
    CHECK(p1.word == p2.word);
    CHECK(c.contains(p1.h));
    CHECK(x.lattice.norm(p1.h) == 2);
    LatticeVector check = w;
    for (const auto& root : p1.word) check = reflect(x.lattice, root, check);
    CHECK(check == p1.h);
    std::size_t walls = set_S(x.lattice, x.h0, w).size();
    for (const auto& root : positive_roots_at(x.lattice, p1.extended))
      if (x.lattice.inner(w, root) < 0) ++walls;
    CHECK(p1.word.size() == walls);
    const ChamberPlacement again = c.send(p1.h, a);
    CHECK(again.h == p1.h);
    CHECK(again.word.empty());
  }
}
