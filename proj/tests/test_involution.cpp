#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "k3salem/involution.hpp"
#include "k3salem/polynomial.hpp"
#include "support.hpp"

using namespace k3salem;
using namespace k3salem::testing;

namespace {

const SearchContext& x7() {
  static const SearchContext ctx(7, 1);
  return ctx;
}

// A Dynkin-type Gram on n simple roots: -2 on the diagonal, 1 on the edges.
Lattice diagram(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  IntMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) g(i, i) = -2;
  for (auto [a, b] : edges) g(a, b) = g(b, a) = 1;
  return Lattice(g);
}

std::vector<LatticeVector> unit_vectors(std::size_t n) {
  std::vector<LatticeVector> out;
  for (std::size_t i = 0; i < n; ++i) {
    LatticeVector e(n);
    e[i] = 1;
    out.push_back(e);
  }
  return out;
}

std::vector<LatticeVector> shuffled(std::vector<LatticeVector> v, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::shuffle(v.begin(), v.end(), rng);
  return v;
}

}  // namespace

TEST_CASE("component classification") {
  const Lattice a4 = diagram(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(classify_component(a4, shuffled(unit_vectors(4), 1)).name() == "A4");
  const Lattice d4 = diagram(4, {{0, 3}, {1, 3}, {2, 3}});
  CHECK(classify_component(d4, shuffled(unit_vectors(4), 2)).name() == "D4");
  // E8 with e1..e8 where e1 meets e4 and e2-e3-e4-e5-e6-e7-e8 is a chain
  const Lattice e8 = diagram(8, {{0, 3}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}});
  const ADEComponent c = classify_component(e8, shuffled(unit_vectors(8), 3));
  CHECK(c.name() == "E8");
  CHECK(e8.inner(c.roots[0], c.roots[3]) == 1);  // e1 meets the branch node e4
  CHECK(e8.inner(c.roots[1], c.roots[2]) == 1);
  const Lattice d5 = diagram(5, {{0, 2}, {1, 2}, {2, 3}, {3, 4}});
  const ADEComponent cd5 = classify_component(d5, unit_vectors(5));
  CHECK(cd5.name() == "D5");
  CHECK(d5.inner(cd5.roots[0], cd5.roots[2]) == 1);
  CHECK(d5.inner(cd5.roots[1], cd5.roots[2]) == 1);
  const Lattice e6 = diagram(6, {{0, 3}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
  CHECK(classify_component(e6, shuffled(unit_vectors(6), 4)).name() == "E6");
  const Lattice e7 = diagram(7, {{0, 3}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}});
  CHECK(classify_component(e7, unit_vectors(7)).name() == "E7");
  CHECK_THROWS(classify_component(diagram(3, {{0, 1}, {1, 2}, {2, 0}}), unit_vectors(3)));  // a cycle
}

TEST_CASE("action of the involution on components") {
  ADEComponent a3{'A', 3, {}};
  CHECK(tau_action(a3) == std::vector<std::size_t>{2, 1, 0});
  ADEComponent d4{'D', 4, {}};
  CHECK(tau_action(d4) == std::vector<std::size_t>{0, 1, 2, 3});
  ADEComponent d5{'D', 5, {}};
  CHECK(tau_action(d5) == std::vector<std::size_t>{1, 0, 2, 3, 4});
  ADEComponent e6{'E', 6, {}};
  // e2 <-> e6, e3 <-> e5, e1 and e4 fixed
  CHECK(tau_action(e6) == std::vector<std::size_t>{0, 5, 4, 3, 2, 1});
  ADEComponent e7{'E', 7, {}};
  CHECK(tau_action(e7) == std::vector<std::size_t>{0, 1, 2, 3, 4, 5, 6});
}

TEST_CASE("the characteristic 7 polarizations") {
  const Json ref = reference("x7_reference.json");
  const Lattice& l = x7().lattice();
  for (const auto& pol : ref.at("polarizations")) {
    const LatticeVector h = vector_from_json(pol.at("h"));
    CHECK(is_polarization_deg2(x7().chamber(), h));
    const std::string want = pol.at("singularities").get<std::string>();
    for (auto mode : {SimpleRootMode::Indecomposable, SimpleRootMode::Incremental})
      for (auto tie : {TieBreak::Lexicographic, TieBreak::ReverseLexicographic}) {
        const auto comps = exceptional_classes(x7().chamber(), h, mode, tie);
        CHECK(singularity_string(comps) == want);
        CHECK(involution_matrix(l, h, comps) == matrix_from_json(pol.at("matrix")));
      }
    const InvolutionRecord rec = make_involution(x7().chamber(), h);
    CHECK(check_involution(l, rec));

    // simple roots pair to 0 or 1 and generate the positive roots with nonnegative coefficients
    std::vector<LatticeVector> simple;
    int rank_sum = 0;
    for (const auto& c : rec.components) {
      rank_sum += c.rank;
      simple.insert(simple.end(), c.roots.begin(), c.roots.end());
    }
    CHECK(static_cast<std::size_t>(rank_sum) == simple.size());
    for (std::size_t i = 0; i < simple.size(); ++i)
      for (std::size_t j = i + 1; j < simple.size(); ++j) {
        const Integer x = l.inner(simple[i], simple[j]);
        CHECK((x == 0 || x == 1));
      }
    IntMatrix sg(simple.size(), simple.size());
    for (std::size_t i = 0; i < simple.size(); ++i)
      for (std::size_t j = 0; j < simple.size(); ++j) sg(i, j) = l.inner(simple[i], simple[j]);
    for (const auto& r : positive_roots_orthogonal(x7().chamber(), h)) {
      RatVector rhs(simple.size());
      for (std::size_t i = 0; i < simple.size(); ++i) rhs[i] = Rational(l.inner(simple[i], r));
      const RatVector coef = solve_exact(sg, rhs);
      LatticeVector back(22);
      for (std::size_t i = 0; i < simple.size(); ++i) {
        CHECK(coef[i].get_den() == 1);
        CHECK(coef[i] >= 0);
        back += coef[i].get_num() * simple[i];
      }
      CHECK(back == r);
    }

    // involution spectrum (t - 1)^s (t + 1)^(22 - s) with s = 1 + (number of tau-orbit sums)
    std::size_t s = 1;
    for (const auto& c : rec.components) {
      const auto t = tau_action(c);
      for (std::size_t i = 0; i < t.size(); ++i)
        if (t[i] >= i) ++s;
    }
    IntPolynomial expected{1};
    for (std::size_t i = 0; i < 22; ++i) expected = expected * (i < s ? IntPolynomial{-1, 1} : IntPolynomial{1, 1});
    CHECK(char_poly(rec.matrix) == expected);
  }
  LatticeVector h0(22);
  h0[0] = h0[1] = 1;
  CHECK_FALSE(is_polarization_deg2(x7().chamber(), h0));
}

TEST_CASE("smooth branch curves") {
  const Lattice& l = x7().lattice();
  const Json ref = reference("x7_reference.json");
  const LatticeVector h = vector_from_json(ref.at("polarizations")[0].at("h"));
  // closed form x -> <x, h> h - x
  const IntMatrix m = smooth_branch_matrix(l, h, false);
  CHECK(h * m == h);
  const IntVector hg = l.pairing(h);
  for (std::size_t i = 0; i < 22; ++i)
    for (std::size_t j = 0; j < 22; ++j) CHECK(m(i, j) == hg[i] * h[j] - (i == j ? 1 : 0));

  // in sigma = 10 every pooled polarization below has no exceptional classes
  SearchConfig cfg;
  cfg.p = 11;
  cfg.sigma = 10;
  cfg.pool_size = 50;
  const SearchContext ctx(11, 10);
  const auto pool = generate_involution_pool(ctx, cfg);
  CHECK(pool.size() == 50);
  for (const auto& rec : pool) {
    CHECK(rec.components.empty());
    const IntMatrix sm = smooth_branch_matrix(ctx.lattice(), rec.h);
    CHECK(sm == involution_matrix(ctx.lattice(), rec.h, {}));
    CHECK(sm == rec.matrix);
    LatticeVector x(22);
    x[2] = 1;
    const LatticeVector perp = Integer(2) * x - ctx.lattice().inner(x, rec.h) * rec.h;
    CHECK(ctx.lattice().inner(perp, rec.h) == 0);
    CHECK(perp * sm == -perp);
  }
}
