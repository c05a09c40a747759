#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"

#include <cmath>

using namespace k3salem;
using namespace k3salem::testing;

namespace {

const SearchContext& x7() {
  static const SearchContext ctx(7, 1);
  return ctx;
}

SearchConfig x7_config() {
  SearchConfig c;
  c.p = 7;
  c.sigma = 1;
  c.seed = 0;
  c.pool_size = 12;
  c.trial_budget = 20000;
  c.time_budget_seconds = 300;
  return c;
}

const std::vector<InvolutionRecord>& x7_pool() {
  static const std::vector<InvolutionRecord> pool = generate_involution_pool(x7(), x7_config());
  return pool;
}

std::vector<InvolutionRecord> golden_records() {
  std::vector<InvolutionRecord> out;
  const Json ref = reference("x7_reference.json");
  for (const auto& pol : ref.at("polarizations")) out.push_back(involution_from_json(pol));
  return out;
}

std::vector<Sigma10Seed> printed_seeds() { return seeds_from_json(reference("sigma10_p17389_reference.json")); }

}  // namespace

TEST_CASE("configuration checks") {
  SearchConfig c = x7_config();
  CHECK_NOTHROW(c.validate());
  c.max_word_length = 23;
  CHECK_THROWS_AS(c.validate(), PreconditionError);
  c = x7_config();
  c.pool_size = 1;
  CHECK_THROWS_AS(c.validate(), PreconditionError);
  c = x7_config();
  c.p = 9;
  CHECK_THROWS_AS(c.validate(), PreconditionError);
}

TEST_CASE("involution pool") {
  const auto& pool = x7_pool();
  CHECK(pool.size() == 12);
  std::set<LatticeVector> hs;
  for (const auto& rec : pool) {
    CHECK(check_involution(x7().lattice(), rec));
    CHECK(is_polarization_deg2(x7().chamber(), rec.h));
    hs.insert(rec.h);
  }
  CHECK(hs.size() == pool.size());
  // the same seed gives the same pool
  const auto again = generate_involution_pool(x7(), x7_config());
  REQUIRE(again.size() == pool.size());
  for (std::size_t i = 0; i < pool.size(); ++i) CHECK(again[i].h == pool[i].h);

  SearchConfig tiny = x7_config();
  tiny.pool_size = 50;
  tiny.pool_attempts = 1;
  CHECK_THROWS_AS(generate_involution_pool(x7(), tiny), BudgetExhausted);
}

TEST_CASE("duplicates collapse to one record") {
  // sampling with a box of zero always yields the same v
  SearchConfig c = x7_config();
  c.sampling.box = 0;
  c.sampling.widen_every = 1000000;
  c.sampling.split_u_part = false;
  c.pool_attempts = 20;
  PoolStats stats;
  CHECK_THROWS_AS(generate_involution_pool(x7(), c, &stats), BudgetExhausted);
  CHECK(stats.draws == 20);
}

TEST_CASE("golden words") {
  const auto golden = golden_records();
  const IntPolynomial cp = char_poly(word_product(golden, {0, 1, 2}));
  CHECK(cp == polynomial_from_json(reference("x7_reference.json").at("product_charpoly")));
  const SalemVerdict v = salem_check(cp, SalemContext::FromK3Automorphism);
  REQUIRE(v.accepted);
  CHECK(std::abs(v.certificate->root.value - 994.15889) < 1e-4);
  for (std::size_t i = 0; i < golden.size(); ++i) CHECK_FALSE(salem_check(char_poly(golden[i].matrix)).accepted);
}

TEST_CASE("word sampling") {
  for (std::uint64_t t = 0; t < 200; ++t) {
    const auto w = trial_word(5, t, 12, 22);
    CHECK(w.size() >= 2);
    CHECK(w.size() <= 22);
    for (std::size_t i : w) CHECK(i < 12);
    CHECK(w == trial_word(5, t, 12, 22));
  }
  CHECK(trial_seed(1, 2) != trial_seed(2, 1));
}

TEST_CASE("search on the characteristic 7 lattice") {
  const SearchConfig c = x7_config();
  const SearchOutcome out = search_irreducible_salem(x7(), c, x7_pool());
  REQUIRE(out.result.has_value());
  const SearchResult& r = *out.result;
  CHECK(r.word.size() >= 2);
  CHECK(r.word.size() <= 22);
  CHECK(char_poly(word_product(r.involutions, r.word)) == r.charpoly);
  CHECK(is_reciprocal(r.charpoly));
  CHECK(abs(r.charpoly.coeff(0)) == 1);
  CHECK(verify_result(x7().lattice(), r).accepted);
  CHECK(out.stats.trials == r.trial_index + 1);

  // thread count does not change the accepted trial
  SearchConfig threaded = c;
  threaded.threads = 4;
  const SearchOutcome out4 = search_irreducible_salem(x7(), threaded, x7_pool());
  REQUIRE(out4.result.has_value());
  CHECK(out4.result->trial_index == r.trial_index);
  CHECK(out4.result->charpoly == r.charpoly);

  // a tampered matrix is caught
  SearchResult bad = r;
  bad.involutions[0].matrix(0, 0) += 1;
  CHECK_FALSE(verify_result(x7().lattice(), bad).accepted);
  SearchResult wrong_poly = r;
  wrong_poly.charpoly = IntPolynomial{1, -3, 1};
  CHECK_FALSE(verify_result(x7().lattice(), wrong_poly).accepted);

  // a budget that stops just short of the accepted trial
  if (r.trial_index > 0) {
    SearchConfig short_budget = c;
    short_budget.trial_budget = r.trial_index;
    const SearchOutcome cut = search_irreducible_salem(x7(), short_budget, x7_pool());
    CHECK_FALSE(cut.result.has_value());
    CHECK(cut.stats.exhausted);
    CHECK(cut.stats.trials == r.trial_index);
  }
}

TEST_CASE("pools sharing an eigenvector are refused") {
  const auto golden = golden_records();
  CHECK(pool_obstruction(golden).empty());
  CHECK(pool_obstruction(x7_pool()).empty());
  // one involution repeated: its whole +1 eigenspace is shared
  const std::vector<InvolutionRecord> single{golden[0], golden[0]};
  CHECK(pool_obstruction(single).find("eigenvalue") != std::string::npos);
  const SearchOutcome out = search_irreducible_salem(x7(), x7_config(), single);
  CHECK_FALSE(out.result.has_value());
  CHECK(out.stats.exhausted);
  CHECK(out.stats.trials == 0);
  CHECK(!out.stats.obstruction.empty());
  // x M = -x for every smooth involution of a pool whose h are orthogonal to x
  const RSLattice rs = build_lambda(17389, 10);
  const auto hs = sigma10_vectors(rs, printed_seeds(), 1);
  const std::vector<InvolutionRecord> two{{hs[0], {}, smooth_branch_matrix(rs.lattice, hs[0])},
                                         {hs[1], {}, smooth_branch_matrix(rs.lattice, hs[1])}};
  CHECK(pool_obstruction(two).find("20-dimensional eigenspace for eigenvalue -1") != std::string::npos);
}

TEST_CASE("sigma = 10 with the printed seeds") {
  const RSLattice rs = build_lambda(17389, 10);
  const auto seeds = printed_seeds();
  const auto hs = sigma10_vectors(rs, seeds, 1);
  REQUIRE(hs.size() == 22);
  // h1 = (1, 1, 15 eta1 + 31 eta2 + 0 eta3 - 3 eta4)
  CHECK(hs[0][0] == 1);
  CHECK(hs[0][1] == 1);
  CHECK(hs[0][2] == 15);
  CHECK(hs[0][3] == 31);
  CHECK(hs[0][4] == 0);
  CHECK(hs[0][5] == -3);
  CHECK(rs.lattice.norm(hs[0]) == 2);
  CHECK(sigma10_property_failure(rs.lattice, hs) == "");

  Sigma10Options o;
  o.base_k = 1;
  const SearchResult r = sigma10_construct(rs, seeds, o);
  CHECK(r.base_k == 1);
  CHECK(r.word.size() == 22);
  const double root = r.certificate.root.value;
  CHECK(std::abs(root / 4.2539e100 - 1) < 1e-4);
  CHECK(verify_result(rs.lattice, r).accepted);
}

TEST_CASE("sigma = 10 failures name the property") {
  const RSLattice rs = build_lambda(17389, 10);
  auto seeds = printed_seeds();
  seeds[2].a += 1;  // breaks the norm of h3
  try {
    sigma10_construct(rs, seeds, {});
    FAIL("expected a construction error");
  } catch (const ConstructionError& e) {
    CHECK(std::string(e.what()).find("h3: (i)") != std::string::npos);
  }
  CHECK_THROWS_AS(sigma10_construct(build_lambda(7, 1), printed_seeds(), {}), PreconditionError);
}

TEST_CASE("sigma = 10 search for p = 11") {
  const RSLattice rs = build_lambda(11, 10);
  const SearchResult r = sigma10_auto(rs, {});
  CHECK(r.word.size() == 22);
  std::vector<LatticeVector> hs;
  for (const auto& rec : r.involutions) hs.push_back(rec.h);
  CHECK(sigma10_property_failure(rs.lattice, hs) == "");
  CHECK(verify_result(rs.lattice, r).accepted);
}

TEST_CASE("entropy sweep") {
  CHECK(entropy_sweep({}, {}).empty());
  const auto rows = entropy_sweep({11, 13, 17}, {});
  REQUIRE(rows.size() == 3);
  for (const auto& row : rows) {
    CHECK(row.ok);
    CHECK(row.entropy > 0);
  }
  const auto bad = entropy_sweep({15}, {});
  REQUIRE(bad.size() == 1);
  CHECK_FALSE(bad[0].ok);
  CHECK(!bad[0].error.empty());
}

TEST_CASE("least squares") {
  const LinearFit f = least_squares({1, 2, 3, 4}, {3, 5, 7, 9});
  CHECK(f.slope == doctest::Approx(2));
  CHECK(f.intercept == doctest::Approx(1));
  CHECK(least_squares({}, {}).points == 0);
  CHECK_THROWS_AS(least_squares({1}, {1, 2}), PreconditionError);
}

TEST_CASE("reference example report") {
  for (const auto& c : verify_reference_example()) CHECK_MESSAGE(c.passed, c.name << " " << c.detail);
}
