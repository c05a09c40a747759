#include "k3salem/pipeline.hpp"

#include "k3salem/serialization.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <set>
#include <thread>

namespace k3salem {

void SearchConfig::validate() const {
  if (p < 3 || !is_prime(p)) throw PreconditionError("p must be an odd prime");
  if (sigma < 1 || sigma > 10) throw PreconditionError("sigma must lie in [1, 10]");
  if (max_word_length < 2 || max_word_length > 22) throw PreconditionError("word length must lie in [2, 22]");
  if (pool_size < 2) throw PreconditionError("pool size must be at least 2");
  if (threads == 0) throw PreconditionError("thread count must be positive");
}

SearchContext::SearchContext(long p, int sigma, std::optional<std::pair<long, long>> q_gamma)
    : rs_(std::make_unique<RSLattice>(build_lambda(p, sigma, q_gamma))) {
  LatticeVector h0(rs_->lattice.rank());
  h0[0] = 1;
  h0[1] = 1;
  rs_->lattice = rs_->lattice.with_anchor(h0);
  chamber_ = std::make_unique<Chamber>(rs_->lattice, AmpleList{h0, scaled_dual_basis(rs_->lattice, p)});
}

std::vector<InvolutionRecord> generate_involution_pool(const SearchContext& ctx, const SearchConfig& config, PoolStats* stats) {
  config.validate();
  const Lattice& l = ctx.lattice();
  const long budget = config.pool_attempts > 0 ? config.pool_attempts : 50 * static_cast<long>(config.pool_size);
  std::mt19937_64 rng(config.seed);
  std::set<LatticeVector> seen;
  std::vector<InvolutionRecord> pool;
  PoolStats local;
  for (long draw = 0; draw < budget && pool.size() < config.pool_size; ++draw) {
    ++local.draws;
    LatticeVector v = random_square2(ctx.rs(), rng, config.sampling);
    if (l.inner(v, ctx.h0()) < 0) v = -v;
    if (!set_F(l, v).empty()) {
      ++local.rejected_f_nonempty;
      continue;
    }
    ChamberPlacement placed = ctx.chamber().send(v, rng);
    if (!seen.insert(placed.h).second) {
      ++local.duplicates;
      continue;
    }
    pool.push_back(make_involution(ctx.chamber(), placed.h));
  }
  if (stats) *stats = local;
  if (pool.size() < 2) throw BudgetExhausted("involution pool has fewer than two elements");
  return pool;
}

// ---------------------------------------------------------------- search

namespace {

constexpr std::uint64_t kModulus = (1ULL << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 x = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(x & kModulus);
  std::uint64_t hi = static_cast<std::uint64_t>(x >> 61);
  std::uint64_t s = lo + hi;
  return s >= kModulus ? s - kModulus : s;
}

std::uint64_t addmod(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s >= kModulus ? s - kModulus : s;
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

using ModMatrix = std::vector<std::uint64_t>;  // n x n row-major

ModMatrix reduce(const IntMatrix& m) {
  ModMatrix out(m.rows() * m.cols());
  Integer r;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      mpz_fdiv_r_ui(r.get_mpz_t(), m(i, j).get_mpz_t(), kModulus);
      out[i * m.cols() + j] = r.get_ui();
    }
  return out;
}

ModMatrix multiply(const ModMatrix& a, const ModMatrix& b, std::size_t n) {
  ModMatrix c(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) {
      const std::uint64_t x = a[i * n + l];
      if (x == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i * n + j] = addmod(c[i * n + j], mulmod(x, b[l * n + j]));
    }
  return c;
}

bool singular_mod(ModMatrix a, std::size_t n) {
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv * n + col] == 0) ++piv;
    if (piv == n) return true;
    if (piv != col)
      for (std::size_t j = 0; j < n; ++j) std::swap(a[piv * n + j], a[col * n + j]);
    const std::uint64_t inv = powmod(a[col * n + col], kModulus - 2);
    for (std::size_t i = col + 1; i < n; ++i) {
      const std::uint64_t f = mulmod(a[i * n + col], inv);
      if (f == 0) continue;
      for (std::size_t j = col; j < n; ++j) a[i * n + j] = addmod(a[i * n + j], kModulus - mulmod(f, a[col * n + j]));
    }
  }
  return false;
}

// A Salem polynomial has neither 1 nor -1 as a root.
bool has_unit_eigenvalue_mod(const ModMatrix& m, std::size_t n) {
  ModMatrix minus = m;
  ModMatrix plus = m;
  for (std::size_t i = 0; i < n; ++i) {
    minus[i * n + i] = addmod(minus[i * n + i], kModulus - 1);
    plus[i * n + i] = addmod(plus[i * n + i], 1);
  }
  return singular_mod(std::move(minus), n) || singular_mod(std::move(plus), n);
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct TrialOutcome {
  bool prefiltered = false;
  bool accepted = false;
  std::string reason;
  IntPolynomial charpoly;
  std::optional<SalemCertificate> certificate;
};

}  // namespace

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) { return splitmix64(splitmix64(seed) ^ splitmix64(~trial)); }

std::vector<std::size_t> trial_word(std::uint64_t seed, std::uint64_t trial, std::size_t pool_size, int max_word_length) {
  std::mt19937_64 rng(trial_seed(seed, trial));
  std::uniform_int_distribution<int> length(2, max_word_length);
  std::uniform_int_distribution<std::size_t> index(0, pool_size - 1);
  std::vector<std::size_t> word(static_cast<std::size_t>(length(rng)));
  for (auto& w : word) w = index(rng);
  return word;
}

IntMatrix word_product(const std::vector<InvolutionRecord>& pool, const std::vector<std::size_t>& word) {
  if (pool.empty()) throw PreconditionError("empty involution pool");
  IntMatrix m = IntMatrix::identity(pool.front().matrix.rows());
  for (std::size_t i : word) m = m * pool.at(i).matrix;
  return m;
}

std::string pool_obstruction(const std::vector<InvolutionRecord>& pool) {
  if (pool.empty()) throw PreconditionError("empty involution pool");
  const std::size_t n = pool.front().matrix.rows();
  for (int sign : {-1, 1}) {
    // rows of (M - sign I)^T for all M; full column rank iff no common eigenvector
    IntMatrix stacked(n * pool.size(), n);
    for (std::size_t k = 0; k < pool.size(); ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) stacked(k * n + j, i) = pool[k].matrix(i, j) - (i == j ? sign : 0);
    const std::size_t r = rank(stacked);
    if (r < n)
      return "the pool matrices share a " + std::to_string(n - r) + "-dimensional eigenspace for eigenvalue " +
             std::to_string(sign);
  }
  return {};
}

SearchOutcome search_irreducible_salem(const SearchContext& ctx, const SearchConfig& config, const std::vector<InvolutionRecord>& pool) {
  config.validate();
  if (pool.empty()) throw PreconditionError("empty involution pool");
  const Lattice& l = ctx.lattice();
  for (const auto& rec : pool)
    if (!check_involution(l, rec)) throw PreconditionError("pool contains a matrix that is not an involutive isometry fixing h");
  const std::size_t n = l.rank();
  SearchOutcome outcome;
  outcome.stats.obstruction = pool_obstruction(pool);
  if (!outcome.stats.obstruction.empty()) {
    outcome.stats.exhausted = true;
    return outcome;
  }
  std::vector<ModMatrix> reduced;
  for (const auto& rec : pool) reduced.push_back(reduce(rec.matrix));

  auto run_trial = [&](long t) {
    TrialOutcome out;
    const auto word = trial_word(config.seed, static_cast<std::uint64_t>(t), pool.size(), config.max_word_length);
    ModMatrix m = reduced[word[0]];
    for (std::size_t i = 1; i < word.size(); ++i) m = multiply(m, reduced[word[i]], n);
    if (has_unit_eigenvalue_mod(m, n)) {
      out.prefiltered = true;
      return out;
    }
    out.charpoly = char_poly(word_product(pool, word));
    if (abs(out.charpoly.coeff(0)) != 1) throw ArithmeticError("product of isometries has determinant other than +-1");
    SalemVerdict v = salem_check(out.charpoly, SalemContext::FromK3Automorphism, config.prime_budget);
    out.accepted = v.accepted;
    out.reason = v.reason;
    out.certificate = std::move(v.certificate);
    return out;
  };

  SearchStats& stats = outcome.stats;
  const auto start = std::chrono::steady_clock::now();
  const long batch = 8 * static_cast<long>(config.threads);
  std::vector<TrialOutcome> results(static_cast<std::size_t>(batch));
  for (long base = 0; base < config.trial_budget; base += batch) {
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > config.time_budget_seconds) break;
    const long count = std::min(batch, config.trial_budget - base);
    if (config.threads == 1) {
      for (long i = 0; i < count; ++i) results[static_cast<std::size_t>(i)] = run_trial(base + i);
    } else {
      std::vector<std::thread> workers;
      std::vector<std::exception_ptr> errors(config.threads);
      for (unsigned w = 0; w < config.threads; ++w) {
        workers.emplace_back([&, w] {
          try {
            for (long i = w; i < count; i += config.threads) results[static_cast<std::size_t>(i)] = run_trial(base + i);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
      for (auto& t : workers) t.join();
      for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    }
    for (long i = 0; i < count; ++i) {
      TrialOutcome& r = results[static_cast<std::size_t>(i)];
      ++stats.trials;
      if (r.prefiltered) {
        ++stats.prefilter_rejections;
        continue;
      }
      ++stats.exact_checks;
      if (!r.accepted) {
        ++stats.rejection_reasons[r.reason];
        continue;
      }
      const long t = base + i;
      const auto word = trial_word(config.seed, static_cast<std::uint64_t>(t), pool.size(), config.max_word_length);
      SearchResult res;
      res.p = config.p;
      res.sigma = config.sigma;
      res.q = ctx.rs().params.q;
      res.gamma = ctx.rs().params.gamma;
      res.seed = config.seed;
      res.trial_index = t;
      std::vector<std::size_t> remap(pool.size(), pool.size());
      for (std::size_t idx : word) {
        if (remap[idx] == pool.size()) {
          remap[idx] = res.involutions.size();
          res.involutions.push_back(pool[idx]);
        }
        res.word.push_back(remap[idx]);
      }
      res.charpoly = std::move(r.charpoly);
      res.certificate = std::move(*r.certificate);
      outcome.result = std::move(res);
      stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      return outcome;
    }
  }
  stats.exhausted = true;
  stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return outcome;
}

SalemVerdict verify_result(const Lattice& lattice, const SearchResult& result, int prime_budget) {
  for (const auto& rec : result.involutions)
    if (!check_involution(lattice, rec)) return {false, "stored matrix is not an involutive isometry fixing h", std::nullopt};
  if (result.word.empty()) return {false, "empty word", std::nullopt};
  const IntPolynomial cp = char_poly(word_product(result.involutions, result.word));
  if (cp != result.charpoly) return {false, "characteristic polynomial does not match the stored one", std::nullopt};
  SalemVerdict v = salem_check(cp, SalemContext::FromK3Automorphism, prime_budget);
  if (v.accepted) {
    const RootEnclosure& stored = result.certificate.root;
    const RootEnclosure& fresh = v.certificate->root;
    if (stored.hi < fresh.lo || fresh.hi < stored.lo) return {false, "stored root enclosure does not contain the root", std::nullopt};
  }
  return v;
}

// ---------------------------------------------------------------- sigma = 10

std::vector<LatticeVector> sigma10_vectors(const RSLattice& rs, const std::vector<Sigma10Seed>& seeds, int base_k) {
  if (rs.params.sigma != 10) throw PreconditionError("the construction needs sigma = 10");
  if (seeds.size() != 6) throw PreconditionError("the construction needs six seed vectors");
  if (base_k < 1 || base_k > 6) throw PreconditionError("base index must lie in [1, 6]");
  const std::size_t n = rs.lattice.rank();
  const std::size_t h_start = rs.block_start(BasisTag::Kind::HBlock);
  std::vector<LatticeVector> hs;
  for (const auto& s : seeds) {
    if (s.v.size() != 4) throw PreconditionError("seed H-part must have 4 coordinates");
    LatticeVector h(n);
    h[0] = s.a;
    h[1] = 1;
    for (std::size_t i = 0; i < 4; ++i) h[h_start + i] = s.v[i];
    hs.push_back(std::move(h));
  }
  LatticeVector base = hs[static_cast<std::size_t>(base_k - 1)];
  base[0] += 1;
  for (int block = 0; block < 2; ++block) {
    const std::size_t e = rs.block_start(BasisTag::Kind::E8Block, block);
    for (std::size_t nu = 0; nu < 8; ++nu) {
      LatticeVector h = base;
      h[e + nu] += 1;
      hs.push_back(std::move(h));
    }
  }
  return hs;
}

namespace {

std::string property_failure_at(const Lattice& l, const LatticeVector& h1, const LatticeVector& h, std::size_t i) {
  const std::string name = "h" + std::to_string(i + 1);
  if (l.norm(h) != 2) return name + ": (i) square-norm is " + l.norm(h).get_str() + ", not 2";
  if (i > 0 && l.inner(h1, h) <= 0) return name + ": (ii) <h1, " + name + "> is not positive";
  if (!set_R(l, h).empty()) return name + ": (iv) R(" + name + ") is not empty";
  if (!set_F(l, h).empty()) return name + ": (iv) F(" + name + ") is not empty";
  if (i > 0 && !set_S_is_empty(l, h1, h)) return name + ": (iii) S(h1, " + name + ") is not empty";
  return {};
}

SearchResult smooth_product_result(const RSLattice& rs, const std::vector<LatticeVector>& hs, int prime_budget, int base_k,
                                   std::string& failure) {
  SearchResult res;
  res.p = rs.params.p;
  res.sigma = rs.params.sigma;
  res.q = rs.params.q;
  res.gamma = rs.params.gamma;
  res.base_k = base_k;
  for (const auto& h : hs) {
    InvolutionRecord rec;
    rec.h = h;
    rec.matrix = smooth_branch_matrix(rs.lattice, h, false);
    res.word.push_back(res.involutions.size());
    res.involutions.push_back(std::move(rec));
  }
  res.charpoly = char_poly(word_product(res.involutions, res.word));
  SalemVerdict v = salem_check(res.charpoly, SalemContext::FromK3Automorphism, prime_budget);
  if (!v.accepted) {
    failure = "(v) product is not of irreducible Salem type: " + v.reason;
    return res;
  }
  res.certificate = std::move(*v.certificate);
  return res;
}

}  // namespace

std::string sigma10_property_failure(const Lattice& lattice, const std::vector<LatticeVector>& hs) {
  for (std::size_t i = 0; i < hs.size(); ++i) {
    std::string f = property_failure_at(lattice, hs.front(), hs[i], i);
    if (!f.empty()) return f;
  }
  return {};
}

SearchResult sigma10_construct(const RSLattice& rs, const std::vector<Sigma10Seed>& seeds, const Sigma10Options& options) {
  const Lattice& l = rs.lattice;
  std::vector<LatticeVector> base = sigma10_vectors(rs, seeds, 1);
  base.resize(6);
  if (std::string f = sigma10_property_failure(l, base); !f.empty()) throw ConstructionError(f);

  std::vector<int> ks;
  if (options.base_k) {
    ks.push_back(*options.base_k);
  } else {
    ks = {1, 2, 3, 4, 5, 6};
  }
  std::string failures;
  for (int k : ks) {
    const std::vector<LatticeVector> hs = sigma10_vectors(rs, seeds, k);
    std::string f;
    for (std::size_t i = 6; i < hs.size() && f.empty(); ++i) f = property_failure_at(l, hs.front(), hs[i], i);
    if (f.empty()) {
      SearchResult res = smooth_product_result(rs, hs, options.prime_budget, k, f);
      if (f.empty()) {
        res.seed = options.seed;
        return res;
      }
    }
    failures += (failures.empty() ? "" : "; ") + ("k=" + std::to_string(k) + ": " + f);
  }
  throw ConstructionError(failures);
}

SearchResult sigma10_auto(const RSLattice& rs, const Sigma10Options& options) {
  if (rs.params.sigma != 10) throw PreconditionError("the construction needs sigma = 10");
  const Lattice& l = rs.lattice;
  const long p = rs.params.p;
  const std::size_t h_start = rs.block_start(BasisTag::Kind::HBlock);
  // (a, 1, v) of square-norm 2 live in U(p) + H: constraints <x, u1 + u2> = p(a + 1), <x, u1> = p.
  const Lattice small(l.gram().block(0, h_start + 4));
  LatticeVector u1(small.rank());
  u1[0] = 1;
  LatticeVector u12 = u1;
  u12[1] = 1;
  const SliceEnumerator slice(small, {u12, u1});
  std::mt19937_64 rng(options.seed);

  std::vector<Sigma10Seed> candidates;
  for (long a = 1; a <= options.max_a; ++a) {
    std::vector<Sigma10Seed> level;
    for (const auto& x : slice.solve({Integer(p) * (a + 1), Integer(p)}, 2)) {
      Sigma10Seed s{x[0], IntVector(std::vector<Integer>(x.begin() + static_cast<std::ptrdiff_t>(h_start), x.end()))};
      LatticeVector h(l.rank());
      h[0] = s.a;
      h[1] = 1;
      for (std::size_t i = 0; i < 4; ++i) h[h_start + i] = s.v[i];
      if (set_R(l, h).empty() && set_F(l, h).empty()) level.push_back(std::move(s));
    }
    std::shuffle(level.begin(), level.end(), rng);
    candidates.insert(candidates.end(), level.begin(), level.end());
  }
  if (candidates.size() < 6) throw ConstructionError("fewer than six candidates with R(h) and F(h) empty");

  auto embed = [&](const Sigma10Seed& s) {
    LatticeVector h(l.rank());
    h[0] = s.a;
    h[1] = 1;
    for (std::size_t i = 0; i < 4; ++i) h[h_start + i] = s.v[i];
    return h;
  };
  std::string last;
  for (long attempt = 0; attempt < options.selection_attempts; ++attempt) {
    const std::size_t first = static_cast<std::size_t>(attempt) % candidates.size();
    const LatticeVector h1 = embed(candidates[first]);
    std::vector<std::size_t> order(candidates.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::mt19937_64 pick(trial_seed(options.seed, static_cast<std::uint64_t>(attempt)));
    std::shuffle(order.begin(), order.end(), pick);
    std::vector<Sigma10Seed> chosen{candidates[first]};
    for (std::size_t i : order) {
      if (chosen.size() == 6) break;
      if (i == first) continue;
      const LatticeVector h = embed(candidates[i]);
      if (l.inner(h1, h) <= 0 || !set_S_is_empty(l, h1, h)) continue;
      chosen.push_back(candidates[i]);
    }
    if (chosen.size() < 6) continue;
    try {
      SearchResult res = sigma10_construct(rs, chosen, options);
      res.trial_index = attempt;
      return res;
    } catch (const ConstructionError& e) {
      last = e.what();
    }
  }
  throw ConstructionError("no admissible selection within the attempt budget" + (last.empty() ? "" : ("; last: " + last)));
}

// ---------------------------------------------------------------- reference data

std::string default_data_dir() {
  if (const char* env = std::getenv("K3SALEM_DATA_DIR")) return env;
  return K3SALEM_DATA_DIR;
}

namespace {

std::string first_difference(const IntMatrix& got, const IntMatrix& want) {
  if (got.rows() != want.rows() || got.cols() != want.cols()) return "shape differs";
  for (std::size_t i = 0; i < got.rows(); ++i)
    for (std::size_t j = 0; j < got.cols(); ++j)
      if (got(i, j) != want(i, j))
        return "entry (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + "): got " + got(i, j).get_str() + ", want " +
               want(i, j).get_str();
  return {};
}

}  // namespace

std::vector<ReferenceCheck> verify_reference_example(const std::string& data_dir) {
  std::vector<ReferenceCheck> checks;
  auto add = [&](std::string name, bool ok, std::string detail = {}) { checks.push_back({std::move(name), ok, std::move(detail)}); };
  const Json ref = load_json(data_dir + "/x7_reference.json");
  const long p = integer_from_json(ref.at("p")).get_si();
  const int sigma = static_cast<int>(integer_from_json(ref.at("sigma")).get_si());

  const auto [q, gamma] = find_q_gamma(p);
  const IntMatrix h = gram_H({p, sigma, q, gamma});
  const IntMatrix h_ref = matrix_from_json(ref.at("gram_H"));
  add("H block Gram", h == h_ref, first_difference(h, h_ref));

  SearchContext ctx(p, sigma);
  const LatticeVector h0 = vector_from_json(ref.at("h0"));
  const std::size_t roots = set_R(ctx.lattice(), h0).size();
  const std::size_t roots_ref = ref.at("roots_orthogonal_to_h0").get<std::size_t>();
  add("roots orthogonal to h0", roots == roots_ref, std::to_string(roots) + " vs " + std::to_string(roots_ref));
  add("h0 is not a degree-2 polarization", !set_F(ctx.lattice(), h0).empty());

  IntMatrix product = IntMatrix::identity(ctx.lattice().rank());
  int index = 1;
  for (const auto& pol : ref.at("polarizations")) {
    const std::string tag = "h" + std::to_string(index++);
    const LatticeVector hv = vector_from_json(pol.at("h"));
    add(tag + " is a degree-2 polarization in the chamber", is_polarization_deg2(ctx.chamber(), hv));
    const InvolutionRecord rec = make_involution(ctx.chamber(), hv);
    const std::string want = pol.at("singularities").get<std::string>();
    add(tag + " singularities", rec.singularity_string() == want, rec.singularity_string() + " vs " + want);
    const IntMatrix m_ref = matrix_from_json(pol.at("matrix"));
    add(tag + " involution matrix", rec.matrix == m_ref, first_difference(rec.matrix, m_ref));
    product = product * rec.matrix;
  }
  const IntPolynomial cp = char_poly(product);
  const IntPolynomial cp_ref = polynomial_from_json(ref.at("product_charpoly"));
  add("product characteristic polynomial", cp == cp_ref, cp == cp_ref ? "" : cp.to_string());
  const SalemVerdict v = salem_check(cp, SalemContext::Standalone);
  add("Salem check", v.accepted, v.reason);
  if (v.accepted) {
    const double want = std::stod(ref.at("salem_root").get<std::string>());
    const double got = v.certificate->root.value;
    add("Salem root", std::abs(got - want) <= 1e-4, format_root(got, 12) + " vs " + ref.at("salem_root").get<std::string>());
  }
  return checks;
}

LinearFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw PreconditionError("fit needs equally many x and y values");
  LinearFit fit;
  fit.points = x.size();
  if (x.size() < 2) return fit;
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double den = n * sxx - sx * sx;
  if (den == 0) return fit;
  fit.slope = (n * sxy - sx * sy) / den;
  fit.intercept = (sy - fit.slope * sx) / n;
  return fit;
}

std::vector<SweepRow> entropy_sweep(const std::vector<long>& primes, const Sigma10Options& options) {
  std::vector<SweepRow> rows;
  for (long p : primes) {
    SweepRow row;
    row.p = p;
    try {
      const RSLattice rs = build_lambda(p, 10);
      const SearchResult res = sigma10_auto(rs, options);
      row.ok = true;
      row.lambda = format_root(res.certificate.root.value, 8);
      row.entropy = res.certificate.root.entropy;
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace k3salem
