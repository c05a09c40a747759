#ifndef K3SALEM_PIPELINE_HPP
#define K3SALEM_PIPELINE_HPP

#include "k3salem/involution.hpp"
#include "k3salem/rs_lattice.hpp"
#include "k3salem/salem.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace k3salem {

struct SearchConfig {
  long p = 7;
  int sigma = 1;
  std::uint64_t seed = 0;
  std::size_t pool_size = 64;
  long pool_attempts = 0;  ///< square-2 draws for the pool; 0 means 50 * pool_size
  int max_word_length = 22;
  long trial_budget = 1000000;
  double time_budget_seconds = 900;
  std::optional<std::pair<long, long>> q_gamma;
  unsigned threads = 1;
  int prime_budget = 25;
  SquareTwoSampling sampling{.split_u_part = true};

  void validate() const;
};

/// The lattice for (p, sigma) with h0 = u1 + u2 and the chamber of the ample
/// list [h0, p e_1^dual, ..., p e_22^dual].
class SearchContext {
 public:
  SearchContext(long p, int sigma, std::optional<std::pair<long, long>> q_gamma = std::nullopt);
  SearchContext(const SearchContext&) = delete;
  SearchContext& operator=(const SearchContext&) = delete;

  const RSLattice& rs() const { return *rs_; }
  const Lattice& lattice() const { return rs_->lattice; }
  const Chamber& chamber() const { return *chamber_; }
  const LatticeVector& h0() const { return chamber_->ample().h0; }

 private:
  std::unique_ptr<RSLattice> rs_;
  std::unique_ptr<Chamber> chamber_;
};

struct PoolStats {
  long draws = 0;
  long rejected_f_nonempty = 0;
  long duplicates = 0;
};

/// Degree-2 polarizations from random square-2 vectors, reflected into the
/// chamber, deduplicated by the chamber representative.
std::vector<InvolutionRecord> generate_involution_pool(const SearchContext& ctx, const SearchConfig& config,
                                                       PoolStats* stats = nullptr);

struct SearchStats {
  long trials = 0;
  long prefilter_rejections = 0;
  long exact_checks = 0;
  std::map<std::string, long> rejection_reasons;
  double seconds = 0;
  bool exhausted = false;
  std::string obstruction;  ///< set when no word over the pool can be Salem; no trials run
};

struct SearchResult {
  long p = 0;
  int sigma = 0;
  long q = 0;  ///< H block parameters of the lattice the matrices act on
  long gamma = 0;
  std::uint64_t seed = 0;
  long trial_index = -1;
  std::vector<std::size_t> word;  ///< indices into involutions, multiplied left to right
  std::vector<InvolutionRecord> involutions;
  IntPolynomial charpoly;
  SalemCertificate certificate;
  int base_k = 0;  ///< sigma = 10 constructions only
};

struct SearchOutcome {
  std::optional<SearchResult> result;
  SearchStats stats;
};

/// Seed of the trial with the given index; the set of examined words does not
/// depend on the thread count.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

/// Word (pool indices) examined by a trial.
std::vector<std::size_t> trial_word(std::uint64_t seed, std::uint64_t trial, std::size_t pool_size, int max_word_length);

IntMatrix word_product(const std::vector<InvolutionRecord>& pool, const std::vector<std::size_t>& word);

/// Empty unless some nonzero x satisfies x M = x for every pool matrix, or
/// x M = -x for every one; then every word product has 1 or -1 as an eigenvalue.
std::string pool_obstruction(const std::vector<InvolutionRecord>& pool);

/// Random products of pool involutions until one has an irreducible Salem
/// characteristic polynomial; the accepted trial is the smallest accepted index.
SearchOutcome search_irreducible_salem(const SearchContext& ctx, const SearchConfig& config,
                                       const std::vector<InvolutionRecord>& pool);

/// Re-multiplies the stored matrices and re-runs the Salem check.
SalemVerdict verify_result(const Lattice& lattice, const SearchResult& result, int prime_budget = 25);

// ---------------------------------------------------------------- sigma = 10

/// h = a u1 + u2 + v with v in the H block.
struct Sigma10Seed {
  Integer a;
  IntVector v;  ///< length 4
};

class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Sigma10Options {
  std::optional<int> base_k;  ///< try 1..6 when unset
  std::uint64_t seed = 0;
  long max_a = 8;                 ///< auto search: largest a tried
  long selection_attempts = 200;  ///< auto search: random selections of six seeds
  int prime_budget = 25;
};

/// h_1..h_6 from the seeds, then h_{6+nu} = (a_k + 1, 1, v_k) + e_nu and
/// h_{14+nu} = (a_k + 1, 1, v_k) + e'_nu.
std::vector<LatticeVector> sigma10_vectors(const RSLattice& rs, const std::vector<Sigma10Seed>& seeds, int base_k);

/// Properties (i)-(iv) for h_1..h_n; returns an empty string or the first
/// failure, e.g. "h7: (iii) S(h1, h7) is not empty".
std::string sigma10_property_failure(const Lattice& lattice, const std::vector<LatticeVector>& hs);

/// Verifies (i)-(v) for the given seeds and returns the product of the 22
/// smooth involutions as a search result. Throws ConstructionError naming the
/// failing property when no admissible base index works.
SearchResult sigma10_construct(const RSLattice& rs, const std::vector<Sigma10Seed>& seeds, const Sigma10Options& options);

/// Seeded search for six seeds satisfying (i)-(iv) and a base index with (v).
SearchResult sigma10_auto(const RSLattice& rs, const Sigma10Options& options);

// ---------------------------------------------------------------- reference data

struct ReferenceCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Directory of the reference data files; the K3SALEM_DATA_DIR environment
/// variable overrides the build-time location.
std::string default_data_dir();

/// The characteristic 7 worked example against data/x7_reference.json.
std::vector<ReferenceCheck> verify_reference_example(const std::string& data_dir = default_data_dir());

struct SweepRow {
  long p = 0;
  bool ok = false;
  std::string lambda;
  double entropy = 0;
  std::string error;
};

struct LinearFit {
  double slope = 0;
  double intercept = 0;
  std::size_t points = 0;
};

/// Least squares y = intercept + slope * x.
LinearFit least_squares(const std::vector<double>& x, const std::vector<double>& y);

std::vector<SweepRow> entropy_sweep(const std::vector<long>& primes, const Sigma10Options& options);

}  // namespace k3salem

#endif  // K3SALEM_PIPELINE_HPP
