#include "k3salem/pipeline.hpp"
#include "k3salem/serialization.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace k3salem;

namespace {

constexpr int kOk = 0;
constexpr int kRejected = 1;
constexpr int kInvalid = 2;

struct LatticeArgs {
  long p = 7;
  int sigma = 1;
  long q = 0;
  long gamma = -1;

  std::optional<std::pair<long, long>> q_gamma() const {
    if (q == 0 && gamma < 0) return std::nullopt;
    if (q == 0 || gamma < 0) throw PreconditionError("--q and --gamma must be given together");
    return std::make_pair(q, gamma);
  }
};

void add_lattice_options(CLI::App* cmd, LatticeArgs& a, bool with_sigma = true) {
  cmd->add_option("--p", a.p, "odd prime")->required();
  if (with_sigma) cmd->add_option("--sigma", a.sigma, "Artin invariant, 1..10")->required();
  cmd->add_option("--q", a.q, "override the H block prime q");
  cmd->add_option("--gamma", a.gamma, "override the H block parameter gamma");
}

void emit(const Json& j, const std::string& out) {
  if (out.empty()) {
    std::cout << j.dump(1) << "\n";
  } else {
    save_json(out, j);
  }
}

void print_certificate(const SalemCertificate& c) {
  std::cout << "lambda      " << format_root(c.root.value, 12) << "\n"
            << "entropy     " << format_root(c.root.entropy, 12) << " (natural log)\n"
            << "irreducible " << to_string(c.irreducibility) << "\n";
}

void print_stats(const SearchStats& s) {
  std::cerr << "trials " << s.trials << ", prefilter rejections " << s.prefilter_rejections << ", exact checks " << s.exact_checks
            << ", " << format_root(s.seconds, 4) << " s\n";
  for (const auto& [reason, count] : s.rejection_reasons) std::cerr << "  " << reason << ": " << count << "\n";
}

std::vector<long> parse_primes(const std::string& list) {
  std::vector<long> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const long p = std::stol(item, &used);
    if (used != item.size()) throw PreconditionError("bad prime '" + item + "'");
    out.push_back(p);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Double plane involutions and Salem polynomials on supersingular K3 lattices"};
  app.require_subcommand(1);
  std::function<int()> action;

  LatticeArgs lat;
  std::string out;

  auto* build = app.add_subcommand("build-lattice", "write the Gram matrix of the lattice for (p, sigma)");
  add_lattice_options(build, lat);
  build->add_option("--out", out, "output JSON (stdout when omitted)");
  build->callback([&] {
    action = [&] {
      const RSLattice rs = build_lambda(lat.p, lat.sigma, lat.q_gamma());
      emit(lattice_to_json(rs), out);
      return kOk;
    };
  });

  SearchConfig cfg;
  std::string pool_path;
  auto* pool = app.add_subcommand("pool", "generate degree-2 polarizations and their involution matrices");
  add_lattice_options(pool, lat);
  pool->add_option("--seed", cfg.seed, "random seed");
  pool->add_option("--size", cfg.pool_size, "target pool size");
  pool->add_option("--attempts", cfg.pool_attempts, "square-2 draws (0: 50 * size)");
  pool->add_option("--out", out, "output JSON (stdout when omitted)");
  pool->callback([&] {
    action = [&] {
      cfg.p = lat.p;
      cfg.sigma = lat.sigma;
      cfg.q_gamma = lat.q_gamma();
      const SearchContext ctx(cfg.p, cfg.sigma, cfg.q_gamma);
      PoolStats stats;
      const auto records = generate_involution_pool(ctx, cfg, &stats);
      std::cerr << records.size() << " involutions from " << stats.draws << " draws (" << stats.rejected_f_nonempty
                << " with F nonempty, " << stats.duplicates << " duplicates)\n";
      emit(pool_to_json(cfg, records), out);
      return kOk;
    };
  });

  auto* search = app.add_subcommand("search", "random products of pool involutions until an irreducible Salem polynomial");
  add_lattice_options(search, lat);
  search->add_option("--seed", cfg.seed, "random seed");
  search->add_option("--pool", pool_path, "pool JSON (generated when omitted)");
  search->add_option("--size", cfg.pool_size, "pool size when generating");
  search->add_option("--max-word", cfg.max_word_length, "longest word, at most 22");
  search->add_option("--budget-trials", cfg.trial_budget, "trial budget");
  search->add_option("--budget-seconds", cfg.time_budget_seconds, "time budget");
  search->add_option("--threads", cfg.threads, "worker threads");
  search->add_option("--out", out, "output JSON (stdout when omitted)");
  search->callback([&] {
    action = [&] {
      cfg.p = lat.p;
      cfg.sigma = lat.sigma;
      cfg.q_gamma = lat.q_gamma();
      cfg.validate();
      const SearchContext ctx(cfg.p, cfg.sigma, cfg.q_gamma);
      const auto records = pool_path.empty() ? generate_involution_pool(ctx, cfg) : pool_from_json(load_json(pool_path));
      const SearchOutcome res = search_irreducible_salem(ctx, cfg, records);
      print_stats(res.stats);
      if (!res.result) {
        if (!res.stats.obstruction.empty()) {
          std::cerr << "no word can be Salem: " << res.stats.obstruction << "\n";
          if (cfg.sigma == 10) std::cerr << "use the sigma10 subcommand\n";
        } else {
          std::cerr << "budget exhausted without an accepted word\n";
          if (std::all_of(records.begin(), records.end(), [](const auto& r) { return r.components.empty(); }))
            std::cerr << "every pooled involution is smooth; a product of k of them fixes the orthogonal complement "
                         "of k vectors, use the sigma10 subcommand\n";
        }
        return kRejected;
      }
      std::cout << "word length " << res.result->word.size() << " (trial " << res.result->trial_index << ")\n";
      print_certificate(res.result->certificate);
      emit(result_to_json(*res.result, &res.stats), out);
      return kOk;
    };
  });

  std::string vectors_path;
  Sigma10Options s10;
  int base_k = 0;
  auto* sigma10 = app.add_subcommand("sigma10", "22 smooth involutions for sigma = 10");
  add_lattice_options(sigma10, lat, false);
  sigma10->add_option("--vectors", vectors_path, "six seed vectors (seeded search when omitted)");
  sigma10->add_option("--base-k", base_k, "base index 1..6 for the extension (all tried when omitted)");
  sigma10->add_option("--seed", s10.seed, "random seed for the search");
  sigma10->add_option("--max-a", s10.max_a, "largest u1 coefficient in the search");
  sigma10->add_option("--attempts", s10.selection_attempts, "selections of six seeds");
  sigma10->add_option("--out", out, "output JSON (stdout when omitted)");
  sigma10->callback([&] {
    action = [&] {
      if (base_k != 0) s10.base_k = base_k;
      const RSLattice rs = build_lambda(lat.p, 10, lat.q_gamma());
      SearchResult res;
      try {
        res = vectors_path.empty() ? sigma10_auto(rs, s10) : sigma10_construct(rs, seeds_from_json(load_json(vectors_path)), s10);
      } catch (const ConstructionError& e) {
        std::cerr << "construction failed: " << e.what() << "\n";
        return kRejected;
      }
      std::cout << "base index k = " << res.base_k << "\n";
      print_certificate(res.certificate);
      emit(result_to_json(res), out);
      return kOk;
    };
  });

  std::string result_path;
  auto* verify = app.add_subcommand("verify", "recheck a stored search result");
  verify->add_option("--result", result_path, "result JSON")->required();
  verify->callback([&] {
    action = [&] {
      const SearchResult res = result_from_json(load_json(result_path));
      std::optional<std::pair<long, long>> qg;
      if (res.q != 0) qg = std::make_pair(res.q, res.gamma);
      const RSLattice rs = build_lambda(res.p, res.sigma, qg);
      const SalemVerdict v = verify_result(rs.lattice, res);
      if (!v.accepted) {
        std::cout << "FAILED: " << v.reason << "\n";
        return kRejected;
      }
      std::cout << "verified\n";
      print_certificate(*v.certificate);
      return kOk;
    };
  });

  std::string data_dir = default_data_dir();
  auto* example = app.add_subcommand("reference-example", "the characteristic 7 worked example against the reference data");
  example->add_option("--data-dir", data_dir, "reference data directory");
  example->callback([&] {
    action = [&] {
      bool all = true;
      for (const auto& c : verify_reference_example(data_dir)) {
        all = all && c.passed;
        std::cout << (c.passed ? "ok    " : "FAIL  ") << c.name;
        if (!c.detail.empty()) std::cout << "  [" << c.detail << "]";
        std::cout << "\n";
      }
      return all ? kOk : kRejected;
    };
  });

  std::string poly_path;
  bool standalone = false;
  int prime_budget = 25;
  auto* salem = app.add_subcommand("salem-check", "decide whether a polynomial is an irreducible Salem polynomial");
  salem->add_option("--poly", poly_path, "polynomial JSON {\"coeffs_desc\": [...]}")->required();
  salem->add_flag("--standalone", standalone, "do not assume the polynomial comes from a K3 automorphism");
  salem->add_option("--primes", prime_budget, "prime budget of the irreducibility sieve");
  salem->add_option("--out", out, "certificate JSON");
  salem->callback([&] {
    action = [&] {
      const IntPolynomial phi = polynomial_from_json(load_json(poly_path));
      const SalemVerdict v =
          salem_check(phi, standalone ? SalemContext::Standalone : SalemContext::FromK3Automorphism, prime_budget);
      if (!v.accepted) {
        std::cout << "rejected: " << v.reason << "\n";
        return kRejected;
      }
      std::cout << "accepted\n";
      print_certificate(*v.certificate);
      if (!out.empty()) save_json(out, certificate_to_json(*v.certificate));
      return kOk;
    };
  });

  std::string primes;
  auto* sweep = app.add_subcommand("entropy-sweep", "sigma = 10 constructions over a list of primes");
  sweep->add_option("--primes", primes, "comma separated primes")->required();
  sweep->add_option("--seed", s10.seed, "random seed for each construction");
  sweep->add_option("--out", out, "CSV output (stdout when omitted)");
  sweep->callback([&] {
    action = [&] {
      const auto rows = entropy_sweep(parse_primes(primes), s10);
      std::ofstream file;
      if (!out.empty()) {
        file.open(out);
        if (!file) throw PreconditionError("cannot write " + out);
      }
      std::ostream& csv = out.empty() ? std::cout : file;
      csv << "p,log_p,lambda_str,entropy\n";
      std::vector<double> ln, log10p, ent;
      for (const auto& r : rows) {
        if (!r.ok) {
          std::cerr << "p = " << r.p << ": " << r.error << "\n";
          continue;
        }
        csv << r.p << "," << format_root(std::log(static_cast<double>(r.p)), 12) << "," << r.lambda << ","
            << format_root(r.entropy, 12) << "\n";
        ln.push_back(std::log(static_cast<double>(r.p)));
        log10p.push_back(std::log10(static_cast<double>(r.p)));
        ent.push_back(r.entropy);
      }
      if (ent.size() >= 2) {
        const LinearFit fe = least_squares(ln, ent);
        const LinearFit f10 = least_squares(log10p, ent);
        std::cerr << "fit, natural log: entropy = " << format_root(fe.intercept, 5) << " + " << format_root(fe.slope, 5)
                  << " ln p\n";
        std::cerr << "fit, log10:       entropy = " << format_root(f10.intercept, 5) << " + " << format_root(f10.slope, 5)
                  << " log10 p\n";
      }
      return ent.size() == rows.size() ? kOk : kRejected;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }
  try {
    return action();
  } catch (const PreconditionError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const Json::exception& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const BudgetExhausted& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return kRejected;
  }
}
