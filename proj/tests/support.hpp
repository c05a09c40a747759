#ifndef K3SALEM_TESTS_SUPPORT_HPP
#define K3SALEM_TESTS_SUPPORT_HPP

#include "k3salem/enumeration.hpp"
#include "k3salem/pipeline.hpp"
#include "k3salem/serialization.hpp"

#include <cmath>
#include <random>
#include <set>

namespace k3salem::testing {

inline Json reference(const std::string& name) { return load_json(default_data_dir() + "/" + name); }

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t n, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
  return m;
}

inline IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps) {
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) return u;
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<long> coef(-2, 2);
  for (int s = 0; s < steps; ++s) {
    const std::size_t i = idx(rng), j = idx(rng);
    if (i == j) continue;
    const long c = coef(rng);
    for (std::size_t k = 0; k < n; ++k) u(i, k) += c * u(j, k);
  }
  return u;
}

inline long max_abs_entry(const IntMatrix& m) {
  long best = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) best = std::max(best, std::abs(m(i, j).get_si()));
  return best;
}

/// Random even negative definite Gram of the given rank (0 allowed).
inline IntMatrix random_negative_definite(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> diag(1, 5);
  std::uniform_int_distribution<long> off(-3, 3);
  for (;;) {
    IntMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      g(i, i) = -2 * diag(rng);
      for (std::size_t j = 0; j < i; ++j) g(i, j) = g(j, i) = off(rng);
    }
    if (n == 0 || signature(g).negative == n) return g;
  }
}

/// Even hyperbolic Gram of rank 2..4 with entries in [-10, 10]: U(k) or <2k>
/// plus a negative definite part, in a random basis.
inline IntMatrix random_hyperbolic(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> scale(1, 3);
  for (;;) {
    const long k = scale(rng);
    IntMatrix g = direct_sum({IntMatrix{{0, k}, {k, 0}}, random_negative_definite(rng, n - 2)});
    if (rng() % 3 == 0) g = direct_sum({IntMatrix{{2 * k}}, random_negative_definite(rng, n - 1)});
    const IntMatrix u = random_unimodular(rng, n, 3);
    IntMatrix t = u * g * u.transpose();
    if (max_abs_entry(t) <= 10) return t;
  }
}

inline double to_d(const Rational& q) { return q.get_d(); }

/// Bound on |x_i| over real x with <x, v> = c and <x, x> = d, for v of
/// positive norm in a hyperbolic lattice (v-perp negative definite).
inline long coordinate_bound(const Lattice& l, const LatticeVector& v, const Integer& c, const Integer& d) {
  const auto inv = inverse_exact(l.gram());
  const Rational vv(l.norm(v));
  const Rational w2 = Rational(d) - Rational(c * c) / vv;  // norm of the v-perp part of x
  if (w2 > 0) return -1;                                    // no real solution
  double best = 0;
  for (std::size_t i = 0; i < l.rank(); ++i) {
    // e_i^dual = row i of inv; <x, e_i^dual> = x_i
    const Rational ev(v[i]);  // <e_i^dual, v>
    const Rational ee = inv[i][i];
    const Rational wi2 = ee - ev * ev / vv;
    const double b = std::abs(to_d(Rational(c) * ev / vv)) + std::sqrt(to_d(w2) * to_d(wi2));
    best = std::max(best, b);
  }
  return static_cast<long>(std::floor(best + 1e-9));
}

/// Bound on |x_i| over real x with <x, x> = d in a negative definite lattice.
inline long definite_bound(const Lattice& l, const Integer& d) {
  const auto inv = inverse_exact(l.gram());
  double best = 0;
  for (std::size_t i = 0; i < l.rank(); ++i) best = std::max(best, std::sqrt(to_d(Rational(d) * inv[i][i])));
  return static_cast<long>(std::floor(best + 1e-9));
}

/// A vector of positive norm with small coordinates.
// The box widens every 1000 misses; a hyperbolic lattice always has positive vectors.
inline LatticeVector random_positive(std::mt19937_64& rng, const Lattice& l, long box = 2) {
  for (long miss = 0;; ++miss) {
    std::uniform_int_distribution<long> d(-box - miss / 1000, box + miss / 1000);
    LatticeVector v(l.rank());
    for (auto& x : v) x = d(rng);
    if (l.norm(v) > 0) return v;
  }
}

inline std::set<LatticeVector> as_set(const std::vector<LatticeVector>& v) { return {v.begin(), v.end()}; }

struct OracleTally {
  long lattices = 0;
  long comparisons = 0;
  long mismatches = 0;
  long nonempty = 0;  ///< comparisons where the oracle found at least one vector
  std::string first_mismatch;
};

/// Compares enumerate_constrained, set_R, set_F and set_S against the brute
/// force oracle on random lattices of rank <= 4 until `lattices` lattices
/// contributed at least one comparison.
inline OracleTally oracle_equivalence(std::uint64_t seed, long lattices, long max_box = 9) {
  std::mt19937_64 rng(seed);
  OracleTally t;
  auto compare = [&](const char* what, const Lattice& l, const std::vector<LatticeVector>& got,
                     const std::vector<LatticeVector>& want) {
    ++t.comparisons;
    t.nonempty += !want.empty();
    if (got == want) return;
    if (t.mismatches++ == 0) t.first_mismatch = std::string(what) + " on Gram " + l.gram().to_string();
  };
  while (t.lattices < lattices) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng() % 4);
    bool used = false;
    if (n == 1 || rng() % 4 == 0) {
      const Lattice l(random_negative_definite(rng, n));
      const Integer d = -2 * static_cast<long>(1 + rng() % 3);
      const long b = definite_bound(l, d);
      if (b <= max_box) {
        compare("definite slice", l, enumerate_constrained(l, {}, d),
                brute_force_oracle(l, b, [&](const LatticeVector& x) { return l.norm(x) == d; }));
        used = true;
      }
    } else {
      const Lattice l(random_hyperbolic(rng, n));
      const LatticeVector v = random_positive(rng, l);
      const Integer c = static_cast<long>(rng() % 3);
      const Integer d = -2 * static_cast<long>(rng() % 2);
      if (long b = coordinate_bound(l, v, c, d); b >= 0 && b <= max_box) {
        compare("constrained slice", l, enumerate_constrained(l, {{v, c}}, d),
                brute_force_oracle(l, b, [&](const LatticeVector& x) { return l.norm(x) == d && l.inner(x, v) == c; }));
        used = true;
      }
      if (long b = coordinate_bound(l, v, 0, -2); b >= 0 && b <= max_box) {
        compare("R", l, set_R(l, v),
                brute_force_oracle(l, b, [&](const LatticeVector& x) { return l.norm(x) == -2 && l.inner(x, v) == 0; }));
        used = true;
      }
      if (long b = coordinate_bound(l, v, 1, 0); b >= 0 && b <= max_box) {
        compare("F", l, set_F(l, v),
                brute_force_oracle(l, b, [&](const LatticeVector& x) { return l.norm(x) == 0 && l.inner(x, v) == 1; }));
        used = true;
      }
      LatticeVector u = random_positive(rng, l);
      if (l.inner(u, v) < 0) u = -u;
      const Integer uu = l.norm(u), vv = l.norm(v), uv = l.inner(u, v);
      if (uv > 0 && u != v) {
        // r in S(u, v) pairs with v in [-bmax, -1], where the projection of r to
        // span(u, v) has norm at least -2.
        const double disc = 2.0 * Integer(uv * uv - uu * vv).get_d();
        const long bmax = static_cast<long>(std::floor(std::sqrt(std::max(0.0, disc / uu.get_d())) + 1e-9));
        long b = 0;
        for (long c2 = 1; c2 <= bmax && b >= 0; ++c2) b = std::max(b, coordinate_bound(l, v, -c2, -2));
        if (b <= max_box) {
          compare("S", l, set_S(l, u, v), brute_force_oracle(l, b, [&](const LatticeVector& r) {
                    return l.norm(r) == -2 && l.inner(r, u) > 0 && l.inner(r, v) < 0;
                  }));
          used = true;
        }
      }
    }
    if (used) ++t.lattices;
  }
  return t;
}

}  // namespace k3salem::testing

#endif
