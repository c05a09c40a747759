#ifndef K3SALEM_CHAMBER_HPP
#define K3SALEM_CHAMBER_HPP

#include "k3salem/enumeration.hpp"

#include <random>
#include <vector>

namespace k3salem {

/// [h0, rho_1, ..., rho_K]. The lexicographic sign of the pairings
/// (<h0, x>, <rho_1, x>, ...) picks a chamber D(a) of the (-2)-reflection
/// group; h0 lies in its closure.
struct AmpleList {
  LatticeVector h0;
  std::vector<LatticeVector> rhos;
};

bool is_ample_list(const Lattice& lattice, const AmpleList& a);

/// -1, 0 or 1: sign of the first nonzero pairing of x with h0, rho_1, ...
int lex_sign(const Lattice& lattice, const AmpleList& a, const LatticeVector& x);

struct ChamberPlacement {
  LatticeVector h;                  ///< image of v inside the chamber
  std::vector<LatticeVector> word;  ///< reflections, applied first to last
  AmpleList extended;               ///< the list with any tie-breaking vectors appended
};

/// A chamber D(a) with its positive roots R+(a) = {r in R(h0) : lex_sign(r) > 0},
/// computed once at construction.
class Chamber {
 public:
  Chamber(const Lattice& lattice, AmpleList a);

  const Lattice& lattice() const { return *lattice_; }
  const AmpleList& ample() const { return ample_; }
  const std::vector<LatticeVector>& positive_roots() const { return positive_; }

  int lex_sign(const LatticeVector& x) const;
  /// Pairing tuple (<h0, x>, <rho_1, x>, ...).
  std::vector<Integer> pairings(const LatticeVector& x) const;

  /// S(h0, v) is empty and <v, r> >= 0 for every r in R+.
  bool contains(const LatticeVector& v) const;

  /// Reflects v into the chamber along the segment towards h0. Ties between
  /// walls are broken by appending random vectors with coordinates in [-3, 3].
  ChamberPlacement send(const LatticeVector& v, std::mt19937_64& rng, int max_retries = 32) const;

 private:
  const Lattice* lattice_;
  AmpleList ample_;
  std::vector<IntVector> functionals_;  // h0 * G, rho_i * G
  std::vector<LatticeVector> positive_;
};

std::vector<LatticeVector> positive_roots_at(const Lattice& lattice, const AmpleList& a);
bool chamber_contains(const Lattice& lattice, const AmpleList& a, const LatticeVector& v);
ChamberPlacement send_to_chamber(const Lattice& lattice, const AmpleList& a, const LatticeVector& v, std::mt19937_64& rng,
                                 int max_retries = 32);

}  // namespace k3salem

#endif  // K3SALEM_CHAMBER_HPP
