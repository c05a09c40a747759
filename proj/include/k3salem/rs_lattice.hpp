#ifndef K3SALEM_RS_LATTICE_HPP
#define K3SALEM_RS_LATTICE_HPP

#include "k3salem/lattice.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace k3salem {

/// Characteristic p, Artin invariant sigma and the auxiliary prime q with
/// gamma^2 + p = 0 mod q used in the rank-4 block H.
struct RSParams {
  long p = 0;
  int sigma = 0;
  long q = 0;
  long gamma = 0;
  /// 1 when the hyperbolic plane is U, p when it is U(p).
  long p_prime() const { return sigma % 2 == 1 ? 1 : p; }
};

struct BasisTag {
  enum class Kind { UPair, HBlock, E8Block };
  Kind kind = Kind::UPair;
  int block_index = 0;  ///< 0 for U and H; 0 or 1 for the E8 blocks
  int index = 0;        ///< 1-based position inside the block
  long scale = 1;       ///< scaling of the block form (1, p, -1 or -p)
  /// Short name: u1, u2, eta1..eta4 (H blocks are numbered when repeated),
  /// e1..e8 for the first E8 block and e'1..e'8 for the second.
  std::string name;
};

bool is_prime(long n);

/// Legendre symbol (a | p) for an odd prime p, by modular exponentiation.
int legendre(long a, long p);

/// Smallest prime q = 3 mod 8 with (-q | p) = -1, q != p, and the smallest
/// gamma in [0, q) with gamma^2 + p = 0 mod q.
std::pair<long, long> find_q_gamma(long p);

/// Negative definite rank-4 block with discriminant group (Z/p)^2.
IntMatrix gram_H(const RSParams& params);

/// E8 root lattice Gram scaled by scale (-1 or -p).
IntMatrix gram_E8(long scale);

/// Hyperbolic plane U scaled by scale (1 or p).
IntMatrix gram_U(long scale);

struct RSLattice {
  Lattice lattice;
  std::vector<BasisTag> tags;
  RSParams params;

  /// Index of the first basis vector of the named block: "U", "H", "E8", "E8'".
  std::size_t block_start(BasisTag::Kind kind, int block_index = 0) const;
};

/// Rudakov-Shafarevich lattice of rank 22 as a block-diagonal sum, in the
/// order U', then the H blocks, then the E8 blocks. The auxiliary q and gamma
/// default to the minimal choice of find_q_gamma.
RSLattice build_lambda(long p, int sigma, std::optional<std::pair<long, long>> q_gamma = std::nullopt);

struct SquareTwoSampling {
  long box = 2;                 ///< initial coordinate bound for n
  long widen_every = 64;        ///< double the box after this many failures
  long max_attempts = 1000000;  ///< then BudgetExhausted
  /// For U' = U: split a * b = (2 - <n, n>) / 2 with a, b >= 2 instead of
  /// b = 1. With b = 1 (or a = 1) the isotropic u1 (or u2) pairs to 1 with v.
  bool split_u_part = false;
};

class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// v = a u1 + u2 + n with n random in the negative definite part and
/// a = (2 - <n, n>) / (2 p'), so that <v, v> = 2. See split_u_part.
LatticeVector random_square2(const RSLattice& rs, std::mt19937_64& rng, const SquareTwoSampling& sampling = {});

/// p * (row i of gram^{-1}) for every i; these are the vectors p e_i^dual.
std::vector<LatticeVector> scaled_dual_basis(const Lattice& lattice, long p);

}  // namespace k3salem

#endif  // K3SALEM_RS_LATTICE_HPP
