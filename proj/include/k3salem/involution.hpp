#ifndef K3SALEM_INVOLUTION_HPP
#define K3SALEM_INVOLUTION_HPP

#include "k3salem/chamber.hpp"

#include <string>
#include <vector>

namespace k3salem {

/// Connected ADE configuration of (-2)-classes with roots in diagram label
/// order: a_1..a_l along the chain; d_1, d_2 the short arms at the branch
/// node d_3; e_1 the short arm at the branch node e_4 and e_2-e_3-e_4-...
/// the long chain.
struct ADEComponent {
  char type = 'A';
  int rank = 0;
  std::vector<LatticeVector> roots;

  std::string name() const { return std::string(1, type) + std::to_string(rank); }
};

/// Choice among the labelings that differ by a diagram symmetry.
enum class TieBreak { Lexicographic, ReverseLexicographic };

struct InvolutionRecord {
  LatticeVector h;
  std::vector<ADEComponent> components;
  IntMatrix matrix;

  /// Types sorted by (letter, rank) with multiplicities, e.g. "2A1+A7+A9";
  /// empty for a smooth branch curve.
  std::string singularity_string() const;
};

std::string singularity_string(const std::vector<ADEComponent>& components);

/// <h, h> = 2, h in the chamber and F(h) empty.
bool is_polarization_deg2(const Chamber& chamber, const LatticeVector& h);

enum class SimpleRootMode {
  Indecomposable,  ///< r is simple iff it is not a sum of two positive roots
  Incremental,     ///< increasing lex order; r is simple iff r - alpha is never positive for earlier simple alpha
};

/// R+(h): the roots orthogonal to h that are positive for the chamber's
/// lexicographic order, sorted in that order.
std::vector<LatticeVector> positive_roots_orthogonal(const Chamber& chamber, const LatticeVector& h);

/// Simple roots of R+(h) split into labelled ADE components.
std::vector<ADEComponent> exceptional_classes(const Chamber& chamber, const LatticeVector& h,
                                              SimpleRootMode mode = SimpleRootMode::Indecomposable,
                                              TieBreak tie = TieBreak::Lexicographic);

/// Types and labels one connected simply-laced configuration.
ADEComponent classify_component(const Lattice& lattice, const std::vector<LatticeVector>& roots,
                                TieBreak tie = TieBreak::Lexicographic);

/// Permutation of the component's label positions induced by the involution.
std::vector<std::size_t> tau_action(const ADEComponent& component);

/// +1 on span{h, r + r^tau}, -1 on its orthogonal complement.
IntMatrix involution_matrix(const Lattice& lattice, const LatticeVector& h, const std::vector<ADEComponent>& components);

/// x -> <x, h> h - x; equal to involution_matrix when R(h) is empty. With
/// verify set, R(h) and F(h) are checked to be empty first.
IntMatrix smooth_branch_matrix(const Lattice& lattice, const LatticeVector& h, bool verify = true);

/// Full record for a degree-2 polarization; invariants are asserted.
InvolutionRecord make_involution(const Chamber& chamber, const LatticeVector& h);

/// M^2 = I, M G M^T = G and h M = h.
bool check_involution(const Lattice& lattice, const InvolutionRecord& record);

}  // namespace k3salem

#endif  // K3SALEM_INVOLUTION_HPP
