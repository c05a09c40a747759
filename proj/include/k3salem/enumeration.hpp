#ifndef K3SALEM_ENUMERATION_HPP
#define K3SALEM_ENUMERATION_HPP

#include "k3salem/lattice.hpp"

#include <functional>
#include <vector>

namespace k3salem {

/// <x, against> = value.
struct LinearConstraint {
  LatticeVector against;
  Integer value;
};

/// Lattice points on the slice {<x, v_i> = a_i} with <x, x> = d, for a fixed
/// list of constraint vectors v_i and many target tuples a.
///
/// Integer solutions of the linear system are x0(a) + Z^k K with K a kernel
/// basis; the norm condition becomes an ellipsoid in Z^k for the positive
/// definite form -K G K^T. The kernel form is LLL-reduced once and each
/// target costs a back substitution, a rounding of the ellipsoid center and a
/// Fincke-Pohst walk in double precision with exact checks at the leaves.
class SliceEnumerator {
 public:
  /// Throws PreconditionError when the complement of the constraint span is
  /// not negative definite (the slice could be infinite).
  SliceEnumerator(const Lattice& lattice, std::vector<LatticeVector> against);

  using Visitor = std::function<bool(const LatticeVector&)>;

  /// Calls visit on every solution in enumeration order; stops early when the
  /// visitor returns false. Returns false iff stopped early.
  bool for_each(const std::vector<Integer>& values, const Integer& d, const Visitor& visit) const;

  /// Every solution, sorted.
  std::vector<LatticeVector> solve(const std::vector<Integer>& values, const Integer& d) const;

  std::size_t kernel_rank() const { return kernel_.rows(); }

 private:
  bool particular(const std::vector<Integer>& values, std::vector<Integer>& y) const;

  const Lattice* lattice_;
  std::vector<LatticeVector> against_;
  IntMatrix particular_rows_;  // rank x n, y * rows = x0
  IntMatrix echelon_top_;      // rank x m
  std::vector<std::size_t> pivots_;
  IntMatrix kernel_;           // reduced kernel basis, k x n
  // center c(y) = center_num * y / center_den in reduced kernel coordinates
  IntMatrix center_num_;       // k x rank
  Integer center_den_;
  // residual radius R(y) = y S y^T - d
  std::vector<RatVector> radius_form_;
  std::vector<double> gs_norms_;
  std::vector<std::vector<double>> mu_;
};

std::vector<LatticeVector> enumerate_constrained(const Lattice& lattice, const std::vector<LinearConstraint>& constraints,
                                                 const Integer& d);

/// R(v) = {r : <r, v> = 0, <r, r> = -2}.
std::vector<LatticeVector> set_R(const Lattice& lattice, const LatticeVector& v);

/// F(v) = {f : <f, v> = 1, <f, f> = 0}.
std::vector<LatticeVector> set_F(const Lattice& lattice, const LatticeVector& v);

/// S(u, v) = {r : <r, u> > 0, <r, v> < 0, <r, r> = -2}.
std::vector<LatticeVector> set_S(const Lattice& lattice, const LatticeVector& u, const LatticeVector& v);

/// Same set, but stops at the first element found.
bool set_S_is_empty(const Lattice& lattice, const LatticeVector& u, const LatticeVector& v);

using VectorPredicate = std::function<bool(const LatticeVector&)>;

/// All vectors with coordinates in [-bound, bound] satisfying the predicate,
/// sorted. Only for rank <= 5.
std::vector<LatticeVector> brute_force_oracle(const Lattice& lattice, long bound, const VectorPredicate& predicate);

}  // namespace k3salem

#endif  // K3SALEM_ENUMERATION_HPP
