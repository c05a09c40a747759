#ifndef K3SALEM_LATTICE_HPP
#define K3SALEM_LATTICE_HPP

#include "k3salem/exact_linalg.hpp"

#include <optional>

namespace k3salem {

/// Coordinates of a lattice element against the basis of its Gram matrix.
using LatticeVector = IntVector;

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Exact inertia of a symmetric integer matrix. The characteristic polynomial
/// of a symmetric matrix is real-rooted, so Descartes' rule of signs counts
/// its positive and negative roots exactly.
Signature signature(const IntMatrix& gram);

/// Even nondegenerate integral lattice given by a Gram matrix, with an
/// optional anchor vector that selects one of the two positive cones when the
/// form is hyperbolic.
class Lattice {
 public:
  Lattice() = default;
  explicit Lattice(IntMatrix gram, std::optional<LatticeVector> cone_anchor = std::nullopt);

  /// As the constructor, but also requires signature (1, rank - 1).
  static Lattice hyperbolic(IntMatrix gram, std::optional<LatticeVector> cone_anchor = std::nullopt);

  std::size_t rank() const { return gram_.rows(); }
  const IntMatrix& gram() const { return gram_; }
  const Signature& signature() const { return signature_; }
  bool is_hyperbolic() const { return signature_.positive == 1 && signature_.negative + 1 == rank(); }
  const std::optional<LatticeVector>& cone_anchor() const { return anchor_; }
  Lattice with_anchor(const LatticeVector& anchor) const;

  Integer inner(const LatticeVector& x, const LatticeVector& y) const;
  Integer norm(const LatticeVector& x) const { return inner(x, x); }
  /// The functional y -> <x, y> as a row vector, i.e. x * gram.
  IntVector pairing(const LatticeVector& x) const { return x * gram_; }

  void check_vector(const LatticeVector& x) const;

 private:
  IntMatrix gram_;
  Signature signature_;
  std::optional<LatticeVector> anchor_;
};

/// s_r(x) = x + <x, r> r for a (-2)-vector r.
LatticeVector reflect(const Lattice& lattice, const LatticeVector& r, const LatticeVector& x);

/// m acts on row vectors from the right; true iff m * gram * m^T == gram.
bool is_isometry(const Lattice& lattice, const IntMatrix& m);

/// <v, v> > 0 and <v, anchor> > 0.
bool in_positive_cone(const Lattice& lattice, const LatticeVector& v);

}  // namespace k3salem

#endif  // K3SALEM_LATTICE_HPP
