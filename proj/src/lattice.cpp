#include "k3salem/lattice.hpp"

#include "k3salem/polynomial.hpp"

namespace k3salem {

namespace {

std::size_t sign_variations(const std::vector<Integer>& coeffs) {
  std::size_t count = 0;
  int last = 0;
  for (const auto& c : coeffs) {
    int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace

Signature signature(const IntMatrix& gram) {
  if (!gram.is_symmetric()) throw PreconditionError("signature of a non-symmetric matrix");
  IntPolynomial chi = char_poly(gram);
  std::vector<Integer> c = chi.coefficients();
  Signature s;
  std::size_t lowest = 0;
  while (lowest < c.size() && c[lowest] == 0) ++lowest;
  s.zero = lowest;
  s.positive = sign_variations(c);
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  s.negative = sign_variations(c);
  if (s.positive + s.negative + s.zero != gram.rows())
    throw ArithmeticError("root count of a symmetric characteristic polynomial is inconsistent");
  return s;
}

Lattice::Lattice(IntMatrix gram, std::optional<LatticeVector> cone_anchor) : gram_(std::move(gram)) {
  if (!gram_.is_symmetric()) throw PreconditionError("Gram matrix is not symmetric");
  for (std::size_t i = 0; i < gram_.rows(); ++i)
    if (mpz_odd_p(gram_(i, i).get_mpz_t())) throw PreconditionError("Gram matrix has an odd diagonal entry");
  signature_ = k3salem::signature(gram_);
  if (signature_.zero != 0) throw PreconditionError("Gram matrix is degenerate");
  if (cone_anchor) *this = with_anchor(*cone_anchor);
}

Lattice Lattice::hyperbolic(IntMatrix gram, std::optional<LatticeVector> cone_anchor) {
  Lattice l(std::move(gram), std::move(cone_anchor));
  if (!l.is_hyperbolic()) throw PreconditionError("lattice is not hyperbolic");
  return l;
}

Lattice Lattice::with_anchor(const LatticeVector& anchor) const {
  check_vector(anchor);
  if (norm(anchor) <= 0) throw PreconditionError("cone anchor must have positive square-norm");
  Lattice l = *this;
  l.anchor_ = anchor;
  return l;
}

void Lattice::check_vector(const LatticeVector& x) const {
  if (x.size() != rank()) throw PreconditionError("vector length does not match lattice rank");
}

Integer Lattice::inner(const LatticeVector& x, const LatticeVector& y) const {
  check_vector(x);
  check_vector(y);
  return dot(x * gram_, y);
}

LatticeVector reflect(const Lattice& lattice, const LatticeVector& r, const LatticeVector& x) {
  if (lattice.norm(r) != -2) throw PreconditionError("reflection vector is not a (-2)-vector");
  LatticeVector out = x;
  const Integer c = lattice.inner(x, r);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += c * r[i];
  return out;
}

bool is_isometry(const Lattice& lattice, const IntMatrix& m) {
  if (m.rows() != lattice.rank() || m.cols() != lattice.rank()) return false;
  return m * lattice.gram() * m.transpose() == lattice.gram();
}

bool in_positive_cone(const Lattice& lattice, const LatticeVector& v) {
  if (!lattice.cone_anchor()) throw PreconditionError("lattice has no cone anchor");
  return lattice.norm(v) > 0 && lattice.inner(v, *lattice.cone_anchor()) > 0;
}

}  // namespace k3salem
