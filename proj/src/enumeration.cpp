#include "k3salem/enumeration.hpp"

#include <algorithm>
#include <cmath>

namespace k3salem {

namespace {

Integer lcm_of_denominators(const std::vector<RatVector>& rows) {
  Integer l = 1;
  for (const auto& row : rows)
    for (const auto& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
  return l;
}

// Slack for floating point pruning; every leaf is checked exactly.
constexpr double kRelativeSlack = 1e-7;
constexpr double kAbsoluteSlack = 1e-6;

}  // namespace

SliceEnumerator::SliceEnumerator(const Lattice& lattice, std::vector<LatticeVector> against)
    : lattice_(&lattice), against_(std::move(against)) {
  const std::size_t n = lattice.rank();
  const std::size_t m = against_.size();
  IntMatrix forms(n, m);
  for (std::size_t j = 0; j < m; ++j) {
    lattice.check_vector(against_[j]);
    IntVector c = lattice.pairing(against_[j]);
    for (std::size_t i = 0; i < n; ++i) forms(i, j) = c[i];
  }
  IntegerEchelon ech = integer_echelon(forms);
  const std::size_t r = ech.rank;
  const std::size_t k = n - r;
  pivots_ = ech.pivot_cols;
  particular_rows_ = IntMatrix(r, n);
  echelon_top_ = IntMatrix(r, m);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < n; ++j) particular_rows_(i, j) = ech.unimodular(i, j);
    for (std::size_t j = 0; j < m; ++j) echelon_top_(i, j) = ech.echelon(i, j);
  }
  IntMatrix kernel(k, n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) kernel(i, j) = ech.unimodular(r + i, j);

  const IntMatrix& g = lattice.gram();
  const IntMatrix yg = particular_rows_ * g;  // r x n
  radius_form_.assign(r, RatVector(r));
  {
    IntMatrix s0 = yg * particular_rows_.transpose();
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) radius_form_[i][j] = s0(i, j);
  }
  center_den_ = 1;
  center_num_ = IntMatrix(k, r);
  if (k == 0) {
    kernel_ = kernel;
    return;
  }

  IntMatrix p = -(kernel * g * kernel.transpose());
  LllResult lll;
  try {
    lll = lll_reduce(p);
  } catch (const PreconditionError&) {
    throw PreconditionError("complement of the constraint span is not negative definite; the slice may be infinite");
  }
  kernel_ = lll.transform * kernel;
  const IntMatrix& pr = lll.gram;
  const IntMatrix w = kernel_ * yg.transpose();  // k x r
  const std::vector<RatVector> pinv = inverse_exact(pr);
  std::vector<RatVector> a(k, RatVector(r));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      Rational s = 0;
      for (std::size_t l = 0; l < k; ++l) s += pinv[i][l] * w(l, j);
      a[i][j] = s;
    }
  center_den_ = lcm_of_denominators(a);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      Rational scaled = a[i][j] * center_den_;
      center_num_(i, j) = scaled.get_num();
    }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      Rational s = 0;
      for (std::size_t l = 0; l < k; ++l) s += w(l, i) * a[l][j];
      radius_form_[i][j] += s;
    }

  gs_norms_.resize(k);
  mu_.assign(k, std::vector<double>(k));
  for (std::size_t i = 0; i < k; ++i) {
    gs_norms_[i] = lll.gs_norms[i].get_d();
    for (std::size_t j = 0; j < i; ++j) mu_[i][j] = lll.mu[i][j].get_d();
  }
}

bool SliceEnumerator::particular(const std::vector<Integer>& values, std::vector<Integer>& y) const {
  const std::size_t r = echelon_top_.rows();
  const std::size_t m = echelon_top_.cols();
  y.assign(r, 0);
  Integer s;
  Integer rem;
  for (std::size_t i = 0; i < r; ++i) {
    const std::size_t col = pivots_[i];
    s = values[col];
    for (std::size_t l = 0; l < i; ++l) s -= y[l] * echelon_top_(l, col);
    mpz_fdiv_qr(y[i].get_mpz_t(), rem.get_mpz_t(), s.get_mpz_t(), echelon_top_(i, col).get_mpz_t());
    if (rem != 0) return false;
  }
  for (std::size_t j = 0; j < m; ++j) {
    s = 0;
    for (std::size_t l = 0; l < r; ++l) s += y[l] * echelon_top_(l, j);
    if (s != values[j]) return false;
  }
  return true;
}

bool SliceEnumerator::for_each(const std::vector<Integer>& values, const Integer& d, const Visitor& visit) const {
  if (values.size() != against_.size()) throw PreconditionError("constraint value count mismatch");
  std::vector<Integer> y;
  if (!particular(values, y)) return true;
  const std::size_t r = y.size();
  const std::size_t k = kernel_.rows();
  const std::size_t n = lattice_->rank();

  Rational radius = -d;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) radius += radius_form_[i][j] * y[i] * y[j];
  if (radius < 0) return true;

  LatticeVector x0(n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) mpz_addmul(x0[j].get_mpz_t(), y[i].get_mpz_t(), particular_rows_(i, j).get_mpz_t());

  auto exact_visit = [&](const LatticeVector& x) {
    if (lattice_->norm(x) != d) return true;
    for (std::size_t i = 0; i < against_.size(); ++i)
      if (lattice_->inner(x, against_[i]) != values[i]) throw ArithmeticError("slice enumeration produced a vector off the slice");
    return visit(x);
  };
  if (k == 0) return radius == 0 ? exact_visit(x0) : true;

  // Shift x0 by the rounded center so the remaining center is in [-1/2, 1/2].
  std::vector<double> frac(k);
  Integer num;
  for (std::size_t i = 0; i < k; ++i) {
    num = 0;
    for (std::size_t j = 0; j < r; ++j) mpz_addmul(num.get_mpz_t(), center_num_(i, j).get_mpz_t(), y[j].get_mpz_t());
    Integer w0 = round_nearest(Rational(num, center_den_));
    if (w0 != 0)
      for (std::size_t j = 0; j < n; ++j) mpz_addmul(x0[j].get_mpz_t(), w0.get_mpz_t(), kernel_(i, j).get_mpz_t());
    Rational f(num - w0 * center_den_, center_den_);
    f.canonicalize();
    frac[i] = f.get_d();
  }

  const double big_r = radius.get_d();
  const double tol = kRelativeSlack * std::max(1.0, big_r) + kAbsoluteSlack;
  std::vector<double> u(k);
  std::vector<long> z(k);
  bool keep_going = true;

  auto leaf = [&]() {
    LatticeVector x = x0;
    for (std::size_t i = 0; i < k; ++i) {
      if (z[i] == 0) continue;
      const Integer zi = z[i];
      for (std::size_t j = 0; j < n; ++j) mpz_addmul(x[j].get_mpz_t(), zi.get_mpz_t(), kernel_(i, j).get_mpz_t());
    }
    return exact_visit(x);
  };

  // Depth-first, last coordinate outermost, increasing values within a level.
  std::function<void(std::size_t, double)> walk = [&](std::size_t level, double rem) {
    double c = frac[level];
    for (std::size_t i = level + 1; i < k; ++i) c -= mu_[i][level] * u[i];
    const double span = std::sqrt(std::max(0.0, rem + tol) / gs_norms_[level]);
    const long lo = static_cast<long>(std::ceil(c - span));
    const long hi = static_cast<long>(std::floor(c + span));
    for (long v = lo; v <= hi && keep_going; ++v) {
      const double t = static_cast<double>(v) - c;
      const double next = rem - gs_norms_[level] * t * t;
      if (next < -tol) continue;
      z[level] = v;
      u[level] = static_cast<double>(v) - frac[level];
      if (level == 0) {
        if (!leaf()) keep_going = false;
      } else {
        walk(level - 1, next);
      }
    }
  };
  walk(k - 1, big_r);
  return keep_going;
}

std::vector<LatticeVector> SliceEnumerator::solve(const std::vector<Integer>& values, const Integer& d) const {
  std::vector<LatticeVector> out;
  for_each(values, d, [&](const LatticeVector& x) {
    out.push_back(x);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LatticeVector> enumerate_constrained(const Lattice& lattice, const std::vector<LinearConstraint>& constraints,
                                                 const Integer& d) {
  std::vector<LatticeVector> against;
  std::vector<Integer> values;
  for (const auto& c : constraints) {
    against.push_back(c.against);
    values.push_back(c.value);
  }
  return SliceEnumerator(lattice, std::move(against)).solve(values, d);
}

std::vector<LatticeVector> set_R(const Lattice& lattice, const LatticeVector& v) {
  if (lattice.norm(v) <= 0) throw PreconditionError("R(v) needs v of positive square-norm");
  return enumerate_constrained(lattice, {{v, 0}}, -2);
}

std::vector<LatticeVector> set_F(const Lattice& lattice, const LatticeVector& v) {
  if (lattice.norm(v) <= 0) throw PreconditionError("F(v) needs v of positive square-norm");
  return enumerate_constrained(lattice, {{v, 1}}, 0);
}

namespace {

// Walks S(u, v) pair by pair; returns false iff the visitor stopped early.
bool walk_S(const Lattice& lattice, const LatticeVector& u, const LatticeVector& v, const SliceEnumerator::Visitor& visit) {
  const Integer uu = lattice.norm(u);
  const Integer vv = lattice.norm(v);
  const Integer uv = lattice.inner(u, v);
  if (uu <= 0 || vv <= 0) throw PreconditionError("S(u, v) needs u and v of positive square-norm");
  if (uv <= 0) throw PreconditionError("S(u, v) needs u and v in the same positive cone");
  if (lattice.cone_anchor() && (!in_positive_cone(lattice, u) || !in_positive_cone(lattice, v)))
    throw PreconditionError("S(u, v) needs u and v in the anchored positive cone");
  if (rank(IntMatrix::from_rows({u, v})) < 2) return true;  // v = lambda u with lambda > 0

  // The projection of r to span{u, v} has square-norm (vv a^2 - 2 uv a b + uu b^2) / det
  // with det = uu vv - uv^2 < 0; the complement is negative definite, so that
  // square-norm is at least -2.
  const Integer bound = 2 * (uv * uv - uu * vv);
  SliceEnumerator slice(lattice, {u, v});
  std::vector<Integer> values(2);
  for (Integer a = 1; vv * a * a + 2 * uv * a + uu <= bound; ++a) {
    for (Integer b = -1; vv * a * a - 2 * uv * a * b + uu * b * b <= bound; --b) {
      values[0] = a;
      values[1] = b;
      if (!slice.for_each(values, -2, visit)) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<LatticeVector> set_S(const Lattice& lattice, const LatticeVector& u, const LatticeVector& v) {
  std::vector<LatticeVector> out;
  walk_S(lattice, u, v, [&](const LatticeVector& x) {
    out.push_back(x);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

bool set_S_is_empty(const Lattice& lattice, const LatticeVector& u, const LatticeVector& v) {
  return walk_S(lattice, u, v, [](const LatticeVector&) { return false; });
}

std::vector<LatticeVector> brute_force_oracle(const Lattice& lattice, long bound, const VectorPredicate& predicate) {
  const std::size_t n = lattice.rank();
  if (n > 5) throw PreconditionError("brute force oracle is limited to rank 5");
  if (bound < 0) throw PreconditionError("negative box bound");
  std::vector<LatticeVector> out;
  std::vector<long> c(n, -bound);
  for (;;) {
    LatticeVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = c[i];
    if (predicate(x)) out.push_back(std::move(x));
    std::size_t i = 0;
    while (i < n && c[i] == bound) c[i++] = -bound;
    if (i == n) break;
    ++c[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace k3salem
