#include "k3salem/exact_linalg.hpp"

#include "k3salem/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace k3salem {

// ---------------------------------------------------------------- IntVector

IntVector::IntVector(std::initializer_list<long> values) {
  entries_.reserve(values.size());
  for (long v : values) entries_.emplace_back(v);
}

bool IntVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Integer& x) { return x == 0; });
}

IntVector& IntVector::operator+=(const IntVector& other) {
  if (other.size() != size()) throw PreconditionError("vector length mismatch");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

IntVector& IntVector::operator-=(const IntVector& other) {
  if (other.size() != size()) throw PreconditionError("vector length mismatch");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

IntVector& IntVector::operator*=(const Integer& scalar) {
  for (auto& e : entries_) e *= scalar;
  return *this;
}

IntVector IntVector::operator-() const {
  IntVector r = *this;
  for (auto& e : r.entries_) e = -e;
  return r;
}

std::strong_ordering operator<=>(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = cmp(a.entries_[i], b.entries_[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string IntVector::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < size(); ++i) out << (i ? ", " : "") << entries_[i].get_str();
  out << "]";
  return out.str();
}

// ---------------------------------------------------------------- IntMatrix

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw PreconditionError("ragged matrix literal");
    for (long v : r) entries_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
  if (rows.empty()) return {};
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  auto s = row_span(i);
  return IntVector(std::vector<Integer>(s.begin(), s.end()));
}

void IntMatrix::set_row(std::size_t i, const IntVector& v) {
  if (v.size() != cols_) throw PreconditionError("row length mismatch");
  std::copy(v.begin(), v.end(), entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_));
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

Integer IntMatrix::trace() const {
  Integer t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

IntMatrix IntMatrix::block(std::size_t first, std::size_t size) const {
  IntMatrix b(size, size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) b(i, j) = (*this)(first + i, first + j);
  return b;
}

IntMatrix& IntMatrix::operator+=(const IntMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw PreconditionError("matrix shape mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

IntMatrix& IntMatrix::operator-=(const IntMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw PreconditionError("matrix shape mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

IntMatrix& IntMatrix::operator*=(const Integer& scalar) {
  for (auto& e : entries_) e *= scalar;
  return *this;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix r = *this;
  for (auto& e : r.entries_) e = -e;
  return r;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw PreconditionError("matrix product shape mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t l = 0; l < a.cols_; ++l) {
      const Integer& x = a(i, l);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) mpz_addmul(c(i, j).get_mpz_t(), x.get_mpz_t(), b(l, j).get_mpz_t());
    }
  }
  return c;
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < rows_; ++i) {
    out << "[";
    for (std::size_t j = 0; j < cols_; ++j) out << (j ? " " : "") << (*this)(i, j).get_str();
    out << "]\n";
  }
  return out.str();
}

IntVector operator*(const IntVector& v, const IntMatrix& m) {
  if (v.size() != m.rows()) throw PreconditionError("vector-matrix shape mismatch");
  IntVector r(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_addmul(r[j].get_mpz_t(), v[i].get_mpz_t(), m(i, j).get_mpz_t());
  }
  return r;
}

IntVector operator*(const IntMatrix& m, const IntVector& v) {
  if (v.size() != m.cols()) throw PreconditionError("matrix-vector shape mismatch");
  IntVector r(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_addmul(r[i].get_mpz_t(), m(i, j).get_mpz_t(), v[j].get_mpz_t());
  return r;
}

Integer dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw PreconditionError("dot product length mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) mpz_addmul(s.get_mpz_t(), a[i].get_mpz_t(), b[i].get_mpz_t());
  return s;
}

IntMatrix direct_sum(const std::vector<IntMatrix>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) {
    if (!b.is_square()) throw PreconditionError("direct sum of non-square block");
    n += b.rows();
  }
  IntMatrix m(n, n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m(off + i, off + j) = b(i, j);
    off += b.rows();
  }
  return m;
}

// ---------------------------------------------------------------- determinant

Integer determinant(const IntMatrix& input) {
  if (!input.is_square()) throw PreconditionError("determinant of a non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix m = input;
  int s = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      s = -s;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return s * m(n - 1, n - 1);
}

// ---------------------------------------------------------------- char_poly

IntPolynomial char_poly(const IntMatrix& a) {
  if (!a.is_square()) throw PreconditionError("characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<Integer> c(n + 1);
  c[n] = 1;
  IntMatrix m(n, n);   // M_k
  IntMatrix am(n, n);  // A * M_k
  Integer q;
  Integer r;
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I
    m = am;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    am = a * m;
    Integer tr = am.trace();
    mpz_tdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), tr.get_mpz_t(), static_cast<unsigned long>(k));
    if (r != 0) throw ArithmeticError("Faddeev-LeVerrier step is not an exact division");
    c[n - k] = -q;
  }
  return IntPolynomial(std::move(c));
}

// ---------------------------------------------------------------- LLL

namespace {

Integer round_div(const Integer& num, const Integer& den) {
  // nearest integer to num/den for den > 0
  Integer twice = 2 * num + den;
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), Integer(2 * den).get_mpz_t());
  return q;
}

void divexact_into(Integer& out, const Integer& num, const Integer& den) {
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
}

}  // namespace

Integer round_nearest(const Rational& x) {
  Integer num = abs(x.get_num());
  Integer r = round_div(num, x.get_den());
  return x < 0 ? Integer(-r) : r;
}

LllResult lll_reduce(const IntMatrix& gram, const Rational& delta) {
  if (!gram.is_symmetric()) throw PreconditionError("LLL input is not symmetric");
  if (delta <= Rational(1, 4) || delta > 1) throw PreconditionError("LLL delta must lie in (1/4, 1]");
  const std::size_t n = gram.rows();
  LllResult out;
  out.transform = IntMatrix::identity(n);
  out.gram = gram;
  if (n == 0) return out;

  IntMatrix& b = out.gram;
  IntMatrix& h = out.transform;
  // 1-based bookkeeping: d[0] = 1, d[i] = det of the leading i x i Gram block.
  std::vector<Integer> d(n + 1);
  std::vector<std::vector<Integer>> lam(n + 1, std::vector<Integer>(n + 1));
  const Integer dnum = delta.get_num();
  const Integer dden = delta.get_den();
  auto B = [&](std::size_t i, std::size_t j) -> Integer& { return b(i - 1, j - 1); };

  auto red = [&](std::size_t k, std::size_t l) {
    Integer twice = 2 * abs(lam[k][l]);
    if (twice <= d[l]) return;
    Integer q = lam[k][l] >= 0 ? round_div(lam[k][l], d[l]) : Integer(-round_div(-lam[k][l], d[l]));
    if (q == 0) return;
    for (std::size_t j = 0; j < n; ++j) h(k - 1, j) -= q * h(l - 1, j);
    for (std::size_t j = 1; j <= n; ++j) B(k, j) -= q * B(l, j);
    for (std::size_t j = 1; j <= n; ++j) B(j, k) -= q * B(j, l);
    lam[k][l] -= q * d[l];
    for (std::size_t i = 1; i < l; ++i) lam[k][i] -= q * lam[l][i];
  };

  auto swap = [&](std::size_t k, std::size_t kmax) {
    h.swap_rows(k - 1, k - 2);
    b.swap_rows(k - 1, k - 2);
    for (std::size_t i = 0; i < n; ++i) std::swap(b(i, k - 1), b(i, k - 2));
    for (std::size_t j = 1; j + 2 <= k; ++j) std::swap(lam[k][j], lam[k - 1][j]);
    const Integer l = lam[k][k - 1];
    Integer bb;
    divexact_into(bb, d[k - 2] * d[k] + l * l, d[k - 1]);
    for (std::size_t i = k + 1; i <= kmax; ++i) {
      Integer t = lam[i][k];
      divexact_into(lam[i][k], d[k] * lam[i][k - 1] - l * t, d[k - 1]);
      divexact_into(lam[i][k - 1], bb * t + l * lam[i][k], d[k]);
    }
    d[k - 1] = bb;
  };

  d[0] = 1;
  d[1] = B(1, 1);
  if (d[1] <= 0) throw PreconditionError("LLL input is not positive definite");
  std::size_t k = 2;
  std::size_t kmax = 1;
  while (k <= n) {
    if (k > kmax) {
      kmax = k;
      for (std::size_t j = 1; j <= k; ++j) {
        Integer u = B(k, j);
        for (std::size_t i = 1; i < j; ++i) divexact_into(u, d[i] * u - lam[k][i] * lam[j][i], d[i - 1]);
        if (j < k) {
          lam[k][j] = u;
        } else {
          d[k] = u;
          if (u <= 0) throw PreconditionError("LLL input is not positive definite");
        }
      }
    }
    for (;;) {
      red(k, k - 1);
      const Integer& lk = lam[k][k - 1];
      if (dden * d[k] * d[k - 2] < dnum * d[k - 1] * d[k - 1] - dden * lk * lk) {
        swap(k, kmax);
        k = std::max<std::size_t>(2, k - 1);
        continue;
      }
      for (std::size_t l = k - 2; l >= 1; --l) red(k, l);
      ++k;
      break;
    }
  }

  out.gs_norms.resize(n);
  out.mu.assign(n, std::vector<Rational>(n));
  for (std::size_t i = 1; i <= n; ++i) {
    out.gs_norms[i - 1] = Rational(d[i], d[i - 1]);
    out.gs_norms[i - 1].canonicalize();
    out.mu[i - 1][i - 1] = 1;
    for (std::size_t j = 1; j < i; ++j) {
      out.mu[i - 1][j - 1] = Rational(lam[i][j], d[j]);
      out.mu[i - 1][j - 1].canonicalize();
    }
  }
  return out;
}

// ---------------------------------------------------------------- rational solves

namespace {

// Gauss-Jordan on an augmented rational system; returns false when singular.
bool gauss_jordan(std::vector<RatVector>& a, std::vector<RatVector>& rhs) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return false;
    std::swap(a[piv], a[col]);
    std::swap(rhs[piv], rhs[col]);
    const Rational inv = 1 / a[col][col];
    for (auto& x : a[col]) x *= inv;
    for (auto& x : rhs[col]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
      for (std::size_t j = 0; j < rhs[r].size(); ++j) rhs[r][j] -= f * rhs[col][j];
    }
  }
  return true;
}

std::vector<RatVector> to_rational(const IntMatrix& m) {
  std::vector<RatVector> a(m.rows(), RatVector(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  return a;
}

}  // namespace

RatVector solve_exact(const IntMatrix& m, const RatVector& rhs) {
  if (!m.is_square()) throw PreconditionError("solve_exact needs a square matrix");
  if (rhs.size() != m.rows()) throw PreconditionError("solve_exact right-hand side length mismatch");
  auto a = to_rational(m);
  std::vector<RatVector> b(rhs.size(), RatVector(1));
  for (std::size_t i = 0; i < rhs.size(); ++i) {
    b[i][0] = rhs[i];
    b[i][0].canonicalize();
  }
  if (!gauss_jordan(a, b)) throw PreconditionError("solve_exact: singular matrix");
  RatVector x(rhs.size());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = b[i][0];
  return x;
}

std::vector<RatVector> inverse_exact(const IntMatrix& m) {
  if (!m.is_square()) throw PreconditionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  auto a = to_rational(m);
  std::vector<RatVector> inv(n, RatVector(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  if (!gauss_jordan(a, inv)) throw PreconditionError("inverse of a singular matrix");
  return inv;
}

std::size_t rank(const IntMatrix& m) {
  auto a = to_rational(m);
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    std::size_t piv = r;
    while (piv < m.rows() && a[piv][col] == 0) ++piv;
    if (piv == m.rows()) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (a[i][col] == 0) continue;
      const Rational f = a[i][col] / a[r][col];
      for (std::size_t j = col; j < m.cols(); ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

// ---------------------------------------------------------------- integer echelon

IntegerEchelon integer_echelon(const IntMatrix& a) {
  const std::size_t n = a.rows();
  const std::size_t k = a.cols();
  IntegerEchelon out;
  out.unimodular = IntMatrix::identity(n);
  out.echelon = a;
  IntMatrix& e = out.echelon;
  IntMatrix& u = out.unimodular;
  std::size_t r = 0;
  auto row_axpy = [&](std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t j = 0; j < k; ++j) e(dst, j) -= q * e(src, j);
    for (std::size_t j = 0; j < n; ++j) u(dst, j) -= q * u(src, j);
  };
  for (std::size_t col = 0; col < k && r < n; ++col) {
    for (;;) {
      // smallest nonzero |entry| at or below row r moves to row r
      std::size_t best = n;
      for (std::size_t i = r; i < n; ++i) {
        if (e(i, col) == 0) continue;
        if (best == n || abs(e(i, col)) < abs(e(best, col))) best = i;
      }
      if (best == n) break;
      e.swap_rows(r, best);
      u.swap_rows(r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < n; ++i) {
        if (e(i, col) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), e(i, col).get_mpz_t(), e(r, col).get_mpz_t());
        row_axpy(i, r, q);
        if (e(i, col) != 0) done = false;
      }
      if (done) break;
    }
    if (e(r, col) == 0) continue;
    if (e(r, col) < 0) {
      for (std::size_t j = 0; j < k; ++j) e(r, j) = -e(r, j);
      for (std::size_t j = 0; j < n; ++j) u(r, j) = -u(r, j);
    }
    out.pivot_cols.push_back(col);
    ++r;
  }
  out.rank = r;
  return out;
}

}  // namespace k3salem
