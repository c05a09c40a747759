#include "k3salem/involution.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace k3salem {

namespace {

bool tie_less(const LatticeVector& a, const LatticeVector& b, TieBreak tie) {
  return tie == TieBreak::Lexicographic ? a < b : b < a;
}

// Incremental rational row echelon used to drop dependent spanning vectors.
class IndependenceFilter {
 public:
  bool add(const LatticeVector& v) {
    RatVector x(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) x[i] = v[i];
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::size_t c = pivots_[r];
      if (x[c] == 0) continue;
      const Rational f = x[c] / rows_[r][c];
      for (std::size_t j = 0; j < x.size(); ++j) x[j] -= f * rows_[r][j];
    }
    for (std::size_t c = 0; c < x.size(); ++c) {
      if (x[c] != 0) {
        rows_.push_back(std::move(x));
        pivots_.push_back(c);
        return true;
      }
    }
    return false;
  }

 private:
  std::vector<RatVector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace

std::string singularity_string(const std::vector<ADEComponent>& components) {
  std::map<std::pair<char, int>, int> counts;
  for (const auto& c : components) ++counts[{c.type, c.rank}];
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, count] : counts) {
    if (!first) out << "+";
    first = false;
    if (count > 1) out << count;
    out << key.first << key.second;
  }
  return out.str();
}

std::string InvolutionRecord::singularity_string() const { return k3salem::singularity_string(components); }

bool is_polarization_deg2(const Chamber& chamber, const LatticeVector& h) {
  const Lattice& l = chamber.lattice();
  if (l.norm(h) != 2) throw PreconditionError("a degree-2 polarization has square-norm 2");
  if (l.inner(h, chamber.ample().h0) <= 0) return false;
  return chamber.contains(h) && set_F(l, h).empty();
}

std::vector<LatticeVector> positive_roots_orthogonal(const Chamber& chamber, const LatticeVector& h) {
  std::vector<std::pair<std::vector<Integer>, LatticeVector>> keyed;
  for (auto& r : set_R(chamber.lattice(), h)) {
    auto key = chamber.pairings(r);
    auto nz = std::find_if(key.begin(), key.end(), [](const Integer& x) { return x != 0; });
    if (nz == key.end()) throw PreconditionError("list of vectors is not ample for a root orthogonal to h");
    if (*nz > 0) keyed.emplace_back(std::move(key), std::move(r));
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<LatticeVector> out;
  out.reserve(keyed.size());
  for (auto& [key, r] : keyed) out.push_back(std::move(r));
  return out;
}

std::vector<ADEComponent> exceptional_classes(const Chamber& chamber, const LatticeVector& h, SimpleRootMode mode, TieBreak tie) {
  const Lattice& l = chamber.lattice();
  const std::vector<LatticeVector> positive = positive_roots_orthogonal(chamber, h);
  const std::set<LatticeVector> lookup(positive.begin(), positive.end());
  std::vector<LatticeVector> simple;
  if (mode == SimpleRootMode::Indecomposable) {
    for (const auto& r : positive) {
      bool decomposable = false;
      for (const auto& s : positive) {
        if (lookup.count(r - s)) {
          decomposable = true;
          break;
        }
      }
      if (!decomposable) simple.push_back(r);
    }
  } else {
    for (const auto& r : positive) {
      bool decomposable = false;
      for (const auto& alpha : simple) {
        if (lookup.count(r - alpha)) {
          decomposable = true;
          break;
        }
      }
      if (!decomposable) simple.push_back(r);
    }
  }

  // connected components of the <r, r'> = 1 graph
  const std::size_t n = simple.size();
  std::vector<int> comp(n, -1);
  int count = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> stack{s};
    comp[s] = count;
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < n; ++j) {
        if (comp[j] < 0 && l.inner(simple[i], simple[j]) != 0) {
          comp[j] = count;
          stack.push_back(j);
        }
      }
    }
    ++count;
  }
  std::vector<ADEComponent> out;
  for (int c = 0; c < count; ++c) {
    std::vector<LatticeVector> roots;
    for (std::size_t i = 0; i < n; ++i)
      if (comp[i] == c) roots.push_back(simple[i]);
    out.push_back(classify_component(l, roots, tie));
  }
  std::sort(out.begin(), out.end(), [](const ADEComponent& a, const ADEComponent& b) {
    if (a.type != b.type) return a.type < b.type;
    if (a.rank != b.rank) return a.rank < b.rank;
    return a.roots < b.roots;
  });
  return out;
}

ADEComponent classify_component(const Lattice& lattice, const std::vector<LatticeVector>& roots, TieBreak tie) {
  const std::size_t n = roots.size();
  if (n == 0) throw PreconditionError("empty configuration");
  std::vector<std::vector<std::size_t>> adj(n);
  std::size_t edges = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (lattice.norm(roots[i]) != -2) throw PreconditionError("configuration contains a vector that is not a (-2)-vector");
    for (std::size_t j = i + 1; j < n; ++j) {
      Integer x = lattice.inner(roots[i], roots[j]);
      if (x == 0) continue;
      if (x != 1) throw PreconditionError("configuration is not simply laced with positive edges");
      adj[i].push_back(j);
      adj[j].push_back(i);
      ++edges;
    }
  }
  if (edges + 1 != n) throw PreconditionError("configuration graph is not a tree");
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j : adj[i])
      if (!seen[j]) {
        seen[j] = true;
        ++reached;
        stack.push_back(j);
      }
  }
  if (reached != n) throw PreconditionError("configuration graph is not connected");

  std::vector<std::size_t> branch;
  for (std::size_t i = 0; i < n; ++i) {
    if (adj[i].size() > 3) throw PreconditionError("configuration has a node of degree at least 4");
    if (adj[i].size() == 3) branch.push_back(i);
  }
  if (branch.size() > 1) throw PreconditionError("configuration has several branch nodes");

  // nodes along the path from start, not going back through `from`
  auto walk = [&](std::size_t start, std::size_t from) {
    std::vector<std::size_t> path{start};
    std::size_t prev = from;
    std::size_t cur = start;
    for (;;) {
      std::size_t next = n;
      for (std::size_t j : adj[cur])
        if (j != prev) next = j;
      if (next == n) break;
      path.push_back(next);
      prev = cur;
      cur = next;
    }
    return path;
  };

  ADEComponent c;
  c.rank = static_cast<int>(n);
  std::vector<std::size_t> order;
  if (branch.empty()) {
    c.type = 'A';
    if (n == 1) {
      order = {0};
    } else {
      std::vector<std::size_t> ends;
      for (std::size_t i = 0; i < n; ++i)
        if (adj[i].size() == 1) ends.push_back(i);
      std::size_t start = tie_less(roots[ends[0]], roots[ends[1]], tie) ? ends[0] : ends[1];
      order = walk(start, n);
    }
  } else {
    const std::size_t b = branch[0];
    std::vector<std::vector<std::size_t>> arms;
    for (std::size_t j : adj[b]) arms.push_back(walk(j, b));
    std::sort(arms.begin(), arms.end(), [&](const auto& x, const auto& y) {
      if (x.size() != y.size()) return x.size() < y.size();
      return tie_less(roots[x.back()], roots[y.back()], tie);
    });
    const std::size_t l0 = arms[0].size();
    const std::size_t l1 = arms[1].size();
    const std::size_t l2 = arms[2].size();
    if (l0 == 1 && l1 == 1) {
      c.type = 'D';
      order = {arms[0][0], arms[1][0], b};
      order.insert(order.end(), arms[2].begin(), arms[2].end());
    } else if (l0 == 1 && l1 == 2 && l2 >= 2 && l2 <= 4) {
      c.type = 'E';
      order = {arms[0][0], arms[1][1], arms[1][0], b};
      order.insert(order.end(), arms[2].begin(), arms[2].end());
    } else {
      throw PreconditionError("configuration is not an ADE diagram");
    }
  }
  for (std::size_t i : order) c.roots.push_back(roots[i]);
  return c;
}

std::vector<std::size_t> tau_action(const ADEComponent& component) {
  const std::size_t n = static_cast<std::size_t>(component.rank);
  if (!component.roots.empty() && component.roots.size() != n) throw PreconditionError("component rank and root count differ");
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  switch (component.type) {
    case 'A':
      for (std::size_t i = 0; i < n; ++i) perm[i] = n - 1 - i;
      break;
    case 'D':
      if (n % 2 == 1) std::swap(perm[0], perm[1]);
      break;
    case 'E':
      if (n == 6) {
        // e_i <-> e_{8-i} for i = 2..6; e_1 fixed
        for (std::size_t i = 1; i <= 5; ++i) perm[i] = 6 - i;
      }
      break;
    default:
      throw PreconditionError("unknown ADE type");
  }
  return perm;
}

IntMatrix involution_matrix(const Lattice& lattice, const LatticeVector& h, const std::vector<ADEComponent>& components) {
  const std::size_t n = lattice.rank();
  std::vector<LatticeVector> basis;
  IndependenceFilter filter;
  if (filter.add(h)) basis.push_back(h);
  for (const auto& c : components) {
    const auto perm = tau_action(c);
    for (std::size_t i = 0; i < c.roots.size(); ++i) {
      LatticeVector w = c.roots[i] + c.roots[perm[i]];
      if (filter.add(w)) basis.push_back(std::move(w));
    }
  }
  const IntMatrix b = IntMatrix::from_rows(basis);
  const IntMatrix gb = lattice.gram() * b.transpose();  // n x w
  const IntMatrix gram_w = b * gb;
  const auto inv = inverse_exact(gram_w);
  const std::size_t w = basis.size();
  // projection onto W for row vectors: x -> (x G B^T) Gram_W^{-1} B
  std::vector<RatVector> t(n, RatVector(w));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < w; ++j) {
      Rational s = 0;
      for (std::size_t l = 0; l < w; ++l) s += gb(i, l) * inv[l][j];
      t[i][j] = s;
    }
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational s = 0;
      for (std::size_t l = 0; l < w; ++l) s += t[i][l] * b(l, j);
      s *= 2;
      if (i == j) s -= 1;
      if (s.get_den() != 1) throw ArithmeticError("involution matrix is not integral at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
      m(i, j) = s.get_num();
    }
  return m;
}

IntMatrix smooth_branch_matrix(const Lattice& lattice, const LatticeVector& h, bool verify) {
  if (lattice.norm(h) != 2) throw PreconditionError("smooth branch matrix needs <h, h> = 2");
  if (verify) {
    if (!set_R(lattice, h).empty()) throw PreconditionError("smooth branch matrix needs R(h) empty");
    if (!set_F(lattice, h).empty()) throw PreconditionError("smooth branch matrix needs F(h) empty");
  }
  const std::size_t n = lattice.rank();
  const IntVector gh = lattice.gram() * h;
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = gh[i] * h[j] - (i == j ? 1 : 0);
  return m;
}

bool check_involution(const Lattice& lattice, const InvolutionRecord& record) {
  const IntMatrix& m = record.matrix;
  return m * m == IntMatrix::identity(lattice.rank()) && is_isometry(lattice, m) && record.h * m == record.h;
}

InvolutionRecord make_involution(const Chamber& chamber, const LatticeVector& h) {
  const Lattice& l = chamber.lattice();
  if (l.norm(h) != 2) throw PreconditionError("a degree-2 polarization has square-norm 2");
  InvolutionRecord rec;
  rec.h = h;
  rec.components = exceptional_classes(chamber, h);
  rec.matrix = rec.components.empty() ? smooth_branch_matrix(l, h, false) : involution_matrix(l, h, rec.components);
  if (!check_involution(l, rec)) throw ArithmeticError("involution invariants fail for h = " + h.to_string());
  return rec;
}

}  // namespace k3salem
