#include "k3salem/chamber.hpp"

#include "k3salem/rs_lattice.hpp"

#include <algorithm>

namespace k3salem {

namespace {

std::vector<IntVector> functionals_of(const Lattice& lattice, const AmpleList& a) {
  std::vector<IntVector> f;
  f.push_back(lattice.pairing(a.h0));
  for (const auto& rho : a.rhos) f.push_back(lattice.pairing(rho));
  return f;
}

int first_sign(const std::vector<IntVector>& functionals, const LatticeVector& x) {
  for (const auto& f : functionals) {
    int s = sgn(dot(f, x));
    if (s != 0) return s;
  }
  return 0;
}

}  // namespace

bool is_ample_list(const Lattice& lattice, const AmpleList& a) {
  if (lattice.norm(a.h0) <= 0) return false;
  for (const auto& rho : a.rhos) lattice.check_vector(rho);
  std::vector<IntVector> f;
  for (const auto& rho : a.rhos) f.push_back(lattice.pairing(rho));
  for (const auto& r : set_R(lattice, a.h0))
    if (first_sign(f, r) == 0) return false;
  return true;
}

int lex_sign(const Lattice& lattice, const AmpleList& a, const LatticeVector& x) {
  return first_sign(functionals_of(lattice, a), x);
}

Chamber::Chamber(const Lattice& lattice, AmpleList a) : lattice_(&lattice), ample_(std::move(a)) {
  if (lattice.norm(ample_.h0) <= 0) throw PreconditionError("h0 must have positive square-norm");
  functionals_ = functionals_of(lattice, ample_);
  for (auto& r : set_R(lattice, ample_.h0)) {
    int s = first_sign(functionals_, r);
    if (s == 0) throw PreconditionError("list of vectors is not ample");
    if (s > 0) positive_.push_back(std::move(r));
  }
}

int Chamber::lex_sign(const LatticeVector& x) const { return first_sign(functionals_, x); }

std::vector<Integer> Chamber::pairings(const LatticeVector& x) const {
  std::vector<Integer> out;
  out.reserve(functionals_.size());
  for (const auto& f : functionals_) out.push_back(dot(f, x));
  return out;
}

bool Chamber::contains(const LatticeVector& v) const {
  if (lattice_->norm(v) <= 0 || lattice_->inner(v, ample_.h0) <= 0)
    throw PreconditionError("vector is not in the positive cone of h0");
  for (const auto& r : positive_)
    if (lattice_->inner(v, r) < 0) return false;
  return set_S_is_empty(*lattice_, ample_.h0, v);
}

ChamberPlacement Chamber::send(const LatticeVector& v, std::mt19937_64& rng, int max_retries) const {
  const Lattice& l = *lattice_;
  if (l.norm(v) <= 0 || l.inner(v, ample_.h0) <= 0) throw PreconditionError("vector is not in the positive cone of h0");

  std::vector<LatticeVector> walls = set_S(l, ample_.h0, v);
  for (const auto& r : positive_)
    if (l.inner(v, r) < 0) walls.push_back(r);

  ChamberPlacement out;
  out.extended = ample_;
  std::vector<IntVector> functionals = functionals_;
  // t_i = (pairings of r_i) / (-<v, r_i>), compared by cross multiplication.
  std::vector<Integer> scale(walls.size());
  for (std::size_t i = 0; i < walls.size(); ++i) scale[i] = -l.inner(v, walls[i]);
  std::vector<std::vector<Integer>> tuples(walls.size());
  for (std::size_t i = 0; i < walls.size(); ++i)
    for (const auto& f : functionals) tuples[i].push_back(dot(f, walls[i]));

  auto compare = [&](std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < functionals.size(); ++c) {
      int s = cmp(tuples[i][c] * scale[j], tuples[j][c] * scale[i]);
      if (s != 0) return s;
    }
    return 0;
  };

  std::vector<std::size_t> order(walls.size());
  std::uniform_int_distribution<long> coord(-3, 3);
  for (int attempt = 0;; ++attempt) {
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    // Largest t first: that wall is crossed first when walking from v towards h0.
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return compare(i, j) > 0; });
    bool tie = false;
    for (std::size_t i = 1; i < order.size(); ++i)
      if (compare(order[i - 1], order[i]) == 0) tie = true;
    if (!tie) break;
    if (attempt >= max_retries) throw BudgetExhausted("send_to_chamber: tie-breaking retries exhausted");
    LatticeVector rho(l.rank());
    while (rho.is_zero())
      for (std::size_t i = 0; i < rho.size(); ++i) rho[i] = coord(rng);
    out.extended.rhos.push_back(rho);
    functionals.push_back(l.pairing(rho));
    for (std::size_t i = 0; i < walls.size(); ++i) tuples[i].push_back(dot(functionals.back(), walls[i]));
  }

  out.h = v;
  for (std::size_t i : order) {
    out.h = reflect(l, walls[i], out.h);
    out.word.push_back(walls[i]);
  }
  if (l.norm(out.h) != l.norm(v)) throw ArithmeticError("reflections changed the norm");
  if (!contains(out.h)) throw ArithmeticError("send_to_chamber did not land in the chamber");
  return out;
}

std::vector<LatticeVector> positive_roots_at(const Lattice& lattice, const AmpleList& a) {
  return Chamber(lattice, a).positive_roots();
}

bool chamber_contains(const Lattice& lattice, const AmpleList& a, const LatticeVector& v) {
  return Chamber(lattice, a).contains(v);
}

ChamberPlacement send_to_chamber(const Lattice& lattice, const AmpleList& a, const LatticeVector& v, std::mt19937_64& rng,
                                 int max_retries) {
  return Chamber(lattice, a).send(v, rng, max_retries);
}

}  // namespace k3salem
