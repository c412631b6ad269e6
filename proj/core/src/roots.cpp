#include "k3cert/roots.hpp"

#include <algorithm>

namespace k3cert {

static bool lex_less(const IntVec& a, const IntVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

RootSet make_root_set(const Lattice& l, std::vector<IntVec> vectors) {
  std::vector<IntVec> sorted = vectors;
  std::sort(sorted.begin(), sorted.end(), lex_less);
  for (const IntVec& v : vectors) {
    if (pairing(l, v, v) != -2)
      throw std::invalid_argument("make_root_set: vector of self-pairing != -2");
    IntVec neg(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
    if (!std::binary_search(sorted.begin(), sorted.end(), neg, lex_less))
      throw std::invalid_argument("make_root_set: set not closed under negation");
  }
  return RootSet{std::move(vectors)};
}

RationalPlane make_rational_plane(Lattice ambient, std::vector<RatVec> basis) {
  if (basis.size() != 2 && basis.size() != 3)
    throw std::invalid_argument("make_rational_plane: basis must have 2 or 3 vectors");
  RatMat m(basis.size(), ambient.rank());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].size() != ambient.rank())
      throw std::invalid_argument("make_rational_plane: vector length mismatch");
    for (std::size_t j = 0; j < ambient.rank(); ++j) m(i, j) = basis[i][j];
  }
  if (rank(m) != basis.size())
    throw std::invalid_argument("make_rational_plane: basis not linearly independent");
  return RationalPlane{std::move(ambient), std::move(basis)};
}

namespace {

// Exact rational Cholesky data for a positive definite form: the quadratic
// form equals sum_i q(i,i) (x_i + sum_{j>i} q(i,j) x_j)^2.
RatMat cholesky_form(const IntMat& gram) {
  const std::size_t n = gram.rows;
  RatMat q(gram);
  for (std::size_t i = 0; i < n; ++i) {
    if (q(i, i) <= 0)
      throw std::invalid_argument("cholesky_form: form not positive definite");
    for (std::size_t j = i + 1; j < n; ++j) {
      q(j, i) = q(i, j);  // keep the undivided value for the update below
      q(i, j) /= q(i, i);
    }
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t l = k; l < n; ++l) q(k, l) -= q(k, i) * q(i, l);
  }
  return q;
}

// All x != 0 with x^T gram x <= bound whose highest-index nonzero
// coordinate is positive; callers add the negatives.
void enumerate_half(const IntMat& gram, const Int& bound, const Int& target,
                    std::size_t max_count, std::vector<IntVec>& out) {
  const std::size_t n = gram.rows;
  RatMat q = cholesky_form(gram);
  IntVec x(n);
  bool stop = false;

  auto rec = [&](auto&& self, std::size_t level, const Rat& budget,
                 bool zeros_above) -> void {
    if (stop) return;
    const std::size_t i = level;
    Rat c = 0;
    for (std::size_t j = i + 1; j < n; ++j)
      if (x[j] != 0) c += q(i, j) * Rat(x[j]);
    Rat s = budget / q(i, i);  // (x_i + c)^2 <= s
    if (s < 0) return;
    const Int &a = c.get_num(), &b = c.get_den();
    Rat sb2 = s * Rat(b) * Rat(b);
    Int r = rat_floor(sb2);
    if (r < 0) return;
    Int ymax;
    mpz_sqrt(ymax.get_mpz_t(), r.get_mpz_t());
    Int lo = rat_ceil(Rat(-ymax - a, b));
    Int hi = rat_floor(Rat(ymax - a, b));
    if (zeros_above && lo < 0) lo = 0;
    for (Int v = lo; v <= hi; ++v) {
      if (stop) return;
      x[i] = v;
      Rat y = Rat(v) + c;
      Rat used = q(i, i) * y * y;
      if (used > budget) continue;  // guard against boundary rounding
      if (i == 0) {
        bool zero = zeros_above && v == 0;
        if (!zero) {
          IntVec cand = x;
          if (pairing(Lattice{gram, {}}, cand, cand) == target) {
            out.push_back(cand);
            IntVec neg(n);
            for (std::size_t k = 0; k < n; ++k) neg[k] = -cand[k];
            out.push_back(std::move(neg));
            if (max_count != 0 && out.size() >= max_count) stop = true;
          }
        }
      } else {
        self(self, i - 1, budget - used, zeros_above && v == 0);
      }
    }
    x[i] = 0;
  };
  if (n > 0) rec(rec, n - 1, Rat(bound), true);
}

std::vector<IntVec> short_vectors_impl(const Lattice& l, const Int& target,
                                       std::size_t max_count) {
  const std::size_t n = l.rank();
  if (n == 0) return {};
  Inertia in = inertia(l.gram);
  IntMat posgram;
  Int postarget;
  if (in.pos == n) {
    if (target <= 0)
      throw std::invalid_argument(
          "short_vectors: target must be positive for a positive definite form");
    posgram = l.gram;
    postarget = target;
  } else if (in.neg == n) {
    if (target >= 0)
      throw std::invalid_argument(
          "short_vectors: target must be negative for a negative definite form");
    posgram = l.gram;
    for (Int& e : posgram.data) e = -e;
    postarget = -target;
  } else {
    throw std::invalid_argument("enumeration undefined: form not definite");
  }
  std::vector<IntVec> out;
  enumerate_half(posgram, postarget, postarget, max_count, out);
  return out;
}

}  // namespace

std::vector<IntVec> short_vectors(const Lattice& l, const Int& target) {
  std::vector<IntVec> out = short_vectors_impl(l, target, 0);
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

std::vector<IntVec> short_vectors_capped(const Lattice& l, const Int& target,
                                         std::size_t max_count) {
  return short_vectors_impl(l, target, max_count);
}

Sublattice orthogonal_complement(const Lattice& l,
                                 const std::vector<RatVec>& vs) {
  const std::size_t n = l.rank();
  IntMat constraints(vs.size(), n);
  for (std::size_t k = 0; k < vs.size(); ++k) {
    if (vs[k].size() != n)
      throw std::invalid_argument("orthogonal_complement: vector length mismatch");
    // clear denominators of <., v_k>; scaling does not change the kernel
    Int lcm = 1;
    for (const Rat& e : vs[k]) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
                                       e.get_den().get_mpz_t());
    IntVec w(n);
    for (std::size_t j = 0; j < n; ++j) {
      Rat scaled = vs[k][j] * Rat(lcm);
      w[j] = scaled.get_num();
    }
    IntVec gw = mul(l.gram, w);
    for (std::size_t j = 0; j < n; ++j) constraints(k, j) = gw[j];
  }
  IntMat ker = kernel_saturated(constraints);
  IntMat g = mul(transpose(ker), mul(l.gram, ker));
  Lattice sub = make_lattice(std::move(g), {}, /*allow_degenerate=*/true);
  return Sublattice{std::move(sub), std::move(ker)};
}

bool is_in_W(const RationalPlane& p) {
  if (!(p.ambient == k3_lattice()))
    throw std::invalid_argument("is_in_W: ambient must be the K3 lattice");
  if (p.basis.size() != 3)
    throw std::invalid_argument("is_in_W: plane must have rank 3");
  // positive definiteness of the plane, checked on the exact 3x3 pairing
  RatMat plane_gram(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      plane_gram(i, j) = pairing_rat(p.ambient, p.basis[i], p.basis[j]);
  Int lcm = 1;
  for (const Rat& e : plane_gram.data)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), e.get_den().get_mpz_t());
  IntMat scaled(3, 3);
  for (std::size_t k = 0; k < 9; ++k) {
    Rat s = plane_gram.data[k] * Rat(lcm);
    scaled.data[k] = s.get_num();
  }
  Inertia pin = inertia(scaled);
  if (pin.pos != 3)
    throw std::invalid_argument("is_in_W: plane is not positive definite");

  Sublattice comp = orthogonal_complement(p.ambient, p.basis);
  if (comp.lattice.rank() != 19)
    throw std::logic_error("is_in_W: complement rank is not 19");
  Inertia cin = inertia(comp.lattice.gram);
  if (cin.pos != 0 || cin.neg != 19)
    throw std::logic_error("is_in_W: complement is not negative definite");
  return short_vectors_capped(comp.lattice, Int(-2), 1).empty();
}

bool wall_clearance(const Lattice& l, const RatVec& u, const RootSet& roots) {
  for (const IntVec& d : roots.vectors) {
    RatVec dr(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) dr[i] = Rat(d[i]);
    if (pairing_rat(l, u, dr) == 0) return false;
  }
  return true;
}

Isometry reflection_in_root(const Lattice& l, const IntVec& delta) {
  if (pairing(l, delta, delta) != -2)
    throw std::invalid_argument("reflection_in_root: delta must have self-pairing -2");
  const std::size_t n = l.rank();
  IntVec gd = mul(l.gram, delta);
  IntMat m = IntMat::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) += delta[i] * gd[j];
  return verify_isometry(l, m);
}

}  // namespace k3cert
