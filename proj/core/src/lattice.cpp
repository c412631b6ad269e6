#include "k3cert/lattice.hpp"

namespace k3cert {

Lattice make_lattice(IntMat gram, std::vector<std::string> basis_labels,
                     bool allow_degenerate) {
  if (gram.rows != gram.cols)
    throw std::invalid_argument("make_lattice: Gram matrix not square");
  if (!is_symmetric(gram))
    throw std::invalid_argument("make_lattice: Gram matrix not symmetric");
  if (!allow_degenerate && gram.rows > 0 && det(gram) == 0)
    throw std::invalid_argument("make_lattice: Gram matrix is singular");
  if (!basis_labels.empty() && basis_labels.size() != gram.rows)
    throw std::invalid_argument("make_lattice: wrong number of basis labels");
  return Lattice{std::move(gram), std::move(basis_labels)};
}

Int pairing(const Lattice& l, const IntVec& x, const IntVec& y) {
  if (x.size() != l.rank() || y.size() != l.rank())
    throw std::invalid_argument("pairing: vector length does not match rank");
  Int acc = 0;
  for (std::size_t i = 0; i < l.rank(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < l.rank(); ++j)
      acc += x[i] * l.gram(i, j) * y[j];
  }
  return acc;
}

Rat pairing_rat(const Lattice& l, const RatVec& x, const RatVec& y) {
  if (x.size() != l.rank() || y.size() != l.rank())
    throw std::invalid_argument("pairing: vector length does not match rank");
  Rat acc = 0;
  for (std::size_t i = 0; i < l.rank(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < l.rank(); ++j)
      acc += x[i] * Rat(l.gram(i, j)) * y[j];
  }
  return acc;
}

Lattice hyperbolic_plane() {
  return make_lattice(IntMat::from_rows({{0, 1}, {1, 0}}), {"e", "f"});
}

Lattice e8_minus() {
  // E8 Cartan matrix, Bourbaki node order (node 2 is the branch node
  // attached to node 4), negated.
  return make_lattice(
      IntMat::from_rows({
          {-2, 0, 1, 0, 0, 0, 0, 0},
          {0, -2, 0, 1, 0, 0, 0, 0},
          {1, 0, -2, 1, 0, 0, 0, 0},
          {0, 1, 1, -2, 1, 0, 0, 0},
          {0, 0, 0, 1, -2, 1, 0, 0},
          {0, 0, 0, 0, 1, -2, 1, 0},
          {0, 0, 0, 0, 0, 1, -2, 1},
          {0, 0, 0, 0, 0, 0, 1, -2},
      }),
      {"a1", "a2", "a3", "a4", "a5", "a6", "a7", "a8"});
}

Lattice direct_sum(const Lattice& a, const Lattice& b) {
  const std::size_t n = a.rank(), m = b.rank();
  IntMat g(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = a.gram(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) g(n + i, n + j) = b.gram(i, j);
  std::vector<std::string> labels;
  if (a.basis_labels.size() == n && b.basis_labels.size() == m && n + m > 0) {
    labels = a.basis_labels;
    labels.insert(labels.end(), b.basis_labels.begin(), b.basis_labels.end());
  }
  // direct sums of nondegenerate lattices are nondegenerate; skip the det
  // check to keep this cheap
  return Lattice{std::move(g), std::move(labels)};
}

Lattice k3_lattice() {
  Lattice u = hyperbolic_plane();
  Lattice l = direct_sum(direct_sum(u, u), u);
  l = direct_sum(direct_sum(l, e8_minus()), e8_minus());
  l.basis_labels = {"e1", "f1", "e2", "f2", "e3", "f3",
                    "a1", "a2", "a3", "a4", "a5", "a6", "a7", "a8",
                    "b1", "b2", "b3", "b4", "b5", "b6", "b7", "b8"};
  return l;
}

SignatureTriple signature(const Lattice& l) {
  Inertia in = inertia(l.gram);
  return SignatureTriple{in.pos, in.neg, in.zero};
}

bool is_even(const Lattice& l) {
  for (std::size_t i = 0; i < l.rank(); ++i)
    if (l.gram(i, i) % 2 != 0) return false;
  return true;
}

bool is_unimodular(const Lattice& l) {
  if (l.rank() == 0) return true;
  Int d = det(l.gram);
  return d == 1 || d == -1;
}

IntVec unit_vector(std::size_t n, std::size_t i) {
  if (i >= n) throw std::invalid_argument("unit_vector: index out of range");
  IntVec v(n);
  v[i] = 1;
  return v;
}

}  // namespace k3cert
