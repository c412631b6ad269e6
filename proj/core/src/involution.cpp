#include "k3cert/involution.hpp"

namespace k3cert {

static bool is_identity(const Isometry& a) {
  return a.matrix == IntMat::identity(a.lattice.rank());
}

TCRProfile tcr_decompose(const Lattice& l, const Isometry& a) {
  if (!(a.lattice == l))
    throw std::invalid_argument("tcr_decompose: isometry not on the given lattice");
  if (!is_involution(a) && !is_identity(a))
    throw std::invalid_argument("tcr_decompose: isometry is not an involution or the identity");
  const std::size_t n = l.rank();
  IntMat id = IntMat::identity(n);
  IntMat plus = kernel_saturated(sub(a.matrix, id));   // L+ basis
  IntMat minus = kernel_saturated(add(a.matrix, id));  // L- basis
  if (plus.cols + minus.cols != n)
    throw std::logic_error("tcr_decompose: rank(L+) + rank(L-) != rank");
  IntMat b(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < plus.cols; ++j) b(i, j) = plus(i, j);
    for (std::size_t j = 0; j < minus.cols; ++j) b(i, plus.cols + j) = minus(i, j);
  }
  // [L : L+ + L-] = |det b|; the quotient must be elementary 2-abelian
  std::vector<Int> divisors = smith_invariants(b);
  if (divisors.size() != n)
    throw std::logic_error("tcr_decompose: L+ + L- does not have full rank");
  std::size_t r = 0;
  for (const Int& d : divisors) {
    if (d == 2)
      ++r;
    else if (d != 1)
      throw std::logic_error("tcr_decompose: quotient is not elementary 2-abelian");
  }
  if (plus.cols < r || minus.cols < r)
    throw std::logic_error("tcr_decompose: index exceeds eigenlattice ranks");
  TCRProfile p{plus.cols - r, minus.cols - r, r};
  if (p.t + p.c + 2 * p.r != n)
    throw std::logic_error("tcr_decompose: t + c + 2r != rank");
  return p;
}

Sublattice invariant_sublattice(const Lattice& l, const Isometry& a) {
  if (!(a.lattice == l))
    throw std::invalid_argument("invariant_sublattice: isometry not on the given lattice");
  IntMat k = kernel_saturated(sub(a.matrix, IntMat::identity(l.rank())));
  IntMat g = mul(transpose(k), mul(l.gram, k));
  return Sublattice{make_lattice(std::move(g), {}, /*allow_degenerate=*/true),
                    std::move(k)};
}

EquivariantInvariants equivariant_signature(const Lattice& l, const Isometry& a) {
  SignatureTriple s = signature(invariant_sublattice(l, a).lattice);
  return EquivariantInvariants{s.b_plus, s.b_minus,
                               static_cast<long>(s.b_plus) -
                                   static_cast<long>(s.b_minus)};
}

FixedPointProfile fixed_point_profile(long t, long c) {
  if (t < 0 || c < 0 || t % 2 != 0 || c % 2 != 0)
    throw std::invalid_argument(
        "fixed_point_profile: inconsistent with odd fixed-point data");
  return FixedPointProfile{static_cast<std::size_t>(t / 2 + 1),
                           static_cast<std::size_t>(c / 2)};
}

bool is_free_type(const TCRProfile& p) { return p.t == 0 && p.c == 2; }

}  // namespace k3cert
