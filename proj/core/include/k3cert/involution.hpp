#pragma once

#include "k3cert/isometry.hpp"

namespace k3cert {

/// Counts of trivial / cyclotomic / regular summands of an involution
/// acting on the ambient free Z-module; t + c + 2r = rank.
struct TCRProfile {
  std::size_t t = 0;
  std::size_t c = 0;
  std::size_t r = 0;

  bool operator==(const TCRProfile&) const = default;
};

/// Inertia of the invariant sublattice: (b+, b-, signature).
struct EquivariantInvariants {
  std::size_t b_plus_g = 0;
  std::size_t b_minus_g = 0;
  long sigma_g = 0;

  bool operator==(const EquivariantInvariants&) const = default;
};

/// Fixed-surface data forced by (t,c): k surfaces of total genus g1+...+gk.
struct FixedPointProfile {
  std::size_t k = 0;
  std::size_t total_genus = 0;

  bool operator==(const FixedPointProfile&) const = default;
};

/// A sublattice presented by its restricted Gram together with the integer
/// embedding of its basis into the ambient lattice (columns = basis vectors
/// in ambient coordinates).
struct Sublattice {
  Lattice lattice;
  IntMat embedding;
};

/// Decomposes an involution (or the identity) into trivial, cyclotomic and
/// regular summands. r is read off from the index [L : L+ + L-], which is
/// 2^r with elementary 2-abelian quotient; anything else is rejected as an
/// internal consistency failure.
TCRProfile tcr_decompose(const Lattice& l, const Isometry& a);

/// Saturated fixed sublattice ker(M - I) with the restricted pairing.
Sublattice invariant_sublattice(const Lattice& l, const Isometry& a);

EquivariantInvariants equivariant_signature(const Lattice& l, const Isometry& a);

/// Inverts t = 2k-2, c = 2(g1+...+gk). Valid only for odd involutions with
/// nonempty fixed set; rejects odd or negative inputs.
FixedPointProfile fixed_point_profile(long t, long c);

/// Whether the profile has the (0,2,r) shape of a free involution.
bool is_free_type(const TCRProfile& p);

}  // namespace k3cert
