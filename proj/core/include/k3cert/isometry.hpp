#pragma once

#include <optional>

#include "k3cert/lattice.hpp"

namespace k3cert {

/// A lattice automorphism. The matrix acts on coordinate columns, v -> M v,
/// and satisfies M^T G M = G exactly.
struct Isometry {
  Lattice lattice;
  IntMat matrix;

  IntVec apply(const IntVec& v) const { return mul(matrix, v); }
};

/// Validates M^T G M = G and wraps the matrix. Throws with the first
/// offending entry (i,j) on failure.
Isometry verify_isometry(const Lattice& l, const IntMat& m);

Isometry identity_isometry(const Lattice& l);
Isometry neg_identity(const Lattice& l);

Isometry compose(const Isometry& a, const Isometry& b);
Isometry inverse(const Isometry& a);

/// Least k <= bound with a^k = id, or nullopt if none is found.
std::optional<unsigned> order(const Isometry& a, unsigned bound);

/// a^2 = id and a != id.
bool is_involution(const Isometry& a);

/// The K3 involution exchanging e_i <-> f_i in each hyperbolic summand and
/// the two E8(-1) blocks componentwise.
Isometry swap_involution_k3();

/// Exchanges hyperbolic summands i and j of the K3 lattice (1-based).
Isometry u_block_permutation(int i, int j);

/// e_i <-> f_i within hyperbolic summand i of the K3 lattice (1-based).
Isometry u_block_swap(int i);

/// Membership in the index-two subgroup of Aut(L) preserving orientation on
/// positive-definite 3-planes. Requires ambient signature (3,19,0) in the
/// K3 basis. Decides by the sign of det(<a(p_i), p_j>) for the reference
/// plane p_i = e_i + f_i.
bool in_gamma(const Isometry& a);

bool commute(const Isometry& a, const Isometry& b);

}  // namespace k3cert
