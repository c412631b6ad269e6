#pragma once

#include "k3cert/involution.hpp"

namespace k3cert {

/// A finite set of roots (vectors of self-pairing -2), closed under
/// negation.
struct RootSet {
  std::vector<IntVec> vectors;
};

/// Validates norms and negation closure.
RootSet make_root_set(const Lattice& l, std::vector<IntVec> vectors);

/// A 2- or 3-dimensional rational subspace of the ambient lattice, given by
/// a linearly independent basis.
struct RationalPlane {
  Lattice ambient;
  std::vector<RatVec> basis;
};

RationalPlane make_rational_plane(Lattice ambient, std::vector<RatVec> basis);

/// Complete list of lattice vectors with self-pairing exactly `target`,
/// by Fincke-Pohst enumeration with exact rational Cholesky bounds. The
/// lattice must be positive definite with target > 0 or negative definite
/// with target < 0. Output is sorted lexicographically by coordinates and
/// closed under negation.
std::vector<IntVec> short_vectors(const Lattice& l, const Int& target);

/// Same search, stopping once `max_count` vectors are found. Used for
/// emptiness tests; no ordering guarantee.
std::vector<IntVec> short_vectors_capped(const Lattice& l, const Int& target,
                                         std::size_t max_count);

/// Saturated sublattice {x in L : <x,v> = 0 for all v}, with its restricted
/// Gram and the integer embedding into L.
Sublattice orthogonal_complement(const Lattice& l,
                                 const std::vector<RatVec>& vs);

/// Whether a positive-definite rational 3-plane in the K3 lattice avoids
/// all walls: its rank-19 negative definite complement contains no root.
bool is_in_W(const RationalPlane& p);

/// <u, delta> != 0 for every delta in the supplied root set.
bool wall_clearance(const Lattice& l, const RatVec& u, const RootSet& roots);

/// Reflection x -> x + <x, delta> delta across the wall of a -2 root.
Isometry reflection_in_root(const Lattice& l, const IntVec& delta);

}  // namespace k3cert
