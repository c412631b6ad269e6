#pragma once

#include <string>
#include <vector>

#include "k3cert/exact.hpp"

namespace k3cert {

/// Inertia counts of an integral symmetric form.
struct SignatureTriple {
  std::size_t b_plus = 0;
  std::size_t b_minus = 0;
  std::size_t b_zero = 0;

  bool operator==(const SignatureTriple&) const = default;
};

/// An integral lattice: free Z-module with a symmetric bilinear pairing
/// given by its Gram matrix in a fixed basis.
struct Lattice {
  IntMat gram;
  std::vector<std::string> basis_labels;  // empty or one label per basis vector

  std::size_t rank() const { return gram.rows; }

  bool operator==(const Lattice& o) const { return gram == o.gram; }
};

/// Validating constructor. Rejects non-symmetric Grams always and singular
/// Grams unless `allow_degenerate` is set (complement operations may
/// legitimately produce degenerate restrictions).
Lattice make_lattice(IntMat gram, std::vector<std::string> basis_labels = {},
                     bool allow_degenerate = false);

Int pairing(const Lattice& l, const IntVec& x, const IntVec& y);
Rat pairing_rat(const Lattice& l, const RatVec& x, const RatVec& y);

/// The hyperbolic plane U: rank 2, Gram [[0,1],[1,0]], basis e,f.
Lattice hyperbolic_plane();

/// E8(-1): the negated E8 Cartan matrix in Bourbaki node order.
Lattice e8_minus();

Lattice direct_sum(const Lattice& a, const Lattice& b);

/// The K3 lattice 3U + 2E8(-1), rank 22, signature (3,19).
/// Basis order: e1,f1,e2,f2,e3,f3, then the eight A-block and eight B-block
/// E8 vectors.
Lattice k3_lattice();

SignatureTriple signature(const Lattice& l);
bool is_even(const Lattice& l);
bool is_unimodular(const Lattice& l);

/// Standard basis vector of length n.
IntVec unit_vector(std::size_t n, std::size_t i);

}  // namespace k3cert
