#include <doctest.h>

#include "helpers.hpp"
#include "k3cert/lattice.hpp"

using namespace k3cert;
using k3cert::testing::random_glnz;
using k3cert::testing::random_nondegenerate_gram;

TEST_CASE("pairing on the hyperbolic plane") {
  Lattice u = hyperbolic_plane();
  IntVec e = unit_vector(2, 0), f = unit_vector(2, 1);
  CHECK(pairing(u, e, f) == 1);
  CHECK(pairing(u, e, e) == 0);
  IntVec epf{1, 1}, emf{1, -1};
  CHECK(pairing(u, epf, epf) == 2);
  CHECK(pairing(u, emf, epf) == 0);
  CHECK(pairing(u, epf, emf) == pairing(u, emf, epf));
  CHECK_THROWS(pairing(u, IntVec{1, 2, 3}, e));
}

TEST_CASE("hyperbolic plane invariants") {
  Lattice u = hyperbolic_plane();
  CHECK(u.rank() == 2);
  CHECK(is_even(u));
  CHECK(is_unimodular(u));
  CHECK(signature(u) == SignatureTriple{1, 1, 0});
}

TEST_CASE("E8(-1)") {
  Lattice e8 = e8_minus();
  CHECK(e8.rank() == 8);
  CHECK(signature(e8) == SignatureTriple{0, 8, 0});
  CHECK(is_even(e8));
  CHECK(is_unimodular(e8));
}

TEST_CASE("direct sums") {
  Lattice u = hyperbolic_plane();
  Lattice uu = direct_sum(u, u);
  CHECK(uu.rank() == 4);
  CHECK(signature(uu) == SignatureTriple{2, 2, 0});

  Lattice ue8 = direct_sum(u, e8_minus());
  CHECK(ue8.rank() == 10);
  CHECK(signature(ue8) == SignatureTriple{1, 9, 0});

  Lattice empty;
  CHECK(direct_sum(u, empty).gram == u.gram);
  CHECK(direct_sum(empty, u).gram == u.gram);
}

TEST_CASE("K3 lattice") {
  Lattice l = k3_lattice();
  CHECK(l.rank() == 22);
  CHECK(signature(l) == SignatureTriple{3, 19, 0});
  CHECK(is_even(l));
  CHECK(is_unimodular(l));
  CHECK(l.basis_labels.size() == 22);
  CHECK(l.basis_labels[0] == "e1");
  CHECK(l.basis_labels[6] == "a1");
  CHECK(l.basis_labels[14] == "b1");
}

TEST_CASE("signature special cases") {
  CHECK(signature(make_lattice(IntMat::from_rows({{-2}}))) ==
        SignatureTriple{0, 1, 0});
  CHECK(signature(Lattice{}) == SignatureTriple{0, 0, 0});
  Lattice m2 = make_lattice(IntMat::from_rows({{-2}}));
  CHECK(is_even(m2));
  CHECK_FALSE(is_unimodular(m2));
}

TEST_CASE("constructor validation") {
  CHECK_THROWS(make_lattice(IntMat::from_rows({{0, 1}, {2, 0}})));
  CHECK_THROWS(make_lattice(IntMat::from_rows({{1, 2}, {2, 4}})));
  CHECK_THROWS(make_lattice(IntMat::from_rows({{1, 2, 3}})));
}

TEST_CASE("signature is additive on direct sums") {
  std::mt19937 rng(101);
  std::uniform_int_distribution<std::size_t> size(1, 4);
  for (int trial = 0; trial < 100; ++trial) {
    Lattice a{random_nondegenerate_gram(size(rng), rng), {}};
    Lattice b{random_nondegenerate_gram(size(rng), rng), {}};
    SignatureTriple sa = signature(a), sb = signature(b);
    SignatureTriple sum{sa.b_plus + sb.b_plus, sa.b_minus + sb.b_minus,
                        sa.b_zero + sb.b_zero};
    CHECK(signature(direct_sum(a, b)) == sum);
    CHECK(sum.b_plus + sum.b_minus + sum.b_zero == a.rank() + b.rank());
  }
}

TEST_CASE("signature is a change-of-basis invariant") {
  std::mt19937 rng(103);
  std::uniform_int_distribution<std::size_t> size(1, 5);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = size(rng);
    IntMat g = random_nondegenerate_gram(n, rng);
    IntMat b = random_glnz(n, rng);
    CHECK(signature(Lattice{mul(transpose(b), mul(g, b)), {}}) ==
          signature(Lattice{g, {}}));
  }
}
