#include "k3cert/isometry.hpp"

#include <string>

namespace k3cert {

Isometry verify_isometry(const Lattice& l, const IntMat& m) {
  if (m.rows != l.rank() || m.cols != l.rank())
    throw std::invalid_argument("verify_isometry: matrix size does not match rank");
  IntMat g2 = mul(transpose(m), mul(l.gram, m));
  for (std::size_t i = 0; i < l.rank(); ++i)
    for (std::size_t j = 0; j < l.rank(); ++j)
      if (g2(i, j) != l.gram(i, j))
        throw std::invalid_argument(
            "verify_isometry: Gram not preserved at entry (" +
            std::to_string(i) + "," + std::to_string(j) + ")");
  return Isometry{l, m};
}

Isometry identity_isometry(const Lattice& l) {
  return Isometry{l, IntMat::identity(l.rank())};
}

Isometry neg_identity(const Lattice& l) {
  IntMat m(l.rank(), l.rank());
  for (std::size_t i = 0; i < l.rank(); ++i) m(i, i) = -1;
  return Isometry{l, m};
}

static void require_same_lattice(const Isometry& a, const Isometry& b,
                                 const char* op) {
  if (!(a.lattice == b.lattice))
    throw std::invalid_argument(std::string(op) + ": ambient lattices differ");
}

Isometry compose(const Isometry& a, const Isometry& b) {
  require_same_lattice(a, b, "compose");
  return Isometry{a.lattice, mul(a.matrix, b.matrix)};
}

Isometry inverse(const Isometry& a) {
  return Isometry{a.lattice, inverse_integral(a.matrix)};
}

std::optional<unsigned> order(const Isometry& a, unsigned bound) {
  if (bound < 1) throw std::invalid_argument("order: bound must be >= 1");
  IntMat id = IntMat::identity(a.lattice.rank());
  IntMat p = a.matrix;
  for (unsigned k = 1; k <= bound; ++k) {
    if (p == id) return k;
    p = mul(p, a.matrix);
  }
  return std::nullopt;
}

bool is_involution(const Isometry& a) {
  IntMat id = IntMat::identity(a.lattice.rank());
  return a.matrix != id && mul(a.matrix, a.matrix) == id;
}

Isometry swap_involution_k3() {
  Lattice l = k3_lattice();
  IntMat m(22, 22);
  for (int u = 0; u < 3; ++u) {
    m(2 * u, 2 * u + 1) = 1;  // e_i <-> f_i
    m(2 * u + 1, 2 * u) = 1;
  }
  for (int i = 0; i < 8; ++i) {
    m(6 + i, 14 + i) = 1;  // A-block <-> B-block
    m(14 + i, 6 + i) = 1;
  }
  return verify_isometry(l, m);
}

static void check_u_index(int i) {
  if (i < 1 || i > 3)
    throw std::invalid_argument("hyperbolic summand index must be 1, 2 or 3");
}

Isometry u_block_permutation(int i, int j) {
  check_u_index(i);
  check_u_index(j);
  Lattice l = k3_lattice();
  IntMat m = IntMat::identity(22);
  if (i != j) {
    std::size_t a = 2 * (i - 1), b = 2 * (j - 1);
    for (std::size_t k = 0; k < 2; ++k) {
      m(a + k, a + k) = 0;
      m(b + k, b + k) = 0;
      m(a + k, b + k) = 1;
      m(b + k, a + k) = 1;
    }
  }
  return verify_isometry(l, m);
}

Isometry u_block_swap(int i) {
  check_u_index(i);
  Lattice l = k3_lattice();
  IntMat m = IntMat::identity(22);
  std::size_t a = 2 * (i - 1);
  m(a, a) = 0;
  m(a + 1, a + 1) = 0;
  m(a, a + 1) = 1;
  m(a + 1, a) = 1;
  return verify_isometry(l, m);
}

bool in_gamma(const Isometry& a) {
  if (signature(a.lattice) != SignatureTriple{3, 19, 0})
    throw std::invalid_argument("in_gamma: ambient signature is not (3,19,0)");
  const std::size_t n = a.lattice.rank();
  // reference positive 3-plane spanned by e_i + f_i
  IntVec p[3];
  for (int k = 0; k < 3; ++k) {
    p[k] = IntVec(n);
    p[k][2 * k] = 1;
    p[k][2 * k + 1] = 1;
  }
  IntMat pairmat(3, 3);
  for (int i = 0; i < 3; ++i) {
    IntVec ap = a.apply(p[i]);
    for (int j = 0; j < 3; ++j) pairmat(i, j) = pairing(a.lattice, ap, p[j]);
  }
  Int d = det(pairmat);
  if (d == 0)
    // the pairing of two positive 3-planes in signature (3,19) is
    // nondegenerate; reaching this means the input was not an isometry
    throw std::logic_error("in_gamma: degenerate plane pairing");
  return d > 0;
}

bool commute(const Isometry& a, const Isometry& b) {
  require_same_lattice(a, b, "commute");
  return mul(a.matrix, b.matrix) == mul(b.matrix, a.matrix);
}

}  // namespace k3cert
