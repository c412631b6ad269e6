// Acceptance gate: one pass/fail line per criterion, each with a wall-clock
// budget. Every comparison is exact integer equality. Exits nonzero if any
// criterion fails or overruns its budget.

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "k3cert/obstruction.hpp"
#include "k3cert/roots.hpp"
#include "unit/helpers.hpp"

using namespace k3cert;
using k3cert::testing::box_oracle;
using k3cert::testing::tilted_plane_basis;
using k3cert::testing::to_rat;

namespace {

int g_failures = 0;

void report(const std::string& name, bool ok, double seconds, double budget) {
  bool in_budget = seconds < budget;
  if (!ok || !in_budget) ++g_failures;
  std::printf("%s %-28s %.3fs (budget %.0fs)%s\n", (ok && in_budget) ? "PASS" : "FAIL",
              name.c_str(), seconds, budget, in_budget ? "" : " [over budget]");
}

template <typename F>
void criterion(const std::string& name, double budget, F body) {
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body();
  } catch (const std::exception& e) {
    std::printf("  exception: %s\n", e.what());
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                 .count();
  report(name, ok, s, budget);
}

std::set<std::vector<long>> as_set(const std::vector<IntVec>& vs) {
  std::set<std::vector<long>> s;
  for (const IntVec& v : vs) {
    std::vector<long> w;
    for (const Int& e : v) w.push_back(e.get_si());
    s.insert(std::move(w));
  }
  return s;
}

// Criterion 1: the full obstruction pipeline on the hyperbolic/E8 swap
// involution reproduces every published number and the final verdict.
bool swap_certificate_numbers() {
  ObstructionCertificate c = nielsen_certificate(swap_involution_k3());
  bool ok = true;
  ok &= *c.tcr == TCRProfile{0, 0, 11};
  ok &= *c.equivariant == EquivariantInvariants{3, 8, -5};
  ok &= even_prediction(equivariant_signature(k3_lattice(),
                                              identity_isometry(k3_lattice()))
                            .sigma_g) == -8;
  ok &= *c.parity == Parity::Odd;
  ok &= *c.fixed_points == FixedPointProfile{1, 0};
  ok &= *c.total_square == 6;
  ok &= c.verdict == Verdict::NotRealizableAsSmoothInvolution;
  ok &= c.steps.size() == 7 && c.steps[6].status == StepStatus::Contradiction;
  return ok;
}

// Criterion 2: structural invariants of the ambient lattice, and the rank
// identity t + c + 2r = 22 for the named involutions.
bool ambient_invariants() {
  Lattice l = k3_lattice();
  bool ok = l.rank() == 22;
  ok &= signature(l) == SignatureTriple{3, 19, 0};
  ok &= is_even(l);
  ok &= is_unimodular(l);
  for (const Isometry& a : {swap_involution_k3(), neg_identity(l)}) {
    TCRProfile p = tcr_decompose(l, a);
    ok &= p.t + p.c + 2 * p.r == 22;
  }
  return ok;
}

// Criterion 3: tcr_decompose recovers the planted (t, c, r) of 200 random
// block-model involutions conjugated by random unimodular changes of basis.
bool tcr_recovery() {
  std::mt19937 rng(9001);
  std::uniform_int_distribution<std::size_t> pick(0, 10);
  std::uniform_int_distribution<int> sign(0, 1);
  int done = 0;
  bool ok = true;
  while (done < 200) {
    std::size_t t = pick(rng), c = pick(rng), r = pick(rng);
    std::size_t n = t + c + 2 * r;
    if (n == 0 || n > 10) continue;
    IntMat gram(n, n), inv(n, n);
    std::size_t pos = 0;
    for (std::size_t i = 0; i < t; ++i, ++pos) {
      gram(pos, pos) = sign(rng) ? 1 : -1;
      inv(pos, pos) = 1;
    }
    for (std::size_t i = 0; i < c; ++i, ++pos) {
      gram(pos, pos) = sign(rng) ? 1 : -1;
      inv(pos, pos) = -1;
    }
    for (std::size_t i = 0; i < r; ++i, pos += 2) {
      gram(pos, pos + 1) = gram(pos + 1, pos) = 1;
      inv(pos, pos + 1) = inv(pos + 1, pos) = 1;
    }
    IntMat b = testing::random_glnz(n, rng);
    Lattice l{mul(transpose(b), mul(gram, b)), {}};
    Isometry a = verify_isometry(l, mul(inverse_integral(b), mul(inv, b)));
    ok &= tcr_decompose(l, a) == TCRProfile{t, c, r};
    ++done;
  }
  return ok;
}

// Criterion 4: the lattice-reduction enumerator agrees with an independent
// full-box oracle on random definite lattices, and both count 240 roots in
// the rank-8 even negative definite block.
bool enumeration_vs_oracle() {
  bool ok = as_set(short_vectors(e8_minus(), Int(-2))) ==
            as_set(box_oracle(e8_minus(), -2));
  std::mt19937 rng(9002);
  std::uniform_int_distribution<std::size_t> size(1, 6);
  std::uniform_int_distribution<int> tgt(1, 8);
  std::uniform_int_distribution<int> flip(0, 1);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t n = size(rng);
    IntMat g = testing::random_posdef_gram(n, rng);
    long target = tgt(rng);
    if (flip(rng)) {
      for (Int& e : g.data) e = -e;
      target = -target;
    }
    Lattice l{g, {}};
    ok &= as_set(short_vectors(l, Int(target))) == as_set(box_oracle(l, target));
  }
  ok &= short_vectors(e8_minus(), Int(-2)).size() == 240;
  return ok;
}

// Criterion 5: the orientation character is multiplicative over 200 random
// products and takes the expected values on the named elements.
bool gamma_character() {
  Lattice l = k3_lattice();
  std::vector<Isometry> gens;
  gens.push_back(u_block_permutation(1, 2));
  gens.push_back(u_block_permutation(2, 3));
  gens.push_back(u_block_swap(1));
  gens.push_back(u_block_swap(2));
  gens.push_back(neg_identity(l));
  gens.push_back(reflection_in_root(l, unit_vector(22, 6)));
  gens.push_back(reflection_in_root(l, unit_vector(22, 14)));
  std::mt19937 rng(9003);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  auto word = [&](int len) {
    Isometry w = identity_isometry(l);
    for (int i = 0; i < len; ++i) w = compose(w, gens[pick(rng)]);
    return w;
  };
  auto sgn = [](const Isometry& a) { return in_gamma(a) ? 1 : -1; };
  bool ok = in_gamma(identity_isometry(l));
  ok &= !in_gamma(neg_identity(l));
  ok &= in_gamma(swap_involution_k3());
  for (int trial = 0; trial < 200; ++trial) {
    Isometry a = word(5), b = word(5);
    ok &= sgn(compose(a, b)) == sgn(a) * sgn(b);
  }
  return ok;
}

// Criterion 6: the wall test rejects the straight positive 3-plane (whose
// complement carries hundreds of norm -2 vectors) and accepts the fixed
// tilted plane, cross-checked by full enumeration of its complement.
bool wall_test() {
  Lattice l = k3_lattice();
  std::vector<RatVec> straight;
  for (int i = 0; i < 3; ++i) {
    IntVec v(22);
    v[2 * i] = 1;
    v[2 * i + 1] = 1;
    straight.push_back(to_rat(v));
  }
  bool ok = !is_in_W(make_rational_plane(l, straight));
  Sublattice cs = orthogonal_complement(l, straight);
  ok &= cs.lattice.rank() == 19;
  ok &= signature(cs.lattice) == SignatureTriple{0, 19, 0};
  ok &= short_vectors(cs.lattice, Int(-2)).size() >= 480;

  RationalPlane tilted = make_rational_plane(l, tilted_plane_basis());
  ok &= is_in_W(tilted);
  Sublattice ct = orthogonal_complement(l, tilted.basis);
  ok &= ct.lattice.rank() == 19;
  ok &= signature(ct.lattice) == SignatureTriple{0, 19, 0};
  ok &= short_vectors(ct.lattice, Int(-2)).empty();
  return ok;
}

}  // namespace

int main() {
  criterion("swap_certificate_numbers", 1.0, swap_certificate_numbers);
  criterion("ambient_invariants", 1.0, ambient_invariants);
  criterion("tcr_recovery", 30.0, tcr_recovery);
  criterion("enumeration_vs_oracle", 60.0, enumeration_vs_oracle);
  criterion("gamma_character", 10.0, gamma_character);
  criterion("wall_test", 60.0, wall_test);
  if (g_failures) std::printf("%d criterion(s) failed\n", g_failures);
  return g_failures ? 1 : 0;
}
