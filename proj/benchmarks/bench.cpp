#include <benchmark/benchmark.h>

#include "k3cert/obstruction.hpp"
#include "k3cert/roots.hpp"

using namespace k3cert;

static void BM_E8Roots(benchmark::State& state) {
  Lattice e8 = e8_minus();
  for (auto _ : state) {
    auto vs = short_vectors(e8, Int(-2));
    benchmark::DoNotOptimize(vs);
  }
}
BENCHMARK(BM_E8Roots);

static void BM_K3Signature(benchmark::State& state) {
  Lattice l = k3_lattice();
  for (auto _ : state) {
    SignatureTriple s = signature(l);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_K3Signature);

static void BM_TCRDecompose(benchmark::State& state) {
  Lattice l = k3_lattice();
  Isometry s = swap_involution_k3();
  for (auto _ : state) {
    TCRProfile p = tcr_decompose(l, s);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_TCRDecompose);

static void BM_Certificate(benchmark::State& state) {
  Isometry s = swap_involution_k3();
  for (auto _ : state) {
    ObstructionCertificate c = nielsen_certificate(s);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_Certificate);

static void BM_WallTestComplement(benchmark::State& state) {
  Lattice l = k3_lattice();
  std::vector<RatVec> basis;
  for (int i = 0; i < 3; ++i) {
    RatVec v(22);
    v[2 * i] = 1;
    v[2 * i + 1] = 1;
    basis.push_back(std::move(v));
  }
  for (auto _ : state) {
    Sublattice c = orthogonal_complement(l, basis);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_WallTestComplement);

BENCHMARK_MAIN();
