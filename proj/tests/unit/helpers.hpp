#pragma once

#include <cstdint>
#include <random>

#include "k3cert/roots.hpp"

namespace k3cert::testing {

/// Random element of GL(n,Z) as a product of elementary matrices.
inline IntMat random_glnz(std::size_t n, std::mt19937& rng, int ops = 0) {
  if (ops == 0) ops = static_cast<int>(3 * n);
  IntMat m = IntMat::identity(n);
  std::uniform_int_distribution<std::size_t> idx(0, n ? n - 1 : 0);
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int k = 0; k < ops; ++k) {
    std::size_t i = idx(rng), j = idx(rng);
    switch (kind(rng)) {
      case 0:  // row_i += c * row_j
        if (i != j) {
          int c = coef(rng);
          for (std::size_t col = 0; col < n; ++col) m(i, col) += c * m(j, col);
        }
        break;
      case 1:  // swap
        if (i != j)
          for (std::size_t col = 0; col < n; ++col) std::swap(m(i, col), m(j, col));
        break;
      case 2:  // negate a row
        for (std::size_t col = 0; col < n; ++col) m(i, col) = -m(i, col);
        break;
    }
  }
  return m;
}

/// Random nondegenerate symmetric integer matrix of rank n (diagonal
/// conjugated by a random unimodular change of basis).
inline IntMat random_nondegenerate_gram(std::size_t n, std::mt19937& rng) {
  IntMat d(n, n);
  std::uniform_int_distribution<int> diag(1, 3);
  std::uniform_int_distribution<int> sign(0, 1);
  for (std::size_t i = 0; i < n; ++i)
    d(i, i) = (sign(rng) ? 1 : -1) * diag(rng);
  IntMat b = random_glnz(n, rng);
  return mul(transpose(b), mul(d, b));
}

/// Random positive definite Gram: B^T B + identity for random integer B.
inline IntMat random_posdef_gram(std::size_t n, std::mt19937& rng) {
  IntMat b(n, n);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (Int& e : b.data) e = coef(rng);
  IntMat g = mul(transpose(b), b);
  for (std::size_t i = 0; i < n; ++i) g(i, i) += 1;
  return g;
}

/// Independent short-vector oracle: scan the full coefficient box with
/// per-coordinate bounds |x_i|^2 <= target * (G^-1)_ii (positive definite
/// case; negative definite inputs are negated). Exact int64 arithmetic.
/// `bound_override`, when positive, fixes the box half-width instead of the
/// inverse-Gram bound (only valid when a correct box is known independently).
inline std::vector<IntVec> box_oracle(const Lattice& l, long target,
                                      int64_t bound_override = 0) {
  const std::size_t n = l.rank();
  std::vector<std::vector<int64_t>> g(n, std::vector<int64_t>(n));
  long t = target;
  bool neg = target < 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      g[i][j] = l.gram(i, j).get_si();
      if (neg) g[i][j] = -g[i][j];
    }
  if (neg) t = -t;
  std::vector<int64_t> bound(n);
  if (bound_override > 0) {
    for (std::size_t i = 0; i < n; ++i) bound[i] = bound_override;
  } else {
    RatMat q(l.gram);
    if (neg)
      for (Rat& e : q.data) e = -e;
    RatMat qinv = inverse(q);
    for (std::size_t i = 0; i < n; ++i) {
      Rat m = Rat(t) * qinv(i, i);
      if (m < 0) throw std::invalid_argument("box_oracle: form not definite");
      Int b = rat_floor(m);
      int64_t bi = 0;
      while ((bi + 1) * (bi + 1) <= b.get_si()) ++bi;
      bound[i] = bi;
    }
  }
  std::vector<IntVec> out;
  std::vector<int64_t> x(n, 0);
  for (std::size_t i = 0; i < n; ++i) x[i] = -bound[i];
  while (true) {
    int64_t norm = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) norm += x[i] * g[i][j] * x[j];
    }
    if (norm == t) {
      IntVec v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = x[i];
      out.push_back(std::move(v));
    }
    std::size_t k = 0;
    while (k < n && x[k] == bound[k]) {
      x[k] = -bound[k];
      ++k;
    }
    if (k == n) break;
    ++x[k];
  }
  return out;
}

inline IntVec k3_vec(std::initializer_list<long> coords) {
  IntVec v;
  for (long c : coords) v.push_back(c);
  return v;
}

inline RatVec to_rat(const IntVec& v) {
  RatVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

/// The rational 3-plane tilted into both E8 blocks whose complement has no
/// roots; found by randomized search and kept fixed for the W tests.
inline std::vector<RatVec> tilted_plane_basis() {
  std::vector<std::vector<long>> rows = {
      {5, 7, 0, 0, 0, 0, 0, 1, -2, -1, 0, 2, 1, -1, 2, 0, 2, 1, 2, 1, 1, -2},
      {0, 0, 8, 7, 0, 0, -2, -1, 2, 0, -2, -2, -1, 2, -2, 0, -1, 0, 1, -1, -1, -1},
      {0, 0, 0, 0, 7, 8, 1, -2, -1, -1, -2, 1, 0, -1, -1, 1, -1, -2, 1, 2, 1, -1}};
  std::vector<RatVec> basis;
  for (const auto& r : rows) {
    RatVec v(22);
    for (std::size_t j = 0; j < 22; ++j) v[j] = Rat(r[j]);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace k3cert::testing
