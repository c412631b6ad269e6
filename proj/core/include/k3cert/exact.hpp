#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace k3cert {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

/// Dense integer matrix, row-major.
struct IntMat {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Int> data;

  IntMat() = default;
  IntMat(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

  Int& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const {
    return data[i * cols + j];
  }

  bool operator==(const IntMat&) const = default;

  static IntMat identity(std::size_t n);
  static IntMat from_rows(const std::vector<std::vector<long>>& rows);
};

/// Dense rational matrix, row-major.
struct RatMat {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rat> data;

  RatMat() = default;
  RatMat(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  explicit RatMat(const IntMat& m);

  Rat& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const {
    return data[i * cols + j];
  }

  bool operator==(const RatMat&) const = default;
};

IntMat mul(const IntMat& a, const IntMat& b);
IntVec mul(const IntMat& a, const IntVec& v);
IntMat transpose(const IntMat& a);
IntMat add(const IntMat& a, const IntMat& b);
IntMat sub(const IntMat& a, const IntMat& b);
bool is_symmetric(const IntMat& a);

/// Determinant by fraction-free (Bareiss) elimination. Square input.
Int det(const IntMat& a);

/// Exact inverse of an integer matrix; throws if the inverse is not integral.
IntMat inverse_integral(const IntMat& a);

RatMat mul(const RatMat& a, const RatMat& b);
RatVec mul(const RatMat& a, const RatVec& v);
RatMat transpose(const RatMat& a);
std::size_t rank(RatMat a);

/// Gauss-Jordan inverse; throws on singular input.
RatMat inverse(const RatMat& a);

/// Nonzero invariant factors d1 | d2 | ... of the Smith normal form.
std::vector<Int> smith_invariants(IntMat a);

/// Columns form a basis of the saturated integer kernel {x : a x = 0}.
/// The basis extends to a basis of Z^cols, so the kernel is primitive.
IntMat kernel_saturated(const IntMat& a);

/// Inertia (p, n, z) of a symmetric integer matrix, computed by exact
/// rational congruence diagonalization.
struct Inertia {
  std::size_t pos = 0;
  std::size_t neg = 0;
  std::size_t zero = 0;

  bool operator==(const Inertia&) const = default;
};

Inertia inertia(const IntMat& sym);

/// floor(x) for a rational.
Int rat_floor(const Rat& x);
/// ceil(x) for a rational.
Int rat_ceil(const Rat& x);

}  // namespace k3cert
