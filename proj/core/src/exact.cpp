#include "k3cert/exact.hpp"

#include <algorithm>
#include <utility>

namespace k3cert {

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMat IntMat::from_rows(const std::vector<std::vector<long>>& rows) {
  if (rows.empty()) return IntMat();
  IntMat m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols)
      throw std::invalid_argument("from_rows: ragged row lengths");
    for (std::size_t j = 0; j < m.cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RatMat::RatMat(const IntMat& m) : rows(m.rows), cols(m.cols), data(m.data.size()) {
  for (std::size_t k = 0; k < data.size(); ++k) data[k] = Rat(m.data[k]);
}

IntMat mul(const IntMat& a, const IntMat& b) {
  if (a.cols != b.rows) throw std::invalid_argument("mul: dimension mismatch");
  IntMat c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      const Int& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

IntVec mul(const IntMat& a, const IntVec& v) {
  if (a.cols != v.size()) throw std::invalid_argument("mul: dimension mismatch");
  IntVec r(a.rows);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) r[i] += a(i, j) * v[j];
  return r;
}

IntMat transpose(const IntMat& a) {
  IntMat t(a.cols, a.rows);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) t(j, i) = a(i, j);
  return t;
}

IntMat add(const IntMat& a, const IntMat& b) {
  if (a.rows != b.rows || a.cols != b.cols)
    throw std::invalid_argument("add: dimension mismatch");
  IntMat c(a.rows, a.cols);
  for (std::size_t k = 0; k < a.data.size(); ++k) c.data[k] = a.data[k] + b.data[k];
  return c;
}

IntMat sub(const IntMat& a, const IntMat& b) {
  if (a.rows != b.rows || a.cols != b.cols)
    throw std::invalid_argument("sub: dimension mismatch");
  IntMat c(a.rows, a.cols);
  for (std::size_t k = 0; k < a.data.size(); ++k) c.data[k] = a.data[k] - b.data[k];
  return c;
}

bool is_symmetric(const IntMat& a) {
  if (a.rows != a.cols) return false;
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = i + 1; j < a.cols; ++j)
      if (a(i, j) != a(j, i)) return false;
  return true;
}

Int det(const IntMat& a) {
  if (a.rows != a.cols) throw std::invalid_argument("det: matrix not square");
  const std::size_t n = a.rows;
  if (n == 0) return 1;
  IntMat m = a;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

RatMat mul(const RatMat& a, const RatMat& b) {
  if (a.cols != b.rows) throw std::invalid_argument("mul: dimension mismatch");
  RatMat c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      const Rat& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

RatVec mul(const RatMat& a, const RatVec& v) {
  if (a.cols != v.size()) throw std::invalid_argument("mul: dimension mismatch");
  RatVec r(a.rows);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) r[i] += a(i, j) * v[j];
  return r;
}

RatMat transpose(const RatMat& a) {
  RatMat t(a.cols, a.rows);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) t(j, i) = a(i, j);
  return t;
}

std::size_t rank(RatMat a) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < a.cols && r < a.rows; ++col) {
    std::size_t p = r;
    while (p < a.rows && a(p, col) == 0) ++p;
    if (p == a.rows) continue;
    for (std::size_t j = 0; j < a.cols; ++j) std::swap(a(r, j), a(p, j));
    for (std::size_t i = r + 1; i < a.rows; ++i) {
      if (a(i, col) == 0) continue;
      Rat f = a(i, col) / a(r, col);
      for (std::size_t j = col; j < a.cols; ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

RatMat inverse(const RatMat& a) {
  if (a.rows != a.cols) throw std::invalid_argument("inverse: matrix not square");
  const std::size_t n = a.rows;
  RatMat m = a;
  RatMat inv(n, n);
  for (std::size_t i = 0; i < n; ++i) inv(i, i) = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) throw std::invalid_argument("inverse: singular matrix");
    if (p != k)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(k, j), m(p, j));
        std::swap(inv(k, j), inv(p, j));
      }
    Rat piv = m(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      m(k, j) /= piv;
      inv(k, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || m(i, k) == 0) continue;
      Rat f = m(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) -= f * m(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

IntMat inverse_integral(const IntMat& a) {
  RatMat r = inverse(RatMat(a));
  IntMat out(r.rows, r.cols);
  for (std::size_t k = 0; k < r.data.size(); ++k) {
    const Rat& q = r.data[k];
    if (q.get_den() != 1)
      throw std::invalid_argument("inverse_integral: inverse is not integral");
    out.data[k] = q.get_num();
  }
  return out;
}

namespace {

// Smith normal form by alternating row/column reduction. Only the column
// transform V is tracked (a * V_accum stays congruent to the reduced matrix),
// which is all the kernel computation needs.
void smith_reduce(IntMat& m, IntMat* v) {
  const std::size_t nr = m.rows, nc = m.cols;
  std::size_t t = 0;
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < nc; ++c) std::swap(m(i, c), m(j, c));
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < nr; ++r) std::swap(m(r, i), m(r, j));
    if (v)
      for (std::size_t r = 0; r < nc; ++r) std::swap((*v)(r, i), (*v)(r, j));
  };
  auto addmul_row = [&](std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t c = 0; c < nc; ++c) m(dst, c) += f * m(src, c);
  };
  auto addmul_col = [&](std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t r = 0; r < nr; ++r) m(r, dst) += f * m(r, src);
    if (v)
      for (std::size_t r = 0; r < nc; ++r) (*v)(r, dst) += f * (*v)(r, src);
  };

  while (t < nr && t < nc) {
    // locate a pivot of minimal absolute value
    std::size_t pi = t, pj = t;
    bool found = false;
    for (std::size_t i = t; i < nr; ++i)
      for (std::size_t j = t; j < nc; ++j)
        if (m(i, j) != 0 &&
            (!found || cmp(abs(m(i, j)), abs(m(pi, pj))) < 0)) {
          pi = i;
          pj = j;
          found = true;
        }
    if (!found) break;
    if (pi != t) swap_rows(pi, t);
    if (pj != t) swap_cols(pj, t);

    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t i = t + 1; i < nr; ++i) {
        if (m(i, t) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), m(i, t).get_mpz_t(), m(t, t).get_mpz_t());
        addmul_row(i, t, -q);
        if (m(i, t) != 0) {
          swap_rows(i, t);
          dirty = true;
        }
      }
      for (std::size_t j = t + 1; j < nc; ++j) {
        if (m(t, j) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), m(t, j).get_mpz_t(), m(t, t).get_mpz_t());
        addmul_col(j, t, -q);
        if (m(t, j) != 0) {
          swap_cols(j, t);
          dirty = true;
        }
      }
    }
    ++t;
  }

  // enforce the divisibility chain d1 | d2 | ...
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < t; ++i) {
      if (m(i + 1, i + 1) % m(i, i) == 0) continue;
      // fold entry (i+1,i+1) into the (i,i) pivot block and re-reduce 2x2
      addmul_col(i, i + 1, 1);
      Int a = m(i, i), b = m(i + 1, i);
      Int g, x, y;
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(),
                 b.get_mpz_t());
      // rows: [x y; -b/g a/g] applied to rows i, i+1
      Int bg = b / g, ag = a / g;
      for (std::size_t c = 0; c < nc; ++c) {
        Int r1 = x * m(i, c) + y * m(i + 1, c);
        Int r2 = -bg * m(i, c) + ag * m(i + 1, c);
        m(i, c) = r1;
        m(i + 1, c) = r2;
      }
      // clear the remaining off-diagonal in column i+1
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), m(i, i + 1).get_mpz_t(),
                 m(i, i).get_mpz_t());
      addmul_col(i + 1, i, -q);
      if (m(i, i + 1) != 0 || m(i + 1, i) != 0)
        throw std::logic_error("smith_reduce: divisibility pass failed");
      changed = true;
    }
  }
  for (std::size_t i = 0; i < t; ++i)
    if (m(i, i) < 0) {
      for (std::size_t c = 0; c < nc; ++c) m(i, c) = -m(i, c);
    }
}

}  // namespace

std::vector<Int> smith_invariants(IntMat a) {
  smith_reduce(a, nullptr);
  std::vector<Int> d;
  for (std::size_t i = 0; i < a.rows && i < a.cols; ++i) {
    if (a(i, i) == 0) break;
    d.push_back(a(i, i));
  }
  return d;
}

IntMat kernel_saturated(const IntMat& a) {
  IntMat m = a;
  IntMat v = IntMat::identity(a.cols);
  smith_reduce(m, &v);
  std::size_t r = 0;
  while (r < m.rows && r < m.cols && m(r, r) != 0) ++r;
  IntMat ker(a.cols, a.cols - r);
  for (std::size_t j = r; j < a.cols; ++j)
    for (std::size_t i = 0; i < a.cols; ++i) ker(i, j - r) = v(i, j);
  return ker;
}

Inertia inertia(const IntMat& sym) {
  if (!is_symmetric(sym)) throw std::invalid_argument("inertia: matrix not symmetric");
  const std::size_t n = sym.rows;
  RatMat a(sym);
  Inertia res;
  auto add_sym = [&](std::size_t dst, std::size_t src, const Rat& f) {
    for (std::size_t j = 0; j < n; ++j) a(dst, j) += f * a(src, j);
    for (std::size_t i = 0; i < n; ++i) a(i, dst) += f * a(i, src);
  };
  auto swap_sym = [&](std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < n; ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t r = 0; r < n; ++r) std::swap(a(r, i), a(r, j));
  };
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, p) == 0) ++p;
      if (p < n) {
        swap_sym(k, p);
      } else {
        // all remaining diagonal entries vanish; find any nonzero pairing
        bool found = false;
        for (std::size_t i = k; i < n && !found; ++i)
          for (std::size_t j = i + 1; j < n && !found; ++j)
            if (a(i, j) != 0) {
              add_sym(i, j, 1);  // (u, v) -> u + v picks up 2<u,v> on the diagonal
              if (i != k) swap_sym(i, k);
              found = true;
            }
        if (!found) {
          res.zero += n - k;
          break;
        }
      }
    }
    Rat piv = a(k, k);
    if (piv > 0)
      ++res.pos;
    else
      ++res.neg;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rat f = -a(i, k) / piv;
      add_sym(i, k, f);
    }
  }
  return res;
}

Int rat_floor(const Rat& x) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

Int rat_ceil(const Rat& x) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

}  // namespace k3cert
