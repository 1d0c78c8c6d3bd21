/*
   Copyright 2026 The addrep Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0
*/
#include "addrep/linalg.hpp"

#include <algorithm>

#include "addrep/arith.hpp"
#include "addrep/errors.hpp"

namespace addrep {

namespace {

std::uint32_t inv_mod(std::uint32_t a, unsigned p) {
  return (std::uint32_t)powmod(a, p - 2, p);
}

}  // namespace

FpMat::FpMat(unsigned p, std::size_t rows, std::size_t cols)
    : p_(p), r_(rows), c_(cols), a_(rows * cols, 0) {}

FpMat FpMat::identity(unsigned p, std::size_t n) {
  FpMat m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

FpMat FpMat::from_rows(unsigned p, const std::vector<Vec>& rows, std::size_t cols) {
  FpMat m(p, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw ValidationError("FpMat: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j] % p;
  }
  return m;
}

FpMat FpMat::from_cols(unsigned p, const std::vector<Vec>& cols, std::size_t rows) {
  FpMat m(p, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw ValidationError("FpMat: ragged columns");
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i] % p;
  }
  return m;
}

Vec FpMat::row(std::size_t i) const {
  return Vec(a_.begin() + i * c_, a_.begin() + (i + 1) * c_);
}

Vec FpMat::col(std::size_t j) const {
  Vec v(r_);
  for (std::size_t i = 0; i < r_; ++i) v[i] = at(i, j);
  return v;
}

std::vector<Vec> FpMat::row_list() const {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < r_; ++i) out.push_back(row(i));
  return out;
}

FpMat FpMat::operator*(const FpMat& o) const {
  if (c_ != o.r_ || p_ != o.p_) throw ValidationError("FpMat: shape mismatch");
  FpMat m(p_, r_, o.c_);
  std::vector<std::uint64_t> acc(o.c_);
  for (std::size_t i = 0; i < r_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < c_; ++k) {
      std::uint64_t x = at(i, k);
      if (!x) continue;
      for (std::size_t j = 0; j < o.c_; ++j) acc[j] = (acc[j] + x * o.at(k, j)) % p_;
    }
    for (std::size_t j = 0; j < o.c_; ++j) m.at(i, j) = (std::uint32_t)acc[j];
  }
  return m;
}

FpMat FpMat::operator+(const FpMat& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw ValidationError("FpMat: shape mismatch");
  FpMat m = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = (a_[i] + o.a_[i]) % p_;
  return m;
}

Vec FpMat::apply(const Vec& v) const {
  if (v.size() != c_) throw ValidationError("FpMat: vector length mismatch");
  Vec out(r_, 0);
  for (std::size_t i = 0; i < r_; ++i) {
    std::uint64_t s = 0;
    for (std::size_t j = 0; j < c_; ++j) s = (s + (std::uint64_t)at(i, j) * v[j]) % p_;
    out[i] = (std::uint32_t)s;
  }
  return out;
}

FpMat FpMat::transpose() const {
  FpMat m(p_, c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
  return m;
}

FpMat FpMat::pow(std::uint64_t e) const {
  FpMat r = identity(p_, r_), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

bool FpMat::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](auto x) { return x == 0; });
}

Rref rref(const FpMat& A) {
  FpMat m = A;
  const unsigned p = A.p();
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t s = r;
    while (s < m.rows() && m.at(s, c) == 0) ++s;
    if (s == m.rows()) continue;
    if (s != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(s, j), m.at(r, j));
    std::uint32_t iv = inv_mod(m.at(r, c), p);
    for (std::size_t j = c; j < m.cols(); ++j)
      m.at(r, j) = (std::uint32_t)((std::uint64_t)m.at(r, j) * iv % p);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      std::uint64_t f = p - m.at(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        m.at(i, j) = (std::uint32_t)((m.at(i, j) + f * m.at(r, j)) % p);
    }
    piv.push_back(c);
    ++r;
  }
  FpMat out(p, r, m.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j);
  return {out, piv};
}

std::size_t rank(const FpMat& A) { return rref(A).pivots.size(); }

FpMat kernel(const FpMat& A) {
  Rref R = rref(A);
  const unsigned p = A.p();
  const std::size_t n = A.cols();
  std::vector<bool> is_piv(n, false);
  for (auto c : R.pivots) is_piv[c] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_piv[f]) continue;
    Vec v(n, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < R.pivots.size(); ++i)
      v[R.pivots[i]] = (p - R.m.at(i, f)) % p;
    basis.push_back(v);
  }
  return row_space(FpMat::from_rows(p, basis, n));
}

std::optional<Vec> solve(const FpMat& A, const Vec& b) {
  const unsigned p = A.p();
  FpMat aug(p, A.rows(), A.cols() + 1);
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols()) = b[i] % p;
  }
  Rref R = rref(aug);
  Vec x(A.cols(), 0);
  for (std::size_t i = 0; i < R.pivots.size(); ++i) {
    if (R.pivots[i] == A.cols()) return std::nullopt;
    x[R.pivots[i]] = R.m.at(i, A.cols());
  }
  return x;
}

std::optional<FpMat> inverse(const FpMat& A) {
  if (A.rows() != A.cols()) return std::nullopt;
  const std::size_t n = A.rows();
  const unsigned p = A.p();
  FpMat aug(p, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, n + i) = 1;
  }
  Rref R = rref(aug);
  if (R.pivots.size() < n || R.pivots[n - 1] != n - 1) return std::nullopt;
  FpMat out(p, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.at(i, j) = R.m.at(i, n + j);
  return out;
}

FpMat row_space(const FpMat& rows) { return rref(rows).m; }

std::optional<Vec> coords_in(const Rref& basis, const Vec& v) {
  const unsigned p = basis.m.p();
  Vec c(basis.pivots.size());
  Vec rest = v;
  for (std::size_t i = 0; i < basis.pivots.size(); ++i) {
    c[i] = rest[basis.pivots[i]];
    if (!c[i]) continue;
    std::uint64_t f = p - c[i];
    for (std::size_t j = 0; j < rest.size(); ++j)
      rest[j] = (std::uint32_t)((rest[j] + f * basis.m.at(i, j)) % p);
  }
  if (!vzero(rest)) return std::nullopt;
  return c;
}

std::uint32_t dot(const Vec& a, const Vec& b, unsigned p) {
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = (s + (std::uint64_t)a[i] * b[i]) % p;
  return (std::uint32_t)s;
}

Vec vadd(const Vec& a, const Vec& b, unsigned p) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = (a[i] + b[i]) % p;
  return r;
}

Vec vscale(const Vec& a, std::uint32_t c, unsigned p) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = (std::uint32_t)((std::uint64_t)a[i] * c % p);
  return r;
}

bool vzero(const Vec& a) {
  return std::all_of(a.begin(), a.end(), [](auto x) { return x == 0; });
}

FpMat invariant_closure(const std::vector<const FpMat*>& ops, const FpMat& rows) {
  const unsigned p = rows.p();
  const std::size_t n = rows.cols();
  Rref cur = rref(rows);
  std::vector<Vec> queue = cur.m.row_list();
  while (!queue.empty()) {
    Vec v = queue.back();
    queue.pop_back();
    for (const FpMat* A : ops) {
      Vec w = A->apply(v);
      if (coords_in(cur, w)) continue;
      std::vector<Vec> rs = cur.m.row_list();
      rs.push_back(w);
      cur = rref(FpMat::from_rows(p, rs, n));
      queue.push_back(w);
    }
  }
  return cur.m;
}

bool for_each_subspace(unsigned p, std::size_t n, std::size_t k,
                       const std::function<bool(const FpMat&)>& fn) {
  if (k > n) return true;
  std::vector<std::size_t> piv(k);
  for (std::size_t i = 0; i < k; ++i) piv[i] = i;
  while (true) {
    std::vector<std::pair<std::size_t, std::size_t>> free;
    std::vector<bool> is_piv(n, false);
    for (auto c : piv) is_piv[c] = true;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = piv[i] + 1; j < n; ++j)
        if (!is_piv[j]) free.emplace_back(i, j);
    FpMat m(p, k, n);
    for (std::size_t i = 0; i < k; ++i) m.at(i, piv[i]) = 1;
    std::vector<std::uint32_t> val(free.size(), 0);
    while (true) {
      for (std::size_t t = 0; t < free.size(); ++t) m.at(free[t].first, free[t].second) = val[t];
      if (!fn(m)) return false;
      bool carry = true;
      for (std::size_t t = free.size(); t-- > 0;) {
        if (++val[t] < p) {
          carry = false;
          break;
        }
        val[t] = 0;
      }
      if (carry) break;
    }
    // next pivot combination
    std::size_t i = k;
    while (i > 0 && piv[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++piv[i - 1];
    for (std::size_t j = i; j < k; ++j) piv[j] = piv[j - 1] + 1;
  }
  return true;
}

std::uint64_t gaussian_binomial(unsigned p, std::size_t n, std::size_t k) {
  if (k > n) return 0;
  // product (p^{n-i} - 1)/(p^{i+1} - 1), computed in long double then rounded
  long double num = 1;
  for (std::size_t i = 0; i < k; ++i) {
    long double a = 1, b = 1;
    for (std::size_t j = 0; j < n - i; ++j) a *= p;
    for (std::size_t j = 0; j < i + 1; ++j) b *= p;
    num = num * (a - 1) / (b - 1);
  }
  if (num > 1.8e19L) return ~std::uint64_t{0};
  return (std::uint64_t)(num + 0.5L);
}

}  // namespace addrep
