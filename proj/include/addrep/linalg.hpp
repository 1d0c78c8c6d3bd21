/*
   Copyright 2026 The addrep Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0
*/
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace addrep {

using Vec = std::vector<std::uint32_t>;

/// Dense matrix over F_p. Vectors are columns when a matrix acts on them.
class FpMat {
 public:
  FpMat() = default;
  FpMat(unsigned p, std::size_t rows, std::size_t cols);
  static FpMat identity(unsigned p, std::size_t n);
  static FpMat from_rows(unsigned p, const std::vector<Vec>& rows, std::size_t cols);
  static FpMat from_cols(unsigned p, const std::vector<Vec>& cols, std::size_t rows);

  unsigned p() const { return p_; }
  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  std::uint32_t& at(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  std::uint32_t at(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  std::vector<Vec> row_list() const;

  FpMat operator*(const FpMat& o) const;
  FpMat operator+(const FpMat& o) const;
  Vec apply(const Vec& v) const;
  FpMat transpose() const;
  FpMat pow(std::uint64_t e) const;
  bool operator==(const FpMat& o) const = default;
  bool is_zero() const;

 private:
  unsigned p_ = 2;
  std::size_t r_ = 0, c_ = 0;
  std::vector<std::uint32_t> a_;
};

struct Rref {
  FpMat m;                         // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;  // pivot column of each row
};

Rref rref(const FpMat& A);
std::size_t rank(const FpMat& A);
/// Basis of {v : A v = 0}, rows in reduced echelon form.
FpMat kernel(const FpMat& A);
std::optional<Vec> solve(const FpMat& A, const Vec& b);
std::optional<FpMat> inverse(const FpMat& A);

/// Canonical (RREF) basis of the span of the given rows.
FpMat row_space(const FpMat& rows);
/// Coordinates of v in an RREF basis; nullopt if v is outside the span.
std::optional<Vec> coords_in(const Rref& basis, const Vec& v);

std::uint32_t dot(const Vec& a, const Vec& b, unsigned p);
Vec vadd(const Vec& a, const Vec& b, unsigned p);
Vec vscale(const Vec& a, std::uint32_t c, unsigned p);
bool vzero(const Vec& a);

/// Smallest subspace containing the given rows and stable under every
/// operator (v -> A v). Returned in RREF.
FpMat invariant_closure(const std::vector<const FpMat*>& ops, const FpMat& rows);

/// Calls fn on the RREF basis of every k-dimensional subspace of F_p^n,
/// stopping early if fn returns false. Returns false if stopped.
bool for_each_subspace(unsigned p, std::size_t n, std::size_t k,
                       const std::function<bool(const FpMat&)>& fn);
/// Number of k-dimensional subspaces of F_p^n (saturating).
std::uint64_t gaussian_binomial(unsigned p, std::size_t n, std::size_t k);

}  // namespace addrep
