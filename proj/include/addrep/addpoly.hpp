/*
   Copyright 2026 The addrep Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0
*/
#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "addrep/ff.hpp"
#include "addrep/linalg.hpp"
#include "addrep/poly.hpp"

namespace addrep {

/// sum_i a_i x^{p^i} over a finite field.
class AdditivePoly {
 public:
  AdditivePoly() = default;
  explicit AdditivePoly(Field F) : F_(std::move(F)) {}
  AdditivePoly(Field F, std::vector<Fe> coeffs);
  /// x^{p^s}
  static AdditivePoly frob_monomial(const Field& F, unsigned s, const Fe* c = nullptr);
  static AdditivePoly identity(const Field& F) { return frob_monomial(F, 0); }

  const Field& base() const { return F_; }
  const std::vector<Fe>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// Index of the top coefficient; -1 for the zero polynomial.
  int e() const { return (int)c_.size() - 1; }
  Fe coef(std::size_t i) const;
  /// p^e, throws GuardExceeded beyond 2^62.
  u64 degree() const;
  /// Least index with a nonzero coefficient.
  int low() const;
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

  Fe operator()(const Fe& x) const;
  AdditivePoly operator+(const AdditivePoly& o) const;
  AdditivePoly operator-(const AdditivePoly& o) const;
  AdditivePoly scale(const Fe& c) const;
  AdditivePoly monic() const;
  bool operator==(const AdditivePoly& o) const;

  AdditivePoly base_change(const Embedding& emb) const;
  /// Coefficients pulled back through emb; ValidationError if impossible.
  AdditivePoly descend(const Embedding& emb) const;
  SparsePoly to_sparse() const;

 private:
  Field F_;
  std::vector<Fe> c_;
};

Fe evaluate(const AdditivePoly& f, const Fe& x);
/// f(g(x)).
AdditivePoly compose(const AdditivePoly& f, const AdditivePoly& g);
/// (h, r) with f = h o g + r and deg r < deg g.
std::pair<AdditivePoly, AdditivePoly> right_divmod(const AdditivePoly& f, const AdditivePoly& g);

void check_r_input(const AdditivePoly& R);
AdditivePoly e_r(const AdditivePoly& R);
u64 d_r(const AdditivePoly& R);
u64 d_rm(const AdditivePoly& R, u64 m);

/// c x^{p^i} y^{p^j} keyed by (i, j).
class BivariateTable {
 public:
  explicit BivariateTable(Field F) : F_(std::move(F)) {}
  const Field& field() const { return F_; }
  const std::map<std::pair<unsigned, unsigned>, Fe>& terms() const { return t_; }
  void add(unsigned i, unsigned j, const Fe& c);
  BivariateTable operator-(const BivariateTable& o) const;
  bool operator==(const BivariateTable& o) const { return t_ == o.t_; }
  /// Raise to the p-th power: (i, j, c) -> (i+1, j+1, c^p).
  BivariateTable frob_power() const;
  /// Evaluate at x, y in the table's field.
  Fe eval(const Fe& x, const Fe& y) const;

 private:
  Field F_;
  std::map<std::pair<unsigned, unsigned>, Fe> t_;
};

BivariateTable f_r(const AdditivePoly& R);
/// f_R(x, y) straight from the defining double sum, without the table.
Fe f_r_eval(const AdditivePoly& R, const Fe& x, const Fe& y);
/// Both sides of f^p - f = -x^{p^e} E_R(y) + x R(y) + y R(x).
std::pair<BivariateTable, BivariateTable> fr_identity_sides(const AdditivePoly& R);

bool mu_scaling(const AdditivePoly& f, u64 d);

/// Monic additive polynomial vanishing exactly on the F_p-span of a basis
/// (Ore recursion). Throws if the vectors are dependent.
AdditivePoly kernel_poly_from_basis(const std::vector<Fe>& basis);
/// Same from the full list of subspace elements; validates closure.
AdditivePoly kernel_poly(const std::vector<Fe>& W);

bool is_reduced(const AdditivePoly& f);
/// Every coefficient is fixed by x -> x^{p^sub_degree}.
bool rationality(const AdditivePoly& f, unsigned sub_degree);

/// Matrix of f as an F_p-linear map of its base field.
FpMat operator_matrix(const AdditivePoly& f);

/// The kernel of f found in a finite extension of its base field.
struct KernelData {
  Field ambient;
  std::optional<Embedding> emb;  // base -> ambient
  AdditivePoly f;                // f over ambient
  FpMat basis;                   // RREF rows, coordinates in ambient
  std::vector<Fe> elems;         // basis as field elements
  unsigned k = 1;                // ambient degree over the base field
};

/// Kernel of f in F_{p^M}, M = lcm(n, multiple, D) with n the base degree
/// and D the least degree containing the whole kernel.
KernelData split_kernel(const AdditivePoly& f, unsigned multiple = 1);

/// Indecomposable in the Ore ring over the base field. Decided on the
/// left module A_q / A_q f, whose submodules are the right factors.
bool is_prime(const AdditivePoly& f);
/// A monic right factor of degree strictly between 1 and deg f, if any.
std::optional<AdditivePoly> nontrivial_right_factor(const AdditivePoly& f);
/// Same verdict from Frobenius-stable subspaces of the kernel (needs the
/// splitting field within the size guard).
bool is_prime_by_kernel(const AdditivePoly& f);

struct PhiResult {
  Poly phi;
  bool irreducible;
  bool reciprocal;
  /// True when A_{q,t} is all of A_q (t = 1, q = p), where irreducibility
  /// of phi is equivalent to primality. Otherwise only "prime implies
  /// irreducible" holds.
  bool exact;
};

PhiResult phi_iso(const AdditivePoly& f, unsigned t);
AdditivePoly phi_inverse(const Poly& g, unsigned t);

std::string to_text(const AdditivePoly& f);
AdditivePoly addpoly_from_text(const std::string& s);

}  // namespace addrep
