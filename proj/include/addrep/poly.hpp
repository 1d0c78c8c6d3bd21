/*
   Copyright 2026 The addrep Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0
*/
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "addrep/ff.hpp"

namespace addrep {

/// Dense classical polynomial over a finite field, constant term first.
class Poly {
 public:
  explicit Poly(Field F) : F_(std::move(F)) {}
  Poly(Field F, std::vector<Fe> c);
  static Poly x(const Field& F);
  static Poly constant(const Fe& c);

  const Field& field() const { return F_; }
  int degree() const { return (int)c_.size() - 1; }
  bool is_zero() const { return c_.empty(); }
  Fe coef(std::size_t i) const;
  const std::vector<Fe>& coeffs() const { return c_; }
  Fe lead() const { return c_.back(); }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scale(const Fe& c) const;
  bool operator==(const Poly& o) const { return c_ == o.c_; }

  std::pair<Poly, Poly> divmod(const Poly& g) const;
  Poly operator%(const Poly& g) const { return divmod(g).second; }
  Poly monic() const;
  Fe eval(const Fe& x) const;
  Poly derivative() const;

 private:
  Field F_;
  std::vector<Fe> c_;
  void trim();
};

Poly poly_gcd(Poly a, Poly b);
Poly poly_powmod(const Poly& base, u64 e, const Poly& mod);
/// base^{p^k} mod `mod`, using coefficient Frobenius when cheap.
Poly poly_pow_pk_mod(const Poly& base, unsigned k, const Poly& mod);
/// Rabin irreducibility over F_q (q = |field|) for monic f of degree >= 1.
bool poly_is_irreducible(const Poly& f);
/// All roots in the coefficient field of a squarefree split polynomial
/// (Cantor-Zassenhaus, deterministic seed), sorted canonically.
std::vector<Fe> split_roots(const Poly& f);
/// Roots of f lying in the coefficient field, sorted canonically.
std::vector<Fe> roots_in_field(const Poly& f);

/// Sparse classical polynomial: degree -> nonzero coefficient.
class SparsePoly {
 public:
  SparsePoly() = default;
  explicit SparsePoly(Field F) : F_(std::move(F)) {}
  static SparsePoly monomial(const Fe& c, u64 deg);

  const Field& field() const { return F_; }
  const std::map<u64, Fe>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  u64 degree() const { return t_.empty() ? 0 : t_.rbegin()->first; }
  Fe coef(u64 k) const;
  void add_term(u64 k, const Fe& c);

  SparsePoly operator+(const SparsePoly& o) const;
  SparsePoly operator-(const SparsePoly& o) const;
  SparsePoly operator-() const;
  SparsePoly operator*(const SparsePoly& o) const;
  SparsePoly scale(const Fe& c) const;
  bool operator==(const SparsePoly& o) const;
  /// f(x)^p, computed termwise.
  SparsePoly frob_power() const;
  SparsePoly pow(u64 e) const;
  Fe eval(const Fe& x) const;
  /// Apply a map to every coefficient (e.g. an embedding or descent).
  template <class Fn>
  SparsePoly map_coeffs(const Field& G, Fn fn) const {
    SparsePoly r(G);
    for (auto& [k, c] : t_) r.add_term(k, fn(c));
    return r;
  }

 private:
  Field F_;
  std::map<u64, Fe> t_;
};

/// outer(inner(x)).
SparsePoly sparse_compose(const SparsePoly& outer, const SparsePoly& inner);

}  // namespace addrep
