/*
   Copyright 2026 The addrep Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0
*/
#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "addrep/arith.hpp"
#include "addrep/linalg.hpp"

namespace addrep {

using Coord = std::uint32_t;

class FieldDesc;
using Field = std::shared_ptr<const FieldDesc>;

/// Largest field order accepted anywhere (p^n <= 2^40).
constexpr u64 kFieldGuard = u64{1} << 40;

/// F_{p^n} in the power basis of the lexicographically least monic
/// irreducible of degree n (coefficient tuples compared constant first).
/// For n = 1 the modulus is x, so the generator class is 0.
class FieldDesc {
 public:
  static Field create(unsigned p, unsigned n);

  unsigned p() const { return p_; }
  unsigned n() const { return n_; }
  u64 order() const { return order_; }
  /// n + 1 entries, constant first, last entry 1.
  const std::vector<Coord>& modulus() const { return mod_; }
  bool same(const FieldDesc& o) const { return p_ == o.p_ && n_ == o.n_; }
  std::string name() const;

  // Raw kernels on coordinate arrays of length n.
  void mul(const Coord* a, const Coord* b, Coord* out) const;
  void frob(const Coord* a, Coord* out) const;
  /// Prime factorization of p^n - 1.
  const std::vector<std::pair<u64, unsigned>>& unit_factors() const { return unit_factors_; }

 private:
  FieldDesc(unsigned p, unsigned n, std::vector<Coord> mod);
  unsigned p_, n_;
  u64 order_;
  std::vector<Coord> mod_;
  std::vector<Coord> frob_;  // n*n, row-major, column j = coords of x^{jp}
  std::vector<std::pair<u64, unsigned>> unit_factors_;
};

Field field_create(unsigned p, unsigned n);

/// Monic irreducibility over F_p (Rabin), coefficients constant first.
bool is_irreducible_fp(const std::vector<Coord>& f, unsigned p);

class Fe {
 public:
  Fe() = default;
  explicit Fe(Field F);  // zero of F

  static Fe zero(const Field& F) { return Fe(F); }
  static Fe one(const Field& F);
  static Fe constant(const Field& F, i64 c);
  static Fe from_coords(const Field& F, std::vector<Coord> c);
  /// Canonical index: coordinates read as base-p digits, c0 most significant.
  static Fe from_index(const Field& F, u64 idx);
  /// The class of x in the power basis.
  static Fe gen(const Field& F);

  const Field& field() const { return F_; }
  const std::vector<Coord>& coords() const { return c_; }
  bool valid() const { return F_ != nullptr; }
  bool is_zero() const;
  bool is_one() const;
  u64 index() const;

  Fe operator+(const Fe& o) const;
  Fe operator-(const Fe& o) const;
  Fe operator-() const;
  Fe operator*(const Fe& o) const;
  Fe operator/(const Fe& o) const;
  Fe& operator+=(const Fe& o);
  Fe& operator-=(const Fe& o);
  Fe& operator*=(const Fe& o);
  Fe scale(i64 c) const;

  Fe pow(u64 e) const;
  Fe inv() const;
  /// x^{p^k}.
  Fe frob(u64 k = 1) const;

  bool operator==(const Fe& o) const;
  std::strong_ordering operator<=>(const Fe& o) const;

 private:
  Field F_;
  std::vector<Coord> c_;
  void check_same(const Fe& o) const;
};

Fe frobenius(const Fe& x, u64 k);

/// (Nr, Tr) from x's field down to F_{p^sub_degree}, as elements of x's field.
std::pair<Fe, Fe> norm_trace(const Fe& x, unsigned sub_degree);

/// Multiplicative order of a nonzero element.
u64 element_order(const Fe& x);
Fe primitive_element(const Field& F);
/// mu_d sorted canonically.
std::vector<Fe> roots_of_unity(const Field& F, u64 d);
/// First element of roots_of_unity(F, d) of exact order d.
Fe canonical_root_of_unity(const Field& F, u64 d);

/// Embedding of F_{p^n} into F_{p^N}, n | N, sending the generator to the
/// least root of the source modulus.
class Embedding {
 public:
  Embedding(Field src, Field dst);
  const Field& src() const { return src_; }
  const Field& dst() const { return dst_; }
  Fe operator()(const Fe& x) const;
  /// Inverse on the image; throws ValidationError when x is not in it.
  Fe descend(const Fe& x) const;
  bool in_image(const Fe& x) const;

 private:
  Field src_, dst_;
  std::vector<Fe> powers_;  // images of 1, g, ..., g^{n-1}
  FpMat A_;                 // columns: coordinates of powers_
};

Fe embed(const Fe& x, const Field& target);

/// "p^n:modulus_csv:coords_csv"
std::string to_text(const Fe& x);
Fe fe_from_text(const std::string& s);
/// Parse an element of F given as "c0,c1,..." or a full text form or a
/// single integer (prime-field constant).
Fe parse_element(const Field& F, const std::string& s);

}  // namespace addrep
