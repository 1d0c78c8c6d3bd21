/*
   Copyright 2026 The addrep Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0
*/
#pragma once

#include <optional>
#include <vector>

#include "addrep/addpoly.hpp"

namespace addrep {

/// One summand of a (possibly direct-sum) module, realized inside the ambient
/// field: V_R with the F_p-basis elems.
struct SympPart {
  AdditivePoly R;   // over F_q
  AdditivePoly Ra;  // over the ambient field
  u64 m = 1;
  std::vector<Fe> elems;
};

/// (V_R, omega_R) with the action of tau (scaling by alpha) and sigma (x -> x^q)
/// written as matrices over F_p acting on column vectors.
struct SympModule {
  unsigned p = 0;
  unsigned f = 1;  // sigma is x -> x^{p^f}
  u64 d = 1;
  u64 r = 1;
  std::size_t dim = 0;
  Field ambient;
  Fe alpha;
  std::vector<SympPart> parts;
  FpMat gram, T, S;
};

/// ambient degree is a multiple of `multiple` (use it to put several modules
/// in one field before taking a direct sum).
SympModule build(const AdditivePoly& R, u64 m, unsigned multiple = 1);

std::uint32_t omega(const SympModule& M, const Vec& v, const Vec& w);
/// Field element for a coordinate vector (single-part modules only).
Fe element_of(const SympModule& M, const Vec& v);
/// Coordinates of an element of V_R (single-part modules only).
Vec coords_of(const SympModule& M, const Fe& x);

struct Submodule {
  FpMat basis;  // RREF rows
  bool t_stable = false;
  bool s_stable = false;
  bool isotropic = false;
  std::size_t dim() const { return basis.rows(); }
};

Submodule make_submodule(const SympModule& M, const FpMat& rows);
bool is_isotropic(const SympModule& M, const FpMat& rows);

struct Anisotropy {
  bool anisotropic = true;
  std::optional<Submodule> witness;  // least dimension, then lexicographic
};

/// Cyclic-submodule scan over every nonzero vector (up to scaling).
Anisotropy completely_anisotropic(const SympModule& M);
/// Oracle: every T,S-stable subspace of dimension <= dim/2.
Anisotropy completely_anisotropic_exhaustive(const SympModule& M);

struct Decomposition {
  AdditivePoly f1, f2;  // over F_q, E_R = f1 o f2
  Submodule W;          // V_{f2} in module coordinates
  bool by_fallback = false;
};

/// Search for E_R = f1 o f2 with f2 monic over F_q, f2(alpha x) = alpha f2(x)
/// and V_{f2} totally isotropic; least degree first.
std::optional<Decomposition> decomposition_route(const SympModule& M, u64 budget = 200000);

Submodule perp(const SympModule& M, const FpMat& W);
SympModule direct_sum(const SympModule& A, const SympModule& B);
SympModule restrict_sigma(const SympModule& M, unsigned t);
/// Least t with restrict_sigma(M, t) not completely anisotropic (d <= 2).
unsigned minimal_imprimitive_unramified_degree(const SympModule& M);

}  // namespace addrep
