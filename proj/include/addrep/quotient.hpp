/*
   Copyright 2026 The addrep Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0
*/
#pragma once

#include <string>
#include <vector>

#include "addrep/addpoly.hpp"
#include "addrep/poly.hpp"
#include "addrep/sympmod.hpp"

namespace addrep {

/// beta in V_R \ {0} and gamma = f_R(beta, beta) / 2.
struct IsotropicDatum {
  Fe beta, gamma;
};

IsotropicDatum make_datum(const AdditivePoly& R, const Fe& beta);

/// x R(x) = u P1(u) + Delta0^p - Delta0 with u = x^p - beta^{p-1} x.
struct QuotientStep {
  IsotropicDatum datum;
  AdditivePoly u, P, P1;
  SparsePoly delta0;
};

/// f_R(x, beta) as an additive polynomial in x.
AdditivePoly f_r_at(const AdditivePoly& R, const Fe& beta);

QuotientStep single_quotient(const AdditivePoly& R, const IsotropicDatum& datum);
/// (u(beta'), gamma' - Delta0(beta')), a datum for P1. Needs omega(beta, beta') = 0.
IsotropicDatum push_element(const AdditivePoly& R, const QuotientStep& step, const Fe& beta2);

struct InductionData {
  AdditivePoly r, R1;  // over F_q
  SparsePoly delta;    // over F_q
  unsigned e_prime = 0;
  u64 fprime_degree = 1;  // [F' : F] = p^{e - e'}
  bool delta_matches_gamma = false;  // Delta(beta) = f_R(beta, beta)/2 on U
};

/// Quotient by a totally isotropic H-submodule, one basis vector at a time in
/// RREF order.
InductionData iterated_quotient(const SympModule& M, const Submodule& U);

struct MorphismCheck {
  bool ok = true;
  std::vector<std::string> reasons;
};

MorphismCheck verify_morphism(const AdditivePoly& R, const AdditivePoly& R1, const AdditivePoly& r,
                              const SparsePoly& delta, u64 m);

}  // namespace addrep
