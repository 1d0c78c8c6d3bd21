/*
   Copyright 2026 The addrep Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0
*/
#pragma once

#include <string>

#include "addrep/addpoly.hpp"
#include "addrep/sympmod.hpp"

namespace addrep {

/// Orbit of (alpha, beta) under theta: (a, b) -> (a^p, b^p) and
/// sigma: (a, b) -> (a^{q^-1}, b), with q = p^f.
struct RootSystem {
  Fe alpha, beta;  // same field
  unsigned f = 1;
};

struct RSInvariants {
  u64 a = 1, b = 1, c = 0, e_prime = 1, f_prime = 1;
  bool operator==(const RSInvariants&) const = default;
};

/// By minimality scans on field elements.
RSInvariants invariants(const RootSystem& W);
bool belongs(const RootSystem& W, u64 d, u64 r);
/// (alpha', beta') lies in the orbit of W.
bool same_orbit(const RootSystem& W, const Fe& alpha, const Fe& beta);

struct Classification {
  char type = 0;       // 'A', 'B', 'C' or 0 when no case applies
  int structures = 0;  // symplectic structures up to isomorphism
};

Classification classify(const RootSystem& W);
std::string type_name(char t);

struct MonomialRootSystem {
  RootSystem W;
  Fe beta_q;  // beta in F_q
  u64 e1 = 1;
  RSInvariants formula;
  RSInvariants brute;
  Classification cls;
  char predicted = 0;  // type from the v_2 comparison and the parity of c
};

/// R = a_e x^{p^e}; needs F_p(mu_{d_{R,m}}) = F_{p^{2e}}.
MonomialRootSystem monomial_root_system(const AdditivePoly& R, u64 m);

/// V_R satisfies the defining relations of M(W): dim = a b, tau acts by an
/// element of order e', and eta^{q^a} = beta eta on V_R.
bool matches_vr(const SympModule& M, const MonomialRootSystem& mr);

/// "(M(W),0)" for types B and C, "(M(W),2)" for two type-A summands with one
/// root system whose sum is completely anisotropic, "n/a" otherwise.
std::string nu_label(const MonomialRootSystem& mr);
std::string nu_label_pair(const MonomialRootSystem& x, const MonomialRootSystem& y, bool sum_anisotropic);

}  // namespace addrep
