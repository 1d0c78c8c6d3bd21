/*
   Copyright 2026 The addrep Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0
*/
#pragma once

#include <boost/rational.hpp>
#include <optional>
#include <string>
#include <vector>

#include "addrep/addpoly.hpp"
#include "addrep/counts.hpp"
#include "addrep/quotient.hpp"
#include "addrep/rootsys.hpp"
#include "addrep/sympmod.hpp"

namespace addrep {

using Rational = boost::rational<i64>;

/// m (p^e + 1) / d_R.
Rational swan(u64 p, unsigned e, u64 dR, u64 m);
/// Herbrand function psi_{N/F}(t) of the splitting field.
Rational herbrand(u64 p, unsigned e, u64 dR, u64 m, const Rational& t);

struct RamificationProfile {
  /// Upper-numbering filtration: group label on (previous bound, bound];
  /// the last label holds above the last bound.
  std::vector<Rational> bounds;     // -1, 0, m/d_R, (p^e+1) m / (p^e d_R)
  std::vector<std::string> groups;  // G, Gal(N/F_r), Gal(N/T), Gal(N/M), 1
  /// psi is t on (-inf, 0], then linear with these slopes between
  /// consecutive breakpoints.
  std::vector<Rational> breakpoints;  // 0, m/d_R, (p^e+1) m / (p^e d_R)
  std::vector<Rational> slopes;       // 1, d_R, p^{2e} d_R, p^{2e+1} d_R
  Rational max_jump() const { return breakpoints.back(); }
};
RamificationProfile profile(u64 p, unsigned e, u64 dR, u64 m);

struct Valuations {
  Rational alpha, beta, gamma;
};
Valuations valuations(u64 p, unsigned e, u64 dR, u64 m);

struct Verdict {
  bool primitive = true;
  SympModule module;
  Anisotropy anisotropy;
  std::optional<Decomposition> decomposition;
  bool oracle_checked = false;
  bool e_r_prime = false;
  std::optional<InductionData> induction;
  std::optional<MorphismCheck> morphism;
  /// least t with the restriction to F_{q^t} imprimitive (primitive, d_{R,m} <= 2)
  std::optional<unsigned> unramified_degree;
  /// "primitive", "imprimitive" or "primitive_unramified_unstable"
  std::string label() const;
};

/// Both symplectic routes, plus the quotient route when p != 2. Any
/// disagreement throws TheoremViolation.
Verdict primitivity(const AdditivePoly& R, u64 m, bool oracle = false);

struct ReportOptions {
  bool curve = false;
  unsigned max_k = 0;
  bool oracle = false;
  unsigned threads = 1;
};

struct Report {
  AdditivePoly R;
  u64 m = 1;
  u64 degree = 1;
  u64 dR = 1, dRm = 1;
  Rational swan;
  Valuations vals;
  RamificationProfile prof;
  Verdict verdict;
  std::optional<MonomialRootSystem> root_system;
  std::string root_system_note;  // why it is absent
  std::optional<CurveSummary> curve;
};

/// Validates (p prime, gcd(m, p) = 1, R != 0, (p, e) != (2, 0)) and runs
/// every module.
Report full_report(const AdditivePoly& R, u64 m, const ReportOptions& opt = {});

}  // namespace addrep
