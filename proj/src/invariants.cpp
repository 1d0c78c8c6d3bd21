/*
   Copyright 2026 The addrep Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0
*/
#include "addrep/invariants.hpp"

#include "addrep/errors.hpp"

namespace addrep {

namespace {

constexpr u64 kRatLimit = u64{1} << 40;

i64 pw(u64 p, unsigned k) { return (i64)checked_pow(p, k, kRatLimit); }

void check_params(u64 p, unsigned e, u64 dR, u64 m) {
  require(is_prime_u(p), "p must be prime");
  require(m >= 1, "m must be >= 1");
  require(dR >= 1 && (pw(p, e) + 1) % (i64)dR == 0,
          "d_R must divide p^e + 1 (d_R = " + std::to_string(dR) + ")");
  require(m < kRatLimit && dR < kRatLimit, "parameters out of range");
  pw(p, 2 * e + 1);
}

}  // namespace

Rational swan(u64 p, unsigned e, u64 dR, u64 m) {
  check_params(p, e, dR, m);
  return Rational((i64)m * (pw(p, e) + 1), (i64)dR);
}

Rational herbrand(u64 p, unsigned e, u64 dR, u64 m, const Rational& t) {
  check_params(p, e, dR, m);
  const i64 pe = pw(p, e), p2e = pw(p, 2 * e), p2e1 = pw(p, 2 * e + 1), M = (i64)m, d = (i64)dR;
  if (t <= Rational(0)) return t;
  if (t <= Rational(M, d)) return t * d;
  if (t <= Rational((pe + 1) * M, pe * d)) return t * (p2e * d) - Rational((p2e - 1) * M);
  return t * (p2e1 * d) - Rational((pe + 1) * (pw(p, e + 1) - 1) * M);
}

RamificationProfile profile(u64 p, unsigned e, u64 dR, u64 m) {
  check_params(p, e, dR, m);
  const i64 pe = pw(p, e), M = (i64)m, d = (i64)dR;
  RamificationProfile r;
  r.bounds = {Rational(-1), Rational(0), Rational(M, d), Rational((pe + 1) * M, pe * d)};
  r.groups = {"G", "Gal(N/F_r)", "Gal(N/T)", "Gal(N/M)", "1"};
  r.breakpoints = {Rational(0), Rational(M, d), Rational((pe + 1) * M, pe * d)};
  r.slopes = {Rational(1), Rational(d), Rational(pw(p, 2 * e) * d), Rational(pw(p, 2 * e + 1) * d)};
  return r;
}

Valuations valuations(u64 p, unsigned e, u64 dR, u64 m) {
  check_params(p, e, dR, m);
  const i64 pe = pw(p, e), M = (i64)m, d = (i64)dR;
  return {Rational(1, d), Rational(-M, pw(p, 2 * e) * d), Rational(-M * (pe + 1), pw(p, 2 * e + 1) * d)};
}

std::string Verdict::label() const {
  if (!primitive) return "imprimitive";
  return unramified_degree ? "primitive_unramified_unstable" : "primitive";
}

Verdict primitivity(const AdditivePoly& R, u64 m, bool oracle) {
  check_r_input(R);
  const unsigned p = R.base()->p();
  require(m >= 1 && m % p != 0, "m must be a positive integer prime to p (got m = " + std::to_string(m) + ")");
  Verdict v;
  v.module = build(R, m);
  v.anisotropy = completely_anisotropic(v.module);
  v.primitive = v.anisotropy.anisotropic;
  if (oracle) {
    Anisotropy ex = completely_anisotropic_exhaustive(v.module);
    ensure(ex.anisotropic == v.primitive, "cyclic-submodule scan and exhaustive subspace scan disagree");
    v.oracle_checked = true;
  }
  v.decomposition = decomposition_route(v.module);
  ensure(v.decomposition.has_value() == !v.primitive,
         std::string("anisotropy route says ") + (v.primitive ? "primitive" : "imprimitive") +
             " but the Ore decomposition route disagrees");
  v.e_r_prime = is_prime(e_r(R));
  ensure(!(v.e_r_prime && !v.primitive), "E_R is prime but an isotropic submodule was found");
  if (!v.primitive && p != 2) {
    v.induction = iterated_quotient(v.module, *v.anisotropy.witness);
    v.morphism = verify_morphism(R, v.induction->R1, v.induction->r, v.induction->delta, m);
    std::string why;
    for (auto& s : v.morphism->reasons) why += " " + s;
    ensure(v.morphism->ok, "quotient morphism fails its identities:" + why);
  }
  if (v.primitive && v.module.d <= 2 && v.module.dim > 0)
    v.unramified_degree = minimal_imprimitive_unramified_degree(v.module);
  return v;
}

Report full_report(const AdditivePoly& R, u64 m, const ReportOptions& opt) {
  check_r_input(R);
  const unsigned p = R.base()->p();
  require(m >= 1 && m % p != 0, "m must be a positive integer prime to p (got m = " + std::to_string(m) + ")");
  Report rep;
  rep.R = R;
  rep.m = m;
  const unsigned e = (unsigned)R.e();
  rep.degree = R.degree();
  rep.dR = d_r(R);
  rep.dRm = d_rm(R, m);
  rep.swan = swan(p, e, rep.dR, m);
  rep.vals = valuations(p, e, rep.dR, m);
  rep.prof = profile(p, e, rep.dR, m);
  ensure(rep.prof.max_jump() * pw(p, e) == rep.swan, "swan differs from p^e times the largest jump");
  rep.verdict = primitivity(R, m, opt.oracle);
  bool monomial = e >= 1;
  for (unsigned i = 0; i < e && monomial; ++i) monomial = R.coef(i).is_zero();
  if (!monomial) {
    rep.root_system_note = "R is not a monomial of positive index";
  } else if (multiplicative_order(p, rep.dRm) != 2 * (u64)e) {
    rep.root_system_note = "F_p(mu_{d_{R,m}}) is not F_{p^{2e}}";
  } else {
    try {
      rep.root_system = monomial_root_system(R, m);
    } catch (const GuardExceeded& ex) {
      rep.root_system_note = ex.what();
    }
  }
  if (opt.curve) rep.curve = curve_summary(R, opt.max_k, opt.threads);
  return rep;
}

}  // namespace addrep
