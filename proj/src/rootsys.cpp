/*
   Copyright 2026 The addrep Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0
*/
#include "addrep/rootsys.hpp"

#include "addrep/errors.hpp"

namespace addrep {

namespace {

// x^{p^i + p^j} == 1
bool in_mu_sum(const Fe& x, u64 i, u64 j) { return (x.frob(i) * x.frob(j)).is_one(); }

}  // namespace

RSInvariants invariants(const RootSystem& W) {
  require(W.alpha.field()->same(*W.beta.field()), "root system: alpha and beta in different fields");
  require(!W.alpha.is_zero() && !W.beta.is_zero(), "root system: alpha and beta must be nonzero");
  const u64 M = W.alpha.field()->n();
  const u64 f = W.f;
  RSInvariants inv;
  inv.e_prime = element_order(W.alpha);
  inv.f_prime = element_order(W.beta);
  inv.a = 0;
  for (u64 a = 1; a <= M && !inv.a; ++a)
    if (W.alpha.frob(f * a) == W.alpha) inv.a = a;
  ensure(inv.a > 0, "a(W) not found");
  inv.b = 0;
  for (u64 b = 1; b <= M && !inv.b; ++b) {
    if (W.beta.frob(b) != W.beta) continue;
    Fe ab = W.alpha.frob(b);
    for (u64 x = 0; x < inv.a; ++x)
      if (ab == W.alpha.frob(f * x)) {
        inv.b = b;
        break;
      }
  }
  ensure(inv.b > 0, "b(W) not found");
  Fe ab = W.alpha.frob(inv.b);
  bool found = false;
  for (u64 c = 0; c < inv.a && !found; ++c)
    if (ab == W.alpha.frob(f * c)) {
      inv.c = c;
      found = true;
    }
  ensure(found, "c(W) not found");
  return inv;
}

bool belongs(const RootSystem& W, u64 d, u64 r) {
  const unsigned p = W.alpha.field()->p();
  require(d >= 1 && r >= 1, "belongs: d and r must be positive");
  require(powmod(p, (u64)W.f * r, d) == 1 % d, "belongs: q^r != 1 mod d");
  RSInvariants inv = invariants(W);
  return d % inv.e_prime == 0 && r % (inv.a * inv.f_prime) == 0;
}

bool same_orbit(const RootSystem& W, const Fe& alpha, const Fe& beta) {
  const u64 M = W.alpha.field()->n();
  for (u64 i = 0; i < M; ++i) {
    if (W.beta.frob(i) != beta) continue;
    // sigma^j theta^i: alpha^{p^i q^{-j}} = alpha^{p^{i + M j - f j}}
    for (u64 j = 0; j < M; ++j)
      if (W.alpha.frob((i + (M - W.f % M) * j) % M) == alpha) return true;
  }
  return false;
}

Classification classify(const RootSystem& W) {
  RSInvariants inv = invariants(W);
  const u64 f = W.f;
  const unsigned p = W.alpha.field()->p();
  const Fe& al = W.alpha;
  const Fe& be = W.beta;
  Classification c;
  if (inv.a % 2 == 0 && in_mu_sum(al, f * inv.a / 2, 0) && be == -Fe::one(be.field())) {
    c.type = 'A';
    c.structures = p != 2 ? 2 : 1;
  } else if (inv.b % 2 == 0 && inv.c % 2 == 0 && in_mu_sum(al, inv.b / 2, f * inv.c / 2) &&
             in_mu_sum(be, inv.b / 2, 0)) {
    c.type = 'B';
    c.structures = 1;
  } else if (inv.b % 2 == 0 && inv.c % 2 == inv.a % 2 && in_mu_sum(al, inv.b / 2, f * (inv.a + inv.c) / 2) &&
             in_mu_sum(be, inv.b / 2, 0)) {
    c.type = 'C';
    c.structures = 1;
  }
  return c;
}

std::string type_name(char t) { return t ? std::string(1, t) : std::string("none"); }

MonomialRootSystem monomial_root_system(const AdditivePoly& R, u64 m) {
  check_r_input(R);
  const Field& Fq = R.base();
  const unsigned p = Fq->p(), f = Fq->n();
  require(R.e() >= 1, "root system needs e >= 1");
  const unsigned e = (unsigned)R.e();
  for (unsigned i = 0; i < e; ++i) require(R.coef(i).is_zero(), "root system needs a monomial R = a_e x^{p^e}");
  const u64 d = d_rm(R, m);
  require(multiplicative_order(p, d) == 2 * e,
          "root system needs F_p(mu_d) = F_{p^{2e}}; here d_{R,m} = " + std::to_string(d) +
              " and ord_d(p) = " + std::to_string(multiplicative_order(p, d)));
  MonomialRootSystem mr;
  mr.e1 = gcd_u(f, 2 * e);
  Fe ae = R.coef(e);
  // Nr_{q/p^{e1}}(-a_e^{-(p^e-1)})
  Fe x = -(ae.inv().pow(checked_pow(p, e) - 1));
  mr.beta_q = norm_trace(x, (unsigned)mr.e1).first;
  Field A = field_create(p, (unsigned)lcm_u(2 * e, f));
  mr.W.alpha = canonical_root_of_unity(A, d);
  mr.W.beta = embed(mr.beta_q, A);
  mr.W.f = f;
  mr.formula.a = 2 * e / mr.e1;
  mr.formula.b = mr.e1;
  mr.formula.c = 0;
  while ((f * mr.formula.c) % (2 * e) != mr.e1 % (2 * e)) ++mr.formula.c;
  mr.formula.e_prime = d;
  mr.formula.f_prime = element_order(mr.beta_q);
  mr.brute = invariants(mr.W);
  ensure(mr.brute == mr.formula, "root-system invariants: formula and minimality scan disagree");
  mr.cls = classify(mr.W);
  if (v2(e) >= v2(f))
    mr.predicted = 'A';
  else
    mr.predicted = mr.formula.c % 2 == 0 ? 'B' : 'C';
  return mr;
}

bool matches_vr(const SympModule& M, const MonomialRootSystem& mr) {
  require(M.parts.size() == 1, "matches_vr needs a module built from one R");
  const AdditivePoly& R = M.parts[0].R;
  for (int i = 0; i < R.e(); ++i) require(R.coef(i).is_zero(), "matches_vr needs a monomial R");
  const RSInvariants& inv = mr.brute;
  if (M.dim != inv.a * inv.b) return false;
  if (element_order(M.alpha) != inv.e_prime) return false;
  Fe beta = embed(mr.beta_q, M.ambient);
  u64 count = checked_pow(M.p, (unsigned)M.dim, u64{1} << 20);
  for (u64 idx = 1; idx < count; ++idx) {
    Vec v(M.dim);
    u64 t = idx;
    for (auto& c : v) {
      c = (std::uint32_t)(t % M.p);
      t /= M.p;
    }
    Fe eta = element_of(M, v);
    if (eta.frob((u64)M.f * inv.a) != beta * eta) return false;
  }
  return true;
}

std::string nu_label(const MonomialRootSystem& mr) {
  if (mr.cls.type == 'B' || mr.cls.type == 'C') return "(M(W),0)";
  return "n/a";
}

std::string nu_label_pair(const MonomialRootSystem& x, const MonomialRootSystem& y, bool sum_anisotropic) {
  if (!sum_anisotropic || x.cls.type != 'A' || y.cls.type != 'A') return "n/a";
  if (!x.W.alpha.field()->same(*y.W.alpha.field())) return "n/a";
  return same_orbit(x.W, y.W.alpha, y.W.beta) ? "(M(W),2)" : "n/a";
}

}  // namespace addrep
