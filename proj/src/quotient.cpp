/*
   Copyright 2026 The addrep Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0
*/
#include "addrep/quotient.hpp"

#include "addrep/errors.hpp"

namespace addrep {

namespace {

SparsePoly x_times(const AdditivePoly& R) {
  return SparsePoly::monomial(Fe::one(R.base()), 1) * R.to_sparse();
}

}  // namespace

IsotropicDatum make_datum(const AdditivePoly& R, const Fe& beta) {
  const Field& F = R.base();
  require(F->p() != 2, "the quotient construction needs p != 2");
  require(R.e() >= 1, "the quotient construction needs e >= 1");
  require(!beta.is_zero(), "quotient datum: beta must be nonzero");
  require(evaluate(e_r(R), beta).is_zero(), "quotient datum: E_R(beta) != 0");
  Fe gamma = f_r_eval(R, beta, beta) / Fe::constant(F, 2);
  ensure(gamma.pow(F->p()) - gamma == beta * R(beta), "gamma^p - gamma != beta R(beta)");
  return {beta, gamma};
}

AdditivePoly f_r_at(const AdditivePoly& R, const Fe& beta) {
  const Field& F = R.base();
  std::vector<Fe> c(std::max(1, R.e()), Fe::zero(F));
  BivariateTable tab = f_r(R);
  for (auto& [ij, v] : tab.terms()) {
    if (ij.first >= c.size()) c.resize(ij.first + 1, Fe::zero(F));
    c[ij.first] += v * beta.frob(ij.second);
  }
  return AdditivePoly(F, c);
}

QuotientStep single_quotient(const AdditivePoly& R, const IsotropicDatum& datum) {
  const Field& F = R.base();
  const unsigned p = F->p();
  const Fe& b = datum.beta;
  const Fe& g = datum.gamma;
  require(p != 2 && R.e() >= 1, "single_quotient needs p != 2 and e >= 1");
  ensure(g == f_r_eval(R, b, b) / Fe::constant(F, 2), "datum gamma is not f_R(beta, beta)/2");

  QuotientStep st;
  st.datum = datum;
  Fe bi = b.inv();
  Fe bmp = bi.pow(p);  // beta^{-p}
  AdditivePoly fxb = f_r_at(R, b);
  // P = beta^{-p}(-beta R + beta^{1-p} R(beta) x^p + gamma beta^{-p} x^p + gamma beta^{-1} x - f_R(x, beta))
  AdditivePoly lin(F, {g * bi, b * bmp * R(b) + g * bmp});
  st.P = (R.scale(-b) + lin - fxb).scale(bmp);
  st.u = AdditivePoly(F, {-b.pow(p - 1), Fe::one(F)});
  auto [P1, rem] = right_divmod(st.P, st.u);
  ensure(rem.is_zero(), "P is not divisible by u = x^p - beta^{p-1} x");
  ensure(P1.e() == R.e() - 1, "deg P1 != p^{e-1}");
  st.P1 = P1;
  ensure(st.P(b).is_zero(), "P(beta) != 0");

  // Delta0 = -gamma beta^{-2} x^2 + beta^{-1} x f_R(x, beta)
  st.delta0 = SparsePoly::monomial(-(g * bi * bi), 2) + x_times(fxb).scale(bi);
  SparsePoly us = st.u.to_sparse();
  SparsePoly rhs = us * compose(P1, st.u).to_sparse() + st.delta0.frob_power() - st.delta0;
  ensure(x_times(R) == rhs, "x R(x) != u P1(u) + Delta0^p - Delta0");
  ensure(st.delta0.coef(0).is_zero(), "Delta0(0) != 0");
  return st;
}

IsotropicDatum push_element(const AdditivePoly& R, const QuotientStep& step, const Fe& beta2) {
  const Fe& b = step.datum.beta;
  Fe w = f_r_eval(R, b, beta2) - f_r_eval(R, beta2, b);
  require(w.is_zero(), "push_element: omega(beta, beta') != 0");
  IsotropicDatum d2 = make_datum(R, beta2);
  Fe nb = step.u(beta2);
  Fe ng = d2.gamma - step.delta0.eval(beta2);
  ensure(evaluate(e_r(step.P1), nb).is_zero(), "E_{P1}(u(beta')) != 0");
  ensure(f_r_eval(step.P1, nb, nb) == ng.scale(2), "f_{P1}(u(b'), u(b')) != 2(gamma' - Delta0(b'))");
  return {nb, ng};
}

InductionData iterated_quotient(const SympModule& M, const Submodule& U) {
  require(M.p != 2, "iterated_quotient needs p != 2");
  require(M.parts.size() == 1, "iterated_quotient needs a module built from one R");
  require(U.dim() > 0, "iterated_quotient: U must be nonzero");
  Submodule V = make_submodule(M, U.basis);
  require(V.isotropic, "iterated_quotient: U is not totally isotropic");
  require(V.t_stable && V.s_stable, "iterated_quotient: U is not an H-submodule");
  const SympPart& part = M.parts[0];
  const Field& A = M.ambient;
  const Field& B = part.R.base();

  std::vector<Fe> betas;
  for (std::size_t i = 0; i < V.basis.rows(); ++i) betas.push_back(element_of(M, V.basis.row(i)));

  AdditivePoly cur = part.Ra;
  AdditivePoly r = AdditivePoly::identity(A);
  SparsePoly delta(A);
  for (std::size_t i = 0; i < betas.size(); ++i) {
    IsotropicDatum dat = make_datum(cur, betas[i]);
    QuotientStep st = single_quotient(cur, dat);
    for (std::size_t j = i + 1; j < betas.size(); ++j) {
      betas[j] = push_element(cur, st, betas[j]).beta;
      ensure(!betas[j].is_zero(), "pushed basis vector vanished");
    }
    delta = delta + sparse_compose(st.delta0, r.to_sparse());
    r = compose(st.u, r);
    cur = st.P1;
  }

  InductionData out;
  out.e_prime = (unsigned)cur.e();
  out.fprime_degree = checked_pow(M.p, (unsigned)U.dim());
  out.delta_matches_gamma = true;
  for (std::size_t idx = 0; idx < V.basis.rows(); ++idx) {
    Fe b = element_of(M, V.basis.row(idx));
    out.delta_matches_gamma = out.delta_matches_gamma && delta.eval(b) == make_datum(part.Ra, b).gamma;
  }
  if (A->same(*B)) {
    out.r = r;
    out.R1 = cur;
    out.delta = delta;
  } else {
    Embedding emb(B, A);
    try {
      out.r = r.descend(emb);
      out.R1 = cur.descend(emb);
      out.delta = delta.map_coeffs(B, [&](const Fe& c) { return emb.descend(c); });
    } catch (const ValidationError& ex) {
      ensure(false, std::string("quotient data not rational over F_q: ") + ex.what());
    }
  }
  MorphismCheck chk = verify_morphism(part.R, out.R1, out.r, out.delta, part.m);
  std::string why;
  for (auto& s : chk.reasons) why += s + "; ";
  ensure(chk.ok, "iterated_quotient produced an invalid morphism: " + why);
  return out;
}

MorphismCheck verify_morphism(const AdditivePoly& R, const AdditivePoly& R1, const AdditivePoly& r,
                              const SparsePoly& delta, u64 m) {
  MorphismCheck res;
  auto fail = [&](const std::string& s) {
    res.ok = false;
    res.reasons.push_back(s);
  };
  const Field& F = R.base();
  if (!R1.base() || !R1.base()->same(*F) || !r.base() || !r.base()->same(*F) ||
      (delta.field() && !delta.field()->same(*F))) {
    fail("coefficients not over the base field");
    return res;
  }
  if (r.is_zero() || r.e() < 1) fail("r is trivial (degree 1)");
  if (r.is_zero() || !is_reduced(r)) fail("r is not reduced");
  if (R1.is_zero()) {
    fail("R1 is zero");
    return res;
  }
  if (r.is_zero()) return res;
  if (R.e() != r.e() + R1.e()) fail("deg r * deg R1 != deg R");
  SparsePoly lhs = x_times(R);
  SparsePoly rs = r.to_sparse();
  SparsePoly rhs = rs * compose(R1, r).to_sparse() + delta.frob_power() - delta;
  if (!(lhs == rhs)) fail("x R(x) != r R1(r) + Delta^p - Delta");
  if (!delta.coef(0).is_zero()) fail("Delta(0) != 0");
  u64 d = d_rm(R, m);
  if (d_r(R1) % d != 0) fail("d_{R,m} does not divide d_{R1}");
  if (!mu_scaling(r, d)) fail("r(alpha x) != alpha r(x) on mu_{d_{R,m}}");
  if (!right_divmod(e_r(R), compose(e_r(R1), r)).second.is_zero()) fail("E_{R1}(r(x)) does not divide E_R(x)");
  return res;
}

}  // namespace addrep
