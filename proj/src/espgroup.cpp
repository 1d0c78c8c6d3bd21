/*
   Copyright 2026 The addrep Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0
*/
#include "addrep/espgroup.hpp"

#include <set>
#include <tuple>

#include "addrep/errors.hpp"

namespace addrep {

namespace {

constexpr u64 kGroupGuard = 1000000;

using Key = std::tuple<u64, u64, u64>;

Key key(const GroupElement& x) { return {x.a.index(), x.b.index(), x.g.index()}; }

Fe lin_comb(const Field& A, const std::vector<Fe>& basis, u64 idx, unsigned p) {
  Fe x = Fe::zero(A);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    u64 c = idx % p;
    idx /= p;
    if (c) x += basis[i].scale((i64)c);
  }
  return x;
}

bool as_solvable(const FpMat& op, const Fe& c) { return solve(op, c.coords()).has_value(); }

}  // namespace

GroupContext make_group_context(const AdditivePoly& R, std::optional<u64> m) {
  check_r_input(R);
  const Field& B = R.base();
  const unsigned p = B->p();
  const u64 d = m ? d_rm(R, *m) : d_r(R);
  AdditivePoly E = e_r(R);
  unsigned multiple = (unsigned)multiplicative_order(p, d);
  for (int attempt = 0; attempt < 2; ++attempt) {
    KernelData kd = split_kernel(E, multiple);
    GroupContext ctx;
    ctx.R = R;
    ctx.ambient = kd.ambient;
    ctx.emb = kd.emb;
    ctx.Ra = kd.emb ? R.base_change(*kd.emb) : R;
    ctx.d = d;
    ctx.vbasis = kd.elems;
    Fe mone = -Fe::one(kd.ambient);
    ctx.as_op = operator_matrix(AdditivePoly(kd.ambient, {mone, Fe::one(kd.ambient)}));
    u64 count = checked_pow(p, (unsigned)ctx.vbasis.size(), kGroupGuard);
    bool ok = true;
    for (u64 i = 0; i < count && ok; ++i) {
      Fe b = lin_comb(kd.ambient, ctx.vbasis, i, p);
      ok = as_solvable(ctx.as_op, b * ctx.Ra(b));
    }
    if (ok) return ctx;
    // a field of degree M p kills every absolute trace from degree M
    multiple = (unsigned)lcm_u(kd.ambient->n(), multiple) * p;
  }
  ensure(false, "Artin-Schreier roots not found after enlarging by p");
  return {};
}

Fe as_root(const GroupContext& ctx, const Fe& beta) {
  Fe c = beta * ctx.Ra(beta);
  auto y = solve(ctx.as_op, c.coords());
  ensure(y.has_value(), "no Artin-Schreier root in the ambient field");
  // shift by the F_p-constant to get the least solution
  Fe best = Fe::from_coords(ctx.ambient, *y);
  const unsigned p = ctx.ambient->p();
  for (unsigned t = 1; t < p; ++t) {
    Fe cand = Fe::from_coords(ctx.ambient, *y) + Fe::constant(ctx.ambient, t);
    if (cand < best) best = cand;
  }
  return best;
}

GroupElement make_element(const GroupContext& ctx, const Fe& a, const Fe& b, const Fe& g) {
  const Field& A = ctx.ambient;
  require(a.field()->same(*A) && b.field()->same(*A) && g.field()->same(*A),
          "group element coordinates must lie in the ambient field " + A->name());
  require(a.pow(ctx.d).is_one(), "alpha is not in mu_" + std::to_string(ctx.d));
  AdditivePoly E = e_r(ctx.Ra);
  require(E(b).is_zero(), "beta is not a root of E_R");
  require(g.pow(A->p()) - g == b * ctx.Ra(b), "gamma^p - gamma != beta R(beta)");
  return {a, b, g};
}

GroupElement identity_element(const GroupContext& ctx) {
  const Field& A = ctx.ambient;
  return {Fe::one(A), Fe::zero(A), Fe::zero(A)};
}

GroupElement multiply(const GroupContext& ctx, const GroupElement& x, const GroupElement& y) {
  Fe ab = x.a * y.b;
  return {x.a * y.a, x.b + ab, x.g + y.g + f_r_eval(ctx.Ra, x.b, ab)};
}

GroupElement inverse(const GroupContext& ctx, const GroupElement& x) {
  Fe ai = x.a.inv();
  return {ai, -(ai * x.b), -x.g + f_r_eval(ctx.Ra, x.b, x.b)};
}

GroupElement commutator(const GroupContext& ctx, const GroupElement& x, const GroupElement& y) {
  return multiply(ctx, multiply(ctx, x, y), multiply(ctx, inverse(ctx, x), inverse(ctx, y)));
}

GroupElement frobenius_twist(const GroupContext& ctx, const GroupElement& x) {
  const unsigned M = ctx.ambient->n();
  const unsigned f = ctx.R.base()->n();
  const u64 k = (u64)M - f % M;  // x^{q^{-1}} = x^{p^{M - f}}
  return {x.a.frob(k), x.b.frob(k), x.g.frob(k)};
}

std::vector<Fe> enumerate_vr(const GroupContext& ctx) {
  const unsigned p = ctx.ambient->p();
  u64 count = checked_pow(p, (unsigned)ctx.vbasis.size(), kGroupGuard);
  std::vector<Fe> out;
  out.reserve(count);
  for (u64 i = 0; i < count; ++i) out.push_back(lin_comb(ctx.ambient, ctx.vbasis, i, p));
  return out;
}

std::vector<GroupElement> enumerate_h(const GroupContext& ctx) {
  const Field& A = ctx.ambient;
  const unsigned p = A->p();
  checked_pow(p, (unsigned)ctx.vbasis.size() + 1, kGroupGuard);
  std::vector<GroupElement> out;
  for (auto& b : enumerate_vr(ctx)) {
    Fe g0 = as_root(ctx, b);
    for (unsigned t = 0; t < p; ++t) out.push_back({Fe::one(A), b, g0 + Fe::constant(A, t)});
  }
  return out;
}

std::vector<GroupElement> enumerate_q(const GroupContext& ctx) {
  auto mu = roots_of_unity(ctx.ambient, ctx.d);
  auto h = enumerate_h(ctx);
  if ((u64)h.size() * mu.size() > kGroupGuard) throw GuardExceeded("group Q_R has more than 10^6 elements");
  std::vector<GroupElement> out;
  for (auto& a : mu)
    for (auto& x : h) out.push_back({a, x.b, x.g});
  return out;
}

GroupAnalysis analyze(const GroupContext& ctx) {
  const Field& A = ctx.ambient;
  const unsigned p = A->p();
  GroupAnalysis res;
  res.degenerate = ctx.R.e() == 0;
  auto H = enumerate_h(ctx);
  res.order = H.size();

  // test against all of H when small, else against a generating set
  std::vector<GroupElement> gens;
  if (H.size() <= 5000) {
    gens = H;
  } else {
    for (auto& b : ctx.vbasis) gens.push_back({Fe::one(A), b, as_root(ctx, b)});
    gens.push_back({Fe::one(A), Fe::zero(A), Fe::one(A)});
  }
  std::set<Key> center;
  for (auto& x : H) {
    bool central = true;
    for (auto& y : gens) {
      if (!(multiply(ctx, x, y) == multiply(ctx, y, x))) {
        central = false;
        break;
      }
    }
    if (central) center.insert(key(x));
  }
  res.center_order = center.size();
  res.abelian = center.size() == H.size();
  std::set<Key> zfp;
  for (unsigned t = 0; t < p; ++t) zfp.insert(key({Fe::one(A), Fe::zero(A), Fe::constant(A, t)}));
  res.center_is_fp = center == zfp;

  // subgroup generated by all commutators [x, y], y in gens
  std::set<Key> comm;
  std::vector<GroupElement> cl;
  auto add = [&](const GroupElement& z) {
    if (comm.insert(key(z)).second) cl.push_back(z);
  };
  add(identity_element(ctx));
  for (auto& x : H)
    for (auto& y : gens) add(commutator(ctx, x, y));
  for (std::size_t i = 0; i < cl.size(); ++i) {
    std::size_t n = cl.size();
    for (std::size_t j = 0; j < n; ++j) add(multiply(ctx, cl[i], cl[j]));
  }
  res.commutator_order = comm.size();
  res.commutator_is_center = comm == center;
  res.extra_special = !res.abelian && res.commutator_is_center && res.center_order == p;
  return res;
}

}  // namespace addrep
