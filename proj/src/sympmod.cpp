/*
   Copyright 2026 The addrep Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0
*/
#include "addrep/sympmod.hpp"

#include <algorithm>

#include "addrep/errors.hpp"

namespace addrep {

namespace {

constexpr u64 kScanGuard = u64{1} << 24;

u64 sigma_order(const FpMat& S, u64 q_mod_d, u64 d, u64 bound) {
  FpMat I = FpMat::identity(S.p(), S.rows());
  FpMat P = S;
  u64 qr = q_mod_d % d;
  for (u64 r = 1; r <= bound; ++r) {
    if (P == I && qr == 1 % d) return r;
    P = P * S;
    qr = qr * (q_mod_d % d) % d;
  }
  ensure(false, "order of sigma not found");
  return 0;
}

u64 q_mod(unsigned p, unsigned f, u64 d) { return powmod(p, f, d); }

FpMat block_diag(const FpMat& A, const FpMat& B) {
  FpMat C(A.p(), A.rows() + B.rows(), A.cols() + B.cols());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) C.at(i, j) = A.at(i, j);
  for (std::size_t i = 0; i < B.rows(); ++i)
    for (std::size_t j = 0; j < B.cols(); ++j) C.at(A.rows() + i, A.cols() + j) = B.at(i, j);
  return C;
}

bool lex_less(const FpMat& a, const FpMat& b) {
  if (a.rows() != b.rows()) return a.rows() < b.rows();
  auto ra = a.row_list(), rb = b.row_list();
  return ra < rb;
}

// Sanity checks shared by build, direct_sum and restrict_sigma.
void check_module(const SympModule& M) {
  const std::size_t n = M.dim;
  if (n == 0) return;
  const unsigned p = M.p;
  for (std::size_t i = 0; i < n; ++i) {
    ensure(M.gram.at(i, i) == 0, "gram has a nonzero diagonal entry");
    for (std::size_t j = 0; j < n; ++j)
      ensure((M.gram.at(i, j) + M.gram.at(j, i)) % p == 0, "gram is not antisymmetric");
  }
  ensure(rank(M.gram) == n, "omega_R is degenerate");
  auto Si = inverse(M.S);
  ensure(inverse(M.T).has_value() && Si.has_value(), "tau or sigma is not invertible");
  ensure(M.S * M.T * *Si == M.T.pow(q_mod(p, M.f, M.d)), "sigma tau sigma^-1 != tau^q");
  ensure(M.T.transpose() * M.gram * M.T == M.gram, "tau does not preserve omega");
  ensure(M.S.transpose() * M.gram * M.S == M.gram, "sigma does not preserve omega");
}

}  // namespace

SympModule build(const AdditivePoly& R, u64 m, unsigned multiple) {
  check_r_input(R);
  const Field& B = R.base();
  const unsigned p = B->p();
  SympModule M;
  M.p = p;
  M.f = B->n();
  M.d = d_rm(R, m);
  AdditivePoly E = e_r(R);
  unsigned mult = (unsigned)lcm_u(multiplicative_order(p, M.d), std::max(1u, multiple));
  KernelData kd = split_kernel(E, mult);
  M.ambient = kd.ambient;
  M.alpha = canonical_root_of_unity(kd.ambient, M.d);
  SympPart part;
  part.R = R;
  part.Ra = kd.emb ? R.base_change(*kd.emb) : R;
  part.m = m;
  part.elems = kd.elems;
  M.parts.push_back(part);
  M.dim = kd.elems.size();
  ensure(M.dim == 2 * (std::size_t)R.e(), "dim V_R != 2e");
  const std::size_t n = M.dim;
  M.gram = FpMat(p, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Fe w = f_r_eval(part.Ra, kd.elems[i], kd.elems[j]) - f_r_eval(part.Ra, kd.elems[j], kd.elems[i]);
      for (std::size_t k = 1; k < w.coords().size(); ++k)
        ensure(w.coords()[k] == 0, "omega_R value outside F_p");
      M.gram.at(i, j) = w.coords()[0];
    }
  std::vector<Vec> tc, sc;
  for (std::size_t j = 0; j < n; ++j) {
    tc.push_back(coords_of(M, M.alpha * kd.elems[j]));
    sc.push_back(coords_of(M, kd.elems[j].frob(M.f)));
  }
  M.T = FpMat::from_cols(p, tc, n);
  M.S = FpMat::from_cols(p, sc, n);
  M.r = sigma_order(M.S, q_mod(p, M.f, M.d), M.d, (u64)kd.ambient->n() * M.d);
  check_module(M);
  return M;
}

std::uint32_t omega(const SympModule& M, const Vec& v, const Vec& w) {
  require(v.size() == M.dim && w.size() == M.dim, "omega: vector length differs from dim V_R");
  return dot(v, M.gram.apply(w), M.p);
}

Fe element_of(const SympModule& M, const Vec& v) {
  require(M.parts.size() == 1, "element_of: direct sums have no single field realization");
  Fe x = Fe::zero(M.ambient);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i]) x += M.parts[0].elems[i].scale(v[i]);
  return x;
}

Vec coords_of(const SympModule& M, const Fe& x) {
  require(M.parts.size() == 1, "coords_of: direct sums have no single field realization");
  std::vector<Vec> rows;
  for (auto& b : M.parts[0].elems) rows.push_back(b.coords());
  Rref basis = rref(FpMat::from_rows(M.p, rows, M.ambient->n()));
  auto c = coords_in(basis, x.coords());
  require(c.has_value(), "element is not in V_R");
  return *c;
}

bool is_isotropic(const SympModule& M, const FpMat& rows) {
  for (std::size_t i = 0; i < rows.rows(); ++i)
    for (std::size_t j = i + 1; j < rows.rows(); ++j)
      if (omega(M, rows.row(i), rows.row(j)) != 0) return false;
  return true;
}

Submodule make_submodule(const SympModule& M, const FpMat& rows) {
  Submodule W;
  W.basis = row_space(rows);
  Rref R = rref(W.basis);
  W.t_stable = W.s_stable = true;
  for (std::size_t i = 0; i < W.basis.rows(); ++i) {
    Vec v = W.basis.row(i);
    W.t_stable = W.t_stable && coords_in(R, M.T.apply(v)).has_value();
    W.s_stable = W.s_stable && coords_in(R, M.S.apply(v)).has_value();
  }
  W.isotropic = is_isotropic(M, W.basis);
  return W;
}

Anisotropy completely_anisotropic(const SympModule& M) {
  Anisotropy res;
  const std::size_t n = M.dim;
  if (n == 0) return res;
  const unsigned p = M.p;
  u64 count = checked_pow(p, (unsigned)n, kScanGuard);
  std::optional<FpMat> best;
  for (u64 idx = 1; idx < count; ++idx) {
    Vec v(n);
    u64 t = idx;
    for (std::size_t i = n; i-- > 0;) {
      v[i] = (std::uint32_t)(t % p);
      t /= p;
    }
    auto first = std::find_if(v.begin(), v.end(), [](auto c) { return c != 0; });
    if (*first != 1) continue;
    FpMat W = invariant_closure({&M.T, &M.S}, FpMat::from_rows(p, {v}, n));
    if (2 * W.rows() > n) continue;
    if (!is_isotropic(M, W)) continue;
    if (!best || lex_less(W, *best)) best = W;
  }
  if (best) {
    res.anisotropic = false;
    res.witness = make_submodule(M, *best);
  }
  return res;
}

Anisotropy completely_anisotropic_exhaustive(const SympModule& M) {
  Anisotropy res;
  const std::size_t n = M.dim;
  u64 total = 0;
  for (std::size_t k = 1; 2 * k <= n; ++k) total += gaussian_binomial(M.p, n, k);
  if (total > 2000000) throw GuardExceeded("subspace enumeration exceeds 2*10^6 subspaces");
  for (std::size_t k = 1; 2 * k <= n; ++k) {
    std::optional<FpMat> best;
    for_each_subspace(M.p, n, k, [&](const FpMat& W) {
      Submodule S = make_submodule(M, W);
      if (S.t_stable && S.s_stable && S.isotropic && (!best || lex_less(S.basis, *best))) best = S.basis;
      return true;
    });
    if (best) {
      res.anisotropic = false;
      res.witness = make_submodule(M, *best);
      return res;
    }
  }
  return res;
}

namespace {

std::optional<Decomposition> check_candidate(const SympModule& M, const AdditivePoly& E, const AdditivePoly& f2) {
  auto [f1, rem] = right_divmod(E, f2);
  if (!rem.is_zero()) return std::nullopt;
  std::optional<Embedding> emb;
  AdditivePoly f2a = f2;
  if (!M.ambient->same(*f2.base())) {
    emb.emplace(f2.base(), M.ambient);
    f2a = f2.base_change(*emb);
  }
  FpMat K = kernel(operator_matrix(f2a));
  ensure(K.rows() == (std::size_t)f2.e(), "right factor of E_R does not split in the ambient field");
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < K.rows(); ++i) rows.push_back(coords_of(M, Fe::from_coords(M.ambient, K.row(i))));
  Submodule W = make_submodule(M, FpMat::from_rows(M.p, rows, M.dim));
  if (!W.isotropic) return std::nullopt;
  ensure(W.t_stable && W.s_stable, "kernel of a rational scaled factor is not H-stable");
  return Decomposition{f1, f2, W, false};
}

}  // namespace

std::optional<Decomposition> decomposition_route(const SympModule& M, u64 budget) {
  require(M.parts.size() == 1, "decomposition_route needs a module built from one R");
  if (M.dim == 0) return std::nullopt;
  const AdditivePoly& R = M.parts[0].R;
  const Field& B = R.base();
  const unsigned p = M.p;
  const unsigned e = (unsigned)R.e();
  AdditivePoly E = e_r(R);
  const u64 d = M.d;

  // candidate count over all degrees
  u64 total = 0;
  bool over = false;
  for (unsigned s = 1; s <= e && !over; ++s) {
    if ((checked_pow(p, s) - 1) % d != 0) continue;
    u64 c = 1;
    for (unsigned i = 0; i < s && !over; ++i) {
      if ((checked_pow(p, i) - 1) % d != 0) continue;
      u64 choices = i == 0 ? B->order() - 1 : B->order();
      if (c > budget / choices) over = true;
      c *= choices;
    }
    total += c;
    over = over || total > budget;
  }

  if (!over) {
    for (unsigned s = 1; s <= e; ++s) {
      if ((checked_pow(p, s) - 1) % d != 0) continue;
      std::vector<unsigned> free;
      for (unsigned i = 0; i < s; ++i)
        if ((checked_pow(p, i) - 1) % d == 0) free.push_back(i);
      // odometer over coefficients, c_0 != 0; free always contains 0
      std::vector<u64> idx(free.size(), 0);
      idx[0] = 1;
      while (true) {
        std::vector<Fe> c(s + 1, Fe::zero(B));
        c[s] = Fe::one(B);
        for (std::size_t k = 0; k < free.size(); ++k) c[free[k]] = Fe::from_index(B, idx[k]);
        if (auto dec = check_candidate(M, E, AdditivePoly(B, c))) return dec;
        std::size_t k = free.size();
        bool done = true;
        while (k-- > 0) {
          if (++idx[k] < B->order()) {
            done = false;
            break;
          }
          idx[k] = k == 0 ? 1 : 0;
        }
        if (done) break;
      }
    }
    return std::nullopt;
  }

  // fallback: kernel polynomials of the T,S-stable isotropic subspaces
  const std::size_t n = M.dim;
  for (std::size_t k = 1; 2 * k <= n; ++k) {
    std::optional<Decomposition> best;
    for_each_subspace(p, n, k, [&](const FpMat& Wm) {
      Submodule W = make_submodule(M, Wm);
      if (!(W.t_stable && W.s_stable && W.isotropic)) return true;
      std::vector<Fe> basis;
      for (std::size_t i = 0; i < W.basis.rows(); ++i) basis.push_back(element_of(M, W.basis.row(i)));
      AdditivePoly f2 = kernel_poly_from_basis(basis);
      if (!M.ambient->same(*B)) f2 = f2.descend(Embedding(B, M.ambient));
      ensure(mu_scaling(f2, d), "kernel polynomial of a tau-stable subspace fails mu_d scaling");
      auto [f1, rem] = right_divmod(E, f2);
      ensure(rem.is_zero(), "kernel polynomial of a subspace of V_R does not divide E_R");
      if (!best || lex_less(W.basis, best->W.basis)) best = Decomposition{f1, f2, W, true};
      return true;
    });
    if (best) return best;
  }
  return std::nullopt;
}

Submodule perp(const SympModule& M, const FpMat& W) {
  require(W.cols() == M.dim, "perp: subspace has the wrong ambient dimension");
  if (W.rows() == 0) return make_submodule(M, FpMat::identity(M.p, M.dim));
  FpMat A = W * M.gram.transpose();
  return make_submodule(M, kernel(A));
}

SympModule direct_sum(const SympModule& A, const SympModule& B) {
  if (A.dim == 0) return B;
  if (B.dim == 0) return A;
  require(A.p == B.p && A.f == B.f, "direct_sum: summands over different fields");
  require(A.d == B.d, "direct_sum: summands have different d (no common tau)");
  require(A.ambient->same(*B.ambient),
          "direct_sum: summands realized in different ambient fields " + A.ambient->name() + " and " +
              B.ambient->name());
  SympModule M;
  M.p = A.p;
  M.f = A.f;
  M.d = A.d;
  M.ambient = A.ambient;
  M.alpha = A.alpha;
  M.parts = A.parts;
  M.parts.insert(M.parts.end(), B.parts.begin(), B.parts.end());
  M.dim = A.dim + B.dim;
  M.gram = block_diag(A.gram, B.gram);
  M.T = block_diag(A.T, B.T);
  M.S = block_diag(A.S, B.S);
  M.r = sigma_order(M.S, q_mod(M.p, M.f, M.d), M.d, lcm_u(A.r, B.r) * M.d);
  check_module(M);
  return M;
}

SympModule restrict_sigma(const SympModule& M, unsigned t) {
  require(t >= 1, "restrict_sigma: t must be positive");
  SympModule N = M;
  N.f = M.f * t;
  if (M.dim == 0) return N;
  N.S = M.S.pow(t);
  N.r = sigma_order(N.S, q_mod(N.p, N.f, N.d), N.d, M.r * N.d);
  check_module(N);
  return N;
}

unsigned minimal_imprimitive_unramified_degree(const SympModule& M) {
  require(M.d <= 2, "minimal_imprimitive_unramified_degree needs d_{R,m} <= 2, got " + std::to_string(M.d));
  require(M.dim > 0, "minimal_imprimitive_unramified_degree: zero module is never imprimitive");
  for (unsigned t = 1; t <= M.r; ++t)
    if (!completely_anisotropic(restrict_sigma(M, t)).anisotropic) return t;
  ensure(false, "no isotropic line after sigma^r = 1");
  return 0;
}

}  // namespace addrep
