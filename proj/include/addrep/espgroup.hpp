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

/// Everything needed to do arithmetic in Q_R (or Q_{R,m}) inside one field.
struct GroupContext {
  AdditivePoly R;   // over F_q
  AdditivePoly Ra;  // R over the ambient field
  Field ambient;
  std::optional<Embedding> emb;
  u64 d = 1;                // order bound for alpha
  std::vector<Fe> vbasis;   // F_p-basis of V_R
  FpMat as_op;              // matrix of y -> y^p - y on the ambient field
};

/// Ambient field holding mu_d, V_R and every Artin-Schreier root
/// gamma^p - gamma = beta R(beta). Without m the bound is d_R (group Q_R).
GroupContext make_group_context(const AdditivePoly& R, std::optional<u64> m = std::nullopt);

struct GroupElement {
  Fe a, b, g;
  bool operator==(const GroupElement& o) const { return a == o.a && b == o.b && g == o.g; }
};

/// Validates alpha^d = 1, E_R(beta) = 0, gamma^p - gamma = beta R(beta).
GroupElement make_element(const GroupContext& ctx, const Fe& a, const Fe& b, const Fe& g);
GroupElement identity_element(const GroupContext& ctx);
/// Least solution of y^p - y = beta R(beta) in the ambient field.
Fe as_root(const GroupContext& ctx, const Fe& beta);

GroupElement multiply(const GroupContext& ctx, const GroupElement& x, const GroupElement& y);
GroupElement inverse(const GroupContext& ctx, const GroupElement& x);
GroupElement commutator(const GroupContext& ctx, const GroupElement& x, const GroupElement& y);
/// The generator of the Z-action: inverse q-Frobenius on all coordinates.
GroupElement frobenius_twist(const GroupContext& ctx, const GroupElement& x);

/// All p^{2e} elements of V_R, in coordinate order of vbasis.
std::vector<Fe> enumerate_vr(const GroupContext& ctx);
/// H_R, all p^{2e+1} elements. Guard p^{2e+1} <= 10^6.
std::vector<GroupElement> enumerate_h(const GroupContext& ctx);
/// Q_R (or Q_{R,m}), alpha over mu_d. Same guard times d.
std::vector<GroupElement> enumerate_q(const GroupContext& ctx);

struct GroupAnalysis {
  u64 order = 0;
  u64 center_order = 0;
  u64 commutator_order = 0;
  bool center_is_fp = false;        // Z = {(1, 0, c) : c in F_p}
  bool commutator_is_center = false;
  bool abelian = false;
  bool extra_special = false;
  bool degenerate = false;          // e = 0
};

GroupAnalysis analyze(const GroupContext& ctx);

}  // namespace addrep
