/*
   Copyright 2026 The addrep Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0
*/
#pragma once

#include <complex>
#include <string>
#include <vector>

#include "addrep/addpoly.hpp"
#include "addrep/cyclotomic.hpp"

namespace addrep {

/// Largest field enumerated by the counting loops.
inline constexpr u64 kCountLimit = u64{1} << 28;

/// n[t] = #{x in F_{q^k} : Tr(x R(x)) = t}, t in F_p.
std::vector<u64> trace_histogram(const AdditivePoly& R, unsigned k, unsigned threads = 1);

/// Affine points of a^p - a = x R(x) over F_{q^k}.
i64 point_count(const AdditivePoly& R, unsigned k, unsigned threads = 1);
/// Same count from the image multiset of a -> a^p - a; no traces involved.
/// Meant for small fields.
i64 point_count_direct(const AdditivePoly& R, unsigned k);

/// (p - 1) p^e / 2.
unsigned genus(const AdditivePoly& R);

/// P(T) from affine counts N_1..N_g by Newton's identities and the
/// functional equation. Coefficients c_0..c_{2g}.
std::vector<i64> zeta_from_counts(const std::vector<i64>& N, u64 q, unsigned g);
/// Power sums q^k - N_k implied by P, k = 1..K.
std::vector<i64> counts_from_zeta(const std::vector<i64>& P, u64 q, unsigned K);

using CycloPoly = std::vector<Cyclo>;

/// L(psi_c, T) from exact character sums over F_{q^k}, k <= p^e.
CycloPoly psi_l_polynomial(const AdditivePoly& R, unsigned c, unsigned threads = 1);
/// All of them, c = 1..p-1, sharing the histograms.
std::vector<CycloPoly> psi_l_polynomials(const AdditivePoly& R, unsigned threads = 1);
/// Product of the L-polynomials; must land in Z[T].
std::vector<i64> psi_product(const std::vector<CycloPoly>& Ls);

/// Exact P(T): from counts when q^g fits the guard, else from the
/// psi-factorization. Both are run and compared when both fit.
std::vector<i64> zeta_numerator(const AdditivePoly& R, unsigned threads = 1);

bool functional_equation_holds(const std::vector<i64>& P, u64 q);

struct WeilCheck {
  bool ok = false;
  double max_rel_dev = 0;  // max | |lambda|^2 - q | / q
  std::vector<std::complex<double>> roots;  // distinct reciprocal roots
};
WeilCheck check_weil(const std::vector<i64>& P, u64 q, double tol = 1e-9);

/// Kronecker test: the polynomial with roots lambda^2 / q is integral and a
/// product of cyclotomic polynomials.
bool check_supersingular(const std::vector<i64>& P, u64 q);

struct CurveSummary {
  u64 q = 0;
  unsigned genus = 0;
  std::vector<i64> counts;  // N_1..N_K
  std::vector<i64> zeta;
  std::string zeta_route;   // "counts", "psi" or "counts+psi"
  std::vector<unsigned> psi_degrees;
  bool functional_equation = false;
  WeilCheck weil;
  bool supersingular = false;
};

/// max_k = 0 reports the counts the zeta computation used.
CurveSummary curve_summary(const AdditivePoly& R, unsigned max_k = 0, unsigned threads = 1);

}  // namespace addrep
