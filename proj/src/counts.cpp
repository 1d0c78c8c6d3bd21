/*
   Copyright 2026 The addrep Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0
*/
#include "addrep/counts.hpp"

#include <gmpxx.h>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <thread>
#include <unordered_map>

#include "addrep/errors.hpp"

namespace addrep {

namespace {

using ZPoly = std::vector<mpz_class>;  // low to high
using QPoly = std::vector<mpq_class>;

u64 field_size(const AdditivePoly& R, unsigned k) {
  return checked_pow(R.base()->p(), R.base()->n() * k, kCountLimit + 1);
}

void guard_count(const AdditivePoly& R, unsigned k) {
  u64 s = field_size(R, k);
  if (s > kCountLimit)
    throw GuardExceeded("point count over a field of size " + std::to_string(s) + " exceeds 2^28");
}

/// Q(x) = Tr(x R(x)) as a quadratic form on F_p^N: diagonal q_i and the
/// polar matrix B(e_i, e_j).
struct TraceForm {
  unsigned p = 0, N = 0;
  std::vector<unsigned> diag;
  std::vector<unsigned> polar;  // N x N, row-major
};

unsigned trace_fp(const Fe& z) {
  Fe t = norm_trace(z, 1).second;
  return (unsigned)t.coords()[0];
}

TraceForm trace_form(const AdditivePoly& R, unsigned k) {
  Field K = field_create(R.base()->p(), R.base()->n() * k);
  AdditivePoly RK = k == 1 ? R : R.base_change(Embedding(R.base(), K));
  if (k == 1) K = R.base();
  TraceForm T;
  T.p = K->p();
  T.N = K->n();
  std::vector<Fe> e, Re;
  for (unsigned i = 0; i < T.N; ++i) {
    std::vector<Coord> c(T.N, 0);
    c[i] = 1;
    e.push_back(Fe::from_coords(K, c));
    Re.push_back(RK(e.back()));
  }
  T.diag.resize(T.N);
  T.polar.resize(T.N * T.N);
  for (unsigned i = 0; i < T.N; ++i) {
    T.diag[i] = trace_fp(e[i] * Re[i]);
    for (unsigned j = 0; j < T.N; ++j) T.polar[i * T.N + j] = trace_fp(e[i] * Re[j] + e[j] * Re[i]);
  }
  return T;
}

/// Histogram over all x whose top `fixed` coordinates equal `top`.
void histogram_block(const TraceForm& T, unsigned fixed, u64 top, std::vector<u64>& hist) {
  const unsigned p = T.p, N = T.N, low = N - fixed;
  std::vector<unsigned> x(N, 0);
  for (unsigned i = low; i < N; ++i) {
    x[i] = (unsigned)(top % p);
    top /= p;
  }
  // Q and the linear forms L_j = B(x, e_j) at the start vector
  u64 Q = 0;
  std::vector<unsigned> L(N, 0);
  for (unsigned i = low; i < N; ++i) {
    if (!x[i]) continue;
    Q += (u64)T.diag[i] * x[i] * x[i];
    for (unsigned j = i + 1; j < N; ++j) Q += (u64)T.polar[i * N + j] * x[i] * x[j];
    for (unsigned j = 0; j < N; ++j) L[j] = (unsigned)((L[j] + (u64)x[i] * T.polar[i * N + j]) % p);
  }
  unsigned q = (unsigned)(Q % p);
  if (low == 0) {
    ++hist[q];
    return;
  }
  // coordinate 0 is swept in closed form: Q(x + t e_0) = Q + t L_0 + t^2 q_0
  const unsigned q0 = T.diag[0];
  for (;;) {
    for (unsigned t = 0; t < p; ++t) ++hist[(q + (u64)t * L[0] + (u64)t * t * q0) % p];
    // odometer on coordinates 1..low-1; each step adds one basis vector
    unsigned i = 1;
    for (; i < low; ++i) {
      q = (unsigned)((q + T.diag[i] + L[i]) % p);
      const unsigned* row = &T.polar[i * N];
      for (unsigned j = 0; j < N; ++j) {
        unsigned v = L[j] + row[j];
        L[j] = v >= p ? v - p : v;
      }
      if (++x[i] < p) break;
      x[i] = 0;
    }
    if (i == low) break;
  }
}

std::vector<u64> histogram(const TraceForm& T, unsigned threads) {
  const unsigned p = T.p;
  unsigned fixed = 0;
  u64 blocks = 1;
  if (threads > 1)
    while (fixed + 2 < T.N && blocks < 8 * (u64)threads) {
      ++fixed;
      blocks *= p;
    }
  std::vector<std::vector<u64>> part(blocks, std::vector<u64>(p, 0));
  if (threads <= 1 || blocks == 1) {
    for (u64 b = 0; b < blocks; ++b) histogram_block(T, fixed, b, part[b]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w)
      pool.emplace_back([&, w] {
        for (u64 b = w; b < blocks; b += threads) histogram_block(T, fixed, b, part[b]);
      });
    for (auto& th : pool) th.join();
  }
  std::vector<u64> hist(p, 0);
  for (auto& h : part)
    for (unsigned t = 0; t < p; ++t) hist[t] += h[t];
  return hist;
}

i64 to_i64(const mpz_class& z) {
  if (!z.fits_slong_p()) throw GuardExceeded("zeta coefficient exceeds 64 bits");
  return z.get_si();
}

mpz_class zpow(u64 q, unsigned k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), q, k);
  return r;
}

void trim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

void trim(QPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

/// Remainder of a by b over Q.
QPoly qrem(QPoly a, const QPoly& b) {
  trim(a);
  while (a.size() >= b.size()) {
    mpq_class c = a.back() / b.back();
    std::size_t s = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[s + i] -= c * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

QPoly qdiv(QPoly a, const QPoly& b) {
  trim(a);
  QPoly quo(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  while (a.size() >= b.size()) {
    mpq_class c = a.back() / b.back();
    std::size_t s = a.size() - b.size();
    quo[s] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[s + i] -= c * b[i];
    a.pop_back();
  }
  return quo;
}

QPoly squarefree_part(const QPoly& f) {
  QPoly df;
  for (std::size_t i = 1; i < f.size(); ++i) df.push_back(f[i] * (unsigned long)i);
  trim(df);
  if (df.empty()) return f;
  QPoly a = f, b = df;
  while (!b.empty()) {
    QPoly r = qrem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return qdiv(f, a);
}

/// Reciprocal-root polynomial T^{2g} P(1/T), monic when P(0) = 1.
ZPoly reversed(const std::vector<i64>& P) {
  ZPoly f;
  for (auto it = P.rbegin(); it != P.rend(); ++it) f.emplace_back((long)*it);
  trim(f);
  return f;
}

/// Exact division by a monic divisor; false if the remainder is nonzero.
bool zdiv_monic(ZPoly& a, const ZPoly& b) {
  if (a.size() < b.size()) return false;
  ZPoly r = a, quo(a.size() - b.size() + 1);
  for (std::size_t s = quo.size(); s-- > 0;) {
    mpz_class c = r[s + b.size() - 1];
    quo[s] = c;
    for (std::size_t i = 0; i < b.size(); ++i) r[s + i] -= c * b[i];
  }
  for (auto& c : r)
    if (c != 0) return false;
  a = std::move(quo);
  return true;
}

ZPoly cyclotomic_poly(u64 m, std::vector<ZPoly>& cache) {
  if (cache.size() > m && !cache[m].empty()) return cache[m];
  ZPoly f(m + 1, 0);
  f[0] = -1;
  f[m] = 1;
  for (u64 d = 1; d < m; ++d)
    if (m % d == 0) {
      bool ok = zdiv_monic(f, cyclotomic_poly(d, cache));
      ensure(ok, "cyclotomic division");
    }
  if (cache.size() <= m) cache.resize(m + 1);
  cache[m] = f;
  return f;
}

u64 euler_phi(u64 m) {
  u64 r = m;
  for (auto [l, k] : factor_u(m)) r = r / l * (l - 1);
  return r;
}

std::vector<std::vector<u64>> histograms(const AdditivePoly& R, unsigned K, unsigned threads) {
  std::vector<std::vector<u64>> h;
  for (unsigned k = 1; k <= K; ++k) {
    guard_count(R, k);
    h.push_back(histogram(trace_form(R, k), threads));
  }
  return h;
}

CycloPoly l_from_histograms(const std::vector<std::vector<u64>>& h, unsigned p, unsigned c, unsigned D) {
  // S_k(c) = sum_t n_t zeta^{ct}; i l_i = sum_{j<=i} S_j l_{i-j}
  std::vector<Cyclo> S;
  for (unsigned k = 1; k <= D; ++k) {
    Cyclo s(p);
    for (unsigned t = 0; t < p; ++t)
      if (h[k - 1][t]) s = s + Cyclo::zeta(p, (u64)c * t).scale((i64)h[k - 1][t]);
    S.push_back(s);
  }
  CycloPoly L{Cyclo::integer(p, 1)};
  for (unsigned i = 1; i <= D; ++i) {
    Cyclo acc(p);
    for (unsigned j = 1; j <= i; ++j) acc = acc + S[j - 1] * L[i - j];
    L.push_back(acc.div_exact(i));
  }
  ensure(!(L.back() == Cyclo(p)), "psi L-polynomial has degree below p^e");
  return L;
}

}  // namespace

std::vector<u64> trace_histogram(const AdditivePoly& R, unsigned k, unsigned threads) {
  check_r_input(R);
  require(k >= 1, "extension degree k must be >= 1");
  guard_count(R, k);
  return histogram(trace_form(R, k), threads);
}

i64 point_count(const AdditivePoly& R, unsigned k, unsigned threads) {
  auto h = trace_histogram(R, k, threads);
  i64 n = (i64)R.base()->p() * (i64)h[0];
  ensure(n % R.base()->p() == 0, "point count not divisible by p");
  return n;
}

i64 point_count_direct(const AdditivePoly& R, unsigned k) {
  check_r_input(R);
  guard_count(R, k);
  Field K = k == 1 ? R.base() : field_create(R.base()->p(), R.base()->n() * k);
  AdditivePoly RK = k == 1 ? R : R.base_change(Embedding(R.base(), K));
  std::unordered_map<u64, i64> image;
  for (u64 i = 0; i < K->order(); ++i) {
    Fe a = Fe::from_index(K, i);
    ++image[(a.frob(1) - a).index()];
  }
  i64 n = 0;
  for (u64 i = 0; i < K->order(); ++i) {
    Fe x = Fe::from_index(K, i);
    auto it = image.find((x * RK(x)).index());
    if (it != image.end()) n += it->second;
  }
  return n;
}

unsigned genus(const AdditivePoly& R) {
  check_r_input(R);
  u64 pe = checked_pow(R.base()->p(), (unsigned)R.e(), u64{1} << 31);
  return (unsigned)((R.base()->p() - 1) * pe / 2);
}

std::vector<i64> zeta_from_counts(const std::vector<i64>& N, u64 q, unsigned g) {
  require(N.size() >= g, "zeta_from_counts needs N_1..N_g");
  ZPoly c(2 * g + 1);
  c[0] = 1;
  std::vector<mpz_class> s(g + 1);
  for (unsigned k = 1; k <= g; ++k) s[k] = zpow(q, k) - mpz_class((long)N[k - 1]);
  for (unsigned i = 1; i <= g; ++i) {
    mpz_class acc = 0;
    for (unsigned j = 1; j <= i; ++j) acc -= s[j] * c[i - j];
    ensure(mpz_divisible_ui_p(acc.get_mpz_t(), i), "non-integral zeta coefficient (counting bug)");
    mpz_divexact_ui(c[i].get_mpz_t(), acc.get_mpz_t(), i);
  }
  for (unsigned i = 0; i < g; ++i) c[2 * g - i] = zpow(q, g - i) * c[i];
  std::vector<i64> P;
  for (auto& z : c) P.push_back(to_i64(z));
  return P;
}

std::vector<i64> counts_from_zeta(const std::vector<i64>& P, u64 q, unsigned K) {
  // log P = -sum s_k T^k / k  =>  s_k = -k c_k - sum_{j<k} s_j c_{k-j}
  std::vector<mpz_class> s(K + 1);
  auto coef = [&](unsigned i) { return i < P.size() ? mpz_class((long)P[i]) : mpz_class(0); };
  std::vector<i64> N;
  for (unsigned k = 1; k <= K; ++k) {
    mpz_class v = -mpz_class(k) * coef(k);
    for (unsigned j = 1; j < k; ++j) v -= s[j] * coef(k - j);
    s[k] = v;
    N.push_back(to_i64(zpow(q, k) - v));
  }
  return N;
}

CycloPoly psi_l_polynomial(const AdditivePoly& R, unsigned c, unsigned threads) {
  check_r_input(R);
  const unsigned p = R.base()->p();
  require(c % p != 0, "psi index c must be prime to p");
  unsigned D = (unsigned)checked_pow(p, (unsigned)R.e(), 64);
  return l_from_histograms(histograms(R, D, threads), p, c % p, D);
}

std::vector<CycloPoly> psi_l_polynomials(const AdditivePoly& R, unsigned threads) {
  check_r_input(R);
  const unsigned p = R.base()->p();
  unsigned D = (unsigned)checked_pow(p, (unsigned)R.e(), 64);
  auto h = histograms(R, D, threads);
  std::vector<CycloPoly> out;
  for (unsigned c = 1; c < p; ++c) out.push_back(l_from_histograms(h, p, c, D));
  return out;
}

std::vector<i64> psi_product(const std::vector<CycloPoly>& Ls) {
  require(!Ls.empty(), "psi_product: no factors");
  const unsigned p = Ls[0][0].p();
  CycloPoly acc{Cyclo::integer(p, 1)};
  for (auto& L : Ls) {
    CycloPoly nx(acc.size() + L.size() - 1, Cyclo(p));
    for (std::size_t i = 0; i < acc.size(); ++i)
      for (std::size_t j = 0; j < L.size(); ++j) nx[i + j] = nx[i + j] + acc[i] * L[j];
    acc = std::move(nx);
  }
  std::vector<i64> P;
  for (auto& z : acc) {
    ensure(z.is_integer(), "product of psi L-polynomials is not in Z[T]");
    P.push_back(z.to_integer());
  }
  return P;
}

std::vector<i64> zeta_numerator(const AdditivePoly& R, unsigned threads) {
  check_r_input(R);
  const unsigned p = R.base()->p(), g = genus(R);
  const u64 q = R.base()->order();
  const unsigned D = (unsigned)checked_pow(p, (unsigned)R.e(), 64);
  auto fits = [&](unsigned k) {
    try {
      return field_size(R, k) <= kCountLimit;
    } catch (const GuardExceeded&) {
      return false;
    }
  };
  const bool by_counts = fits(g), by_psi = fits(D);
  if (!by_counts && !by_psi)
    throw GuardExceeded("zeta numerator needs counts over F_{q^k}, k = " + std::to_string(std::min(g, D)) +
                        ", beyond the 2^28 enumeration guard");
  auto h = histograms(R, by_counts ? std::max(g, by_psi ? D : 0u) : D, threads);
  std::vector<i64> P;
  if (by_counts) {
    std::vector<i64> N;
    for (unsigned k = 1; k <= g; ++k) N.push_back((i64)p * (i64)h[k - 1][0]);
    P = zeta_from_counts(N, q, g);
  }
  if (by_psi) {
    std::vector<CycloPoly> Ls;
    for (unsigned c = 1; c < p; ++c) Ls.push_back(l_from_histograms(h, p, c, D));
    std::vector<i64> Q = psi_product(Ls);
    if (by_counts)
      ensure(Q == P, "zeta numerator from counts disagrees with the psi factorization");
    else
      P = std::move(Q);
  }
  ensure(P.size() == 2 * (std::size_t)g + 1 && P[0] == 1, "zeta numerator has the wrong degree");
  return P;
}

bool functional_equation_holds(const std::vector<i64>& P, u64 q) {
  if (P.empty() || P.size() % 2 == 0) return false;
  const unsigned g = (unsigned)(P.size() - 1) / 2;
  for (unsigned i = 0; i <= g; ++i)
    if (mpz_class((long)P[2 * g - i]) != zpow(q, g - i) * mpz_class((long)P[i])) return false;
  return true;
}

WeilCheck check_weil(const std::vector<i64>& P, u64 q, double tol) {
  WeilCheck out;
  ZPoly f = reversed(P);
  if (f.size() <= 1) {
    out.ok = true;
    return out;
  }
  QPoly fq(f.begin(), f.end());
  QPoly sf = squarefree_part(fq);
  for (auto& c : sf) c /= sf.back();
  const int n = (int)sf.size() - 1;
  using cld = std::complex<long double>;
  std::vector<long double> co(sf.size());
  for (std::size_t i = 0; i < sf.size(); ++i) co[i] = (long double)sf[i].get_d();
  std::vector<cld> roots;
  if (n == 1) {
    roots.push_back(-co[0]);
  } else {
    Eigen::MatrixXd C = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) C(i, i - 1) = 1;
    for (int i = 0; i < n; ++i) C(i, n - 1) = -(double)co[i];
    Eigen::EigenSolver<Eigen::MatrixXd> es(C, false);
    for (int i = 0; i < n; ++i) roots.emplace_back(es.eigenvalues()[i].real(), es.eigenvalues()[i].imag());
  }
  for (auto& z : roots) {
    for (int it = 0; it < 50; ++it) {
      cld v = 0, dv = 0;
      for (int i = n; i >= 0; --i) {
        dv = dv * z + v;
        v = v * z + co[i];
      }
      if (std::abs(dv) == 0) break;
      cld step = v / dv;
      z -= step;
      if (std::abs(step) <= 1e-18L * std::max<long double>(1, std::abs(z))) break;
    }
    double dev = std::fabs((double)(std::norm(z) - (long double)q)) / (double)q;
    out.max_rel_dev = std::max(out.max_rel_dev, dev);
    out.roots.emplace_back((double)z.real(), (double)z.imag());
  }
  std::sort(out.roots.begin(), out.roots.end(), [](auto& a, auto& b) {
    return std::pair(a.real(), a.imag()) < std::pair(b.real(), b.imag());
  });
  out.ok = out.max_rel_dev < tol;
  return out;
}

bool check_supersingular(const std::vector<i64>& P, u64 q) {
  ZPoly f = reversed(P);
  if (f.empty() || f.back() != 1) return false;
  const std::size_t n = f.size() - 1;
  if (n == 0) return true;
  // Graeffe: G(x^2) = (-1)^n f(x) f(-x), roots lambda^2
  ZPoly fm = f;
  for (std::size_t i = 1; i < fm.size(); i += 2) fm[i] = -fm[i];
  ZPoly prod(2 * n + 1, 0);
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j <= n; ++j) prod[i + j] += f[i] * fm[j];
  ZPoly G(n + 1);
  for (std::size_t i = 0; i <= n; ++i) G[i] = (n % 2 ? -1 : 1) * prod[2 * i];
  // H(y) = G(q y) / q^n, roots lambda^2 / q
  ZPoly H(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    mpz_class den = zpow(q, (unsigned)(n - j));
    if (!mpz_divisible_p(G[j].get_mpz_t(), den.get_mpz_t())) return false;
    H[j] = G[j] / den;
  }
  if (H[0] == 0) return false;
  std::vector<ZPoly> cache;
  const u64 bound = 2 * (u64)n * n + 2;
  for (u64 m = 1; m <= bound && H.size() > 1; ++m) {
    if (euler_phi(m) > H.size() - 1) continue;
    ZPoly phi = cyclotomic_poly(m, cache);
    while (H.size() >= phi.size() && zdiv_monic(H, phi)) {
    }
  }
  return H.size() == 1 && H[0] == 1;
}

CurveSummary curve_summary(const AdditivePoly& R, unsigned max_k, unsigned threads) {
  check_r_input(R);
  CurveSummary s;
  s.q = R.base()->order();
  s.genus = genus(R);
  s.zeta = zeta_numerator(R, threads);
  const unsigned p = R.base()->p();
  const unsigned D = (unsigned)checked_pow(p, (unsigned)R.e(), 64);
  bool counts_ok = false, psi_ok = false;
  try {
    counts_ok = field_size(R, s.genus) <= kCountLimit;
  } catch (const GuardExceeded&) {
  }
  try {
    psi_ok = field_size(R, D) <= kCountLimit;
  } catch (const GuardExceeded&) {
  }
  s.zeta_route = counts_ok && psi_ok ? "counts+psi" : counts_ok ? "counts" : "psi";
  if (psi_ok)
    for (unsigned c = 1; c < p; ++c) s.psi_degrees.push_back(D);
  unsigned K = max_k ? max_k : (counts_ok ? s.genus : D);
  for (unsigned k = 1; k <= K; ++k) s.counts.push_back(point_count(R, k, threads));
  ensure(counts_from_zeta(s.zeta, s.q, K) == s.counts, "point counts disagree with the zeta numerator");
  s.functional_equation = functional_equation_holds(s.zeta, s.q);
  s.weil = check_weil(s.zeta, s.q);
  s.supersingular = check_supersingular(s.zeta, s.q);
  return s;
}

}  // namespace addrep
