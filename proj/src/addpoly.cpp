/*
   Copyright 2026 The addrep Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0
*/
#include "addrep/addpoly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "addrep/errors.hpp"

namespace addrep {

AdditivePoly::AdditivePoly(Field F, std::vector<Fe> coeffs) : F_(std::move(F)), c_(std::move(coeffs)) {
  for (auto& c : c_) require(c.field()->same(*F_), "AdditivePoly: coefficient field mismatch");
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

AdditivePoly AdditivePoly::frob_monomial(const Field& F, unsigned s, const Fe* c) {
  std::vector<Fe> v(s + 1, Fe::zero(F));
  v[s] = c ? *c : Fe::one(F);
  return AdditivePoly(F, v);
}

Fe AdditivePoly::coef(std::size_t i) const { return i < c_.size() ? c_[i] : Fe::zero(F_); }

u64 AdditivePoly::degree() const {
  require(!c_.empty(), "degree of the zero additive polynomial");
  return checked_pow(F_->p(), (unsigned)e(), u64{1} << 62);
}

int AdditivePoly::low() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return (int)i;
  return -1;
}

Fe AdditivePoly::operator()(const Fe& x) const { return evaluate(*this, x); }

AdditivePoly AdditivePoly::operator+(const AdditivePoly& o) const {
  std::vector<Fe> r(std::max(c_.size(), o.c_.size()), Fe::zero(F_));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return AdditivePoly(F_, r);
}

AdditivePoly AdditivePoly::operator-(const AdditivePoly& o) const {
  std::vector<Fe> r(std::max(c_.size(), o.c_.size()), Fe::zero(F_));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return AdditivePoly(F_, r);
}

AdditivePoly AdditivePoly::scale(const Fe& c) const {
  std::vector<Fe> r = c_;
  for (auto& x : r) x *= c;
  return AdditivePoly(F_, r);
}

AdditivePoly AdditivePoly::monic() const {
  require(!c_.empty(), "monic of the zero polynomial");
  return scale(c_.back().inv());
}

bool AdditivePoly::operator==(const AdditivePoly& o) const {
  if (c_.empty() || o.c_.empty()) return c_.empty() && o.c_.empty();
  return c_ == o.c_;
}

AdditivePoly AdditivePoly::base_change(const Embedding& emb) const {
  std::vector<Fe> r;
  for (auto& c : c_) r.push_back(emb(c));
  return AdditivePoly(emb.dst(), r);
}

AdditivePoly AdditivePoly::descend(const Embedding& emb) const {
  std::vector<Fe> r;
  for (auto& c : c_) r.push_back(emb.descend(c));
  return AdditivePoly(emb.src(), r);
}

SparsePoly AdditivePoly::to_sparse() const {
  SparsePoly s(F_);
  u64 k = 1;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    s.add_term(k, c_[i]);
    if (i + 1 < c_.size()) k = checked_pow(F_->p(), (unsigned)i + 1, u64{1} << 62);
  }
  return s;
}

Fe evaluate(const AdditivePoly& f, const Fe& x) {
  require(f.is_zero() || x.field()->same(*f.base()),
          "evaluate: point lies in " + x.field()->name() + ", polynomial over " + f.base()->name());
  Fe r = Fe::zero(x.field()), y = x;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i) y = y.frob(1);
    if (!f.coeffs()[i].is_zero()) r += f.coeffs()[i] * y;
  }
  return r;
}

AdditivePoly compose(const AdditivePoly& f, const AdditivePoly& g) {
  const Field& F = f.base() ? f.base() : g.base();
  if (f.is_zero() || g.is_zero()) return AdditivePoly(F);
  require(f.base()->same(*g.base()), "compose: base fields differ");
  std::vector<Fe> r(f.coeffs().size() + g.coeffs().size() - 1, Fe::zero(F));
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    const Fe& a = f.coeffs()[i];
    if (a.is_zero()) continue;
    for (std::size_t j = 0; j < g.coeffs().size(); ++j) r[i + j] += a * g.coeffs()[j].frob(i);
  }
  return AdditivePoly(F, r);
}

std::pair<AdditivePoly, AdditivePoly> right_divmod(const AdditivePoly& f, const AdditivePoly& g) {
  require(!g.is_zero(), "right_divmod: division by the zero polynomial");
  const Field& F = g.base();
  if (f.is_zero()) return {AdditivePoly(F), AdditivePoly(F)};
  require(f.base()->same(*F), "right_divmod: base fields differ");
  const int s = g.e();
  if (f.e() < s) return {AdditivePoly(F), f};
  std::vector<Fe> rem = f.coeffs();
  std::vector<Fe> q(rem.size() - s, Fe::zero(F));
  for (int k = (int)rem.size() - 1; k >= s; --k) {
    if (rem[k].is_zero()) continue;
    const int u = k - s;
    Fe c = rem[k] / g.coeffs()[s].frob(u);
    q[u] = c;
    for (int j = 0; j <= s; ++j) rem[u + j] -= c * g.coeffs()[j].frob(u);
  }
  rem.resize(s);
  return {AdditivePoly(F, q), AdditivePoly(F, rem)};
}

void check_r_input(const AdditivePoly& R) {
  require(!R.is_zero(), "R must be nonzero");
  require(!(R.base()->p() == 2 && R.e() == 0), "(p, e) = (2, 0) is excluded");
}

AdditivePoly e_r(const AdditivePoly& R) {
  check_r_input(R);
  const Field& F = R.base();
  const unsigned e = (unsigned)R.e();
  std::vector<Fe> E(2 * e + 1, Fe::zero(F));
  for (unsigned i = 0; i <= e; ++i) {
    const Fe& a = R.coeffs()[i];
    if (a.is_zero()) continue;
    E[i + e] += a.frob(e);
    E[e - i] += a.frob(e - i);
  }
  AdditivePoly out(F, E);
  // for e = 0 both sums hit x and E_R = 2 a_0 x
  ensure(out.coef(0) == (e == 0 ? R.coeffs()[0].scale(2) : R.coeffs()[e]),
         "E_R: unexpected coefficient of x");
  return out;
}

u64 d_r(const AdditivePoly& R) {
  check_r_input(R);
  const u64 p = R.base()->p();
  u64 g = 0;
  for (std::size_t i = 0; i < R.coeffs().size(); ++i)
    if (!R.coeffs()[i].is_zero()) g = gcd_u(g, checked_pow(p, (unsigned)i, u64{1} << 62) + 1);
  ensure((checked_pow(p, (unsigned)R.e(), u64{1} << 62) + 1) % g == 0, "d_R does not divide p^e + 1");
  return g;
}

u64 d_rm(const AdditivePoly& R, u64 m) {
  require(m >= 1, "m must be positive");
  require(m % R.base()->p() != 0,
          "m = " + std::to_string(m) + " must be prime to p = " + std::to_string(R.base()->p()));
  u64 d = d_r(R);
  return d / gcd_u(d, m);
}

// ---------------------------------------------------------------- f_R

void BivariateTable::add(unsigned i, unsigned j, const Fe& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(i, j);
  auto it = t_.find(key);
  if (it == t_.end()) {
    t_.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

BivariateTable BivariateTable::operator-(const BivariateTable& o) const {
  BivariateTable r = *this;
  for (auto& [k, c] : o.t_) r.add(k.first, k.second, -c);
  return r;
}

BivariateTable BivariateTable::frob_power() const {
  BivariateTable r(F_);
  for (auto& [k, c] : t_) r.add(k.first + 1, k.second + 1, c.frob(1));
  return r;
}

Fe BivariateTable::eval(const Fe& x, const Fe& y) const {
  Fe s = Fe::zero(x.field());
  for (auto& [k, c] : t_) s += c * x.frob(k.first) * y.frob(k.second);
  return s;
}

BivariateTable f_r(const AdditivePoly& R) {
  check_r_input(R);
  BivariateTable T(R.base());
  const unsigned e = (unsigned)R.e();
  for (unsigned i = 0; i < e; ++i) {
    const Fe& ai = R.coeffs()[i];
    for (unsigned j = 0; j + i < e; ++j) T.add(i + j, j, -ai.frob(j));
    for (unsigned k = 0; k <= e; ++k) T.add(i, k + i, -R.coeffs()[k].frob(i));
  }
  return T;
}

Fe f_r_eval(const AdditivePoly& R, const Fe& x, const Fe& y) {
  require(x.field()->same(*R.base()) && y.field()->same(*R.base()),
          "f_r_eval: points must lie in the base field of R");
  const unsigned e = (unsigned)R.e();
  Fe s = Fe::zero(x.field());
  Fe xR = x * evaluate(R, y);
  Fe xpi = x;
  for (unsigned i = 0; i < e; ++i) {
    Fe t = R.coeffs()[i] * xpi * y;
    for (unsigned j = 0; j + i < e; ++j) {
      s += t;
      t = t.frob(1);
    }
    s += xR.frob(i);
    xpi = xpi.frob(1);
  }
  return -s;
}

std::pair<BivariateTable, BivariateTable> fr_identity_sides(const AdditivePoly& R) {
  BivariateTable f = f_r(R);
  BivariateTable lhs = f.frob_power() - f;
  AdditivePoly E = e_r(R);
  const unsigned e = (unsigned)R.e();
  BivariateTable rhs(R.base());
  for (std::size_t k = 0; k < E.coeffs().size(); ++k) rhs.add(e, (unsigned)k, -E.coeffs()[k]);
  for (std::size_t k = 0; k < R.coeffs().size(); ++k) {
    rhs.add(0, (unsigned)k, R.coeffs()[k]);
    rhs.add((unsigned)k, 0, R.coeffs()[k]);
  }
  return {lhs, rhs};
}

bool mu_scaling(const AdditivePoly& f, u64 d) {
  require(d >= 1, "mu_scaling: d must be positive");
  const u64 p = f.base()->p();
  require(d % p != 0, "mu_scaling: d must be prime to p");
  bool ok = true;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (f.coeffs()[i].is_zero()) continue;
    // d | p^i - 1
    if (powmod(p, i, d) != 1 % d) ok = false;
  }
  const Field& F = f.base();
  if ((F->order() - 1) % d == 0 && F->order() > 2) {
    Fe a = canonical_root_of_unity(F, d), x = Fe::gen(F);
    if (x.is_zero()) x = Fe::one(F);
    bool ev = evaluate(f, a * x) == a * evaluate(f, x);
    // a single point can only refute
    ensure(ok ? ev : true, "mu_scaling: congruence and evaluation disagree");
  }
  return ok;
}

// ---------------------------------------------------------------- kernels

AdditivePoly kernel_poly_from_basis(const std::vector<Fe>& basis) {
  require(!basis.empty(), "kernel_poly_from_basis: empty basis (use x)");
  const Field& F = basis.front().field();
  const unsigned p = F->p();
  AdditivePoly f = AdditivePoly::identity(F);
  for (const Fe& b : basis) {
    Fe c = evaluate(f, b);
    require(!c.is_zero(), "kernel_poly: basis vectors are linearly dependent");
    Fe cp = c.pow(p - 1);
    AdditivePoly u(F, {-cp, Fe::one(F)});
    f = compose(u, f);
  }
  return f;
}

AdditivePoly kernel_poly(const std::vector<Fe>& W) {
  require(!W.empty(), "kernel_poly: W must contain 0");
  const Field& F = W.front().field();
  std::set<u64> idx;
  for (auto& w : W) idx.insert(w.index());
  require(idx.size() == W.size(), "kernel_poly: W has repeated elements");
  require(idx.count(0), "kernel_poly: W must contain 0");
  for (auto& a : W)
    for (auto& b : W) require(idx.count((a + b).index()), "kernel_poly: W is not closed under addition");
  // greedy basis
  std::vector<Fe> basis;
  std::vector<Vec> rows;
  for (auto& w : W) {
    if (w.is_zero()) continue;
    std::vector<Vec> trial = rows;
    trial.push_back(w.coords());
    if (rank(FpMat::from_rows(F->p(), trial, F->n())) > rows.size()) {
      rows = trial;
      basis.push_back(w);
    }
  }
  u64 expect = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) expect *= F->p();
  require(expect == W.size(), "kernel_poly: W is not an F_p-subspace");
  if (basis.empty()) return AdditivePoly::identity(F);
  AdditivePoly f = kernel_poly_from_basis(basis);
  for (auto& w : W) ensure(evaluate(f, w).is_zero(), "kernel_poly: does not vanish on W");
  return f;
}

bool is_reduced(const AdditivePoly& f) {
  require(!f.is_zero(), "is_reduced: zero polynomial");
  return !f.coeffs()[0].is_zero();
}

bool rationality(const AdditivePoly& f, unsigned sub_degree) {
  require(!f.is_zero(), "rationality: zero polynomial");
  require(sub_degree >= 1 && f.base()->n() % sub_degree == 0, "rationality: bad subfield degree");
  for (auto& c : f.coeffs())
    if (!(c.frob(sub_degree) == c)) return false;
  return true;
}

FpMat operator_matrix(const AdditivePoly& f) {
  const Field& F = f.base();
  std::vector<Vec> cols;
  for (unsigned j = 0; j < F->n(); ++j) {
    std::vector<Coord> e(F->n(), 0);
    e[j] = 1;
    cols.push_back(evaluate(f, Fe::from_coords(F, e)).coords());
  }
  return FpMat::from_cols(F->p(), cols, F->n());
}

KernelData split_kernel(const AdditivePoly& f, unsigned multiple) {
  require(!f.is_zero(), "split_kernel: zero polynomial");
  const Field& B = f.base();
  const unsigned n = B->n(), p = B->p();
  const unsigned want = (unsigned)(f.e() - f.low());
  auto too_big = [&](u64 M) {
    u64 size = 1;
    for (u64 i = 0; i < M; ++i) {
      if (size > kFieldGuard / p) return true;
      size *= p;
    }
    return false;
  };
  auto guard_error = [&] {
    return GuardExceeded("splitting field of a degree-" + std::to_string(f.degree()) +
                         " additive polynomial over " + B->name() + " exceeds 2^40");
  };
  // ker f = ker g for f = x^{p^low} o g; g is reduced
  std::vector<Fe> gc;
  const unsigned low = (unsigned)f.low();
  for (int i = f.low(); i <= f.e(); ++i) gc.push_back(f.coef(i).frob((n - low % n) % n));
  AdditivePoly g(B, gc);
  // splitting degree D: least D with g right-dividing tau^D - 1
  u64 D = 0;
  AdditivePoly tau = AdditivePoly::frob_monomial(B, 1);
  AdditivePoly rem = right_divmod(AdditivePoly::identity(B), g).second;
  for (u64 M = 1; !too_big(M); ++M) {
    rem = right_divmod(compose(tau, rem), g).second;
    if ((rem - AdditivePoly::identity(B)).is_zero() || g.e() == 0) {
      D = M;
      break;
    }
  }
  if (D == 0) throw guard_error();
  u64 M = lcm_u(lcm_u(n, multiple), D);
  if (too_big(M)) throw guard_error();
  Field A = field_create(p, (unsigned)M);
  KernelData kd;
  kd.ambient = A;
  kd.k = (unsigned)(M / n);
  if (A->same(*B)) {
    kd.f = f;
  } else {
    kd.emb.emplace(B, A);
    kd.f = f.base_change(*kd.emb);
  }
  FpMat K = kernel(operator_matrix(kd.f));
  ensure(K.rows() == want, "split_kernel: kernel dimension differs from the separable degree");
  kd.basis = K;
  for (std::size_t i = 0; i < K.rows(); ++i) kd.elems.push_back(Fe::from_coords(A, K.row(i)));
  return kd;
}

namespace {

// A_q / A_q f as an F_p-space: coordinate (e-1-i)*n + j is coordinate j of
// the coefficient of tau^i, so higher degrees come first.
Vec residue_vec(const AdditivePoly& h, unsigned e, unsigned n) {
  Vec v((std::size_t)e * n, 0);
  for (unsigned i = 0; i < e; ++i) {
    Fe c = h.coef(i);
    for (unsigned j = 0; j < n; ++j) v[(std::size_t)(e - 1 - i) * n + j] = c.coords()[j];
  }
  return v;
}

AdditivePoly residue_poly(const Field& F, const Vec& v, unsigned e) {
  const unsigned n = F->n();
  std::vector<Fe> c;
  for (unsigned i = 0; i < e; ++i) {
    std::vector<Coord> x(n);
    for (unsigned j = 0; j < n; ++j) x[j] = v[(std::size_t)(e - 1 - i) * n + j];
    c.push_back(Fe::from_coords(F, x));
  }
  return AdditivePoly(F, c);
}

}  // namespace

std::optional<AdditivePoly> nontrivial_right_factor(const AdditivePoly& f) {
  require(!f.is_zero(), "right factor of the zero polynomial");
  const Field& F = f.base();
  const unsigned p = F->p(), n = F->n();
  const unsigned e = (unsigned)f.e();
  if (e <= 1) return std::nullopt;
  if (f.low() > 0) return AdditivePoly::frob_monomial(F, 1);
  const std::size_t dim = (std::size_t)e * n;
  // left multiplication by tau and by the generator of F_q on A_q / A_q f
  std::vector<Vec> tcols, ccols;
  Fe theta = Fe::gen(F);
  if (n == 1) theta = Fe::one(F);
  for (std::size_t k = 0; k < dim; ++k) {
    Vec ek(dim, 0);
    ek[k] = 1;
    AdditivePoly h = residue_poly(F, ek, e);
    AdditivePoly th = compose(AdditivePoly::frob_monomial(F, 1), h);
    tcols.push_back(residue_vec(right_divmod(th, f).second, e, n));
    ccols.push_back(residue_vec(h.scale(theta), e, n));
  }
  FpMat T = FpMat::from_cols(p, tcols, dim), C = FpMat::from_cols(p, ccols, dim);
  u64 count = checked_pow(p, (unsigned)dim, u64{1} << 22);
  for (u64 idx = 1; idx < count; ++idx) {
    Vec v(dim);
    u64 t = idx;
    for (std::size_t i = dim; i-- > 0;) {
      v[i] = (std::uint32_t)(t % p);
      t /= p;
    }
    auto first = std::find_if(v.begin(), v.end(), [](auto c) { return c != 0; });
    if (*first != 1) continue;
    FpMat N = invariant_closure({&T, &C}, FpMat::from_rows(p, {v}, dim));
    if (N.rows() == dim) continue;
    // the least-degree element of the submodule generates the left ideal
    AdditivePoly g = residue_poly(F, N.row(N.rows() - 1), e).monic();
    ensure(g.e() >= 1, "right factor search produced a unit");
    ensure(right_divmod(f, g).second.is_zero(), "right factor search: factor does not divide");
    return g;
  }
  return std::nullopt;
}

bool is_prime(const AdditivePoly& f) {
  require(!f.is_zero(), "is_prime: zero polynomial");
  require(f.e() >= 1, "is_prime: degree must exceed 1");
  if (f.e() == 1) return true;
  if (f.low() > 0) return false;
  return !nontrivial_right_factor(f).has_value();
}

bool is_prime_by_kernel(const AdditivePoly& f) {
  require(!f.is_zero(), "is_prime: zero polynomial");
  require(f.e() >= 1, "is_prime: degree must exceed 1");
  if (f.e() == 1) return true;
  if (f.low() > 0) return false;
  const Field& B = f.base();
  const unsigned p = B->p();
  KernelData kd = split_kernel(f);
  const std::size_t dim = kd.elems.size();
  Rref basis = rref(kd.basis);
  std::vector<Vec> cols;
  for (auto& b : kd.elems) cols.push_back(*coords_in(basis, b.frob(B->n()).coords()));
  FpMat S = FpMat::from_cols(p, cols, dim);
  u64 count = checked_pow(p, (unsigned)dim, u64{1} << 24);
  for (u64 idx = 1; idx < count; ++idx) {
    Vec v(dim);
    u64 t = idx;
    for (std::size_t i = dim; i-- > 0;) {
      v[i] = (std::uint32_t)(t % p);
      t /= p;
    }
    auto first = std::find_if(v.begin(), v.end(), [](auto c) { return c != 0; });
    if (*first != 1) continue;
    FpMat W = invariant_closure({&S}, FpMat::from_rows(p, {v}, dim));
    if (W.rows() == dim) continue;
    std::vector<Fe> wb;
    for (std::size_t i = 0; i < W.rows(); ++i) {
      Fe x = Fe::zero(kd.ambient);
      for (std::size_t j = 0; j < dim; ++j) x += kd.elems[j].scale(W.at(i, j));
      wb.push_back(x);
    }
    AdditivePoly g = kernel_poly_from_basis(wb);
    if (kd.emb) g = g.descend(*kd.emb);
    ensure(right_divmod(f, g).second.is_zero(), "is_prime: kernel factor does not divide");
    return false;
  }
  return true;
}

PhiResult phi_iso(const AdditivePoly& f, unsigned t) {
  require(!f.is_zero(), "phi_iso: zero polynomial");
  require(t >= 1, "phi_iso: t must be positive");
  const Field& F = f.base();
  require(t % F->n() == 0, "phi_iso: log_p q = " + std::to_string(F->n()) + " must divide t = " +
                               std::to_string(t));
  std::vector<Fe> c;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (f.coeffs()[i].is_zero()) continue;
    require(i % t == 0, "phi_iso: exponent p^" + std::to_string(i) + " is not a power of p^" +
                            std::to_string(t));
    if (c.size() <= i / t) c.resize(i / t + 1, Fe::zero(F));
    c[i / t] = f.coeffs()[i];
  }
  Poly phi(F, c);
  PhiResult r{phi, false, true, t == 1 && F->n() == 1};
  r.irreducible = phi.degree() >= 1 && poly_is_irreducible(phi);
  const int d = phi.degree();
  for (int i = 0; i <= d; ++i)
    if (!(phi.coef(i) == phi.coef(d - i))) r.reciprocal = false;
  return r;
}

AdditivePoly phi_inverse(const Poly& g, unsigned t) {
  require(t >= 1 && t % g.field()->n() == 0, "phi_inverse: log_p q must divide t");
  const Field& F = g.field();
  if (g.is_zero()) return AdditivePoly(F);
  std::vector<Fe> c((std::size_t)g.degree() * t + 1, Fe::zero(F));
  for (int i = 0; i <= g.degree(); ++i) c[(std::size_t)i * t] = g.coef(i);
  return AdditivePoly(F, c);
}

std::string to_text(const AdditivePoly& f) {
  std::string s = "q=" + f.base()->name() + "; coeffs=[";
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i) s += "; ";
    s += to_text(f.coeffs()[i]);
  }
  return s + "]";
}

AdditivePoly addpoly_from_text(const std::string& s) {
  auto q = s.find("q=");
  auto sc = s.find(';');
  auto lb = s.find('['), rb = s.rfind(']');
  require(q != std::string::npos && sc != std::string::npos && lb != std::string::npos &&
              rb != std::string::npos && lb < rb,
          "additive polynomial text must be 'q=p^f; coeffs=[c_0; ...; c_e]'");
  std::string fld = s.substr(q + 2, sc - q - 2);
  auto caret = fld.find('^');
  require(caret != std::string::npos, "field must be written p^f");
  unsigned p = 0, n = 0;
  try {
    p = (unsigned)std::stoul(fld.substr(0, caret));
    n = (unsigned)std::stoul(fld.substr(caret + 1));
  } catch (const std::exception&) {
    throw ValidationError("bad field '" + fld + "'");
  }
  Field F = field_create(p, n);
  std::vector<Fe> c;
  std::stringstream ss(s.substr(lb + 1, rb - lb - 1));
  std::string tok;
  while (std::getline(ss, tok, ';')) {
    tok.erase(0, tok.find_first_not_of(" \t"));
    tok.erase(tok.find_last_not_of(" \t") + 1);
    if (tok.empty()) continue;
    c.push_back(parse_element(F, tok));
  }
  return AdditivePoly(F, c);
}

}  // namespace addrep
