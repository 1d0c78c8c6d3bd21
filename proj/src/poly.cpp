/*
   Copyright 2026 The addrep Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0
*/
#include "addrep/poly.hpp"

#include <algorithm>
#include <random>

#include "addrep/errors.hpp"

namespace addrep {

Poly::Poly(Field F, std::vector<Fe> c) : F_(std::move(F)), c_(std::move(c)) {
  for (auto& x : c_) require(x.field()->same(*F_), "Poly: coefficient field mismatch");
  trim();
}

Poly Poly::x(const Field& F) { return Poly(F, {Fe::zero(F), Fe::one(F)}); }

Poly Poly::constant(const Fe& c) { return Poly(c.field(), {c}); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Fe Poly::coef(std::size_t i) const { return i < c_.size() ? c_[i] : Fe::zero(F_); }

Poly Poly::operator+(const Poly& o) const {
  std::vector<Fe> r(std::max(c_.size(), o.c_.size()), Fe::zero(F_));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return Poly(F_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
  std::vector<Fe> r(std::max(c_.size(), o.c_.size()), Fe::zero(F_));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return Poly(F_, std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly(F_);
  std::vector<Fe> r(c_.size() + o.c_.size() - 1, Fe::zero(F_));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return Poly(F_, std::move(r));
}

Poly Poly::scale(const Fe& c) const {
  std::vector<Fe> r = c_;
  for (auto& x : r) x *= c;
  return Poly(F_, std::move(r));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& g) const {
  require(!g.is_zero(), "polynomial division by zero");
  if (degree() < g.degree()) return {Poly(F_), *this};
  std::vector<Fe> rem = c_;
  std::vector<Fe> q(c_.size() - g.c_.size() + 1, Fe::zero(F_));
  Fe il = g.lead().inv();
  const std::size_t dg = g.c_.size() - 1;
  for (std::size_t k = rem.size(); k-- > dg;) {
    if (rem[k].is_zero()) continue;
    Fe c = rem[k] * il;
    q[k - dg] = c;
    for (std::size_t i = 0; i <= dg; ++i) rem[k - dg + i] -= c * g.c_[i];
  }
  rem.resize(dg);
  return {Poly(F_, std::move(q)), Poly(F_, std::move(rem))};
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scale(lead().inv());
}

Fe Poly::eval(const Fe& x) const {
  Fe r = Fe::zero(F_);
  for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

Poly Poly::derivative() const {
  std::vector<Fe> r;
  for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i].scale((i64)(i % F_->p())));
  return Poly(F_, std::move(r));
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly poly_powmod(const Poly& base, u64 e, const Poly& mod) {
  Poly r = Poly::constant(Fe::one(base.field())) % mod, b = base % mod;
  while (e) {
    if (e & 1) r = (r * b) % mod;
    e >>= 1;
    if (e) b = (b * b) % mod;
  }
  return r;
}

Poly poly_pow_pk_mod(const Poly& base, unsigned k, const Poly& mod) {
  Poly r = base % mod;
  for (unsigned i = 0; i < k; ++i) r = poly_powmod(r, base.field()->p(), mod);
  return r;
}

namespace {

// x^{Q^j} mod f with Q the size of the coefficient field
Poly x_qpow(const Poly& f, unsigned j) {
  const Field& F = f.field();
  return poly_pow_pk_mod(Poly::x(F), F->n() * j, f);
}

void cz_split(const Poly& f, std::mt19937_64& rng, std::vector<Fe>& out) {
  const Field& F = f.field();
  if (f.degree() <= 0) return;
  if (f.degree() == 1) {
    Poly m = f.monic();
    out.push_back(-m.coef(0));
    return;
  }
  const u64 Q = F->order();
  for (int attempt = 0; attempt < 10000; ++attempt) {
    Fe delta = Fe::from_index(F, rng() % Q);
    Poly h(F);
    if (F->p() == 2) {
      Poly t = Poly(F, {Fe::zero(F), delta}) % f, acc = t;
      for (unsigned i = 1; i < F->n(); ++i) {
        t = (t * t) % f;
        acc = acc + t;
      }
      h = acc;
    } else {
      Poly lin(F, {delta, Fe::one(F)});
      h = poly_powmod(lin, (Q - 1) / 2, f) - Poly::constant(Fe::one(F));
    }
    Poly g = poly_gcd(f, h);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      cz_split(g, rng, out);
      cz_split(f.divmod(g).first, rng, out);
      return;
    }
  }
  throw TheoremViolation("root splitting did not converge");
}

}  // namespace

std::vector<Fe> split_roots(const Poly& f) {
  std::mt19937_64 rng(0x5eed5eedULL);
  std::vector<Fe> out;
  cz_split(f.monic(), rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Fe> roots_in_field(const Poly& f) {
  require(!f.is_zero(), "roots of the zero polynomial");
  if (f.degree() <= 0) return {};
  Poly m = f.monic();
  Poly g = poly_gcd(m, x_qpow(m, 1) - Poly::x(f.field()));
  return split_roots(g);
}

bool poly_is_irreducible(const Poly& f) {
  require(!f.is_zero(), "irreducibility of the zero polynomial");
  const int d = f.degree();
  if (d <= 0) return false;
  if (d == 1) return true;
  Poly m = f.monic();
  Poly x = Poly::x(f.field()) % m;
  if (!(x_qpow(m, (unsigned)d) == x)) return false;
  for (auto [l, k] : factor_u((u64)d)) {
    Poly g = poly_gcd(m, x_qpow(m, (unsigned)(d / l)) - x);
    if (g.degree() != 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------- sparse

SparsePoly SparsePoly::monomial(const Fe& c, u64 deg) {
  SparsePoly r(c.field());
  r.add_term(deg, c);
  return r;
}

Fe SparsePoly::coef(u64 k) const {
  auto it = t_.find(k);
  return it == t_.end() ? Fe::zero(F_) : it->second;
}

void SparsePoly::add_term(u64 k, const Fe& c) {
  if (c.is_zero()) return;
  auto it = t_.find(k);
  if (it == t_.end()) {
    t_.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
  SparsePoly r = *this;
  if (!r.F_) r.F_ = o.F_;
  for (auto& [k, c] : o.t_) r.add_term(k, c);
  return r;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const { return *this + (-o); }

SparsePoly SparsePoly::operator-() const {
  SparsePoly r(F_);
  for (auto& [k, c] : t_) r.t_.emplace(k, -c);
  return r;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
  SparsePoly r(F_ ? F_ : o.F_);
  for (auto& [k1, c1] : t_)
    for (auto& [k2, c2] : o.t_) r.add_term(k1 + k2, c1 * c2);
  return r;
}

SparsePoly SparsePoly::scale(const Fe& c) const {
  SparsePoly r(F_);
  for (auto& [k, x] : t_) r.add_term(k, x * c);
  return r;
}

bool SparsePoly::operator==(const SparsePoly& o) const { return t_ == o.t_; }

SparsePoly SparsePoly::frob_power() const {
  SparsePoly r(F_);
  const u64 p = F_ ? F_->p() : 2;
  for (auto& [k, c] : t_) r.t_.emplace(k * p, c.frob(1));
  return r;
}

SparsePoly SparsePoly::pow(u64 e) const {
  // base-p digits: f^e = prod_j (f^{p^j})^{d_j}
  SparsePoly r = monomial(Fe::one(F_), 0);
  SparsePoly fp = *this;
  const u64 p = F_->p();
  while (e) {
    u64 d = e % p;
    for (u64 i = 0; i < d; ++i) r = r * fp;
    e /= p;
    if (e) fp = fp.frob_power();
  }
  return r;
}

Fe SparsePoly::eval(const Fe& x) const {
  Fe r = Fe::zero(x.field());
  for (auto& [k, c] : t_) r += c * x.pow(k);
  return r;
}

SparsePoly sparse_compose(const SparsePoly& outer, const SparsePoly& inner) {
  SparsePoly r(outer.field() ? outer.field() : inner.field());
  for (auto& [k, c] : outer.terms()) r = r + inner.pow(k).scale(c);
  return r;
}

}  // namespace addrep
