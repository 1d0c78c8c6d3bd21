/*
   Copyright 2026 The addrep Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0
*/
#include "addrep/ff.hpp"

#include <algorithm>
#include <sstream>

#include "addrep/errors.hpp"
#include "addrep/poly.hpp"

namespace addrep {

namespace {

using CPoly = std::vector<Coord>;  // over F_p, constant first

void cp_trim(CPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

CPoly cp_mulmod(const CPoly& a, const CPoly& b, const CPoly& f, unsigned p) {
  if (a.empty() || b.empty()) return {};
  std::vector<u64> t(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) t[i + j] = (t[i + j] + (u64)a[i] * b[j]) % p;
  const std::size_t n = f.size() - 1;
  for (std::size_t k = t.size(); k-- > n;) {
    u64 c = t[k] % p;
    if (!c) continue;
    for (std::size_t i = 0; i <= n; ++i) t[k - n + i] = (t[k - n + i] + (p - c) * f[i]) % p;
  }
  CPoly r(std::min(t.size(), n));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = (Coord)(t[i] % p);
  cp_trim(r);
  return r;
}

CPoly cp_powmod(CPoly b, u64 e, const CPoly& f, unsigned p) {
  CPoly r{1};
  while (e) {
    if (e & 1) r = cp_mulmod(r, b, f, p);
    b = cp_mulmod(b, b, f, p);
    e >>= 1;
  }
  return r;
}

CPoly cp_mod(CPoly a, const CPoly& g, unsigned p) {
  cp_trim(a);
  const std::size_t dg = g.size() - 1;
  u64 ilead = powmod(g.back(), p - 2, p);
  while (a.size() > dg) {
    u64 c = a.back() * ilead % p;
    std::size_t s = a.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) a[s + i] = (Coord)((a[s + i] + (p - c) * g[i]) % p);
    cp_trim(a);
  }
  return a;
}

CPoly cp_gcd(CPoly a, CPoly b, unsigned p) {
  cp_trim(a);
  cp_trim(b);
  while (!b.empty()) {
    CPoly r = cp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

CPoly cp_sub_x(CPoly a, unsigned p) {
  if (a.size() < 2) a.resize(2, 0);
  a[1] = (a[1] + p - 1) % p;
  cp_trim(a);
  return a;
}

// x^{p^k} mod f
CPoly cp_x_pk(unsigned k, const CPoly& f, unsigned p) {
  CPoly r{0, 1};
  r = cp_mod(r, f, p);
  for (unsigned i = 0; i < k; ++i) r = cp_powmod(r, p, f, p);
  return r;
}

}  // namespace

bool is_irreducible_fp(const std::vector<Coord>& f, unsigned p) {
  if (f.size() < 2 || f.back() != 1) return false;
  const unsigned n = (unsigned)f.size() - 1;
  if (n == 1) return true;
  CPoly x{0, 1};
  if (cp_x_pk(n, f, p) != cp_mod(x, f, p)) return false;
  for (auto [l, k] : factor_u(n)) {
    CPoly g = cp_gcd(f, cp_sub_x(cp_x_pk(n / (unsigned)l, f, p), p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

FieldDesc::FieldDesc(unsigned p, unsigned n, std::vector<Coord> mod)
    : p_(p), n_(n), order_(checked_pow(p, n, kFieldGuard)), mod_(std::move(mod)) {
  frob_.assign((std::size_t)n * n, 0);
  // x^p reduced, then powers of it
  std::vector<Coord> xp(n, 0), cur(n, 0), tmp(n);
  cur[0] = 1;
  {
    CPoly xpp = cp_x_pk(1, mod_, p);
    for (std::size_t i = 0; i < xpp.size(); ++i) xp[i] = xpp[i];
  }
  for (unsigned j = 0; j < n; ++j) {
    for (unsigned i = 0; i < n; ++i) frob_[(std::size_t)i * n + j] = cur[i];
    mul(cur.data(), xp.data(), tmp.data());
    cur = tmp;
  }
  unit_factors_ = factor_u(order_ - 1);
}

Field FieldDesc::create(unsigned p, unsigned n) {
  require(p >= 2 && p < 65536 && is_prime_u(p), "field_create: p must be a prime below 2^16");
  require(n >= 1, "field_create: degree must be at least 1");
  u64 count = checked_pow(p, n, kFieldGuard);
  std::vector<Coord> f(n + 1, 0);
  f[n] = 1;
  // constant term 0 means divisible by x, so start at c0 = 1 when n > 1
  const u64 start = n > 1 ? count / p : 0;
  for (u64 idx = start; idx < count; ++idx) {
    u64 v = idx;
    for (unsigned i = n; i-- > 0;) {
      f[i] = (Coord)(v % p);
      v /= p;
    }
    if (n > 1) {
      bool root = false;
      for (u64 x = 0; x < p && !root; ++x) {
        u64 val = 0;
        for (unsigned i = n + 1; i-- > 0;) val = (val * x + f[i]) % p;
        root = val == 0;
      }
      if (root) continue;
    }
    if (is_irreducible_fp(f, p)) return Field(new FieldDesc(p, n, f));
  }
  throw TheoremViolation("no irreducible polynomial found");
}

Field field_create(unsigned p, unsigned n) { return FieldDesc::create(p, n); }

std::string FieldDesc::name() const {
  return std::to_string(p_) + "^" + std::to_string(n_);
}

void FieldDesc::mul(const Coord* a, const Coord* b, Coord* out) const {
  const unsigned n = n_;
  const u64 p = p_;
  u64 t[2 * 64];
  std::vector<u64> big;
  u64* acc = t;
  if (2 * n > 128) {
    big.assign(2 * n, 0);
    acc = big.data();
  } else {
    std::fill(t, t + 2 * n, 0);
  }
  for (unsigned i = 0; i < n; ++i) {
    if (!a[i]) continue;
    for (unsigned j = 0; j < n; ++j) acc[i + j] += (u64)a[i] * b[j];
    if (p > 256 || (i & 15) == 15)
      for (unsigned j = 0; j < n; ++j) acc[i + j] %= p;
  }
  for (unsigned k = 2 * n - 1; k-- > n;) {
    u64 c = acc[k] % p;
    if (!c) continue;
    for (unsigned i = 0; i < n; ++i) acc[k - n + i] = (acc[k - n + i] + (p - c) * mod_[i]) % p;
  }
  for (unsigned i = 0; i < n; ++i) out[i] = (Coord)(acc[i] % p);
}

void FieldDesc::frob(const Coord* a, Coord* out) const {
  const unsigned n = n_;
  for (unsigned i = 0; i < n; ++i) {
    u64 s = 0;
    for (unsigned j = 0; j < n; ++j) s = (s + (u64)frob_[(std::size_t)i * n + j] * a[j]) % p_;
    out[i] = (Coord)s;
  }
}

// ---------------------------------------------------------------- Fe

Fe::Fe(Field F) : F_(std::move(F)) {
  if (!F_) throw ValidationError("Fe: null field");
  c_.assign(F_->n(), 0);
}

Fe Fe::one(const Field& F) {
  Fe r(F);
  r.c_[0] = 1;
  return r;
}

Fe Fe::constant(const Field& F, i64 c) {
  Fe r(F);
  i64 p = F->p();
  r.c_[0] = (Coord)(((c % p) + p) % p);
  return r;
}

Fe Fe::from_coords(const Field& F, std::vector<Coord> c) {
  require(c.size() == F->n(), "element has " + std::to_string(c.size()) +
                                  " coordinates, field " + F->name() + " needs " +
                                  std::to_string(F->n()));
  for (auto x : c) require(x < F->p(), "coordinate out of range for " + F->name());
  Fe r(F);
  r.c_ = std::move(c);
  return r;
}

Fe Fe::from_index(const Field& F, u64 idx) {
  Fe r(F);
  for (unsigned i = F->n(); i-- > 0;) {
    r.c_[i] = (Coord)(idx % F->p());
    idx /= F->p();
  }
  return r;
}

Fe Fe::gen(const Field& F) {
  Fe r(F);
  if (F->n() > 1)
    r.c_[1] = 1;
  else
    r.c_[0] = (F->p() - F->modulus()[0]) % F->p();
  return r;
}

bool Fe::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](Coord x) { return x == 0; });
}

bool Fe::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](Coord x) { return x == 0; });
}

u64 Fe::index() const {
  u64 v = 0;
  for (auto x : c_) v = v * F_->p() + x;
  return v;
}

void Fe::check_same(const Fe& o) const {
  if (!F_ || !o.F_ || (F_ != o.F_ && !F_->same(*o.F_)))
    throw ValidationError("field mismatch: " + (F_ ? F_->name() : std::string("null")) +
                          " vs " + (o.F_ ? o.F_->name() : std::string("null")));
}

Fe Fe::operator+(const Fe& o) const {
  Fe r = *this;
  r += o;
  return r;
}

Fe Fe::operator-(const Fe& o) const {
  Fe r = *this;
  r -= o;
  return r;
}

Fe Fe::operator-() const {
  Fe r = *this;
  const Coord p = F_->p();
  for (auto& x : r.c_) x = x ? p - x : 0;
  return r;
}

Fe& Fe::operator+=(const Fe& o) {
  check_same(o);
  const Coord p = F_->p();
  for (std::size_t i = 0; i < c_.size(); ++i) {
    Coord s = c_[i] + o.c_[i];
    c_[i] = s >= p ? s - p : s;
  }
  return *this;
}

Fe& Fe::operator-=(const Fe& o) {
  check_same(o);
  const Coord p = F_->p();
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = c_[i] >= o.c_[i] ? c_[i] - o.c_[i] : c_[i] + p - o.c_[i];
  return *this;
}

Fe Fe::operator*(const Fe& o) const {
  check_same(o);
  Fe r(F_);
  F_->mul(c_.data(), o.c_.data(), r.c_.data());
  return r;
}

Fe& Fe::operator*=(const Fe& o) {
  *this = *this * o;
  return *this;
}

Fe Fe::operator/(const Fe& o) const { return *this * o.inv(); }

Fe Fe::scale(i64 c) const {
  const i64 p = F_->p();
  u64 k = (u64)(((c % p) + p) % p);
  Fe r = *this;
  for (auto& x : r.c_) x = (Coord)(x * k % (u64)p);
  return r;
}

Fe Fe::pow(u64 e) const {
  Fe r = one(F_), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Fe Fe::inv() const {
  if (is_zero()) throw ValidationError("division by zero in " + F_->name());
  return pow(F_->order() - 2);
}

Fe Fe::frob(u64 k) const {
  k %= F_->n();
  Fe r = *this, t(F_);
  for (u64 i = 0; i < k; ++i) {
    F_->frob(r.c_.data(), t.c_.data());
    std::swap(r.c_, t.c_);
  }
  return r;
}

bool Fe::operator==(const Fe& o) const {
  if (!F_ || !o.F_) return F_ == o.F_;
  return F_->same(*o.F_) && c_ == o.c_;
}

std::strong_ordering Fe::operator<=>(const Fe& o) const {
  check_same(o);
  return c_ <=> o.c_;
}

Fe frobenius(const Fe& x, u64 k) { return x.frob(k); }

std::pair<Fe, Fe> norm_trace(const Fe& x, unsigned sub_degree) {
  const unsigned n = x.field()->n();
  require(sub_degree >= 1 && n % sub_degree == 0,
          "norm_trace: subfield degree " + std::to_string(sub_degree) + " does not divide " +
              std::to_string(n));
  Fe nr = Fe::one(x.field()), tr = Fe::zero(x.field()), y = x;
  for (unsigned i = 0; i < n / sub_degree; ++i) {
    nr *= y;
    tr += y;
    y = y.frob(sub_degree);
  }
  return {nr, tr};
}

u64 element_order(const Fe& x) {
  require(!x.is_zero(), "element_order: zero element");
  u64 ord = x.field()->order() - 1;
  for (auto [l, k] : x.field()->unit_factors()) {
    for (unsigned i = 0; i < k; ++i) {
      if (x.pow(ord / l).is_one())
        ord /= l;
      else
        break;
    }
  }
  return ord;
}

Fe primitive_element(const Field& F) {
  const u64 full = F->order() - 1;
  for (u64 idx = 1; idx < F->order(); ++idx) {
    Fe g = Fe::from_index(F, idx);
    if (element_order(g) == full) return g;
  }
  throw TheoremViolation("no primitive element");
}

std::vector<Fe> roots_of_unity(const Field& F, u64 d) {
  require(d >= 1, "roots_of_unity: d must be positive");
  require((F->order() - 1) % d == 0, "roots_of_unity: " + std::to_string(d) +
                                         " does not divide " + F->name() + " - 1");
  require(d <= 10000000, "roots_of_unity: d too large to enumerate");
  Fe z = primitive_element(F).pow((F->order() - 1) / d);
  std::vector<Fe> out;
  out.reserve(d);
  Fe cur = Fe::one(F);
  for (u64 i = 0; i < d; ++i) {
    out.push_back(cur);
    cur *= z;
  }
  std::sort(out.begin(), out.end());
  return out;
}

Fe canonical_root_of_unity(const Field& F, u64 d) {
  for (const Fe& z : roots_of_unity(F, d)) {
    bool exact = true;
    for (auto [l, k] : factor_u(d))
      if (z.pow(d / l).is_one()) exact = false;
    if (exact) return z;
  }
  throw TheoremViolation("no root of unity of exact order");
}

// ---------------------------------------------------------------- embedding

Embedding::Embedding(Field src, Field dst) : src_(std::move(src)), dst_(std::move(dst)) {
  require(src_->p() == dst_->p(), "embed: characteristic mismatch");
  require(dst_->n() % src_->n() == 0, "embed: degree " + std::to_string(src_->n()) +
                                          " does not divide " + std::to_string(dst_->n()));
  const unsigned n = src_->n();
  Fe root(dst_);
  if (n == 1) {
    root = Fe::constant(dst_, (i64)dst_->p() - (i64)src_->modulus()[0]);
  } else {
    std::vector<Fe> mc;
    for (auto c : src_->modulus()) mc.push_back(Fe::constant(dst_, c));
    auto roots = split_roots(Poly(dst_, mc));
    ensure(roots.size() == n, "embed: source modulus does not split in target");
    root = roots.front();
  }
  Fe cur = Fe::one(dst_);
  std::vector<Vec> cols;
  for (unsigned i = 0; i < n; ++i) {
    powers_.push_back(cur);
    cols.push_back(cur.coords());
    cur *= root;
  }
  A_ = FpMat::from_cols(dst_->p(), cols, dst_->n());
}

Fe Embedding::operator()(const Fe& x) const {
  require(x.field()->same(*src_), "embed: element not in source field");
  Fe r(dst_);
  for (std::size_t i = 0; i < powers_.size(); ++i)
    if (x.coords()[i]) r += powers_[i].scale(x.coords()[i]);
  return r;
}

bool Embedding::in_image(const Fe& x) const {
  return solve(A_, x.coords()).has_value();
}

Fe Embedding::descend(const Fe& x) const {
  require(x.field()->same(*dst_), "descend: element not in target field");
  auto c = solve(A_, x.coords());
  if (!c) throw ValidationError("descend: element not in subfield " + src_->name());
  return Fe::from_coords(src_, *c);
}

Fe embed(const Fe& x, const Field& target) {
  if (x.field()->same(*target)) return x;
  return Embedding(x.field(), target)(x);
}

// ---------------------------------------------------------------- text

namespace {

std::string csv(const std::vector<Coord>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

std::vector<i64> parse_csv(const std::string& s) {
  std::vector<i64> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(0, tok.find_first_not_of(" \t"));
    tok.erase(tok.find_last_not_of(" \t") + 1);
    require(!tok.empty(), "empty entry in coordinate list '" + s + "'");
    std::size_t pos = 0;
    i64 v = 0;
    try {
      v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
      throw ValidationError("not an integer: '" + tok + "'");
    }
    require(pos == tok.size(), "not an integer: '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

std::string to_text(const Fe& x) {
  return x.field()->name() + ":" + csv(x.field()->modulus()) + ":" + csv(x.coords());
}

Fe fe_from_text(const std::string& s) {
  auto c1 = s.find(':'), c2 = s.rfind(':');
  require(c1 != std::string::npos && c2 != c1, "element text must be p^n:modulus:coords, got '" + s + "'");
  std::string head = s.substr(0, c1);
  auto caret = head.find('^');
  require(caret != std::string::npos, "element text must start with p^n, got '" + s + "'");
  auto pn = parse_csv(head.substr(0, caret) + "," + head.substr(caret + 1));
  require(pn.size() == 2 && pn[0] > 1 && pn[1] >= 1, "bad field in '" + s + "'");
  Field F = field_create((unsigned)pn[0], (unsigned)pn[1]);
  auto mod = parse_csv(s.substr(c1 + 1, c2 - c1 - 1));
  std::vector<Coord> m(mod.begin(), mod.end());
  require(m == F->modulus(), "modulus in '" + s + "' differs from the canonical modulus " +
                                 csv(F->modulus()));
  return parse_element(F, s.substr(c2 + 1));
}

Fe parse_element(const Field& F, const std::string& s) {
  if (s.find(':') != std::string::npos) {
    Fe x = fe_from_text(s);
    require(x.field()->same(*F), "element '" + s + "' is not in " + F->name());
    return x;
  }
  auto v = parse_csv(s);
  require(!v.empty(), "empty element text");
  if (v.size() == 1) return Fe::constant(F, v[0]);
  require(v.size() == F->n(), "element '" + s + "' needs " + std::to_string(F->n()) + " coordinates");
  std::vector<Coord> c;
  for (auto x : v) {
    require(x >= 0 && x < (i64)F->p(), "coordinate out of range in '" + s + "'");
    c.push_back((Coord)x);
  }
  return Fe::from_coords(F, c);
}

}  // namespace addrep
