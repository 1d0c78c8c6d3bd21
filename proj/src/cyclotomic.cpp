/*
   Copyright 2026 The addrep Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0
*/
#include "addrep/cyclotomic.hpp"

#include <sstream>

#include "addrep/errors.hpp"

namespace addrep {

namespace {

i64 add_ck(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw GuardExceeded("Z[zeta_p] coefficient overflow");
  return r;
}

i64 mul_ck(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw GuardExceeded("Z[zeta_p] coefficient overflow");
  return r;
}

}  // namespace

Cyclo::Cyclo(unsigned p) : p_(p), c_(p - 1, 0) { require(p >= 2, "Z[zeta_p] needs p >= 2"); }

Cyclo Cyclo::integer(unsigned p, i64 n) {
  Cyclo z(p);
  z.c_[0] = n;
  return z;
}

Cyclo Cyclo::zeta(unsigned p, u64 k) {
  Cyclo z(p);
  k %= p;
  if (k == p - 1) {
    // zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2})
    for (auto& c : z.c_) c = -1;
  } else {
    z.c_[k] = 1;
  }
  return z;
}

bool Cyclo::is_integer() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i]) return false;
  return true;
}

i64 Cyclo::to_integer() const {
  ensure(is_integer(), "element of Z[zeta_p] is not an integer: " + to_string());
  return c_[0];
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
  Cyclo r(p_);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = add_ck(c_[i], o.c_[i]);
  return r;
}

Cyclo Cyclo::operator-(const Cyclo& o) const { return *this + o.scale(-1); }

Cyclo Cyclo::operator*(const Cyclo& o) const {
  require(p_ == o.p_, "Z[zeta_p]: mixed p");
  // cyclic convolution mod x^p - 1, then fold zeta^{p-1}
  std::vector<i64> w(p_, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i]) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      std::size_t k = (i + j) % p_;
      w[k] = add_ck(w[k], mul_ck(c_[i], o.c_[j]));
    }
  }
  Cyclo r(p_);
  for (std::size_t i = 0; i + 1 < p_; ++i) r.c_[i] = add_ck(w[i], -w[p_ - 1]);
  return r;
}

Cyclo Cyclo::scale(i64 k) const {
  Cyclo r(p_);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = mul_ck(c_[i], k);
  return r;
}

Cyclo Cyclo::div_exact(i64 k) const {
  require(k != 0, "Z[zeta_p]: division by zero");
  Cyclo r(p_);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    ensure(c_[i] % k == 0, "Z[zeta_p]: inexact division by " + std::to_string(k));
    r.c_[i] = c_[i] / k;
  }
  return r;
}

Cyclo Cyclo::galois(u64 a) const {
  require(a % p_ != 0, "Galois action needs a prime to p");
  Cyclo r(p_);
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i]) r = r + zeta(p_, (u64)i * a).scale(c_[i]);
  return r;
}

std::string Cyclo::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
  os << "]";
  return os.str();
}

}  // namespace addrep
