/*
   Copyright 2026 The addrep Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0
*/
#include "addrep/arith.hpp"

#include "addrep/errors.hpp"

namespace addrep {

u64 gcd_u(u64 a, u64 b) {
  while (b) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u64 lcm_u(u64 a, u64 b) {
  if (a == 0 || b == 0) return 0;
  unsigned __int128 l = (unsigned __int128)(a / gcd_u(a, b)) * b;
  if (l > ~u64{0}) throw GuardExceeded("lcm overflows 64 bits");
  return (u64)l;
}

bool is_prime_u(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<u64, unsigned>> factor_u(u64 n) {
  std::vector<std::pair<u64, unsigned>> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    unsigned k = 0;
    while (n % d == 0) {
      n /= d;
      ++k;
    }
    out.emplace_back(d, k);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

u64 mulmod(u64 a, u64 b, u64 m) {
  return (u64)((unsigned __int128)a * b % m);
}

u64 powmod(u64 a, u64 e, u64 m) {
  if (m == 1) return 0;
  u64 r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

u64 checked_pow(u64 p, unsigned k, u64 limit) {
  u64 r = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (r > limit / p) throw GuardExceeded("power exceeds size guard");
    r *= p;
  }
  return r;
}

u64 multiplicative_order(u64 a, u64 d) {
  require(d >= 1, "modulus must be positive");
  if (d == 1) return 1;
  require(gcd_u(a % d, d) == 1, "multiplicative_order: gcd(a, d) must be 1");
  // Divide the order of (Z/d)^x, computed via phi(d).
  u64 phi = d;
  for (auto [q, k] : factor_u(d)) phi = phi / q * (q - 1);
  u64 ord = phi;
  for (auto [q, k] : factor_u(phi)) {
    for (unsigned i = 0; i < k; ++i) {
      if (powmod(a, ord / q, d) == 1)
        ord /= q;
      else
        break;
    }
  }
  return ord;
}

unsigned v2(u64 n) {
  unsigned k = 0;
  while (n && !(n & 1)) {
    n >>= 1;
    ++k;
  }
  return k;
}

int legendre(i64 a, u64 p) {
  i64 r = a % (i64)p;
  if (r < 0) r += (i64)p;
  if (r == 0) return 0;
  return powmod((u64)r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

}  // namespace addrep
