/*
   Copyright 2026 The addrep Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0
*/
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace addrep {

using u64 = std::uint64_t;
using i64 = std::int64_t;

u64 gcd_u(u64 a, u64 b);
u64 lcm_u(u64 a, u64 b);  // throws GuardExceeded on overflow
bool is_prime_u(u64 n);
/// Prime factorization by trial division, ascending primes with exponents.
std::vector<std::pair<u64, unsigned>> factor_u(u64 n);
u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 a, u64 e, u64 m);
/// p^k, throws GuardExceeded when it does not fit below `limit`.
u64 checked_pow(u64 p, unsigned k, u64 limit = ~u64{0});
/// Least k >= 1 with a^k = 1 mod d. d = 1 gives 1.
u64 multiplicative_order(u64 a, u64 d);
/// 2-adic valuation, n > 0.
unsigned v2(u64 n);
/// Legendre symbol (a/p) for odd prime p, in {-1, 0, 1}.
int legendre(i64 a, u64 p);

}  // namespace addrep
