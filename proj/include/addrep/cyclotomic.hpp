/*
   Copyright 2026 The addrep Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0
*/
#pragma once

#include <string>
#include <vector>

#include "addrep/arith.hpp"

namespace addrep {

/// Element of Z[zeta_p] in the basis 1, zeta, ..., zeta^{p-2}. Overflow of the
/// int64 coefficients throws GuardExceeded.
class Cyclo {
 public:
  explicit Cyclo(unsigned p = 2);
  static Cyclo integer(unsigned p, i64 n);
  /// zeta^k
  static Cyclo zeta(unsigned p, u64 k);

  unsigned p() const { return p_; }
  const std::vector<i64>& coeffs() const { return c_; }
  bool is_integer() const;
  i64 to_integer() const;

  Cyclo operator+(const Cyclo& o) const;
  Cyclo operator-(const Cyclo& o) const;
  Cyclo operator*(const Cyclo& o) const;
  Cyclo scale(i64 k) const;
  /// Exact division by an integer; TheoremViolation if not exact.
  Cyclo div_exact(i64 k) const;
  /// zeta -> zeta^a, a prime to p.
  Cyclo galois(u64 a) const;
  bool operator==(const Cyclo& o) const { return p_ == o.p_ && c_ == o.c_; }
  std::string to_string() const;

 private:
  unsigned p_;
  std::vector<i64> c_;  // length p - 1
};

}  // namespace addrep
