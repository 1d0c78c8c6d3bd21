/*
   Copyright 2026 The addrep Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0
*/
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "addrep/invariants.hpp"

namespace addrep {

/// Unknown subcommand or unusable argument combination.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InputSpec {
  unsigned p = 0;
  unsigned f = 1;
  int e = -1;
  u64 m = 1;
  /// Coefficients a_e, a_{e-1}, ... (top-down); missing low ones are zero.
  /// Each is "c", "c0,c1,..." (coordinates) or the full text form.
  std::vector<std::string> R;
  std::optional<u64> dR;  // swan only
  bool curve = false;
  unsigned max_k = 0;
  bool oracle = false;
  unsigned threads = 1;
};

/// Parses the JSON input document (same field names as InputSpec).
InputSpec input_from_json(const std::string& text);
/// Splits "a;b;c" into coefficient strings.
std::vector<std::string> split_coeffs(const std::string& s);
AdditivePoly make_r(const InputSpec& in);

const std::vector<std::string>& subcommands();
/// Runs one subcommand and returns the JSON document (2-space indent,
/// trailing newline).
std::string run_command(const InputSpec& in, const std::string& command);

std::string report_json(const Report& r);

}  // namespace addrep
