/*
   Copyright 2026 The addrep Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0
*/
#pragma once

#include <stdexcept>
#include <string>

namespace addrep {

/// Bad input: violated precondition, malformed text, guard exceeded.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A size guard was hit. Reported to callers like a validation error.
class GuardExceeded : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// A proven identity failed to hold, or two routes that must agree did not.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void require(bool ok, const std::string& msg) {
  if (!ok) throw ValidationError(msg);
}

inline void ensure(bool ok, const std::string& msg) {
  if (!ok) throw TheoremViolation(msg);
}

}  // namespace addrep
