/*
   Copyright 2026 The addrep Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0
*/
#include "addrep/addrep.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "addrep/errors.hpp"
#include "addrep/report.hpp"

struct addrep_input {
  addrep::InputSpec spec;
};

namespace {

thread_local std::string g_last_error;

template <class Fn>
addrep_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return ADDREP_OK;
  } catch (const addrep::UsageError& e) {
    g_last_error = e.what();
    return ADDREP_E_USAGE;
  } catch (const addrep::ValidationError& e) {
    g_last_error = e.what();
    return ADDREP_E_VALIDATION;
  } catch (const addrep::TheoremViolation& e) {
    g_last_error = e.what();
    return ADDREP_E_THEOREM;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ADDREP_E_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return ADDREP_E_INTERNAL;
  }
}

void need(const void* ptr, const char* what) {
  if (!ptr) throw addrep::UsageError(std::string("null ") + what);
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* addrep_version(void) { return "0.1.0"; }

const char* addrep_last_error(void) { return g_last_error.c_str(); }

addrep_input* addrep_input_new(void) {
  try {
    return new addrep_input{};
  } catch (...) {
    return nullptr;
  }
}

void addrep_input_free(addrep_input* in) { delete in; }

addrep_status addrep_input_from_json(const char* json, addrep_input** out) {
  return guarded([&] {
    need(json, "json");
    need(out, "output handle");
    *out = nullptr;
    auto spec = addrep::input_from_json(json);
    *out = new addrep_input{std::move(spec)};
  });
}

addrep_status addrep_input_set_field(addrep_input* in, uint32_t p, uint32_t f) {
  return guarded([&] {
    need(in, "input");
    in->spec.p = p;
    in->spec.f = f;
  });
}

addrep_status addrep_input_set_r(addrep_input* in, int32_t e, const char* coeffs) {
  return guarded([&] {
    need(in, "input");
    need(coeffs, "coefficients");
    addrep::require(e >= 0, "e must be >= 0");
    in->spec.e = e;
    in->spec.R = addrep::split_coeffs(coeffs);
  });
}

addrep_status addrep_input_set_e(addrep_input* in, int32_t e) {
  return guarded([&] {
    need(in, "input");
    addrep::require(e >= 0, "e must be >= 0");
    in->spec.e = e;
  });
}

addrep_status addrep_input_set_m(addrep_input* in, uint64_t m) {
  return guarded([&] {
    need(in, "input");
    in->spec.m = m;
  });
}

addrep_status addrep_input_set_dr(addrep_input* in, uint64_t dR) {
  return guarded([&] {
    need(in, "input");
    in->spec.dR = dR;
  });
}

addrep_status addrep_input_set_curve(addrep_input* in, int enabled, uint32_t max_k) {
  return guarded([&] {
    need(in, "input");
    in->spec.curve = enabled != 0;
    in->spec.max_k = max_k;
  });
}

addrep_status addrep_input_set_oracle(addrep_input* in, int enabled) {
  return guarded([&] {
    need(in, "input");
    in->spec.oracle = enabled != 0;
  });
}

addrep_status addrep_input_set_threads(addrep_input* in, uint32_t threads) {
  return guarded([&] {
    need(in, "input");
    in->spec.threads = threads;
  });
}

addrep_status addrep_run(const addrep_input* in, const char* command, char** json_out) {
  return guarded([&] {
    need(in, "input");
    need(command, "command");
    need(json_out, "output string");
    *json_out = nullptr;
    *json_out = dup(addrep::run_command(in->spec, command));
  });
}

addrep_status addrep_swan(uint32_t p, uint32_t e, uint64_t dR, uint64_t m, int64_t* num, int64_t* den) {
  return guarded([&] {
    need(num, "num");
    need(den, "den");
    auto s = addrep::swan(p, e, dR, m);
    *num = s.numerator();
    *den = s.denominator();
  });
}

void addrep_string_free(char* s) { std::free(s); }

}  // extern "C"
