/*
   Copyright 2026 The addrep Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0
*/
#ifndef ADDREP_ADDREP_H_
#define ADDREP_ADDREP_H_

#include <stdint.h>

#if defined(ADDREP_BUILDING)
#define ADDREP_API __attribute__((visibility("default")))
#else
#define ADDREP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  ADDREP_OK = 0,
  ADDREP_E_USAGE = 1,      /* unknown subcommand, bad handle, null pointer */
  ADDREP_E_VALIDATION = 2, /* bad input or size guard exceeded */
  ADDREP_E_THEOREM = 3,    /* two routes that must agree did not */
  ADDREP_E_INTERNAL = 4
} addrep_status;

typedef struct addrep_input addrep_input;

ADDREP_API const char* addrep_version(void);
/* Message of the last failing call on this thread; "" after success. */
ADDREP_API const char* addrep_last_error(void);

ADDREP_API addrep_input* addrep_input_new(void);
ADDREP_API void addrep_input_free(addrep_input* in);
/* Parses the JSON input document into a new handle. */
ADDREP_API addrep_status addrep_input_from_json(const char* json, addrep_input** out);

ADDREP_API addrep_status addrep_input_set_field(addrep_input* in, uint32_t p, uint32_t f);
/* Top index e and the coefficients a_e, a_{e-1}, ... separated by ';'. */
ADDREP_API addrep_status addrep_input_set_r(addrep_input* in, int32_t e, const char* coeffs);
/* Top index e alone (swan needs no coefficients). */
ADDREP_API addrep_status addrep_input_set_e(addrep_input* in, int32_t e);
ADDREP_API addrep_status addrep_input_set_m(addrep_input* in, uint64_t m);
ADDREP_API addrep_status addrep_input_set_dr(addrep_input* in, uint64_t dR);
ADDREP_API addrep_status addrep_input_set_curve(addrep_input* in, int enabled, uint32_t max_k);
ADDREP_API addrep_status addrep_input_set_oracle(addrep_input* in, int enabled);
ADDREP_API addrep_status addrep_input_set_threads(addrep_input* in, uint32_t threads);

/* Runs a subcommand (report, primitivity, swan, quotient, rootsystem, count,
   anisotropy, prime). On success *json_out holds a UTF-8 JSON document to be
   released with addrep_string_free. */
ADDREP_API addrep_status addrep_run(const addrep_input* in, const char* command, char** json_out);

/* Sw = m (p^e + 1) / d_R as a reduced fraction. */
ADDREP_API addrep_status addrep_swan(uint32_t p, uint32_t e, uint64_t dR, uint64_t m, int64_t* num,
                                     int64_t* den);

ADDREP_API void addrep_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* ADDREP_ADDREP_H_ */
