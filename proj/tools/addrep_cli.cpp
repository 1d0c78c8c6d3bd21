/*
   Copyright 2026 The addrep Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0
*/
// addrep: invariants of tau_{psi,R,m} from the command line. One JSON
// document on stdout; exit 0 ok, 1 usage, 2 validation, 3 theorem violation.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "addrep/addrep.h"

namespace {

struct Args {
  unsigned p = 0, f = 1, threads = 1, max_k = 0;
  int e = -1;
  unsigned long long m = 1, dR = 0;
  std::string R, input;
  bool curve = false, oracle = false;
};

void add_flags(CLI::App* sc, Args& a) {
  sc->add_option("-p", a.p, "characteristic");
  sc->add_option("-f", a.f, "q = p^f");
  sc->add_option("-e", a.e, "top index of R (R has degree p^e)");
  sc->add_option("-m", a.m, "positive integer prime to p");
  sc->add_option("-R", a.R, "coefficients a_e;a_{e-1};... (missing low ones are 0)");
  sc->add_option("--dR", a.dR, "d_R (swan only)");
  sc->add_flag("--curve", a.curve, "include the curve section in report");
  sc->add_option("--max-k", a.max_k, "report point counts N_1..N_k");
  sc->add_flag("--oracle", a.oracle, "cross-check anisotropy by exhaustive search");
  sc->add_option("--threads", a.threads, "threads for the counting loops");
  sc->add_option("--input", a.input, "JSON input document");
}

int fail(addrep_status st) {
  const char* kind = st == ADDREP_E_VALIDATION ? "validation" : st == ADDREP_E_THEOREM ? "theorem_violation"
                                                : st == ADDREP_E_USAGE        ? "usage"
                                                                              : "internal";
  std::string msg = addrep_last_error();
  std::cerr << "addrep: " << msg << "\n";
  std::string esc;
  for (char c : msg) {
    if (c == '"' || c == '\\') esc += '\\';
    if ((unsigned char)c < 0x20) continue;
    esc += c;
  }
  std::cout << "{\n  \"error\": {\n    \"kind\": \"" << kind << "\",\n    \"message\": \"" << esc << "\"\n  }\n}\n";
  return (int)st;
}

}  // namespace

int main(int argc, char** argv) {
  // "-dR" is accepted as a spelling of "--dR"
  std::vector<std::string> args(argv, argv + argc);
  for (auto& s : args)
    if (s == "-dR") s = "--dR";
  std::vector<const char*> cargv;
  for (auto& s : args) cargv.push_back(s.c_str());

  CLI::App app{"addrep: invariants of additive-polynomial representations"};
  app.require_subcommand(1);
  Args a;
  const char* names[] = {"report", "primitivity", "swan", "quotient", "rootsystem", "count", "anisotropy", "prime"};
  for (const char* n : names) add_flags(app.add_subcommand(n, std::string("run ") + n), a);
  try {
    app.parse((int)cargv.size(), const_cast<char**>(cargv.data()));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  const std::string cmd = app.get_subcommands().front()->get_name();
  CLI::App* sc = app.get_subcommands().front();

  addrep_input* in = nullptr;
  addrep_status st = ADDREP_OK;
  if (!a.input.empty()) {
    std::ifstream file(a.input);
    if (!file) {
      std::cerr << "addrep: cannot read " << a.input << "\n";
      return 2;
    }
    std::stringstream ss;
    ss << file.rdbuf();
    st = addrep_input_from_json(ss.str().c_str(), &in);
    if (st != ADDREP_OK) return fail(st);
  } else {
    in = addrep_input_new();
  }
  auto given = [&](const char* opt) { return sc->count(opt) > 0; };
  if (st == ADDREP_OK && (given("-p") || given("-f") || a.input.empty()))
    st = addrep_input_set_field(in, a.p, a.f);
  if (st == ADDREP_OK && given("-R")) st = addrep_input_set_r(in, a.e, a.R.c_str());
  if (st == ADDREP_OK && given("-e") && !given("-R")) st = addrep_input_set_e(in, a.e);
  if (st == ADDREP_OK && (given("-m") || a.input.empty())) st = addrep_input_set_m(in, a.m);
  if (st == ADDREP_OK && given("--dR")) st = addrep_input_set_dr(in, a.dR);
  if (st == ADDREP_OK && (given("--curve") || given("--max-k")))
    st = addrep_input_set_curve(in, a.curve ? 1 : 0, a.max_k);
  if (st == ADDREP_OK && given("--oracle")) st = addrep_input_set_oracle(in, 1);
  if (st == ADDREP_OK && (given("--threads") || a.input.empty())) st = addrep_input_set_threads(in, a.threads);

  char* out = nullptr;
  if (st == ADDREP_OK) st = addrep_run(in, cmd.c_str(), &out);
  addrep_input_free(in);
  if (st != ADDREP_OK) return fail(st);
  std::fputs(out, stdout);
  addrep_string_free(out);
  return 0;
}
