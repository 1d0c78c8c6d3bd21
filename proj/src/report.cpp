/*
   Copyright 2026 The addrep Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0
*/
#include "addrep/report.hpp"

#include <algorithm>

#include "addrep/errors.hpp"
#include "json.hpp"

namespace addrep {

namespace {

using json = nlohmann::ordered_json;

json rat(const Rational& r) { return {{"num", r.numerator()}, {"den", r.denominator()}}; }

json poly_json(const AdditivePoly& f) {
  json terms = json::array();
  for (std::size_t i = 0; i < f.coeffs().size(); ++i)
    if (!f.coeffs()[i].is_zero()) terms.push_back({{"p_power", i}, {"coef", to_text(f.coeffs()[i])}});
  return {{"field", f.base()->name()}, {"e", f.e()}, {"terms", terms}};
}

json sparse_json(const SparsePoly& f) {
  json terms = json::array();
  for (auto& [k, c] : f.terms()) terms.push_back({{"deg", k}, {"coef", to_text(c)}});
  return {{"field", f.field()->name()}, {"terms", terms}};
}

json rs_inv(const RSInvariants& v) {
  return {{"a", v.a}, {"b", v.b}, {"c", v.c}, {"e_prime", v.e_prime}, {"f_prime", v.f_prime}};
}

json root_system_json(const MonomialRootSystem& mr) {
  return {{"alpha", to_text(mr.W.alpha)},
          {"beta", to_text(mr.beta_q)},
          {"e1", mr.e1},
          {"formula", rs_inv(mr.formula)},
          {"brute_force", rs_inv(mr.brute)},
          {"type", type_name(mr.cls.type)},
          {"structures", mr.cls.structures},
          {"predicted_type", type_name(mr.predicted)},
          {"nu_label", nu_label(mr)}};
}

json submodule_json(const SympModule& M, const Submodule& W) {
  json basis = json::array();
  for (std::size_t i = 0; i < W.dim(); ++i) basis.push_back(to_text(element_of(M, W.basis.row(i))));
  return {{"dim", W.dim()}, {"basis", basis}};
}

json symplectic_json(const Verdict& v) {
  const SympModule& M = v.module;
  json dec = nullptr;
  if (v.decomposition)
    dec = {{"f1", poly_json(v.decomposition->f1)},
           {"f2", poly_json(v.decomposition->f2)},
           {"by_fallback", v.decomposition->by_fallback}};
  return {{"dim", M.dim},
          {"ambient", M.ambient->name()},
          {"d_Rm", M.d},
          {"r", M.r},
          {"anisotropic", v.anisotropy.anisotropic},
          {"witness", v.anisotropy.witness ? submodule_json(M, *v.anisotropy.witness) : json(nullptr)},
          {"decomposition", dec},
          {"oracle_checked", v.oracle_checked}};
}

json induction_json(const Verdict& v) {
  if (!v.induction) return nullptr;
  const InductionData& d = *v.induction;
  return {{"r", poly_json(d.r)},
          {"R1", poly_json(d.R1)},
          {"delta", sparse_json(d.delta)},
          {"e_prime", d.e_prime},
          {"fprime_degree", d.fprime_degree},
          {"delta_matches_gamma", d.delta_matches_gamma},
          {"morphism_ok", v.morphism && v.morphism->ok}};
}

json opt_u(const std::optional<unsigned>& t) { return t ? json(*t) : json(nullptr); }

json curve_json(const CurveSummary& s, bool with_dev) {
  json weil = {{"ok", s.weil.ok}, {"tolerance", 1e-9}};
  if (with_dev) weil["max_rel_dev"] = s.weil.max_rel_dev;
  return {{"q", s.q},
          {"counts", s.counts},
          {"genus", s.genus},
          {"zeta_numerator", s.zeta},
          {"zeta_route", s.zeta_route},
          {"functional_equation", s.functional_equation},
          {"weil", weil},
          {"supersingular", s.supersingular},
          {"psi_L_degrees", s.psi_degrees}};
}

json ramification_json(const RamificationProfile& pr) {
  json filt = json::array();
  for (std::size_t i = 0; i < pr.groups.size(); ++i)
    filt.push_back({{"up_to", i < pr.bounds.size() ? rat(pr.bounds[i]) : json(nullptr)}, {"group", pr.groups[i]}});
  json bp = json::array(), sl = json::array();
  for (auto& b : pr.breakpoints) bp.push_back(rat(b));
  for (auto& s : pr.slopes) sl.push_back(rat(s));
  return {{"jumps", json::array({rat(pr.breakpoints[0]), rat(pr.breakpoints[1]), rat(pr.breakpoints[2])})},
          {"filtration", filt},
          {"herbrand", {{"breakpoints", bp}, {"slopes", sl}}}};
}

json input_echo(const AdditivePoly& R, u64 m) {
  return {{"p", R.base()->p()}, {"f", R.base()->n()}, {"e", R.e()}, {"m", m}, {"R", poly_json(R)}};
}

json report_doc(const Report& r) {
  json j = input_echo(r.R, r.m);
  j["degree"] = r.degree;
  j["d_R"] = r.dR;
  j["d_Rm"] = r.dRm;
  j["swan"] = rat(r.swan);
  j["valuations"] = {{"alpha", rat(r.vals.alpha)}, {"beta", rat(r.vals.beta)}, {"gamma", rat(r.vals.gamma)}};
  j["ramification"] = ramification_json(r.prof);
  j["E_R_prime"] = r.verdict.e_r_prime;
  j["symplectic"] = symplectic_json(r.verdict);
  j["verdict"] = r.verdict.label();
  j["induction"] = induction_json(r.verdict);
  j["unramified_imprimitive_degree"] = opt_u(r.verdict.unramified_degree);
  j["root_system"] = r.root_system ? root_system_json(*r.root_system) : json(nullptr);
  if (!r.root_system) j["root_system_note"] = r.root_system_note;
  j["curve"] = r.curve ? curve_json(*r.curve, false) : json(nullptr);
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

template <class T>
T get_or(const json& j, const char* key, T def) {
  if (!j.contains(key) || j[key].is_null()) return def;
  try {
    return j[key].get<T>();
  } catch (const json::exception&) {
    throw ValidationError(std::string("input field '") + key + "' has the wrong type");
  }
}

}  // namespace

std::vector<std::string> split_coeffs(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ';') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  out.push_back(cur);
  for (auto& c : out) require(!c.empty(), "empty coefficient in R list '" + s + "'");
  return out;
}

InputSpec input_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& ex) {
    throw ValidationError(std::string("input is not valid JSON: ") + ex.what());
  }
  require(j.is_object(), "input JSON must be an object");
  static const std::vector<std::string> known = {"p", "f", "e", "m", "R", "dR", "curve", "max_k", "oracle", "threads"};
  for (auto& [k, v] : j.items())
    require(std::find(known.begin(), known.end(), k) != known.end(), "unknown input field '" + k + "'");
  InputSpec in;
  in.p = get_or<unsigned>(j, "p", 0);
  in.f = get_or<unsigned>(j, "f", 1);
  in.e = get_or<int>(j, "e", -1);
  in.m = get_or<u64>(j, "m", 1);
  if (j.contains("R")) {
    if (j["R"].is_string())
      in.R = split_coeffs(j["R"].get<std::string>());
    else
      in.R = get_or<std::vector<std::string>>(j, "R", {});
  }
  if (j.contains("dR") && !j["dR"].is_null()) in.dR = get_or<u64>(j, "dR", 0);
  in.curve = get_or<bool>(j, "curve", false);
  in.max_k = get_or<unsigned>(j, "max_k", 0);
  in.oracle = get_or<bool>(j, "oracle", false);
  in.threads = get_or<unsigned>(j, "threads", 1);
  return in;
}

AdditivePoly make_r(const InputSpec& in) {
  require(in.p >= 2 && is_prime_u(in.p), "p must be prime (got " + std::to_string(in.p) + ")");
  require(in.f >= 1, "f must be >= 1");
  require(in.e >= 0, "the top index e of R is required");
  require(!in.R.empty(), "R coefficients are required");
  require(in.R.size() <= (std::size_t)in.e + 1,
          "R has " + std::to_string(in.R.size()) + " coefficients but e = " + std::to_string(in.e) +
              " allows at most " + std::to_string(in.e + 1));
  Field F = field_create(in.p, in.f);
  std::vector<Fe> c((std::size_t)in.e + 1, Fe::zero(F));
  for (std::size_t i = 0; i < in.R.size(); ++i) c[(std::size_t)in.e - i] = parse_element(F, in.R[i]);
  require(!c.back().is_zero(), "leading coefficient a_e must be nonzero");
  AdditivePoly R(F, c);
  check_r_input(R);
  return R;
}

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> s = {"report",   "primitivity", "swan",       "quotient",
                                             "rootsystem", "count",     "anisotropy", "prime"};
  return s;
}

std::string report_json(const Report& r) { return dump(report_doc(r)); }

std::string run_command(const InputSpec& in, const std::string& command) {
  const auto& cmds = subcommands();
  if (std::find(cmds.begin(), cmds.end(), command) == cmds.end())
    throw UsageError("unknown subcommand '" + command + "'");
  require(in.threads >= 1 && in.threads <= 256, "threads must be in 1..256");

  if (command == "swan") {
    require(in.p >= 2 && is_prime_u(in.p), "p must be prime (got " + std::to_string(in.p) + ")");
    require(in.e >= 0, "e is required");
    require(in.m >= 1, "m must be >= 1");
    u64 dR = 0;
    if (in.dR) {
      dR = *in.dR;
    } else {
      require(!in.R.empty(), "swan needs either dR or R");
      dR = d_r(make_r(in));
    }
    Rational s = swan(in.p, (unsigned)in.e, dR, in.m);
    auto pr = profile(in.p, (unsigned)in.e, dR, in.m);
    json j = {{"p", in.p}, {"e", in.e}, {"d_R", dR}, {"m", in.m}};
    j["swan"] = s.denominator() == 1 ? json(s.numerator()) : rat(s);
    j["max_jump"] = rat(pr.max_jump());
    return dump(j);
  }

  AdditivePoly R = make_r(in);
  const unsigned p = in.p;
  auto need_m = [&] {
    require(in.m >= 1 && in.m % p != 0,
            "m must be a positive integer prime to p (got m = " + std::to_string(in.m) + ", p = " +
                std::to_string(p) + ")");
  };

  if (command == "report") {
    need_m();
    return report_json(full_report(R, in.m, {in.curve, in.max_k, in.oracle, in.threads}));
  }
  if (command == "count") {
    json j = input_echo(R, in.m);
    j.erase("m");
    j["curve"] = curve_json(curve_summary(R, in.max_k, in.threads), true);
    return dump(j);
  }
  if (command == "prime") {
    AdditivePoly E = e_r(R);
    auto fac = nontrivial_right_factor(E);
    json j = input_echo(R, in.m);
    j.erase("m");
    j["R_prime"] = is_prime(R);
    j["E_R"] = poly_json(E);
    j["E_R_prime"] = !fac.has_value();
    j["E_R_right_factor"] = fac ? poly_json(*fac) : json(nullptr);
    return dump(j);
  }
  if (command == "rootsystem") {
    need_m();
    json j = input_echo(R, in.m);
    j["d_Rm"] = d_rm(R, in.m);
    j["root_system"] = root_system_json(monomial_root_system(R, in.m));
    return dump(j);
  }

  need_m();
  Verdict v = primitivity(R, in.m, in.oracle);
  json j = input_echo(R, in.m);
  if (command == "anisotropy") {
    j["symplectic"] = symplectic_json(v);
  } else if (command == "quotient") {
    require(p != 2, "the quotient construction needs p odd");
    j["verdict"] = v.label();
    j["witness"] = v.anisotropy.witness ? submodule_json(v.module, *v.anisotropy.witness) : json(nullptr);
    j["induction"] = induction_json(v);
  } else {  // primitivity
    j["verdict"] = v.label();
    j["anisotropic"] = v.anisotropy.anisotropic;
    j["decomposition_found"] = v.decomposition.has_value();
    j["E_R_prime"] = v.e_r_prime;
    j["oracle_checked"] = v.oracle_checked;
    j["unramified_imprimitive_degree"] = opt_u(v.unramified_degree);
    j["induction"] = induction_json(v);
  }
  return dump(j);
}

}  // namespace addrep
