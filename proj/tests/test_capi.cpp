// The C API exercised through the shared library only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstring>
#include <string>
#include <thread>

#include "addrep/addrep.h"
#include "json.hpp"

using nlohmann::json;

namespace {

json run(addrep_input* in, const char* cmd, addrep_status expect = ADDREP_OK) {
  char* out = nullptr;
  addrep_status st = addrep_run(in, cmd, &out);
  REQUIRE(st == expect);
  if (st != ADDREP_OK) {
    CHECK(out == nullptr);
    return nullptr;
  }
  json j = json::parse(out);
  addrep_string_free(out);
  return j;
}

}  // namespace

TEST_CASE("version and error slot") {
  CHECK(std::string(addrep_version()) == "0.1.0");
  CHECK(addrep_run(nullptr, "report", nullptr) == ADDREP_E_USAGE);
  CHECK(std::strlen(addrep_last_error()) > 0);
}

TEST_CASE("report through setters") {
  addrep_input* in = addrep_input_new();
  REQUIRE(in);
  CHECK(addrep_input_set_field(in, 3, 1) == ADDREP_OK);
  CHECK(addrep_input_set_r(in, 1, "1") == ADDREP_OK);
  CHECK(addrep_input_set_m(in, 1) == ADDREP_OK);
  json j = run(in, "report");
  CHECK(std::string(addrep_last_error()).empty());
  CHECK(j["degree"] == 3);
  CHECK(j["swan"]["num"] == 1);
  CHECK(j["swan"]["den"] == 1);
  CHECK(j["verdict"] == "primitive");
  CHECK(j["curve"].is_null());

  CHECK(addrep_input_set_m(in, 3) == ADDREP_OK);
  run(in, "report", ADDREP_E_VALIDATION);
  CHECK(std::string(addrep_last_error()).find("prime to p") != std::string::npos);
  run(in, "nonsense", ADDREP_E_USAGE);
  addrep_input_free(in);
}

TEST_CASE("json input and subcommands") {
  addrep_input* in = nullptr;
  REQUIRE(addrep_input_from_json(R"({"p": 3, "f": 2, "e": 1, "R": ["1"], "m": 2})", &in) == ADDREP_OK);
  json q = run(in, "quotient");
  CHECK(q["verdict"] == "imprimitive");
  CHECK(q["induction"]["e_prime"] == 0);
  CHECK(q["induction"]["fprime_degree"] == 3);
  CHECK(q["induction"]["morphism_ok"] == true);
  json a = run(in, "anisotropy");
  CHECK(a["symplectic"]["anisotropic"] == false);
  json pr = run(in, "prime");
  CHECK(pr["E_R_prime"] == false);
  addrep_input_free(in);

  CHECK(addrep_input_from_json("{\"p\": 3, \"bogus\": 1}", &in) == ADDREP_E_VALIDATION);
  CHECK(in == nullptr);
  CHECK(addrep_input_from_json("not json", &in) == ADDREP_E_VALIDATION);
}

TEST_CASE("swan") {
  int64_t num = 0, den = 0;
  for (uint64_t m = 1; m <= 3; ++m) {
    REQUIRE(addrep_swan(3, 1, 4, m, &num, &den) == ADDREP_OK);
    CHECK(num == (int64_t)m);
    CHECK(den == 1);
  }
  CHECK(addrep_swan(3, 1, 3, 1, &num, &den) == ADDREP_E_VALIDATION);
  addrep_input* in = addrep_input_new();
  addrep_input_set_field(in, 3, 1);
  addrep_input_set_e(in, 1);
  addrep_input_set_dr(in, 4);
  addrep_input_set_m(in, 3);
  json s = run(in, "swan");
  CHECK(s["swan"] == 3);
  addrep_input_free(in);
}

TEST_CASE("count and determinism across threads") {
  std::string out1, out4;
  for (uint32_t t : {1u, 4u}) {
    addrep_input* in = addrep_input_new();
    addrep_input_set_field(in, 3, 2);
    addrep_input_set_r(in, 1, "1");
    addrep_input_set_curve(in, 1, 0);
    addrep_input_set_threads(in, t);
    char* out = nullptr;
    REQUIRE(addrep_run(in, "report", &out) == ADDREP_OK);
    (t == 1 ? out1 : out4) = out;
    addrep_string_free(out);
    addrep_input_free(in);
  }
  CHECK(out1 == out4);
  json j = json::parse(out1);
  CHECK(j["curve"]["genus"] == 3);
  CHECK(j["curve"]["supersingular"] == true);
}

TEST_CASE("last error is per thread") {
  addrep_input* in = addrep_input_new();
  run(in, "report", ADDREP_E_VALIDATION);
  std::string other;
  std::thread th([&] { other = addrep_last_error(); });
  th.join();
  CHECK(other.empty());
  CHECK_FALSE(std::string(addrep_last_error()).empty());
  addrep_input_free(in);
}
