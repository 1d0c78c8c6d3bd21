#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "addrep/errors.hpp"
#include "addrep/rootsys.hpp"
#include "support.hpp"

using namespace addrep;
using namespace testsupport;

TEST_CASE("invariants: small cases") {
  Field F9 = field_create(3, 2);
  RootSystem triv{Fe::one(F9), Fe::one(F9), 1};
  RSInvariants t = invariants(triv);
  CHECK(t == RSInvariants{1, 1, 0, 1, 1});
  CHECK(belongs(triv, 4, 2));

  RootSystem W{canonical_root_of_unity(F9, 4), -Fe::one(F9), 1};
  RSInvariants i = invariants(W);
  CHECK(i.a == 2);
  CHECK(i.b == 1);
  CHECK(i.c == 1);
  CHECK(i.e_prime == 4);
  CHECK(i.f_prime == 2);
  CHECK(classify(W).type == 'A');
  CHECK(classify(W).structures == 2);
  CHECK_FALSE(belongs(W, 2, 2));  // e' = 4 does not divide 2
  CHECK_THROWS_AS(belongs(W, 4, 1), ValidationError);  // 3 != 1 mod 4
}

TEST_CASE("invariants are constant on orbits") {
  std::mt19937_64 rng(41);
  for (auto [p, n, f] : {std::tuple{3u, 4u, 1u}, {3u, 4u, 2u}, {5u, 2u, 1u}, {2u, 6u, 2u}, {3u, 6u, 3u}}) {
    Field F = field_create(p, n);
    for (int t = 0; t < 5; ++t) {
      RootSystem W{random_nonzero(F, rng), random_nonzero(F, rng), f};
      RSInvariants base = invariants(W);
      RootSystem th{W.alpha.frob(1), W.beta.frob(1), f};
      RootSystem sg{W.alpha.frob(n - f % n), W.beta, f};
      CHECK(invariants(th) == base);
      CHECK(invariants(sg) == base);
      CHECK(same_orbit(W, th.alpha, th.beta));
      CHECK(same_orbit(W, sg.alpha, sg.beta));
      CHECK(classify(th).type == classify(W).type);
    }
  }
}

TEST_CASE("no symplectic case") {
  Field F7 = field_create(7, 1);
  RootSystem W{Fe::one(F7), Fe::constant(F7, 2), 1};  // 2 has order 3 mod 7
  RSInvariants i = invariants(W);
  CHECK(i.a == 1);
  CHECK(i.b == 1);
  CHECK(classify(W).type == 0);
  CHECK(type_name(classify(W).type) == "none");
}

TEST_CASE("monomial case: formula, scan, type prediction, module relations") {
  std::mt19937_64 rng(42);
  for (unsigned f : {1u, 2u, 4u})
    for (unsigned e : {1u, 2u, 3u}) {
      Field F = field_create(3, f);
      for (int t = 0; t < 2; ++t) {
        Fe ae = t == 0 ? Fe::one(F) : random_nonzero(F, rng);
        AdditivePoly R = AdditivePoly::frob_monomial(F, e, &ae);
        MonomialRootSystem mr = monomial_root_system(R, 1);
        CHECK(mr.formula == mr.brute);
        CHECK(mr.brute.a * mr.brute.b == 2 * e);
        CHECK(mr.cls.type == mr.predicted);
        if (v2(e) >= v2(f)) CHECK(mr.beta_q == -Fe::one(F));
        SympModule M;
        try {
          M = build(R, 1);
        } catch (const GuardExceeded&) {
          continue;  // V_R needs a field beyond 2^40
        }
        CHECK(belongs(mr.W, M.d, M.r));
        CHECK(matches_vr(M, mr));
      }
    }
}

TEST_CASE("monomial examples") {
  Field F3 = field_create(3, 1), F9 = field_create(3, 2), F81 = field_create(3, 4);
  MonomialRootSystem a = monomial_root_system(AdditivePoly::frob_monomial(F3, 1), 1);
  CHECK(a.e1 == 1);
  CHECK(a.brute == RSInvariants{2, 1, 1, 4, 2});
  CHECK(a.cls.type == 'A');
  CHECK(nu_label(a) == "n/a");

  MonomialRootSystem b = monomial_root_system(AdditivePoly::frob_monomial(F81, 3), 1);
  CHECK(b.e1 == 2);
  CHECK(b.brute.a == 3);
  CHECK(b.brute.b == 2);
  CHECK(b.brute.c == 2);
  CHECK(b.cls.type == 'B');
  CHECK(nu_label(b) == "(M(W),0)");

  // f = 2, e = 1: 2c = 2 (mod 2) gives c = 0, so type B
  MonomialRootSystem c = monomial_root_system(AdditivePoly::frob_monomial(F9, 1), 1);
  CHECK(c.brute.a == 1);
  CHECK(c.brute.b == 2);
  CHECK(c.brute.c == 0);
  CHECK(c.cls.type == 'B');
}

TEST_CASE("monomial preconditions") {
  Field F3 = field_create(3, 1);
  // d_{R,2} = 2 and F_3(mu_2) = F_3
  CHECK_THROWS_AS(monomial_root_system(AdditivePoly::frob_monomial(F3, 1), 2), ValidationError);
  AdditivePoly nm(F3, {Fe::one(F3), Fe::one(F3)});
  CHECK_THROWS_AS(monomial_root_system(nm, 1), ValidationError);
  SympModule M = build(nm, 1);
  MonomialRootSystem a = monomial_root_system(AdditivePoly::frob_monomial(F3, 1), 1);
  CHECK_THROWS_AS(matches_vr(M, a), ValidationError);
}

TEST_CASE("doubled type A in the Legendre configuration") {
  Field F3 = field_create(3, 1);
  for (unsigned a = 1; a < 3; ++a) {
    Fe ca = Fe::constant(F3, a);
    AdditivePoly R1 = AdditivePoly::frob_monomial(F3, 1), R2 = AdditivePoly::frob_monomial(F3, 1, &ca);
    bool aniso = completely_anisotropic(direct_sum(build(R1, 1, 4), build(R2, 5, 4))).anisotropic;
    std::string label = nu_label_pair(monomial_root_system(R1, 1), monomial_root_system(R2, 5), aniso);
    CHECK(label == (aniso ? "(M(W),2)" : "n/a"));
    CHECK(aniso == (legendre(-(i64)a, 3) == -1));
  }
}
