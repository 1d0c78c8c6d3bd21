#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "addrep/errors.hpp"
#include "addrep/sympmod.hpp"
#include "support.hpp"

using namespace addrep;
using namespace testsupport;

namespace {

AdditivePoly monomial(const Field& F, unsigned e, const Fe* c = nullptr) {
  return AdditivePoly::frob_monomial(F, e, c);
}

std::vector<AdditivePoly> all_e1_over_f3() {
  Field F3 = field_create(3, 1);
  std::vector<AdditivePoly> out;
  for (int a0 = 0; a0 < 3; ++a0)
    for (int a1 = 1; a1 < 3; ++a1) out.push_back(AdditivePoly(F3, {Fe::constant(F3, a0), Fe::constant(F3, a1)}));
  return out;
}

}  // namespace

TEST_CASE("build: basic shapes") {
  Field F3 = field_create(3, 1), F9 = field_create(3, 2);
  SympModule Z = build(AdditivePoly(F3, {Fe::one(F3)}), 1);
  CHECK(Z.dim == 0);
  CHECK(completely_anisotropic(Z).anisotropic);

  SympModule M = build(monomial(F9, 1), 1);
  CHECK(M.dim == 2);
  CHECK(M.d == 4);
  CHECK(rank(M.gram) == 2);
  // every element of V_R is a root of x^9 + x
  for (auto& b : M.parts[0].elems) CHECK((b.pow(9) + b).is_zero());

  SympModule N = build(monomial(F3, 1), 1);
  CHECK(N.dim == 2);
  CHECK(N.ambient->n() % 2 == 0);
  CHECK(N.T.pow(4) == FpMat::identity(3, 2));
}

TEST_CASE("omega agrees with f_R pointwise and is alternating") {
  std::mt19937_64 rng(21);
  for (auto [p, n, e] : {std::tuple{3u, 1u, 2u}, {5u, 1u, 1u}, {3u, 2u, 1u}, {2u, 1u, 2u}}) {
    Field F = field_create(p, n);
    SympModule M = build(random_r(F, e, rng), 1);
    const auto& el = M.parts[0].elems;
    for (std::size_t i = 0; i < M.dim; ++i)
      for (std::size_t j = 0; j < M.dim; ++j) {
        Fe w = f_r_eval(M.parts[0].Ra, el[i], el[j]) - f_r_eval(M.parts[0].Ra, el[j], el[i]);
        CHECK(w == Fe::constant(M.ambient, M.gram.at(i, j)));
      }
    for (int t = 0; t < 20; ++t) {
      Vec v(M.dim), w(M.dim);
      for (auto& c : v) c = rng() % p;
      for (auto& c : w) c = rng() % p;
      CHECK(omega(M, v, v) == 0);
      CHECK((omega(M, v, w) + omega(M, w, v)) % p == 0);
      Fe x = element_of(M, v);
      CHECK(coords_of(M, x) == v);
    }
  }
}

TEST_CASE("anisotropy examples") {
  Field F3 = field_create(3, 1), F9 = field_create(3, 2);
  SympModule M = build(monomial(F9, 1), 2);
  CHECK(M.d == 2);
  Anisotropy a = completely_anisotropic(M);
  CHECK_FALSE(a.anisotropic);
  REQUIRE(a.witness);
  CHECK(a.witness->dim() == 1);
  Fe b = element_of(M, a.witness->basis.row(0));
  CHECK(b.frob(2) == -b);

  auto dec = decomposition_route(M);
  REQUIRE(dec);
  CHECK(dec->f2.e() == 1);
  CHECK(compose(dec->f1, dec->f2) == e_r(monomial(F9, 1)));
  // f2 = x^3 - beta^2 x for beta spanning V_{f2}
  Fe bd = element_of(M, dec->W.basis.row(0));
  Fe b2 = bd * bd;
  CHECK(dec->f2.base_change(Embedding(F9, M.ambient)).coef(0) == -b2);

  SympModule P = build(monomial(F3, 1), 1);
  CHECK(completely_anisotropic(P).anisotropic);
  CHECK_FALSE(decomposition_route(P).has_value());
}

TEST_CASE("cyclic scan agrees with the exhaustive oracle and the Ore route") {
  for (auto& R : all_e1_over_f3())
    for (u64 m : {1u, 2u, 4u}) {
      SympModule M = build(R, m);
      Anisotropy a = completely_anisotropic(M), b = completely_anisotropic_exhaustive(M);
      CHECK(a.anisotropic == b.anisotropic);
      if (!a.anisotropic) CHECK(a.witness->basis == b.witness->basis);
      auto dec = decomposition_route(M);
      CHECK(a.anisotropic == !dec.has_value());
      if (dec) CHECK((std::size_t)dec->f2.e() == a.witness->dim());
    }
  std::mt19937_64 rng(22);
  int done = 0;
  for (int t = 0; t < 40 && done < 8; ++t) {
    Field F = field_create(3, 1 + (unsigned)(rng() % 2));
    AdditivePoly R = random_r(F, 2, rng);
    u64 m = std::vector<u64>{1, 2, 5, 10}[rng() % 4];
    SympModule M;
    try {
      M = build(R, m);
    } catch (const GuardExceeded&) {
      continue;
    }
    Anisotropy a = completely_anisotropic(M), b = completely_anisotropic_exhaustive(M);
    CHECK(a.anisotropic == b.anisotropic);
    if (!a.anisotropic) CHECK(a.witness->basis == b.witness->basis);
    auto dec = decomposition_route(M);
    CHECK(a.anisotropic == !dec.has_value());
    auto fb = decomposition_route(M, 0);
    CHECK(dec.has_value() == fb.has_value());
    if (dec) {
      CHECK(fb->by_fallback);
      CHECK(dec->f2.e() == fb->f2.e());
      CHECK(compose(fb->f1, fb->f2) == e_r(R));
    }
    ++done;
  }
  CHECK(done >= 5);
}

TEST_CASE("witness is a totally isotropic H-submodule") {
  std::mt19937_64 rng(23);
  Field F9 = field_create(3, 2);
  for (int t = 0; t < 10; ++t) {
    SympModule M = build(random_r(F9, 1, rng), 2);
    Anisotropy a = completely_anisotropic(M);
    if (a.anisotropic) continue;
    CHECK(a.witness->t_stable);
    CHECK(a.witness->s_stable);
    CHECK(a.witness->isotropic);
    Submodule P = perp(M, a.witness->basis);
    CHECK(P.dim() + a.witness->dim() == M.dim);
    // W inside its perp
    FpMat both = FpMat::from_rows(3, [&] {
      auto r = P.basis.row_list();
      for (auto& v : a.witness->basis.row_list()) r.push_back(v);
      return r;
    }(), M.dim);
    CHECK(rank(both) == P.dim());
    CHECK(perp(M, P.basis).basis == a.witness->basis);
  }
}

TEST_CASE("perp of trivial subspaces") {
  Field F3 = field_create(3, 1);
  SympModule M = build(AdditivePoly(F3, {Fe::one(F3), Fe::one(F3), Fe::one(F3)}), 1);
  CHECK(perp(M, FpMat::identity(3, M.dim)).dim() == 0);
  CHECK(perp(M, FpMat(3, 0, M.dim)).dim() == M.dim);
}

TEST_CASE("generator choice does not change the verdict") {
  for (auto& R : all_e1_over_f3()) {
    SympModule M = build(R, 1);
    SympModule N = M;
    N.T = M.T.pow(3);  // another generator of mu_4
    CHECK(completely_anisotropic(M).anisotropic == completely_anisotropic(N).anisotropic);
  }
}

TEST_CASE("direct sums and restriction") {
  Field F3 = field_create(3, 1);
  SympModule M = build(monomial(F3, 1), 1);
  SympModule Z = build(AdditivePoly(F3, {Fe::one(F3)}), 1);
  SympModule S = direct_sum(M, Z);
  CHECK(S.gram == M.gram);
  CHECK(restrict_sigma(M, 1).S == M.S);
  SympModule other = build(AdditivePoly(F3, {Fe::one(F3), Fe::one(F3)}), 2);
  CHECK_THROWS_AS(direct_sum(M, other), ValidationError);
}

TEST_CASE("Legendre example, p = 3 and 5") {
  for (unsigned p : {3u, 5u}) {
    Field F = field_create(p, 1);
    for (unsigned a = 1; a < p; ++a) {
      Fe ca = Fe::constant(F, a);
      SympModule M1 = build(monomial(F, 1), 1, 4);
      SympModule M2 = build(monomial(F, 1, &ca), p + 2, 4);
      REQUIRE(M1.d == p + 1);
      REQUIRE(M2.d == p + 1);
      bool aniso = completely_anisotropic(direct_sum(M1, M2)).anisotropic;
      CHECK(aniso == (legendre(-(i64)a, p) == -1));
    }
  }
}

TEST_CASE("minimal unramified degree") {
  Field F3 = field_create(3, 1), F9 = field_create(3, 2);
  SympModule M = build(monomial(F3, 1), 2);
  REQUIRE(M.d == 2);
  unsigned t = minimal_imprimitive_unramified_degree(M);
  CHECK(t >= 1);
  CHECK(t <= 2);
  CHECK_FALSE(completely_anisotropic(restrict_sigma(M, t)).anisotropic);
  for (unsigned s = 1; s < t; ++s) CHECK(completely_anisotropic(restrict_sigma(M, s)).anisotropic);
  CHECK(minimal_imprimitive_unramified_degree(build(monomial(F9, 1), 2)) == 1);
  CHECK_THROWS_AS(minimal_imprimitive_unramified_degree(build(monomial(F3, 1), 1)), ValidationError);
}

TEST_CASE("m divisible by p is rejected") {
  Field F3 = field_create(3, 1);
  CHECK_THROWS_AS(build(monomial(F3, 1), 3), ValidationError);
}
