#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "addrep/errors.hpp"
#include "support.hpp"

using namespace addrep;
using namespace testsupport;

namespace {

// Independent irreducibility oracle for degree <= 3: no root in F_p.
bool no_root_mod_p(const std::vector<Coord>& f, unsigned p) {
  for (unsigned x = 0; x < p; ++x) {
    u64 v = 0, xp = 1;
    for (auto c : f) {
      v = (v + c * xp) % p;
      xp = xp * x % p;
    }
    if (v == 0) return false;
  }
  return true;
}

std::vector<Coord> first_irreducible_low_degree(unsigned p, unsigned n) {
  u64 count = 1;
  for (unsigned i = 0; i < n; ++i) count *= p;
  std::vector<Coord> f(n + 1, 0);
  f[n] = 1;
  for (u64 idx = 0; idx < count; ++idx) {
    u64 v = idx;
    for (unsigned i = n; i-- > 0;) {
      f[i] = (Coord)(v % p);
      v /= p;
    }
    if (no_root_mod_p(f, p)) return f;
  }
  return {};
}

std::vector<Fe> all_elements(const Field& F) {
  std::vector<Fe> out;
  for (u64 i = 0; i < F->order(); ++i) out.push_back(Fe::from_index(F, i));
  return out;
}

}  // namespace

TEST_CASE("field_create: canonical moduli") {
  CHECK(field_create(3, 1)->modulus() == std::vector<Coord>{0, 1});
  CHECK(field_create(3, 2)->modulus() == std::vector<Coord>{1, 0, 1});
  CHECK(field_create(2, 2)->modulus() == std::vector<Coord>{1, 1, 1});
  for (unsigned p : {2u, 3u, 5u, 7u})
    for (unsigned n : {2u, 3u}) CHECK(field_create(p, n)->modulus() == first_irreducible_low_degree(p, n));
  CHECK_THROWS_AS(field_create(4, 1), ValidationError);
  CHECK_THROWS_AS(field_create(3, 0), ValidationError);
  CHECK_THROWS_AS(field_create(2, 41), GuardExceeded);
}

TEST_CASE("field_create: every nonzero element is invertible (irreducibility)") {
  for (auto [p, n] : {std::pair{2u, 4u}, {3u, 4u}, {3u, 3u}, {5u, 2u}, {2u, 6u}}) {
    Field F = field_create(p, n);
    auto el = all_elements(F);
    for (std::size_t i = 1; i < el.size(); ++i) {
      bool found = false;
      for (std::size_t j = 1; j < el.size() && !found; ++j) found = (el[i] * el[j]).is_one();
      CHECK(found);
    }
  }
}

TEST_CASE("modulus passes the gcd irreducibility test for larger degrees") {
  for (unsigned n = 1; n <= 12; ++n) CHECK(is_irreducible_fp(field_create(3, n)->modulus(), 3));
  CHECK_FALSE(is_irreducible_fp({1, 0, 1}, 2));  // (x+1)^2
  CHECK_FALSE(is_irreducible_fp({2, 0, 1}, 3));  // x^2 - 1
}

TEST_CASE("frobenius") {
  std::mt19937_64 rng(1);
  Field F9 = field_create(3, 2);
  for (int t = 0; t < 20; ++t) {
    Fe x = random_fe(F9, rng);
    CHECK(x.frob(1) == naive_pow(x, 3));
    CHECK(x.frob(2) == x);
    CHECK(x.pow(7) == naive_pow(x, 7));
  }
  CHECK(Fe::zero(F9).frob(5).is_zero());
  // fixed field of x -> x^{p^k} has p^{gcd(k,n)} elements
  for (auto [p, n] : {std::pair{3u, 4u}, {2u, 6u}, {3u, 3u}}) {
    Field F = field_create(p, n);
    auto el = all_elements(F);
    for (unsigned k = 1; k <= n; ++k) {
      u64 fixed = 0;
      for (auto& x : el) fixed += x.frob(k) == x;
      CHECK(fixed == checked_pow(p, (unsigned)gcd_u(k, n)));
    }
    std::mt19937_64 r2(p * 100 + n);
    for (int t = 0; t < 20; ++t) {
      Fe a = random_fe(F, r2), b = random_fe(F, r2);
      CHECK((a + b).frob(1) == a.frob(1) + b.frob(1));
      CHECK((a * b).frob(1) == a.frob(1) * b.frob(1));
    }
  }
}

TEST_CASE("norm_trace") {
  Field F9 = field_create(3, 2);
  auto [n1, t1] = norm_trace(Fe::one(F9), 1);
  CHECK(n1 == Fe::one(F9));
  CHECK(t1 == Fe::constant(F9, 2));
  auto [n0, t0] = norm_trace(Fe::zero(F9), 1);
  CHECK(n0.is_zero());
  CHECK(t0.is_zero());
  Fe g = primitive_element(F9);
  CHECK(norm_trace(g, 1).first == g.pow(4));
  CHECK(norm_trace(g, 1).first == Fe::constant(F9, 2));
  CHECK_THROWS_AS(norm_trace(g, 3), ValidationError);

  std::mt19937_64 rng(2);
  Field F81 = field_create(3, 4);
  for (int t = 0; t < 30; ++t) {
    Fe x = random_fe(F81, rng), y = random_fe(F81, rng);
    for (unsigned s : {1u, 2u}) {
      auto [nx, tx] = norm_trace(x, s);
      auto [ny, ty] = norm_trace(y, s);
      CHECK(norm_trace(x * y, s).first == nx * ny);
      CHECK(norm_trace(x + y, s).second == tx + ty);
      CHECK(nx.frob(s) == nx);
      CHECK(tx.frob(s) == tx);
    }
  }
  for (unsigned n : {2u, 3u}) {
    Field F = field_create(3, n);
    std::set<u64> image;
    for (auto& x : all_elements(F)) image.insert(norm_trace(x, 1).second.index());
    CHECK(image.size() == 3);
  }
}

TEST_CASE("roots_of_unity") {
  Field F9 = field_create(3, 2);
  CHECK(roots_of_unity(F9, 1) == std::vector<Fe>{Fe::one(F9)});
  auto mu4 = roots_of_unity(F9, 4);
  CHECK(mu4.size() == 4);
  std::vector<Fe> brute;
  for (auto& x : all_elements(F9))
    if (!x.is_zero() && x.pow(4).is_one()) brute.push_back(x);
  CHECK(mu4 == brute);
  for (auto& z : mu4) CHECK((z * z == Fe::one(F9) || z * z == -Fe::one(F9)));
  Field F3 = field_create(3, 1);
  auto mu2 = roots_of_unity(F3, 2);
  CHECK(mu2 == std::vector<Fe>{Fe::constant(F3, 1), Fe::constant(F3, 2)});
  CHECK(element_order(canonical_root_of_unity(F9, 8)) == 8);
  CHECK_THROWS_AS(roots_of_unity(F9, 5), ValidationError);
}

TEST_CASE("multiplicative_order") {
  CHECK(multiplicative_order(3, 4) == 2);
  CHECK(multiplicative_order(7, 1) == 1);
  CHECK(multiplicative_order(3, 10) == 4);
  for (u64 d = 1; d < 200; ++d) {
    if (gcd_u(5, d) != 1) continue;
    u64 k = 1, v = 5 % d;
    while (v != 1 % d) {
      v = v * 5 % d;
      ++k;
    }
    CHECK(multiplicative_order(5, d) == k);
  }
  CHECK_THROWS_AS(multiplicative_order(3, 6), ValidationError);
}

TEST_CASE("embed") {
  Field F9 = field_create(3, 2), F81 = field_create(3, 4), F3 = field_create(3, 1);
  Embedding e(F9, F81);
  CHECK(e(Fe::one(F9)).is_one());
  CHECK(e(Fe::constant(F9, 2)) == Fe::constant(F81, 2));
  CHECK(embed(Fe::constant(F3, 2), F81) == Fe::constant(F81, 2));
  std::mt19937_64 rng(3);
  std::set<u64> images;
  for (auto& x : all_elements(F9)) images.insert(e(x).index());
  CHECK(images.size() == 9);
  for (int t = 0; t < 20; ++t) {
    Fe x = random_fe(F9, rng), y = random_fe(F9, rng);
    CHECK(e(x + y) == e(x) + e(y));
    CHECK(e(x * y) == e(x) * e(y));
    CHECK(e(x.frob(1)) == e(x).frob(1));
    // norm from F_81 to F_9 of an element of F_9 is its square
    CHECK(norm_trace(e(x), 2).first == e(x * x));
    CHECK(e.descend(e(x)) == x);
  }
  // the generator goes to the least root of its modulus
  Fe g = e(Fe::gen(F9));
  for (auto& z : all_elements(F81)) {
    if (z * z + Fe::one(F81) == Fe::zero(F81)) {
      CHECK(g <= z);
    }
  }
  CHECK_THROWS_AS(Embedding(F81, F9), ValidationError);
  CHECK_THROWS_AS(Embedding(field_create(3, 3), F81), ValidationError);
  Fe outside = Fe::gen(F81);
  CHECK_FALSE(e.in_image(outside));
  CHECK_THROWS_AS(e.descend(outside), ValidationError);
}

TEST_CASE("element text form") {
  Field F9 = field_create(3, 2);
  Fe x = Fe::from_coords(F9, {2, 1});
  CHECK(to_text(x) == "3^2:1,0,1:2,1");
  CHECK(fe_from_text("3^2:1,0,1:2,1") == x);
  CHECK(parse_element(F9, "2,1") == x);
  CHECK(parse_element(F9, "-1") == Fe::constant(F9, 2));
  CHECK_THROWS_AS(fe_from_text("3^2:2,0,1:2,1"), ValidationError);
  CHECK_THROWS_AS(parse_element(F9, "1,2,3"), ValidationError);
  CHECK_THROWS_AS(parse_element(F9, "a"), ValidationError);
}

TEST_CASE("split_roots and irreducibility over extension fields") {
  Field F9 = field_create(3, 2);
  // x^2 + 1 splits over F_9
  Poly f(F9, {Fe::one(F9), Fe::zero(F9), Fe::one(F9)});
  auto r = split_roots(f);
  CHECK(r.size() == 2);
  for (auto& z : r) CHECK(f.eval(z).is_zero());
  CHECK_FALSE(poly_is_irreducible(f));
  Field F3 = field_create(3, 1);
  CHECK(poly_is_irreducible(Poly(F3, {Fe::one(F3), Fe::zero(F3), Fe::one(F3)})));
  Field F4 = field_create(2, 2);
  Poly g(F4, {Fe::one(F4), Fe::one(F4), Fe::one(F4)});
  CHECK(split_roots(g).size() == 2);
  CHECK(roots_in_field(Poly(F3, {Fe::one(F3), Fe::zero(F3), Fe::one(F3)})).empty());
}
