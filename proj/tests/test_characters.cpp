#include <doctest.h>

#include <random>

#include "grpaudit/characters.hpp"
#include "grpaudit/fitting.hpp"
#include "grpaudit/lattice.hpp"
#include "grpaudit/modular.hpp"
#include "helpers.hpp"

using namespace grpaudit;
using namespace testing_support;

namespace {

std::vector<std::uint64_t> sorted_degrees(const CharacterTable& t) {
  std::vector<std::uint64_t> d = t.degrees;
  std::sort(d.begin(), d.end());
  return d;
}

CharacterTable table_of(const PermGroup& g) { return character_table(ambient(g)->whole()); }

std::vector<PermGroup> table_groups() {
  return {zoo::cyclic(1),
          zoo::cyclic(3),
          zoo::cyclic(12),
          zoo::symmetric(3),
          zoo::symmetric(4),
          zoo::alternating(4),
          zoo::alternating(5),
          zoo::symmetric(5),
          zoo::dihedral(5),
          zoo::sl2(3),
          zoo::gl2(3),
          zoo::affine_line(7, 3),
          zoo::affine_line(8, 7),
          zoo::extraspecial_27({}),
          zoo::extraspecial_27(zoo::q8_in_sl2_3()),
          zoo::psl2(7),
          zoo::direct_product(zoo::cyclic(2), zoo::symmetric(3)),
          zoo::wreath_cyclic(zoo::cyclic(2), 3)};
}

}  // namespace

TEST_CASE("modular linear algebra") {
  modular::Field f(1000003);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> dist(0, f.l - 1);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 1 + static_cast<std::size_t>(trial % 7);
    modular::Mat a(n, modular::Vec(n));
    for (auto& row : a)
      for (auto& x : row) x = trial % 3 == 0 ? dist(rng) % 3 : dist(rng);
    auto p = modular::char_poly(f, a);
    REQUIRE(p.size() == n + 1);
    CHECK(p.back() == 1);
    auto zero = modular::poly_of_matrix(f, p, a);
    for (const auto& row : zero)
      for (auto x : row) CHECK(x == 0);
  }
  // (x - 3)(x - 5)^2 (x - 11)
  std::vector<std::uint64_t> want{3, 5, 11};
  modular::Poly prod{1};
  for (std::uint64_t r : {3ULL, 5ULL, 5ULL, 11ULL}) {
    modular::Poly next(prod.size() + 1, 0);
    for (std::size_t i = 0; i < prod.size(); ++i) {
      next[i + 1] = f.add(next[i + 1], prod[i]);
      next[i] = f.sub(next[i], f.mul(r, prod[i]));
    }
    prod = next;
  }
  CHECK(modular::distinct_roots(f, prod, rng) == want);
  CHECK(modular::find_prime(12, 100) == 109);
  auto z = modular::Field(109).root_of_unity(12);
  CHECK(modular::Field(109).pow(z, 12) == 1);
  CHECK(modular::Field(109).pow(z, 6) != 1);
  CHECK(modular::Field(109).pow(z, 4) != 1);
}

TEST_CASE("cyclotomic integers") {
  auto z = Cyclotomic::root(6, 1);
  auto sum = Cyclotomic::integer(6, 0);
  for (std::uint32_t t = 0; t < 6; ++t) sum = sum + Cyclotomic::root(6, t);
  CHECK(std::abs(sum.to_complex()) < 1e-12);
  CHECK(sum.reduce(7, 3) == 0);  // 3 has order 6 mod 7
  CHECK((z * z.conj()).reduce(7, 3) == 1);
  CHECK(std::abs((z * z * z).to_complex() + 1.0) < 1e-12);
  CHECK(z.galois(5).coeffs() == z.conj().coeffs());
}

TEST_CASE("character table degrees") {
  CHECK(sorted_degrees(table_of(zoo::symmetric(4))) == std::vector<std::uint64_t>{1, 1, 2, 3, 3});
  CHECK(sorted_degrees(table_of(zoo::affine_line(7, 3))) == std::vector<std::uint64_t>{1, 1, 1, 3, 3});
  CHECK(sorted_degrees(table_of(zoo::alternating(5))) == std::vector<std::uint64_t>{1, 3, 3, 4, 5});
  CHECK(sorted_degrees(table_of(zoo::psl2(7))) == std::vector<std::uint64_t>{1, 3, 3, 6, 7, 8});
  CHECK(sorted_degrees(table_of(zoo::sl2(3))) == std::vector<std::uint64_t>{1, 1, 1, 2, 2, 2, 3});

  auto c3 = table_of(zoo::cyclic(3));
  REQUIRE(c3.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(c3.degrees[i] == 1);
    for (std::size_t s = 0; s < 3; ++s) {
      auto v = c3.values[i][s].to_complex();
      CHECK(std::abs(std::pow(v, 3) - 1.0) < 1e-9);
    }
  }
  // The trivial character comes first.
  for (std::size_t s = 0; s < 3; ++s) CHECK(c3.values[0][s].coeffs()[0] == 1);
}

TEST_CASE("table invariants") {
  for (const auto& g : table_groups()) {
    auto t = table_of(g);
    auto c = verify_table(t);
    CHECK(c.row_count);
    CHECK(c.degrees_at_identity);
    CHECK(c.sum_of_squares);
    CHECK(c.row_orthogonality);
    CHECK(c.column_orthogonality);
    CHECK(c.float_agreement);
    CHECK(t.ell1 > 4 * t.order * t.order);
    CHECK((t.ell1 - 1) % t.exponent == 0);
    CHECK((t.ell2 - 1) % t.exponent == 0);
    CHECK(t.ell2 != t.ell1);
  }
}

TEST_CASE("tables are deterministic") {
  auto a = table_to_json(table_of(zoo::gl2(3)));
  auto b = table_to_json(table_of(zoo::gl2(3)));
  CHECK(a.dump() == b.dump());
  for (std::uint64_t seed : {1ULL, 2ULL, 12345ULL}) {
    auto amb = ambient(zoo::psl2(7));
    auto base = table_to_json(character_table(amb->whole())).dump();
    CHECK(table_to_json(character_table(amb->whole(), {}, seed)).dump() == base);
  }
}

TEST_CASE("character cap") {
  Caps caps;
  caps.character_cap = 50;
  auto amb = ambient(zoo::alternating(5), caps);
  CHECK_THROWS_AS(character_table(amb->whole()), CapExceeded);
  Caps cls;
  cls.character_class_cap = 4;
  CHECK_THROWS_AS(character_table(ambient(zoo::alternating(5), cls)->whole()), CapExceeded);
}

TEST_CASE("defect zero") {
  auto a5 = table_of(zoo::alternating(5));
  for (std::size_t chi = 0; chi < a5.size(); ++chi)
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL}) {
      auto v = has_p_defect_zero(a5, chi, p);
      CHECK(v.agree());
      if (a5.degrees[chi] == 5 && p == 5) CHECK(v.by_degree);
      if (a5.degrees[chi] == 1) CHECK_FALSE(v.by_degree);
    }
  auto s4 = table_of(zoo::symmetric(4));
  for (std::size_t chi = 0; chi < s4.size(); ++chi) {
    auto v = has_p_defect_zero(s4, chi, 2);
    CHECK(v.agree());
    if (s4.degrees[chi] == 2) {
      CHECK_FALSE(v.by_degree);
      CHECK_FALSE(v.vanishes_on_p_singular);
    }
  }
  for (const auto& g : table_groups()) {
    auto t = table_of(g);
    for (std::size_t chi = 0; chi < t.size(); ++chi)
      for (auto p : prime_divisors(t.order)) CHECK(has_p_defect_zero(t, chi, p).agree());
  }
}

TEST_CASE("multiplicative characters") {
  auto f21 = table_of(zoo::affine_line(7, 3));
  for (std::size_t chi = 0; chi < f21.size(); ++chi) {
    auto v = is_multiplicative(f21, chi);
    CHECK(v.multiplicative);
    if (f21.degrees[chi] == 3) CHECK(vanishes_off(f21, chi, p_core(f21.group, 7)));
  }
  auto s4 = table_of(zoo::symmetric(4));
  for (std::size_t chi = 0; chi < s4.size(); ++chi) {
    auto v = is_multiplicative(s4, chi);
    if (s4.degrees[chi] == 1) CHECK(v.multiplicative);
    if (s4.degrees[chi] == 3) {
      CHECK_FALSE(v.multiplicative);
      REQUIRE(v.witness);
      auto [x, y] = *v.witness;
      CHECK(std::gcd(x.order(), y.order()) == 1);
    }
  }
}

TEST_CASE("vanishes_off") {
  auto ex = ambient(zoo::extraspecial_27({}));
  auto t = character_table(ex->whole());
  auto z = center(ex->whole());
  for (std::size_t chi = 0; chi < t.size(); ++chi) {
    CHECK(vanishes_off(t, chi, ex->whole()));
    CHECK(vanishes_off(t, chi, z) == (t.degrees[chi] == 3));
  }
  auto c4 = ambient(zoo::cyclic(4));
  auto tc = character_table(c4->whole());
  auto c2 = sub(c4, {"(1,3)(2,4)"});
  for (std::size_t chi = 0; chi < tc.size(); ++chi) CHECK_FALSE(vanishes_off(tc, chi, c2));
}

TEST_CASE("multiplicative characters and cores") {
  auto f21 = table_of(zoo::affine_line(7, 3));
  for (const auto& v : multiplicative_character_check(f21)) {
    CHECK(v.ok());
    CHECK(v.multiplicative);
    CHECK(v.vanishing_prime == 7);
    CHECK(f21.order / v.degree == 7);
  }
  auto s4 = table_of(zoo::symmetric(4));
  for (const auto& v : multiplicative_character_check(s4)) {
    CHECK(v.ok());
    if (v.degree == 3) {
      CHECK_FALSE(v.multiplicative);
      CHECK_FALSE(v.vanishing_prime);
    }
  }
  auto ex = table_of(zoo::extraspecial_27({}));
  for (const auto& v : multiplicative_character_check(ex)) {
    CHECK(v.ok());
    CHECK(v.multiplicative);
    CHECK(v.vanishing_prime == 3);
  }
  for (const auto& g : table_groups())
    for (const auto& v : multiplicative_character_check(table_of(g))) CHECK(v.ok());
}

TEST_CASE("product lemma") {
  for (const auto& g : table_groups()) {
    auto t = table_of(g);
    auto v = product_lemma_check(t);
    CHECK(v.ok());
    CHECK(v.class_pairs == t.class_count() * t.class_count());
    CHECK(v.constant_instances >= t.size());  // A = B = {1}
  }
  auto c6 = table_of(zoo::cyclic(6));
  auto v = product_lemma_check(c6);
  CHECK(v.constant_instances == 36 * 6);
  CHECK(v.ok());
}

TEST_CASE("table export") {
  auto j = table_to_json(table_of(zoo::symmetric(3)));
  CHECK(j["order"] == 6);
  CHECK(j["classes"].size() == 3);
  CHECK(j["rows"].size() == 3);
  CHECK(j["rows"][0]["degree"] == 1);
  CHECK(j["classes"][0]["representative"] == "()");
}
