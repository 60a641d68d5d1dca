#include <doctest.h>

#include <set>

#include "grpaudit/baer_suzuki.hpp"
#include "grpaudit/fitting.hpp"
#include "grpaudit/lattice.hpp"
#include "helpers.hpp"

using namespace grpaudit;
using namespace testing_support;

namespace {

std::vector<PermGroup> small_groups() {
  return {zoo::symmetric(3),
          zoo::symmetric(4),
          zoo::alternating(5),
          zoo::dihedral(7),
          zoo::sl2(3),
          zoo::gl2(3),
          zoo::affine_line(7, 3),
          zoo::direct_product(zoo::cyclic(3), zoo::symmetric(3)),
          zoo::direct_product(zoo::cyclic(2), zoo::symmetric(3)),
          zoo::extraspecial_27(zoo::c4_in_sl2_3()),
          zoo::psl2(7),
          zoo::wreath_cyclic(zoo::cyclic(2), 3)};
}

std::vector<std::uint64_t> primes_of(const Ambient& amb) { return prime_divisors(amb.size()); }

}  // namespace

TEST_CASE("p_decompose") {
  auto g = perm("(1,2)(3,4,5)", 5);
  auto d = p_decompose(g, 2);
  CHECK(d.g_p.order() == 2);
  CHECK(d.g_p_prime.order() == 3);
  CHECK(d.g_p * d.g_p_prime == g);
  CHECK(d.g_p_prime * d.g_p == g);

  auto t = perm("(1,2,3,4)", 6);
  auto dt = p_decompose(t, 2);
  CHECK(dt.g_p == t);
  CHECK(dt.g_p_prime.is_identity());

  auto c12 = perm("(1,2,3,4,5,6,7,8,9,10,11,12)", 12);
  auto d12 = p_decompose(c12, 3);
  CHECK(d12.g_p.order() == 3);
  CHECK(d12.g_p_prime.order() == 4);
  CHECK(d12.g_p * d12.g_p_prime == c12);
}

TEST_CASE("p_decompose is the unique commuting decomposition") {
  for (const auto& grp : {zoo::symmetric(4), zoo::gl2(3), zoo::direct_product(zoo::cyclic(3), zoo::symmetric(3)),
                          zoo::dihedral(15)}) {
    auto amb = ambient(grp);
    for (std::uint64_t p : primes_of(*amb)) {
      for (ElemId g = 0; g < amb->size(); ++g) {
        auto d = p_decompose(amb->element(g), p);
        REQUIRE(is_p_element(d.g_p, p));
        REQUIRE(is_p_regular(d.g_p_prime, p));
        ElemId gp = amb->id_of(d.g_p);
        for (ElemId a = 0; a < amb->size(); ++a) {
          if (!order_is_p_element(amb->order(a), p)) continue;
          ElemId b = amb->mul(amb->inv(a), g);
          if (!order_is_p_regular(amb->order(b), p) || amb->mul(a, b) != amb->mul(b, a)) continue;
          REQUIRE(a == gp);
        }
      }
    }
  }
}

TEST_CASE("element predicates") {
  auto id = Permutation::identity(5);
  CHECK(is_p_element(id, 3));
  CHECK(is_p_regular(id, 3));
  CHECK_FALSE(is_p_singular(id, 3));
  auto six = perm("(1,2)(3,4,5)", 5);
  CHECK(is_p_singular(six, 2));
  CHECK_FALSE(is_p_element(six, 2));
  CHECK_FALSE(is_p_regular(six, 3));
  auto gl = ambient(zoo::gl2(3));
  CHECK(is_p_element(gl->element(first_of_order(*gl, 8)), 2));
}

TEST_CASE("property_p1") {
  auto s4 = ambient(zoo::symmetric(4));
  ElemId t = s4->id_of(perm("(1,2)", 4));
  auto r = property_p1(s4->whole(), t, 2);
  CHECK_FALSE(r.hypothesis_holds);
  REQUIRE(r.witness);
  CHECK(r.witness->order() == 3);
  CHECK(commutator(s4->element(t), *r.witness).order() == 3);
  CHECK_FALSE(r.conclusion_holds);
  CHECK(r.implication_ok);

  // The commutator of a transposition with any 2'-element is a 3-element.
  for (ElemId g = 0; g < s4->size(); ++g)
    if (s4->order(g) % 2 == 1) CHECK(is_power_of(s4->order(s4->comm(t, g)), 3));

  ElemId v = s4->id_of(perm("(1,2)(3,4)", 4));
  auto in_core = property_p1(s4->whole(), v, 2);
  CHECK(in_core.hypothesis_holds);
  CHECK(in_core.conclusion_holds);

  auto d7 = ambient(zoo::dihedral(7));
  ElemId refl = first_of_order(*d7, 2);
  auto rd = property_p1(d7->whole(), refl, 2);
  CHECK_FALSE(rd.hypothesis_holds);
  REQUIRE(rd.witness);
  CHECK(rd.witness->order() == 7);
  CHECK(commutator(d7->element(refl), *rd.witness).order() == 7);
}

TEST_CASE("property_p2") {
  auto gl = ambient(zoo::gl2(3));
  auto trivial = property_p2(gl->whole(), Ambient::identity(), 2);
  CHECK(trivial.hypothesis_holds);
  CHECK(trivial.conclusion_holds);

  ElemId x = first_of_order(*gl, 8);
  auto r = property_p2(gl->whole(), x, 2);
  CHECK_FALSE(r.hypothesis_holds);
  CHECK_FALSE(r.conclusion_holds);
  REQUIRE(r.witness);
  CHECK(is_p_element(*r.witness, 2));
  auto xy = gl->element(x) * *r.witness;
  CHECK_FALSE(xy.is_identity());
  CHECK(is_p_regular(xy, 2));

  PrimeContext ctx(gl->whole(), 2);
  for (ElemId o : ctx.op.elements()) {
    auto ro = property_p2(ctx, o);
    CHECK(ro.hypothesis_holds);
    CHECK(ro.conclusion_holds);
  }
}

TEST_CASE("property_p3") {
  auto a5 = ambient(zoo::alternating(5));
  ElemId x = first_of_order(*a5, 5);
  auto r = property_p3(a5->whole(), x, 5);
  CHECK_FALSE(r.hypothesis_holds);
  CHECK_FALSE(r.conclusion_holds);
  CHECK(r.implication_ok);
  CHECK(r.converse_ok);
  bool three_witness = false;
  for (ElemId y = 0; y < a5->size(); ++y)
    if (a5->order(y) == 3 && a5->order(a5->mul(x, y)) % 3 != 0) three_witness = true;
  CHECK(three_witness);

  auto c8 = ambient(zoo::cyclic(8));
  for (ElemId g = 0; g < c8->size(); ++g) {
    auto rc = property_p3(c8->whole(), g, 2);
    CHECK(rc.hypothesis_holds);
    CHECK(rc.conclusion_holds);
  }

  auto s4 = ambient(zoo::symmetric(4));
  PrimeContext ctx(s4->whole(), 2);
  for (ElemId o : ctx.op.elements()) CHECK(property_p3(ctx, o).hypothesis_holds);
}

TEST_CASE("implications and biconditionals on every p-element class") {
  for (const auto& grp : small_groups()) {
    auto amb = ambient(grp);
    for (std::uint64_t p : primes_of(*amb)) {
      PrimeContext ctx(amb->whole(), p);
      for (ElemId x : ctx.classes->representatives()) {
        if (!order_is_p_element(amb->order(x), p)) continue;
        CHECK(property_p1(ctx, x).ok());
        CHECK(property_p2(ctx, x).ok());
        CHECK(property_p3(ctx, x).ok());
        CHECK(classical_baer_suzuki(ctx, x).ok());
      }
    }
  }
}

TEST_CASE("predicates are conjugation invariant") {
  for (const auto& grp : {zoo::symmetric(4), zoo::alternating(5), zoo::gl2(3), zoo::affine_line(7, 3)}) {
    auto amb = ambient(grp);
    for (std::uint64_t p : primes_of(*amb)) {
      PrimeContext ctx(amb->whole(), p);
      for (ElemId x : ctx.classes->representatives()) {
        if (!order_is_p_element(amb->order(x), p)) continue;
        auto r1 = property_p1(ctx, x), r2 = property_p2(ctx, x), r3 = property_p3(ctx, x);
        for (ElemId h = 1; h < amb->size(); h += 7) {
          ElemId y = amb->conj(x, h);
          CHECK(property_p1(ctx, y).hypothesis_holds == r1.hypothesis_holds);
          CHECK(property_p2(ctx, y).hypothesis_holds == r2.hypothesis_holds);
          CHECK(property_p3(ctx, y).hypothesis_holds == r3.hypothesis_holds);
          CHECK(property_p1(ctx, y).conclusion_holds == r1.conclusion_holds);
        }
      }
    }
  }
}

TEST_CASE("classical Baer-Suzuki spot values") {
  auto s4 = ambient(zoo::symmetric(4));
  PrimeContext ctx(s4->whole(), 2);
  auto t = classical_baer_suzuki(ctx, s4->id_of(perm("(1,2)", 4)));
  CHECK_FALSE(t.hypothesis_holds);
  REQUIRE(t.witness);
  // <(1,2), (1,2)^g> is S3 for the witness.
  auto y = conjugate(s4->element(s4->id_of(perm("(1,2)", 4))), *t.witness);
  CHECK((perm("(1,2)", 4) * y).order() == 3);
  auto v = classical_baer_suzuki(ctx, s4->id_of(perm("(1,3)(2,4)", 4)));
  CHECK(v.hypothesis_holds);
  CHECK(v.conclusion_holds);
}

TEST_CASE("Glauberman battery") {
  auto s4 = ambient(zoo::symmetric(4));
  auto b = glauberman_battery(s4->whole(), s4->id_of(perm("(1,2)", 4)), 2);
  CHECK(b.agree);
  for (const auto& item : b.items) {
    REQUIRE(item);
    CHECK_FALSE(*item);
  }
  CHECK(z_star_p(s4->whole(), 2).is_trivial());

  auto c3s3 = ambient(zoo::direct_product(zoo::cyclic(3), zoo::symmetric(3)));
  ElemId gen = c3s3->id_of(perm("(1,2,3)", 6));
  auto bc = glauberman_battery(c3s3->whole(), gen, 3);
  CHECK(bc.agree);
  for (const auto& item : bc.items) {
    REQUIRE(item);
    CHECK(*item);
  }

  auto gl = ambient(zoo::gl2(3));
  ElemId minus_one = center(gl->whole()).elements().at(1);
  auto bz = glauberman_battery(gl->whole(), minus_one, 2);
  for (const auto& item : bz.items) CHECK(item.value_or(false));

  for (const auto& grp : small_groups()) {
    auto amb = ambient(grp);
    for (std::uint64_t p : primes_of(*amb)) {
      PrimeContext ctx(amb->whole(), p);
      for (ElemId x : ctx.classes->representatives())
        if (order_is_p_element(amb->order(x), p)) CHECK(glauberman_battery(ctx, x).agree);
    }
  }
}

TEST_CASE("fusion item is skipped above the pair cap") {
  Caps caps;
  caps.pair_cap = 3;
  auto s4 = ambient(zoo::symmetric(4), caps);
  auto b = glauberman_battery(s4->whole(), s4->id_of(perm("(1,2)(3,4)", 4)), 2);
  CHECK_FALSE(b.items[2].has_value());
  CHECK(b.agree);
}

TEST_CASE("gamma_k") {
  auto a5 = ambient(zoo::alternating(5));
  ElemId x = first_of_order(*a5, 5);
  auto gamma = gamma_k(a5->whole(), x, 2);
  CHECK(gamma.elements.size() == 6);
  CHECK(gamma.contains(Ambient::identity()));
  const auto& cd = a5->classes();
  for (ElemId e : gamma.elements)
    if (e != Ambient::identity()) CHECK(cd.class_of[e] == cd.class_of[x]);
  CHECK(gamma_k(a5->whole(), x, 3).elements.size() == 6);

  auto l28 = ambient(zoo::psl2(8));
  ElemId y = first_of_order(*l28, 3);
  auto g2 = gamma_k(l28->whole(), y, 2);
  CHECK(g2.elements.size() == 28);
  std::size_t nines = 0;
  for (ElemId e : g2.elements) nines += l28->order(e) == 9;
  CHECK(nines == 27);
  CHECK(g2.contains(Ambient::identity()));

  auto c6 = ambient(zoo::cyclic(6));
  auto gc = gamma_k(c6->whole(), 1, 1);
  CHECK(gc.elements == std::vector<ElemId>{Ambient::identity()});

  // Gamma_1 is {[g,x]} directly.
  auto s4 = ambient(zoo::symmetric(4));
  ElemId t = s4->id_of(perm("(1,2,3)", 4));
  std::set<ElemId> direct;
  for (ElemId g = 0; g < s4->size(); ++g) direct.insert(s4->comm(g, t));
  auto g1 = gamma_k(s4->whole(), t, 1);
  CHECK(std::vector<ElemId>(direct.begin(), direct.end()) == g1.elements);
}

TEST_CASE("multicommutator scan") {
  auto l28 = ambient(zoo::psl2(8));
  PrimeContext ctx(l28->whole(), 3);
  auto reports = multicommutator_scan(ctx, 2);
  bool found = false;
  for (const auto& r : reports) {
    CHECK(r.status != "conjecture-violated");
    if (r.x_order == 3 && r.k == 2) {
      found = true;
      CHECK_FALSE(r.hypothesis_holds);
      REQUIRE(r.witness);
      REQUIRE(r.witness2);
      CHECK(r.witness->order() == 9);
      CHECK(r.witness2->order() == 9);
      CHECK_FALSE(is_p_element(*r.witness * *r.witness2, 3));
    }
  }
  CHECK(found);

  auto c12 = ambient(zoo::cyclic(12));
  PrimeContext cc(c12->whole(), 2);
  for (const auto& r : multicommutator_scan(cc, 3)) {
    CHECK(r.hypothesis_holds);
    CHECK(r.conclusion_holds);
  }
  for (const auto& r : multicommutator_scan(cc, 3, true)) CHECK(r.status == "hypothesis-met");

  for (const auto& grp : small_groups()) {
    auto amb = ambient(grp);
    for (std::uint64_t p : primes_of(*amb)) {
      PrimeContext pc(amb->whole(), p);
      for (const auto& r : multicommutator_scan(pc, 3)) {
        CHECK(r.status != "conjecture-violated");
        if (r.conclusion_holds) CHECK(r.implication_ok);
      }
    }
  }
}

TEST_CASE("commutator singularity scan") {
  auto gl = ambient(zoo::gl2(3));
  ElemId x = first_of_order(*gl, 8);
  std::set<std::uint64_t> orders;
  for (ElemId g = 0; g < gl->size(); ++g) orders.insert(gl->order(gl->comm(x, g)));
  CHECK(orders == std::set<std::uint64_t>{1, 4, 6});
  CHECK_FALSE(p_core(gl->whole(), 2).contains(x));

  PrimeContext ctx(gl->whole(), 2);
  bool recorded = false;
  for (const auto& r : commutator_singularity_scan(ctx)) {
    CHECK(r.status != "conjecture-violated");
    if (r.x_order == 8) {
      recorded = true;
      CHECK(r.status == "order-restriction");
      CHECK_FALSE(r.asserted);
    }
  }
  CHECK(recorded);

  auto s3 = ambient(zoo::symmetric(3));
  ElemId c = s3->id_of(perm("(1,2,3)", 3));
  CHECK(s3->order(s3->comm(c, s3->id_of(perm("(1,2)", 3)))) == 3);
  PrimeContext c3(s3->whole(), 3);
  auto rs = commutator_singularity_scan(c3);
  REQUIRE(!rs.empty());
  CHECK(rs[0].hypothesis_holds);
  CHECK(rs[0].conclusion_holds);

  for (const auto& grp : small_groups()) {
    auto amb = ambient(grp);
    for (std::uint64_t p : primes_of(*amb)) {
      PrimeContext pc(amb->whole(), p);
      for (const auto& r : commutator_singularity_scan(pc)) {
        CHECK(r.ok());
        CHECK(r.status != "conjecture-violated");
      }
    }
  }
}

TEST_CASE("abelian Sylow commutator check") {
  for (const auto& grp : small_groups()) {
    auto amb = ambient(grp);
    for (std::uint64_t p : primes_of(*amb)) {
      PrimeContext ctx(amb->whole(), p);
      for (const auto& r : abelian_sylow_check(ctx)) CHECK(r.ok());
    }
  }
  auto a5 = ambient(zoo::alternating(5));
  PrimeContext ctx(a5->whole(), 5);
  auto rs = abelian_sylow_check(ctx);
  REQUIRE(rs.size() == 2);
  for (const auto& r : rs) {
    CHECK(r.hypothesis_holds);
    CHECK(r.conclusion_holds);
  }
}

TEST_CASE("coset prime-power lift") {
  auto s4 = ambient(zoo::symmetric(4));
  auto v4 = sub(s4, {"(1,2)(3,4)", "(1,3)(2,4)"});
  auto v = coset_prime_power_lift(s4->whole(), v4, 3);
  CHECK(v.ok());
  CHECK(v.cosets_checked == 2);
  for (auto [g, y] : v.witnesses) CHECK(s4->order(y) == 3);

  auto trivial = coset_prime_power_lift(s4->whole(), s4->trivial(), 2);
  CHECK(trivial.ok());
  for (auto [g, y] : trivial.witnesses) CHECK(g == y);

  auto whole = coset_prime_power_lift(s4->whole(), s4->whole(), 2);
  CHECK(whole.cosets_checked == 0);
  CHECK(whole.ok());

  for (const auto& grp : small_groups()) {
    auto amb = ambient(grp);
    for (const auto& n : normal_subgroups(amb->whole()))
      for (std::uint64_t r : primes_of(*amb)) CHECK(coset_prime_power_lift(amb->whole(), n, r).ok());
  }
}
