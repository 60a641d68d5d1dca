#include <doctest.h>

#include <random>

#include "grpaudit/group_ops.hpp"
#include "grpaudit/lattice.hpp"
#include "helpers.hpp"

using namespace grpaudit;
using namespace testing_support;

TEST_CASE("permutation arithmetic") {
  Permutation a = perm("(1,2)(3,4,5)", 5);
  CHECK(a.order() == 6);
  CHECK(oracle::order_by_powering(a) == 6);
  CHECK(Permutation::identity(5).order() == 1);
  CHECK((a * a.inverse()).is_identity());
  CHECK(a.to_string() == "(1,2)(3,4,5)");
  CHECK(Permutation::identity(3).to_string() == "()");
  // Right action: 1 -> 2 under (1,2), then 2 -> 3 under (2,3).
  Permutation b = perm("(1,2)", 3) * perm("(2,3)", 3);
  CHECK(b[0] == 2);
  CHECK(commutator(perm("(1,2)", 3), perm("(2,3)", 3)).order() == 3);
}

TEST_CASE("permutation parsing rejects malformed input") {
  CHECK_THROWS_AS(Permutation::from_cycles("(1,2", 3), ParseError);
  CHECK_THROWS_AS(Permutation::from_cycles("(1,4)", 3), ParseError);
  CHECK_THROWS_AS(Permutation::from_cycles("(1,2,1)", 3), ParseError);
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 0}), DomainError);
}

TEST_CASE("random permutations: inverse, order, and cycle structure") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + rng() % 16;
    std::vector<Point> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>(i);
    std::shuffle(img.begin(), img.end(), rng);
    Permutation p(img);
    CHECK((p * p.inverse()).is_identity());
    CHECK((p.inverse() * p).is_identity());
    CHECK(p.order() == oracle::order_by_powering(p));
    CHECK(Permutation::from_cycles(p.to_string(), n) == p);
    CHECK(p.pow(static_cast<std::int64_t>(p.order())).is_identity());
    CHECK(p.pow(-1) == p.inverse());
  }
}

TEST_CASE("build_group orders agree with brute-force closure") {
  PermGroup s4({perm("(1,2)", 4), perm("(1,2,3,4)", 4)});
  CHECK(s4.order() == 24);
  CHECK(oracle::closure(s4.generators(), 4).size() == 24);

  PermGroup one({Permutation::identity(4)});
  CHECK(one.order() == 1);

  PermGroup a5({perm("(1,2,3,4,5)", 5), perm("(3,4,5)", 5)});
  CHECK(a5.order() == 60);
  CHECK(oracle::closure(a5.generators(), 5).size() == 60);

  CHECK_THROWS_AS(PermGroup({perm("(1,2)", 2), perm("(1,2)", 3)}), DomainError);
  CHECK_THROWS_AS(PermGroup(std::vector<Permutation>{}), DomainError);
}

TEST_CASE("stabilizer chain invariants") {
  for (const PermGroup& g : {zoo::symmetric(5), zoo::psl2(7), zoo::gl2(3), zoo::m10(),
                             zoo::wreath_cyclic(zoo::symmetric(3), 2)}) {
    std::uint64_t product = 1;
    for (const auto& level : g.chain()) product *= level.orbit.size();
    CHECK(product == g.order());
    for (const auto& s : g.generators()) CHECK(g.contains(s));
    CHECK(g.contains(Permutation::identity(g.degree())));
    auto elems = oracle::closure(g.generators(), g.degree());
    CHECK(elems.size() == g.order());
    oracle::PermSet iterated;
    g.for_each_element([&](const Permutation& x) { iterated.insert(x); });
    CHECK(iterated == elems);
  }
}

TEST_CASE("membership matches brute-force sets") {
  PermGroup a5 = zoo::alternating(5);
  auto elems = elements_of(a5);
  PermGroup s5 = zoo::symmetric(5);
  for (const auto& x : s5.elements()) CHECK(a5.contains(x) == (elems.count(x) > 0));
  CHECK_THROWS_AS(s5.elements(100), CapExceeded);
}

TEST_CASE("element_order of the order-8 element of GL2(3)") {
  PermGroup gl = zoo::gl2(3);
  CHECK(gl.degree() == 8);
  bool found = false;
  for (const auto& x : gl.elements())
    if (element_order(x) == 8) {
      CHECK(oracle::order_by_powering(x) == 8);
      found = true;
    }
  CHECK(found);
}

TEST_CASE("conjugacy classes") {
  auto s4 = ambient(zoo::symmetric(4));
  ClassInfo c = conjugacy_classes(s4->whole());
  CHECK(c.count() == 5);
  CHECK(sorted(c.sizes()) == std::vector<std::uint64_t>{1, 3, 6, 6, 8});
  std::vector<std::uint64_t> brute;
  for (const auto& cls : oracle::conjugacy_classes(as_set(s4->whole()))) brute.push_back(cls.size());
  CHECK(sorted(brute) == sorted(c.sizes()));

  auto c5 = ambient(zoo::cyclic(5));
  CHECK(conjugacy_classes(c5->whole()).sizes() == std::vector<std::uint64_t>(5, 1));

  auto a5 = ambient(zoo::alternating(5));
  ClassInfo ca = conjugacy_classes(a5->whole());
  CHECK(sorted(ca.sizes()) == std::vector<std::uint64_t>{1, 12, 12, 15, 20});
  CHECK(ca.sizes()[ca.class_of(Ambient::identity())] == 1);

  // Class function invariance and the power map.
  SubgroupHandle whole = a5->whole();
  for (ElemId x = 0; x < a5->size(); ++x)
    for (ElemId g : whole.generators()) CHECK(ca.class_of(x) == ca.class_of(a5->conj(x, g)));
  for (std::size_t k = 0; k < ca.count(); ++k)
    CHECK(ca.power_map(k, static_cast<std::int64_t>(a5->order(ca.representatives()[k]))) ==
          ca.class_of(Ambient::identity()));

  Caps tight;
  tight.element_cap = 10;
  // The explicit element table is where the cap bites.
  CHECK_THROWS_AS(ambient(zoo::symmetric(4), tight), CapExceeded);
}

TEST_CASE("class sizes divide the order across the zoo") {
  for (const PermGroup& g : {zoo::psl2(8), zoo::m10(), zoo::sl2(5), zoo::extraspecial_27(zoo::q8_in_sl2_3())}) {
    auto amb = ambient(g);
    const auto& cd = amb->classes();
    std::uint64_t total = 0;
    for (auto s : cd.sizes) {
      CHECK(g.order() % s == 0);
      total += s;
    }
    CHECK(total == g.order());
  }
}

TEST_CASE("centralizer and normalizer") {
  auto s4 = ambient(zoo::symmetric(4));
  SubgroupHandle g = s4->whole();
  ElemId t = s4->id_of(perm("(1,2)", 4));
  SubgroupHandle c = centralizer(g, t);
  CHECK(c.order() == 4);
  CHECK(as_set(c) == oracle::centralizer(as_set(g), perm("(1,2)", 4)));
  CHECK(normalizer(g, g) == g);
  SubgroupHandle three = sub(s4, {"(1,2,3)"});
  SubgroupHandle n = normalizer(g, three);
  CHECK(n.order() == 6);
  CHECK(as_set(n) == oracle::normalizer(as_set(g), as_set(three)));
}

TEST_CASE("intersect") {
  auto s4 = ambient(zoo::symmetric(4));
  SubgroupHandle g = s4->whole();
  SubgroupHandle p = sylow_subgroup(g, 2);
  CHECK(intersect(p, p) == p);
  CHECK(intersect(p, s4->trivial()).is_trivial());
  SubgroupHandle other = p;
  for (ElemId x = 0; x < s4->size(); ++x) {
    other = conjugate(p, x);
    if (!(other == p)) break;
  }
  REQUIRE(!(other == p));
  SubgroupHandle m = intersect(p, other);
  CHECK(m.order() == 4);
  oracle::PermSet a = as_set(p), b = as_set(other), brute;
  for (const auto& x : a)
    if (b.count(x)) brute.insert(x);
  CHECK(as_set(m) == brute);
}

TEST_CASE("quotient_group by coset action") {
  auto s4 = ambient(zoo::symmetric(4));
  SubgroupHandle g = s4->whole();
  SubgroupHandle v4 = sub(s4, {"(1,2)(3,4)", "(1,3)(2,4)"});
  Quotient q = quotient_group(g, v4);
  CHECK(q.image.order() == 6);
  CHECK(q.image.degree() == 6);
  oracle::PermSet kernel;
  for (ElemId x = 0; x < s4->size(); ++x)
    if (q.map(x).is_identity()) kernel.insert(s4->element(x));
  CHECK(kernel == as_set(v4));
  // map is a homomorphism
  for (ElemId x = 0; x < s4->size(); x += 5)
    for (ElemId y = 0; y < s4->size(); y += 3) CHECK(q.map(s4->mul(x, y)) == q.map(x) * q.map(y));

  CHECK(quotient_group(g, s4->trivial()).image.order() == 24);

  auto gl = ambient(zoo::gl2(3));
  SubgroupHandle o2 = p_core(gl->whole(), 2);
  CHECK(o2.order() == 8);
  CHECK(quotient_group(gl->whole(), o2).image.order() == 6);

  CHECK_THROWS_AS(quotient_group(g, sub(s4, {"(1,2)"})), DomainError);
}
