#include <doctest.h>

#include "grpaudit/group_ops.hpp"
#include "grpaudit/lattice.hpp"
#include "helpers.hpp"

using namespace grpaudit;
using namespace testing_support;

namespace {

std::vector<oracle::PermSet> as_sets(const std::vector<SubgroupHandle>& hs) {
  std::vector<oracle::PermSet> out;
  for (const auto& h : hs) out.push_back(as_set(h));
  std::sort(out.begin(), out.end(), [](const oracle::PermSet& a, const oracle::PermSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<PermGroup> small_groups() {
  return {zoo::symmetric(4),     zoo::dihedral(7),         zoo::cyclic(12),
          zoo::alternating(5),   zoo::gl2(3),              zoo::sl2(3),
          zoo::affine_line(7, 3), zoo::elementary_abelian(2, 3), zoo::dihedral(4),
          zoo::direct_product(zoo::cyclic(2), zoo::symmetric(3)),
          zoo::affine_plane(3, zoo::q8_in_sl2_3()), zoo::extraspecial_27({})};
}

}  // namespace

TEST_CASE("normal_closure") {
  auto s4 = ambient(zoo::symmetric(4));
  SubgroupHandle g = s4->whole();
  CHECK(normal_closure(g, sub(s4, {"(1,2)"})).order() == 24);
  SubgroupHandle v4 = sub(s4, {"(1,2)(3,4)", "(1,3)(2,4)"});
  CHECK(normal_closure(g, v4) == v4);
  SubgroupHandle a4 = normal_closure(g, sub(s4, {"(1,2,3)"}));
  CHECK(a4.order() == 12);
  CHECK(as_set(a4) == oracle::normal_closure(as_set(g), as_set(sub(s4, {"(1,2,3)"})), 4));
}

TEST_CASE("is_subnormal") {
  auto s4 = ambient(zoo::symmetric(4));
  SubgroupHandle g = s4->whole();
  SubnormalVerdict t = is_subnormal(g, sub(s4, {"(1,2)"}));
  CHECK_FALSE(t.is_subnormal);
  CHECK(t.witness_chain.back().order() == 24);
  SubnormalVerdict v = is_subnormal(g, sub(s4, {"(1,2)(3,4)", "(1,3)(2,4)"}));
  CHECK(v.is_subnormal);
  CHECK(v.witness_chain.size() - 1 == 1);
  // <(1,2)(3,4)> lies in V4, normal in S4: a chain of length 2.
  SubnormalVerdict w = is_subnormal(g, sub(s4, {"(1,2)(3,4)"}));
  CHECK(w.is_subnormal);
  for (std::size_t i = 1; i < w.witness_chain.size(); ++i)
    CHECK(is_normal_in(w.witness_chain[i], w.witness_chain[i - 1]));

  // Every subgroup of a p-group is subnormal.
  auto d8 = ambient(zoo::dihedral(4));
  for (const auto& h : all_subgroups(d8->whole())) CHECK(is_subnormal(d8->whole(), h).is_subnormal);
}

TEST_CASE("sylow_subgroup") {
  auto s4 = ambient(zoo::symmetric(4));
  SubgroupHandle p = sylow_subgroup(s4->whole(), 2);
  CHECK(p.order() == 8);
  CHECK(is_p_group(p, 2));
  auto c3 = ambient(zoo::cyclic(3));
  CHECK(sylow_subgroup(c3->whole(), 3).is_whole());
  CHECK(sylow_subgroup(c3->whole(), 2).is_trivial());
  auto m10 = ambient(zoo::m10());
  SubgroupHandle m = sylow_subgroup(m10->whole(), 2);
  CHECK(m.order() == 16);
}

TEST_CASE("p_core and p_prime_core") {
  auto gl = ambient(zoo::gl2(3));
  CHECK(p_core(gl->whole(), 2).order() == 8);
  CHECK(p_core_from_lattice(gl->whole(), 2).order() == 8);
  auto s4 = ambient(zoo::symmetric(4));
  SubgroupHandle o2 = p_core(s4->whole(), 2);
  CHECK(o2 == sub(s4, {"(1,2)(3,4)", "(1,3)(2,4)"}));
  auto d8 = ambient(zoo::dihedral(4));
  CHECK(p_core(d8->whole(), 2).is_whole());
  auto f21 = ambient(zoo::affine_line(7, 3));
  CHECK(p_prime_core(f21->whole(), 3).order() == 7);
  CHECK(p_core(f21->whole(), 3).is_trivial());
}

TEST_CASE("cores agree with the lattice and the brute-force oracle") {
  for (const auto& grp : small_groups()) {
    auto amb = ambient(grp);
    SubgroupHandle g = amb->whole();
    auto elems = as_set(g);
    for (std::uint64_t p : prime_divisors(g.order())) {
      SubgroupHandle op = p_core(g, p);
      CHECK(op == p_core_by_conjugates(g, p));
      CHECK(op == p_core_from_lattice(g, p));
      CHECK(as_set(op) == oracle::p_core(elems, p, grp.degree()));
      SubgroupHandle opp = p_prime_core(g, p);
      CHECK(opp == p_prime_core_from_lattice(g, p));
      CHECK(as_set(opp) == oracle::p_prime_core(elems, p, grp.degree()));
    }
  }
}

TEST_CASE("normal_subgroups") {
  auto s4 = ambient(zoo::symmetric(4));
  auto ns = normal_subgroups(s4->whole());
  std::vector<std::uint64_t> orders;
  for (const auto& n : ns) orders.push_back(n.order());
  CHECK(orders == std::vector<std::uint64_t>{1, 4, 12, 24});
  CHECK(normal_subgroups(ambient(zoo::alternating(5))->whole()).size() == 2);
  CHECK(normal_subgroups(ambient(zoo::cyclic(6))->whole()).size() == 4);
  CHECK(all_subgroups(ambient(zoo::cyclic(6))->whole()).size() == 4);

  Caps tight;
  tight.lattice_cap = 100;
  auto s5 = ambient(zoo::symmetric(5), tight);
  CHECK_THROWS_AS(normal_subgroups(s5->whole()), CapExceeded);
}

TEST_CASE("subgroup lattice matches the brute-force oracle") {
  for (const auto& grp : small_groups()) {
    auto amb = ambient(grp);
    SubgroupHandle g = amb->whole();
    auto elems = as_set(g);
    auto lattice = oracle::all_subgroups(elems, grp.degree());
    CHECK(as_sets(all_subgroups(g)) == lattice);
    CHECK(as_sets(normal_subgroups(g)) == as_sets([&] {
            std::vector<SubgroupHandle> n;
            for (const auto& h : all_subgroups(g))
              if (is_normal_in(h, g)) n.push_back(h);
            return n;
          }()));
    std::vector<oracle::PermSet> brute_normal;
    for (const auto& h : lattice)
      if (oracle::is_normal(elems, h)) brute_normal.push_back(h);
    CHECK(as_sets(normal_subgroups(g)) == brute_normal);
    CHECK(as_sets(maximal_subgroups(g)) == oracle::maximal_subgroups(lattice, elems));
    CHECK(as_set(frattini(g)) == oracle::frattini(lattice, elems, grp.degree()));
    for (const auto& h : all_subgroups(g))
      CHECK(is_subnormal(g, h).is_subnormal == oracle::is_subnormal(lattice, elems, as_set(h)));
  }
}

TEST_CASE("maximal_overgroups") {
  auto s4 = ambient(zoo::symmetric(4));
  SubgroupHandle g = s4->whole();
  auto mo = maximal_overgroups(g, sub(s4, {"(1,2)"}));
  std::vector<std::uint64_t> orders;
  for (const auto& m : mo) orders.push_back(m.order());
  // Two point stabilizers S3 and one dihedral group of order 8.
  CHECK(orders == std::vector<std::uint64_t>{6, 6, 8});
  auto elems = as_set(g);
  std::vector<oracle::PermSet> brute;
  for (const auto& m : oracle::maximal_subgroups(oracle::all_subgroups(elems, 4), elems))
    if (m.count(perm("(1,2)", 4))) brute.push_back(m);
  CHECK(as_sets(mo) == brute);
  CHECK(maximal_overgroups(g, s4->trivial()).size() == maximal_subgroups(g).size());
  CHECK(maximal_overgroups(g, g).empty());
  // The upward walk and the lattice agree.
  for (const auto& h : all_subgroups(g)) {
    if (h.is_whole()) continue;
    std::vector<SubgroupHandle> via_lattice;
    for (const auto& k : all_subgroups(g))
      if (!k.is_whole() && k.contains(h)) via_lattice.push_back(k);
    CHECK(as_sets(proper_overgroups(g, h)) == as_sets(via_lattice));
  }
}

TEST_CASE("frattini") {
  CHECK(frattini(ambient(zoo::symmetric(4))->whole()).is_trivial());
  CHECK(frattini(ambient(zoo::cyclic(4))->whole()).order() == 2);
  auto sl = ambient(zoo::sl2(3));
  SubgroupHandle q8 = p_core(sl->whole(), 2);
  SubgroupHandle phi = frattini(q8);
  CHECK(phi.order() == 2);
  CHECK(phi == center(q8));
}

TEST_CASE("weak subnormality of reflections in dihedral groups") {
  for (std::size_t q : {3, 5, 7, 11}) {
    auto d = ambient(zoo::dihedral(q));
    SubgroupHandle r = closure(d, std::vector<Permutation>{d->group().generators()[1]});
    CHECK(r.order() == 2);
    auto rep = is_weakly_subnormal(d->whole(), r, 2);
    CHECK(rep.is_weakly_subnormal);
    CHECK(rep.criterion);
    CHECK(rep.routes_agree);
    CHECK(rep.unique_maximal->order() == 2);
  }
}

TEST_CASE("abelian groups have no weakly subnormal subgroups") {
  auto g = ambient(zoo::direct_product(zoo::cyclic(4), zoo::cyclic(6)));
  for (const auto& h : all_subgroups(g->whole())) {
    auto rep = is_weakly_subnormal(g->whole(), h, 2);
    CHECK_FALSE(rep.is_weakly_subnormal);
    CHECK(rep.routes_agree);
  }
  auto rep = is_weakly_subnormal(g->whole(), g->whole(), 2);
  CHECK_FALSE(rep.is_weakly_subnormal);
  CHECK(rep.maximal_overgroups.empty());
}

TEST_CASE("weak subnormality: definitional route equals the criterion on p-subgroups") {
  for (const auto& grp : small_groups()) {
    auto amb = ambient(grp);
    SubgroupHandle g = amb->whole();
    for (std::uint64_t p : prime_divisors(g.order()))
      for (const auto& r : all_subgroups(g)) {
        if (!is_p_group(r, p)) continue;
        auto rep = is_weakly_subnormal(g, r, p);
        CHECK(rep.criterion_evaluated);
        CHECK(rep.routes_agree);
        if (rep.is_weakly_subnormal) {
          CHECK(normal_closure(g, r).is_whole());
          CHECK(rep.maximal_overgroups.size() == 1);
          CHECK(p_core(*rep.unique_maximal, p).contains(r));
          CHECK_FALSE(is_normal_in(*rep.unique_maximal, g));
        }
      }
  }
}

TEST_CASE("M10: cyclic subgroups of order 8 outside the socle") {
  auto m10 = ambient(zoo::m10());
  SubgroupHandle g = m10->whole();
  SubgroupHandle socle = derived_subgroup(g);
  CHECK(socle.order() == 360);
  std::size_t seen = 0;
  for (ElemId x = 0; x < m10->size(); ++x) {
    if (m10->order(x) != 8 || socle.contains(x)) continue;
    SubgroupHandle r = closure(m10, std::vector<ElemId>{x});
    auto rep = is_weakly_subnormal(g, r, 2);
    CHECK(rep.is_weakly_subnormal);
    CHECK(rep.routes_agree);
    REQUIRE(rep.unique_maximal);
    CHECK(rep.unique_maximal->order() == 16);
    ++seen;
  }
  CHECK(seen == 180);
}

TEST_CASE("L2(8).3: cyclic subgroups of order 9 outside the socle") {
  auto amb = ambient(zoo::pgammal2(8));
  SubgroupHandle g = amb->whole();
  CHECK(g.order() == 1512);
  SubgroupHandle socle = derived_subgroup(g);
  CHECK(socle.order() == 504);
  std::size_t seen = 0;
  for (ElemId x = 0; x < amb->size(); ++x) {
    if (amb->order(x) != 9 || socle.contains(x)) continue;
    SubgroupHandle r = closure(amb, std::vector<ElemId>{x});
    auto rep = is_weakly_subnormal(g, r, 3);
    CHECK(rep.is_weakly_subnormal);
    CHECK(rep.routes_agree);
    REQUIRE(rep.unique_maximal);
    CHECK(rep.unique_maximal->order() == 54);
    ++seen;
  }
  CHECK(seen > 0);
}

TEST_CASE("verify_psolvable_structure") {
  auto f21 = ambient(zoo::affine_line(7, 3));
  SubgroupHandle g = f21->whole();
  SubgroupHandle r = closure(f21, std::vector<Permutation>{f21->group().generators()[1]});
  CHECK(r.order() == 3);
  auto v = verify_psolvable_structure(g, 3, r);
  CHECK(v.hypotheses_met);
  CHECK(v.all_pass());
  CHECK(v.q == 7);
  CHECK(is_elementary_abelian(*v.q_subgroup));

  auto ab = ambient(zoo::cyclic(6));
  CHECK_FALSE(verify_psolvable_structure(ab->whole(), 2, sylow_subgroup(ab->whole(), 2)).hypotheses_met);

  // Extraspecial 3^{1+2} with a cyclic group of order 4 acting irreducibly.
  auto e = ambient(zoo::extraspecial_27(zoo::c4_in_sl2_3()));
  SubgroupHandle s2 = sylow_subgroup(e->whole(), 2);
  auto w = verify_psolvable_structure(e->whole(), 2, s2);
  CHECK(w.hypotheses_met);
  CHECK(w.all_pass());
  CHECK(w.q == 3);
  CHECK(w.q_subgroup->order() == 27);
  CHECK_FALSE(is_elementary_abelian(*w.q_subgroup));
  CHECK(is_special(*w.q_subgroup));
}

TEST_CASE("normal subgroups from classes match the subgroup oracle") {
  for (const auto& g : {zoo::symmetric(4), zoo::dihedral(6), zoo::gl2(3), zoo::alternating(5), zoo::extraspecial_27({}),
                        zoo::direct_product(zoo::cyclic(2), zoo::symmetric(3))}) {
    auto set = elements_of(g);
    auto by_classes = oracle::normal_subgroups_by_classes(set, g.degree());
    auto by_lattice = oracle::normal_subgroups(set, g.degree());
    std::sort(by_lattice.begin(), by_lattice.end(), [](const auto& a, const auto& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    CHECK(by_classes == by_lattice);
  }
}
