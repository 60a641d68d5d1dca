#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "grpaudit/corpus.hpp"
#include "grpaudit/fitting.hpp"
#include "grpaudit/gen_file.hpp"
#include "grpaudit/lattice.hpp"
#include "helpers.hpp"

using namespace grpaudit;
using namespace testing_support;

namespace {

const std::vector<LoadedGroup>& loaded() {
  static const std::vector<LoadedGroup> groups = load_corpus(corpus(), 1);
  return groups;
}

const LoadedGroup& find(const std::string& name) {
  for (const auto& g : loaded())
    if (g.entry.name == name) return g;
  throw std::runtime_error("no corpus entry " + name);
}

std::string temp_file(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("grpaudit_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("generator text") {
  CHECK(parse_generator_text("degree 2\n(1,2)\n").order() == 2);
  CHECK(parse_generator_text("# S4\ndegree 4\n\n(1,2)  # transposition\n(1,2,3,4)\n").order() == 24);
  CHECK(parse_generator_text("degree 5\n").order() == 1);
  CHECK(parse_generator_text("degree 3\n()\n").order() == 1);

  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse_generator_text(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("degree 2\n(1,2\n") == 2);
  CHECK(line_of("# c\ndegree 3\n(1,2)\n(1,1,2)\n") == 4);  // not a bijection
  CHECK(line_of("degree 3\n(1,4)\n") == 2);
  CHECK(line_of("(1,2)\n") == 1);
  CHECK(line_of("degree two\n") == 1);
  CHECK_THROWS_AS(parse_generator_text(""), ParseError);

  auto g = zoo::psl2(7);
  auto back = parse_generator_text(format_generator_text(g, "round trip"));
  CHECK(back.generators() == g.generators());
  CHECK(back.order() == 168);
}

TEST_CASE("generator files") {
  CHECK(load_generator_file(temp_file("c2.gens", "degree 2\n(1,2)\n")).order() == 2);
  CHECK_THROWS_AS(load_generator_file(temp_file("bad.gens", "degree 2\n(1,2\n")), ParseError);
  CHECK_THROWS(load_generator_file("/nonexistent/none.gens"));
}

TEST_CASE("manifest errors") {
  auto bad_file = nlohmann::json::parse(R"([{"name": "X", "file": "missing.gens", "order": 2}])");
  auto entries = parse_manifest(bad_file, "/nonexistent");
  CHECK_THROWS_AS(build_entry(entries[0]), CorpusError);

  auto bad_order = nlohmann::json::parse(R"([{"name": "X", "family": "cyclic", "params": {"n": 4}, "order": 5}])");
  CHECK_THROWS_AS(build_entry(parse_manifest(bad_order, ".")[0]), CorpusError);

  auto unknown = nlohmann::json::parse(R"([{"name": "X", "family": "monster", "order": 5}])");
  CHECK_THROWS_AS(build_entry(parse_manifest(unknown, ".")[0]), CorpusError);

  auto dup = nlohmann::json::parse(
      R"([{"name": "X", "family": "cyclic", "params": {"n": 2}, "order": 2},
          {"name": "X", "family": "cyclic", "params": {"n": 3}, "order": 3}])");
  CHECK_THROWS_AS(parse_manifest(dup, "."), CorpusError);
  CHECK_THROWS_AS(parse_manifest(nlohmann::json::parse(R"([{"family": "cyclic"}])"), "."), CorpusError);
  CHECK_THROWS_AS(load_manifest("/nonexistent/corpus.json"), CorpusError);

  auto socle = nlohmann::json::parse(
      R"([{"name": "S4", "family": "symmetric", "params": {"n": 4}, "order": 24, "socle_order": 12}])");
  CHECK_THROWS_AS(build_entry(parse_manifest(socle, ".")[0]), CorpusError);
}

TEST_CASE("default corpus") {
  const auto& groups = loaded();
  CHECK(groups.size() >= 60);
  CHECK(find("GL2_3").group.order() == 48);
  CHECK(find("L2_8_ext3").group.order() == 1512);
  CHECK(find("A5xA5_swap").group.order() == 7200);
  CHECK(find("M10").group.order() == 720);
  CHECK(find("M11").group.order() == 7920);
  for (const auto& g : groups) {
    CHECK(g.group.order() == g.entry.order);
    if (!g.entry.family.empty()) CHECK(zoo::family_order(g.entry.family, g.entry.params) == g.entry.order);
  }
  // Parallel loading gives the same groups in the same order.
  auto again = load_corpus(corpus(), 3);
  REQUIRE(again.size() == groups.size());
  for (std::size_t i = 0; i < groups.size(); ++i) {
    CHECK(again[i].entry.name == groups[i].entry.name);
    CHECK(again[i].group.generators() == groups[i].group.generators());
  }
}

TEST_CASE("corpus tags match the groups") {
  for (const auto& g : loaded()) {
    if (g.group.order() > 8000) continue;
    auto amb = ambient(g.group);
    auto G = amb->whole();
    INFO(g.entry.name);
    CHECK(g.entry.has_tag("solvable") == is_solvable(G));
    CHECK(g.entry.has_tag("simple") == (is_simple(G) && !is_abelian(G)));
    CHECK(g.entry.has_tag("abelian") == is_abelian(G));
    CHECK(g.entry.has_tag("nilpotent") == is_nilpotent(G));
    for (auto p : g.entry.primes) CHECK(g.group.order() % p == 0);
    if (g.group.order() <= 2000) {
      auto soc = socle(G);
      bool almost_simple = is_simple(soc) && !is_abelian(soc) && centralizer_of(G, soc).is_trivial();
      CHECK(g.entry.has_tag("almost-simple") == almost_simple);
    }
  }
}

TEST_CASE("generator-file groups") {
  // Brute-force closure agrees with the stabilizer chain.
  CHECK(oracle::closure(find("L3_2").group.generators(), 7).size() == 168);
  CHECK(oracle::closure(find("M10").group.generators(), 10).size() == 720);
  auto amb = ambient(find("M10").group);
  CHECK(socle(amb->whole()).order() == 360);
  CHECK(is_simple(socle(amb->whole())));
  auto m11 = ambient(find("M11").group);
  CHECK(is_simple(m11->whole()));
}

TEST_CASE("projective special linear groups are simple") {
  for (std::uint32_t q : {4u, 5u, 7u, 8u, 9u, 11u, 13u}) {
    auto amb = ambient(zoo::psl2(q));
    CHECK(is_simple(amb->whole()));
    if (amb->size() <= 2000) CHECK(normal_subgroups(amb->whole()).size() == 2);
  }
  CHECK_FALSE(is_simple(ambient(zoo::psl2(3))->whole()));
}

TEST_CASE("cycling the coordinates of a wreath product") {
  // R = <top cycle> of prime order p is subnormal in T wr C_p exactly when T
  // is a p-group.
  struct Case {
    PermGroup base;
    std::size_t p;
  };
  std::vector<Case> cases{{zoo::cyclic(3), 3},    {zoo::cyclic(2), 3},      {zoo::symmetric(3), 2},
                          {zoo::cyclic(2), 2},    {zoo::dihedral(4), 2},    {zoo::alternating(4), 2},
                          {zoo::dihedral(5), 2},  {zoo::alternating(4), 3}, {zoo::elementary_abelian(3, 2), 3}};
  for (const auto& c : cases) {
    auto w = zoo::wreath_cyclic(c.base, c.p);
    auto amb = ambient(w);
    auto r = closure(amb, std::vector<Permutation>{w.generators().back()});
    REQUIRE(r.order() == c.p);
    bool base_is_p_group = is_power_of(c.base.order(), c.p);
    CHECK(is_subnormal(amb->whole(), r).is_subnormal == base_is_p_group);
  }
}
