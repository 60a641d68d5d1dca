#include "grpaudit/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <mutex>
#include <sstream>

#include "grpaudit/baer_suzuki.hpp"
#include "grpaudit/characters.hpp"
#include "grpaudit/errors.hpp"
#include "grpaudit/fitting.hpp"
#include "grpaudit/lattice.hpp"
#include "grpaudit/oracle.hpp"
#include "grpaudit/parallel.hpp"

namespace grpaudit {

namespace {

using nlohmann::json;

const std::vector<std::string> kSuites = {
    "weak-subnormal", "psolvable-structure", "baer-suzuki-classic", "p1-core",         "p2-core",
    "p3-core",        "glauberman",          "gamma-sets",          "multicommutator", "commutator-singularity",
    "abelian-sylow",  "characters",          "lattice-oracles",
};

// Suites whose work items are split by prime.
bool per_prime(const std::string& suite) { return suite != "characters" && suite != "lattice-oracles"; }

const std::map<std::string, std::map<std::string, std::uint64_t>> kSuiteDefaults = {
    {"weak-subnormal", {{"max_order", 2000}}},
    {"psolvable-structure", {{"max_order", 2000}}},
    {"baer-suzuki-classic", {{"max_order", 2000}}},
    {"characters", {{"max_order", 5000}}},
    {"lattice-oracles", {{"max_order", 2000}, {"subgroup_level_max_order", 200}}},
};

std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (c != ' ' && c != '\t') {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::uint64_t parse_uint(std::string_view s, const std::string& what) {
  std::string t(s);
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    if (t.empty() || t[0] == '-') throw std::invalid_argument(t);
    v = std::stoull(t, &used);
  } catch (const std::exception&) {
    throw ParseError("invalid value '" + t + "' for " + what, 0);
  }
  if (used != t.size()) throw ParseError("invalid value '" + t + "' for " + what, 0);
  return v;
}

std::string trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return std::string(s);
}

bool is_suite_key(const std::string& key) { return key == "max_order" || key == "subgroup_level_max_order"; }

std::string caps_key(const Caps& c) {
  std::ostringstream s;
  s << c.element_cap << ':' << c.coset_degree_cap << ':' << c.lattice_cap << ':' << c.table_cap << ':'
    << c.subgroup_count_cap << ':' << c.character_cap << ':' << c.character_class_cap << ':' << c.pair_cap;
  return s.str();
}

std::string subgroup_label(const SubgroupHandle& h) {
  std::string s = "<";
  bool first = true;
  for (const auto& g : h.generator_perms()) {
    if (!first) s += ",";
    s += g.to_string();
    first = false;
  }
  return s + ">";
}

oracle::PermSet perm_set(const SubgroupHandle& h) {
  oracle::PermSet out;
  for (ElemId x : h.elements()) out.insert(h.ambient().element(x));
  return out;
}

std::set<oracle::PermSet> perm_sets(const std::vector<SubgroupHandle>& hs) {
  std::set<oracle::PermSet> out;
  for (const auto& h : hs) out.insert(perm_set(h));
  return out;
}

/// Shared per-group state: ambients keyed by caps, prime contexts keyed by
/// (caps, p).
struct GroupSlot {
  std::mutex mutex;
  std::map<std::string, AmbientPtr> ambients;
  std::map<std::pair<std::string, std::uint64_t>, std::shared_ptr<const PrimeContext>> contexts;
};

struct Item {
  std::size_t suite = 0;
  std::size_t group = 0;
  std::optional<std::uint64_t> p;
};

class Runner {
 public:
  Runner(const SuiteConfig& cfg, const std::vector<LoadedGroup>& groups)
      : cfg_(cfg), groups_(groups), slots_(groups.size()) {}

  RunResult run();

 private:
  const SuiteConfig& cfg_;
  const std::vector<LoadedGroup>& groups_;
  std::vector<GroupSlot> slots_;

  AmbientPtr ambient(std::size_t gi, const Caps& caps);
  std::shared_ptr<const PrimeContext> context(std::size_t gi, const Caps& caps, std::uint64_t p);

  void run_item(const std::string& suite, const Item& it, std::vector<Record>& out);
};

AmbientPtr Runner::ambient(std::size_t gi, const Caps& caps) {
  GroupSlot& slot = slots_[gi];
  std::lock_guard lock(slot.mutex);
  auto key = caps_key(caps);
  auto it = slot.ambients.find(key);
  if (it != slot.ambients.end()) return it->second;
  auto amb = Ambient::create(groups_[gi].group, caps);
  slot.ambients.emplace(key, amb);
  return amb;
}

std::shared_ptr<const PrimeContext> Runner::context(std::size_t gi, const Caps& caps, std::uint64_t p) {
  AmbientPtr amb = ambient(gi, caps);
  GroupSlot& slot = slots_[gi];
  std::lock_guard lock(slot.mutex);
  auto key = std::make_pair(caps_key(caps), p);
  auto it = slot.contexts.find(key);
  if (it != slot.contexts.end()) return it->second;
  auto ctx = std::make_shared<const PrimeContext>(amb->whole(), p, groups_[gi].entry.name);
  slot.contexts.emplace(key, ctx);
  return ctx;
}

/// Builds records for one work item, timing each one when requested.
class Emitter {
 public:
  Emitter(const SuiteConfig& cfg, std::string suite, const LoadedGroup& g, std::optional<std::uint64_t> p,
          std::vector<Record>& out)
      : timing_(cfg.timing), suite_(std::move(suite)), group_(g), p_(p), out_(out), start_(clock::now()) {}

  Record base(std::string predicate) const {
    Record r;
    r.suite = suite_;
    r.group = group_.entry.name;
    r.order = group_.group.order();
    r.p = p_;
    r.predicate = std::move(predicate);
    return r;
  }

  void emit(Record r) {
    auto now = clock::now();
    if (timing_) r.elapsed_ms = std::chrono::duration<double, std::milli>(now - start_).count();
    start_ = now;
    out_.push_back(std::move(r));
  }

  void skip(std::string predicate, std::string reason) {
    Record r = base(std::move(predicate));
    r.skipped_reason = std::move(reason);
    r.implication_ok = true;
    emit(std::move(r));
  }

  void from_predicate(const PredicateReport& pr) {
    Record r = base(pr.predicate);
    r.class_rep = pr.x.to_string();
    r.k = pr.k;
    r.hypothesis = pr.hypothesis_holds;
    r.conclusion = pr.conclusion_holds;
    r.implication_ok = pr.implication_ok;
    if (pr.predicate == "property_p3" || pr.predicate == "classical_baer_suzuki") r.converse_ok = pr.converse_ok;
    r.asserted = pr.asserted;
    if (!pr.status.empty()) r.status = pr.status;
    if (pr.status == "skipped") r.skipped_reason = "pair cap exceeded for " + pr.predicate;
    if (pr.witness) r.witness = pr.witness->to_string();
    r.detail = {{"class_index", pr.class_index}, {"x_order", pr.x_order}};
    if (pr.witness2) r.detail["witness2"] = pr.witness2->to_string();
    emit(std::move(r));
  }

 private:
  using clock = std::chrono::steady_clock;
  bool timing_;
  std::string suite_;
  const LoadedGroup& group_;
  std::optional<std::uint64_t> p_;
  std::vector<Record>& out_;
  clock::time_point start_;
};

std::vector<ElemId> p_element_reps(const PrimeContext& ctx) {
  std::vector<ElemId> out;
  const Ambient& amb = ctx.g.ambient();
  for (ElemId x : ctx.classes->representatives())
    if (order_is_p_element(amb.order(x), ctx.p)) out.push_back(x);
  return out;
}

struct WeakSubnormalRow {
  SubgroupHandle r;
  WeakSubnormalityReport report;
};

/// Weak-subnormality verdicts for every nontrivial p-subgroup, shared by the
/// weak-subnormal and psolvable-structure suites through the ambient memo.
std::shared_ptr<const std::vector<WeakSubnormalRow>> weak_subnormal_rows(const SubgroupHandle& g, std::uint64_t p) {
  return g.ambient().memo<std::vector<WeakSubnormalRow>>("suite.weak_subnormal." + std::to_string(p), [&] {
    std::vector<WeakSubnormalRow> rows;
    for (const auto& r : all_subgroups(g))
      if (!r.is_trivial() && is_power_of(r.order(), p)) rows.push_back({r, is_weakly_subnormal(g, r, p)});
    return rows;
  });
}

bool is_cyclic(const SubgroupHandle& r) {
  const Ambient& amb = r.ambient();
  for (ElemId x : r.elements())
    if (amb.order(x) == r.order()) return true;
  return false;
}

void nonsolvable_structure_record(const SubgroupHandle& g, std::uint64_t p, const SubgroupHandle& r, Emitter& em) {
  auto v = verify_nonsolvable_structure(g, p, r);
  Record rec = em.base("nonsolvable_structure");
  rec.class_rep = subgroup_label(r);
  rec.hypothesis = v.hypotheses_met;
  rec.conclusion = v.all_pass(p);
  rec.implication_ok = !v.hypotheses_met || v.all_pass(p);
  rec.detail = {{"fstar_order", v.fstar_order},
                {"component_count", v.component_count},
                {"fstar_quasisimple", v.fstar_quasisimple},
                {"fstar_minimal_normal", v.fstar_minimal_normal},
                {"triple_cover_layer", v.triple_cover_layer},
                {"section_sylow_maximal", v.section_sylow_maximal ? json(*v.section_sylow_maximal) : json(nullptr)}};
  em.emit(std::move(rec));
}

/// Cyclic weakly subnormal 2-subgroups of L_2(q) and PGL_2(q), q prime:
/// asserts q = -1 mod 8, |R| >= 8 and M the nonsplit torus normalizer.
/// The weaker form q = 3 mod 4, o(x) >= 16 is recorded without assertion.
void cyclic_family_record(const SubgroupHandle& g, std::uint64_t p, const SubgroupHandle& r, const CorpusEntry& entry,
                          Emitter& em) {
  if (p != 2 || (entry.family != "psl2" && entry.family != "pgl2")) return;
  std::uint64_t q = entry.params.value("q", std::uint64_t{0});
  if (q < 2 || prime_divisors(q) != std::vector<std::uint64_t>{q}) return;
  auto m = maximal_overgroups(g, r);
  std::uint64_t torus_normalizer = entry.family == "pgl2" ? 2 * (q + 1) : q + 1;
  bool m_ok = m.size() == 1 && m[0].order() == torus_normalizer;
  Record rec = em.base("cyclic_family");
  rec.class_rep = subgroup_label(r);
  rec.hypothesis = true;
  rec.conclusion = q % 8 == 7 && r.order() >= 8 && m_ok;
  rec.implication_ok = *rec.conclusion;
  rec.detail = {{"q", q},
                {"r_order", r.order()},
                {"m_order", m.size() == 1 ? json(m[0].order()) : json(nullptr)},
                {"alternate_form", q % 4 == 3 && r.order() >= 16}};
  em.emit(std::move(rec));
}

void suite_weak_subnormal(const SubgroupHandle& g, std::uint64_t p, const CorpusEntry& entry, Emitter& em) {
  const bool nonsolvable = !is_p_solvable(g, p) && p_core(g, p).is_trivial();
  for (const auto& row : *weak_subnormal_rows(g, p)) {
    const auto& rep = row.report;
    Record r = em.base("weak_subnormality");
    r.class_rep = subgroup_label(row.r);
    r.hypothesis = rep.is_weakly_subnormal;
    r.conclusion = rep.criterion;
    r.converse_ok = rep.criterion_evaluated && rep.routes_agree && (!rep.criterion || rep.is_weakly_subnormal);
    r.detail = {{"subgroup_order", row.r.order()},
                {"maximal_overgroups", rep.maximal_overgroups.size()},
                {"subnormal_in_g", rep.subnormal_in_g}};
    bool consequences = true;
    if (rep.is_weakly_subnormal) {
      // Consequences of weak subnormality, each recomputed directly.
      bool closure_is_g = normal_closure(g, row.r).order() == g.order();
      auto m = maximal_overgroups(g, row.r);
      bool unique = m.size() == 1;
      bool in_core = unique && p_core(m[0], p).contains(row.r);
      bool not_normal = unique && !is_normal_in(m[0], g);
      consequences = closure_is_g && unique && in_core && not_normal;
      r.detail["consequences"] = {{"normal_closure_is_g", closure_is_g},
                                  {"unique_maximal_overgroup", unique},
                                  {"r_in_op_m", in_core},
                                  {"m_not_normal", not_normal}};
      if (unique) r.detail["m_order"] = m[0].order();
      r.status = "weakly-subnormal";
    } else if (rep.non_subnormal_overgroup) {
      r.witness = subgroup_label(*rep.non_subnormal_overgroup);
    }
    r.implication_ok = (!rep.is_weakly_subnormal || rep.criterion) && consequences;
    em.emit(std::move(r));
    if (rep.is_weakly_subnormal && nonsolvable) {
      nonsolvable_structure_record(g, p, row.r, em);
      if (is_cyclic(row.r)) cyclic_family_record(g, p, row.r, entry, em);
    }
  }
}

void suite_psolvable(const SubgroupHandle& g, std::uint64_t p, Emitter& em) {
  auto skip_hypothesis = [&](const std::string& reason) {
    Record r = em.base("psolvable_structure");
    r.hypothesis = false;
    r.asserted = true;
    r.status = "hypothesis-failed";
    r.detail = {{"reason", reason}};
    em.emit(std::move(r));
  };
  if (!is_p_solvable(g, p)) return skip_hypothesis("G is not p-solvable");
  if (!p_core(g, p).is_trivial()) return skip_hypothesis("O_p(G) is nontrivial");
  bool any = false;
  for (const auto& row : *weak_subnormal_rows(g, p)) {
    if (!row.report.is_weakly_subnormal) continue;
    any = true;
    auto v = verify_psolvable_structure(g, p, row.r);
    Record r = em.base("psolvable_structure");
    r.class_rep = subgroup_label(row.r);
    r.hypothesis = v.hypotheses_met;
    r.conclusion = v.all_pass();
    r.implication_ok = !v.hypotheses_met || v.all_pass();
    json clauses = json::object();
    for (const auto& c : v.clauses) clauses[c.name] = c.holds;
    r.detail = {{"q", v.q}, {"clauses", clauses}};
    if (!v.unmet_reason.empty()) r.detail["reason"] = v.unmet_reason;
    em.emit(std::move(r));
  }
  if (!any) skip_hypothesis("no weakly subnormal p-subgroup");
}

void suite_glauberman(const PrimeContext& ctx, Emitter& em) {
  const Ambient& amb = ctx.g.ambient();
  for (ElemId x : p_element_reps(ctx)) {
    auto b = glauberman_battery(ctx, x);
    Record r = em.base("glauberman_battery");
    r.class_rep = amb.element(x).to_string();
    json items = json::array();
    json skipped = json::object();
    int true_count = 0, computed = 0;
    for (int i = 0; i < GlaubermanBattery::kItems; ++i) {
      items.push_back(b.items[i] ? json(*b.items[i]) : json(nullptr));
      if (b.items[i]) {
        ++computed;
        true_count += *b.items[i];
      } else {
        skipped[GlaubermanBattery::item_name(i)] =
            "pair cap " + std::to_string(amb.caps().pair_cap) + " exceeded (" + std::to_string(b.fusion_pairs) + " pairs)";
      }
    }
    r.conclusion = b.items[5];
    r.implication_ok = b.agree;
    r.status = !b.agree ? "disagree" : true_count == computed ? "all-true" : "all-false";
    r.detail = {{"items", items}, {"fusion_pairs", b.fusion_pairs}, {"x_order", amb.order(x)}};
    if (!skipped.empty()) r.detail["skipped_items"] = skipped;
    em.emit(std::move(r));
  }
}

void suite_gamma(const PrimeContext& ctx, int k_max, Emitter& em) {
  const Ambient& amb = ctx.g.ambient();
  for (ElemId x : p_element_reps(ctx)) {
    if (x == Ambient::identity()) continue;
    const ElemId xs[] = {x};
    SubgroupHandle nc = normal_closure_of(ctx.g, xs);
    const auto& x_class = ctx.classes->members(ctx.classes->class_of(x));
    std::vector<ElemId> prev = ctx.g.elements();
    for (int k = 1; k <= k_max; ++k) {
      GammaSet gs = gamma_k(ctx.g, x, k);
      bool has_identity = gs.contains(Ambient::identity());
      bool nested = std::includes(prev.begin(), prev.end(), gs.elements.begin(), gs.elements.end());
      bool in_closure = std::all_of(gs.elements.begin(), gs.elements.end(), [&](ElemId e) { return nc.contains(e); });
      std::map<std::string, std::uint64_t> orders;
      std::uint64_t conjugates = 0;
      for (ElemId e : gs.elements) {
        ++orders[std::to_string(amb.order(e))];
        if (std::binary_search(x_class.begin(), x_class.end(), e)) ++conjugates;
      }
      Record r = em.base("gamma_k");
      r.class_rep = amb.element(x).to_string();
      r.k = k;
      r.implication_ok = has_identity && nested && in_closure;
      r.detail = {{"size", gs.elements.size()},
                  {"x_order", amb.order(x)},
                  {"element_orders", orders},
                  {"conjugates_of_x", conjugates},
                  {"contains_identity", has_identity},
                  {"nested", nested},
                  {"in_normal_closure", in_closure}};
      em.emit(std::move(r));
      prev = std::move(gs.elements);
    }
  }
}

void suite_abelian_sylow(const PrimeContext& ctx, Emitter& em) {
  auto reports = abelian_sylow_check(ctx);
  if (!reports.empty()) {
    for (const auto& pr : reports) em.from_predicate(pr);
    return;
  }
  Record r = em.base("abelian_sylow_commutator");
  r.asserted = false;
  bool abelian = is_abelian(sylow_subgroup(ctx.g, ctx.p));
  r.hypothesis = abelian;
  r.status = abelian ? "vacuous" : "hypothesis-failed";
  r.detail = {{"reason", abelian ? "every p-element lies in O_p(G)" : "Sylow subgroup is nonabelian"}};
  em.emit(std::move(r));
}

void suite_characters(const SubgroupHandle& g, const std::string& name, std::uint64_t seed, Emitter& em) {
  CharacterTable t = character_table(g, name, seed);
  TableCheck tc = verify_table(t);
  {
    Record r = em.base("character_table");
    r.implication_ok = tc.all();
    r.detail = {{"characters", t.size()},
                {"classes", t.class_count()},
                {"exponent", t.exponent},
                {"primes", {t.ell1, t.ell2}},
                {"row_count", tc.row_count},
                {"degrees_at_identity", tc.degrees_at_identity},
                {"sum_of_squares", tc.sum_of_squares},
                {"row_orthogonality", tc.row_orthogonality},
                {"column_orthogonality", tc.column_orthogonality},
                {"float_agreement", tc.float_agreement}};
    em.emit(std::move(r));
  }
  const auto primes = prime_divisors(t.order);
  for (std::size_t chi = 0; chi < t.size(); ++chi)
    for (auto p : primes) {
      auto v = has_p_defect_zero(t, chi, p);
      Record r = em.base("defect_zero");
      r.p = p;
      r.hypothesis = v.by_degree;
      r.conclusion = v.vanishes_on_p_singular;
      r.implication_ok = v.agree();
      r.detail = {{"character", chi},
                  {"degree", t.degrees[chi]},
                  {"by_degree", v.by_degree},
                  {"vanishes_on_order_p", v.vanishes_on_order_p},
                  {"vanishes_on_p_singular", v.vanishes_on_p_singular}};
      em.emit(std::move(r));
    }
  for (const auto& v : multiplicative_character_check(t)) {
    Record r = em.base("multiplicative_character");
    r.p = v.vanishing_prime;
    r.hypothesis = v.multiplicative;
    r.conclusion = v.vanishing_prime.has_value();
    r.implication_ok = v.ok();
    r.detail = {{"character", v.character},
                {"degree", v.degree},
                {"equivalence_ok", v.equivalence_ok},
                {"coprime_values_ok", v.coprime_values_ok},
                {"prime_order_nonzero", v.prime_order_nonzero},
                {"index_is_p_power", v.index_is_p_power},
                {"fstar_is_op", v.fstar_is_op}};
    if (v.nonzero_prime) r.detail["nonzero_prime"] = *v.nonzero_prime;
    em.emit(std::move(r));
  }
  {
    auto v = product_lemma_check(t);
    Record r = em.base("product_lemma");
    r.implication_ok = v.ok();
    r.detail = {{"class_pairs", v.class_pairs}, {"constant_instances", v.constant_instances}, {"failures", v.failures}};
    em.emit(std::move(r));
  }
  {
    Record r = em.base("float_cross_check");
    r.implication_ok = t.float_mismatches() == 0;
    r.detail = {{"mismatches", t.float_mismatches()}};
    em.emit(std::move(r));
  }
}

const oracle::PermSet* largest_with(const std::vector<oracle::PermSet>& normals,
                                    const std::function<bool(std::uint64_t)>& pred) {
  const oracle::PermSet* best = nullptr;
  for (const auto& n : normals)
    if (pred(n.size()) && (!best || n.size() > best->size())) best = &n;
  return best;
}

void suite_lattice_oracles(const SubgroupHandle& g, std::uint64_t subgroup_level_limit,
                           const std::vector<std::uint64_t>& primes, Emitter& em) {
  const std::size_t degree = g.ambient().degree();
  const oracle::PermSet gset = perm_set(g);
  auto compare = [&](const std::string& predicate, std::optional<std::uint64_t> p, bool match, json detail) {
    Record r = em.base(predicate);
    r.p = p;
    r.implication_ok = match;
    r.detail = std::move(detail);
    em.emit(std::move(r));
  };

  // Element-level brute force: classes and closures of explicit sets.
  auto normals = normal_subgroups(g);
  auto oracle_normals = oracle::normal_subgroups_by_classes(gset, degree);
  std::set<oracle::PermSet> oracle_normal_set(oracle_normals.begin(), oracle_normals.end());
  compare("oracle_normal_subgroups", std::nullopt, perm_sets(normals) == oracle_normal_set,
          {{"count", normals.size()}, {"oracle_count", oracle_normals.size()}});
  for (auto p : primes) {
    auto op = p_core(g, p);
    auto want = largest_with(oracle_normals, [&](std::uint64_t n) { return is_power_of(n, p); });
    compare("oracle_p_core", p, want && perm_set(op) == *want, {{"order", op.order()}});
    auto opp = p_prime_core(g, p);
    auto want_pp = largest_with(oracle_normals, [&](std::uint64_t n) { return n % p != 0; });
    compare("oracle_p_prime_core", p, want_pp && perm_set(opp) == *want_pp, {{"order", opp.order()}});
  }

  if (g.order() > subgroup_level_limit) {
    for (const char* name : {"oracle_all_subgroups", "oracle_subnormal", "oracle_components", "oracle_frattini",
                             "oracle_p_core_definitional"})
      em.skip(name, "order " + std::to_string(g.order()) + " above the subgroup-level oracle limit " +
                        std::to_string(subgroup_level_limit));
    return;
  }

  // Subgroup-level brute force: the full oracle lattice.
  auto lattice = oracle::all_subgroups(gset, degree);
  auto subs = all_subgroups(g);
  std::set<oracle::PermSet> lattice_set(lattice.begin(), lattice.end());
  compare("oracle_all_subgroups", std::nullopt, perm_sets(subs) == lattice_set,
          {{"count", subs.size()}, {"oracle_count", lattice.size()}});

  std::uint64_t subnormal = 0, mismatches = 0;
  std::optional<std::string> first_mismatch;
  for (const auto& h : subs) {
    bool ours = is_subnormal(g, h).is_subnormal;
    bool theirs = oracle::is_subnormal(lattice, gset, perm_set(h));
    subnormal += ours;
    if (ours != theirs) {
      ++mismatches;
      if (!first_mismatch) first_mismatch = subgroup_label(h);
    }
  }
  {
    Record r = em.base("oracle_subnormal");
    r.implication_ok = mismatches == 0;
    r.witness = first_mismatch;
    r.detail = {{"subgroups", subs.size()}, {"subnormal", subnormal}, {"mismatches", mismatches}};
    em.emit(std::move(r));
  }

  auto comps = components(g).components;
  auto oracle_comps = oracle::components(lattice, gset, degree);
  compare("oracle_components", std::nullopt,
          perm_sets(comps) == std::set<oracle::PermSet>(oracle_comps.begin(), oracle_comps.end()),
          {{"count", comps.size()}, {"oracle_count", oracle_comps.size()}});

  auto phi = frattini(g);
  compare("oracle_frattini", std::nullopt, perm_set(phi) == oracle::frattini(lattice, gset, degree),
          {{"order", phi.order()}});

  for (auto p : primes) {
    auto op = p_core(g, p);
    compare("oracle_p_core_definitional", p, perm_set(op) == oracle::p_core(gset, p, degree),
            {{"order", op.order()}});
  }
}

}  // namespace

const std::vector<std::string>& suite_names() { return kSuites; }

bool is_suite(const std::string& name) { return std::find(kSuites.begin(), kSuites.end(), name) != kSuites.end(); }

void SuiteConfig::set_cap(std::string_view assignment) {
  auto eq = assignment.find('=');
  if (eq == std::string_view::npos) throw ParseError("cap override must be KEY=VALUE", 0);
  std::string key = trim(assignment.substr(0, eq));
  std::uint64_t value = parse_uint(trim(assignment.substr(eq + 1)), key);
  auto dot = key.find('.');
  if (dot == std::string::npos) {
    caps.set(key, value);
    return;
  }
  std::string suite = key.substr(0, dot), name = key.substr(dot + 1);
  if (!is_suite(suite)) throw ParseError("unknown suite '" + suite + "' in cap override", 0);
  if (!is_suite_key(name)) Caps{}.set(name, value);  // rejects unknown cap names
  suite_caps[suite][name] = value;
}

void SuiteConfig::validate() const {
  for (const auto& s : suites)
    if (!is_suite(s)) throw ParseError("unknown suite '" + s + "'", 0);
  for (auto p : primes)
    if (!is_prime(p)) throw ParseError("not a prime: " + std::to_string(p), 0);
  if (jobs == 0) throw ParseError("jobs must be positive", 0);
  if (k_max < 1) throw ParseError("k-max must be positive", 0);
}

std::vector<std::string> SuiteConfig::selected_suites() const {
  if (suites.empty()) return kSuites;
  std::vector<std::string> out;
  for (const auto& s : kSuites)
    if (std::find(suites.begin(), suites.end(), s) != suites.end()) out.push_back(s);
  return out;
}

std::uint64_t SuiteConfig::suite_limit(const std::string& suite, const std::string& key) const {
  if (auto it = suite_caps.find(suite); it != suite_caps.end())
    if (auto jt = it->second.find(key); jt != it->second.end()) return jt->second;
  if (auto it = kSuiteDefaults.find(suite); it != kSuiteDefaults.end())
    if (auto jt = it->second.find(key); jt != it->second.end()) return std::min(jt->second, max_order);
  return max_order;
}

Caps SuiteConfig::caps_for(const std::string& suite, const CorpusEntry& e) const {
  Caps c = caps;
  for (const auto& [k, v] : e.caps) c.set(k, v);
  if (auto it = suite_caps.find(suite); it != suite_caps.end())
    for (const auto& [k, v] : it->second)
      if (!is_suite_key(k)) c.set(k, v);
  return c;
}

void apply_config_text(SuiteConfig& cfg, std::string_view text) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::string body = trim(line);
    if (body.empty()) continue;
    auto eq = body.find('=');
    if (eq == std::string::npos) throw ParseError("expected key = value", line_no);
    std::string key = trim(std::string_view(body).substr(0, eq));
    std::string value = trim(std::string_view(body).substr(eq + 1));
    try {
      if (key == "suites") cfg.suites = split_list(value);
      else if (key == "corpus") cfg.corpus_path = value;
      else if (key == "groups") cfg.groups = split_list(value);
      else if (key == "tags") cfg.tags = split_list(value);
      else if (key == "max-order") cfg.max_order = parse_uint(value, key);
      else if (key == "p") {
        cfg.primes.clear();
        for (const auto& s : split_list(value)) cfg.primes.push_back(parse_uint(s, key));
      } else if (key == "seed") cfg.seed = parse_uint(value, key);
      else if (key == "jobs") cfg.jobs = parse_uint(value, key);
      else if (key == "out") cfg.out = value;
      else if (key == "k-max") cfg.k_max = static_cast<int>(parse_uint(value, key));
      else if (key == "timing") {
        if (value != "true" && value != "false") throw ParseError("timing must be true or false", 0);
        cfg.timing = value == "true";
      } else if (key == "caps") {
        cfg.set_cap(value);
      } else {
        throw ParseError("unknown key '" + key + "'", 0);
      }
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    }
  }
}

std::vector<CorpusEntry> select_entries(const SuiteConfig& cfg, const std::vector<CorpusEntry>& entries) {
  std::vector<CorpusEntry> out;
  for (const auto& e : entries) {
    if (e.order > cfg.max_order) continue;
    if (!cfg.groups.empty() && std::find(cfg.groups.begin(), cfg.groups.end(), e.name) == cfg.groups.end()) continue;
    if (!std::all_of(cfg.tags.begin(), cfg.tags.end(), [&](const std::string& t) { return e.has_tag(t); })) continue;
    out.push_back(e);
  }
  return out;
}

void Runner::run_item(const std::string& suite, const Item& it, std::vector<Record>& out) {
  const LoadedGroup& lg = groups_[it.group];
  Emitter em(cfg_, suite, lg, it.p, out);
  try {
    Caps caps = cfg_.caps_for(suite, lg.entry);
    if (suite == "characters") {
      suite_characters(ambient(it.group, caps)->whole(), lg.entry.name, cfg_.seed, em);
      return;
    }
    if (suite == "lattice-oracles") {
      auto primes = prime_divisors(lg.group.order());
      if (!cfg_.primes.empty())
        std::erase_if(primes, [&](auto p) { return std::find(cfg_.primes.begin(), cfg_.primes.end(), p) == cfg_.primes.end(); });
      suite_lattice_oracles(ambient(it.group, caps)->whole(), cfg_.suite_limit(suite, "subgroup_level_max_order"), primes,
                            em);
      return;
    }
    const std::uint64_t p = *it.p;
    if (suite == "weak-subnormal") return suite_weak_subnormal(ambient(it.group, caps)->whole(), p, lg.entry, em);
    if (suite == "psolvable-structure") return suite_psolvable(ambient(it.group, caps)->whole(), p, em);
    auto ctx = context(it.group, caps, p);
    if (suite == "baer-suzuki-classic" || suite == "p1-core" || suite == "p2-core" || suite == "p3-core") {
      for (ElemId x : p_element_reps(*ctx)) {
        if (suite == "baer-suzuki-classic") em.from_predicate(classical_baer_suzuki(*ctx, x));
        else if (suite == "p1-core") em.from_predicate(property_p1(*ctx, x));
        else if (suite == "p2-core") em.from_predicate(property_p2(*ctx, x));
        else em.from_predicate(property_p3(*ctx, x));
      }
    } else if (suite == "glauberman") {
      suite_glauberman(*ctx, em);
    } else if (suite == "gamma-sets") {
      suite_gamma(*ctx, cfg_.k_max, em);
    } else if (suite == "multicommutator") {
      for (const auto& pr : multicommutator_scan(*ctx, cfg_.k_max)) em.from_predicate(pr);
      for (const auto& pr : multicommutator_scan(*ctx, cfg_.k_max, true)) em.from_predicate(pr);
    } else if (suite == "commutator-singularity") {
      for (const auto& pr : commutator_singularity_scan(*ctx)) em.from_predicate(pr);
    } else if (suite == "abelian-sylow") {
      suite_abelian_sylow(*ctx, em);
    }
  } catch (const CapExceeded& e) {
    em.skip("suite", e.what());
  } catch (const std::exception& e) {
    Record r = em.base("internal_error");
    r.implication_ok = false;
    r.status = e.what();
    em.emit(std::move(r));
  }
}

RunResult Runner::run() {
  std::vector<std::string> suites = cfg_.selected_suites();
  // Records decided before any work (profile exclusions, suite order
  // limits) occupy their own slots in canonical order.
  struct Slot {
    std::optional<Item> item;
    std::vector<Record> fixed;
  };
  std::vector<Slot> slots;
  for (std::size_t si = 0; si < suites.size(); ++si) {
    const std::string& suite = suites[si];
    const std::uint64_t limit = cfg_.suite_limit(suite);
    for (std::size_t gi = 0; gi < groups_.size(); ++gi) {
      const LoadedGroup& lg = groups_[gi];
      std::optional<std::string> reason;
      if (lg.entry.skips(suite)) reason = "excluded by the corpus profile of " + lg.entry.name;
      else if (lg.group.order() > limit)
        reason = "order " + std::to_string(lg.group.order()) + " above the " + suite + " limit " + std::to_string(limit);
      if (reason) {
        Slot s;
        Emitter em(cfg_, suite, lg, std::nullopt, s.fixed);
        em.skip("suite", *reason);
        slots.push_back(std::move(s));
        continue;
      }
      if (!per_prime(suite)) {
        slots.push_back({Item{si, gi, std::nullopt}, {}});
        continue;
      }
      for (auto p : prime_divisors(lg.group.order())) {
        if (!cfg_.primes.empty() && std::find(cfg_.primes.begin(), cfg_.primes.end(), p) == cfg_.primes.end())
          continue;
        slots.push_back({Item{si, gi, p}, {}});
      }
    }
  }
  parallel_for(slots.size(), cfg_.jobs, [&](std::size_t i) {
    if (slots[i].item) run_item(suites[slots[i].item->suite], *slots[i].item, slots[i].fixed);
  });
  RunResult res;
  for (auto& s : slots)
    for (auto& r : s.fixed) {
      switch (r.outcome()) {
        case Record::Outcome::fail: ++res.failures; break;
        case Record::Outcome::skipped: ++res.skipped; break;
        case Record::Outcome::open: ++res.open; break;
        case Record::Outcome::pass: break;
      }
      res.records.push_back(std::move(r));
    }
  return res;
}

RunResult run_suites(const SuiteConfig& cfg, const std::vector<LoadedGroup>& groups) {
  cfg.validate();
  return Runner(cfg, groups).run();
}

}  // namespace grpaudit
