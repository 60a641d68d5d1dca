#include "grpaudit/fitting.hpp"

#include <algorithm>

#include "grpaudit/group_ops.hpp"
#include "grpaudit/lattice.hpp"

namespace grpaudit {

namespace {

std::vector<ElemId> class_representatives(const SubgroupHandle& g) {
  if (g.is_whole()) return g.ambient().classes().representatives;
  std::vector<ElemId> reps;
  for (const auto& orbit : conjugacy_orbits(g)) reps.push_back(orbit.front());
  return reps;
}

/// {x in G : [x, s] in N for every generator s of G}, for N normal in G.
SubgroupHandle commutes_modulo(const SubgroupHandle& g, const SubgroupHandle& n) {
  const Ambient& amb = g.ambient();
  ElementSet m(amb.size());
  g.members().for_each([&](ElemId x) {
    for (ElemId s : g.generators())
      if (!n.contains(amb.comm(x, s))) return;
    m.set(x);
  });
  return SubgroupHandle::from_members(g.ambient_ptr(), std::move(m));
}

struct StoredComponents {
  std::vector<std::pair<ElementSet, std::vector<ElemId>>> items;
};

}  // namespace

bool is_perfect(const SubgroupHandle& g) { return derived_subgroup(g).order() == g.order(); }

bool is_simple(const SubgroupHandle& g) {
  if (g.is_trivial()) return false;
  for (ElemId x : class_representatives(g)) {
    if (x == Ambient::identity()) continue;
    std::vector<ElemId> one{x};
    if (normal_closure_of(g, one).order() != g.order()) return false;
  }
  return true;
}

bool is_quasisimple(const SubgroupHandle& g) {
  if (g.is_trivial() || !is_perfect(g)) return false;
  SubgroupHandle z = center(g);
  if (z.order() == g.order()) return false;
  for (ElemId x : class_representatives(g)) {
    if (z.contains(x)) continue;
    std::vector<ElemId> gens = z.generators();
    gens.push_back(x);
    if (normal_closure_of(g, gens).order() != g.order()) return false;
  }
  return true;
}

std::vector<SubgroupHandle> upper_central_series(const SubgroupHandle& g) {
  std::vector<SubgroupHandle> series{g.ambient().trivial()};
  while (true) {
    SubgroupHandle next = commutes_modulo(g, series.back());
    if (next.order() == series.back().order()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_nilpotent(const SubgroupHandle& g) { return upper_central_series(g).back().order() == g.order(); }

SubgroupHandle fitting(const SubgroupHandle& g) {
  SubgroupHandle f = g.ambient().trivial();
  for (std::uint64_t p : prime_divisors(g.order())) f = join(f, p_core(g, p));
  return f;
}

ComponentSet components(const SubgroupHandle& g) {
  require_cap("lattice", g.ambient().caps().lattice_cap, g.order());
  const AmbientPtr& ap = g.ambient_ptr();
  auto stored = ap->memo<StoredComponents>("components:" + g.members().key(), [&] {
    StoredComponents out;
    auto add = [&](const SubgroupHandle& k) {
      for (const auto& it : out.items)
        if (it.first == k.members()) return;
      out.items.emplace_back(k.members(), k.generators());
    };
    if (is_solvable(g)) return out;
    if (is_quasisimple(g)) {
      add(g);
      return out;
    }
    auto normals = normal_subgroups(g);
    for (const auto& n : normals) {
      if (n.order() == g.order()) continue;
      bool maximal = std::none_of(normals.begin(), normals.end(), [&](const SubgroupHandle& m) {
        return m.order() > n.order() && m.order() < g.order() && m.contains(n);
      });
      if (!maximal) continue;
      for (const auto& c : components(n).components) add(c);
    }
    return out;
  });
  ComponentSet cs;
  cs.layer = ap->trivial();
  for (const auto& [members, gens] : stored->items) {
    cs.components.emplace_back(ap, members, gens);
    cs.layer = join(cs.layer, cs.components.back());
  }
  sort_canonical(cs.components);
  return cs;
}

SubgroupHandle layer(const SubgroupHandle& g) { return components(g).layer; }

SubgroupHandle generalized_fitting(const SubgroupHandle& g) { return join(fitting(g), layer(g)); }

SubgroupHandle z_star_p(const SubgroupHandle& g, std::uint64_t p) {
  SubgroupHandle opp = p_prime_core(g, p);
  if (opp.is_trivial()) return center(g);
  Quotient q = quotient_group(g, opp);
  // Image elements commuting with every image generator form the center.
  std::vector<Permutation> gens;
  for (ElemId s : q.generator_sources) gens.push_back(q.map(s));
  const Ambient& amb = g.ambient();
  ElementSet m(amb.size());
  g.members().for_each([&](ElemId x) {
    Permutation image = q.map(x);
    for (const auto& s : gens)
      if (image * s != s * image) return;
    m.set(x);
  });
  return SubgroupHandle::from_members(g.ambient_ptr(), std::move(m));
}

SubgroupHandle z_star_p_by_commutators(const SubgroupHandle& g, std::uint64_t p) {
  return commutes_modulo(g, p_prime_core(g, p));
}

std::vector<SubgroupHandle> minimal_normal_subgroups(const SubgroupHandle& g) {
  auto normals = normal_subgroups(g);
  std::vector<SubgroupHandle> out;
  for (const auto& n : normals) {
    if (n.is_trivial()) continue;
    bool minimal = std::none_of(normals.begin(), normals.end(), [&](const SubgroupHandle& m) {
      return !m.is_trivial() && m.order() < n.order() && n.contains(m);
    });
    if (minimal) out.push_back(n);
  }
  return out;
}

SubgroupHandle socle(const SubgroupHandle& g) {
  SubgroupHandle s = g.ambient().trivial();
  for (const auto& n : minimal_normal_subgroups(g)) s = join(s, n);
  return s;
}

bool sylow_is_maximal(const SubgroupHandle& g, std::uint64_t p) {
  auto s = sylow_subgroup(g, p);
  if (s.order() == g.order()) return false;
  auto m = maximal_overgroups(g, s);
  return m.size() == 1 && m[0].order() == s.order();
}

NonsolvableStructureVerdict verify_nonsolvable_structure(const SubgroupHandle& g, std::uint64_t p,
                                                         const SubgroupHandle& r) {
  NonsolvableStructureVerdict v;
  if (is_p_solvable(g, p) || !p_core(g, p).is_trivial() || !is_weakly_subnormal(g, r, p).is_weakly_subnormal)
    return v;
  v.hypotheses_met = true;
  auto fstar = generalized_fitting(g);
  auto comps = components(g);
  v.fstar_order = fstar.order();
  v.component_count = comps.components.size();
  v.fstar_quasisimple = is_quasisimple(fstar);
  auto minimal = minimal_normal_subgroups(g);
  v.fstar_minimal_normal = std::any_of(minimal.begin(), minimal.end(), [&](const auto& n) { return n == fstar; });
  v.triple_cover_layer = !comps.components.empty() && center(comps.layer).order() == 3 &&
                         std::all_of(comps.components.begin(), comps.components.end(),
                                     [](const auto& t) { return t.order() == 1080; });
  if (v.fstar_minimal_normal && v.component_count > 1 && join(comps.layer, r).order() == g.order()) {
    const auto& t = comps.components.front();
    auto n = normalizer(g, t);
    auto section = quotient_group(n, centralizer_of(n, t));
    v.section_sylow_maximal = sylow_is_maximal(Ambient::create(section.image)->whole(), 2);
  }
  return v;
}

}  // namespace grpaudit
