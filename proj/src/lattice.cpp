#include "grpaudit/lattice.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "grpaudit/group_ops.hpp"

namespace grpaudit {

namespace {

struct StoredSubgroup {
  ElementSet members;
  std::vector<ElemId> gens;
};

struct StoredLattice {
  std::vector<StoredSubgroup> subgroups;
  std::vector<bool> maximal;
};

StoredSubgroup store(const SubgroupHandle& h) { return {h.members(), h.generators()}; }

SubgroupHandle restore(const AmbientPtr& amb, const StoredSubgroup& s) {
  return SubgroupHandle(amb, s.members, s.gens);
}

std::vector<ElemId> class_representatives(const SubgroupHandle& g) {
  if (g.is_whole()) return g.ambient().classes().representatives;
  std::vector<ElemId> reps;
  for (const auto& orbit : conjugacy_orbits(g)) reps.push_back(orbit.front());
  return reps;
}

std::vector<ElemId> pp_generators_in(const SubgroupHandle& g) {
  std::vector<ElemId> out;
  for (ElemId x : g.ambient().prime_power_cyclic_generators())
    if (g.contains(x)) out.push_back(x);
  return out;
}

void require_lattice(const SubgroupHandle& g) {
  require_cap("lattice", g.ambient().caps().lattice_cap, g.order());
}

}  // namespace

SubnormalVerdict is_subnormal(const SubgroupHandle& g, const SubgroupHandle& h) {
  if (!g.contains(h)) throw DomainError("subgroup is not contained in the group");
  SubnormalVerdict v;
  v.witness_chain.push_back(g);
  SubgroupHandle k = g;
  while (k.order() != h.order()) {
    SubgroupHandle next = normal_closure(k, h);
    if (next.order() == k.order()) break;
    v.witness_chain.push_back(next);
    k = std::move(next);
  }
  v.is_subnormal = k.order() == h.order();
  return v;
}

SubgroupHandle sylow_containing(const SubgroupHandle& g, const SubgroupHandle& start, std::uint64_t p) {
  if (!is_p_group(start, p)) throw DomainError("start subgroup is not a p-group");
  const Ambient& amb = g.ambient();
  std::uint64_t target = p_part(g.order(), p);
  if (g.order() == target) return g;
  SubgroupHandle pgrp = start;
  auto members = g.elements();
  while (pgrp.order() < target) {
    bool grown = false;
    for (ElemId x : members) {
      if (pgrp.contains(x) || !is_power_of(amb.order(x), p)) continue;
      if (normalizes(x, pgrp)) {
        pgrp = extend(pgrp, x);
        grown = true;
        break;
      }
    }
    if (!grown) throw std::logic_error("normalizer ascent stalled below the Sylow order");
  }
  return pgrp;
}

SubgroupHandle sylow_subgroup(const SubgroupHandle& g, std::uint64_t p) {
  return sylow_containing(g, g.ambient().trivial(), p);
}

SubgroupHandle core(const SubgroupHandle& g, const SubgroupHandle& h) {
  const Ambient& amb = g.ambient();
  ElementSet k = h.members();
  auto current = h.elements();
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<ElemId> kept;
    for (ElemId x : current) {
      bool stays = true;
      for (ElemId s : g.generators())
        if (!k.test(amb.conj(x, s))) {
          stays = false;
          break;
        }
      if (stays) kept.push_back(x);
      else {
        k.reset(x);
        changed = true;
      }
    }
    current = std::move(kept);
  }
  return SubgroupHandle::from_members(g.ambient_ptr(), std::move(k));
}

SubgroupHandle p_core(const SubgroupHandle& g, std::uint64_t p) {
  return core(g, sylow_subgroup(g, p));
}

SubgroupHandle p_core_by_conjugates(const SubgroupHandle& g, std::uint64_t p) {
  SubgroupHandle syl = sylow_subgroup(g, p);
  std::unordered_set<ElementSet, ElementSetHash> seen{syl.members()};
  std::vector<SubgroupHandle> orbit{syl};
  ElementSet meet = syl.members();
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (ElemId s : g.generators()) {
      SubgroupHandle c = conjugate(orbit[i], s);
      if (seen.insert(c.members()).second) {
        meet &= c.members();
        orbit.push_back(std::move(c));
      }
    }
  return SubgroupHandle::from_members(g.ambient_ptr(), std::move(meet));
}

SubgroupHandle p_prime_core(const SubgroupHandle& g, std::uint64_t p) {
  const Ambient& amb = g.ambient();
  SubgroupHandle k = amb.trivial();
  for (ElemId x : class_representatives(g)) {
    if (amb.order(x) % p == 0 || k.contains(x)) continue;
    std::vector<ElemId> one{x};
    SubgroupHandle n = normal_closure_of(g, one);
    if (n.order() % p != 0) k = join(k, n);
  }
  return k;
}

std::vector<SubgroupHandle> normal_subgroups(const SubgroupHandle& g) {
  require_lattice(g);
  const AmbientPtr& ap = g.ambient_ptr();
  auto stored = ap->memo<std::vector<StoredSubgroup>>("normal:" + g.members().key(), [&] {
    std::unordered_set<ElementSet, ElementSetHash> seen;
    std::vector<SubgroupHandle> base;
    for (ElemId x : class_representatives(g)) {
      if (x == Ambient::identity()) continue;
      std::vector<ElemId> one{x};
      SubgroupHandle n = normal_closure_of(g, one);
      if (seen.insert(n.members()).second) base.push_back(std::move(n));
    }
    // Every normal subgroup is the join of the closures of its classes.
    std::vector<SubgroupHandle> all{ap->trivial()};
    seen.insert(all.front().members());
    for (auto& b : base) all.push_back(b);
    for (std::size_t i = 1; i < all.size(); ++i)
      for (const auto& b : base) {
        if (all[i].contains(b)) continue;
        SubgroupHandle j = join(all[i], b);
        if (seen.insert(j.members()).second) all.push_back(std::move(j));
      }
    sort_canonical(all);
    std::vector<StoredSubgroup> out;
    for (const auto& h : all) out.push_back(store(h));
    return out;
  });
  std::vector<SubgroupHandle> out;
  for (const auto& s : *stored) out.push_back(restore(ap, s));
  return out;
}

SubgroupHandle p_core_from_lattice(const SubgroupHandle& g, std::uint64_t p) {
  SubgroupHandle best = g.ambient().trivial();
  for (auto& n : normal_subgroups(g))
    if (is_p_group(n, p) && n.order() > best.order()) best = n;
  return best;
}

SubgroupHandle p_prime_core_from_lattice(const SubgroupHandle& g, std::uint64_t p) {
  SubgroupHandle best = g.ambient().trivial();
  for (auto& n : normal_subgroups(g))
    if (n.order() % p != 0 && n.order() > best.order()) best = n;
  return best;
}

namespace {

std::shared_ptr<const StoredLattice> lattice_of(const SubgroupHandle& g) {
  require_lattice(g);
  const AmbientPtr& ap = g.ambient_ptr();
  return ap->memo<StoredLattice>("lattice:" + g.members().key(), [&] {
    // Cyclic extension over conjugacy classes: only class representatives
    // are extended, and each new subgroup brings its whole class along.
    auto pp = pp_generators_in(g);
    std::uint64_t count_cap = ap->caps().subgroup_count_cap;
    std::uint64_t proper_bound = g.order() / 2;
    std::unordered_map<ElementSet, std::size_t, ElementSetHash> index;
    std::vector<SubgroupHandle> list;
    std::vector<std::size_t> class_of;
    std::vector<std::size_t> reps;
    auto add_class = [&](SubgroupHandle k) {
      std::size_t cls = reps.size();
      reps.push_back(list.size());
      std::size_t first = list.size();
      index.emplace(k.members(), list.size());
      list.push_back(std::move(k));
      class_of.push_back(cls);
      for (std::size_t i = first; i < list.size(); ++i)
        for (ElemId s : g.generators()) {
          SubgroupHandle c = conjugate(list[i], s);
          if (index.emplace(c.members(), list.size()).second) {
            require_cap("subgroup_count", count_cap, list.size() + 1);
            list.push_back(std::move(c));
            class_of.push_back(cls);
          }
        }
    };
    add_class(ap->trivial());
    std::vector<bool> class_maximal;
    for (std::size_t c = 0; c < reps.size(); ++c) {
      SubgroupHandle h = list[reps[c]];
      bool proper_extension = false;
      for (ElemId x : pp) {
        if (h.contains(x)) continue;
        auto k = extend_bounded(h, x, proper_bound);
        if (!k) continue;
        proper_extension = true;
        if (!index.count(k->members())) add_class(std::move(*k));
      }
      class_maximal.push_back(!proper_extension && h.order() != g.order());
    }
    if (g.order() > 1) {
      add_class(g);
      class_maximal.push_back(false);
    }
    std::vector<std::size_t> perm(list.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(),
              [&](std::size_t a, std::size_t b) { return canonical_less(list[a], list[b]); });
    StoredLattice out;
    for (std::size_t i : perm) {
      out.subgroups.push_back(store(list[i]));
      out.maximal.push_back(class_maximal[class_of[i]]);
    }
    return out;
  });
}

}  // namespace

std::vector<SubgroupHandle> all_subgroups(const SubgroupHandle& g) {
  auto lat = lattice_of(g);
  std::vector<SubgroupHandle> out;
  for (const auto& s : lat->subgroups) out.push_back(restore(g.ambient_ptr(), s));
  return out;
}

std::vector<SubgroupHandle> maximal_subgroups(const SubgroupHandle& g) {
  auto lat = lattice_of(g);
  std::vector<SubgroupHandle> out;
  for (std::size_t i = 0; i < lat->subgroups.size(); ++i)
    if (lat->maximal[i]) out.push_back(restore(g.ambient_ptr(), lat->subgroups[i]));
  return out;
}

std::vector<SubgroupHandle> maximal_overgroups(const SubgroupHandle& g, const SubgroupHandle& r) {
  std::vector<SubgroupHandle> out;
  if (r.order() == g.order()) return out;
  for (auto& m : maximal_subgroups(g))
    if (m.contains(r)) out.push_back(std::move(m));
  return out;
}

namespace {

/// Breadth-first walk over proper overgroups of R; stops when visit returns false.
void walk_proper_overgroups(const SubgroupHandle& g, const SubgroupHandle& r,
                            const std::function<bool(const SubgroupHandle&)>& visit) {
  require_lattice(g);
  if (r.order() == g.order()) return;
  auto pp = pp_generators_in(g);
  std::unordered_set<ElementSet, ElementSetHash> seen{r.members()};
  std::vector<SubgroupHandle> queue{r};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    if (!visit(queue[i])) return;
    for (ElemId x : pp) {
      if (queue[i].contains(x)) continue;
      auto k = extend_bounded(queue[i], x, g.order() / 2);
      if (!k) continue;
      if (seen.insert(k->members()).second) {
        require_cap("subgroup_count", g.ambient().caps().subgroup_count_cap, queue.size() + 1);
        queue.push_back(std::move(*k));
      }
    }
  }
}

}  // namespace

std::vector<SubgroupHandle> proper_overgroups(const SubgroupHandle& g, const SubgroupHandle& r) {
  std::vector<SubgroupHandle> out;
  walk_proper_overgroups(g, r, [&](const SubgroupHandle& h) {
    out.push_back(h);
    return true;
  });
  sort_canonical(out);
  return out;
}

SubgroupHandle frattini(const SubgroupHandle& g) {
  if (g.is_trivial()) return g;
  ElementSet meet = g.members();
  for (const auto& m : maximal_subgroups(g)) meet &= m.members();
  return SubgroupHandle::from_members(g.ambient_ptr(), std::move(meet));
}

WeakSubnormalityReport is_weakly_subnormal(const SubgroupHandle& g, const SubgroupHandle& r,
                                           std::optional<std::uint64_t> p) {
  WeakSubnormalityReport rep;
  rep.subnormal_in_g = is_subnormal(g, r).is_subnormal;
  if (!rep.subnormal_in_g) {
    rep.is_weakly_subnormal = true;
    walk_proper_overgroups(g, r, [&](const SubgroupHandle& h) {
      if (is_subnormal(h, r).is_subnormal) return true;
      rep.non_subnormal_overgroup = h;
      rep.is_weakly_subnormal = false;
      return false;
    });
  }
  rep.maximal_overgroups = maximal_overgroups(g, r);
  if (rep.maximal_overgroups.size() == 1) rep.unique_maximal = rep.maximal_overgroups.front();
  if (p && is_p_group(r, *p)) {
    rep.criterion_evaluated = true;
    rep.unique_m = rep.unique_maximal.has_value();
    if (rep.unique_m) {
      const SubgroupHandle& m = *rep.unique_maximal;
      rep.r_in_op_m = p_core(m, *p).contains(r);
      rep.m_not_normal = !is_normal_in(m, g);
    }
    rep.criterion = rep.unique_m && rep.r_in_op_m && rep.m_not_normal;
    rep.routes_agree = rep.criterion == rep.is_weakly_subnormal;
  }
  return rep;
}

bool is_solvable(const SubgroupHandle& g) {
  SubgroupHandle k = g;
  while (!k.is_trivial()) {
    SubgroupHandle d = derived_subgroup(k);
    if (d.order() == k.order()) return false;
    k = std::move(d);
  }
  return true;
}

bool is_p_solvable(const SubgroupHandle& g, std::uint64_t p) {
  SubgroupHandle k = g;
  while (!k.is_trivial()) {
    // O^{p'}(K): generated by the p-elements.
    SubgroupHandle a = normal_closure(k, sylow_subgroup(k, p));
    if (a.order() < k.order()) {
      k = std::move(a);
      continue;
    }
    // O^p(K): generated by the p'-elements.
    SubgroupHandle b = k.ambient().trivial();
    for (std::uint64_t q : prime_divisors(k.order()))
      if (q != p) b = join(b, normal_closure(k, sylow_subgroup(k, q)));
    if (b.order() < k.order()) {
      k = std::move(b);
      continue;
    }
    return false;
  }
  return true;
}

bool is_elementary_abelian(const SubgroupHandle& q) {
  if (!is_abelian(q)) return false;
  auto primes = prime_divisors(q.order());
  if (primes.size() > 1) return false;
  bool ok = true;
  q.members().for_each([&](ElemId x) {
    if (x != Ambient::identity() && q.ambient().order(x) != primes.front()) ok = false;
  });
  return ok;
}

bool is_special(const SubgroupHandle& q) {
  if (q.is_trivial() || !is_prime_power(q.order())) return false;
  if (is_elementary_abelian(q)) return true;
  SubgroupHandle phi = frattini(q);
  SubgroupHandle d = derived_subgroup(q);
  SubgroupHandle z = center(q);
  return phi.members() == d.members() && d.members() == z.members();
}

bool acts_irreducibly(const SubgroupHandle& r, const SubgroupHandle& q, const SubgroupHandle& phi_q) {
  const Ambient& amb = q.ambient();
  auto relems = r.elements();
  ElementSet done = phi_q.members();
  for (ElemId v : q.elements()) {
    if (done.test(v)) continue;
    std::vector<ElemId> gens = phi_q.generators();
    for (ElemId x : relems) gens.push_back(amb.conj(v, x));
    SubgroupHandle w = closure(q.ambient_ptr(), gens);
    if (w.order() != q.order()) return false;
    done.set(v);
  }
  return true;
}

bool PSolvableStructureVerdict::all_pass() const {
  if (!hypotheses_met) return false;
  return std::all_of(clauses.begin(), clauses.end(), [](const Clause& c) { return c.holds; });
}

PSolvableStructureVerdict verify_psolvable_structure(const SubgroupHandle& g, std::uint64_t p,
                                                     const SubgroupHandle& r) {
  PSolvableStructureVerdict v;
  if (!is_p_group(r, p)) {
    v.unmet_reason = "R is not a p-group";
    return v;
  }
  if (!p_core(g, p).is_trivial()) {
    v.unmet_reason = "O_p(G) is nontrivial";
    return v;
  }
  if (!is_p_solvable(g, p)) {
    v.unmet_reason = "G is not p-solvable";
    return v;
  }
  if (!is_weakly_subnormal(g, r, p).is_weakly_subnormal) {
    v.unmet_reason = "R is not weakly subnormal";
    return v;
  }
  v.hypotheses_met = true;
  const Ambient& amb = g.ambient();
  SubgroupHandle q = p_prime_core(g, p);
  v.q_subgroup = q;
  auto primes = prime_divisors(q.order());
  bool q_group = primes.size() == 1;
  if (q_group) v.q = primes.front();
  v.clauses.push_back({"Q = O_p'(G) is a q-group", q_group});
  v.clauses.push_back({"G = QR", join(q, r).order() == g.order()});
  v.clauses.push_back({"Q is special", q_group && is_special(q)});
  if (q_group) {
    SubgroupHandle phi = frattini(q);
    bool centralizes = true;
    for (ElemId x : r.generators())
      for (ElemId y : phi.generators())
        if (amb.mul(x, y) != amb.mul(y, x)) centralizes = false;
    v.clauses.push_back({"R centralizes Phi(Q)", centralizes});
    v.clauses.push_back({"R acts irreducibly on Q/Phi(Q)", acts_irreducibly(r, q, phi)});
  } else {
    v.clauses.push_back({"R centralizes Phi(Q)", false});
    v.clauses.push_back({"R acts irreducibly on Q/Phi(Q)", false});
  }
  v.clauses.push_back({"R is a Sylow p-subgroup", r.order() == p_part(g.order(), p)});
  v.clauses.push_back({"G is solvable", is_solvable(g)});
  return v;
}

}  // namespace grpaudit
