#include "grpaudit/subgroup.hpp"

#include <algorithm>
#include <optional>

namespace grpaudit {

namespace {

// Breadth-first closure of `seed` (already closed, may be just {1}) under
// right multiplication by gens.
ElementSet close_from(const Ambient& amb, ElementSet members, std::vector<ElemId> frontier,
                      std::span<const ElemId> gens) {
  for (std::size_t q = 0; q < frontier.size(); ++q) {
    ElemId x = frontier[q];
    for (ElemId s : gens) {
      ElemId y = amb.mul(x, s);
      if (!members.test(y)) {
        members.set(y);
        frontier.push_back(y);
      }
    }
  }
  return members;
}

// <H, extra> as a union of right cosets Ht; gives up once the order would
// exceed limit.
std::optional<ElementSet> close_by_cosets(const SubgroupHandle& h, std::span<const ElemId> gens,
                                          std::uint64_t limit) {
  const Ambient& amb = h.ambient();
  ElementSet members = h.members();
  auto helems = h.elements();
  std::uint64_t size = helems.size();
  std::vector<ElemId> reps{Ambient::identity()};
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (ElemId s : gens) {
      ElemId y = amb.mul(reps[i], s);
      if (members.test(y)) continue;
      size += helems.size();
      if (size > limit) return std::nullopt;
      for (ElemId x : helems) members.set(amb.mul(x, y));
      reps.push_back(y);
    }
  return members;
}

std::vector<ElemId> nontrivial(std::span<const ElemId> gens) {
  std::vector<ElemId> out;
  for (ElemId g : gens)
    if (g != Ambient::identity() && std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
  return out;
}

}  // namespace

SubgroupHandle::SubgroupHandle(AmbientPtr ambient, ElementSet members, std::vector<ElemId> gens)
    : ambient_(std::move(ambient)), members_(std::move(members)), gens_(std::move(gens)) {
  order_ = members_.count();
}

SubgroupHandle SubgroupHandle::from_members(AmbientPtr ambient, ElementSet members) {
  const Ambient& amb = *ambient;
  std::size_t target = members.count();
  if (!members.test(Ambient::identity())) throw DomainError("member set lacks the identity");
  std::vector<ElemId> gens;
  ElementSet current(amb.size());
  current.set(Ambient::identity());
  std::size_t have = 1;
  // Prefer elements of large order so generating sets stay short.
  std::vector<ElemId> cand = members.to_vector();
  std::stable_sort(cand.begin(), cand.end(),
                   [&](ElemId a, ElemId b) { return amb.order(a) > amb.order(b); });
  for (ElemId g : cand) {
    if (have == target) break;
    if (current.test(g)) continue;
    gens.push_back(g);
    auto elems = current.to_vector();
    current = close_from(amb, current, elems, gens);
    have = current.count();
    if (!current.subset_of(members)) throw DomainError("member set is not closed under multiplication");
  }
  if (have != target) throw DomainError("member set is not a subgroup");
  return SubgroupHandle(std::move(ambient), std::move(members), std::move(gens));
}

bool SubgroupHandle::contains(const Permutation& g) const {
  auto id = ambient_->find(g);
  return id && members_.test(*id);
}

bool SubgroupHandle::contains(const SubgroupHandle& h) const {
  for (ElemId g : h.gens_)
    if (!members_.test(g)) return false;
  return true;
}

PermGroup SubgroupHandle::group() const {
  auto perms = generator_perms();
  if (perms.empty()) return PermGroup::trivial(ambient_->degree());
  return PermGroup(std::move(perms));
}

std::vector<Permutation> SubgroupHandle::generator_perms() const {
  std::vector<Permutation> out;
  for (ElemId g : gens_) out.push_back(ambient_->element(g));
  return out;
}

bool operator==(const SubgroupHandle& a, const SubgroupHandle& b) {
  return a.contains(b) && b.contains(a);
}

bool canonical_less(const SubgroupHandle& a, const SubgroupHandle& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return lex_less(a.members(), b.members());
}

void sort_canonical(std::vector<SubgroupHandle>& subgroups) {
  std::sort(subgroups.begin(), subgroups.end(), canonical_less);
}

SubgroupHandle closure(const AmbientPtr& ambient, std::span<const ElemId> gens) {
  auto g = nontrivial(gens);
  ElementSet one(ambient->size());
  one.set(Ambient::identity());
  auto members = close_from(*ambient, std::move(one), {Ambient::identity()}, g);
  return SubgroupHandle(ambient, std::move(members), std::move(g));
}

SubgroupHandle closure(const AmbientPtr& ambient, const std::vector<Permutation>& gens) {
  std::vector<ElemId> ids;
  for (const auto& p : gens) ids.push_back(ambient->id_of(p));
  return closure(ambient, ids);
}

SubgroupHandle extend(const SubgroupHandle& h, ElemId g) {
  if (h.contains(g)) return h;
  auto gens = h.generators();
  gens.push_back(g);
  auto members = close_by_cosets(h, gens, UINT64_MAX);
  return SubgroupHandle(h.ambient_ptr(), std::move(*members), std::move(gens));
}

std::optional<SubgroupHandle> extend_bounded(const SubgroupHandle& h, ElemId g, std::uint64_t limit) {
  if (h.contains(g)) return h;
  auto gens = h.generators();
  gens.push_back(g);
  auto members = close_by_cosets(h, gens, limit);
  if (!members) return std::nullopt;
  return SubgroupHandle(h.ambient_ptr(), std::move(*members), std::move(gens));
}

SubgroupHandle join(const SubgroupHandle& h, const SubgroupHandle& k) {
  if (h.contains(k)) return h;
  if (k.contains(h)) return k;
  auto gens = h.generators();
  for (ElemId g : k.generators())
    if (!h.contains(g)) gens.push_back(g);
  auto members = close_by_cosets(h, gens, UINT64_MAX);
  return SubgroupHandle(h.ambient_ptr(), std::move(*members), std::move(gens));
}

SubgroupHandle intersection(const SubgroupHandle& h, const SubgroupHandle& k) {
  ElementSet m = h.members();
  m &= k.members();
  return SubgroupHandle::from_members(h.ambient_ptr(), std::move(m));
}

SubgroupHandle conjugate(const SubgroupHandle& h, ElemId g) {
  const Ambient& amb = h.ambient();
  ElementSet m(amb.size());
  h.members().for_each([&](ElemId x) { m.set(amb.conj(x, g)); });
  std::vector<ElemId> gens;
  for (ElemId x : h.generators()) gens.push_back(amb.conj(x, g));
  return SubgroupHandle(h.ambient_ptr(), std::move(m), std::move(gens));
}

bool normalizes(ElemId g, const SubgroupHandle& h) {
  const Ambient& amb = h.ambient();
  for (ElemId x : h.generators())
    if (!h.contains(amb.conj(x, g))) return false;
  return true;
}

bool is_normal_in(const SubgroupHandle& n, const SubgroupHandle& g) {
  if (!g.contains(n)) return false;
  for (ElemId s : g.generators())
    if (!normalizes(s, n)) return false;
  return true;
}

bool is_p_group(const SubgroupHandle& h, std::uint64_t p) { return is_power_of(h.order(), p); }

bool is_abelian(const SubgroupHandle& h) {
  const Ambient& amb = h.ambient();
  const auto& gens = h.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (amb.mul(gens[i], gens[j]) != amb.mul(gens[j], gens[i])) return false;
  return true;
}

SubgroupHandle normal_closure_of(const SubgroupHandle& g, std::span<const ElemId> gens) {
  const Ambient& amb = g.ambient();
  SubgroupHandle k = closure(g.ambient_ptr(), gens);
  // Add conjugates of generators until the closure is stable under G's generators.
  for (std::size_t i = 0; i < k.generators().size(); ++i) {
    for (ElemId s : g.generators()) {
      ElemId c = amb.conj(k.generators()[i], s);
      if (!k.contains(c)) k = extend(k, c);
    }
  }
  return k;
}

SubgroupHandle normal_closure(const SubgroupHandle& g, const SubgroupHandle& h) {
  return normal_closure_of(g, h.generators());
}

SubgroupHandle center(const SubgroupHandle& g) { return centralizer_of(g, g); }

SubgroupHandle centralizer_of(const SubgroupHandle& g, const SubgroupHandle& h) {
  const Ambient& amb = g.ambient();
  ElementSet m(amb.size());
  g.members().for_each([&](ElemId x) {
    for (ElemId s : h.generators())
      if (amb.mul(x, s) != amb.mul(s, x)) return;
    m.set(x);
  });
  return SubgroupHandle::from_members(g.ambient_ptr(), std::move(m));
}

SubgroupHandle commutator_subgroup(const SubgroupHandle& a, const SubgroupHandle& b) {
  const Ambient& amb = a.ambient();
  std::vector<ElemId> comms;
  for (ElemId x : a.generators())
    for (ElemId y : b.generators()) comms.push_back(amb.comm(x, y));
  // [A, B] is normalized by A and B; close under both.
  SubgroupHandle ab = join(a, b);
  return normal_closure_of(ab, comms);
}

SubgroupHandle derived_subgroup(const SubgroupHandle& g) { return commutator_subgroup(g, g); }

std::vector<std::vector<ElemId>> conjugacy_orbits(const SubgroupHandle& g) {
  const Ambient& amb = g.ambient();
  std::vector<std::vector<ElemId>> out;
  ElementSet seen(amb.size());
  g.members().for_each([&](ElemId start) {
    if (seen.test(start)) return;
    std::vector<ElemId> orbit{start};
    seen.set(start);
    for (std::size_t q = 0; q < orbit.size(); ++q)
      for (ElemId s : g.generators()) {
        ElemId y = amb.conj(orbit[q], s);
        if (!seen.test(y)) {
          seen.set(y);
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  });
  return out;
}

}  // namespace grpaudit
