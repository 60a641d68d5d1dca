#include "grpaudit/group_ops.hpp"

#include <algorithm>
#include <limits>

namespace grpaudit {

std::uint64_t element_order(const Permutation& g) { return g.order(); }

ClassInfo::ClassInfo(const SubgroupHandle& g) : group_(g) {
  const Ambient& amb = g.ambient();
  class_of_.assign(amb.size(), std::numeric_limits<std::uint32_t>::max());
  if (g.is_whole()) {
    const ClassData& cd = amb.classes();
    reps_ = cd.representatives;
    sizes_ = cd.sizes;
    class_of_ = cd.class_of;
    members_.resize(reps_.size());
    for (ElemId x = 0; x < amb.size(); ++x) members_[cd.class_of[x]].push_back(x);
    return;
  }
  for (auto& orbit : conjugacy_orbits(g)) {
    auto c = static_cast<std::uint32_t>(reps_.size());
    for (ElemId x : orbit) class_of_[x] = c;
    reps_.push_back(orbit.front());
    sizes_.push_back(orbit.size());
    members_.push_back(std::move(orbit));
  }
}

Permutation ClassInfo::representative(std::size_t c) const {
  return group_.ambient().element(reps_[c]);
}

std::uint32_t ClassInfo::class_of(const Permutation& g) const {
  auto id = group_.ambient().find(g);
  if (!id || !group_.contains(*id)) throw DomainError("element is not in the group");
  return class_of_[*id];
}

std::uint32_t ClassInfo::power_map(std::size_t c, std::int64_t k) const {
  return class_of_[group_.ambient().pow(reps_[c], k)];
}

ClassInfo conjugacy_classes(const SubgroupHandle& g) {
  require_cap("element", g.ambient().caps().element_cap, g.order());
  return ClassInfo(g);
}

SubgroupHandle centralizer(const SubgroupHandle& g, ElemId x) {
  const Ambient& amb = g.ambient();
  require_cap("element", amb.caps().element_cap, g.order());
  ElementSet m(amb.size());
  g.members().for_each([&](ElemId h) {
    if (amb.mul(h, x) == amb.mul(x, h)) m.set(h);
  });
  return SubgroupHandle::from_members(g.ambient_ptr(), std::move(m));
}

SubgroupHandle normalizer(const SubgroupHandle& g, const SubgroupHandle& h) {
  const Ambient& amb = g.ambient();
  require_cap("element", amb.caps().element_cap, g.order());
  ElementSet m(amb.size());
  g.members().for_each([&](ElemId x) {
    if (normalizes(x, h)) m.set(x);
  });
  return SubgroupHandle::from_members(g.ambient_ptr(), std::move(m));
}

SubgroupHandle intersect(const SubgroupHandle& h, const SubgroupHandle& k) {
  if (h.ambient_ptr() != k.ambient_ptr()) throw DomainError("subgroups of different ambients");
  const SubgroupHandle& small = h.order() <= k.order() ? h : k;
  const SubgroupHandle& large = h.order() <= k.order() ? k : h;
  require_cap("element", h.ambient().caps().element_cap, small.order());
  ElementSet m(h.ambient().size());
  small.members().for_each([&](ElemId x) {
    if (large.contains(x)) m.set(x);
  });
  return SubgroupHandle::from_members(h.ambient_ptr(), std::move(m));
}

std::vector<Point> Quotient::images_of(ElemId g) const {
  std::vector<Point> img(coset_reps.size());
  for (std::size_t i = 0; i < img.size(); ++i)
    img[i] = static_cast<Point>(coset_of[ambient->mul(coset_reps[i], g)]);
  return img;
}

Quotient quotient_group(const SubgroupHandle& g, const SubgroupHandle& n) {
  if (!is_normal_in(n, g)) throw DomainError("subgroup is not normal");
  const Ambient& amb = g.ambient();
  std::uint64_t index = g.order() / n.order();
  require_cap("coset_degree", std::min<std::uint64_t>(amb.caps().coset_degree_cap, 65535), index);
  Quotient q;
  q.ambient = g.ambient_ptr();
  q.coset_of.assign(amb.size(), std::numeric_limits<std::uint32_t>::max());
  auto nelems = n.elements();
  g.members().for_each([&](ElemId x) {
    if (q.coset_of[x] != std::numeric_limits<std::uint32_t>::max()) return;
    auto c = static_cast<std::uint32_t>(q.coset_reps.size());
    q.coset_reps.push_back(x);
    for (ElemId y : nelems) q.coset_of[amb.mul(y, x)] = c;
  });
  std::vector<Permutation> gens;
  for (ElemId s : g.generators()) {
    gens.emplace_back(q.images_of(s));
    q.generator_sources.push_back(s);
  }
  if (gens.empty()) gens.push_back(Permutation::identity(index));
  q.image = PermGroup(std::move(gens));
  return q;
}

}  // namespace grpaudit
