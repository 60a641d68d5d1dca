#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "grpaudit/ambient.hpp"

namespace grpaudit {

/// A subgroup of a fixed ambient group: its member set, a generating set, and
/// a reference to the ambient.
class SubgroupHandle {
 public:
  SubgroupHandle() = default;
  SubgroupHandle(AmbientPtr ambient, ElementSet members, std::vector<ElemId> gens);

  /// Subgroup with the given member set; a small generating set is chosen
  /// greedily. Throws DomainError if the set is not closed.
  static SubgroupHandle from_members(AmbientPtr ambient, ElementSet members);

  const Ambient& ambient() const { return *ambient_; }
  const AmbientPtr& ambient_ptr() const { return ambient_; }
  std::uint64_t order() const { return order_; }
  const ElementSet& members() const { return members_; }
  const std::vector<ElemId>& generators() const { return gens_; }
  std::vector<ElemId> elements() const { return members_.to_vector(); }

  bool contains(ElemId g) const { return members_.test(g); }
  bool contains(const Permutation& g) const;
  bool contains(const SubgroupHandle& h) const;  // h is a subgroup of *this

  bool is_trivial() const { return order_ == 1; }
  bool is_whole() const { return order_ == ambient_->size(); }

  /// The subgroup as a stand-alone permutation group.
  PermGroup group() const;
  std::vector<Permutation> generator_perms() const;

  /// Equality as mutual membership of generators.
  friend bool operator==(const SubgroupHandle& a, const SubgroupHandle& b);

 private:
  AmbientPtr ambient_;
  ElementSet members_;
  std::vector<ElemId> gens_;
  std::uint64_t order_ = 0;
};

/// Reproducible ordering: by order, then by sorted member list.
bool canonical_less(const SubgroupHandle& a, const SubgroupHandle& b);
void sort_canonical(std::vector<SubgroupHandle>& subgroups);

SubgroupHandle closure(const AmbientPtr& ambient, std::span<const ElemId> gens);
SubgroupHandle closure(const AmbientPtr& ambient, const std::vector<Permutation>& gens);
/// <H, g>
SubgroupHandle extend(const SubgroupHandle& h, ElemId g);
/// <H, g>, or nothing once its order would exceed limit.
std::optional<SubgroupHandle> extend_bounded(const SubgroupHandle& h, ElemId g, std::uint64_t limit);
/// <H, K>
SubgroupHandle join(const SubgroupHandle& h, const SubgroupHandle& k);
SubgroupHandle intersection(const SubgroupHandle& h, const SubgroupHandle& k);
/// H^g
SubgroupHandle conjugate(const SubgroupHandle& h, ElemId g);

bool is_normal_in(const SubgroupHandle& n, const SubgroupHandle& g);  // N normal in G
bool normalizes(ElemId g, const SubgroupHandle& h);
bool is_p_group(const SubgroupHandle& h, std::uint64_t p);
bool is_abelian(const SubgroupHandle& h);
/// Smallest normal subgroup of G containing H.
SubgroupHandle normal_closure(const SubgroupHandle& g, const SubgroupHandle& h);
SubgroupHandle normal_closure_of(const SubgroupHandle& g, std::span<const ElemId> gens);
SubgroupHandle center(const SubgroupHandle& g);
SubgroupHandle derived_subgroup(const SubgroupHandle& g);
/// [A, B] for subgroups normalizing each other
SubgroupHandle commutator_subgroup(const SubgroupHandle& a, const SubgroupHandle& b);
/// Elements of G commuting with every generator of H.
SubgroupHandle centralizer_of(const SubgroupHandle& g, const SubgroupHandle& h);
/// Conjugacy classes of G acting on itself, as sorted element lists.
std::vector<std::vector<ElemId>> conjugacy_orbits(const SubgroupHandle& g);

}  // namespace grpaudit
