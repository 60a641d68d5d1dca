#pragma once

#include <cstdint>
#include <vector>

#include "grpaudit/subgroup.hpp"

namespace grpaudit {

std::uint64_t element_order(const Permutation& g);

/// Conjugacy classes of a subgroup acting on itself, with Permutation
/// representatives and a power map.
class ClassInfo {
 public:
  explicit ClassInfo(const SubgroupHandle& g);

  std::size_t count() const { return reps_.size(); }
  const std::vector<ElemId>& representatives() const { return reps_; }
  Permutation representative(std::size_t c) const;
  const std::vector<std::uint64_t>& sizes() const { return sizes_; }
  /// Class index of a member of the group.
  std::uint32_t class_of(ElemId g) const { return class_of_[g]; }
  std::uint32_t class_of(const Permutation& g) const;
  /// Class of rep(c)^k.
  std::uint32_t power_map(std::size_t c, std::int64_t k) const;
  const std::vector<ElemId>& members(std::size_t c) const { return members_[c]; }

 private:
  SubgroupHandle group_;
  std::vector<ElemId> reps_;
  std::vector<std::uint64_t> sizes_;
  std::vector<std::uint32_t> class_of_;  // indexed by ambient id; valid for members only
  std::vector<std::vector<ElemId>> members_;
};

ClassInfo conjugacy_classes(const SubgroupHandle& g);

SubgroupHandle centralizer(const SubgroupHandle& g, ElemId x);
SubgroupHandle normalizer(const SubgroupHandle& g, const SubgroupHandle& h);
/// Smaller side is filtered through membership in the larger.
SubgroupHandle intersect(const SubgroupHandle& h, const SubgroupHandle& k);

/// G/N realized on the right cosets of N.
struct Quotient {
  AmbientPtr ambient;
  PermGroup image;
  std::vector<ElemId> coset_reps;      // minimal id of each coset
  std::vector<std::uint32_t> coset_of;  // ambient id -> coset index (members of G only)
  std::vector<ElemId> generator_sources;  // G generator behind each image generator
  /// Induced permutation of a member g of G on the cosets.
  std::vector<Point> images_of(ElemId g) const;
  Permutation map(ElemId g) const { return Permutation(images_of(g)); }
};

/// Throws DomainError if N is not normal in G, CapExceeded if the index is
/// above the coset-degree cap.
Quotient quotient_group(const SubgroupHandle& g, const SubgroupHandle& n);

}  // namespace grpaudit
