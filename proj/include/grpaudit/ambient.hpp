#pragma once

#include <any>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "grpaudit/caps.hpp"
#include "grpaudit/element_set.hpp"
#include "grpaudit/perm_group.hpp"
#include "grpaudit/permutation.hpp"

namespace grpaudit {

class SubgroupHandle;

/// Conjugacy classes of the ambient group.
struct ClassData {
  std::vector<ElemId> representatives;  // minimal element id of each class
  std::vector<std::uint64_t> sizes;
  std::vector<std::uint32_t> class_of;  // element id -> class index
  std::vector<std::uint64_t> rep_orders;

  std::size_t count() const { return representatives.size(); }
};

/// An explicitly enumerated group: every element gets a dense id (ids follow
/// the lexicographic order of image arrays, so the identity is id 0), plus
/// multiplication, inversion, orders and conjugacy classes by id. All subgroup
/// machinery works on subsets of these ids.
///
/// Immutable after construction; the lazily built caches are guarded and
/// safe for concurrent readers.
class Ambient : public std::enable_shared_from_this<Ambient> {
 public:
  static std::shared_ptr<const Ambient> create(PermGroup group, Caps caps = {});

  const PermGroup& group() const { return group_; }
  const Caps& caps() const { return caps_; }
  std::size_t size() const { return elements_.size(); }
  std::size_t degree() const { return group_.degree(); }

  static constexpr ElemId identity() { return 0; }
  const Permutation& element(ElemId i) const { return elements_[i]; }
  std::optional<ElemId> find(std::span<const Point> images) const;
  std::optional<ElemId> find(const Permutation& p) const { return find(p.images()); }
  /// Throws DomainError when p is not an element.
  ElemId id_of(const Permutation& p) const;

  ElemId mul(ElemId a, ElemId b) const;
  ElemId inv(ElemId a) const { return inverse_[a]; }
  ElemId conj(ElemId x, ElemId g) const { return mul(mul(inverse_[g], x), g); }
  ElemId comm(ElemId a, ElemId b) const { return mul(mul(inverse_[a], inverse_[b]), mul(a, b)); }
  ElemId pow(ElemId a, std::int64_t k) const;
  std::uint64_t order(ElemId a) const { return orders_[a]; }
  bool has_table() const { return !table_.empty(); }

  const ClassData& classes() const;

  /// One generator (the minimal id) for each cyclic subgroup of prime-power
  /// order. Every subgroup is generated by the members of this list it contains.
  const std::vector<ElemId>& prime_power_cyclic_generators() const;

  SubgroupHandle whole() const;
  SubgroupHandle trivial() const;

  /// Type-erased write-once memo table keyed by string. compute() runs outside
  /// the lock so memoized functions may recurse.
  template <class T>
  std::shared_ptr<const T> memo(const std::string& key, const std::function<T()>& compute) const {
    {
      std::lock_guard lock(memo_mutex_);
      auto it = memo_.find(key);
      if (it != memo_.end()) return std::any_cast<std::shared_ptr<const T>>(it->second);
    }
    auto value = std::make_shared<const T>(compute());
    std::lock_guard lock(memo_mutex_);
    auto [it, inserted] = memo_.emplace(key, value);
    return std::any_cast<std::shared_ptr<const T>>(it->second);
  }

 private:
  Ambient(PermGroup group, Caps caps);
  void build();

  PermGroup group_;
  Caps caps_;
  std::vector<Permutation> elements_;
  std::vector<ElemId> slots_;  // open addressing, value id+1
  std::uint64_t slot_mask_ = 0;
  std::vector<ElemId> inverse_;
  std::vector<std::uint64_t> orders_;
  std::vector<std::uint16_t> table_;

  mutable std::once_flag classes_once_;
  mutable ClassData classes_;
  mutable std::once_flag ppgens_once_;
  mutable std::vector<ElemId> ppgens_;

  mutable std::mutex memo_mutex_;
  mutable std::unordered_map<std::string, std::any> memo_;
};

using AmbientPtr = std::shared_ptr<const Ambient>;

bool is_prime(std::uint64_t n);
bool is_prime_power(std::uint64_t n);
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
/// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);
bool is_power_of(std::uint64_t n, std::uint64_t p);

}  // namespace grpaudit
