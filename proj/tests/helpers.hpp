#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "grpaudit/ambient.hpp"
#include "grpaudit/oracle.hpp"
#include "grpaudit/subgroup.hpp"
#include "grpaudit/zoo.hpp"

namespace testing_support {

using namespace grpaudit;

inline Permutation perm(const std::string& cycles, std::size_t degree) {
  return Permutation::from_cycles(cycles, degree);
}

inline AmbientPtr ambient(const PermGroup& g, Caps caps = {}) { return Ambient::create(g, caps); }

inline SubgroupHandle sub(const AmbientPtr& amb, const std::vector<std::string>& gens) {
  std::vector<Permutation> ps;
  for (const auto& s : gens) ps.push_back(perm(s, amb->degree()));
  return closure(amb, ps);
}

inline oracle::PermSet as_set(const SubgroupHandle& h) {
  oracle::PermSet out;
  for (ElemId x : h.elements()) out.insert(h.ambient().element(x));
  return out;
}

inline oracle::PermSet elements_of(const PermGroup& g) {
  auto e = g.elements();
  return {e.begin(), e.end()};
}

inline std::vector<std::uint64_t> sorted(std::vector<std::uint64_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

/// First element (in id order) of the given order.
inline ElemId first_of_order(const Ambient& amb, std::uint64_t order) {
  for (ElemId i = 0; i < amb.size(); ++i)
    if (amb.order(i) == order) return i;
  throw std::runtime_error("no element of order " + std::to_string(order));
}

}  // namespace testing_support
