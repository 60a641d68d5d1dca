#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "grpaudit/subgroup.hpp"

namespace grpaudit {

bool is_perfect(const SubgroupHandle& g);
bool is_simple(const SubgroupHandle& g);
/// Perfect, and simple modulo the center.
bool is_quasisimple(const SubgroupHandle& g);

/// Z_0 = 1 <= Z_1 = Z(G) <= ... until it stabilizes.
std::vector<SubgroupHandle> upper_central_series(const SubgroupHandle& g);
bool is_nilpotent(const SubgroupHandle& g);

/// F(G), the join of O_p(G) over the primes dividing |G|.
SubgroupHandle fitting(const SubgroupHandle& g);

struct ComponentSet {
  std::vector<SubgroupHandle> components;  // canonical order
  SubgroupHandle layer;                    // E(G)
};

/// Components of G: those of its maximal normal subgroups, or G itself when
/// G is quasisimple. Requires |G| <= lattice cap.
ComponentSet components(const SubgroupHandle& g);
SubgroupHandle layer(const SubgroupHandle& g);
/// F*(G) = F(G) E(G).
SubgroupHandle generalized_fitting(const SubgroupHandle& g);

/// Preimage of the center of G/O_p'(G), computed in the coset action.
SubgroupHandle z_star_p(const SubgroupHandle& g, std::uint64_t p);
/// {x : [x, g] in O_p'(G) for all g}, without forming the quotient.
SubgroupHandle z_star_p_by_commutators(const SubgroupHandle& g, std::uint64_t p);

std::vector<SubgroupHandle> minimal_normal_subgroups(const SubgroupHandle& g);
SubgroupHandle socle(const SubgroupHandle& g);

/// Some (hence every) Sylow p-subgroup of G is a maximal subgroup of G.
bool sylow_is_maximal(const SubgroupHandle& g, std::uint64_t p);

/// Shape of F*(G) around a weakly subnormal p-subgroup R of a group that is
/// not p-solvable and has O_p(G) = 1.
struct NonsolvableStructureVerdict {
  bool hypotheses_met = false;
  std::uint64_t fstar_order = 0;
  std::size_t component_count = 0;
  bool fstar_quasisimple = false;
  bool fstar_minimal_normal = false;
  /// Z(E(G)) has order 3 and every component has order 3 * 360.
  bool triple_cover_layer = false;
  /// Evaluated when E(G) is minimal normal with several components and
  /// G = E(G)R: whether N_G(T)/C_G(T) has a Sylow 2-subgroup that is maximal.
  std::optional<bool> section_sylow_maximal;

  bool all_pass(std::uint64_t p) const {
    bool shape = fstar_quasisimple || (p == 2 && (fstar_minimal_normal || triple_cover_layer));
    return shape && section_sylow_maximal.value_or(true);
  }
};

NonsolvableStructureVerdict verify_nonsolvable_structure(const SubgroupHandle& g, std::uint64_t p,
                                                         const SubgroupHandle& r);

}  // namespace grpaudit
