#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grpaudit/subgroup.hpp"

namespace grpaudit {

struct SubnormalVerdict {
  bool is_subnormal = false;
  /// G = K_0 >= K_1 >= ... with K_{i+1} the normal closure of H in K_i; ends
  /// at H exactly when H is subnormal.
  std::vector<SubgroupHandle> witness_chain;
};

SubnormalVerdict is_subnormal(const SubgroupHandle& g, const SubgroupHandle& h);

/// A Sylow p-subgroup of G grown from `start` (a p-subgroup of G, trivial by
/// default) by adjoining p-elements of the normalizer, scanned in id order.
SubgroupHandle sylow_subgroup(const SubgroupHandle& g, std::uint64_t p);
SubgroupHandle sylow_containing(const SubgroupHandle& g, const SubgroupHandle& start, std::uint64_t p);

/// Largest subgroup of H normalized by G.
SubgroupHandle core(const SubgroupHandle& g, const SubgroupHandle& h);

/// O_p(G), as the core of a Sylow p-subgroup.
SubgroupHandle p_core(const SubgroupHandle& g, std::uint64_t p);
/// O_p(G), as the intersection over the conjugation orbit of a Sylow subgroup.
SubgroupHandle p_core_by_conjugates(const SubgroupHandle& g, std::uint64_t p);
/// Largest normal subgroup whose order is coprime to p (p = 0 is not allowed).
SubgroupHandle p_prime_core(const SubgroupHandle& g, std::uint64_t p);
/// Both routes through the normal-subgroup lattice.
SubgroupHandle p_core_from_lattice(const SubgroupHandle& g, std::uint64_t p);
SubgroupHandle p_prime_core_from_lattice(const SubgroupHandle& g, std::uint64_t p);

/// All normal subgroups of G in canonical order. Requires |G| <= lattice cap.
std::vector<SubgroupHandle> normal_subgroups(const SubgroupHandle& g);

/// All subgroups of G in canonical order, by cyclic extension from the
/// trivial group. Requires |G| <= lattice cap.
std::vector<SubgroupHandle> all_subgroups(const SubgroupHandle& g);
std::vector<SubgroupHandle> maximal_subgroups(const SubgroupHandle& g);

/// M(R): maximal subgroups of G containing R, in canonical order.
std::vector<SubgroupHandle> maximal_overgroups(const SubgroupHandle& g, const SubgroupHandle& r);
/// Proper overgroups H of R (R <= H < G), by upward closure H -> <H, x>
/// starting from R. Independent of the full lattice.
std::vector<SubgroupHandle> proper_overgroups(const SubgroupHandle& g, const SubgroupHandle& r);

SubgroupHandle frattini(const SubgroupHandle& g);

struct WeakSubnormalityReport {
  bool is_weakly_subnormal = false;  // definitional route
  bool subnormal_in_g = false;
  /// First proper overgroup in which R is not subnormal, if any.
  std::optional<SubgroupHandle> non_subnormal_overgroup;
  std::vector<SubgroupHandle> maximal_overgroups;
  std::optional<SubgroupHandle> unique_maximal;
  // Criterion route, evaluated when R is a p-group for the given prime.
  bool criterion_evaluated = false;
  bool unique_m = false;
  bool r_in_op_m = false;
  bool m_not_normal = false;
  bool criterion = false;
  bool routes_agree = true;
};

/// Definitional route: not subnormal in G, subnormal in every proper
/// overgroup. When p is given and R is a p-group, the maximal-subgroup
/// criterion is evaluated too and must agree.
WeakSubnormalityReport is_weakly_subnormal(const SubgroupHandle& g, const SubgroupHandle& r,
                                           std::optional<std::uint64_t> p = std::nullopt);

bool is_solvable(const SubgroupHandle& g);
bool is_p_solvable(const SubgroupHandle& g, std::uint64_t p);

struct Clause {
  std::string name;
  bool holds = false;
};

struct PSolvableStructureVerdict {
  bool hypotheses_met = false;
  std::string unmet_reason;
  std::uint64_t q = 0;
  std::optional<SubgroupHandle> q_subgroup;  // O_p'(G)
  std::vector<Clause> clauses;
  bool all_pass() const;
};

/// For p-solvable G with O_p(G) = 1 and R a weakly subnormal p-subgroup:
/// Q = O_p'(G) is a special q-group, G = QR, R centralizes Phi(Q) and acts
/// irreducibly on Q/Phi(Q), R is Sylow and G is solvable.
PSolvableStructureVerdict verify_psolvable_structure(const SubgroupHandle& g, std::uint64_t p,
                                                     const SubgroupHandle& r);

bool is_special(const SubgroupHandle& q);
bool is_elementary_abelian(const SubgroupHandle& q);
/// No R-invariant subgroup strictly between Phi(Q) and Q.
bool acts_irreducibly(const SubgroupHandle& r, const SubgroupHandle& q, const SubgroupHandle& phi_q);

}  // namespace grpaudit
