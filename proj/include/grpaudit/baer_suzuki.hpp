#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "grpaudit/group_ops.hpp"
#include "grpaudit/subgroup.hpp"

namespace grpaudit {

/// g = g_p * g_p' = g_p' * g_p with g_p a p-element and g_p' a p'-element,
/// both powers of g.
struct PDecomposition {
  Permutation g_p;
  Permutation g_p_prime;
};

PDecomposition p_decompose(const Permutation& g, std::uint64_t p);

bool is_p_element(const Permutation& g, std::uint64_t p);
bool is_p_singular(const Permutation& g, std::uint64_t p);
bool is_p_regular(const Permutation& g, std::uint64_t p);

/// Order-level versions used by the scans.
inline bool order_is_p_element(std::uint64_t n, std::uint64_t p) { return is_power_of(n, p); }
inline bool order_is_p_singular(std::uint64_t n, std::uint64_t p) { return n % p == 0; }
inline bool order_is_p_regular(std::uint64_t n, std::uint64_t p) { return n % p != 0; }

/// Outcome of checking one implication (or biconditional) on one element.
///
/// implication_ok = !hypothesis_holds || conclusion_holds. converse_ok is only
/// meaningful for biconditionals and stays true otherwise. Records with
/// asserted = false come from scans of open statements and never count as
/// failures; their status says what was observed.
struct PredicateReport {
  std::string group_id;
  std::uint64_t p = 0;
  std::size_t class_index = 0;
  std::string predicate;
  Permutation x;
  std::uint64_t x_order = 0;
  std::optional<int> k;
  bool hypothesis_holds = false;
  bool conclusion_holds = false;
  bool implication_ok = true;
  bool converse_ok = true;
  bool asserted = true;
  std::optional<Permutation> witness;
  std::optional<Permutation> witness2;  // second member of a pair witness
  std::string status;

  bool ok() const { return !asserted || (implication_ok && converse_ok); }
};

/// Per-(G, p) data shared by all predicates on that pair.
struct PrimeContext {
  SubgroupHandle g;
  std::uint64_t p = 0;
  SubgroupHandle op;  // O_p(G)
  std::shared_ptr<const ClassInfo> classes;
  std::string group_id;

  PrimeContext(const SubgroupHandle& group, std::uint64_t prime, std::string id = {});
};

/// [x,g] a p-element for every p'-element g of prime power order; conclusion
/// x in O_p(G).
PredicateReport property_p1(const PrimeContext& ctx, ElemId x);
/// xy is 1 or p-singular for every p-element y; conclusion x in O_p(G).
PredicateReport property_p2(const PrimeContext& ctx, ElemId x);
/// r divides o(xy) for every prime r != p and nontrivial r-element y; checked
/// as a biconditional with x in O_p(G).
PredicateReport property_p3(const PrimeContext& ctx, ElemId x);
/// <x, x^g> a p-group for every g; biconditional with x in O_p(G).
PredicateReport classical_baer_suzuki(const PrimeContext& ctx, ElemId x);

PredicateReport property_p1(const SubgroupHandle& g, ElemId x, std::uint64_t p);
PredicateReport property_p2(const SubgroupHandle& g, ElemId x, std::uint64_t p);
PredicateReport property_p3(const SubgroupHandle& g, ElemId x, std::uint64_t p);

/// Seven equivalent forms of the Z_p* theorem, each evaluated on its own.
struct GlaubermanBattery {
  static constexpr int kItems = 7;
  static const char* item_name(int i);

  std::optional<bool> items[kItems];  // empty when skipped
  bool agree = true;                  // all computed items equal
  std::uint64_t fusion_pairs = 0;     // pairs examined by the fusion item
};

GlaubermanBattery glauberman_battery(const PrimeContext& ctx, ElemId x);
GlaubermanBattery glauberman_battery(const SubgroupHandle& g, ElemId x, std::uint64_t p);

/// Gamma_k(x) = {[g, x, ..., x] (k times) : g in G} as sorted ids.
struct GammaSet {
  int k = 0;
  ElemId base = 0;
  std::vector<ElemId> elements;

  bool contains(ElemId e) const;
};

GammaSet gamma_k(const SubgroupHandle& g, ElemId x, int k);

/// For each p-element class representative x and 1 <= k <= k_max: is ab a
/// p-element for all a, b in Gamma_k(x), and is x in O_p(G)? Records
/// "conjecture-violated" when the first holds and the second fails. With
/// commutator_variant, [a,b] replaces ab (exploratory).
std::vector<PredicateReport> multicommutator_scan(const PrimeContext& ctx, int k_max,
                                                  bool commutator_variant = false);

/// For each class representative x of order p: is [x,g] 1 or p-singular for
/// all g, and is x in O_p(G)? Higher p-power orders satisfying the hypothesis
/// outside O_p(G) are recorded as "order-restriction". When O_p(G) is
/// abelian, an asserted record checks that some [x,g] is a nontrivial
/// p'-element for each x of order p outside O_p(G).
std::vector<PredicateReport> commutator_singularity_scan(const PrimeContext& ctx);

/// Abelian Sylow p-subgroup: every p-element x outside O_p(G) has an
/// r-element y (r != p prime) with [x,y] a nontrivial p'-element. Empty when
/// the Sylow subgroup is nonabelian.
std::vector<PredicateReport> abelian_sylow_check(const PrimeContext& ctx);

/// Every coset Ng whose image in G/N is a nontrivial r-element contains an
/// r-element y, built as a power of g.
struct CosetLiftVerdict {
  std::uint64_t r = 0;
  std::size_t cosets_checked = 0;
  std::size_t failures = 0;
  std::vector<std::pair<ElemId, ElemId>> witnesses;  // (coset rep g, lift y)

  bool ok() const { return failures == 0; }
};

CosetLiftVerdict coset_prime_power_lift(const SubgroupHandle& g, const SubgroupHandle& n, std::uint64_t r);

}  // namespace grpaudit
