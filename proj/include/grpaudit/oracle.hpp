#pragma once

// Brute-force reference computations on explicit sets of permutations. They
// share nothing with the stabilizer-chain or element-id machinery and exist
// to cross-check it on small groups.

#include <cstdint>
#include <set>
#include <vector>

#include "grpaudit/permutation.hpp"

namespace grpaudit::oracle {

using PermSet = std::set<Permutation>;

/// All products of generators, by breadth-first search.
PermSet closure(const std::vector<Permutation>& gens, std::size_t degree);
PermSet closure(const PermSet& gens, std::size_t degree);

std::uint64_t order_by_powering(const Permutation& g);

/// Orbits of G on itself under conjugation, each sorted, ordered by their
/// smallest member.
std::vector<PermSet> conjugacy_classes(const PermSet& g);

PermSet centralizer(const PermSet& g, const Permutation& x);
PermSet normalizer(const PermSet& g, const PermSet& h);
bool is_normal(const PermSet& g, const PermSet& h);
PermSet normal_closure(const PermSet& g, const PermSet& h, std::size_t degree);

/// Every subgroup, as joins of cyclic subgroups. Intended for |G| <= 200.
std::vector<PermSet> all_subgroups(const PermSet& g, std::size_t degree);
std::vector<PermSet> normal_subgroups(const PermSet& g, std::size_t degree);
/// Normal subgroups as the join-closure of the conjugacy classes, without
/// enumerating subgroups. Sorted by order, then members.
std::vector<PermSet> normal_subgroups_by_classes(const PermSet& g, std::size_t degree);
std::vector<PermSet> maximal_subgroups(const std::vector<PermSet>& lattice, const PermSet& g);

/// Existence of a chain H = H_0 normal in H_1 ... normal in H_k = G through
/// members of the lattice.
bool is_subnormal(const std::vector<PermSet>& lattice, const PermSet& g, const PermSet& h);

/// {x : the normal closure of <x> is a p-group} (resp. has order prime to p).
PermSet p_core(const PermSet& g, std::uint64_t p, std::size_t degree);
PermSet p_prime_core(const PermSet& g, std::uint64_t p, std::size_t degree);

/// Elements that can be dropped from every generating set.
PermSet frattini(const std::vector<PermSet>& lattice, const PermSet& g, std::size_t degree);

bool is_perfect(const PermSet& g, std::size_t degree);
/// Perfect, and the quotient by the center is simple (checked on the lattice).
bool is_quasisimple(const PermSet& g, std::size_t degree);
/// Quasisimple subnormal subgroups.
std::vector<PermSet> components(const std::vector<PermSet>& lattice, const PermSet& g,
                                std::size_t degree);

}  // namespace grpaudit::oracle
