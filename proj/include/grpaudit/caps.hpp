#pragma once

#include <cstdint>
#include <string>

#include "grpaudit/errors.hpp"

namespace grpaudit {

/// Resource limits. Every exhaustive operation checks the relevant cap and
/// throws CapExceeded rather than degrading.
struct Caps {
  std::uint64_t element_cap = 200000;      // explicit element iteration
  std::uint64_t coset_degree_cap = 10000;  // quotient by coset action
  std::uint64_t lattice_cap = 2000;        // normal-subgroup / overgroup machinery
  std::uint64_t table_cap = 2048;          // precomputed multiplication table
  std::uint64_t subgroup_count_cap = 20000;
  std::uint64_t character_cap = 5000;
  std::uint64_t character_class_cap = 60;
  std::uint64_t pair_cap = 10000000;       // quadratic scans

  /// Sets a cap by name ("element", "coset_degree", "lattice", ...).
  /// Throws ParseError for unknown keys.
  void set(const std::string& key, std::uint64_t value);
};

inline void require_cap(const char* name, std::uint64_t limit, std::uint64_t requested) {
  if (requested > limit) throw CapExceeded(name, limit, requested);
}

}  // namespace grpaudit
