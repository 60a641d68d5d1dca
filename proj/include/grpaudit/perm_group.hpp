#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "grpaudit/permutation.hpp"

namespace grpaudit {

/// A permutation group given by generators, with a base and strong generating
/// set computed by deterministic Schreier-Sims.
///
/// Base points are the first points moved by generators and sifted residues, so two
/// groups built from the same generator list have identical chains.
class PermGroup {
 public:
  struct Level {
    Point base_point = 0;
    std::vector<Permutation> strong_gens;  // generators of the stabilizer of earlier base points
    std::vector<std::int32_t> slot;        // point -> index into transversal, -1 if not in orbit
    std::vector<Point> orbit;
    std::vector<Permutation> transversal;  // base_point^t = orbit[i]
    std::vector<Permutation> transversal_inv;
  };

  PermGroup() = default;

  /// Throws DomainError on an empty list or mixed degrees.
  explicit PermGroup(std::vector<Permutation> generators);
  /// Trivial group of the given degree.
  static PermGroup trivial(std::size_t degree);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Level>& chain() const { return levels_; }
  std::vector<Point> base() const;
  std::uint64_t order() const { return order_; }

  bool contains(const Permutation& g) const;

  /// Calls visit on every element exactly once. Throws CapExceeded if the
  /// order exceeds cap.
  void for_each_element(const std::function<void(const Permutation&)>& visit,
                        std::uint64_t cap = 200000) const;
  std::vector<Permutation> elements(std::uint64_t cap = 200000) const;

  /// Uniform random element from the chain (for pre-filters only).
  Permutation random_element(std::mt19937_64& rng) const;

 private:
  void schreier_sims();
  void append_level(Point base_point);
  void rebuild_level(std::size_t i);
  bool strip(Permutation& h, std::size_t from) const;

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> strong_;
  std::vector<Level> levels_;
  std::uint64_t order_ = 1;
};

}  // namespace grpaudit
