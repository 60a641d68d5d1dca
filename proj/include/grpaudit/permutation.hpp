#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace grpaudit {

using Point = std::uint16_t;

/// A bijection of {0, ..., n-1}, stored as its image array.
///
/// Products act on the right: (a * b)(i) = b(a(i)), so i^(ab) = (i^a)^b and
/// conjugation is x^g = g^-1 x g. Commutators follow [a, b] = a^-1 b^-1 a b.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);  // identity
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  /// Parses disjoint-cycle notation with 1-based points, e.g. "(1,2)(3,4,5)".
  /// Whitespace as separator is accepted too. "()" is the identity.
  static Permutation from_cycles(std::string_view text, std::size_t degree);

  /// Builds a permutation from 0-based cycles.
  static Permutation from_cycle_list(const std::vector<std::vector<Point>>& cycles,
                                     std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  Point operator[](std::size_t i) const { return images_[i]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  Permutation pow(std::int64_t k) const;
  std::uint64_t order() const;  // lcm of cycle lengths
  std::vector<std::vector<Point>> cycles() const;  // nontrivial cycles
  std::size_t first_moved() const;                 // degree() if identity

  /// 1-based cycle notation, "()" for the identity.
  std::string to_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<Point> images_;
};

Permutation conjugate(const Permutation& x, const Permutation& g);  // g^-1 x g
Permutation commutator(const Permutation& a, const Permutation& b);

std::uint64_t hash_images(std::span<const Point> images);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const { return hash_images(p.images()); }
};

}  // namespace grpaudit
