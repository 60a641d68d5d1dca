#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace grpaudit::modular {

/// Arithmetic in the prime field F_l for l < 2^31, so products fit in 64 bits.
struct Field {
  std::uint64_t l;

  explicit Field(std::uint64_t prime) : l(prime) {}

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % l; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + l - b) % l; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % l; }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : l - a; }
  std::uint64_t pow(std::uint64_t a, std::uint64_t k) const;
  std::uint64_t inv(std::uint64_t a) const;  // a != 0
  std::uint64_t from_signed(std::int64_t a) const {
    auto m = static_cast<std::int64_t>(l);
    return static_cast<std::uint64_t>(((a % m) + m) % m);
  }
  /// Smallest generator of the multiplicative group.
  std::uint64_t primitive_root() const;
  /// (primitive root)^((l-1)/e); requires e | l - 1.
  std::uint64_t root_of_unity(std::uint64_t e) const;
};

using Vec = std::vector<std::uint64_t>;
using Mat = std::vector<Vec>;  // row-major
using Poly = std::vector<std::uint64_t>;  // coefficients, lowest degree first

/// Smallest prime l > lower with l = 1 mod e, below bound. Returns 0 if none.
std::uint64_t find_prime(std::uint64_t e, std::uint64_t lower, std::uint64_t bound = (1ULL << 31));

/// Characteristic polynomial det(xI - A), monic, via Hessenberg reduction.
Poly char_poly(const Field& f, Mat a);
/// Evaluates p(A).
Mat poly_of_matrix(const Field& f, const Poly& p, const Mat& a);
/// Distinct roots in F_l, sorted. Uses equal-degree splitting with rng.
std::vector<std::uint64_t> distinct_roots(const Field& f, const Poly& p, std::mt19937_64& rng);
/// Basis of {v : A v = 0}.
std::vector<Vec> null_space(const Field& f, Mat a);
/// Reduces the vectors to reduced row-echelon form in place and returns the
/// pivot column of each remaining vector (zero rows are dropped).
std::vector<std::size_t> row_reduce(const Field& f, std::vector<Vec>& rows);

}  // namespace grpaudit::modular
