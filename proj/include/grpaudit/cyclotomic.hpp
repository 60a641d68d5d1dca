#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace grpaudit {

/// Element of Z[zeta_e] written as sum_t c_t zeta_e^t over all e powers.
/// The representation is not unique (the powers are linearly dependent), so
/// equality is decided through images, never by comparing coefficients.
class Cyclotomic {
 public:
  Cyclotomic() = default;
  explicit Cyclotomic(std::uint32_t e) : coeffs_(e, 0) {}
  Cyclotomic(std::uint32_t e, std::vector<std::int64_t> coeffs);
  static Cyclotomic integer(std::uint32_t e, std::int64_t n);
  static Cyclotomic root(std::uint32_t e, std::uint32_t t);  // zeta_e^t

  std::uint32_t exponent() const { return static_cast<std::uint32_t>(coeffs_.size()); }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  /// Complex conjugate: zeta^t -> zeta^-t.
  Cyclotomic conj() const;
  /// Galois action zeta -> zeta^k, gcd(k, e) = 1.
  Cyclotomic galois(std::uint32_t k) const;

  /// Image under zeta -> z in F_l, z a primitive e-th root of unity mod l.
  std::uint64_t reduce(std::uint64_t l, std::uint64_t z) const;
  /// Value under zeta -> exp(2 pi i / e).
  std::complex<double> to_complex() const;

  /// L1 norm of the coefficients; bounds |value| in every embedding.
  std::uint64_t weight() const;

 private:
  std::vector<std::int64_t> coeffs_;
};

}  // namespace grpaudit
