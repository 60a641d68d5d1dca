#pragma once

#include <cstdint>
#include <vector>

namespace grpaudit {

/// The field with q = p^k elements via explicit addition and multiplication
/// tables. Elements are 0..q-1, read as base-p coefficient vectors of
/// polynomials modulo a fixed irreducible; 0 and 1 are the field's 0 and 1.
class FiniteField {
 public:
  /// Supported: q prime, or q in {4, 8, 9}. Throws DomainError otherwise.
  explicit FiniteField(std::uint32_t q);

  std::uint32_t order() const { return q_; }
  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return k_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_[a * q_ + b]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a * q_ + b]; }
  std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  std::uint32_t inv(std::uint32_t a) const;  // a != 0
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  std::uint32_t frobenius(std::uint32_t a) const { return pow(a, p_); }
  /// A generator of the multiplicative group.
  std::uint32_t primitive() const { return primitive_; }

 private:
  std::uint32_t q_, p_, k_;
  std::vector<std::uint32_t> add_, mul_, neg_, inv_;
  std::uint32_t primitive_ = 1;
};

}  // namespace grpaudit
