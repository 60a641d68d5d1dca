#include "grpaudit/finite_field.hpp"

#include "grpaudit/ambient.hpp"
#include "grpaudit/errors.hpp"

namespace grpaudit {

namespace {

// Low-degree coefficients of a monic irreducible of degree k over F_p
// (x^2 + x + 1, x^3 + x + 1, x^2 + 1).
std::vector<std::uint32_t> modulus_tail(std::uint32_t q) {
  switch (q) {
    case 4: return {1, 1};
    case 8: return {1, 1, 0};
    case 9: return {1, 0};
    default: return {};
  }
}

}  // namespace

FiniteField::FiniteField(std::uint32_t q) : q_(q) {
  if (q >= 2 && is_prime(q)) {
    p_ = q;
    k_ = 1;
  } else if (q == 4 || q == 8) {
    p_ = 2;
    k_ = q == 4 ? 2 : 3;
  } else if (q == 9) {
    p_ = 3;
    k_ = 2;
  } else {
    throw DomainError("unsupported field order " + std::to_string(q));
  }
  auto digits = [&](std::uint32_t a) {
    std::vector<std::uint32_t> d(k_);
    for (std::uint32_t i = 0; i < k_; ++i, a /= p_) d[i] = a % p_;
    return d;
  };
  auto number = [&](const std::vector<std::uint32_t>& d) {
    std::uint32_t a = 0;
    for (std::uint32_t i = k_; i-- > 0;) a = a * p_ + d[i];
    return a;
  };
  auto tail = modulus_tail(q);
  add_.resize(std::size_t{q} * q);
  mul_.resize(std::size_t{q} * q);
  neg_.resize(q);
  for (std::uint32_t a = 0; a < q; ++a) {
    auto da = digits(a);
    std::vector<std::uint32_t> dn(k_);
    for (std::uint32_t i = 0; i < k_; ++i) dn[i] = (p_ - da[i]) % p_;
    neg_[a] = number(dn);
    for (std::uint32_t b = 0; b < q; ++b) {
      auto db = digits(b);
      std::vector<std::uint32_t> s(k_);
      for (std::uint32_t i = 0; i < k_; ++i) s[i] = (da[i] + db[i]) % p_;
      add_[a * q + b] = number(s);
      std::vector<std::uint32_t> prod(2 * k_, 0);
      for (std::uint32_t i = 0; i < k_; ++i)
        for (std::uint32_t j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      // Reduce with x^k = -(tail).
      for (std::uint32_t d = 2 * k_ - 1; d >= k_ && k_ > 1; --d) {
        std::uint32_t c = prod[d];
        prod[d] = 0;
        for (std::uint32_t i = 0; i < k_; ++i)
          prod[d - k_ + i] = (prod[d - k_ + i] + (p_ - tail[i]) % p_ * c) % p_;
      }
      if (k_ == 1) prod[0] = static_cast<std::uint32_t>((std::uint64_t{a} * b) % q);
      prod.resize(k_);
      mul_[a * q + b] = number(prod);
    }
  }
  inv_.assign(q, 0);
  for (std::uint32_t a = 1; a < q; ++a)
    for (std::uint32_t b = 1; b < q; ++b)
      if (mul(a, b) == 1) inv_[a] = b;
  for (std::uint32_t g = 1; g < q; ++g) {
    std::uint32_t x = g, ord = 1;
    while (x != 1) {
      x = mul(x, g);
      ++ord;
    }
    if (ord == q - 1) {
      primitive_ = g;
      break;
    }
  }
}

std::uint32_t FiniteField::inv(std::uint32_t a) const {
  if (a == 0) throw DomainError("inverse of zero");
  return inv_[a];
}

std::uint32_t FiniteField::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

}  // namespace grpaudit
