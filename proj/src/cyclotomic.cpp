#include "grpaudit/cyclotomic.hpp"

#include <cmath>
#include <numbers>

#include "grpaudit/errors.hpp"

namespace grpaudit {

Cyclotomic::Cyclotomic(std::uint32_t e, std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != e) throw DomainError("coefficient vector length must equal the exponent");
}

Cyclotomic Cyclotomic::integer(std::uint32_t e, std::int64_t n) {
  Cyclotomic c(e);
  c.coeffs_[0] = n;
  return c;
}

Cyclotomic Cyclotomic::root(std::uint32_t e, std::uint32_t t) {
  Cyclotomic c(e);
  c.coeffs_[t % e] = 1;
  return c;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  if (o.exponent() != exponent()) throw DomainError("exponent mismatch");
  Cyclotomic r = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
  return r;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
  if (o.exponent() != exponent()) throw DomainError("exponent mismatch");
  Cyclotomic r = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] -= o.coeffs_[i];
  return r;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  if (o.exponent() != exponent()) throw DomainError("exponent mismatch");
  const std::size_t e = coeffs_.size();
  Cyclotomic r(static_cast<std::uint32_t>(e));
  for (std::size_t i = 0; i < e; ++i) {
    if (!coeffs_[i]) continue;
    for (std::size_t j = 0; j < e; ++j)
      if (o.coeffs_[j]) r.coeffs_[(i + j) % e] += coeffs_[i] * o.coeffs_[j];
  }
  return r;
}

Cyclotomic Cyclotomic::conj() const {
  const std::size_t e = coeffs_.size();
  Cyclotomic r(static_cast<std::uint32_t>(e));
  for (std::size_t t = 0; t < e; ++t) r.coeffs_[(e - t) % e] = coeffs_[t];
  return r;
}

Cyclotomic Cyclotomic::galois(std::uint32_t k) const {
  const std::size_t e = coeffs_.size();
  Cyclotomic r(static_cast<std::uint32_t>(e));
  for (std::size_t t = 0; t < e; ++t) r.coeffs_[(t * k) % e] += coeffs_[t];
  return r;
}

std::uint64_t Cyclotomic::reduce(std::uint64_t l, std::uint64_t z) const {
  auto m = static_cast<std::int64_t>(l);
  std::uint64_t acc = 0, power = 1;
  for (std::int64_t c : coeffs_) {
    auto cm = static_cast<std::uint64_t>(((c % m) + m) % m);
    acc = (acc + cm * power) % l;
    power = power * z % l;
  }
  return acc;
}

std::complex<double> Cyclotomic::to_complex() const {
  const double e = static_cast<double>(coeffs_.size());
  std::complex<double> acc = 0;
  for (std::size_t t = 0; t < coeffs_.size(); ++t)
    if (coeffs_[t]) acc += static_cast<double>(coeffs_[t]) * std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(t) / e);
  return acc;
}

std::uint64_t Cyclotomic::weight() const {
  std::uint64_t w = 0;
  for (auto c : coeffs_) w += static_cast<std::uint64_t>(c < 0 ? -c : c);
  return w;
}

}  // namespace grpaudit
