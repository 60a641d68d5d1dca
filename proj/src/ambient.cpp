#include "grpaudit/ambient.hpp"

#include <algorithm>
#include <numeric>

#include "grpaudit/subgroup.hpp"

namespace grpaudit {

std::shared_ptr<const Ambient> Ambient::create(PermGroup group, Caps caps) {
  auto ptr = std::shared_ptr<Ambient>(new Ambient(std::move(group), caps));
  ptr->build();
  return ptr;
}

Ambient::Ambient(PermGroup group, Caps caps) : group_(std::move(group)), caps_(caps) {}

void Ambient::build() {
  require_cap("element", caps_.element_cap, group_.order());
  elements_ = group_.elements(caps_.element_cap);
  std::sort(elements_.begin(), elements_.end());
  const std::size_t n = elements_.size();

  std::size_t slots = 1;
  while (slots < 2 * n) slots <<= 1;
  slots_.assign(slots, 0);
  slot_mask_ = slots - 1;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t h = hash_images(elements_[i].images()) & slot_mask_;
    while (slots_[h]) h = (h + 1) & slot_mask_;
    slots_[h] = static_cast<ElemId>(i + 1);
  }

  inverse_.resize(n);
  orders_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    inverse_[i] = *find(elements_[i].inverse());
    orders_[i] = elements_[i].order();
  }

  if (n <= caps_.table_cap && n <= 65535) {
    table_.resize(n * n);
    std::vector<Point> buf(degree());
    for (std::size_t a = 0; a < n; ++a) {
      const auto& pa = elements_[a];
      for (std::size_t b = 0; b < n; ++b) {
        const auto& pb = elements_[b];
        for (std::size_t i = 0; i < buf.size(); ++i) buf[i] = pb[pa[i]];
        table_[a * n + b] = static_cast<std::uint16_t>(*find(buf));
      }
    }
  }
}

std::optional<ElemId> Ambient::find(std::span<const Point> images) const {
  if (images.size() != degree()) return std::nullopt;
  std::uint64_t h = hash_images(images) & slot_mask_;
  while (ElemId v = slots_[h]) {
    auto cand = elements_[v - 1].images();
    if (std::equal(cand.begin(), cand.end(), images.begin())) return v - 1;
    h = (h + 1) & slot_mask_;
  }
  return std::nullopt;
}

ElemId Ambient::id_of(const Permutation& p) const {
  auto id = find(p);
  if (!id) throw DomainError("permutation " + p.to_string() + " is not an element of the ambient group");
  return *id;
}

ElemId Ambient::mul(ElemId a, ElemId b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * elements_.size() + b];
  thread_local std::vector<Point> buf;
  buf.resize(degree());
  const auto& pa = elements_[a];
  const auto& pb = elements_[b];
  for (std::size_t i = 0; i < buf.size(); ++i) buf[i] = pb[pa[i]];
  return *find(buf);
}

ElemId Ambient::pow(ElemId a, std::int64_t k) const {
  std::int64_t ord = static_cast<std::int64_t>(orders_[a]);
  k %= ord;
  if (k < 0) k += ord;
  ElemId result = identity();
  ElemId base = a;
  while (k) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

const ClassData& Ambient::classes() const {
  std::call_once(classes_once_, [this] {
    const std::size_t n = size();
    std::vector<ElemId> gens;
    for (const auto& g : group_.generators()) gens.push_back(*find(g));
    classes_.class_of.assign(n, UINT32_MAX);
    std::vector<ElemId> queue;
    for (ElemId start = 0; start < n; ++start) {
      if (classes_.class_of[start] != UINT32_MAX) continue;
      auto cls = static_cast<std::uint32_t>(classes_.representatives.size());
      queue.assign(1, start);
      classes_.class_of[start] = cls;
      for (std::size_t q = 0; q < queue.size(); ++q) {
        for (ElemId g : gens) {
          ElemId y = conj(queue[q], g);
          if (classes_.class_of[y] == UINT32_MAX) {
            classes_.class_of[y] = cls;
            queue.push_back(y);
          }
        }
      }
      classes_.representatives.push_back(start);
      classes_.sizes.push_back(queue.size());
      classes_.rep_orders.push_back(orders_[start]);
    }
  });
  return classes_;
}

const std::vector<ElemId>& Ambient::prime_power_cyclic_generators() const {
  std::call_once(ppgens_once_, [this] {
    std::vector<bool> covered(size(), false);
    for (ElemId g = 1; g < size(); ++g) {
      if (covered[g] || !is_prime_power(orders_[g])) continue;
      ppgens_.push_back(g);
      std::uint64_t ord = orders_[g];
      ElemId x = g;
      for (std::uint64_t k = 1; k < ord; ++k) {
        if (std::gcd(k, ord) == 1) covered[x] = true;
        x = mul(x, g);
      }
    }
  });
  return ppgens_;
}

SubgroupHandle Ambient::whole() const {
  std::vector<ElemId> gens;
  for (const auto& g : group_.generators())
    if (!g.is_identity()) gens.push_back(*find(g));
  ElementSet all(size());
  for (ElemId i = 0; i < size(); ++i) all.set(i);
  return SubgroupHandle(shared_from_this(), std::move(all), std::move(gens));
}

SubgroupHandle Ambient::trivial() const {
  ElementSet one(size());
  one.set(identity());
  return SubgroupHandle(shared_from_this(), std::move(one), {});
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_prime_power(std::uint64_t n) { return n > 1 && prime_divisors(n).size() == 1; }

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t part = 1;
  while (n % p == 0) {
    n /= p;
    part *= p;
  }
  return part;
}

bool is_power_of(std::uint64_t n, std::uint64_t p) { return n >= 1 && p_part(n, p) == n; }

}  // namespace grpaudit
