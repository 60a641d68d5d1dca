#include "grpaudit/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "grpaudit/errors.hpp"

namespace grpaudit {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  if (degree > 65536) throw DomainError("permutation degree exceeds 65536");
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p]) throw DomainError("image array is not a bijection");
    seen[p] = true;
  }
}

Permutation Permutation::from_cycle_list(const std::vector<std::vector<Point>>& cycles,
                                         std::size_t degree) {
  Permutation result(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point a = cycle[i];
      Point b = cycle[(i + 1) % cycle.size()];
      if (a >= degree || b >= degree) throw DomainError("cycle point out of range");
      if (used[a]) throw DomainError("point repeated in cycle notation");
      used[a] = true;
      result.images_[a] = b;
    }
  }
  return result;
}

Permutation Permutation::from_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation", 0);
    ++i;
    std::vector<Point> cycle;
    for (;;) {
      skip_ws();
      if (i >= text.size()) throw ParseError("unterminated cycle", 0);
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (text[i] < '0' || text[i] > '9') throw ParseError("unexpected character in cycle", 0);
      std::uint64_t value = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        value = value * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (value > 65536) throw ParseError("point index too large", 0);
        ++i;
      }
      if (value == 0 || value > degree) throw ParseError("point out of range 1.." + std::to_string(degree), 0);
      cycle.push_back(static_cast<Point>(value - 1));
    }
    if (cycle.size() > 1) cycles.push_back(std::move(cycle));
    skip_ws();
  }
  try {
    return from_cycle_list(cycles, degree);
  } catch (const DomainError& e) {
    throw ParseError(e.what(), 0);
  }
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation result;
  result.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) result.images_[images_[i]] = static_cast<Point>(i);
  return result;
}

Permutation Permutation::pow(std::int64_t k) const {
  std::int64_t ord = static_cast<std::int64_t>(order());
  k %= ord;
  if (k < 0) k += ord;
  Permutation result;
  result.images_.resize(images_.size());
  // i^(g^k): walk each cycle k steps.
  std::vector<bool> done(images_.size(), false);
  std::vector<Point> cycle;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (done[start]) continue;
    cycle.clear();
    for (Point p = static_cast<Point>(start); !done[p]; p = images_[p]) {
      done[p] = true;
      cycle.push_back(p);
    }
    std::size_t len = cycle.size();
    for (std::size_t j = 0; j < len; ++j) result.images_[cycle[j]] = cycle[(j + static_cast<std::size_t>(k)) % len];
  }
  return result;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  std::vector<bool> done(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (done[start]) continue;
    std::uint64_t len = 0;
    for (Point p = static_cast<Point>(start); !done[p]; p = images_[p]) {
      done[p] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> result;
  std::vector<bool> done(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (done[start] || images_[start] == start) continue;
    std::vector<Point> cycle;
    for (Point p = static_cast<Point>(start); !done[p]; p = images_[p]) {
      done[p] = true;
      cycle.push_back(p);
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

std::size_t Permutation::first_moved() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return i;
  return images_.size();
}

std::string Permutation::to_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream out;
  for (const auto& c : cs) {
    out << '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out << ',';
      out << (c[i] + 1);
    }
    out << ')';
  }
  return out.str();
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw DomainError("degree mismatch in product");
  Permutation result;
  result.images_.resize(a.images_.size());
  for (std::size_t i = 0; i < a.images_.size(); ++i) result.images_[i] = b.images_[a.images_[i]];
  return result;
}

Permutation conjugate(const Permutation& x, const Permutation& g) { return g.inverse() * x * g; }

Permutation commutator(const Permutation& a, const Permutation& b) {
  return a.inverse() * b.inverse() * a * b;
}

std::uint64_t hash_images(std::span<const Point> images) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (Point p : images) {
    h ^= p;
    h *= 0x100000001b3ULL;
  }
  h ^= h >> 29;
  h *= 0xbf58476d1ce4e5b9ULL;
  h ^= h >> 32;
  return h;
}

}  // namespace grpaudit
