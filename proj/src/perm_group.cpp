#include "grpaudit/perm_group.hpp"

#include <algorithm>
#include <optional>

#include "grpaudit/caps.hpp"
#include "grpaudit/errors.hpp"

namespace grpaudit {

PermGroup::PermGroup(std::vector<Permutation> generators) : generators_(std::move(generators)) {
  if (generators_.empty()) throw DomainError("generator list is empty");
  degree_ = generators_.front().degree();
  for (const auto& g : generators_)
    if (g.degree() != degree_) throw DomainError("generators have different degrees");
  schreier_sims();

  order_ = 1;
  for (const auto& level : levels_) {
    std::uint64_t len = level.orbit.size();
    if (order_ > UINT64_MAX / len) throw CapExceeded("order", UINT64_MAX, UINT64_MAX);
    order_ *= len;
  }
}

PermGroup PermGroup::trivial(std::size_t degree) { return PermGroup({Permutation(degree)}); }

std::vector<Point> PermGroup::base() const {
  std::vector<Point> b;
  for (const auto& level : levels_) b.push_back(level.base_point);
  return b;
}

// Strips h through the chain starting at level `from`. Returns true when h
// reduces to the identity; h holds the residue.
bool PermGroup::strip(Permutation& h, std::size_t from) const {
  for (std::size_t j = from; j < levels_.size(); ++j) {
    const Level& level = levels_[j];
    Point image = h[level.base_point];
    std::int32_t s = level.slot[image];
    if (s < 0) return false;
    h = h * level.transversal_inv[static_cast<std::size_t>(s)];
  }
  return h.is_identity();
}

void PermGroup::append_level(Point base_point) {
  Level fresh;
  fresh.base_point = base_point;
  levels_.push_back(std::move(fresh));
}

// Level i: orbit of its base point under the strong generators that fix all
// earlier base points.
void PermGroup::rebuild_level(std::size_t i) {
  Level& lv = levels_[i];
  lv.strong_gens.clear();
  for (const auto& s : strong_)
    if (std::all_of(levels_.begin(), levels_.begin() + static_cast<std::ptrdiff_t>(i),
                    [&](const Level& l) { return s[l.base_point] == l.base_point; }))
      lv.strong_gens.push_back(s);
  lv.slot.assign(degree_, -1);
  lv.orbit.assign(1, lv.base_point);
  lv.slot[lv.base_point] = 0;
  lv.transversal.assign(1, Permutation(degree_));
  lv.transversal_inv.assign(1, Permutation(degree_));
  for (std::size_t k = 0; k < lv.orbit.size(); ++k)
    for (const auto& s : lv.strong_gens) {
      Point gamma = s[lv.orbit[k]];
      if (lv.slot[gamma] >= 0) continue;
      lv.slot[gamma] = static_cast<std::int32_t>(lv.orbit.size());
      lv.orbit.push_back(gamma);
      Permutation u = lv.transversal[k] * s;
      lv.transversal_inv.push_back(u.inverse());
      lv.transversal.push_back(std::move(u));
    }
}

// Deterministic Schreier-Sims: levels are completed from the deepest up; a
// Schreier generator that fails to strip becomes a new strong generator and
// processing resumes at the level where its residue stopped.
void PermGroup::schreier_sims() {
  for (const auto& g : generators_) {
    if (g.is_identity()) continue;
    strong_.push_back(g);
    bool fixes_base = std::all_of(levels_.begin(), levels_.end(),
                                  [&](const Level& l) { return g[l.base_point] == l.base_point; });
    if (fixes_base) append_level(static_cast<Point>(g.first_moved()));
  }
  std::size_t i = levels_.size();
  while (i > 0) {
    std::size_t level = i - 1;
    rebuild_level(level);
    std::optional<std::size_t> resume;
    const Level& lv = levels_[level];
    for (std::size_t k = 0; !resume && k < lv.orbit.size(); ++k)
      for (const auto& s : lv.strong_gens) {
        Point gamma = s[lv.orbit[k]];
        Permutation h = lv.transversal[k] * s * lv.transversal_inv[static_cast<std::size_t>(lv.slot[gamma])];
        std::size_t j = level + 1;
        for (; j < levels_.size(); ++j) {
          const Level& deeper = levels_[j];
          std::int32_t slot = deeper.slot[h[deeper.base_point]];
          if (slot < 0) break;
          h = h * deeper.transversal_inv[static_cast<std::size_t>(slot)];
        }
        if (j == levels_.size() && h.is_identity()) continue;
        if (j == levels_.size()) append_level(static_cast<Point>(h.first_moved()));
        strong_.push_back(std::move(h));
        resume = j;
        break;
      }
    if (resume) i = *resume + 1;
    else --i;
  }
}

bool PermGroup::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  Permutation h = g;
  return strip(h, 0);
}

void PermGroup::for_each_element(const std::function<void(const Permutation&)>& visit,
                                 std::uint64_t cap) const {
  require_cap("element", cap, order_);
  // g = t_{k-1} ... t_1 t_0 with t_j drawn from the level-j transversal.
  std::function<void(std::size_t, const Permutation&)> descend =
      [&](std::size_t level, const Permutation& prefix) {
        if (level == 0) {
          visit(prefix);
          return;
        }
        for (const auto& t : levels_[level - 1].transversal) descend(level - 1, prefix * t);
      };
  descend(levels_.size(), Permutation(degree_));
}

std::vector<Permutation> PermGroup::elements(std::uint64_t cap) const {
  std::vector<Permutation> out;
  require_cap("element", cap, order_);
  out.reserve(order_);
  for_each_element([&](const Permutation& p) { out.push_back(p); }, cap);
  return out;
}

Permutation PermGroup::random_element(std::mt19937_64& rng) const {
  Permutation g(degree_);
  for (std::size_t j = levels_.size(); j-- > 0;) {
    std::uniform_int_distribution<std::size_t> pick(0, levels_[j].transversal.size() - 1);
    g = g * levels_[j].transversal[pick(rng)];
  }
  return g;
}

}  // namespace grpaudit
