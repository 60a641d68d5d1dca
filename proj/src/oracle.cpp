#include "grpaudit/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "grpaudit/errors.hpp"

namespace grpaudit::oracle {

namespace {

bool is_power_of_prime(std::uint64_t n, std::uint64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

bool subset(const PermSet& a, const PermSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

PermSet join(const PermSet& a, const PermSet& b, std::size_t degree) {
  PermSet gens = a;
  gens.insert(b.begin(), b.end());
  return closure(gens, degree);
}

}  // namespace

PermSet closure(const std::vector<Permutation>& gens, std::size_t degree) {
  PermSet out{Permutation::identity(degree)};
  std::deque<Permutation> queue{Permutation::identity(degree)};
  while (!queue.empty()) {
    Permutation x = queue.front();
    queue.pop_front();
    for (const auto& s : gens) {
      Permutation y = x * s;
      if (out.insert(y).second) queue.push_back(y);
    }
  }
  return out;
}

PermSet closure(const PermSet& gens, std::size_t degree) {
  return closure(std::vector<Permutation>(gens.begin(), gens.end()), degree);
}

std::uint64_t order_by_powering(const Permutation& g) {
  Permutation x = g;
  std::uint64_t k = 1;
  while (!x.is_identity()) {
    x = x * g;
    ++k;
  }
  return k;
}

std::vector<PermSet> conjugacy_classes(const PermSet& g) {
  std::vector<PermSet> out;
  PermSet seen;
  for (const auto& x : g) {
    if (seen.count(x)) continue;
    PermSet cls;
    for (const auto& h : g) cls.insert(conjugate(x, h));
    seen.insert(cls.begin(), cls.end());
    out.push_back(std::move(cls));
  }
  return out;
}

PermSet centralizer(const PermSet& g, const Permutation& x) {
  PermSet out;
  for (const auto& h : g)
    if (h * x == x * h) out.insert(h);
  return out;
}

PermSet normalizer(const PermSet& g, const PermSet& h) {
  PermSet out;
  for (const auto& x : g) {
    bool ok = true;
    for (const auto& y : h)
      if (!h.count(conjugate(y, x))) {
        ok = false;
        break;
      }
    if (ok) out.insert(x);
  }
  return out;
}

bool is_normal(const PermSet& g, const PermSet& h) { return normalizer(g, h).size() == g.size(); }

PermSet normal_closure(const PermSet& g, const PermSet& h, std::size_t degree) {
  PermSet gens;
  for (const auto& y : h)
    for (const auto& x : g) gens.insert(conjugate(y, x));
  return closure(gens, degree);
}

std::vector<PermSet> all_subgroups(const PermSet& g, std::size_t degree) {
  std::set<PermSet> cyclic;
  for (const auto& x : g) cyclic.insert(closure(std::vector<Permutation>{x}, degree));
  std::set<PermSet> found(cyclic.begin(), cyclic.end());
  std::vector<PermSet> todo(found.begin(), found.end());
  while (!todo.empty()) {
    PermSet h = std::move(todo.back());
    todo.pop_back();
    for (const auto& c : cyclic) {
      if (subset(c, h)) continue;
      PermSet j = join(h, c, degree);
      if (found.insert(j).second) todo.push_back(std::move(j));
    }
  }
  std::vector<PermSet> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](const PermSet& a, const PermSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<PermSet> normal_subgroups(const PermSet& g, std::size_t degree) {
  std::vector<PermSet> out;
  for (auto& h : all_subgroups(g, degree))
    if (is_normal(g, h)) out.push_back(std::move(h));
  return out;
}

std::vector<PermSet> normal_subgroups_by_classes(const PermSet& g, std::size_t degree) {
  struct Item {
    PermSet members;
    std::vector<Permutation> gens;
  };
  auto classes = conjugacy_classes(g);
  std::vector<Item> items{{PermSet{Permutation::identity(degree)}, {}}};
  std::set<PermSet> seen{items[0].members};
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (const auto& c : classes) {
      if (items[i].members.count(*c.begin())) continue;
      Item next = items[i];
      for (const auto& x : c)
        if (!next.members.count(x)) {
          next.gens.push_back(x);
          next.members = closure(next.gens, degree);
        }
      if (seen.insert(next.members).second) items.push_back(std::move(next));
    }
  }
  std::vector<PermSet> out;
  for (auto& it : items) out.push_back(std::move(it.members));
  std::sort(out.begin(), out.end(), [](const PermSet& a, const PermSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::vector<PermSet> maximal_subgroups(const std::vector<PermSet>& lattice, const PermSet& g) {
  std::vector<PermSet> out;
  for (const auto& h : lattice) {
    if (h.size() == g.size()) continue;
    bool maximal = true;
    for (const auto& k : lattice)
      if (k.size() > h.size() && k.size() < g.size() && subset(h, k)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(h);
  }
  return out;
}

bool is_subnormal(const std::vector<PermSet>& lattice, const PermSet& g, const PermSet& h) {
  // reach[K]: H is subnormal in K. Process overgroups of H by increasing order.
  std::vector<const PermSet*> over;
  for (const auto& k : lattice)
    if (subset(h, k) && subset(k, g)) over.push_back(&k);
  std::map<const PermSet*, bool> reach;
  for (const PermSet* k : over) {
    bool r = k->size() == h.size();
    for (const PermSet* l : over) {
      if (r) break;
      if (l->size() < k->size() && subset(*l, *k) && reach[l] && is_normal(*k, *l)) r = true;
    }
    reach[k] = r;
    if (k->size() == g.size()) return r;
  }
  throw DomainError("group missing from its own lattice");
}

PermSet p_core(const PermSet& g, std::uint64_t p, std::size_t degree) {
  PermSet out;
  for (const auto& x : g)
    if (is_power_of_prime(normal_closure(g, PermSet{x}, degree).size(), p)) out.insert(x);
  return out;
}

PermSet p_prime_core(const PermSet& g, std::uint64_t p, std::size_t degree) {
  PermSet out;
  for (const auto& x : g)
    if (normal_closure(g, PermSet{x}, degree).size() % p != 0) out.insert(x);
  return out;
}

PermSet frattini(const std::vector<PermSet>& lattice, const PermSet& g, std::size_t degree) {
  PermSet out;
  for (const auto& x : g) {
    bool non_generator = true;
    for (const auto& h : lattice) {
      if (h.size() == g.size() || h.count(x)) continue;
      PermSet gens = h;
      gens.insert(x);
      if (closure(gens, degree).size() == g.size()) {
        non_generator = false;
        break;
      }
    }
    if (non_generator) out.insert(x);
  }
  return out;
}

bool is_perfect(const PermSet& g, std::size_t degree) {
  PermSet comms;
  for (const auto& a : g)
    for (const auto& b : g) comms.insert(commutator(a, b));
  return closure(comms, degree).size() == g.size();
}

bool is_quasisimple(const PermSet& g, std::size_t degree) {
  if (g.size() == 1 || !is_perfect(g, degree)) return false;
  PermSet z;
  for (const auto& x : g)
    if (centralizer(g, x).size() == g.size()) z.insert(x);
  for (const auto& n : normal_subgroups(g, degree))
    if (subset(z, n) && n.size() != z.size() && n.size() != g.size()) return false;
  return true;
}

std::vector<PermSet> components(const std::vector<PermSet>& lattice, const PermSet& g,
                                std::size_t degree) {
  std::vector<PermSet> out;
  for (const auto& h : lattice)
    if (h.size() > 1 && is_perfect(h, degree) && is_subnormal(lattice, g, h) && is_quasisimple(h, degree))
      out.push_back(h);
  return out;
}

}  // namespace grpaudit::oracle
