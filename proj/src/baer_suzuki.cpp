#include "grpaudit/baer_suzuki.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "grpaudit/errors.hpp"
#include "grpaudit/fitting.hpp"
#include "grpaudit/lattice.hpp"

namespace grpaudit {

namespace {

/// u with u*a = 1 mod m, for coprime a, m.
std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r0 = a % m, r1 = m, s0 = 1, s1 = 0;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
  }
  return ((s0 % m) + m) % m;
}

/// Exponents (e_p, e_p') with g^e_p the p-part and g^e_p' the p'-part of an
/// element of order n: e_p = v*m and e_p' = u*p^a where u*p^a + v*m = 1.
std::pair<std::int64_t, std::int64_t> part_exponents(std::uint64_t n, std::uint64_t p) {
  auto pa = static_cast<std::int64_t>(p_part(n, p));
  auto m = static_cast<std::int64_t>(n) / pa;
  if (m == 1) return {1, 0};
  if (pa == 1) return {0, 1};
  std::int64_t v = inverse_mod(m, pa);  // v*m = 1 mod p^a
  std::int64_t e_p = (v * m) % static_cast<std::int64_t>(n);
  std::int64_t e_q = (1 - e_p + static_cast<std::int64_t>(n)) % static_cast<std::int64_t>(n);
  return {e_p, e_q};
}

bool prime_power_order(std::uint64_t n) { return n > 1 && is_prime_power(n); }

std::uint64_t smallest_prime(std::uint64_t n) {
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return d;
  return n;
}

PredicateReport base_report(const PrimeContext& ctx, ElemId x, const char* name) {
  const Ambient& amb = ctx.g.ambient();
  if (!ctx.g.contains(x)) throw DomainError("element is not in the group");
  PredicateReport r;
  r.group_id = ctx.group_id;
  r.p = ctx.p;
  r.class_index = ctx.classes->class_of(x);
  r.predicate = name;
  r.x = amb.element(x);
  r.x_order = amb.order(x);
  return r;
}

void require_p_element(const PrimeContext& ctx, ElemId x) {
  if (!order_is_p_element(ctx.g.ambient().order(x), ctx.p))
    throw DomainError("x is not a p-element");
}

void finish_implication(PredicateReport& r) {
  r.implication_ok = !r.hypothesis_holds || r.conclusion_holds;
  r.status = r.implication_ok ? "ok" : "violation";
}

void finish_biconditional(PredicateReport& r) {
  r.implication_ok = !r.hypothesis_holds || r.conclusion_holds;
  r.converse_ok = !r.conclusion_holds || r.hypothesis_holds;
  r.status = r.implication_ok && r.converse_ok ? "ok" : "violation";
}

/// First g in id order with pred(g) false, if any.
template <class F>
std::optional<ElemId> first_failure(const SubgroupHandle& g, F&& pred) {
  std::optional<ElemId> out;
  const auto& words = g.members();
  for (ElemId e = 0; e < words.universe(); ++e) {
    if (!words.test(e)) continue;
    if (!pred(e)) {
      out = e;
      break;
    }
  }
  return out;
}

std::size_t class_index_of(const ClassInfo& ci, ElemId x) { return ci.class_of(x); }

/// Orbit of y under conjugation by the generators of c.
ElementSet conjugation_orbit(const SubgroupHandle& c, ElemId y) {
  const Ambient& amb = c.ambient();
  ElementSet seen(amb.size());
  std::vector<ElemId> queue{y};
  seen.set(y);
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (ElemId s : c.generators()) {
      ElemId z = amb.conj(queue[i], s);
      if (!seen.test(z)) {
        seen.set(z);
        queue.push_back(z);
      }
    }
  return seen;
}

}  // namespace

PDecomposition p_decompose(const Permutation& g, std::uint64_t p) {
  auto [e_p, e_q] = part_exponents(g.order(), p);
  return {g.pow(e_p), g.pow(e_q)};
}

bool is_p_element(const Permutation& g, std::uint64_t p) { return order_is_p_element(g.order(), p); }
bool is_p_singular(const Permutation& g, std::uint64_t p) { return order_is_p_singular(g.order(), p); }
bool is_p_regular(const Permutation& g, std::uint64_t p) { return order_is_p_regular(g.order(), p); }

PrimeContext::PrimeContext(const SubgroupHandle& group, std::uint64_t prime, std::string id)
    : g(group),
      p(prime),
      op(p_core(group, prime)),
      classes(std::make_shared<const ClassInfo>(conjugacy_classes(group))),
      group_id(std::move(id)) {
  if (!is_prime(prime)) throw DomainError("p must be prime");
}

PredicateReport property_p1(const PrimeContext& ctx, ElemId x) {
  require_p_element(ctx, x);
  const Ambient& amb = ctx.g.ambient();
  PredicateReport r = base_report(ctx, x, "property_p1");
  auto bad = first_failure(ctx.g, [&](ElemId g) {
    std::uint64_t o = amb.order(g);
    if (!prime_power_order(o) || o % ctx.p == 0) return true;
    return order_is_p_element(amb.order(amb.comm(x, g)), ctx.p);
  });
  r.hypothesis_holds = !bad;
  if (bad) r.witness = amb.element(*bad);
  r.conclusion_holds = ctx.op.contains(x);
  finish_implication(r);
  return r;
}

PredicateReport property_p2(const PrimeContext& ctx, ElemId x) {
  require_p_element(ctx, x);
  const Ambient& amb = ctx.g.ambient();
  PredicateReport r = base_report(ctx, x, "property_p2");
  auto bad = first_failure(ctx.g, [&](ElemId y) {
    if (!order_is_p_element(amb.order(y), ctx.p)) return true;
    ElemId xy = amb.mul(x, y);
    return xy == Ambient::identity() || order_is_p_singular(amb.order(xy), ctx.p);
  });
  r.hypothesis_holds = !bad;
  if (bad) r.witness = amb.element(*bad);
  r.conclusion_holds = ctx.op.contains(x);
  finish_implication(r);
  return r;
}

PredicateReport property_p3(const PrimeContext& ctx, ElemId x) {
  require_p_element(ctx, x);
  const Ambient& amb = ctx.g.ambient();
  PredicateReport r = base_report(ctx, x, "property_p3");
  auto bad = first_failure(ctx.g, [&](ElemId y) {
    std::uint64_t o = amb.order(y);
    if (!prime_power_order(o) || o % ctx.p == 0) return true;
    return amb.order(amb.mul(x, y)) % smallest_prime(o) == 0;
  });
  r.hypothesis_holds = !bad;
  if (bad) r.witness = amb.element(*bad);
  r.conclusion_holds = ctx.op.contains(x);
  finish_biconditional(r);
  return r;
}

PredicateReport classical_baer_suzuki(const PrimeContext& ctx, ElemId x) {
  require_p_element(ctx, x);
  const Ambient& amb = ctx.g.ambient();
  PredicateReport r = base_report(ctx, x, "classical_baer_suzuki");
  const std::uint64_t sylow_order = p_part(ctx.g.order(), ctx.p);
  const ElemId xs[] = {x};
  const SubgroupHandle cyclic = closure(ctx.g.ambient_ptr(), xs);
  // Verdict per conjugate: 0 unknown, 1 p-group, 2 not.
  std::vector<std::uint8_t> verdict(amb.size(), 0);
  auto bad = first_failure(ctx.g, [&](ElemId g) {
    ElemId y = amb.conj(x, g);
    if (verdict[y] == 0) {
      auto h = extend_bounded(cyclic, y, sylow_order);
      verdict[y] = h && is_p_group(*h, ctx.p) ? 1 : 2;
    }
    return verdict[y] == 1;
  });
  r.hypothesis_holds = !bad;
  if (bad) r.witness = amb.element(*bad);
  r.conclusion_holds = ctx.op.contains(x);
  finish_biconditional(r);
  return r;
}

PredicateReport property_p1(const SubgroupHandle& g, ElemId x, std::uint64_t p) {
  return property_p1(PrimeContext(g, p), x);
}
PredicateReport property_p2(const SubgroupHandle& g, ElemId x, std::uint64_t p) {
  return property_p2(PrimeContext(g, p), x);
}
PredicateReport property_p3(const SubgroupHandle& g, ElemId x, std::uint64_t p) {
  return property_p3(PrimeContext(g, p), x);
}

const char* GlaubermanBattery::item_name(int i) {
  static const char* names[kItems] = {
      "x isolated in a Sylow subgroup containing it",
      "no other conjugate of x commutes with x",
      "C_G(x) controls p-fusion",
      "[x,g] is a p'-element for all g",
      "[x,g] is a p'-element for all g of prime power order",
      "x lies in Z_p*(G)",
      "G = C_G(x) O_p'(G)",
  };
  return names[i];
}

GlaubermanBattery glauberman_battery(const PrimeContext& ctx, ElemId x) {
  require_p_element(ctx, x);
  const SubgroupHandle& g = ctx.g;
  const Ambient& amb = g.ambient();
  const std::uint64_t p = ctx.p;
  const ClassInfo& ci = *ctx.classes;
  const auto& x_class = ci.members(class_index_of(ci, x));
  GlaubermanBattery b;

  // (i) x^G meets a Sylow subgroup containing x only in x.
  const ElemId xs[] = {x};
  SubgroupHandle sylow = sylow_containing(g, closure(g.ambient_ptr(), xs), p);
  b.items[0] = std::all_of(x_class.begin(), x_class.end(), [&](ElemId z) { return z == x || !sylow.contains(z); });

  // (ii) x^G meets C_G(x) only in x.
  b.items[1] = std::all_of(x_class.begin(), x_class.end(),
                           [&](ElemId z) { return z == x || amb.mul(z, x) != amb.mul(x, z); });

  // (iii) C_G(x) contains a Sylow subgroup P1 of G, and G-conjugate elements
  // of P1 are already C_G(x)-conjugate.
  SubgroupHandle c = centralizer(g, x);
  SubgroupHandle p1 = sylow_subgroup(c, p);
  if (p1.order() != p_part(g.order(), p)) {
    b.items[2] = false;
  } else {
    std::uint64_t pairs = 0;
    for (ElemId y : p1.elements()) pairs += ci.sizes()[ci.class_of(y)];
    b.fusion_pairs = pairs;
    if (pairs <= amb.caps().pair_cap) {
      bool controls = true;
      for (ElemId y : p1.elements()) {
        ElementSet orbit = conjugation_orbit(c, y);
        for (ElemId z : ci.members(ci.class_of(y)))
          if (p1.contains(z) && !orbit.test(z)) {
            controls = false;
            break;
          }
        if (!controls) break;
      }
      b.items[2] = controls;
    }
  }

  // (iv) and (v): commutator conditions.
  b.items[3] = !first_failure(g, [&](ElemId h) { return order_is_p_regular(amb.order(amb.comm(x, h)), p); });
  b.items[4] = !first_failure(g, [&](ElemId h) {
    if (!is_prime_power(amb.order(h))) return true;
    return order_is_p_regular(amb.order(amb.comm(x, h)), p);
  });

  // (vi) x central modulo O_p'(G).
  b.items[5] = z_star_p(g, p).contains(x);

  // (vii) |C_G(x) O_p'(G)| = |G|.
  SubgroupHandle o = p_prime_core(g, p);
  std::uint64_t product = c.order() * o.order() / intersect(c, o).order();
  b.items[6] = product == g.order();

  std::optional<bool> first;
  for (const auto& item : b.items) {
    if (!item) continue;
    if (!first) first = *item;
    if (*item != *first) b.agree = false;
  }
  return b;
}

GlaubermanBattery glauberman_battery(const SubgroupHandle& g, ElemId x, std::uint64_t p) {
  return glauberman_battery(PrimeContext(g, p), x);
}

bool GammaSet::contains(ElemId e) const { return std::binary_search(elements.begin(), elements.end(), e); }

GammaSet gamma_k(const SubgroupHandle& g, ElemId x, int k) {
  if (k < 1) throw DomainError("k must be positive");
  if (!g.contains(x)) throw DomainError("element is not in the group");
  const Ambient& amb = g.ambient();
  ElementSet current = g.members();
  for (int level = 0; level < k; ++level) {
    ElementSet next(amb.size());
    current.for_each([&](ElemId t) { next.set(amb.comm(t, x)); });
    if (next == current) break;  // fixpoint: every later level is the same
    current = std::move(next);
  }
  return {k, x, current.to_vector()};
}

std::vector<PredicateReport> multicommutator_scan(const PrimeContext& ctx, int k_max, bool commutator_variant) {
  const Ambient& amb = ctx.g.ambient();
  const char* name = commutator_variant ? "multicommutator_commutators" : "multicommutator_products";
  std::vector<PredicateReport> out;
  for (ElemId x : ctx.classes->representatives()) {
    if (!order_is_p_element(amb.order(x), ctx.p)) continue;
    for (int k = 1; k <= k_max; ++k) {
      PredicateReport r = base_report(ctx, x, name);
      r.k = k;
      r.asserted = false;
      r.conclusion_holds = ctx.op.contains(x);
      GammaSet gamma = gamma_k(ctx.g, x, k);
      std::uint64_t pairs = 0;
      bool skipped = false;
      r.hypothesis_holds = true;
      for (ElemId a : gamma.elements) {
        for (ElemId b : gamma.elements) {
          if (++pairs > amb.caps().pair_cap) {
            skipped = true;
            break;
          }
          ElemId prod = commutator_variant ? amb.comm(a, b) : amb.mul(a, b);
          if (!order_is_p_element(amb.order(prod), ctx.p)) {
            r.hypothesis_holds = false;
            r.witness = amb.element(a);
            r.witness2 = amb.element(b);
            break;
          }
        }
        if (skipped || !r.hypothesis_holds) break;
      }
      r.implication_ok = !r.hypothesis_holds || r.conclusion_holds;
      if (skipped && r.hypothesis_holds) {
        r.hypothesis_holds = false;
        r.implication_ok = true;
        r.status = "skipped";
      } else if (!r.implication_ok) {
        r.status = commutator_variant ? "variant-counterexample" : "conjecture-violated";
      } else {
        r.status = r.hypothesis_holds ? "hypothesis-met" : "hypothesis-failed";
      }
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<PredicateReport> commutator_singularity_scan(const PrimeContext& ctx) {
  const Ambient& amb = ctx.g.ambient();
  const std::uint64_t p = ctx.p;
  const bool abelian_core = is_abelian(ctx.op);
  std::vector<PredicateReport> out;
  for (ElemId x : ctx.classes->representatives()) {
    std::uint64_t o = amb.order(x);
    if (o == 1 || !order_is_p_element(o, p)) continue;
    PredicateReport r = base_report(ctx, x, o == p ? "commutator_singularity" : "commutator_singularity_higher_order");
    r.asserted = false;
    auto bad = first_failure(ctx.g, [&](ElemId g) {
      ElemId c = amb.comm(x, g);
      return c == Ambient::identity() || order_is_p_singular(amb.order(c), p);
    });
    r.hypothesis_holds = !bad;
    if (bad) r.witness = amb.element(*bad);
    r.conclusion_holds = ctx.op.contains(x);
    r.implication_ok = !r.hypothesis_holds || r.conclusion_holds;
    if (!r.implication_ok)
      r.status = o == p ? "conjecture-violated" : "order-restriction";
    else
      r.status = r.hypothesis_holds ? "hypothesis-met" : "hypothesis-failed";
    out.push_back(r);

    if (o == p && abelian_core) {
      PredicateReport a = base_report(ctx, x, "abelian_core_commutator");
      a.hypothesis_holds = !ctx.op.contains(x);
      auto good = first_failure(ctx.g, [&](ElemId g) {
        ElemId c = amb.comm(x, g);
        return c == Ambient::identity() || !order_is_p_regular(amb.order(c), p);
      });
      a.conclusion_holds = good.has_value();
      if (good) a.witness = amb.element(*good);
      finish_implication(a);
      out.push_back(std::move(a));
    }
  }
  return out;
}

std::vector<PredicateReport> abelian_sylow_check(const PrimeContext& ctx) {
  std::vector<PredicateReport> out;
  if (!is_abelian(sylow_subgroup(ctx.g, ctx.p))) return out;
  const Ambient& amb = ctx.g.ambient();
  const std::uint64_t p = ctx.p;
  for (ElemId x : ctx.classes->representatives()) {
    std::uint64_t o = amb.order(x);
    if (o == 1 || !order_is_p_element(o, p)) continue;
    PredicateReport r = base_report(ctx, x, "abelian_sylow_commutator");
    r.hypothesis_holds = !ctx.op.contains(x);
    auto good = first_failure(ctx.g, [&](ElemId y) {
      std::uint64_t oy = amb.order(y);
      if (!prime_power_order(oy) || oy % p == 0) return true;
      ElemId c = amb.comm(x, y);
      return c == Ambient::identity() || !order_is_p_regular(amb.order(c), p);
    });
    r.conclusion_holds = good.has_value();
    if (good) r.witness = amb.element(*good);
    finish_implication(r);
    out.push_back(std::move(r));
  }
  return out;
}

CosetLiftVerdict coset_prime_power_lift(const SubgroupHandle& g, const SubgroupHandle& n, std::uint64_t r) {
  if (!is_prime(r)) throw DomainError("r must be prime");
  if (!is_normal_in(n, g)) throw DomainError("subgroup is not normal");
  const Ambient& amb = g.ambient();
  const auto n_elems = n.elements();
  CosetLiftVerdict v;
  v.r = r;
  ElementSet covered(amb.size());
  g.members().for_each([&](ElemId e) {
    if (covered.test(e)) return;
    for (ElemId m : n_elems) covered.set(amb.mul(m, e));
    // Order of Ne in G/N.
    std::uint64_t a = 1;
    for (ElemId t = e; !n.contains(t); t = amb.mul(t, e)) ++a;
    if (a == 1 || !is_power_of(a, r)) return;
    ++v.cosets_checked;
    std::int64_t e_r = part_exponents(amb.order(e), r).first;
    ElemId y = amb.pow(e, e_r);
    bool good = is_power_of(amb.order(y), r) && n.contains(amb.mul(y, amb.inv(e)));
    if (!good) ++v.failures;
    v.witnesses.emplace_back(e, y);
  });
  return v;
}

}  // namespace grpaudit
