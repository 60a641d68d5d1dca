#include "grpaudit/characters.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "grpaudit/errors.hpp"
#include "grpaudit/fitting.hpp"
#include "grpaudit/group_ops.hpp"
#include "grpaudit/lattice.hpp"
#include "grpaudit/modular.hpp"

namespace grpaudit {

namespace {

using modular::Field;
using modular::Mat;
using modular::Vec;

constexpr double kTolerance = 1e-6;
constexpr int kMaxSplitRounds = 200;

/// Common eigenvectors of the class matrices over F_l, one per character,
/// each scaled so the identity-class entry is 1.
std::vector<Vec> central_characters(const Field& f, const std::vector<Mat>& class_mats, std::size_t identity_class,
                                   std::uint64_t seed) {
  const std::size_t k = class_mats.size();
  std::vector<std::vector<Vec>> pending;
  std::vector<Vec> done;
  {
    std::vector<Vec> basis(k, Vec(k, 0));
    for (std::size_t i = 0; i < k; ++i) basis[i][i] = 1;
    if (k == 1)
      done.push_back(basis[0]);
    else
      pending.push_back(std::move(basis));
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, f.l - 1);
  int rounds = 0;
  while (!pending.empty()) {
    if (++rounds > kMaxSplitRounds) throw DomainError("eigenspace splitting did not converge");
    std::vector<std::vector<Vec>> next;
    for (auto& space : pending) {
      auto pivots = modular::row_reduce(f, space);
      const std::size_t d = space.size();
      // Random combination of the class matrices.
      Mat m(k, Vec(k, 0));
      for (std::size_t j = 0; j < k; ++j) {
        std::uint64_t r = dist(rng);
        if (r == 0) continue;
        for (std::size_t a = 0; a < k; ++a)
          for (std::size_t b = 0; b < k; ++b)
            if (class_mats[j][a][b]) m[a][b] = f.add(m[a][b], f.mul(r, class_mats[j][a][b]));
      }
      // Restriction to the space in the coordinates given by the pivots.
      Mat a(d, Vec(d, 0));
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t t = 0; t < d; ++t) {
          std::uint64_t acc = 0;
          const auto& row = m[pivots[t]];
          for (std::size_t s = 0; s < k; ++s)
            if (space[i][s]) acc = f.add(acc, f.mul(row[s], space[i][s]));
          a[t][i] = acc;
        }
      }
      auto roots = modular::distinct_roots(f, modular::char_poly(f, a), rng);
      if (roots.size() <= 1) {
        next.push_back(std::move(space));
        continue;
      }
      for (std::uint64_t lambda : roots) {
        Mat shifted = a;
        for (std::size_t i = 0; i < d; ++i) shifted[i][i] = f.sub(shifted[i][i], lambda);
        std::vector<Vec> sub;
        for (const auto& c : modular::null_space(f, shifted)) {
          Vec v(k, 0);
          for (std::size_t i = 0; i < d; ++i)
            if (c[i])
              for (std::size_t s = 0; s < k; ++s) v[s] = f.add(v[s], f.mul(c[i], space[i][s]));
          sub.push_back(std::move(v));
        }
        if (sub.size() == 1)
          done.push_back(std::move(sub[0]));
        else
          next.push_back(std::move(sub));
      }
    }
    pending = std::move(next);
  }
  if (done.size() != k) throw DomainError("eigenspace splitting produced the wrong number of characters");
  for (auto& v : done) {
    if (v[identity_class] == 0) throw DomainError("central character vanishes at the identity");
    std::uint64_t inv = f.inv(v[identity_class]);
    for (auto& x : v) x = f.mul(x, inv);
  }
  return done;
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

CharValue CharacterTable::integer(std::int64_t n) const {
  Field f1(ell1), f2(ell2);
  return {f1.from_signed(n), f2.from_signed(n), static_cast<double>(n)};
}

CharValue CharacterTable::mul(const CharValue& a, const CharValue& b) const {
  return {a.m1 * b.m1 % ell1, a.m2 * b.m2 % ell2, a.f * b.f};
}

CharValue CharacterTable::add(const CharValue& a, const CharValue& b) const {
  return {(a.m1 + b.m1) % ell1, (a.m2 + b.m2) % ell2, a.f + b.f};
}

bool CharacterTable::equal(const CharValue& a, const CharValue& b) const {
  bool e1 = a.m1 == b.m1;
  bool e2 = a.m2 == b.m2;
  bool ef = std::abs(a.f - b.f) < kTolerance;
  if (e1 != e2 || e1 != ef) mismatches_->fetch_add(1);
  return e1 && e2;
}

const std::vector<CharacterTable::CoprimeTriple>& CharacterTable::coprime_triples() const {
  std::call_once(triples_->once, [&] {
    const Ambient& amb = group.ambient();
    std::vector<std::uint8_t> seen;
    const std::size_t k = classes.size();
    seen.assign(k * k * k, 0);
    for (std::uint32_t a = 0; a < k; ++a) {
      if (a == identity_class) continue;
      ElemId x = classes[a].rep;
      std::uint64_t ox = classes[a].order;
      group.members().for_each([&](ElemId y) {
        if (y == Ambient::identity() || std::gcd(ox, amb.order(y)) != 1) return;
        std::uint32_t b = class_of[y], c = class_of[amb.mul(x, y)];
        auto& s = seen[(a * k + b) * k + c];
        if (s) return;
        s = 1;
        triples_->triples.push_back({a, b, c, y});
      });
    }
  });
  return triples_->triples;
}

CharacterTable character_table(const SubgroupHandle& g, std::string group_id, std::uint64_t seed) {
  const Ambient& amb = g.ambient();
  const Caps& caps = amb.caps();
  require_cap("character", caps.character_cap, g.order());
  ClassInfo ci = conjugacy_classes(g);
  const std::size_t k = ci.count();
  require_cap("character_classes", caps.character_class_cap, k);

  CharacterTable t;
  t.group_id = std::move(group_id);
  t.group = g;
  t.order = g.order();
  t.class_of.assign(amb.size(), std::numeric_limits<std::uint32_t>::max());
  std::uint64_t e = 1;
  for (std::size_t c = 0; c < k; ++c) {
    CharClass cc;
    cc.rep = ci.representatives()[c];
    cc.rep_perm = amb.element(cc.rep);
    cc.size = ci.sizes()[c];
    cc.order = amb.order(cc.rep);
    cc.centralizer_order = t.order / cc.size;
    cc.members = ci.members(c);
    for (ElemId m : cc.members) t.class_of[m] = static_cast<std::uint32_t>(c);
    e = std::lcm(e, cc.order);
    t.classes.push_back(std::move(cc));
  }
  for (auto& cc : t.classes) cc.inverse = t.class_of[amb.inv(cc.rep)];
  t.identity_class = t.class_of[Ambient::identity()];
  t.exponent = static_cast<std::uint32_t>(e);

  const std::uint64_t bound = 4 * t.order * t.order;
  t.ell1 = modular::find_prime(e, bound);
  t.ell2 = t.ell1 ? modular::find_prime(e, t.ell1) : 0;
  if (!t.ell1 || !t.ell2) throw DomainError("no modular prime below the search bound");
  Field f1(t.ell1), f2(t.ell2);
  t.z1 = f1.root_of_unity(e);
  t.z2 = f2.root_of_unity(e);

  // Class matrices: M_j[r][s] = #{x in C_j : x^-1 z_s in C_r}.
  std::vector<Mat> mats(k, Mat(k, Vec(k, 0)));
  for (std::size_t s = 0; s < k; ++s) {
    ElemId z = t.classes[s].rep;
    g.members().for_each([&](ElemId x) { ++mats[t.class_of[x]][t.class_of[amb.mul(amb.inv(x), z)]][s]; });
  }
  for (auto& m : mats)
    for (auto& row : m)
      for (auto& v : row) v %= t.ell1;

  auto omegas = central_characters(f1, mats, t.identity_class, seed);

  // Powers g_s^i by class, for the lift.
  std::vector<std::vector<std::uint32_t>> powers(k);
  for (std::size_t s = 0; s < k; ++s) {
    ElemId x = Ambient::identity();
    for (std::uint64_t i = 0; i < t.classes[s].order; ++i) {
      powers[s].push_back(t.class_of[x]);
      x = amb.mul(x, t.classes[s].rep);
    }
  }

  struct Row {
    std::uint64_t degree;
    std::vector<Cyclotomic> values;
  };
  std::vector<Row> rows;
  for (const auto& w : omegas) {
    std::uint64_t sum = 0;
    for (std::size_t s = 0; s < k; ++s)
      sum = f1.add(sum, f1.mul(f1.mul(w[s], w[t.classes[s].inverse]), f1.inv(t.classes[s].size % t.ell1)));
    if (sum == 0) throw DomainError("degenerate central character");
    // d^2 = |G| / sum, an integer below l.
    std::uint64_t d2 = f1.mul(t.order % t.ell1, f1.inv(sum));
    std::uint64_t d = isqrt(d2);
    if (d * d != d2 || d == 0) throw DomainError("character degree is not an integer");
    Vec chi(k);
    for (std::size_t s = 0; s < k; ++s) chi[s] = f1.mul(f1.mul(d, w[s]), f1.inv(t.classes[s].size % t.ell1));

    Row row{d, {}};
    for (std::size_t s = 0; s < k; ++s) {
      const std::uint64_t n = t.classes[s].order;
      const std::uint64_t step = e / n;
      const std::uint64_t wn = f1.pow(t.z1, step);  // primitive n-th root
      const std::uint64_t inv_n = f1.inv(n % t.ell1);
      std::vector<std::int64_t> coeffs(e, 0);
      std::int64_t total = 0;
      for (std::uint64_t tt = 0; tt < n; ++tt) {
        std::uint64_t acc = 0;
        const std::uint64_t w_minus_t = f1.pow(f1.inv(wn), tt);
        std::uint64_t wp = 1;
        for (std::uint64_t i = 0; i < n; ++i) {
          acc = f1.add(acc, f1.mul(chi[powers[s][i]], wp));
          wp = f1.mul(wp, w_minus_t);
        }
        std::uint64_t mult = f1.mul(acc, inv_n);
        if (mult > d) throw DomainError("eigenvalue multiplicity out of range in the lift");
        coeffs[tt * step] = static_cast<std::int64_t>(mult);
        total += static_cast<std::int64_t>(mult);
      }
      if (static_cast<std::uint64_t>(total) != d) throw DomainError("eigenvalue multiplicities do not sum to the degree");
      Cyclotomic v(static_cast<std::uint32_t>(e), std::move(coeffs));
      if (v.reduce(t.ell1, t.z1) != chi[s]) throw DomainError("lifted value disagrees with the modular value");
      row.values.push_back(std::move(v));
    }
    rows.push_back(std::move(row));
  }

  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    for (std::size_t s = 0; s < a.values.size(); ++s)
      if (a.values[s].coeffs() != b.values[s].coeffs()) return a.values[s].coeffs() > b.values[s].coeffs();
    return false;
  });

  for (auto& row : rows) {
    std::vector<CharValue> imgs;
    for (const auto& v : row.values) imgs.push_back({v.reduce(t.ell1, t.z1), v.reduce(t.ell2, t.z2), v.to_complex()});
    t.degrees.push_back(row.degree);
    t.values.push_back(std::move(row.values));
    t.images.push_back(std::move(imgs));
  }
  return t;
}

TableCheck verify_table(const CharacterTable& t) {
  TableCheck c;
  const std::size_t k = t.class_count();
  const std::uint64_t before = t.float_mismatches();
  c.row_count = t.size() == k;
  c.degrees_at_identity = true;
  std::uint64_t squares = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    squares += t.degrees[i] * t.degrees[i];
    const auto& v = t.values[i][t.identity_class];
    if (v.coeffs()[0] != static_cast<std::int64_t>(t.degrees[i]) || v.weight() != t.degrees[i] ||
        !t.equal(t.value(i, t.identity_class), t.integer(static_cast<std::int64_t>(t.degrees[i]))))
      c.degrees_at_identity = false;
  }
  c.sum_of_squares = squares == t.order;

  c.row_orthogonality = true;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j) {
      CharValue acc = t.integer(0);
      for (std::size_t s = 0; s < k; ++s)
        acc = t.add(acc, t.mul(t.integer(static_cast<std::int64_t>(t.classes[s].size)), t.mul(t.value(i, s), t.conj(j, s))));
      if (!t.equal(acc, t.integer(i == j ? static_cast<std::int64_t>(t.order) : 0))) c.row_orthogonality = false;
    }

  c.column_orthogonality = true;
  for (std::size_t s = 0; s < k; ++s)
    for (std::size_t u = 0; u < k; ++u) {
      CharValue acc = t.integer(0);
      for (std::size_t i = 0; i < t.size(); ++i) acc = t.add(acc, t.mul(t.value(i, s), t.conj(i, u)));
      auto expected = s == u ? static_cast<std::int64_t>(t.classes[s].centralizer_order) : 0;
      if (!t.equal(acc, t.integer(expected))) c.column_orthogonality = false;
    }
  c.float_agreement = t.float_mismatches() == before;
  return c;
}

DefectZeroVerdict has_p_defect_zero(const CharacterTable& t, std::size_t chi, std::uint64_t p) {
  DefectZeroVerdict v;
  v.by_degree = p_part(t.degrees[chi], p) == p_part(t.order, p);
  v.vanishes_on_order_p = true;
  v.vanishes_on_p_singular = true;
  for (std::size_t s = 0; s < t.class_count(); ++s) {
    const std::uint64_t o = t.classes[s].order;
    if (o % p != 0) continue;
    bool zero = t.is_zero(t.value(chi, s));
    if (!zero) {
      v.vanishes_on_p_singular = false;
      if (o == p) v.vanishes_on_order_p = false;
    }
  }
  return v;
}

MultiplicativeVerdict is_multiplicative(const CharacterTable& t, std::size_t chi) {
  MultiplicativeVerdict v;
  for (const auto& tr : t.coprime_triples()) {
    if (!t.equal(t.value(chi, tr.c), t.mul(t.value(chi, tr.a), t.value(chi, tr.b)))) {
      v.multiplicative = false;
      v.witness = std::make_pair(t.classes[tr.a].rep_perm, t.group.ambient().element(tr.y));
      break;
    }
  }
  return v;
}

bool vanishes_off(const CharacterTable& t, std::size_t chi, const SubgroupHandle& n) {
  for (std::size_t s = 0; s < t.class_count(); ++s)
    if (!n.contains(t.classes[s].rep) && !t.is_zero(t.value(chi, s))) return false;
  return true;
}

std::vector<MultiplicativeCharacterVerdict> multiplicative_character_check(const CharacterTable& t) {
  const auto primes = prime_divisors(t.order);
  std::vector<SubgroupHandle> cores;
  for (auto p : primes) cores.push_back(p_core(t.group, p));
  std::optional<SubgroupHandle> fstar;
  std::vector<MultiplicativeCharacterVerdict> out;
  for (std::size_t chi = 0; chi < t.size(); ++chi) {
    if (t.degrees[chi] == 1) continue;
    MultiplicativeCharacterVerdict v;
    v.character = chi;
    v.degree = t.degrees[chi];
    v.multiplicative = is_multiplicative(t, chi).multiplicative;
    for (std::size_t i = 0; i < primes.size(); ++i)
      if (vanishes_off(t, chi, cores[i])) {
        v.vanishing_prime = primes[i];
        break;
      }
    v.equivalence_ok = v.multiplicative == v.vanishing_prime.has_value();
    if (v.multiplicative) {
      for (const auto& tr : t.coprime_triples())
        if (!t.is_zero(t.value(chi, tr.a)) && !t.is_zero(t.value(chi, tr.b))) v.coprime_values_ok = false;
      v.prime_order_nonzero = false;
      for (std::size_t s = 0; s < t.class_count() && !v.nonzero_prime; ++s) {
        std::uint64_t o = t.classes[s].order;
        if (is_prime(o) && !t.is_zero(t.value(chi, s))) v.nonzero_prime = o;
      }
      v.prime_order_nonzero = v.nonzero_prime.has_value();
      if (v.nonzero_prime) {
        const std::uint64_t p = *v.nonzero_prime;
        v.index_is_p_power = t.order % v.degree == 0 && is_power_of(t.order / v.degree, p);
        if (!fstar) fstar = generalized_fitting(t.group);
        auto idx = static_cast<std::size_t>(std::find(primes.begin(), primes.end(), p) - primes.begin());
        v.fstar_is_op = *fstar == cores[idx];
      }
    }
    out.push_back(v);
  }
  return out;
}

ProductLemmaVerdict product_lemma_check(const CharacterTable& t) {
  const Ambient& amb = t.group.ambient();
  const std::size_t k = t.class_count();
  ProductLemmaVerdict v;
  std::vector<std::uint8_t> mark(k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      ++v.class_pairs;
      std::fill(mark.begin(), mark.end(), 0);
      const ElemId x = t.classes[a].rep;
      std::vector<std::uint32_t> product_classes;
      for (ElemId y : t.classes[b].members) {
        std::uint32_t c = t.class_of[amb.mul(x, y)];
        if (!mark[c]) {
          mark[c] = 1;
          product_classes.push_back(c);
        }
      }
      const std::uint32_t ab = t.class_of[amb.mul(x, t.classes[b].rep)];
      for (std::size_t chi = 0; chi < t.size(); ++chi) {
        bool constant = true;
        for (std::uint32_t c : product_classes)
          if (!t.equal(t.value(chi, c), t.value(chi, product_classes.front()))) {
            constant = false;
            break;
          }
        if (!constant) continue;
        ++v.constant_instances;
        CharValue lhs = t.mul(t.value(chi, a), t.value(chi, b));
        CharValue rhs = t.mul(t.value(chi, ab), t.value(chi, t.identity_class));
        if (!t.equal(lhs, rhs)) ++v.failures;
      }
    }
  return v;
}

nlohmann::json table_to_json(const CharacterTable& t) {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& c : t.classes)
    classes.push_back({{"representative", c.rep_perm.to_string()}, {"size", c.size}, {"element_order", c.order}});
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < t.size(); ++i) {
    nlohmann::json values = nlohmann::json::array();
    for (const auto& v : t.values[i]) values.push_back(v.coeffs());
    rows.push_back({{"degree", t.degrees[i]}, {"values", values}});
  }
  return {{"group", t.group_id},
          {"order", t.order},
          {"exponent", t.exponent},
          {"primes", {t.ell1, t.ell2}},
          {"classes", classes},
          {"rows", rows}};
}

}  // namespace grpaudit
