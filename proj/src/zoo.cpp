#include "grpaudit/zoo.hpp"

#include <numeric>

#include "grpaudit/errors.hpp"
#include "grpaudit/finite_field.hpp"

namespace grpaudit::zoo {

namespace {

Permutation from_map(std::size_t n, const auto& f) {
  std::vector<Point> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>(f(i));
  return Permutation(std::move(img));
}

std::uint64_t factorial(std::uint64_t n) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

// Point q stands for infinity.
Permutation mobius(const FiniteField& f, std::uint32_t a, std::uint32_t b, std::uint32_t c,
                   std::uint32_t d) {
  std::uint32_t q = f.order();
  return from_map(q + 1, [&](std::size_t i) -> std::uint32_t {
    if (i == q) return c == 0 ? q : f.mul(a, f.inv(c));
    auto x = static_cast<std::uint32_t>(i);
    std::uint32_t num = f.add(f.mul(a, x), b);
    std::uint32_t den = f.add(f.mul(c, x), d);
    return den == 0 ? q : f.mul(num, f.inv(den));
  });
}

// x -> w x^(p^s) on the projective line.
Permutation semilinear(const FiniteField& f, std::uint32_t w, std::uint32_t s) {
  std::uint32_t q = f.order();
  return from_map(q + 1, [&](std::size_t i) -> std::uint32_t {
    if (i == q) return q;
    std::uint32_t x = static_cast<std::uint32_t>(i);
    for (std::uint32_t j = 0; j < s; ++j) x = f.frobenius(x);
    return f.mul(w, x);
  });
}

std::vector<Permutation> psl2_generators(const FiniteField& f) {
  std::uint32_t w = f.primitive();
  std::uint32_t one = 1, zero = 0;
  return {mobius(f, one, one, zero, one), mobius(f, f.mul(w, w), zero, zero, one),
          mobius(f, zero, f.neg(one), one, zero)};
}

std::uint64_t psl2_order(std::uint64_t q) { return q * (q * q - 1) / (q % 2 == 0 ? 1 : 2); }

std::uint32_t field_degree(std::uint32_t q) { return FiniteField(q).degree(); }

std::vector<Mat2> named_matrices(const std::string& name) {
  if (name == "trivial") return {};
  if (name == "c4") return c4_in_sl2_3();
  if (name == "q8") return q8_in_sl2_3();
  if (name == "sl2") return sl2_generators();
  throw DomainError("unknown matrix group '" + name + "'");
}

std::uint64_t named_matrix_order(const std::string& name) {
  if (name == "trivial") return 1;
  if (name == "c4") return 4;
  if (name == "q8") return 8;
  if (name == "sl2") return 24;
  throw DomainError("unknown matrix group '" + name + "'");
}

std::uint32_t uparam(const nlohmann::json& params, const char* key) {
  if (!params.contains(key) || !params[key].is_number_unsigned())
    throw DomainError(std::string("missing or invalid parameter '") + key + "'");
  return params[key].get<std::uint32_t>();
}

}  // namespace

PermGroup cyclic(std::size_t n) {
  if (n == 0) throw DomainError("cyclic group needs n >= 1");
  return PermGroup({from_map(n, [&](std::size_t i) { return (i + 1) % n; })});
}

PermGroup elementary_abelian(std::size_t p, std::size_t k) {
  if (k == 0) throw DomainError("elementary abelian group needs k >= 1");
  std::vector<Permutation> gens;
  for (std::size_t b = 0; b < k; ++b)
    gens.push_back(from_map(p * k, [&](std::size_t i) {
      return i / p == b ? b * p + (i % p + 1) % p : i;
    }));
  return PermGroup(std::move(gens));
}

PermGroup dihedral(std::size_t n) {
  if (n < 3) throw DomainError("dihedral group needs n >= 3");
  return PermGroup({from_map(n, [&](std::size_t i) { return (i + 1) % n; }),
                    from_map(n, [&](std::size_t i) { return (n - i) % n; })});
}

PermGroup symmetric(std::size_t n) {
  if (n < 2) return PermGroup::trivial(std::max<std::size_t>(n, 1));
  if (n == 2) return cyclic(2);
  return PermGroup({from_map(n, [&](std::size_t i) { return (i + 1) % n; }),
                    from_map(n, [&](std::size_t i) { return i < 2 ? 1 - i : i; })});
}

PermGroup alternating(std::size_t n) {
  if (n < 3) return PermGroup::trivial(std::max<std::size_t>(n, 1));
  std::vector<Permutation> gens;
  for (std::size_t j = 2; j < n; ++j)
    gens.push_back(from_map(n, [&](std::size_t i) -> std::size_t {
      if (i == 0) return 1;
      if (i == 1) return j;
      if (i == j) return 0;
      return i;
    }));
  return PermGroup(std::move(gens));
}

PermGroup affine_line(std::uint32_t q, std::uint32_t k, bool frobenius) {
  FiniteField f(q);
  if (k == 0 || (q - 1) % k != 0) throw DomainError("multiplier order must divide q - 1");
  std::uint32_t a = f.pow(f.primitive(), (q - 1) / k);
  std::vector<Permutation> gens{from_map(q, [&](std::size_t x) { return f.add(static_cast<std::uint32_t>(x), 1); })};
  if (k > 1) gens.push_back(from_map(q, [&](std::size_t x) { return f.mul(a, static_cast<std::uint32_t>(x)); }));
  if (frobenius && f.degree() > 1)
    gens.push_back(from_map(q, [&](std::size_t x) { return f.frobenius(static_cast<std::uint32_t>(x)); }));
  return PermGroup(std::move(gens));
}

namespace {

std::pair<std::uint32_t, std::uint32_t> apply(const Mat2& m, std::uint32_t x, std::uint32_t y,
                                              std::uint32_t p) {
  return {(m[0] * x + m[1] * y) % p, (m[2] * x + m[3] * y) % p};
}

}  // namespace

PermGroup affine_plane(std::uint32_t p, const std::vector<Mat2>& h) {
  std::size_t n = std::size_t{p} * p;
  std::vector<Permutation> gens;
  gens.push_back(from_map(n, [&](std::size_t v) { return (v % p + 1) % p + p * (v / p); }));
  gens.push_back(from_map(n, [&](std::size_t v) { return v % p + p * ((v / p + 1) % p); }));
  for (const auto& m : h)
    gens.push_back(from_map(n, [&](std::size_t v) {
      auto [x, y] = apply(m, static_cast<std::uint32_t>(v % p), static_cast<std::uint32_t>(v / p), p);
      return x + p * y;
    }));
  return PermGroup(std::move(gens));
}

PermGroup linear_on_vectors(std::uint32_t p, const std::vector<Mat2>& gens) {
  std::size_t n = std::size_t{p} * p - 1;
  std::vector<Permutation> perms;
  for (const auto& m : gens)
    perms.push_back(from_map(n, [&](std::size_t i) {
      std::size_t v = i + 1;
      auto [x, y] = apply(m, static_cast<std::uint32_t>(v % p), static_cast<std::uint32_t>(v / p), p);
      return x + p * y - 1;
    }));
  return PermGroup(std::move(perms));
}

std::vector<Mat2> sl2_generators() { return {Mat2{1, 1, 0, 1}, Mat2{1, 0, 1, 1}}; }

std::vector<Mat2> c4_in_sl2_3() { return {Mat2{0, 2, 1, 0}}; }
std::vector<Mat2> q8_in_sl2_3() { return {Mat2{0, 2, 1, 0}, Mat2{1, 1, 1, 2}}; }

PermGroup sl2(std::uint32_t p) { return linear_on_vectors(p, sl2_generators()); }

PermGroup gl2(std::uint32_t p) {
  auto gens = sl2_generators();
  gens.push_back(Mat2{FiniteField(p).primitive(), 0, 0, 1});
  return linear_on_vectors(p, gens);
}

PermGroup extraspecial_27(const std::vector<Mat2>& h) {
  // (a, b, c)(a', b', c') = (a + a', b + b', c + c' + 2(ab' - a'b)) over F_3;
  // SL_2(3) acts by (v, c) -> (Mv, c).
  auto idx = [](std::uint32_t a, std::uint32_t b, std::uint32_t c) { return a + 3 * b + 9 * c; };
  auto right_mul = [&](std::uint32_t a2, std::uint32_t b2) {
    return from_map(27, [&](std::size_t i) {
      auto a = static_cast<std::uint32_t>(i % 3), b = static_cast<std::uint32_t>(i / 3 % 3),
           c = static_cast<std::uint32_t>(i / 9);
      std::uint32_t form = (a * b2 + 2 * a2 * b) % 3;
      return idx((a + a2) % 3, (b + b2) % 3, (c + 2 * form) % 3);
    });
  };
  std::vector<Permutation> gens{right_mul(1, 0), right_mul(0, 1)};
  for (const auto& m : h)
    gens.push_back(from_map(27, [&](std::size_t i) {
      auto [x, y] = apply(m, static_cast<std::uint32_t>(i % 3), static_cast<std::uint32_t>(i / 3 % 3), 3);
      return idx(x, y, static_cast<std::uint32_t>(i / 9));
    }));
  return PermGroup(std::move(gens));
}

PermGroup psl2(std::uint32_t q) { return PermGroup(psl2_generators(FiniteField(q))); }

PermGroup pgl2(std::uint32_t q) {
  FiniteField f(q);
  auto gens = psl2_generators(f);
  gens.push_back(mobius(f, f.primitive(), 0, 0, 1));
  return PermGroup(std::move(gens));
}

PermGroup psigmal2(std::uint32_t q) {
  FiniteField f(q);
  auto gens = psl2_generators(f);
  if (f.degree() > 1) gens.push_back(semilinear(f, 1, 1));
  return PermGroup(std::move(gens));
}

PermGroup pgammal2(std::uint32_t q) {
  FiniteField f(q);
  auto gens = psl2_generators(f);
  gens.push_back(mobius(f, f.primitive(), 0, 0, 1));
  if (f.degree() > 1) gens.push_back(semilinear(f, 1, 1));
  return PermGroup(std::move(gens));
}

PermGroup m10() {
  FiniteField f(9);
  auto gens = psl2_generators(f);
  gens.push_back(semilinear(f, f.primitive(), 1));
  return PermGroup(std::move(gens));
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  std::size_t na = a.degree(), nb = b.degree();
  std::vector<Permutation> gens;
  for (const auto& g : a.generators())
    if (!g.is_identity())
      gens.push_back(from_map(na + nb, [&](std::size_t i) { return i < na ? g[i] : i; }));
  for (const auto& g : b.generators())
    if (!g.is_identity())
      gens.push_back(from_map(na + nb, [&](std::size_t i) { return i < na ? i : na + g[i - na]; }));
  if (gens.empty()) return PermGroup::trivial(na + nb);
  return PermGroup(std::move(gens));
}

PermGroup wreath_cyclic(const PermGroup& t, std::size_t copies) {
  if (copies == 0) throw DomainError("wreath product needs at least one copy");
  std::size_t n = t.degree();
  std::vector<Permutation> gens;
  for (const auto& g : t.generators())
    if (!g.is_identity())
      gens.push_back(from_map(n * copies, [&](std::size_t i) { return i < n ? g[i] : i; }));
  if (copies > 1)
    gens.push_back(from_map(n * copies, [&](std::size_t i) { return (i + n) % (n * copies); }));
  if (gens.empty()) return PermGroup::trivial(n * copies);
  return PermGroup(std::move(gens));
}

std::uint64_t family_order(const std::string& family, const nlohmann::json& params) {
  if (family == "cyclic") return uparam(params, "n");
  if (family == "elementary_abelian") {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < uparam(params, "k"); ++i) r *= uparam(params, "p");
    return r;
  }
  if (family == "dihedral") return 2ULL * uparam(params, "n");
  if (family == "symmetric") return factorial(uparam(params, "n"));
  if (family == "alternating") return std::max<std::uint64_t>(1, factorial(uparam(params, "n")) / 2);
  if (family == "affine_line") {
    std::uint64_t q = uparam(params, "q");
    bool frob = params.value("frobenius", false);
    return q * uparam(params, "k") * (frob ? field_degree(static_cast<std::uint32_t>(q)) : 1);
  }
  if (family == "affine_plane") {
    std::uint64_t p = uparam(params, "p");
    return p * p * named_matrix_order(params.at("h").get<std::string>());
  }
  if (family == "gl2") {
    std::uint64_t p = uparam(params, "p");
    return (p * p - 1) * (p * p - p);
  }
  if (family == "sl2") {
    std::uint64_t p = uparam(params, "p");
    return p * (p * p - 1);
  }
  if (family == "extraspecial_27") return 27 * named_matrix_order(params.value("h", std::string("trivial")));
  if (family == "psl2") return psl2_order(uparam(params, "q"));
  if (family == "pgl2") {
    std::uint64_t q = uparam(params, "q");
    return q * (q * q - 1);
  }
  if (family == "psigmal2") {
    std::uint32_t q = uparam(params, "q");
    return psl2_order(q) * field_degree(q);
  }
  if (family == "pgammal2") {
    std::uint64_t q = uparam(params, "q");
    return q * (q * q - 1) * field_degree(static_cast<std::uint32_t>(q));
  }
  if (family == "m10") return 720;
  if (family == "direct_product") {
    std::uint64_t r = 1;
    for (const auto& f : params.at("factors")) r *= family_order(f.at("family"), f.value("params", nlohmann::json::object()));
    return r;
  }
  if (family == "wreath") {
    const auto& b = params.at("base");
    std::uint64_t base = family_order(b.at("family"), b.value("params", nlohmann::json::object()));
    std::uint64_t r = 1;
    std::uint32_t t = uparam(params, "copies");
    for (std::uint32_t i = 0; i < t; ++i) r *= base;
    return r * t;
  }
  throw DomainError("unknown group family '" + family + "'");
}

namespace {

PermGroup build(const std::string& family, const nlohmann::json& params) {
  if (family == "cyclic") return cyclic(uparam(params, "n"));
  if (family == "elementary_abelian") return elementary_abelian(uparam(params, "p"), uparam(params, "k"));
  if (family == "dihedral") return dihedral(uparam(params, "n"));
  if (family == "symmetric") return symmetric(uparam(params, "n"));
  if (family == "alternating") return alternating(uparam(params, "n"));
  if (family == "affine_line")
    return affine_line(uparam(params, "q"), uparam(params, "k"), params.value("frobenius", false));
  if (family == "affine_plane")
    return affine_plane(uparam(params, "p"), named_matrices(params.at("h").get<std::string>()));
  if (family == "gl2") return gl2(uparam(params, "p"));
  if (family == "sl2") return sl2(uparam(params, "p"));
  if (family == "extraspecial_27")
    return extraspecial_27(named_matrices(params.value("h", std::string("trivial"))));
  if (family == "psl2") return psl2(uparam(params, "q"));
  if (family == "pgl2") return pgl2(uparam(params, "q"));
  if (family == "psigmal2") return psigmal2(uparam(params, "q"));
  if (family == "pgammal2") return pgammal2(uparam(params, "q"));
  if (family == "m10") return m10();
  if (family == "direct_product") {
    const auto& fs = params.at("factors");
    if (fs.empty()) throw DomainError("direct product needs factors");
    PermGroup g = make(fs[0].at("family"), fs[0].value("params", nlohmann::json::object()));
    for (std::size_t i = 1; i < fs.size(); ++i)
      g = direct_product(g, make(fs[i].at("family"), fs[i].value("params", nlohmann::json::object())));
    return g;
  }
  if (family == "wreath") {
    const auto& b = params.at("base");
    return wreath_cyclic(make(b.at("family"), b.value("params", nlohmann::json::object())),
                         uparam(params, "copies"));
  }
  throw DomainError("unknown group family '" + family + "'");
}

}  // namespace

PermGroup make(const std::string& family, const nlohmann::json& params) {
  PermGroup g = build(family, params);
  std::uint64_t expected = family_order(family, params);
  if (g.order() != expected)
    throw DomainError(family + " " + params.dump() + ": constructed order " + std::to_string(g.order()) +
                      " differs from " + std::to_string(expected));
  return g;
}

}  // namespace grpaudit::zoo
