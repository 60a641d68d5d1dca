#include "grpaudit/modular.hpp"

#include <algorithm>

#include "grpaudit/ambient.hpp"
#include "grpaudit/errors.hpp"

namespace grpaudit::modular {

std::uint64_t Field::pow(std::uint64_t a, std::uint64_t k) const {
  std::uint64_t r = 1 % l;
  a %= l;
  while (k) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

std::uint64_t Field::inv(std::uint64_t a) const {
  if (a % l == 0) throw DomainError("inverse of zero");
  return pow(a, l - 2);
}

std::uint64_t Field::primitive_root() const {
  auto factors = prime_divisors(l - 1);
  for (std::uint64_t g = 2; g < l; ++g) {
    bool ok = std::all_of(factors.begin(), factors.end(), [&](std::uint64_t q) { return pow(g, (l - 1) / q) != 1; });
    if (ok) return g;
  }
  return 1;  // l = 2
}

std::uint64_t Field::root_of_unity(std::uint64_t e) const {
  if ((l - 1) % e != 0) throw DomainError("e does not divide l - 1");
  return pow(primitive_root(), (l - 1) / e);
}

std::uint64_t find_prime(std::uint64_t e, std::uint64_t lower, std::uint64_t bound) {
  std::uint64_t t = lower / e + 1;
  for (std::uint64_t l = t * e + 1; l < bound; l += e)
    if (l > lower && is_prime(l)) return l;
  return 0;
}

Poly char_poly(const Field& f, Mat h) {
  const std::size_t n = h.size();
  // Reduce to upper Hessenberg form by similarity transforms.
  for (std::size_t m = 1; m + 1 <= n; ++m) {
    std::size_t i = m;
    while (i < n && h[i][m - 1] == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap(h[i], h[m]);
      for (auto& row : h) std::swap(row[i], row[m]);
    }
    std::uint64_t t = f.inv(h[m][m - 1]);
    for (i = m + 1; i < n; ++i) {
      std::uint64_t u = f.mul(h[i][m - 1], t);
      if (u == 0) continue;
      for (std::size_t j = 0; j < n; ++j) h[i][j] = f.sub(h[i][j], f.mul(u, h[m][j]));
      for (std::size_t j = 0; j < n; ++j) h[j][m] = f.add(h[j][m], f.mul(u, h[j][i]));
    }
  }
  // p_m = (x - h[m-1][m-1]) p_{m-1} - sum_i (prod of subdiagonal) h[m-i-1][m-1] p_{m-i-1}
  std::vector<Poly> p(n + 1);
  p[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    Poly cur(m + 1, 0);
    for (std::size_t d = 0; d < p[m - 1].size(); ++d) {
      cur[d + 1] = f.add(cur[d + 1], p[m - 1][d]);
      cur[d] = f.sub(cur[d], f.mul(h[m - 1][m - 1], p[m - 1][d]));
    }
    std::uint64_t t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t = f.mul(t, h[m - i][m - i - 1]);
      std::uint64_t c = f.mul(t, h[m - i - 1][m - 1]);
      if (c == 0) continue;
      for (std::size_t d = 0; d < p[m - i - 1].size(); ++d) cur[d] = f.sub(cur[d], f.mul(c, p[m - i - 1][d]));
    }
    p[m] = std::move(cur);
  }
  return p[n];
}

Mat poly_of_matrix(const Field& f, const Poly& p, const Mat& a) {
  const std::size_t n = a.size();
  Mat r(n, Vec(n, 0));
  // Horner: r = r*a + c
  for (std::size_t d = p.size(); d-- > 0;) {
    Mat next(n, Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        if (r[i][k] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) next[i][j] = f.add(next[i][j], f.mul(r[i][k], a[k][j]));
      }
    for (std::size_t i = 0; i < n; ++i) next[i][i] = f.add(next[i][i], p[d]);
    r = std::move(next);
  }
  return r;
}

namespace {

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void make_monic(const Field& f, Poly& p) {
  trim(p);
  if (p.empty()) return;
  std::uint64_t inv = f.inv(p.back());
  for (auto& c : p) c = f.mul(c, inv);
}

/// (quotient, remainder) of a by b, b nonzero.
std::pair<Poly, Poly> divmod(const Field& f, Poly a, Poly b) {
  trim(a);
  trim(b);
  if (a.size() < b.size()) return {{}, a};
  Poly q(a.size() - b.size() + 1, 0);
  std::uint64_t inv = f.inv(b.back());
  for (std::size_t s = a.size() - b.size() + 1; s-- > 0;) {
    std::uint64_t c = f.mul(a[s + b.size() - 1], inv);
    q[s] = c;
    if (c)
      for (std::size_t j = 0; j < b.size(); ++j) a[s + j] = f.sub(a[s + j], f.mul(c, b[j]));
  }
  trim(a);
  trim(q);
  return {q, a};
}

Poly mulmod(const Field& f, const Poly& a, const Poly& b, const Poly& m) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i])
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  return divmod(f, std::move(r), m).second;
}

Poly powmod(const Field& f, Poly base, std::uint64_t k, const Poly& m) {
  Poly r{1};
  r = divmod(f, r, m).second;
  base = divmod(f, base, m).second;
  while (k) {
    if (k & 1) r = mulmod(f, r, base, m);
    base = mulmod(f, base, base, m);
    k >>= 1;
  }
  return r;
}

Poly gcd(const Field& f, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = divmod(f, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  make_monic(f, a);
  return a;
}

Poly sub_poly(const Field& f, Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = f.sub(a[i], b[i]);
  trim(a);
  return a;
}

void split(const Field& f, const Poly& g, std::mt19937_64& rng, std::vector<std::uint64_t>& out) {
  if (g.size() <= 1) return;
  if (g.size() == 2) {
    out.push_back(f.mul(f.neg(g[0]), f.inv(g[1])));
    return;
  }
  if (f.l == 2) {
    // Only 0 and 1 can be roots.
    for (std::uint64_t r : {0ULL, 1ULL}) {
      std::uint64_t v = 0;
      for (std::size_t i = g.size(); i-- > 0;) v = f.add(f.mul(v, r), g[i]);
      if (v == 0) out.push_back(r);
    }
    return;
  }
  std::uniform_int_distribution<std::uint64_t> dist(0, f.l - 1);
  for (;;) {
    Poly h = powmod(f, Poly{dist(rng), 1}, (f.l - 1) / 2, g);
    h = sub_poly(f, h, Poly{1});
    Poly d = gcd(f, g, h);
    if (d.size() > 1 && d.size() < g.size()) {
      split(f, d, rng, out);
      split(f, divmod(f, g, d).first, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::uint64_t> distinct_roots(const Field& f, const Poly& p, std::mt19937_64& rng) {
  Poly m = p;
  make_monic(f, m);
  if (m.size() <= 1) return {};
  // gcd(p, x^l - x) keeps each root once.
  Poly xl = powmod(f, Poly{0, 1}, f.l, m);
  Poly g = gcd(f, m, sub_poly(f, xl, Poly{0, 1}));
  std::vector<std::uint64_t> out;
  split(f, g, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> row_reduce(const Field& f, std::vector<Vec>& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t n = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t i = r;
    while (i < rows.size() && rows[i][c] == 0) ++i;
    if (i == rows.size()) continue;
    std::swap(rows[i], rows[r]);
    std::uint64_t inv = f.inv(rows[r][c]);
    for (auto& x : rows[r]) x = f.mul(x, inv);
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (j == r || rows[j][c] == 0) continue;
      std::uint64_t u = rows[j][c];
      for (std::size_t k = 0; k < n; ++k) rows[j][k] = f.sub(rows[j][k], f.mul(u, rows[r][k]));
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

std::vector<Vec> null_space(const Field& f, Mat a) {
  const std::size_t n = a.empty() ? 0 : a[0].size();
  auto pivots = row_reduce(f, a);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(a[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace grpaudit::modular
