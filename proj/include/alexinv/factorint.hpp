#pragma once

// Factorization of integer polynomials into irreducibles over Q.
//
// Square-free decomposition (Yun), Berlekamp factorization modulo the
// smallest admissible prime p >= 3, multifactor Hensel lifting to p^k past a
// Mignotte bound, then recombination of lifted factors by increasing subset
// size. Deterministic: no randomized splitting anywhere.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "alexinv/polyring.hpp"

namespace alexinv {

struct FactorPower {
  IntPoly factor;
  unsigned exponent;
  friend bool operator==(const FactorPower&, const FactorPower&) = default;
};

struct Factorization {
  int unit_sign = 1;
  std::vector<FactorPower> factors;

  /// unit_sign * prod factor^exponent.
  IntPoly expand() const {
    IntPoly out = IntPoly::constant(Integer(unit_sign));
    for (const auto& fp : factors) out *= pow(fp.factor, fp.exponent);
    return out;
  }
};

namespace detail {

// Dense polynomials over Z/p with p < 2^31, ascending, trimmed.
class ZpPoly {
 public:
  std::int64_t p = 2;
  std::vector<std::int64_t> c;

  ZpPoly() = default;
  ZpPoly(std::int64_t prime, std::vector<std::int64_t> coeffs) : p(prime), c(std::move(coeffs)) { normalize(); }

  static ZpPoly from(const IntPoly& f, std::int64_t prime) {
    std::vector<std::int64_t> c(f.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = static_cast<std::int64_t>(mpz_fdiv_ui(f.coeffs()[i].get_mpz_t(), static_cast<unsigned long>(prime)));
    return ZpPoly(prime, std::move(c));
  }

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  std::int64_t lead() const { return c.back(); }

  void normalize() {
    for (auto& x : c) {
      x %= p;
      if (x < 0) x += p;
    }
    while (!c.empty() && c.back() == 0) c.pop_back();
  }

  IntPoly to_int() const {
    std::vector<Integer> v(c.begin(), c.end());
    return IntPoly(std::move(v));
  }

  friend bool operator==(const ZpPoly& a, const ZpPoly& b) { return a.c == b.c; }
};

inline std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = ((a % p) + p) % p;
  while (nr != 0) {
    const std::int64_t q = r / nr;
    t = std::exchange(nt, t - q * nt);
    r = std::exchange(nr, r - q * nr);
  }
  if (r != 1) throw std::domain_error("no modular inverse");
  return t < 0 ? t + p : t;
}

inline ZpPoly add(const ZpPoly& a, const ZpPoly& b) {
  std::vector<std::int64_t> r(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
  return ZpPoly(a.p, std::move(r));
}

inline ZpPoly sub(const ZpPoly& a, const ZpPoly& b) {
  std::vector<std::int64_t> r(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
  return ZpPoly(a.p, std::move(r));
}

inline ZpPoly mul(const ZpPoly& a, const ZpPoly& b) {
  if (a.is_zero() || b.is_zero()) return ZpPoly(a.p, {});
  std::vector<std::int64_t> r(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] = (r[i + j] + a.c[i] * b.c[j]) % a.p;
  return ZpPoly(a.p, std::move(r));
}

inline ZpPoly scale(const ZpPoly& a, std::int64_t s) {
  std::vector<std::int64_t> r(a.c);
  for (auto& x : r) x = (x * (((s % a.p) + a.p) % a.p)) % a.p;
  return ZpPoly(a.p, std::move(r));
}

inline std::pair<ZpPoly, ZpPoly> divmod(const ZpPoly& f, const ZpPoly& g) {
  if (g.is_zero()) throw std::domain_error("division by zero polynomial mod p");
  const std::int64_t p = f.p;
  if (f.degree() < g.degree()) return {ZpPoly(p, {}), f};
  std::vector<std::int64_t> r = f.c;
  const int dg = g.degree();
  std::vector<std::int64_t> q(static_cast<std::size_t>(f.degree() - dg + 1), 0);
  const std::int64_t li = inv_mod(g.lead(), p);
  for (int k = f.degree(); k >= dg; --k) {
    const std::int64_t coef = (r[static_cast<std::size_t>(k)] % p) * li % p;
    if (coef == 0) continue;
    q[static_cast<std::size_t>(k - dg)] = coef;
    for (int i = 0; i <= dg; ++i) {
      auto& x = r[static_cast<std::size_t>(k - dg + i)];
      x = ((x - coef * g.c[static_cast<std::size_t>(i)]) % p + p) % p;
    }
  }
  r.resize(static_cast<std::size_t>(dg));
  return {ZpPoly(p, std::move(q)), ZpPoly(p, std::move(r))};
}

inline ZpPoly monic(const ZpPoly& a) { return a.is_zero() ? a : scale(a, inv_mod(a.lead(), a.p)); }

inline ZpPoly gcd(ZpPoly a, ZpPoly b) {
  while (!b.is_zero()) {
    ZpPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

/// s*a + t*b = 1 for coprime a, b.
inline std::pair<ZpPoly, ZpPoly> bezout(const ZpPoly& a, const ZpPoly& b) {
  const std::int64_t p = a.p;
  ZpPoly r0 = a, r1 = b;
  ZpPoly s0(p, {1}), s1(p, {});
  ZpPoly t0(p, {}), t1(p, {1});
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, sub(s0, mul(q, s1)));
    t0 = std::exchange(t1, sub(t0, mul(q, t1)));
  }
  if (r0.degree() != 0) throw std::domain_error("bezout: inputs not coprime mod p");
  const std::int64_t li = inv_mod(r0.lead(), p);
  return {scale(s0, li), scale(t0, li)};
}

inline ZpPoly powmod(ZpPoly base, std::uint64_t e, const ZpPoly& m) {
  ZpPoly result(base.p, {1});
  base = divmod(base, m).second;
  while (e > 0) {
    if (e & 1U) result = divmod(mul(result, base), m).second;
    e >>= 1U;
    if (e > 0) base = divmod(mul(base, base), m).second;
  }
  return result;
}

inline ZpPoly derivative(const ZpPoly& f) {
  if (f.degree() < 1) return ZpPoly(f.p, {});
  std::vector<std::int64_t> d(f.c.size() - 1);
  for (std::size_t k = 1; k < f.c.size(); ++k) d[k - 1] = f.c[k] * static_cast<std::int64_t>(k) % f.p;
  return ZpPoly(f.p, std::move(d));
}

/// Null space basis of the n x n matrix `a` over Z/p (row vectors v with v*a = 0).
inline std::vector<std::vector<std::int64_t>> left_kernel(std::vector<std::vector<std::int64_t>> a, std::int64_t p) {
  const std::size_t n = a.size();
  // Transpose so that we solve a^T x = 0 by column elimination on rows.
  std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[j][i];
  std::vector<int> row_of_col(n, -1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t piv = row;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) continue;
    std::swap(m[piv], m[row]);
    const std::int64_t inv = inv_mod(m[row][col], p);
    for (auto& x : m[row]) x = x * inv % p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || m[r][col] == 0) continue;
      const std::int64_t f = m[r][col];
      for (std::size_t j = 0; j < n; ++j) m[r][j] = ((m[r][j] - f * m[row][j]) % p + p) % p;
    }
    row_of_col[col] = static_cast<int>(row);
    ++row;
  }
  std::vector<std::vector<std::int64_t>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (row_of_col[free] != -1) continue;
    std::vector<std::int64_t> v(n, 0);
    v[free] = 1;
    for (std::size_t col = 0; col < n; ++col) {
      if (row_of_col[col] == -1) continue;
      v[col] = (p - m[static_cast<std::size_t>(row_of_col[col])][free]) % p;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Monic irreducible factors of a monic square-free f over Z/p (Berlekamp).
inline std::vector<ZpPoly> berlekamp(const ZpPoly& f) {
  const std::int64_t p = f.p;
  const int n = f.degree();
  if (n <= 1) return {f};
  std::vector<std::vector<std::int64_t>> q(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
  const ZpPoly xp = powmod(ZpPoly(p, {0, 1}), static_cast<std::uint64_t>(p), f);
  ZpPoly cur(p, {1});
  for (int i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < cur.c.size(); ++j) q[static_cast<std::size_t>(i)][j] = cur.c[j];
    q[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = (q[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] + p - 1) % p;
    cur = divmod(mul(cur, xp), f).second;
  }
  const auto kernel = left_kernel(q, p);
  const std::size_t k = kernel.size();
  std::vector<ZpPoly> factors{f};
  if (k == 1) return factors;
  for (const auto& v : kernel) {
    ZpPoly vp(p, v);
    if (vp.degree() <= 0) continue;
    std::vector<ZpPoly> next;
    for (const auto& g : factors) {
      if (g.degree() <= 1) {
        next.push_back(g);
        continue;
      }
      ZpPoly rest = g;
      for (std::int64_t s = 0; s < p && rest.degree() > 1; ++s) {
        ZpPoly h = gcd(rest, sub(vp, ZpPoly(p, {s})));
        if (h.degree() > 0 && h.degree() < rest.degree()) {
          next.push_back(h);
          rest = monic(divmod(rest, h).first);
        }
      }
      next.push_back(rest);
    }
    factors = std::move(next);
    if (factors.size() == k) break;
  }
  return factors;
}

// Coefficient-wise reduction into (-m/2, m/2].
inline IntPoly symmetric_mod(const IntPoly& f, const Integer& m) {
  const Integer half = m / 2;
  std::vector<Integer> c(f.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    mpz_fdiv_r(c[i].get_mpz_t(), f.coeffs()[i].get_mpz_t(), m.get_mpz_t());
    if (c[i] > half) c[i] -= m;
  }
  return IntPoly(std::move(c));
}

inline IntPoly mod_nonneg(const IntPoly& f, const Integer& m) {
  std::vector<Integer> c(f.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) mpz_fdiv_r(c[i].get_mpz_t(), f.coeffs()[i].get_mpz_t(), m.get_mpz_t());
  return IntPoly(std::move(c));
}

/// Lifts f = g*h (mod p), g monic, to f = g*h (mod target). Returns (g, h).
inline std::pair<IntPoly, IntPoly> hensel_lift_pair(const IntPoly& f, const ZpPoly& g0, const ZpPoly& h0, const Integer& target) {
  const std::int64_t p = g0.p;
  const auto [s, t] = bezout(g0, h0);
  IntPoly g = g0.to_int();
  IntPoly h = h0.to_int();
  Integer m = p;
  while (m < target) {
    IntPoly diff = f - g * h;
    std::vector<Integer> ec(diff.coeffs().size());
    for (std::size_t i = 0; i < ec.size(); ++i) mpz_divexact(ec[i].get_mpz_t(), diff.coeffs()[i].get_mpz_t(), m.get_mpz_t());
    const ZpPoly e = ZpPoly::from(IntPoly(std::move(ec)), p);
    const auto [q, dg] = divmod(mul(t, e), g0);
    const ZpPoly dh = add(mul(s, e), mul(q, h0));
    const Integer next = m * p;
    g = mod_nonneg(g + dg.to_int() * m, next);
    h = mod_nonneg(h + dh.to_int() * m, next);
    m = next;
  }
  return {g, h};
}

/// hensel_lift_pair with residues in machine words; requires target <= 2^62.
inline std::pair<IntPoly, IntPoly> hensel_lift_pair_small(const IntPoly& f, const ZpPoly& g0, const ZpPoly& h0,
                                                          std::uint64_t target) {
  using u128 = unsigned __int128;
  const std::int64_t p = g0.p;
  const auto [s, t] = bezout(g0, h0);
  std::vector<std::uint64_t> g(g0.c.begin(), g0.c.end()), h(h0.c.begin(), h0.c.end());
  std::uint64_t m = static_cast<std::uint64_t>(p);
  while (m < target) {
    const std::uint64_t next = m * static_cast<std::uint64_t>(p);
    // e = (f - g h) / m mod p, computed from residues mod m p.
    std::vector<std::uint64_t> r(std::max(f.coeffs().size(), g.size() + h.size() - 1), 0);
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) r[i] = mpz_fdiv_ui(f.coeffs()[i].get_mpz_t(), next);
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = 0; j < h.size(); ++j) {
        const std::uint64_t prod = static_cast<std::uint64_t>(static_cast<u128>(g[i]) * h[j] % next);
        r[i + j] = r[i + j] >= prod ? r[i + j] - prod : r[i + j] + next - prod;
      }
    std::vector<std::int64_t> ec(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) ec[i] = static_cast<std::int64_t>(r[i] / m);
    const ZpPoly e(p, std::move(ec));
    const auto [q, dg] = divmod(mul(t, e), g0);
    const ZpPoly dh = add(mul(s, e), mul(q, h0));
    auto update = [&](std::vector<std::uint64_t>& x, const ZpPoly& dx) {
      if (x.size() < dx.c.size()) x.resize(dx.c.size(), 0);
      for (std::size_t i = 0; i < dx.c.size(); ++i) x[i] = (x[i] + static_cast<std::uint64_t>(dx.c[i]) * m) % next;
    };
    update(g, dg);
    update(h, dh);
    m = next;
  }
  auto to_int = [](const std::vector<std::uint64_t>& x) {
    std::vector<Integer> c;
    c.reserve(x.size());
    for (auto v : x) c.emplace_back(static_cast<unsigned long>(v));
    return IntPoly(std::move(c));
  };
  return {to_int(g), to_int(h)};
}

/// f = lc * prod(factors) (mod p) with monic factors; returns monic lifts mod target.
inline std::vector<IntPoly> hensel_lift(const IntPoly& f, const std::vector<ZpPoly>& factors, const Integer& target) {
  if (factors.size() == 1) {
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), f.lead().get_mpz_t(), target.get_mpz_t()) == 0)
      throw std::domain_error("hensel_lift: leading coefficient not invertible");
    return {mod_nonneg(f * inv, target)};
  }
  const std::int64_t p = factors.front().p;
  const std::size_t half = factors.size() / 2;
  ZpPoly g(p, {1});
  for (std::size_t i = 0; i < half; ++i) g = mul(g, factors[i]);
  ZpPoly h = ZpPoly::from(IntPoly::constant(f.lead()), p);
  for (std::size_t i = half; i < factors.size(); ++i) h = mul(h, factors[i]);
  const Integer word_limit = Integer(1) << 62;
  auto [gl, hl] = target <= word_limit ? hensel_lift_pair_small(f, g, h, target.get_ui())
                                       : hensel_lift_pair(f, g, h, target);
  std::vector<ZpPoly> left(factors.begin(), factors.begin() + static_cast<std::ptrdiff_t>(half));
  std::vector<ZpPoly> right(factors.begin() + static_cast<std::ptrdiff_t>(half), factors.end());
  auto out = hensel_lift(gl, left, target);
  auto rest = hensel_lift(hl, right, target);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

/// Irreducible factors of a square-free primitive f with positive leading
/// coefficient, f(0) != 0, deg f >= 1.
inline std::vector<IntPoly> zassenhaus(const IntPoly& f) {
  const int n = f.degree();
  if (n <= 1) return {f};
  // Smallest prime >= 3 not dividing lc(f) with f square-free mod p.
  std::int64_t p = 3;
  ZpPoly fp;
  for (;; p += 2) {
    bool prime = true;
    for (std::int64_t d = 3; d * d <= p; d += 2)
      if (p % d == 0) {
        prime = false;
        break;
      }
    if (!prime) continue;
    if (mpz_fdiv_ui(f.lead().get_mpz_t(), static_cast<unsigned long>(p)) == 0) continue;
    fp = ZpPoly::from(f, p);
    if (gcd(fp, derivative(fp)).degree() == 0) break;
  }
  const auto modp = berlekamp(monic(fp));
  if (modp.size() == 1) return {f};

  // Coefficients of any factor of lc*f are bounded by |lc| * 2^n * ||f||_2.
  Integer norm2 = 0;
  for (const auto& x : f.coeffs()) norm2 += x * x;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  root += 1;
  Integer bound = abs(f.lead()) * root;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(n));
  const Integer need = 2 * bound + 1;
  Integer modulus = p;
  while (modulus < need) modulus *= p;

  std::vector<IntPoly> lifted = hensel_lift(f, modp, modulus);
  std::vector<IntPoly> found;
  IntPoly rest = f;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool hit = false;
    std::vector<std::size_t> idx(s);
    std::iota(idx.begin(), idx.end(), 0);
    const std::size_t r = lifted.size();
    while (true) {
      IntPoly cand = IntPoly::constant(rest.lead());
      for (auto i : idx) cand = mod_nonneg(cand * lifted[i], modulus);
      cand = symmetric_mod(cand, modulus);
      if (!cand.is_zero()) {
        const IntPoly g = primitive_part(cand);
        if (auto q = exact_divide(rest, g)) {
          found.push_back(g.lead() < 0 ? -g : g);
          rest = std::move(*q);
          std::vector<IntPoly> remaining;
          for (std::size_t i = 0, j = 0; i < r; ++i) {
            if (j < idx.size() && idx[j] == i) {
              ++j;
              continue;
            }
            remaining.push_back(lifted[i]);
          }
          lifted = std::move(remaining);
          hit = true;
          break;
        }
      }
      // Next s-subset in lexicographic order.
      std::size_t k = s;
      while (k > 0 && idx[k - 1] == r - s + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!hit) ++s;
  }
  if (rest.degree() > 0) found.push_back(rest.lead() < 0 ? -rest : rest);
  return found;
}

}  // namespace detail

/// Yun's square-free decomposition of the primitive part of f, ascending by exponent.
inline std::vector<FactorPower> squarefree_decompose(const IntPoly& f) {
  if (f.degree() < 1) throw std::domain_error("squarefree_decompose of a constant polynomial");
  const IntPoly a = canonical_associate(f);
  const IntPoly da = derivative(a);
  const IntPoly b = poly_gcd(a, da);
  IntPoly c = *exact_divide(a, b);
  IntPoly d = *exact_divide(da, b) - derivative(c);
  std::vector<FactorPower> out;
  for (unsigned i = 1; c.degree() > 0; ++i) {
    const IntPoly g = poly_gcd(c, d);
    c = *exact_divide(c, g);
    d = *exact_divide(d, g) - derivative(c);
    if (g.degree() > 0) out.push_back({g, i});
  }
  return out;
}

namespace detail {

/// True when f mod p is square-free for a small prime p not dividing lc(f),
/// which implies f is square-free over Q. False means "unknown".
inline bool squarefree_by_reduction(const IntPoly& f) {
  for (std::int64_t p : {3, 5, 7, 11, 13}) {
    if (mpz_fdiv_ui(f.lead().get_mpz_t(), static_cast<unsigned long>(p)) == 0) continue;
    const ZpPoly fp = ZpPoly::from(f, p);
    const ZpPoly d = derivative(fp);
    if (!d.is_zero() && gcd(fp, d).degree() == 0) return true;
  }
  return false;
}

}  // namespace detail

/// Complete factorization over Q of the primitive part of f.
inline Factorization factor(const IntPoly& f) {
  if (f.is_zero()) throw std::domain_error("factor of zero polynomial");
  Factorization out;
  out.unit_sign = f.lead() < 0 ? -1 : 1;
  IntPoly g = canonical_associate(f);
  const std::size_t tv = g.t_valuation();
  if (tv > 0) {
    out.factors.push_back({IntPoly{Integer(0), Integer(1)}, static_cast<unsigned>(tv)});
    g = g.shifted_down(tv);
  }
  if (g.degree() >= 1) {
    const auto parts = detail::squarefree_by_reduction(g) ? std::vector<FactorPower>{{g, 1}} : squarefree_decompose(g);
    for (const auto& part : parts)
      for (auto& q : detail::zassenhaus(part.factor)) out.factors.push_back({std::move(q), part.exponent});
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const FactorPower& a, const FactorPower& b) { return poly_less(a.factor, b.factor); });
  return out;
}

}  // namespace alexinv
