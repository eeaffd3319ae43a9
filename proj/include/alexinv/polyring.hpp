#pragma once

// Exact univariate polynomials over Z and Q.
//
// Coefficients are stored in ascending degree order and the zero polynomial
// is the empty sequence. Every constructor and arithmetic result is trimmed,
// so two polynomials are equal iff their coefficient vectors are equal.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace alexinv {

using Integer = mpz_class;
using Rational = mpq_class;

template <class Coeff>
class Poly {
 public:
  using coeff_type = Coeff;

  Poly() = default;
  explicit Poly(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<Coeff> coeffs) : c_(coeffs) { trim(); }

  static Poly constant(const Coeff& value) { return Poly(std::vector<Coeff>{value}); }

  static Poly monomial(const Coeff& value, std::size_t power) {
    std::vector<Coeff> c(power + 1, Coeff(0));
    c[power] = value;
    return Poly(std::move(c));
  }

  const std::vector<Coeff>& coeffs() const noexcept { return c_; }

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

  Coeff operator[](std::size_t k) const { return k < c_.size() ? c_[k] : Coeff(0); }
  const Coeff& lead() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  Coeff eval(const Coeff& x) const {
    Coeff acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc *= x;
      acc += *it;
    }
    return acc;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Coeff(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Coeff(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Coeff& s) {
    if (s == 0) {
      c_.clear();
      return *this;
    }
    for (auto& x : c_) x *= s;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend Poly operator*(Poly a, const Coeff& s) { return a *= s; }
  friend Poly operator*(const Coeff& s, Poly a) { return a *= s; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> r(a.c_.size() + b.c_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Drops the lowest `k` coefficients, i.e. divides by t^k (assumes they vanish).
  Poly shifted_down(std::size_t k) const {
    if (k >= c_.size()) return {};
    return Poly(std::vector<Coeff>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
  }

  /// Number of trailing factors of t.
  std::size_t t_valuation() const {
    std::size_t k = 0;
    while (k < c_.size() && c_[k] == 0) ++k;
    return k;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Coeff> c_;
};

using IntPoly = Poly<Integer>;
using RatPoly = Poly<Rational>;

template <class Coeff>
Poly<Coeff> pow(Poly<Coeff> base, unsigned exponent) {
  Poly<Coeff> result = Poly<Coeff>::constant(Coeff(1));
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

template <class Coeff>
Poly<Coeff> derivative(const Poly<Coeff>& f) {
  if (f.degree() < 1) return {};
  std::vector<Coeff> d(f.coeffs().size() - 1);
  for (std::size_t k = 1; k < f.coeffs().size(); ++k) d[k - 1] = f.coeffs()[k] * static_cast<unsigned long>(k);
  return Poly<Coeff>(std::move(d));
}

/// Coefficient-reversed polynomial t^deg f(1/t) (for f with f(0) != 0 this is the reciprocal).
template <class Coeff>
Poly<Coeff> reversed(const Poly<Coeff>& f) {
  std::vector<Coeff> c(f.coeffs().rbegin(), f.coeffs().rend());
  return Poly<Coeff>(std::move(c));
}

inline RatPoly to_rat(const IntPoly& f) {
  std::vector<Rational> c;
  c.reserve(f.coeffs().size());
  for (const auto& x : f.coeffs()) c.emplace_back(x);
  return RatPoly(std::move(c));
}

/// Quotient and remainder over Q. Throws on a zero divisor.
inline std::pair<RatPoly, RatPoly> divmod(const RatPoly& f, const RatPoly& g) {
  if (g.is_zero()) throw std::domain_error("polynomial division by zero");
  if (f.degree() < g.degree()) return {RatPoly{}, f};
  std::vector<Rational> r = f.coeffs();
  const int dg = g.degree();
  std::vector<Rational> q(static_cast<std::size_t>(f.degree() - dg + 1), Rational(0));
  const Rational& lg = g.lead();
  for (int k = f.degree(); k >= dg; --k) {
    const Rational coef = r[static_cast<std::size_t>(k)] / lg;
    if (coef == 0) continue;
    q[static_cast<std::size_t>(k - dg)] = coef;
    for (int i = 0; i <= dg; ++i) r[static_cast<std::size_t>(k - dg + i)] -= coef * g.coeffs()[static_cast<std::size_t>(i)];
  }
  r.resize(static_cast<std::size_t>(dg));
  return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

inline RatPoly operator%(const RatPoly& f, const RatPoly& g) { return divmod(f, g).second; }

/// Pseudo-division: lead(g)^(deg f - deg g + 1) * f = q*g + r, all over Z.
inline std::pair<IntPoly, IntPoly> pseudo_divmod(const IntPoly& f, const IntPoly& g) {
  if (g.is_zero()) throw std::domain_error("polynomial division by zero");
  if (f.degree() < g.degree()) return {IntPoly{}, f};
  const int dg = g.degree();
  std::vector<Integer> r = f.coeffs();
  std::vector<Integer> q(static_cast<std::size_t>(f.degree() - dg + 1), Integer(0));
  const Integer& lg = g.lead();
  for (int k = f.degree(); k >= dg; --k) {
    const Integer coef = r[static_cast<std::size_t>(k)];
    for (auto& x : q) x *= lg;
    q[static_cast<std::size_t>(k - dg)] = coef;
    for (int i = 0; i < k; ++i) r[static_cast<std::size_t>(i)] *= lg;
    r[static_cast<std::size_t>(k)] = 0;
    for (int i = 0; i < dg; ++i) r[static_cast<std::size_t>(k - dg + i)] -= coef * g.coeffs()[static_cast<std::size_t>(i)];
  }
  r.resize(static_cast<std::size_t>(dg));
  return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

/// f / g over Z when g divides f in Z[t]; nullopt otherwise.
inline std::optional<IntPoly> exact_divide(const IntPoly& f, const IntPoly& g) {
  if (g.is_zero()) throw std::domain_error("polynomial division by zero");
  if (f.is_zero()) return IntPoly{};
  if (f.degree() < g.degree()) return std::nullopt;
  const int dg = g.degree();
  std::vector<Integer> r = f.coeffs();
  std::vector<Integer> q(static_cast<std::size_t>(f.degree() - dg + 1), Integer(0));
  const Integer& lg = g.lead();
  for (int k = f.degree(); k >= dg; --k) {
    Integer& top = r[static_cast<std::size_t>(k)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lg.get_mpz_t())) return std::nullopt;
    Integer coef;
    mpz_divexact(coef.get_mpz_t(), top.get_mpz_t(), lg.get_mpz_t());
    q[static_cast<std::size_t>(k - dg)] = coef;
    for (int i = 0; i <= dg; ++i) r[static_cast<std::size_t>(k - dg + i)] -= coef * g.coeffs()[static_cast<std::size_t>(i)];
  }
  for (int i = 0; i < dg; ++i)
    if (r[static_cast<std::size_t>(i)] != 0) return std::nullopt;
  return IntPoly(std::move(q));
}

/// Positive gcd of all coefficients.
inline Integer content(const IntPoly& f) {
  Integer g = 0;
  for (const auto& x : f.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

struct ContentPrimitive {
  Integer content;
  IntPoly primitive;
};

/// content > 0 and content * primitive == f.
inline ContentPrimitive content_primitive(const IntPoly& f) {
  if (f.is_zero()) throw std::domain_error("content of zero polynomial");
  Integer c = content(f);
  if (c == 1) return {c, f};
  std::vector<Integer> p(f.coeffs().size());
  for (std::size_t i = 0; i < p.size(); ++i) mpz_divexact(p[i].get_mpz_t(), f.coeffs()[i].get_mpz_t(), c.get_mpz_t());
  return {c, IntPoly(std::move(p))};
}

inline IntPoly primitive_part(const IntPoly& f) { return content_primitive(f).primitive; }

/// Primitive part with a positive leading coefficient.
inline IntPoly canonical_associate(const IntPoly& f) {
  IntPoly p = primitive_part(f);
  return p.lead() < 0 ? -p : p;
}

/// Scales a rational polynomial to a primitive integer one (same sign as f).
inline IntPoly clear_denominators(const RatPoly& f) {
  if (f.is_zero()) return {};
  Integer l = 1;
  for (const auto& x : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> c(f.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    Integer num = f.coeffs()[i].get_num() * l;
    mpz_divexact(c[i].get_mpz_t(), num.get_mpz_t(), f.coeffs()[i].get_den_mpz_t());
  }
  return primitive_part(IntPoly(std::move(c)));
}

/// Generator of the ideal (f) in Q[t, 1/t] that is primitive in Z[t] with
/// positive constant term.
inline IntPoly normalize_delta(const IntPoly& f) {
  if (f.is_zero()) throw std::domain_error("normalize_delta of zero polynomial");
  IntPoly g = primitive_part(f.shifted_down(f.t_valuation()));
  return g.coeffs().front() < 0 ? -g : g;
}

inline IntPoly normalize_delta(const RatPoly& f) {
  if (f.is_zero()) throw std::domain_error("normalize_delta of zero polynomial");
  return normalize_delta(clear_denominators(f));
}

/// Primitive gcd with positive leading coefficient (primitive PRS).
inline IntPoly poly_gcd(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() && g.is_zero()) throw std::domain_error("gcd of two zero polynomials");
  if (f.is_zero()) return canonical_associate(g);
  if (g.is_zero()) return canonical_associate(f);
  IntPoly a = primitive_part(f);
  IntPoly b = primitive_part(g);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    if (b.degree() == 0) return IntPoly{Integer(1)};
    IntPoly r = pseudo_divmod(a, b).second;
    a = std::move(b);
    b = r.is_zero() ? IntPoly{} : primitive_part(r);
  }
  return canonical_associate(a);
}

/// Largest k with phi^k | f over Q.
inline unsigned multiplicity(const IntPoly& f, const IntPoly& phi) {
  if (f.is_zero()) throw std::domain_error("multiplicity in zero polynomial");
  if (phi.degree() < 1) throw std::domain_error("multiplicity of a constant factor");
  const IntPoly p = primitive_part(phi);
  IntPoly g = primitive_part(f);
  unsigned k = 0;
  while (g.degree() >= p.degree()) {
    auto q = exact_divide(g, p);
    if (!q) break;
    g = std::move(*q);
    ++k;
  }
  return k;
}

/// True iff the coefficient sequence is a palindrome.
inline bool is_symmetric(const IntPoly& f) {
  if (f.is_zero()) throw std::domain_error("symmetry of zero polynomial");
  const auto& c = f.coeffs();
  return std::equal(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(c.size() / 2), c.rbegin());
}

/// Total order used for deterministic factor lists: degree, then coefficients
/// compared from the constant term upward.
inline bool poly_less(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(), b.coeffs().end());
}

/// Human form in descending degree, e.g. "5*t^2 - 9*t + 5".
template <class Coeff>
std::string to_pretty(const Poly<Coeff>& f, const char* var = "t") {
  if (f.is_zero()) return "0";
  std::string out;
  for (int k = f.degree(); k >= 0; --k) {
    const Coeff& c = f.coeffs()[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const bool neg = c < 0;
    Coeff mag = neg ? Coeff(-c) : c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    const bool unit = mag == 1;
    if (k == 0 || !unit) {
      out += mag.get_str();
      if (k > 0) out += "*";
    }
    if (k >= 1) out += var;
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

/// Compact JSON array of ascending coefficients, e.g. "[1,-1,1]".
inline std::string to_json(const IntPoly& f) {
  std::string out = "[";
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i) out += ",";
    out += f.coeffs()[i].get_str();
  }
  return out + "]";
}

}  // namespace alexinv
