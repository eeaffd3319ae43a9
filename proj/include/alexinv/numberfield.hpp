#pragma once

// Arithmetic in Q(w) = Q[t]/(phi) for an irreducible phi.

#include <memory>
#include <stdexcept>
#include <utility>

#include "alexinv/polyring.hpp"

namespace alexinv {

class NumberField {
 public:
  /// `modulus` must be irreducible over Q; this is not re-checked here.
  explicit NumberField(IntPoly modulus) : modulus_(std::move(modulus)) {
    if (modulus_.degree() < 1) throw std::invalid_argument("number field modulus must be non-constant");
    const RatPoly m = to_rat(modulus_);
    monic_ = m * Rational(1 / m.lead());
  }

  const IntPoly& modulus() const noexcept { return modulus_; }
  const RatPoly& monic_modulus() const noexcept { return monic_; }
  int degree() const noexcept { return modulus_.degree(); }

 private:
  IntPoly modulus_;
  RatPoly monic_;
};

using FieldRef = std::shared_ptr<const NumberField>;

inline FieldRef make_number_field(IntPoly modulus) { return std::make_shared<const NumberField>(std::move(modulus)); }

class NFElem {
 public:
  NFElem() = default;

  /// Reduces `f` modulo the field's defining polynomial.
  NFElem(FieldRef field, const RatPoly& f) : field_(std::move(field)) {
    if (!field_) throw std::invalid_argument("element without a field");
    rep_ = f.degree() >= field_->degree() ? f % field_->monic_modulus() : f;
  }

  const FieldRef& field() const noexcept { return field_; }
  const RatPoly& rep() const noexcept { return rep_; }
  bool is_zero() const noexcept { return rep_.is_zero(); }
  bool is_one() const { return rep_.is_one(); }

  NFElem& operator+=(const NFElem& o) {
    check_same(o);
    rep_ += o.rep_;
    return *this;
  }
  NFElem& operator-=(const NFElem& o) {
    check_same(o);
    rep_ -= o.rep_;
    return *this;
  }
  NFElem& operator*=(const NFElem& o) {
    check_same(o);
    if (rep_.is_zero()) return *this;
    if (o.rep_.is_zero()) {
      rep_ = RatPoly{};
      return *this;
    }
    RatPoly prod = rep_ * o.rep_;
    rep_ = prod.degree() >= field_->degree() ? prod % field_->monic_modulus() : std::move(prod);
    return *this;
  }

  friend NFElem operator+(NFElem a, const NFElem& b) { return a += b; }
  friend NFElem operator-(NFElem a, const NFElem& b) { return a -= b; }
  friend NFElem operator*(NFElem a, const NFElem& b) { return a *= b; }
  friend NFElem operator-(NFElem a) {
    a.rep_ = -a.rep_;
    return a;
  }

  /// Equal when in the same field with the same representative.
  friend bool operator==(const NFElem& a, const NFElem& b) {
    return same_field(a.field_, b.field_) && a.rep_ == b.rep_;
  }

  static bool same_field(const FieldRef& a, const FieldRef& b) {
    return a == b || (a && b && a->modulus() == b->modulus());
  }

 private:
  void check_same(const NFElem& o) const {
    if (!same_field(field_, o.field_)) throw std::invalid_argument("arithmetic across different number fields");
  }

  FieldRef field_;
  RatPoly rep_;
};

inline NFElem nf_reduce(const FieldRef& field, const RatPoly& f) { return NFElem(field, f); }
inline NFElem nf_reduce(const FieldRef& field, const IntPoly& f) { return NFElem(field, to_rat(f)); }
inline NFElem nf_zero(const FieldRef& field) { return NFElem(field, RatPoly{}); }
inline NFElem nf_one(const FieldRef& field) { return NFElem(field, RatPoly{Rational(1)}); }

inline NFElem nf_add(const NFElem& a, const NFElem& b) { return a + b; }
inline NFElem nf_mul(const NFElem& a, const NFElem& b) { return a * b; }
inline NFElem nf_neg(const NFElem& a) { return -a; }

/// Bezout cofactors over Q: u*a + v*b = g with g = gcd(a, b) monic.
struct RatBezout {
  RatPoly u, v, g;
};

inline RatBezout extended_gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly r0 = a, r1 = b;
  RatPoly u0{Rational(1)}, u1{};
  RatPoly v0{}, v1{Rational(1)};
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, std::move(r));
    u0 = std::exchange(u1, u0 - q * u1);
    v0 = std::exchange(v1, v0 - q * v1);
  }
  if (!r0.is_zero()) {
    const Rational l = 1 / r0.lead();
    r0 *= l;
    u0 *= l;
    v0 *= l;
  }
  return {u0, v0, r0};
}

/// Multiplicative inverse via the extended Euclidean algorithm on (rep, modulus).
inline NFElem nf_inv(const NFElem& a) {
  if (a.is_zero()) throw std::domain_error("inverse of zero in a number field");
  const auto bz = extended_gcd(a.rep(), a.field()->monic_modulus());
  if (bz.g.degree() != 0) throw std::domain_error("number field modulus is reducible");
  return NFElem(a.field(), bz.u);
}

}  // namespace alexinv
