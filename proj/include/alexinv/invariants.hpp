#pragma once

// Invariant factors and higher Alexander polynomials of a knot from a square
// presentation matrix.
//
// For each irreducible factor phi of Delta = det(A), the phi-primary part of
// the module is Q[t]/(phi^d_1) + ... + Q[t]/(phi^d_r) with d_1 >= ... >= d_r.
// The partition (d_1, ..., d_r) is pinned down by three numbers:
//   e  = exponent of phi in Delta                       (sum of the d_i)
//   r  = dimension of the kernel of A over Q[t]/(phi)  (number of parts)
//   d1 = exponent of phi in the lcm of denominators of A^-1 (largest part)
// and e alone suffices when e = 1. The partition is unique for every e <= 6;
// the first collision is (7, 3, 3).

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "alexinv/exactla.hpp"
#include "alexinv/factorint.hpp"
#include "alexinv/knotdiag.hpp"
#include "alexinv/numberfield.hpp"
#include "alexinv/polyring.hpp"
#include "alexinv/smithoracle.hpp"

namespace alexinv {

using Partition = std::vector<unsigned>;

enum class Policy { fast, fast_with_fallback, oracle_only };
enum class Method { fast, fallback, oracle };

inline const char* to_string(Method m) {
  switch (m) {
    case Method::fast: return "fast";
    case Method::fallback: return "fallback";
    case Method::oracle: return "oracle";
  }
  return "?";
}

inline const char* to_string(Policy p) {
  switch (p) {
    case Policy::fast: return "fast";
    case Policy::fast_with_fallback: return "fast-with-fallback";
    case Policy::oracle_only: return "oracle-only";
  }
  return "?";
}

struct PhiEvidence {
  IntPoly phi;
  unsigned e_star = 0;
  unsigned r_star = 0;
  std::optional<unsigned> d1_star;
};

struct Ambiguous {
  std::vector<Partition> candidates;
};

struct PhiPartition {
  IntPoly phi;
  Partition parts;
};

struct AlexanderInvariants {
  std::vector<IntPoly> delta;           // delta_1, ..., delta_r; delta_{i+1} | delta_i
  std::vector<IntPoly> higher;          // Delta_1, ..., Delta_r
  std::vector<IntPoly> ambiguous_phis;  // unresolved primary parts (fast policy only)
  Method method = Method::fast;
  std::vector<PhiEvidence> evidence;    // empty for the oracle route
  std::vector<PhiPartition> partitions; // per irreducible factor of Delta

  std::size_t r() const noexcept { return delta.size(); }

  /// 1-based; 1 beyond r.
  IntPoly delta_at(std::size_t i) const { return i >= 1 && i <= delta.size() ? delta[i - 1] : IntPoly{Integer(1)}; }
  IntPoly Delta(std::size_t i) const { return i >= 1 && i <= higher.size() ? higher[i - 1] : IntPoly{Integer(1)}; }

  /// Same module: identical invariant factors.
  bool same_values(const AlexanderInvariants& o) const { return delta == o.delta && higher == o.higher; }
};

/// Weakly decreasing positive sequences of length r summing to e (first term d1 if given),
/// in lexicographically decreasing order.
inline std::vector<Partition> partitions_with(unsigned e, unsigned r, std::optional<unsigned> d1 = std::nullopt) {
  std::vector<Partition> out;
  if (r == 0 || e < r) return out;
  Partition cur;
  std::function<void(unsigned, unsigned, unsigned)> rec = [&](unsigned remaining, unsigned slots, unsigned cap) {
    if (slots == 0) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    if (remaining < slots) return;
    // Each remaining slot needs at least 1; the largest usable value is limited by cap.
    const unsigned hi = std::min(cap, remaining - (slots - 1));
    const unsigned lo = (remaining + slots - 1) / slots;  // ceil: later parts cannot exceed this one
    for (unsigned v = hi; v >= lo && v >= 1; --v) {
      cur.push_back(v);
      rec(remaining - v, slots - 1, v);
      cur.pop_back();
    }
  };
  if (d1) {
    if (*d1 == 0 || *d1 > e) return out;
    cur.push_back(*d1);
    rec(e - *d1, r - 1, *d1);
  } else {
    rec(e, r, e);
  }
  return out;
}

inline bool needs_d1(unsigned e, unsigned r) { return partitions_with(e, r).size() > 1; }

/// The partition determined by the evidence, or the surviving candidates.
/// Throws std::logic_error when no partition fits (an upstream bug).
inline std::variant<Partition, Ambiguous> resolve_partition(const PhiEvidence& ev) {
  if (ev.r_star < 1 || ev.r_star > ev.e_star)
    throw std::logic_error("inconsistent evidence: kernel dimension " + std::to_string(ev.r_star) + " for exponent " +
                           std::to_string(ev.e_star));
  if (ev.d1_star) {
    const unsigned lo = (ev.e_star + ev.r_star - 1) / ev.r_star;
    const unsigned hi = ev.e_star - ev.r_star + 1;
    if (*ev.d1_star < lo || *ev.d1_star > hi)
      throw std::logic_error("inconsistent evidence: largest part " + std::to_string(*ev.d1_star) + " outside [" +
                             std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  auto cands = partitions_with(ev.e_star, ev.r_star, ev.d1_star);
  if (cands.empty()) throw std::logic_error("inconsistent evidence: no partition fits");
  if (cands.size() == 1) return cands.front();
  return Ambiguous{std::move(cands)};
}

namespace detail {

/// Delta_i = prod_{j >= i} delta_j.
inline void fill_higher(AlexanderInvariants& inv) {
  inv.higher.assign(inv.delta.size(), IntPoly{Integer(1)});
  IntPoly acc{Integer(1)};
  for (std::size_t i = inv.delta.size(); i-- > 0;) {
    acc *= inv.delta[i];
    inv.higher[i] = normalize_delta(acc);
  }
}

/// delta_i = prod phi^{d_i(phi)}; the trivial module gives [1].
inline void assemble(AlexanderInvariants& inv) {
  std::size_t r = 0;
  for (const auto& pp : inv.partitions) r = std::max(r, pp.parts.size());
  inv.delta.assign(std::max<std::size_t>(r, 1), IntPoly{Integer(1)});
  for (const auto& pp : inv.partitions)
    for (std::size_t i = 0; i < pp.parts.size(); ++i) inv.delta[i] *= pow(pp.phi, pp.parts[i]);
  for (auto& d : inv.delta) d = normalize_delta(d);
  fill_higher(inv);
}

/// Per-phi partitions read off a list of invariant factors.
inline std::vector<PhiPartition> partitions_from(const std::vector<IntPoly>& deltas, const Factorization& fz) {
  std::vector<PhiPartition> out;
  for (const auto& fp : fz.factors) {
    PhiPartition pp{fp.factor, {}};
    for (const auto& d : deltas) {
      if (d.degree() < 1) continue;
      const unsigned k = multiplicity(d, fp.factor);
      if (k > 0) pp.parts.push_back(k);
    }
    out.push_back(std::move(pp));
  }
  return out;
}

}  // namespace detail

/// phi-evidence for one irreducible factor with exponent e in det(A).
/// Kernel dimension is computed only when e >= 2, d1 only when still needed.
inline PhiEvidence gather_evidence(const PolyMatrix& a, const IntPoly& phi, unsigned e) {
  PhiEvidence ev{phi, e, 1, std::nullopt};
  if (e < 2) return ev;
  const auto field = make_number_field(phi);
  ev.r_star = static_cast<unsigned>(nullity_over_field(reduce_matrix(a, field)));
  if (ev.r_star >= 1 && ev.r_star <= e && needs_d1(e, ev.r_star))
    ev.d1_star = inv_denominator_multiplicity(a, phi, e, e - ev.r_star + 1);
  return ev;
}

/// Invariant factors of the module presented by the square matrix `a`.
inline AlexanderInvariants compute_invariants(const PolyMatrix& a, Policy policy = Policy::fast_with_fallback) {
  if (!a.is_square()) throw std::invalid_argument("presentation matrix must be square");
  AlexanderInvariants inv;
  inv.method = policy == Policy::oracle_only ? Method::oracle : Method::fast;
  const IntPoly det = det_poly(a);
  if (det.is_zero()) throw std::domain_error("presentation matrix is singular over Q(t)");
  const IntPoly delta = normalize_delta(det);
  const Factorization fz = delta.degree() > 0 ? factor(delta) : Factorization{};

  if (policy == Policy::oracle_only) {
    inv.delta = smith_form(a).invariant_factors();
    if (inv.delta.empty()) inv.delta.push_back(IntPoly{Integer(1)});
    inv.partitions = detail::partitions_from(inv.delta, fz);
    detail::fill_higher(inv);
    return inv;
  }

  std::optional<std::vector<IntPoly>> oracle;
  for (const auto& fp : fz.factors) {
    PhiEvidence ev = gather_evidence(a, fp.factor, fp.exponent);
    auto res = resolve_partition(ev);
    inv.evidence.push_back(ev);
    if (auto* part = std::get_if<Partition>(&res)) {
      inv.partitions.push_back({fp.factor, *part});
      continue;
    }
    auto& amb = std::get<Ambiguous>(res);
    if (policy == Policy::fast) {
      inv.ambiguous_phis.push_back(fp.factor);
      inv.partitions.push_back({fp.factor, amb.candidates.front()});
      continue;
    }
    if (!oracle) oracle = smith_form(a).invariant_factors();
    Factorization one;
    one.factors.push_back(fp);
    inv.partitions.push_back(detail::partitions_from(*oracle, one).front());
    inv.method = Method::fallback;
  }
  detail::assemble(inv);
  return inv;
}

inline AlexanderInvariants compute_invariants(const AlexanderMatrix& a, Policy policy = Policy::fast_with_fallback) {
  return compute_invariants(a.matrix, policy);
}

inline AlexanderInvariants compute_invariants(const PDCode& pd, Policy policy = Policy::fast_with_fallback) {
  return compute_invariants(alexander_matrix(pd).matrix, policy);
}

}  // namespace alexinv
