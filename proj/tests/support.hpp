#pragma once

// Shared helpers for the test binaries: literals, fixture loading, and
// independent reference computations that do not reuse library algorithms.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "alexinv/alexinv.hpp"

namespace testsupport {

using alexinv::IntPoly;
using alexinv::Integer;
using alexinv::PolyMatrix;

/// Ascending coefficients.
inline IntPoly P(std::initializer_list<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return IntPoly(std::move(v));
}

inline const IntPoly& phi1() {  // t^2 - t + 1
  static const IntPoly p = P({1, -1, 1});
  return p;
}
inline const IntPoly& phi2() {  // t^2 - 3t + 1
  static const IntPoly p = P({1, -3, 1});
  return p;
}

inline std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

inline std::vector<alexinv::KnotRow> load(const std::string& name) { return alexinv::read_knots(fixture(name)); }

inline std::map<std::string, std::string> load_map(const std::string& name) {
  std::map<std::string, std::string> out;
  for (auto& r : load(name)) out[r.name] = r.pd;
  return out;
}

inline alexinv::PDCode pd_of(const std::string& file, const std::string& knot) {
  return alexinv::parse_pd(load_map(file).at(knot));
}

/// Number of crossings in a name like "12n_508" or "8_18".
inline int crossings_in_name(const std::string& name) { return std::stoi(name); }

/// Determinant by Laplace expansion along the first row.
inline IntPoly cofactor_det(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return P({1});
  if (n == 1) return m(0, 0);
  IntPoly total;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    IntPoly term = m(0, j) * cofactor_det(m.minor(0, j));
    if (j % 2 == 1) term = -term;
    total += term;
  }
  return total;
}

/// Irreducibility over Q for primitive f of degree <= 5 by exhaustive search
/// for rational roots and integer quadratic factors.
inline bool brute_irreducible(const IntPoly& f) {
  const int n = f.degree();
  if (n <= 1) return n == 1;
  auto divisors = [](Integer v) {
    std::vector<long> out;
    v = abs(v);
    for (long d = 1; d <= v; ++d)
      if (v % d == 0) out.push_back(d);
    return out;
  };
  const auto lead_div = divisors(f.lead());
  const auto const_div = divisors(f[0]);
  // Linear factors a t + b with a | lead, b | const.
  for (long a : lead_div)
    for (long b : const_div)
      for (long s : {1, -1})
        if (alexinv::exact_divide(f, P({s * b, a}))) return false;
  if (n < 4) return true;
  // Quadratic factors a t^2 + b t + c; |b| is bounded by the coefficient bound of a factor.
  Integer norm = 0;
  for (const auto& c : f.coeffs()) norm += abs(c);
  // A quadratic factor's middle coefficient is at most 2 ||f||_1 in absolute value.
  const long bmax = 2 * norm.get_si();
  for (long a : lead_div)
    for (long c : const_div)
      for (long s : {1, -1})
        for (long b = -bmax; b <= bmax; ++b)
          if (alexinv::exact_divide(f, P({s * c, b, a}))) return false;
  return true;
}

/// Random matrix with small integer-polynomial entries of degree <= deg.
inline PolyMatrix random_poly_matrix(std::mt19937_64& rng, std::size_t n, int deg, long range) {
  std::uniform_int_distribution<long> coef(-range, range);
  PolyMatrix m(n, n, IntPoly{});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Integer> c;
      for (int k = 0; k <= deg; ++k) c.emplace_back(coef(rng));
      m(i, j) = IntPoly(std::move(c));
    }
  return m;
}

/// Product of random elementary matrices I + c t^k E_ij (i != j); determinant 1.
inline PolyMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps) {
  PolyMatrix u(n, n, IntPoly{});
  for (std::size_t i = 0; i < n; ++i) u(i, i) = P({1});
  if (n < 2) return u;
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<long> coef(-2, 2);
  std::uniform_int_distribution<int> power(0, 1);
  for (int s = 0; s < steps; ++s) {
    std::size_t i = idx(rng), j = idx(rng);
    if (i == j) j = (i + 1) % n;
    const IntPoly c = IntPoly::monomial(Integer(coef(rng)), static_cast<std::size_t>(power(rng)));
    // row_i += c * row_j
    for (std::size_t k = 0; k < n; ++k) u(i, k) += c * u(j, k);
  }
  return u;
}

inline PolyMatrix mul(const PolyMatrix& a, const PolyMatrix& b) { return alexinv::multiply(a, b, IntPoly{}); }

/// Polynomial from the JSON coefficient text used in fixture reference files.
inline IntPoly from_json_text(const std::string& s) { return alexinv::poly_from_json(alexinv::parse_exact_json(s)); }

/// Reference values (name -> {Delta_1, Delta_2}) taken from KnotInfo.
inline std::map<std::string, std::pair<IntPoly, IntPoly>> knotinfo_reference() {
  std::ifstream in(fixture("knotinfo_reference.csv"));
  auto rows = alexinv::read_csv(in);
  std::map<std::string, std::pair<IntPoly, IntPoly>> out;
  for (std::size_t i = 1; i < rows.size(); ++i) out[rows[i][0]] = {from_json_text(rows[i][1]), from_json_text(rows[i][2])};
  return out;
}

}  // namespace testsupport
