#pragma once

// Exact linear algebra over Z[t] and Q(w).

#include <algorithm>
#include <cstdint>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "alexinv/matrix.hpp"
#include "alexinv/numberfield.hpp"
#include "alexinv/polyring.hpp"

namespace alexinv {

using PolyMatrix = Matrix<IntPoly>;
using FieldMatrix = Matrix<NFElem>;

/// Fraction-free (Bareiss) determinant of an integer matrix. Consumes `m`.
inline Integer bareiss_det(Matrix<Integer> m) {
  const std::size_t n = m.rows();
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      m.swap_rows(k, piv);
      sign = -sign;
    }
    const Integer& pivot = m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = pivot * m(i, j) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = pivot;
  }
  Integer d = m(n - 1, n - 1);
  return sign < 0 ? Integer(-d) : d;
}

namespace detail {

/// 0, 1, -1, 2, -2, ...
inline long interpolation_point(std::size_t i) {
  const long h = static_cast<long>((i + 1) / 2);
  return (i % 2 == 1) ? h : -h;
}

/// Newton interpolation through (xs[i], ys[i]); result must have integer coefficients.
inline IntPoly interpolate(const std::vector<long>& xs, const std::vector<Integer>& ys) {
  const std::size_t n = xs.size();
  std::vector<Rational> dd(ys.begin(), ys.end());
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n; i-- > level;) dd[i] = (dd[i] - dd[i - 1]) / Rational(xs[i] - xs[i - level]);
  // Horner on the Newton form.
  RatPoly acc;
  for (std::size_t k = n; k-- > 0;) {
    acc = acc * RatPoly{Rational(-xs[k]), Rational(1)};
    acc += RatPoly{dd[k]};
  }
  std::vector<Integer> c(acc.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (acc.coeffs()[i].get_den() != 1) throw std::logic_error("interpolated determinant is not integral");
    c[i] = acc.coeffs()[i].get_num();
  }
  return IntPoly(std::move(c));
}

/// Arithmetic modulo the Mersenne prime 2^61 - 1.
struct Mod61 {
  static constexpr std::uint64_t p = (std::uint64_t{1} << 61) - 1;

  static std::uint64_t reduce(unsigned __int128 x) {
    std::uint64_t r = static_cast<std::uint64_t>(x & p) + static_cast<std::uint64_t>(x >> 61);
    r = (r & p) + (r >> 61);
    return r >= p ? r - p : r;
  }
  static std::uint64_t mul(std::uint64_t a, std::uint64_t b) { return reduce(static_cast<unsigned __int128>(a) * b); }
  static std::uint64_t add(std::uint64_t a, std::uint64_t b) { return a + b >= p ? a + b - p : a + b; }
  static std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + p - b; }
  static std::uint64_t from(long v) {
    return v >= 0 ? static_cast<std::uint64_t>(v) % p : sub(0, static_cast<std::uint64_t>(-(v + 1)) % p + 1);
  }
  /// Inverse of a nonzero residue by the extended Euclidean algorithm.
  static std::uint64_t inv(std::uint64_t a) {
    std::int64_t r0 = static_cast<std::int64_t>(p), r1 = static_cast<std::int64_t>(a), s0 = 0, s1 = 1;
    while (r1 != 0) {
      const std::int64_t q = r0 / r1;
      std::int64_t t = r0 - q * r1;
      r0 = r1;
      r1 = t;
      t = s0 - q * s1;
      s0 = s1;
      s1 = t;
    }
    return s0 < 0 ? static_cast<std::uint64_t>(s0 + static_cast<std::int64_t>(p)) : static_cast<std::uint64_t>(s0);
  }
};

/// det of an n x n matrix over Z/(2^61 - 1), destroying `m`.
inline std::uint64_t det_mod61(std::vector<std::uint64_t>& m, std::size_t n) {
  using F = Mod61;
  std::uint64_t det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m[piv * n + k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(m[k * n + j], m[piv * n + j]);
      det = F::sub(0, det);
    }
    det = F::mul(det, m[k * n + k]);
    const std::uint64_t inv = F::inv(m[k * n + k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i * n + k] == 0) continue;
      const std::uint64_t f = F::mul(m[i * n + k], inv);
      for (std::size_t j = k + 1; j < n; ++j) m[i * n + j] = F::sub(m[i * n + j], F::mul(f, m[k * n + j]));
    }
  }
  return det;
}

/// Determinant through evaluation and Newton interpolation modulo 2^61 - 1.
/// Exact when every coefficient of the determinant is below 2^60 in absolute value,
/// which holds whenever prod_i sum_j ||m_ij||_1 < 2^60; nullopt otherwise.
inline std::optional<IntPoly> det_poly_modular(const Matrix<IntPoly>& m, std::size_t degree_bound) {
  using F = Mod61;
  const std::size_t n = m.rows();
  const Integer limit = Integer(1) << 60;
  Integer bound = 1;
  std::vector<std::vector<std::uint64_t>> entries(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    Integer row = 0;
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& c : m(i, j).coeffs()) {
        row += abs(c);
        if (!c.fits_slong_p()) return std::nullopt;
        entries[i * n + j].push_back(F::from(c.get_si()));
      }
    }
    bound *= row;
    if (bound >= limit) return std::nullopt;
  }

  const std::size_t points = degree_bound + 1;
  std::vector<std::uint64_t> xs(points), dd(points), work(n * n);
  for (std::size_t k = 0; k < points; ++k) {
    xs[k] = F::from(interpolation_point(k));
    for (std::size_t e = 0; e < n * n; ++e) {
      std::uint64_t acc = 0;
      for (auto c = entries[e].rbegin(); c != entries[e].rend(); ++c) acc = F::add(F::mul(acc, xs[k]), *c);
      work[e] = acc;
    }
    dd[k] = det_mod61(work, n);
  }
  for (std::size_t level = 1; level < points; ++level)
    for (std::size_t i = points; i-- > level;)
      dd[i] = F::mul(F::sub(dd[i], dd[i - 1]), F::inv(F::sub(xs[i], xs[i - level])));
  // Horner on the Newton form, coefficients ascending.
  std::vector<std::uint64_t> acc(points, 0);
  for (std::size_t k = points; k-- > 0;) {
    for (std::size_t i = points - 1; i > 0; --i) acc[i] = F::sub(acc[i - 1], F::mul(xs[k], acc[i]));
    acc[0] = F::sub(dd[k], F::mul(xs[k], acc[0]));
  }
  std::vector<Integer> c(points);
  for (std::size_t i = 0; i < points; ++i) {
    const std::uint64_t v = acc[i];
    c[i] = v > F::p / 2 ? Integer(-static_cast<long>(F::p - v)) : Integer(static_cast<unsigned long>(v));
  }
  return IntPoly(std::move(c));
}

}  // namespace detail

/// Sum over rows of the largest entry degree; nullopt if some row is identically zero.
inline std::optional<std::size_t> determinant_degree_bound(const PolyMatrix& m) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    int best = -1;
    for (std::size_t j = 0; j < m.cols(); ++j) best = std::max(best, m(i, j).degree());
    if (best < 0) return std::nullopt;
    total += static_cast<std::size_t>(best);
  }
  return total;
}

/// Exact determinant over Z[t]: evaluation at D+1 integers (D = sum of row degree
/// bounds), Bareiss elimination of each integer matrix, and interpolation.
inline IntPoly det_poly_bareiss(const PolyMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return IntPoly{Integer(1)};
  const auto bound = determinant_degree_bound(m);
  if (!bound) return {};
  std::vector<long> xs(*bound + 1);
  std::vector<Integer> ys(*bound + 1);
  Matrix<Integer> at(n, n, Integer(0));
  for (std::size_t p = 0; p < xs.size(); ++p) {
    xs[p] = detail::interpolation_point(p);
    const Integer x = xs[p];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) at(i, j) = m(i, j).eval(x);
    ys[p] = bareiss_det(at);
  }
  return detail::interpolate(xs, ys);
}

/// Exact determinant over Z[t]. Small matrices go through the same evaluation and
/// interpolation scheme modulo 2^61 - 1 when a coefficient bound makes that exact;
/// everything else uses det_poly_bareiss.
inline IntPoly det_poly(const PolyMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  if (m.rows() == 0) return IntPoly{Integer(1)};
  const auto bound = determinant_degree_bound(m);
  if (!bound) return {};
  if (auto d = detail::det_poly_modular(m, *bound)) return std::move(*d);
  return det_poly_bareiss(m);
}

/// Image of a Z[t] matrix in Q(w).
inline FieldMatrix reduce_matrix(const PolyMatrix& m, const FieldRef& field) {
  return m.map([&](const IntPoly& f) { return nf_reduce(field, f); });
}

/// Rank by Gaussian elimination; pivot is the first nonzero entry in column order.
inline std::size_t rank_over_field(FieldMatrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && m(piv, col).is_zero()) ++piv;
    if (piv == rows) continue;
    m.swap_rows(piv, rank);
    const NFElem inv = nf_inv(m(rank, col));
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (m(i, col).is_zero()) continue;
      const NFElem factor = m(i, col) * inv;
      for (std::size_t j = col; j < cols; ++j) {
        if (m(rank, j).is_zero()) continue;
        m(i, j) -= factor * m(rank, j);
      }
    }
    ++rank;
  }
  return rank;
}

/// Dimension of the kernel of a square matrix over its field.
inline std::size_t nullity_over_field(const FieldMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("nullity of a non-square matrix");
  return m.cols() - rank_over_field(m);
}

/// Exponent of phi in the lcm of the denominators of M^{-1}, computed as
/// e_star minus the smallest phi-multiplicity among the cofactors of M.
/// Cofactors are scanned row-major; once the running value reaches
/// `stop_at` the scan stops and that value is returned.
inline unsigned inv_denominator_multiplicity(const PolyMatrix& m, const IntPoly& phi, unsigned e_star,
                                             std::optional<unsigned> stop_at = std::nullopt) {
  if (!m.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 0;
  if (det_poly(m).is_zero()) throw std::domain_error("singular matrix has no inverse");
  std::optional<unsigned> min_mult;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // Entry (i, j) of the inverse is C_{ji} / det.
      const IntPoly cof = det_poly(m.minor(j, i));
      if (cof.is_zero()) continue;
      const unsigned k = multiplicity(cof, phi);
      if (!min_mult || k < *min_mult) min_mult = k;
      const unsigned d1 = *min_mult >= e_star ? 0U : e_star - *min_mult;
      if (stop_at && d1 >= *stop_at) return d1;
    }
  return *min_mult >= e_star ? 0U : e_star - *min_mult;
}

}  // namespace alexinv
