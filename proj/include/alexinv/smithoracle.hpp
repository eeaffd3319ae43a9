#pragma once

// Smith normal form over Q[t]. Slow and always correct: this is the fallback
// for the fast invariant-factor path and the ground truth in tests.
//
// Entries are kept in Z[t]. Eliminations use pseudo-division, which scales
// the target row (or column) by a nonzero integer, a unit over Q[t]; every
// touched row/column is then divided by its integer content.

#include <cstddef>
#include <optional>
#include <vector>

#include "alexinv/exactla.hpp"
#include "alexinv/polyring.hpp"

namespace alexinv {

using RatMatrix = Matrix<RatPoly>;

struct SmithResult {
  /// Diagonal of left * M * right exactly as produced, d_1 | d_2 | ... .
  std::vector<IntPoly> raw_diagonal;
  /// normalize_delta of each raw entry (zero entries stay zero), same order.
  std::vector<IntPoly> diagonal;
  std::optional<RatMatrix> left;
  std::optional<RatMatrix> right;

  /// Non-unit diagonal entries with the divisibility-largest first.
  std::vector<IntPoly> invariant_factors() const {
    std::vector<IntPoly> out;
    for (auto it = diagonal.rbegin(); it != diagonal.rend(); ++it)
      if (it->is_zero() || it->degree() > 0) out.push_back(*it);
    return out;
  }
};

inline RatMatrix identity_rat(std::size_t n) {
  RatMatrix m(n, n, RatPoly{});
  for (std::size_t i = 0; i < n; ++i) m(i, i) = RatPoly{Rational(1)};
  return m;
}

namespace detail {

class SmithReducer {
 public:
  SmithReducer(const PolyMatrix& m, bool transforms) : a_(m), n_(m.rows()) {
    if (transforms) {
      u_ = identity_rat(n_);
      v_ = identity_rat(n_);
    }
  }

  SmithResult run() {
    for (std::size_t k = 0; k < n_; ++k) {
      if (!reduce_at(k)) break;
    }
    SmithResult out;
    for (std::size_t k = 0; k < n_; ++k) {
      out.raw_diagonal.push_back(a_(k, k));
      out.diagonal.push_back(a_(k, k).is_zero() ? IntPoly{} : normalize_delta(a_(k, k)));
    }
    out.left = std::move(u_);
    out.right = std::move(v_);
    return out;
  }

 private:
  // Returns false when the remaining block is zero.
  bool reduce_at(std::size_t k) {
    while (true) {
      std::size_t pi = n_, pj = n_;
      for (std::size_t i = k; i < n_; ++i)
        for (std::size_t j = k; j < n_; ++j) {
          const IntPoly& e = a_(i, j);
          if (e.is_zero()) continue;
          if (pi == n_ || e.degree() < a_(pi, pj).degree()) {
            pi = i;
            pj = j;
          }
        }
      if (pi == n_) return false;
      swap_rows(k, pi);
      swap_cols(k, pj);

      bool residue = false;
      for (std::size_t i = k + 1; i < n_; ++i) {
        if (a_(i, k).is_zero()) continue;
        auto [q, r] = pseudo_divmod(a_(i, k), a_(k, k));
        const Integer c = scale_factor(a_(i, k), a_(k, k));
        row_combine(i, c, q, k);
        clear_row_content(i);
        residue = residue || !r.is_zero();
      }
      for (std::size_t j = k + 1; j < n_; ++j) {
        if (a_(k, j).is_zero()) continue;
        auto [q, r] = pseudo_divmod(a_(k, j), a_(k, k));
        const Integer c = scale_factor(a_(k, j), a_(k, k));
        col_combine(j, c, q, k);
        clear_col_content(j);
        residue = residue || !r.is_zero();
      }
      if (residue) continue;

      // Pivot must divide the whole remaining block for a divisibility chain.
      bool fixed = false;
      for (std::size_t i = k + 1; i < n_ && !fixed; ++i)
        for (std::size_t j = k + 1; j < n_; ++j) {
          if (a_(i, j).is_zero()) continue;
          if (!pseudo_divmod(a_(i, j), a_(k, k)).second.is_zero()) {
            row_add(k, i);
            fixed = true;
            break;
          }
        }
      if (!fixed) return true;
    }
  }

  static Integer scale_factor(const IntPoly& f, const IntPoly& g) {
    Integer c;
    mpz_pow_ui(c.get_mpz_t(), g.lead().get_mpz_t(), static_cast<unsigned long>(f.degree() - g.degree() + 1));
    return c;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    a_.swap_rows(a, b);
    if (u_) u_->swap_rows(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    a_.swap_cols(a, b);
    if (v_) v_->swap_cols(a, b);
  }

  // row_i <- c * row_i - q * row_k
  void row_combine(std::size_t i, const Integer& c, const IntPoly& q, std::size_t k) {
    for (std::size_t j = 0; j < n_; ++j) a_(i, j) = a_(i, j) * c - q * a_(k, j);
    if (u_) {
      const Rational cr(c);
      const RatPoly qr = to_rat(q);
      for (std::size_t j = 0; j < n_; ++j) (*u_)(i, j) = (*u_)(i, j) * cr - qr * (*u_)(k, j);
    }
  }
  // col_j <- c * col_j - q * col_k
  void col_combine(std::size_t j, const Integer& c, const IntPoly& q, std::size_t k) {
    for (std::size_t i = 0; i < n_; ++i) a_(i, j) = a_(i, j) * c - q * a_(i, k);
    if (v_) {
      const Rational cr(c);
      const RatPoly qr = to_rat(q);
      for (std::size_t i = 0; i < n_; ++i) (*v_)(i, j) = (*v_)(i, j) * cr - qr * (*v_)(i, k);
    }
  }
  void row_add(std::size_t dst, std::size_t src) {
    for (std::size_t j = 0; j < n_; ++j) a_(dst, j) += a_(src, j);
    if (u_)
      for (std::size_t j = 0; j < n_; ++j) (*u_)(dst, j) += (*u_)(src, j);
  }

  void clear_row_content(std::size_t i) {
    Integer g = 0;
    for (std::size_t j = 0; j < n_; ++j) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), content(a_(i, j)).get_mpz_t());
    if (g <= 1) return;
    for (std::size_t j = 0; j < n_; ++j) a_(i, j) = divide_by(a_(i, j), g);
    if (u_) {
      const Rational inv = Rational(1) / Rational(g);
      for (std::size_t j = 0; j < n_; ++j) (*u_)(i, j) *= inv;
    }
  }
  void clear_col_content(std::size_t j) {
    Integer g = 0;
    for (std::size_t i = 0; i < n_; ++i) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), content(a_(i, j)).get_mpz_t());
    if (g <= 1) return;
    for (std::size_t i = 0; i < n_; ++i) a_(i, j) = divide_by(a_(i, j), g);
    if (v_) {
      const Rational inv = Rational(1) / Rational(g);
      for (std::size_t i = 0; i < n_; ++i) (*v_)(i, j) *= inv;
    }
  }
  static IntPoly divide_by(const IntPoly& f, const Integer& g) {
    std::vector<Integer> c(f.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) mpz_divexact(c[i].get_mpz_t(), f.coeffs()[i].get_mpz_t(), g.get_mpz_t());
    return IntPoly(std::move(c));
  }

  PolyMatrix a_;
  std::size_t n_;
  std::optional<RatMatrix> u_;
  std::optional<RatMatrix> v_;
};

}  // namespace detail

inline SmithResult smith_form(const PolyMatrix& m, bool want_transforms = false) {
  if (!m.is_square()) throw std::invalid_argument("smith_form expects a square matrix");
  return detail::SmithReducer(m, want_transforms).run();
}

inline RatMatrix to_rat(const PolyMatrix& m) {
  return m.map([](const IntPoly& f) { return alexinv::to_rat(f); });
}

/// Determinant over Q[t]: each row is scaled into Z[t], then det_poly.
inline RatPoly det_rat(const RatMatrix& m) {
  Rational scale = 1;
  PolyMatrix im(m.rows(), m.cols(), IntPoly{});
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j)
      for (const auto& c : m(i, j).coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    scale /= Rational(l);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::vector<Integer> c;
      for (const auto& x : m(i, j).coeffs()) c.emplace_back(Rational(x * Rational(l)).get_num());
      im(i, j) = IntPoly(std::move(c));
    }
  }
  return to_rat(det_poly(im)) * scale;
}

}  // namespace alexinv
