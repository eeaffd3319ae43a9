// Smith normal form of a small matrix over Q[t], with transforms.

#include <iostream>

#include "alexinv/alexinv.hpp"

int main() {
  using alexinv::IntPoly;
  using alexinv::Integer;
  const IntPoly phi{Integer(1), Integer(-1), Integer(1)};   // t^2 - t + 1
  const IntPoly psi{Integer(1), Integer(-3), Integer(1)};   // t^2 - 3t + 1
  alexinv::PolyMatrix m(2, 2, IntPoly{});
  m(0, 0) = phi;
  m(1, 1) = phi * psi;
  m(0, 1) = psi;

  const auto res = alexinv::smith_form(m, true);
  for (const auto& d : res.invariant_factors()) std::cout << alexinv::to_pretty(d) << '\n';

  const auto check = alexinv::multiply(alexinv::multiply(*res.left, alexinv::to_rat(m), alexinv::RatPoly{}),
                                       *res.right, alexinv::RatPoly{});
  std::cout << "left * M * right is diagonal: " << std::boolalpha
            << (check(0, 1).is_zero() && check(1, 0).is_zero()) << '\n';
}
