// Higher Alexander polynomials of 8_18 from its PD code.

#include <iostream>

#include "alexinv/alexinv.hpp"

int main() {
  const auto pd = alexinv::parse_pd(
      "[[6,2,7,1],[8,3,9,4],[16,11,1,12],[2,14,3,13],[4,15,5,16],[10,6,11,5],[12,7,13,8],[14,10,15,9]]");
  const auto inv = alexinv::compute_invariants(pd);
  std::cout << alexinv::to_pretty(inv);
  std::cout << alexinv::to_json(inv) << '\n';

  // Beyond r every Delta_i is 1.
  std::cout << "Delta_5 = " << alexinv::to_pretty(inv.Delta(5)) << '\n';
}
