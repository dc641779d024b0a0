// Builds Qu_f for (Z/4; 2, 1), prints its homotopy groups and the gamma_f outcome.

#include <iostream>

#include "catlab/suites.hpp"

int main() {
  using namespace catlab;
  RingPtr R = make_zmod(4);
  for (auto [p, q] : admissible_pairs(*R)) std::cout << "(" << R->label(p) << ", " << R->label(q) << ") ";
  std::cout << "\n";

  PairContext X = build_context(make_pair_pq(R, 2, 1));
  const CatGroup& Q = *X.qu.cat;
  std::cout << Q.name() << ": " << Q.num_objects() << " objects, " << Q.num_morphisms() << " morphisms\n";
  std::cout << "pi0 = " << describe(*pi0(Q).group) << ", pi1 = " << describe(*pi1(Q).group) << "\n";
  std::cout << validate_catgroup(Q).summary() << "\n";

  GammaResult g = gamma_check(X);
  for (const auto& c : g.checks.items) std::cout << to_string(c.status) << "  " << c.name << "  " << c.detail << "\n";
  return g.checks.ok() ? 0 : 1;
}
