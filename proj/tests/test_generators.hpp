#pragma once

// Seeded random-instance generators shared by the unit and acceptance suites.

#include "affsel/lp.hpp"
#include "affsel/random.hpp"

namespace test_gen {

inline affsel::LinearProgram random_lp(affsel::SeededRng& rng) {
  using namespace affsel;
  LinearProgram lp;
  lp.num_vars = static_cast<std::size_t>(rng.uniform_int(1, 4));
  const long m = rng.uniform_int(1, 8);
  for (long i = 0; i < m; ++i) {
    Constraint c;
    for (std::size_t j = 0; j < lp.num_vars; ++j) {
      c.coeffs.push_back(Rational(rng.uniform_int(-4, 4)));
    }
    const long rel = rng.uniform_int(0, 5);
    c.rel = rel == 0 ? Relation::Equal
                     : (rel % 2 == 1 ? Relation::LessEq : Relation::GreaterEq);
    c.rhs = Rational(rng.uniform_int(-6, 6));
    lp.constraints.push_back(std::move(c));
  }
  const long sense = rng.uniform_int(0, 2);
  lp.sense = sense == 0   ? Sense::FeasibilityOnly
             : sense == 1 ? Sense::Minimize
                          : Sense::Maximize;
  if (lp.sense != Sense::FeasibilityOnly) {
    for (std::size_t j = 0; j < lp.num_vars; ++j) {
      lp.objective.push_back(Rational(rng.uniform_int(-4, 4)));
    }
  }
  return lp;
}

}  // namespace test_gen
