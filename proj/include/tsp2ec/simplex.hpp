#pragma once

#include <vector>

#include "tsp2ec/rational.hpp"

namespace tsp2ec::detail {

enum class Rel { le, ge, eq };

/// min objective . x  subject to  coeffs x (rel) rhs,  x >= 0.
struct LinearProgram {
  int num_vars = 0;
  std::vector<std::vector<Rat>> coeffs;
  std::vector<Rel> rels;
  std::vector<Rat> rhs;
  std::vector<Rat> objective;

  void add_row(std::vector<Rat> row, Rel rel, Rat b);
};

struct SimplexOutcome {
  bool feasible = true;
  Rat value;
  std::vector<Rat> x;
};

// Two-phase primal simplex over exact rationals with Bland's anti-cycling
// rule: guaranteed termination, exact equality tests, no tolerances.
// Throws Errc::internal on an unbounded phase-2 ray (callers only pose
// bounded problems).
SimplexOutcome solve_simplex(const LinearProgram& lp);

}  // namespace tsp2ec::detail
