#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tsp2ec/instance.hpp"

namespace tsp2ec {

struct LpBounds {
  int lp_max_n = 16;
  int half_integral_max_n = 7;
};

/**
 * Exact optimum of the cut-based relaxation. With degree_constrained the
 * feasible set is { x : x(delta(v)) = 2, x(delta(S)) >= 2, 0 <= x <= 1 };
 * without it, { x >= 0 : x(delta(S)) >= 2 }. At return, separation finds no
 * violated cut among all 2^(n-1)-1 of them.
 */
struct LpResult {
  Rat value;
  EdgeVector solution;
  std::vector<Cut> active_cuts;  // cut rows installed by the solve
  bool degree_constrained = false;
};

/// Feasible dual of the degree-constrained LP restricted to a cut support:
/// for every edge, pi_u + pi_v + sum of y over crossing support cuts <= c_e.
struct DualResult {
  std::vector<Rat> degree_multipliers;               // pi_v, free sign
  std::vector<std::pair<Cut, Rat>> cut_multipliers;  // y_S >= 0
  Rat value;
  Rat primal_value;
  bool attains_primal = false;  // false == SupportInsufficient

  /// Dual slack of an edge constraint; the edge is dual-tight iff zero.
  Rat edge_slack(const MetricInstance& instance, const EdgeId& e) const;
};

struct ParsimoniousResult {
  bool equal = false;
  Rat degree_constrained_value;
  Rat degree_free_value;
};

// Cutting-plane solve: start from the degree rows and x <= 1 bounds (or the
// single-vertex cuts when degree_constrained is false), then repeat
// solve / separate / add cut until no cut is violated. For n <= 12 a full
// cut enumeration certifies optimality at the end; beyond that the exact
// global minimum cut does. Bland pivoting makes the returned vertex
// deterministic. warm_cuts pre-installs cut rows.
LpResult solve_lp(const MetricInstance& instance, bool degree_constrained,
                  const LpBounds& bounds = {}, const std::vector<Cut>* warm_cuts = nullptr);

/// Global minimum cut of the x-weighted support graph (exact Stoer-Wagner);
/// returns a cut with x(delta(S)) < 2 if one exists.
std::optional<Cut> separate(const MetricInstance& instance, const EdgeVector& x);

/// Most-violated cut by full enumeration of all 2^(n-1)-1 canonical cuts.
std::optional<Cut> enumerate_violated_cut(const MetricInstance& instance, const EdgeVector& x);

/// Maximizes 2*sum(pi) + 2*sum(y) over the restricted dual. Without a
/// support list the support defaults to the primal solve's active cuts,
/// which attains the primal value exactly (strong duality).
DualResult solve_dual(const MetricInstance& instance,
                      const std::optional<std::vector<Cut>>& support = std::nullopt,
                      const LpBounds& bounds = {});

/// Degree-constrained vs degree-free LP values; expected equal on metrics.
ParsimoniousResult parsimonious_check(const MetricInstance& instance, const LpBounds& bounds = {});

/// Exact membership x_e in {0, 1/2, 1} per coordinate.
bool is_half_integral(const EdgeVector& x);

// Decides whether any half-integral point attains the LP value (the
// inclusive reading: any point on the optimal face, not necessarily a
// vertex). Scales by 2 and searches y in {0,1,2}^E with y(delta(v)) = 4 and
// y(delta(S)) >= 4 by pruned depth-first search; a found witness is returned
// as y/2 and costs exactly the LP value.
std::optional<EdgeVector> decide_half_integral_optimum(const MetricInstance& instance,
                                                       const LpBounds& bounds = {});

}  // namespace tsp2ec
