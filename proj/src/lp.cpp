#include "tsp2ec/lp.hpp"

#include <algorithm>
#include <set>

#include "tsp2ec/simplex.hpp"

namespace tsp2ec {

namespace {

detail::LinearProgram build_primal(const MetricInstance& instance, bool degree_constrained,
                                   const std::vector<Cut>& cuts) {
  int n = instance.n();
  int m = edge_count(n);
  detail::LinearProgram lp;
  lp.num_vars = m;
  lp.objective = instance.costs();
  if (degree_constrained) {
    for (int v = 0; v < n; ++v) {
      std::vector<Rat> row(m, Rat(0));
      for (int u = 0; u < n; ++u)
        if (u != v) row[edge_index(n, EdgeId(u, v))] = 1;
      lp.add_row(std::move(row), detail::Rel::eq, Rat(2));
    }
    for (int k = 0; k < m; ++k) {
      std::vector<Rat> row(m, Rat(0));
      row[k] = 1;
      lp.add_row(std::move(row), detail::Rel::le, Rat(1));
    }
  }
  for (const Cut& cut : cuts) {
    std::vector<Rat> row(m, Rat(0));
    for (int k = 0; k < m; ++k)
      if (cut.crosses(edge_at(n, k))) row[k] = 1;
    lp.add_row(std::move(row), detail::Rel::ge, Rat(2));
  }
  return lp;
}

}  // namespace

std::optional<Cut> separate(const MetricInstance& instance, const EdgeVector& x) {
  int n = instance.n();
  // Stoer-Wagner over exact rationals. Supernode i aggregates merged
  // vertices; weight matrix shrinks by repeated contraction.
  std::vector<std::vector<Rat>> w(n, std::vector<Rat>(n, Rat(0)));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) w[u][v] = w[v][u] = x.at(u, v);
  std::vector<std::vector<int>> groups(n);
  for (int v = 0; v < n; ++v) groups[v] = {v};
  std::vector<int> active(n);
  for (int v = 0; v < n; ++v) active[v] = v;

  std::optional<Rat> best_value;
  std::vector<int> best_side;

  while (active.size() > 1) {
    // Maximum adjacency order.
    std::vector<int> order;
    std::vector<Rat> weight_to_set(active.size(), Rat(0));
    std::vector<bool> added(active.size(), false);
    for (std::size_t step = 0; step < active.size(); ++step) {
      int pick = -1;
      for (std::size_t i = 0; i < active.size(); ++i) {
        if (added[i]) continue;
        if (pick < 0 || weight_to_set[i] > weight_to_set[pick]) pick = static_cast<int>(i);
      }
      added[pick] = true;
      order.push_back(pick);
      for (std::size_t i = 0; i < active.size(); ++i)
        if (!added[i]) weight_to_set[i] += w[active[pick]][active[i]];
    }
    int t_idx = order.back();
    int s_idx = order[order.size() - 2];
    Rat cut_of_phase(0);
    for (std::size_t i = 0; i < active.size(); ++i)
      if (static_cast<int>(i) != t_idx) cut_of_phase += w[active[t_idx]][active[i]];
    if (!best_value || cut_of_phase < *best_value) {
      best_value = cut_of_phase;
      best_side = groups[active[t_idx]];
    }
    // Merge t into s.
    int s = active[s_idx], t = active[t_idx];
    for (int v : groups[t]) groups[s].push_back(v);
    for (int idx : active) {
      if (idx == s || idx == t) continue;
      w[s][idx] += w[t][idx];
      w[idx][s] = w[s][idx];
    }
    active.erase(active.begin() + t_idx);
  }
  if (best_value && *best_value < 2) return Cut(instance.n(), best_side);
  return std::nullopt;
}

std::optional<Cut> enumerate_violated_cut(const MetricInstance& instance, const EdgeVector& x) {
  int n = instance.n();
  if (n > 20) fail(Errc::too_large, "full cut enumeration is limited to n <= 20");
  int m = edge_count(n);
  std::vector<std::uint64_t> edge_masks(m);
  for (int k = 0; k < m; ++k) {
    EdgeId e = edge_at(n, k);
    edge_masks[k] = (std::uint64_t(1) << e.u) | (std::uint64_t(1) << e.v);
  }
  std::optional<Rat> best;
  std::uint64_t best_mask = 0;
  // Canonical cuts are exactly the nonempty subsets avoiding vertex 0.
  std::uint64_t limit = std::uint64_t(1) << (n - 1);
  for (std::uint64_t bits = 1; bits < limit; ++bits) {
    std::uint64_t mask = bits << 1;
    Rat value(0);
    for (int k = 0; k < m; ++k) {
      std::uint64_t overlap = edge_masks[k] & mask;
      if (overlap != 0 && overlap != edge_masks[k]) value += x[k];
    }
    if (!best || value < *best) {
      best = value;
      best_mask = mask;
    }
  }
  if (best && *best < 2) {
    std::vector<int> side;
    for (int v = 0; v < n; ++v)
      if ((best_mask >> v) & 1u) side.push_back(v);
    return Cut(n, side);
  }
  return std::nullopt;
}

LpResult solve_lp(const MetricInstance& instance, bool degree_constrained, const LpBounds& bounds,
                  const std::vector<Cut>* warm_cuts) {
  int n = instance.n();
  if (n > bounds.lp_max_n)
    fail(Errc::too_large,
         "n=" + std::to_string(n) + " exceeds LP bound " + std::to_string(bounds.lp_max_n));

  std::vector<Cut> cuts;
  std::set<std::uint64_t> installed;
  auto install = [&](const Cut& cut) {
    if (!installed.insert(cut.mask()).second)
      fail(Errc::internal, "separation returned an installed cut " + cut.str());
    cuts.push_back(cut);
  };
  if (!degree_constrained) {
    for (int v = 0; v < n; ++v) install(Cut(n, {v}));
  }
  if (warm_cuts) {
    for (const Cut& cut : *warm_cuts)
      if (!installed.count(cut.mask())) install(cut);
  }

  detail::SimplexOutcome outcome;
  for (long iteration = 0;; ++iteration) {
    if (iteration > (1L << n))
      fail(Errc::internal, "cutting-plane loop failed to converge");
    outcome = detail::solve_simplex(build_primal(instance, degree_constrained, cuts));
    if (!outcome.feasible)
      fail(Errc::infeasible, "relaxation infeasible; metric instances always admit a tour");
    EdgeVector x(n);
    x.values = outcome.x;
    std::optional<Cut> violated = separate(instance, x);
    if (!violated && n <= 12) violated = enumerate_violated_cut(instance, x);
    if (!violated) {
      LpResult result;
      result.value = outcome.value;
      result.solution = std::move(x);
      result.active_cuts = std::move(cuts);
      result.degree_constrained = degree_constrained;
      return result;
    }
    install(*violated);
  }
}

Rat DualResult::edge_slack(const MetricInstance& instance, const EdgeId& e) const {
  Rat lhs = degree_multipliers[e.u] + degree_multipliers[e.v];
  for (const auto& [cut, y] : cut_multipliers)
    if (cut.crosses(e)) lhs += y;
  return instance.cost(e) - lhs;
}

DualResult solve_dual(const MetricInstance& instance, const std::optional<std::vector<Cut>>& support,
                      const LpBounds& bounds) {
  LpResult primal = solve_lp(instance, true, bounds);
  std::vector<Cut> cuts = support ? *support : primal.active_cuts;

  int n = instance.n();
  int m = edge_count(n);
  int nc = static_cast<int>(cuts.size());
  // Variables: pi+ (n), pi- (n), y (nc). One <= row per edge.
  detail::LinearProgram lp;
  lp.num_vars = 2 * n + nc;
  lp.objective.assign(lp.num_vars, Rat(0));
  for (int v = 0; v < n; ++v) {
    lp.objective[v] = -2;
    lp.objective[n + v] = 2;
  }
  for (int c = 0; c < nc; ++c) lp.objective[2 * n + c] = -2;
  for (int k = 0; k < m; ++k) {
    EdgeId e = edge_at(n, k);
    std::vector<Rat> row(lp.num_vars, Rat(0));
    row[e.u] = row[e.v] = 1;
    row[n + e.u] = row[n + e.v] = -1;
    for (int c = 0; c < nc; ++c)
      if (cuts[c].crosses(e)) row[2 * n + c] = 1;
    lp.add_row(std::move(row), detail::Rel::le, instance.costs()[k]);
  }
  detail::SimplexOutcome outcome = detail::solve_simplex(lp);
  if (!outcome.feasible) fail(Errc::internal, "restricted dual cannot be infeasible (y = pi = 0 works)");

  DualResult result;
  result.degree_multipliers.resize(n);
  for (int v = 0; v < n; ++v) result.degree_multipliers[v] = outcome.x[v] - outcome.x[n + v];
  for (int c = 0; c < nc; ++c) result.cut_multipliers.emplace_back(cuts[c], outcome.x[2 * n + c]);
  result.value = -outcome.value;
  result.primal_value = primal.value;
  result.attains_primal = (result.value == primal.value);
  return result;
}

ParsimoniousResult parsimonious_check(const MetricInstance& instance, const LpBounds& bounds) {
  ParsimoniousResult result;
  result.degree_constrained_value = solve_lp(instance, true, bounds).value;
  result.degree_free_value = solve_lp(instance, false, bounds).value;
  result.equal = (result.degree_constrained_value == result.degree_free_value);
  return result;
}

bool is_half_integral(const EdgeVector& x) {
  static const Rat half(1, 2);
  for (const Rat& value : x.values)
    if (value != 0 && value != half && value != 1) return false;
  return true;
}

namespace {

// Pruned search for y in {0,1,2}^E with y(delta(v)) = 4 for all v,
// y(delta(S)) >= 4 for all cuts, and scaled cost exactly equal to twice the
// LP value. Works on integers after clearing denominators.
struct HalfIntegralSearch {
  int n;
  int m;
  std::vector<Int> cost;             // scaled edge costs
  Int target;                        // scaled value of 2 * LP optimum
  std::vector<int> y;
  std::vector<int> degree;
  std::vector<std::vector<Int>> cheapest_from;
  std::vector<std::vector<int>> capacity_from;    // 2 * remaining incident edges
  std::vector<std::vector<int>> finalized_after;  // vertices finalized once edge k is set
  std::vector<std::vector<int>> cut_edge_lists;   // canonical cut -> edge indices
  std::optional<std::vector<int>> witness;

  HalfIntegralSearch(const MetricInstance& instance, std::vector<Int> scaled, Int target2)
      : n(instance.n()), m(edge_count(instance.n())), cost(std::move(scaled)), target(std::move(target2)) {
    y.assign(m, 0);
    degree.assign(n, 0);
    cheapest_from.assign(m + 1, std::vector<Int>(n, Int(-1)));
    capacity_from.assign(m + 1, std::vector<int>(n, 0));
    for (int k = m - 1; k >= 0; --k) {
      cheapest_from[k] = cheapest_from[k + 1];
      capacity_from[k] = capacity_from[k + 1];
      EdgeId e = edge_at(n, k);
      for (int v : {e.u, e.v}) {
        if (cheapest_from[k][v] < 0 || cost[k] < cheapest_from[k][v]) cheapest_from[k][v] = cost[k];
        capacity_from[k][v] += 2;
      }
    }
    finalized_after.assign(m, {});
    for (int v = 0; v < n; ++v) {
      int last = (v == n - 1) ? edge_index(n, EdgeId(n - 2, n - 1)) : edge_index(n, EdgeId(v, n - 1));
      finalized_after[last].push_back(v);
    }
    std::uint64_t limit = std::uint64_t(1) << (n - 1);
    for (std::uint64_t bits = 1; bits < limit; ++bits) {
      std::uint64_t mask = bits << 1;
      std::vector<int> list;
      for (int k = 0; k < m; ++k) {
        EdgeId e = edge_at(n, k);
        bool cu = (mask >> e.u) & 1u, cv = (mask >> e.v) & 1u;
        if (cu != cv) list.push_back(k);
      }
      cut_edge_lists.push_back(std::move(list));
    }
  }

  bool prune(int k, const Int& partial) const {
    Int deficit(0);
    for (int v = 0; v < n; ++v) {
      if (degree[v] > 4) return true;
      int needed = 4 - degree[v];
      if (needed == 0) continue;
      if (capacity_from[k][v] < needed) return true;
      deficit += cheapest_from[k][v] * needed;
    }
    return partial * 2 + deficit > target * 2;
  }

  bool feasible_cuts() const {
    for (const auto& list : cut_edge_lists) {
      int total = 0;
      for (int k : list) total += y[k];
      if (total < 4) return false;
    }
    return true;
  }

  void run(int k, const Int& partial) {
    if (witness) return;
    if (prune(k, partial)) return;
    if (k == m) {
      if (partial == target && feasible_cuts()) witness = y;
      return;
    }
    EdgeId e = edge_at(n, k);
    int added = 0;
    for (int count = 0; count <= 2 && !witness; ++count) {
      if (count > 0) {
        degree[e.u] += 1;
        degree[e.v] += 1;
        ++added;
      }
      y[k] = count;
      bool degrees_ok = true;
      for (int v : finalized_after[k])
        if (degree[v] != 4) degrees_ok = false;
      if (degrees_ok) run(k + 1, count == 0 ? partial : Int(partial + cost[k] * count));
    }
    y[k] = 0;
    degree[e.u] -= added;
    degree[e.v] -= added;
  }
};

}  // namespace

std::optional<EdgeVector> decide_half_integral_optimum(const MetricInstance& instance,
                                                       const LpBounds& bounds) {
  int n = instance.n();
  if (n > bounds.half_integral_max_n)
    fail(Errc::too_large, "n=" + std::to_string(n) + " exceeds half-integral decision bound " +
                              std::to_string(bounds.half_integral_max_n));
  LpResult lp = solve_lp(instance, true, bounds);

  // Common denominator for exact integer arithmetic in the search.
  Int scale(1);
  for (const Rat& c : instance.costs()) {
    Int den = c.get_den(), g;
    mpz_gcd(g.get_mpz_t(), scale.get_mpz_t(), den.get_mpz_t());
    scale = scale / g * den;
  }
  std::vector<Int> scaled;
  for (const Rat& c : instance.costs()) scaled.push_back(Int(c.get_num() * (scale / c.get_den())));
  Rat target2 = lp.value * 2 * scale;
  if (target2.get_den() != 1) return std::nullopt;  // no half-integral point can attain

  HalfIntegralSearch search(instance, std::move(scaled), Int(target2.get_num()));
  search.run(0, Int(0));
  if (!search.witness) return std::nullopt;
  EdgeVector x(n);
  for (int k = 0; k < edge_count(n); ++k) x[k] = Rat(search.witness->at(k), 2);
  for (Rat& value : x.values) value.canonicalize();
  return x;
}

}  // namespace tsp2ec
