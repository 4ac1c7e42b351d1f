#include "tsp2ec/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace tsp2ec {

HamiltonianCycle HamiltonianCycle::from_order(std::vector<int> order) {
  int n = static_cast<int>(order.size());
  if (n < 3) fail(Errc::bad_dimension, "tour needs >= 3 vertices");
  std::vector<bool> seen(n, false);
  for (int v : order) {
    if (v < 0 || v >= n || seen[v]) fail(Errc::bad_dimension, "order is not a permutation of 0..n-1");
    seen[v] = true;
  }
  // Rotate so the order starts at 0.
  auto zero = std::find(order.begin(), order.end(), 0);
  std::rotate(order.begin(), zero, order.end());
  if (order[1] > order[n - 1]) std::reverse(order.begin() + 1, order.end());

  HamiltonianCycle cycle;
  cycle.order_ = std::move(order);
  cycle.edge_flags_.assign(edge_count(n), false);
  for (int i = 0; i < n; ++i) {
    EdgeId e(cycle.order_[i], cycle.order_[(i + 1) % n]);
    cycle.edge_flags_[edge_index(n, e)] = true;
  }
  return cycle;
}

std::vector<EdgeId> HamiltonianCycle::edges() const {
  std::vector<EdgeId> result;
  int n = this->n();
  for (int i = 0; i < n; ++i) result.emplace_back(order_[i], order_[(i + 1) % n]);
  std::sort(result.begin(), result.end());
  return result;
}

bool HamiltonianCycle::has_edge(const EdgeId& e) const {
  return edge_flags_[edge_index(n(), e)];
}

Rat HamiltonianCycle::cost(const MetricInstance& instance) const {
  if (instance.n() != n()) fail(Errc::dimension_mismatch, "tour does not match instance");
  Rat total(0);
  for (int i = 0; i < n(); ++i) total += instance.cost(EdgeId(order_[i], order_[(i + 1) % n()]));
  return total;
}

EdgeVector HamiltonianCycle::indicator() const {
  EdgeVector x(n());
  for (int k = 0; k < edge_count(n()); ++k)
    if (edge_flags_[k]) x[k] = 1;
  return x;
}

Rat Multisubgraph::cost(const MetricInstance& instance) const {
  Rat total(0);
  for (int k = 0; k < edge_count(n); ++k)
    if (multiplicity[k] != 0) total += instance.costs()[k] * multiplicity[k];
  return total;
}

int Multisubgraph::degree(int v) const {
  int d = 0;
  for (int u = 0; u < n; ++u)
    if (u != v) d += multiplicity[edge_index(n, EdgeId(u, v))];
  return d;
}

EdgeVector Multisubgraph::to_edge_vector() const {
  EdgeVector x(n);
  for (int k = 0; k < edge_count(n); ++k) x[k] = multiplicity[k];
  return x;
}

namespace {

bool connected_on_support(int n, const std::vector<int>& mult, int skip_edge) {
  std::vector<std::vector<int>> adj(n);
  for (int k = 0; k < edge_count(n); ++k) {
    if (k == skip_edge || mult[k] == 0) continue;
    EdgeId e = edge_at(n, k);
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<bool> visited(n, false);
  std::vector<int> stack{0};
  visited[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!visited[w]) {
        visited[w] = true;
        ++count;
        stack.push_back(w);
      }
  }
  return count == n;
}

// Costs scaled to a common integer denominator, so the search loops run on
// integers instead of rationals.
struct ScaledCosts {
  Int scale;
  std::vector<Int> cost;

  explicit ScaledCosts(const MetricInstance& instance) : scale(1) {
    for (const Rat& c : instance.costs()) {
      Int den = c.get_den();
      Int g;
      mpz_gcd(g.get_mpz_t(), scale.get_mpz_t(), den.get_mpz_t());
      scale = scale / g * den;
    }
    cost.reserve(instance.costs().size());
    for (const Rat& c : instance.costs()) cost.push_back(Int(c.get_num() * (scale / c.get_den())));
  }

  Rat to_rational(const Int& scaled) const {
    Rat r(scaled, scale);
    r.canonicalize();
    return r;
  }
};

struct TspSearch {
  int n;
  const ScaledCosts& sc;
  Int min_edge_cost;
  Int incumbent;
  bool have_incumbent = false;
  std::vector<int> path;
  std::vector<bool> used;
  std::vector<std::vector<int>> best_orders;

  TspSearch(int n_, const ScaledCosts& sc_) : n(n_), sc(sc_), used(n_, false) {
    min_edge_cost = *std::min_element(sc.cost.begin(), sc.cost.end());
    path.reserve(n);
    path.push_back(0);
    used[0] = true;
  }

  void run(Int partial) {
    int len = static_cast<int>(path.size());
    if (have_incumbent) {
      Int lb = partial + min_edge_cost * (n - len + 1);
      if (lb > incumbent) return;
    }
    if (len == n) {
      if (path[1] > path[n - 1]) return;  // reflection duplicate
      Int total = partial + sc.cost[edge_index(n, EdgeId(path[n - 1], 0))];
      if (!have_incumbent || total < incumbent) {
        incumbent = total;
        have_incumbent = true;
        best_orders.clear();
        best_orders.push_back(path);
      } else if (total == incumbent) {
        best_orders.push_back(path);
      }
      return;
    }
    for (int v = 1; v < n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      path.push_back(v);
      run(partial + sc.cost[edge_index(n, EdgeId(path[len - 1], v))]);
      path.pop_back();
      used[v] = false;
    }
  }
};

struct EcmSearch {
  int n;
  int m;
  const ScaledCosts& sc;
  Int incumbent;                 // always an achievable value (doubled MST / tour)
  std::vector<int> mult;
  std::vector<int> degree;
  std::vector<std::vector<Int>> cheapest_from;  // [edge index][vertex]: cheapest
                                                // remaining incident cost, -1 if none
  std::vector<Multisubgraph> ties;

  EcmSearch(int n_, const ScaledCosts& sc_, Int upper) : n(n_), m(edge_count(n_)), sc(sc_) {
    incumbent = std::move(upper);
    mult.assign(m, 0);
    degree.assign(n, 0);
    cheapest_from.assign(m + 1, std::vector<Int>(n, Int(-1)));
    for (int k = m - 1; k >= 0; --k) {
      cheapest_from[k] = cheapest_from[k + 1];
      EdgeId e = edge_at(n, k);
      for (int v : {e.u, e.v}) {
        if (cheapest_from[k][v] < 0 || sc.cost[k] < cheapest_from[k][v])
          cheapest_from[k][v] = sc.cost[k];
      }
    }
  }

  // Admissible bound: every missing degree unit at v costs at least half of
  // v's cheapest remaining incident edge.
  bool prune(int k, const Int& partial) {
    Int deficit_cost(0);
    for (int v = 0; v < n; ++v) {
      int needed = 2 - degree[v];
      if (needed <= 0) continue;
      if (cheapest_from[k][v] < 0) return true;  // degree can no longer reach 2
      deficit_cost += cheapest_from[k][v] * needed;
    }
    return partial * 2 + deficit_cost > incumbent * 2;
  }

  void run(int k, const Int& partial) {
    if (prune(k, partial)) return;
    if (k == m) {
      Multisubgraph candidate(n);
      candidate.multiplicity = mult;
      if (!is_2ec(n, candidate)) return;
      if (partial < incumbent) {
        incumbent = partial;
        ties.clear();
        ties.push_back(std::move(candidate));
      } else if (partial == incumbent) {
        ties.push_back(std::move(candidate));
      }
      return;
    }
    EdgeId e = edge_at(n, k);
    for (int count = 0; count <= 2; ++count) {
      if (count > 0) {
        degree[e.u] += 1;
        degree[e.v] += 1;
      }
      mult[k] = count;
      run(k + 1, count == 0 ? partial : Int(partial + sc.cost[k] * count));
    }
    mult[k] = 0;
    degree[e.u] -= 2;
    degree[e.v] -= 2;
  }
};

}  // namespace

bool is_2ec(int n, const Multisubgraph& candidate) {
  if (candidate.n != n) return false;
  for (int v = 0; v < n; ++v)
    if (candidate.degree(v) < 2) return false;
  if (!connected_on_support(n, candidate.multiplicity, -1)) return false;
  for (int k = 0; k < edge_count(n); ++k) {
    if (candidate.multiplicity[k] != 1) continue;  // doubled edges are never bridges
    if (!connected_on_support(n, candidate.multiplicity, k)) return false;
  }
  return true;
}

IpResult<HamiltonianCycle> solve_tsp_ip(const MetricInstance& instance, const OracleBounds& bounds) {
  if (instance.n() > bounds.tsp_max_n)
    fail(Errc::too_large, "n=" + std::to_string(instance.n()) + " exceeds TSP enumeration bound " +
                              std::to_string(bounds.tsp_max_n));
  ScaledCosts sc(instance);
  TspSearch search(instance.n(), sc);
  search.run(Int(0));
  IpResult<HamiltonianCycle> result;
  result.value = sc.to_rational(search.incumbent);
  for (auto& order : search.best_orders)
    result.optima.push_back(HamiltonianCycle::from_order(std::move(order)));
  return result;
}

IpResult<Multisubgraph> solve_2ecm_ip(const MetricInstance& instance, const OracleBounds& bounds) {
  if (instance.n() > bounds.ecm_max_n)
    fail(Errc::too_large, "n=" + std::to_string(instance.n()) + " exceeds 2ECM enumeration bound " +
                              std::to_string(bounds.ecm_max_n));
  ScaledCosts sc(instance);
  // Feasible upper bounds: the doubled MST always, the optimal tour when the
  // TSP bound allows it (tours are feasible for 2ECM).
  Rat upper = mst_cost(instance) * 2;
  if (instance.n() <= bounds.tsp_max_n) {
    Rat tour = solve_tsp_ip(instance, bounds).value;
    if (tour < upper) upper = tour;
  }
  Rat scaled_upper = upper * sc.scale;
  EcmSearch search(instance.n(), sc, Int(scaled_upper.get_num()));
  search.run(0, Int(0));
  if (search.ties.empty()) fail(Errc::internal, "2ECM search lost all solutions");
  IpResult<Multisubgraph> result;
  result.value = sc.to_rational(search.incumbent);
  result.optima = std::move(search.ties);
  return result;
}

std::optional<HamiltonianCycle> unique_hamiltonian_2ecm(const MetricInstance& instance,
                                                        const OracleBounds& bounds) {
  IpResult<Multisubgraph> ip = solve_2ecm_ip(instance, bounds);
  if (!ip.unique()) return std::nullopt;
  const Multisubgraph& opt = ip.optima.front();
  int n = instance.n();
  for (int k = 0; k < edge_count(n); ++k)
    if (opt.multiplicity[k] > 1) return std::nullopt;
  for (int v = 0; v < n; ++v)
    if (opt.degree(v) != 2) return std::nullopt;
  if (!connected_on_support(n, opt.multiplicity, -1)) return std::nullopt;
  // Walk the cycle.
  std::vector<std::vector<int>> adj(n);
  for (int k = 0; k < edge_count(n); ++k)
    if (opt.multiplicity[k] == 1) {
      EdgeId e = edge_at(n, k);
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
  std::vector<int> order{0};
  int prev = -1, at = 0;
  while (static_cast<int>(order.size()) < n) {
    int next = (adj[at][0] == prev) ? adj[at][1] : adj[at][0];
    order.push_back(next);
    prev = at;
    at = next;
  }
  return HamiltonianCycle::from_order(std::move(order));
}

Rat mst_cost(const MetricInstance& instance) {
  int n = instance.n();
  std::vector<bool> in_tree(n, false);
  std::vector<Rat> best(n, Rat(0));
  std::vector<bool> has_best(n, false);
  in_tree[0] = true;
  for (int v = 1; v < n; ++v) {
    best[v] = instance.cost(0, v);
    has_best[v] = true;
  }
  Rat total(0);
  for (int round = 1; round < n; ++round) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (in_tree[v] || !has_best[v]) continue;
      if (pick < 0 || best[v] < best[pick]) pick = v;
    }
    in_tree[pick] = true;
    total += best[pick];
    for (int v = 0; v < n; ++v) {
      if (in_tree[v]) continue;
      Rat c = instance.cost(std::min(pick, v), std::max(pick, v));
      if (!has_best[v] || c < best[v]) {
        best[v] = c;
        has_best[v] = true;
      }
    }
  }
  return total;
}

}  // namespace tsp2ec
