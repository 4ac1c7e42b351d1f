#pragma once

#include <optional>
#include <vector>

#include "tsp2ec/instance.hpp"

namespace tsp2ec {

/**
 * Hamiltonian cycle in canonical form: the order starts at vertex 0 and the
 * second vertex is smaller than the last, which kills rotation and
 * reflection duplicates. Identity is identity of the edge set.
 */
class HamiltonianCycle {
 public:
  /// Canonicalizes and validates a cyclic vertex order.
  static HamiltonianCycle from_order(std::vector<int> order);

  const std::vector<int>& order() const { return order_; }
  int n() const { return static_cast<int>(order_.size()); }
  std::vector<EdgeId> edges() const;
  bool has_edge(const EdgeId& e) const;
  bool has_edge(int u, int v) const { return has_edge(EdgeId(u, v)); }
  Rat cost(const MetricInstance& instance) const;
  /// Indicator vector of the edge set.
  EdgeVector indicator() const;

  bool operator==(const HamiltonianCycle& other) const { return order_ == other.order_; }

 private:
  std::vector<int> order_;
  std::vector<bool> edge_flags_;  // by edge index
};

/// Spanning multisubgraph with edge multiplicities in {0,1,2}.
struct Multisubgraph {
  int n = 0;
  std::vector<int> multiplicity;  // by edge index

  Multisubgraph() = default;
  explicit Multisubgraph(int vertex_count)
      : n(vertex_count), multiplicity(edge_count(vertex_count), 0) {}

  Rat cost(const MetricInstance& instance) const;
  int degree(int v) const;
  EdgeVector to_edge_vector() const;

  bool operator==(const Multisubgraph&) const = default;
};

/// true iff the multigraph is spanning, connected, and bridgeless. An edge
/// with multiplicity 2 is never a bridge.
bool is_2ec(int n, const Multisubgraph& candidate);

template <typename Solution>
struct IpResult {
  Rat value;
  std::vector<Solution> optima;  // all of them, deterministic order
  bool unique() const { return optima.size() == 1; }
};

struct OracleBounds {
  int tsp_max_n = 10;
  int ecm_max_n = 7;
};

/// Exhaustive exact TSP-IP: minimum tour cost and all canonical-form optima.
/// Throws too_large beyond bounds.tsp_max_n.
IpResult<HamiltonianCycle> solve_tsp_ip(const MetricInstance& instance,
                                        const OracleBounds& bounds = {});

// Exhaustive exact 2ECM-IP over multiplicities in {0,1,2}. The cap loses no
// optimum: lowering any multiplicity >= 3 to 2 keeps every cut through the
// edge at value >= 2 and leaves all other cuts unchanged, so some optimum
// always has multiplicities <= 2. Depth-first over edges in lexicographic
// order, pruned by running cost against the incumbent and by the
// degree-completion lower bound; ties are collected exhaustively.
IpResult<Multisubgraph> solve_2ecm_ip(const MetricInstance& instance,
                                      const OracleBounds& bounds = {});

/// The certified tour of Proposition-1-style instances: returns T iff the
/// 2ECM-IP optimum is unique and is a simple Hamiltonian cycle.
std::optional<HamiltonianCycle> unique_hamiltonian_2ecm(const MetricInstance& instance,
                                                        const OracleBounds& bounds = {});

/// Exact minimum spanning tree cost (doubled-MST bounds the 2ECM optimum).
Rat mst_cost(const MetricInstance& instance);

}  // namespace tsp2ec
