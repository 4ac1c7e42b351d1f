#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "tsp2ec/error.hpp"
#include "tsp2ec/rational.hpp"

namespace tsp2ec {

/// Unordered edge of K_n, stored with u < v.
struct EdgeId {
  int u = 0;
  int v = 0;

  EdgeId() = default;
  EdgeId(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool operator==(const EdgeId&) const = default;
  auto operator<=>(const EdgeId&) const = default;

  std::string str() const { return std::to_string(u) + "-" + std::to_string(v); }
};

inline int edge_count(int n) { return n * (n - 1) / 2; }

/// Lexicographic rank of (u,v), u < v, in the edge order of K_n.
inline int edge_index(int n, int u, int v) {
  return u * n - u * (u + 1) / 2 + (v - u - 1);
}

inline int edge_index(int n, const EdgeId& e) { return edge_index(n, e.u, e.v); }

EdgeId edge_at(int n, int index);

/**
 * Complete graph on n >= 3 vertices with symmetric nonnegative rational
 * costs satisfying the triangle inequality. Symmetry is structural (one
 * entry per unordered pair); validation happens eagerly at construction.
 * Immutable afterwards and safe to share across threads.
 */
class MetricInstance {
 public:
  /// Validating constructor. costs[k] is the cost of edge_at(n, k).
  /// Throws: bad_dimension, negative_cost, triangle_violation.
  static MetricInstance create(int n, std::vector<Rat> costs);

  int n() const { return n_; }
  const Rat& cost(int u, int v) const { return costs_[edge_index(n_, EdgeId(u, v))]; }
  const Rat& cost(const EdgeId& e) const { return costs_[edge_index(n_, e)]; }
  const std::vector<Rat>& costs() const { return costs_; }

  bool operator==(const MetricInstance& other) const = default;

 private:
  MetricInstance(int n, std::vector<Rat> costs) : n_(n), costs_(std::move(costs)) {}

  int n_;
  std::vector<Rat> costs_;
};

/// Shortest-path closure of a connected weighted graph on n vertices;
/// satisfies the triangle inequality by construction.
/// Throws: disconnected_graph, negative_cost, bad_dimension.
MetricInstance metric_completion(int n, const std::vector<std::tuple<int, int, Rat>>& weights);

/**
 * Nonempty proper vertex subset, canonicalized to the side that does not
 * contain vertex 0, so delta(S) = delta(V \ S) has one representative.
 */
class Cut {
 public:
  /// Throws invalid_cut for empty or full sides.
  Cut(int n, std::vector<int> side);

  int n() const { return n_; }
  const std::vector<int>& vertices() const { return vertices_; }  // sorted
  std::uint64_t mask() const { return mask_; }
  bool contains(int v) const { return (mask_ >> v) & 1u; }
  bool crosses(const EdgeId& e) const { return contains(e.u) != contains(e.v); }

  bool operator==(const Cut&) const = default;

  std::string str() const;

 private:
  int n_;
  std::vector<int> vertices_;
  std::uint64_t mask_ = 0;
};

/// delta(S): all edges of K_n with exactly one endpoint in S.
std::vector<EdgeId> cut_edges(const MetricInstance& instance, const Cut& cut);

/// Exact max over edges of |c_e - c'_e|. Throws dimension_mismatch.
Rat linf_distance(const MetricInstance& a, const MetricInstance& b);

/// Dense nonnegative rational vector indexed by the edges of K_n.
struct EdgeVector {
  int n = 0;
  std::vector<Rat> values;

  EdgeVector() = default;
  explicit EdgeVector(int vertex_count)
      : n(vertex_count), values(edge_count(vertex_count), Rat(0)) {}

  Rat& at(int u, int v) { return values[edge_index(n, EdgeId(u, v))]; }
  const Rat& at(int u, int v) const { return values[edge_index(n, EdgeId(u, v))]; }
  Rat& operator[](int k) { return values[k]; }
  const Rat& operator[](int k) const { return values[k]; }

  Rat dot(const std::vector<Rat>& costs) const;
  /// Sum of values over delta(S).
  Rat cut_value(const Cut& cut) const;
  /// Sum of values over edges incident to v.
  Rat degree(int v) const;

  bool operator==(const EdgeVector&) const = default;
};

/// Text or JSON instance file (auto-detected). Throws syntax_error plus all
/// MetricInstance::create errors.
MetricInstance parse_instance(const std::string& text);

/// Canonical text form: "n <count>" then one line per edge in lexicographic
/// order. parse(serialize(x)) == x exactly.
std::string serialize_instance(const MetricInstance& instance);

/// JSON alternative: {"n": ..., "costs": [["u-v", "p/q"], ...]}.
std::string serialize_instance_json(const MetricInstance& instance);

/// FNV-1a over the canonical serialization.
std::uint64_t instance_digest(const MetricInstance& instance);

}  // namespace tsp2ec
