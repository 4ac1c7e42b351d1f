#include "tsp2ec/instance.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "tsp2ec/prng.hpp"

namespace tsp2ec {

EdgeId edge_at(int n, int index) {
  // Walk rows; n is desk-scale so the linear scan is fine.
  int k = index;
  for (int u = 0; u < n - 1; ++u) {
    int row = n - 1 - u;
    if (k < row) return EdgeId(u, u + 1 + k);
    k -= row;
  }
  fail(Errc::internal, "edge index out of range");
}

MetricInstance MetricInstance::create(int n, std::vector<Rat> costs) {
  if (n < 3) fail(Errc::bad_dimension, "need n >= 3, got n=" + std::to_string(n));
  if (static_cast<int>(costs.size()) != edge_count(n))
    fail(Errc::bad_dimension, "expected " + std::to_string(edge_count(n)) + " costs, got " +
                                  std::to_string(costs.size()));
  for (int k = 0; k < edge_count(n); ++k) {
    if (costs[k] < 0)
      fail(Errc::negative_cost, "edge " + edge_at(n, k).str() + " has cost " + format_rational(costs[k]));
  }
  // c_{ij} <= c_{ik} + c_{kj} for all triples, checked eagerly.
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Rat& cij = costs[edge_index(n, i, j)];
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        Rat detour = costs[edge_index(n, EdgeId(i, k))] + costs[edge_index(n, EdgeId(k, j))];
        if (cij > detour)
          fail(Errc::triangle_violation, "(" + std::to_string(i) + "," + std::to_string(j) + "," +
                                             std::to_string(k) + "): c=" + format_rational(cij) +
                                             " > " + format_rational(detour));
      }
    }
  }
  return MetricInstance(n, std::move(costs));
}

MetricInstance metric_completion(int n, const std::vector<std::tuple<int, int, Rat>>& weights) {
  if (n < 3) fail(Errc::bad_dimension, "need n >= 3, got n=" + std::to_string(n));
  // Floyd-Warshall over exact rationals; absent pairs start at "infinity"
  // (represented by a flag matrix).
  std::vector<std::vector<Rat>> dist(n, std::vector<Rat>(n, Rat(0)));
  std::vector<std::vector<bool>> known(n, std::vector<bool>(n, false));
  for (int v = 0; v < n; ++v) known[v][v] = true;
  for (const auto& [a, b, w] : weights) {
    if (a < 0 || b < 0 || a >= n || b >= n || a == b)
      fail(Errc::bad_dimension, "bad endpoint in weighted edge " + std::to_string(a) + "-" + std::to_string(b));
    if (w < 0) fail(Errc::negative_cost, "weight of " + std::to_string(a) + "-" + std::to_string(b));
    if (!known[a][b] || w < dist[a][b]) {
      dist[a][b] = dist[b][a] = w;
      known[a][b] = known[b][a] = true;
    }
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      if (!known[i][k]) continue;
      for (int j = 0; j < n; ++j) {
        if (!known[k][j]) continue;
        Rat via = dist[i][k] + dist[k][j];
        if (!known[i][j] || via < dist[i][j]) {
          dist[i][j] = via;
          known[i][j] = true;
        }
      }
    }
  std::vector<Rat> costs(edge_count(n));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (!known[u][v])
        fail(Errc::disconnected_graph,
             "no path between " + std::to_string(u) + " and " + std::to_string(v));
      costs[edge_index(n, u, v)] = dist[u][v];
    }
  return MetricInstance::create(n, std::move(costs));
}

Cut::Cut(int n, std::vector<int> side) : n_(n) {
  if (n < 2 || n > 64) fail(Errc::invalid_cut, "unsupported n=" + std::to_string(n));
  std::uint64_t m = 0;
  for (int v : side) {
    if (v < 0 || v >= n) fail(Errc::invalid_cut, "vertex " + std::to_string(v) + " out of range");
    m |= std::uint64_t(1) << v;
  }
  std::uint64_t full = (n == 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << n) - 1);
  if (m == 0 || m == full) fail(Errc::invalid_cut, "cut side must be a nonempty proper subset");
  if (m & 1u) m = full & ~m;  // canonical side excludes vertex 0
  mask_ = m;
  for (int v = 0; v < n; ++v)
    if ((m >> v) & 1u) vertices_.push_back(v);
}

std::string Cut::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(vertices_[i]);
  }
  return out + "}";
}

std::vector<EdgeId> cut_edges(const MetricInstance& instance, const Cut& cut) {
  if (cut.n() != instance.n()) fail(Errc::invalid_cut, "cut does not match instance dimension");
  std::vector<EdgeId> result;
  int n = instance.n();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (cut.contains(u) != cut.contains(v)) result.emplace_back(u, v);
  return result;
}

Rat linf_distance(const MetricInstance& a, const MetricInstance& b) {
  if (a.n() != b.n())
    fail(Errc::dimension_mismatch,
         "n=" + std::to_string(a.n()) + " vs n=" + std::to_string(b.n()));
  Rat best(0);
  for (int k = 0; k < edge_count(a.n()); ++k) {
    Rat d = rat_abs(a.costs()[k] - b.costs()[k]);
    if (d > best) best = d;
  }
  return best;
}

Rat EdgeVector::dot(const std::vector<Rat>& costs) const {
  Rat total(0);
  for (std::size_t k = 0; k < values.size(); ++k)
    if (values[k] != 0) total += values[k] * costs[k];
  return total;
}

Rat EdgeVector::cut_value(const Cut& cut) const {
  Rat total(0);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (cut.contains(u) != cut.contains(v)) total += at(u, v);
  return total;
}

Rat EdgeVector::degree(int v) const {
  Rat total(0);
  for (int u = 0; u < n; ++u)
    if (u != v) total += at(std::min(u, v), std::max(u, v));
  return total;
}

namespace {

MetricInstance build_from_entries(int n, const std::vector<std::tuple<int, int, Rat>>& entries) {
  if (n < 3) fail(Errc::bad_dimension, "need n >= 3, got n=" + std::to_string(n));
  std::vector<Rat> costs(edge_count(n));
  std::vector<bool> seen(edge_count(n), false);
  for (const auto& [a, b, value] : entries) {
    if (a == b || a < 0 || b < 0 || a >= n || b >= n)
      fail(Errc::bad_dimension, "bad edge " + std::to_string(a) + "-" + std::to_string(b));
    int k = edge_index(n, EdgeId(a, b));
    if (seen[k]) {
      if (costs[k] != value)
        fail(Errc::asymmetric_input, "conflicting entries for edge " + EdgeId(a, b).str());
      continue;
    }
    seen[k] = true;
    costs[k] = value;
  }
  for (int k = 0; k < edge_count(n); ++k)
    if (!seen[k]) fail(Errc::bad_dimension, "missing cost for edge " + edge_at(n, k).str());
  return MetricInstance::create(n, std::move(costs));
}

MetricInstance parse_instance_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int n = -1;
  std::vector<std::tuple<int, int, Rat>> entries;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;  // blank or comment-only line
    if (n < 0) {
      if (first != "n") fail(Errc::syntax_error, "line " + std::to_string(lineno) + ": expected 'n <count>'");
      if (!(ls >> n) || n < 1)
        fail(Errc::syntax_error, "line " + std::to_string(lineno) + ": bad vertex count");
      std::string extra;
      if (ls >> extra) fail(Errc::syntax_error, "line " + std::to_string(lineno) + ": trailing tokens");
      continue;
    }
    int u = 0, v = 0;
    std::string cost_token;
    std::istringstream es(line);
    if (!(es >> u >> v >> cost_token))
      fail(Errc::syntax_error, "line " + std::to_string(lineno) + ": expected '<u> <v> <cost>'");
    std::string extra;
    if (es >> extra) fail(Errc::syntax_error, "line " + std::to_string(lineno) + ": trailing tokens");
    auto value = parse_rational(cost_token);
    if (!value)
      fail(Errc::syntax_error, "line " + std::to_string(lineno) + ": bad rational '" + cost_token + "'");
    entries.emplace_back(u, v, *value);
  }
  if (n < 0) fail(Errc::syntax_error, "missing 'n <count>' header");
  return build_from_entries(n, entries);
}

MetricInstance parse_instance_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::syntax_error, e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("costs"))
    fail(Errc::syntax_error, "instance JSON needs fields 'n' and 'costs'");
  if (!doc["n"].is_number_integer()) fail(Errc::syntax_error, "'n' must be an integer");
  int n = doc["n"].get<int>();
  std::vector<std::tuple<int, int, Rat>> entries;
  for (const auto& item : doc["costs"]) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_string() || !item[1].is_string())
      fail(Errc::syntax_error, "each cost entry must be [\"u-v\", \"p/q\"]");
    std::string key = item[0].get<std::string>();
    auto dash = key.find('-');
    if (dash == std::string::npos) fail(Errc::syntax_error, "bad edge key '" + key + "'");
    int u = 0, v = 0;
    try {
      u = std::stoi(key.substr(0, dash));
      v = std::stoi(key.substr(dash + 1));
    } catch (const std::exception&) {
      fail(Errc::syntax_error, "bad edge key '" + key + "'");
    }
    auto value = parse_rational(item[1].get<std::string>());
    if (!value) fail(Errc::syntax_error, "bad rational '" + item[1].get<std::string>() + "'");
    entries.emplace_back(u, v, *value);
  }
  return build_from_entries(n, entries);
}

}  // namespace

MetricInstance parse_instance(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') return parse_instance_json(text);
    break;
  }
  return parse_instance_text(text);
}

std::string serialize_instance(const MetricInstance& instance) {
  std::ostringstream out;
  out << "n " << instance.n() << "\n";
  for (int k = 0; k < edge_count(instance.n()); ++k) {
    EdgeId e = edge_at(instance.n(), k);
    out << e.u << " " << e.v << " " << format_rational(instance.costs()[k]) << "\n";
  }
  return out.str();
}

std::string serialize_instance_json(const MetricInstance& instance) {
  nlohmann::json costs = nlohmann::json::array();
  for (int k = 0; k < edge_count(instance.n()); ++k) {
    costs.push_back({edge_at(instance.n(), k).str(), format_rational(instance.costs()[k])});
  }
  nlohmann::json doc;
  doc["n"] = instance.n();
  doc["costs"] = std::move(costs);
  return doc.dump();
}

std::uint64_t instance_digest(const MetricInstance& instance) {
  std::string text = serialize_instance(instance);
  return fnv1a64(text.data(), text.size());
}

}  // namespace tsp2ec
