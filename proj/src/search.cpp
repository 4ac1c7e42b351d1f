#include "tsp2ec/search.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <mutex>
#include <thread>

#include "tsp2ec/json_io.hpp"
#include "tsp2ec/prng.hpp"

namespace tsp2ec {

const char* stage_name(Stage stage) {
  switch (stage) {
    case Stage::not_unique_hamiltonian: return "NotUniqueHamiltonian";
    case Stage::lp_tight_at_ip: return "LpTightAtIp";
    case Stage::not_half_integral: return "NotHalfIntegral";
    case Stage::witness: return "WITNESS";
  }
  return "Unknown";
}

MetricInstance generate_random_metric(int n, std::uint64_t seed, unsigned denominator_bound) {
  if (n < 3) fail(Errc::bad_config, "need n >= 3");
  SplitMix64 rng(seed);
  std::vector<std::tuple<int, int, Rat>> weights;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      weights.emplace_back(u, v, rng.rational_in(Rat(1), Rat(4), denominator_bound));
  return metric_completion(n, weights);
}

MetricInstance generate_graph_completion(const GraphFamilySpec& spec, std::uint64_t seed,
                                         unsigned denominator_bound) {
  SplitMix64 rng(seed);
  auto weight = [&]() {
    return spec.random_weights ? rng.rational_in(Rat(1), Rat(3, 2), denominator_bound) : Rat(1);
  };
  std::vector<std::tuple<int, int, Rat>> edges;
  int n = 0;
  if (spec.family == "theta") {
    // Two hubs joined by three vertex-disjoint paths of `param` edges each.
    int k = std::max(1, spec.param);
    n = 2 + 3 * (k - 1);
    if (k == 1) fail(Errc::bad_config, "theta with param 1 is a multigraph, not simple");
    int next = 2;
    for (int path = 0; path < 3; ++path) {
      int prev = 0;
      for (int step = 1; step < k; ++step) {
        edges.emplace_back(prev, next, weight());
        prev = next++;
      }
      edges.emplace_back(prev, 1, weight());
    }
  } else if (spec.family == "cycle") {
    n = std::max(3, spec.param);
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n, weight());
  } else if (spec.family == "prism") {
    // Two triangles with the matching edges subdivided into `param` edges.
    int k = std::max(1, spec.param);
    n = 6 + 3 * (k - 1);
    for (int v : {0, 1, 2}) edges.emplace_back(v, (v + 1) % 3, weight());
    for (int v : {3, 4, 5}) edges.emplace_back(v, 3 + (v - 2) % 3, weight());
    int next = 6;
    for (int i = 0; i < 3; ++i) {
      int prev = i;
      for (int step = 1; step < k; ++step) {
        edges.emplace_back(prev, next, weight());
        prev = next++;
      }
      edges.emplace_back(prev, 3 + i, weight());
    }
  } else {
    fail(Errc::bad_config, "unknown graph family '" + spec.family + "'");
  }
  return metric_completion(n, edges);
}

CertifiedInstance generate_certified_instance(int n, std::uint64_t seed) {
  if (n < 4) fail(Errc::bad_config, "certified generator needs n >= 4");
  SplitMix64 rng(seed);
  // Random tour via Fisher-Yates.
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  for (int i = n - 1; i > 0; --i)
    std::swap(order[i], order[rng.below(static_cast<std::uint64_t>(i + 1))]);
  HamiltonianCycle tour = HamiltonianCycle::from_order(std::move(order));

  // Tour edges live in a cheap band, every other edge in an expensive one,
  // so each cut margin is at least 3/2 - 9/8 = 3/8 and the triangle
  // inequality holds strictly (13/8 < 1 + 1).
  std::vector<Rat> costs(edge_count(n));
  for (int k = 0; k < edge_count(n); ++k) {
    EdgeId e = edge_at(n, k);
    costs[k] = tour.has_edge(e) ? rng.rational_in(Rat(1), Rat(9, 8), 16)
                                : rng.rational_in(Rat(3, 2), Rat(13, 8), 16);
  }
  MetricInstance instance = MetricInstance::create(n, std::move(costs));

  // Random interval chain from the tour's starting vertex, then coverage
  // repair with singletons.
  int root = tour.order()[0];
  std::vector<std::vector<int>> segments;
  long start = rng.range(1, std::max(1L, static_cast<long>(n - 2)));
  long len = rng.range(1, std::min(2L, static_cast<long>(n - 1 - start)));
  std::vector<int> segment;
  for (long i = 0; i < len; ++i) segment.push_back(tour.order()[start + i]);
  segments.push_back(segment);
  if (start + len + 1 <= n - 1 && rng.coin()) {
    segments.push_back({tour.order()[start + len + 1]});
  }
  CutFamily family = repair_coverage(instance, tour, interval_chain(tour, segments, root));

  VerifyOutcome outcome = verify_certificate(instance, tour, family);
  if (!outcome.certificate)
    fail(Errc::internal, "band construction must always certify; margins are positive by design");
  return CertifiedInstance{std::move(instance), std::move(*outcome.certificate)};
}

MetricInstance perturb_certified(const MetricInstance& instance, const MarginCertificate& certificate,
                                 std::uint64_t seed) {
  SplitMix64 rng(seed);
  Rat bound = certificate.epsilon ? Rat(*certificate.epsilon / 2) : Rat(1, 4);
  int m = edge_count(instance.n());
  for (int attempt = 0; attempt < 64; ++attempt) {
    // Strictly inside the radius; shrink every 8 failed rounds to escape
    // tightly constrained corners.
    Rat radius = bound * Rat(15, 16);
    for (int halvings = attempt / 8; halvings > 0; --halvings) radius /= 2;
    std::vector<Rat> costs = instance.costs();
    for (int k = 0; k < m; ++k) {
      Rat delta = rng.rational_in(Rat(-1), Rat(1), 24) * radius;
      costs[k] += delta;
    }
    try {
      MetricInstance perturbed = MetricInstance::create(instance.n(), std::move(costs));
      if (!stability_check(instance, certificate, perturbed))
        fail(Errc::internal, "perturbation radius bookkeeping is wrong");
      return perturbed;
    } catch (const Error& e) {
      if (e.code() != Errc::negative_cost && e.code() != Errc::triangle_violation) throw;
    }
  }
  fail(Errc::exhausted_resampling, "no metric perturbation found within the stability radius");
}

FilterOutcome open_problem_filter(const MetricInstance& instance, const OracleBounds& oracle_bounds,
                                  const LpBounds& lp_bounds) {
  FilterOutcome outcome;
  outcome.digest = instance_digest(instance);
  outcome.transfer = transfer_check(instance, oracle_bounds, lp_bounds);
  const TransferReport& t = outcome.transfer;
  if (!t.unique_hamiltonian) {
    outcome.stage = Stage::not_unique_hamiltonian;
  } else if (t.lp_value == t.ip_tsp) {
    outcome.stage = Stage::lp_tight_at_ip;
  } else if (!t.half_integral_witness) {
    outcome.stage = Stage::not_half_integral;
  } else {
    outcome.stage = Stage::witness;
    outcome.contradiction = (t.gap_tsp > Rat(4, 3));
  }
  return outcome;
}

namespace {

MetricInstance instance_for_index(const SearchConfig& config, int index) {
  std::uint64_t seed = derive_seed(config.seed, static_cast<std::uint64_t>(index));
  int span = config.n_max - config.n_min + 1;
  int n = config.n_min + static_cast<int>(seed % static_cast<std::uint64_t>(span));
  switch (config.generator) {
    case GeneratorKind::random_metric:
      return generate_random_metric(n, derive_seed(seed, 1), config.denominator_bound);
    case GeneratorKind::graph_completion:
      return generate_graph_completion(config.graph, derive_seed(seed, 1), config.denominator_bound);
    case GeneratorKind::certified_perturbation: {
      CertifiedInstance base = generate_certified_instance(n, derive_seed(seed, 1));
      return perturb_certified(base.instance, base.certificate, derive_seed(seed, 2));
    }
  }
  fail(Errc::bad_config, "unknown generator");
}

void validate_config(const SearchConfig& config) {
  if (config.count < 0) fail(Errc::bad_config, "count must be >= 0");
  if (config.n_min < 3 || config.n_min > config.n_max)
    fail(Errc::bad_config, "bad n range [" + std::to_string(config.n_min) + ", " +
                               std::to_string(config.n_max) + "]");
  if (config.n_max > config.oracle_bounds.ecm_max_n)
    fail(Errc::bad_config, "n range exceeds the 2ECM oracle bound " +
                               std::to_string(config.oracle_bounds.ecm_max_n));
  if (config.denominator_bound < 1) fail(Errc::bad_config, "denominator bound must be >= 1");
}

}  // namespace

SearchSummary search_run(const SearchConfig& config) {
  validate_config(config);
  int count = config.count;
  int workers = config.workers > 0 ? config.workers
                                   : static_cast<int>(std::min(8u, std::thread::hardware_concurrency()));
  workers = std::max(1, std::min(workers, std::max(1, count)));

  std::vector<nlohmann::json> lines(count);
  std::vector<int> stages(count, -1);
  std::vector<bool> contradictions(count, false);
  std::atomic<int> next_index{0};
  std::mutex witness_mutex;
  std::atomic<int> errors{0};

  auto work = [&]() {
    for (;;) {
      int index = next_index.fetch_add(1);
      if (index >= count) return;
      nlohmann::json line;
      line["index"] = index;
      try {
        MetricInstance instance = instance_for_index(config, index);
        FilterOutcome outcome = open_problem_filter(instance, config.oracle_bounds, config.lp_bounds);
        line.update(io::to_json(outcome));
        stages[index] = static_cast<int>(outcome.stage);
        contradictions[index] = outcome.contradiction;
        if (outcome.stage == Stage::witness) {
          // A witness would be a research result; persist it before anything
          // else can go wrong.
          line["instance"] = serialize_instance(instance);
          std::lock_guard<std::mutex> lock(witness_mutex);
          std::string dir = config.witness_dir.empty() ? std::string(".") : config.witness_dir;
          std::ofstream out(dir + "/witness_" + std::to_string(index) + ".json");
          nlohmann::json artifact;
          artifact["index"] = index;
          artifact["instance"] = serialize_instance(instance);
          artifact["outcome"] = io::to_json(outcome);
          if (outcome.transfer.tour) {
            CutFamily family = repair_coverage(instance, *outcome.transfer.tour, make_family({}));
            artifact["certificate_attempt"] =
                io::to_json(verify_certificate(instance, *outcome.transfer.tour, family));
          }
          out << artifact.dump(2) << "\n";
        }
      } catch (const Error& e) {
        line["error"] = e.what();
        errors.fetch_add(1);
      }
      lines[index] = std::move(line);
    }
  };

  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& thread : pool) thread.join();

  if (!config.outcomes_path.empty()) {
    std::ofstream out(config.outcomes_path);
    if (!out) fail(Errc::io_error, "cannot write " + config.outcomes_path);
    for (const auto& line : lines) out << line.dump() << "\n";
  }

  SearchSummary summary;
  summary.seed = config.seed;
  summary.count = count;
  summary.stage_counts = {{"NotUniqueHamiltonian", 0}, {"LpTightAtIp", 0}, {"NotHalfIntegral", 0},
                          {"WITNESS", 0}};
  for (int index = 0; index < count; ++index) {
    if (stages[index] < 0) continue;  // errored instance
    Stage stage = static_cast<Stage>(stages[index]);
    summary.stage_counts[stage_name(stage)] += 1;
    if (stage == Stage::witness) summary.witnesses += 1;
    if (contradictions[index]) summary.contradictions += 1;
  }
  summary.errors = errors.load();

  if (!config.summary_path.empty()) {
    std::ofstream out(config.summary_path);
    if (!out) fail(Errc::io_error, "cannot write " + config.summary_path);
    out << io::to_json(summary).dump(2) << "\n";
  }
  return summary;
}

FilterOutcome reverify_witness(const std::string& witness_json, const OracleBounds& oracle_bounds,
                               const LpBounds& lp_bounds) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(witness_json);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::syntax_error, e.what());
  }
  if (!doc.contains("instance") || !doc["instance"].is_string())
    fail(Errc::syntax_error, "witness artifact lacks an embedded instance");
  MetricInstance instance = parse_instance(doc["instance"].get<std::string>());
  return open_problem_filter(instance, oracle_bounds, lp_bounds);
}

}  // namespace tsp2ec
