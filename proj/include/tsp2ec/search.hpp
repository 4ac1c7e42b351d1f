#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tsp2ec/certificate.hpp"
#include "tsp2ec/gap.hpp"
#include "tsp2ec/instance.hpp"

namespace tsp2ec {

enum class GeneratorKind { random_metric, graph_completion, certified_perturbation };

/// Sparse families whose completions feed the pipeline: theta graphs (two
/// hubs, three paths of `param` edges each), unit cycles with random chords,
/// prisms with subdivided side paths.
struct GraphFamilySpec {
  std::string family = "theta";  // "theta" | "cycle" | "prism"
  int param = 2;                 // path length / cycle size / subdivision
  bool random_weights = false;   // unit weights unless set
};

struct SearchConfig {
  std::uint64_t seed = 0;
  int n_min = 5;
  int n_max = 6;
  GeneratorKind generator = GeneratorKind::random_metric;
  int count = 1;
  unsigned denominator_bound = 8;
  GraphFamilySpec graph;
  int workers = 0;  // 0 == hardware concurrency (capped)
  std::string outcomes_path;
  std::string summary_path;
  std::string witness_dir;
  OracleBounds oracle_bounds;
  LpBounds lp_bounds;
};

enum class Stage { not_unique_hamiltonian, lp_tight_at_ip, not_half_integral, witness };

const char* stage_name(Stage stage);

struct FilterOutcome {
  std::uint64_t digest = 0;
  Stage stage = Stage::not_unique_hamiltonian;
  TransferReport transfer;
  bool contradiction = false;  // witness whose exact gap exceeds 4/3
};

/// Deterministic in (n, seed): random rational edge costs metrized by
/// shortest-path completion, so the result always validates.
MetricInstance generate_random_metric(int n, std::uint64_t seed, unsigned denominator_bound);

MetricInstance generate_graph_completion(const GraphFamilySpec& spec, std::uint64_t seed,
                                         unsigned denominator_bound);

struct CertifiedInstance {
  MetricInstance instance;
  MarginCertificate certificate;
};

/// Random tour with costs split into a cheap tour band and an expensive
/// non-tour band, certified by a random interval chain plus coverage repair.
/// Every margin is positive by construction.
CertifiedInstance generate_certified_instance(int n, std::uint64_t seed);

/// Random metric perturbation at l-infinity distance strictly below the
/// stability radius, resampled until the triangle inequality survives.
/// Throws exhausted_resampling after a bounded number of attempts.
MetricInstance perturb_certified(const MetricInstance& instance, const MarginCertificate& certificate,
                                 std::uint64_t seed);

/// Stage pipeline: unique Hamiltonian 2ECM optimum, LP strictly below IP,
/// half-integral optimum. Cheap oracle checks run before the costly
/// half-integral decision.
FilterOutcome open_problem_filter(const MetricInstance& instance,
                                  const OracleBounds& oracle_bounds = {},
                                  const LpBounds& lp_bounds = {});

struct SearchSummary {
  std::uint64_t seed = 0;
  int count = 0;
  std::map<std::string, int> stage_counts;
  int errors = 0;
  int witnesses = 0;
  int contradictions = 0;
};

// Evaluates `count` generated instances with a bounded worker pool. Instance
// i derives its seed from (config.seed, i), and the outcome stream is
// ordered by index, so identical configs produce byte-identical output
// regardless of worker count. Witness artifacts are written the moment they
// are found.
SearchSummary search_run(const SearchConfig& config);

/// Re-runs the filter on a witness artifact loaded from disk.
FilterOutcome reverify_witness(const std::string& witness_json, const OracleBounds& oracle_bounds = {},
                               const LpBounds& lp_bounds = {});

}  // namespace tsp2ec
