#include "tsp2ec/tsp2ec.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

#include "tsp2ec/json_io.hpp"

using namespace tsp2ec;

struct tsp2ec_instance {
  MetricInstance value;
};

namespace {

thread_local std::string g_last_error;

struct GlobalBounds {
  OracleBounds oracle;
  LpBounds lp;
};

GlobalBounds g_bounds;

tsp2ec_status status_of(const Error& e) {
  switch (e.code()) {
    case Errc::too_large:
      return TSP2EC_ERR_TOO_LARGE;
    case Errc::internal:
    case Errc::infeasible:
      return TSP2EC_ERR_INTERNAL;
    default:
      return TSP2EC_ERR_INPUT;
  }
}

char* dup_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

template <typename Fn>
tsp2ec_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return TSP2EC_ERR_INTERNAL;
  }
}

HamiltonianCycle tour_from_csv(const MetricInstance& instance, const char* tour_csv) {
  std::vector<int> order;
  if (tour_csv == nullptr || *tour_csv == '\0') {
    for (int v = 0; v < instance.n(); ++v) order.push_back(v);
  } else {
    std::stringstream ss(tour_csv);
    std::string token;
    while (std::getline(ss, token, ',')) {
      try {
        order.push_back(std::stoi(token));
      } catch (const std::exception&) {
        fail(Errc::bad_config, "bad tour vertex '" + token + "'");
      }
    }
  }
  if (static_cast<int>(order.size()) != instance.n())
    fail(Errc::bad_config, "tour must list all " + std::to_string(instance.n()) + " vertices");
  return HamiltonianCycle::from_order(std::move(order));
}

}  // namespace

extern "C" {

tsp2ec_status tsp2ec_instance_parse(const char* text, tsp2ec_instance** out) {
  return guarded([&]() {
    if (text == nullptr || out == nullptr) fail(Errc::bad_config, "null argument");
    *out = new tsp2ec_instance{parse_instance(text)};
    return TSP2EC_OK;
  });
}

tsp2ec_status tsp2ec_instance_read_file(const char* path, tsp2ec_instance** out) {
  return guarded([&]() {
    if (path == nullptr || out == nullptr) fail(Errc::bad_config, "null argument");
    std::ifstream in(path);
    if (!in) fail(Errc::io_error, std::string("cannot read ") + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    *out = new tsp2ec_instance{parse_instance(buffer.str())};
    return TSP2EC_OK;
  });
}

tsp2ec_status tsp2ec_instance_serialize(const tsp2ec_instance* instance, int as_json,
                                        char** out_text) {
  return guarded([&]() {
    if (instance == nullptr || out_text == nullptr) fail(Errc::bad_config, "null argument");
    *out_text = dup_string(as_json ? serialize_instance_json(instance->value)
                                   : serialize_instance(instance->value));
    return TSP2EC_OK;
  });
}

int tsp2ec_instance_vertex_count(const tsp2ec_instance* instance) {
  return instance ? instance->value.n() : 0;
}

void tsp2ec_instance_free(tsp2ec_instance* instance) { delete instance; }

tsp2ec_status tsp2ec_solve(const tsp2ec_instance* instance, const char* problem, char** out_json) {
  return guarded([&]() {
    if (instance == nullptr || problem == nullptr || out_json == nullptr)
      fail(Errc::bad_config, "null argument");
    const MetricInstance& inst = instance->value;
    nlohmann::json doc;
    std::string name = problem;
    if (name == "tsp-ip") {
      doc = io::to_json(solve_tsp_ip(inst, g_bounds.oracle));
    } else if (name == "2ecm-ip") {
      doc = io::to_json(solve_2ecm_ip(inst, g_bounds.oracle));
    } else if (name == "lp") {
      doc = io::to_json(solve_lp(inst, true, g_bounds.lp));
    } else if (name == "2ecm-lp-nodeg") {
      doc = io::to_json(solve_lp(inst, false, g_bounds.lp));
    } else {
      fail(Errc::bad_config, "unknown problem '" + name + "'");
    }
    doc["problem"] = name;
    *out_json = dup_string(doc.dump());
    return TSP2EC_OK;
  });
}

tsp2ec_status tsp2ec_certify(const tsp2ec_instance* instance, const char* certificate_json,
                             char** out_json) {
  return guarded([&]() {
    if (instance == nullptr || certificate_json == nullptr || out_json == nullptr)
      fail(Errc::bad_config, "null argument");
    io::CertificateFile file = io::certificate_from_json(certificate_json);
    HamiltonianCycle tour = HamiltonianCycle::from_order(file.tour_order);
    std::vector<Cut> cuts;
    for (const auto& side : file.family) cuts.emplace_back(instance->value.n(), side);
    VerifyOutcome outcome = verify_certificate(instance->value, tour, make_family(std::move(cuts)));
    nlohmann::json doc = io::to_json(outcome);
    if (outcome.certificate && file.epsilon) {
      bool matches = outcome.certificate->epsilon && *outcome.certificate->epsilon == *file.epsilon;
      doc["stored_epsilon_matches"] = matches;
    }
    *out_json = dup_string(doc.dump());
    return outcome.report.verified ? TSP2EC_OK : TSP2EC_VERIFY_FAILED;
  });
}

tsp2ec_status tsp2ec_certify_chain(const tsp2ec_instance* instance, const char* tour_csv,
                                   const char* chain_spec, int root, char** out_json) {
  return guarded([&]() {
    if (instance == nullptr || chain_spec == nullptr || out_json == nullptr)
      fail(Errc::bad_config, "null argument");
    HamiltonianCycle tour = tour_from_csv(instance->value, tour_csv);
    CutFamily chain = interval_chain(tour, parse_segments_spec(chain_spec), root);
    CutFamily family = repair_coverage(instance->value, tour, chain);
    VerifyOutcome outcome = verify_certificate(instance->value, tour, family);
    *out_json = dup_string(io::to_json(outcome).dump());
    return outcome.report.verified ? TSP2EC_OK : TSP2EC_VERIFY_FAILED;
  });
}

tsp2ec_status tsp2ec_gap_report(const tsp2ec_instance* instance, const char* tour_csv,
                                const char* chain_spec, int root, char** out_json) {
  return guarded([&]() {
    if (instance == nullptr || out_json == nullptr) fail(Errc::bad_config, "null argument");
    nlohmann::json doc =
        io::to_json(transfer_check(instance->value, g_bounds.oracle, g_bounds.lp));
    if (chain_spec != nullptr && *chain_spec != '\0') {
      HamiltonianCycle tour = tour_from_csv(instance->value, tour_csv);
      CutFamily chain = interval_chain(tour, parse_segments_spec(chain_spec), root);
      doc["lemma"] = io::to_json(verify_lemma_conditions(instance->value, tour, chain, g_bounds.lp));
    }
    *out_json = dup_string(doc.dump());
    return TSP2EC_OK;
  });
}

tsp2ec_status tsp2ec_search_run(const char* config_json, char** out_summary_json) {
  return guarded([&]() {
    if (config_json == nullptr || out_summary_json == nullptr)
      fail(Errc::bad_config, "null argument");
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(config_json);
    } catch (const nlohmann::json::exception& e) {
      fail(Errc::bad_config, e.what());
    }
    SearchConfig config;
    config.oracle_bounds = g_bounds.oracle;
    config.lp_bounds = g_bounds.lp;
    try {
      config.seed = doc.value("seed", 0ULL);
      config.count = doc.value("count", 1);
      config.n_min = doc.value("n_min", 5);
      config.n_max = doc.value("n_max", config.n_min);
      config.denominator_bound = doc.value("denominator_bound", 8u);
      config.workers = doc.value("workers", 0);
      config.outcomes_path = doc.value("outcomes_path", std::string());
      config.summary_path = doc.value("summary_path", std::string());
      config.witness_dir = doc.value("witness_dir", std::string());
      std::string generator = doc.value("generator", std::string("random-metric"));
      if (generator == "random-metric") {
        config.generator = GeneratorKind::random_metric;
      } else if (generator == "graph-completion") {
        config.generator = GeneratorKind::graph_completion;
      } else if (generator == "certified-perturbation") {
        config.generator = GeneratorKind::certified_perturbation;
      } else {
        fail(Errc::bad_config, "unknown generator '" + generator + "'");
      }
      if (doc.contains("graph")) {
        config.graph.family = doc["graph"].value("family", std::string("theta"));
        config.graph.param = doc["graph"].value("param", 2);
        config.graph.random_weights = doc["graph"].value("random_weights", false);
      }
    } catch (const nlohmann::json::exception& e) {
      fail(Errc::bad_config, e.what());
    }
    SearchSummary summary = search_run(config);
    *out_summary_json = dup_string(io::to_json(summary).dump());
    return TSP2EC_OK;
  });
}

tsp2ec_status tsp2ec_reverify_witness(const char* witness_json, char** out_json) {
  return guarded([&]() {
    if (witness_json == nullptr || out_json == nullptr) fail(Errc::bad_config, "null argument");
    FilterOutcome outcome = reverify_witness(witness_json, g_bounds.oracle, g_bounds.lp);
    *out_json = dup_string(io::to_json(outcome).dump());
    return TSP2EC_OK;
  });
}

void tsp2ec_set_bounds(int tsp_max_n, int ecm_max_n, int lp_max_n, int half_integral_max_n) {
  if (tsp_max_n > 0) g_bounds.oracle.tsp_max_n = tsp_max_n;
  if (ecm_max_n > 0) g_bounds.oracle.ecm_max_n = ecm_max_n;
  if (lp_max_n > 0) g_bounds.lp.lp_max_n = lp_max_n;
  if (half_integral_max_n > 0) g_bounds.lp.half_integral_max_n = half_integral_max_n;
}

const char* tsp2ec_last_error(void) { return g_last_error.c_str(); }

void tsp2ec_string_free(char* text) { std::free(text); }

const char* tsp2ec_version(void) { return "0.1.0"; }

}  // extern "C"
