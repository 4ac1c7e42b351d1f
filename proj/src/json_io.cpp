#include "tsp2ec/json_io.hpp"

namespace tsp2ec::io {

using nlohmann::json;

namespace {
constexpr std::size_t kMaxListedOptima = 64;
}

json to_json(const Rat& value) { return format_rational(value); }

json to_json(const EdgeVector& x) {
  json obj = json::object();
  for (int k = 0; k < edge_count(x.n); ++k)
    if (x[k] != 0) obj[edge_at(x.n, k).str()] = format_rational(x[k]);
  return obj;
}

json to_json(const Cut& cut) { return json(cut.vertices()); }

json to_json(const HamiltonianCycle& tour) { return json(tour.order()); }

json to_json(const Multisubgraph& m) {
  json obj = json::object();
  for (int k = 0; k < edge_count(m.n); ++k)
    if (m.multiplicity[k] != 0) obj[edge_at(m.n, k).str()] = m.multiplicity[k];
  return obj;
}

json to_json(const IpResult<HamiltonianCycle>& result) {
  json optima = json::array();
  for (std::size_t i = 0; i < result.optima.size() && i < kMaxListedOptima; ++i)
    optima.push_back(to_json(result.optima[i]));
  return json{{"value", to_json(result.value)},
              {"unique", result.unique()},
              {"optima_count", result.optima.size()},
              {"optima", std::move(optima)}};
}

json to_json(const IpResult<Multisubgraph>& result) {
  json optima = json::array();
  for (std::size_t i = 0; i < result.optima.size() && i < kMaxListedOptima; ++i)
    optima.push_back(to_json(result.optima[i]));
  return json{{"value", to_json(result.value)},
              {"unique", result.unique()},
              {"optima_count", result.optima.size()},
              {"optima", std::move(optima)}};
}

json to_json(const LpResult& result) {
  json cuts = json::array();
  for (const Cut& cut : result.active_cuts) cuts.push_back(to_json(cut));
  return json{{"value", to_json(result.value)},
              {"solution", to_json(result.solution)},
              {"active_cuts", std::move(cuts)},
              {"degree_constrained", result.degree_constrained}};
}

json to_json(const DualResult& result) {
  json pi = json::array();
  for (const Rat& value : result.degree_multipliers) pi.push_back(format_rational(value));
  json cuts = json::array();
  for (const auto& [cut, y] : result.cut_multipliers)
    cuts.push_back(json{{"cut", to_json(cut)}, {"y", format_rational(y)}});
  return json{{"degree_multipliers", std::move(pi)},
              {"cut_multipliers", std::move(cuts)},
              {"value", to_json(result.value)},
              {"primal_value", to_json(result.primal_value)},
              {"attains_primal", result.attains_primal}};
}

json to_json(const CertificateReport& report) {
  json failures = json::array();
  for (const auto& failure : report.failures)
    failures.push_back(json{{"condition", failure.condition}, {"witness", failure.witness}});
  return json{{"status", report.verified ? "verified" : "failed"}, {"failures", std::move(failures)}};
}

json to_json(const MarginCertificate& certificate) {
  json family = json::array();
  for (const Cut& cut : certificate.family.cuts) family.push_back(to_json(cut));
  json doc{{"tour", to_json(certificate.tour)}, {"family", std::move(family)}};
  if (certificate.epsilon) {
    doc["epsilon"] = format_rational(*certificate.epsilon);
    doc["stability_radius"] = format_rational(*certificate.stability_radius());
  } else {
    doc["epsilon"] = nullptr;  // unbounded: no non-tour edge crosses any family cut
    doc["stability_radius"] = nullptr;
  }
  return doc;
}

json to_json(const VerifyOutcome& outcome) {
  json doc = to_json(outcome.report);
  if (outcome.certificate) doc["certificate"] = to_json(*outcome.certificate);
  return doc;
}

json to_json(const BypassData& data) {
  return json{{"cut", to_json(data.cut)}, {"a", data.a.str()},     {"b", data.b.str()},
              {"p", data.p.str()},        {"q", data.q.str()},     {"delta", to_json(data.delta)}};
}

json to_json(const LemmaReport& report) {
  json bypass = json::array();
  for (const auto& data : report.bypass) bypass.push_back(data ? to_json(*data) : json(nullptr));
  return json{{"bypass", std::move(bypass)},
              {"formula_value", to_json(report.formula_value)},
              {"lp_value", to_json(report.lp_value)},
              {"values_equal", report.values_equal},
              {"lp_tight_at_tour", report.lp_tight_at_tour},
              {"dual_support_attains", report.dual_support_attains},
              {"complementary_slackness", report.complementary_slackness},
              {"tightness_pattern", report.tightness_pattern},
              {"construction_feasible", report.construction_feasible},
              {"construction_complementary", report.construction_complementary},
              {"all_hypotheses_hold", report.all_hypotheses_hold},
              {"cs_vertex_dependent", report.cs_vertex_dependent},
              {"notes", report.notes}};
}

json to_json(const GapReport& report) {
  return json{{"ip_tsp", to_json(report.ip_tsp)},
              {"ip_2ecm", to_json(report.ip_2ecm)},
              {"lp_value", to_json(report.lp_value)},
              {"lp_value_degree_free", to_json(report.lp_value_degree_free)},
              {"gap_tsp", to_json(report.gap_tsp)},
              {"gap_2ecm", to_json(report.gap_2ecm)}};
}

json to_json(const TransferReport& report) {
  json doc{{"ip_tsp", to_json(report.ip_tsp)},
           {"ip_2ecm", to_json(report.ip_2ecm)},
           {"lp_value", to_json(report.lp_value)},
           {"lp_value_degree_free", to_json(report.lp_value_degree_free)},
           {"unique_hamiltonian", report.unique_hamiltonian},
           {"hamiltonian_optimum_exists", report.hamiltonian_optimum_exists},
           {"values_coincide", report.values_coincide},
           {"lp_values_equal", report.lp_values_equal},
           {"gap_tsp", to_json(report.gap_tsp)},
           {"gap_2ecm", to_json(report.gap_2ecm)},
           {"half_integral_decided", report.half_integral_decided},
           {"four_thirds_applicable", report.four_thirds_applicable}};
  doc["half_integral_witness"] =
      report.half_integral_witness ? to_json(*report.half_integral_witness) : json(nullptr);
  doc["tour"] = report.tour ? to_json(*report.tour) : json(nullptr);
  return doc;
}

json to_json(const FilterOutcome& outcome) {
  return json{{"digest", hex64(outcome.digest)},
              {"stage", stage_name(outcome.stage)},
              {"contradiction", outcome.contradiction},
              {"transfer", to_json(outcome.transfer)}};
}

json to_json(const SearchSummary& summary) {
  return json{{"seed", summary.seed},
              {"count", summary.count},
              {"stage_counts", summary.stage_counts},
              {"errors", summary.errors},
              {"witnesses", summary.witnesses},
              {"contradictions", summary.contradictions}};
}

CertificateFile certificate_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    fail(Errc::syntax_error, e.what());
  }
  if (!doc.is_object() || !doc.contains("tour") || !doc.contains("family"))
    fail(Errc::syntax_error, "certificate JSON needs 'tour' and 'family'");
  CertificateFile file;
  try {
    file.tour_order = doc["tour"].get<std::vector<int>>();
    file.family = doc["family"].get<std::vector<std::vector<int>>>();
  } catch (const json::exception& e) {
    fail(Errc::syntax_error, e.what());
  }
  if (doc.contains("epsilon") && !doc["epsilon"].is_null()) {
    if (!doc["epsilon"].is_string()) fail(Errc::syntax_error, "'epsilon' must be a rational string");
    auto eps = parse_rational(doc["epsilon"].get<std::string>());
    if (!eps) fail(Errc::syntax_error, "bad epsilon rational");
    file.epsilon = *eps;
  }
  return file;
}

std::string certificate_to_json(const MarginCertificate& certificate) {
  return to_json(certificate).dump(2) + "\n";
}

}  // namespace tsp2ec::io
