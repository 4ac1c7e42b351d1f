#pragma once

#include <string>

#include "json.hpp"
#include "tsp2ec/certificate.hpp"
#include "tsp2ec/gap.hpp"
#include "tsp2ec/lp.hpp"
#include "tsp2ec/oracle.hpp"
#include "tsp2ec/search.hpp"

// JSON views of results and reports. Rationals are always "p/q" strings;
// no floating-point number ever appears in machine output.
namespace tsp2ec::io {

nlohmann::json to_json(const Rat& value);
nlohmann::json to_json(const EdgeVector& x);  // nonzero entries only
nlohmann::json to_json(const Cut& cut);
nlohmann::json to_json(const HamiltonianCycle& tour);
nlohmann::json to_json(const Multisubgraph& m);
nlohmann::json to_json(const IpResult<HamiltonianCycle>& result);
nlohmann::json to_json(const IpResult<Multisubgraph>& result);
nlohmann::json to_json(const LpResult& result);
nlohmann::json to_json(const DualResult& result);
nlohmann::json to_json(const CertificateReport& report);
nlohmann::json to_json(const MarginCertificate& certificate);
nlohmann::json to_json(const VerifyOutcome& outcome);
nlohmann::json to_json(const BypassData& data);
nlohmann::json to_json(const LemmaReport& report);
nlohmann::json to_json(const GapReport& report);
nlohmann::json to_json(const TransferReport& report);
nlohmann::json to_json(const FilterOutcome& outcome);
nlohmann::json to_json(const SearchSummary& summary);

/// Certificate file payload: tour order, family as vertex lists, optional
/// stored epsilon. Loading never trusts the file; callers re-verify.
struct CertificateFile {
  std::vector<int> tour_order;
  std::vector<std::vector<int>> family;
  std::optional<Rat> epsilon;
};

CertificateFile certificate_from_json(const std::string& text);
std::string certificate_to_json(const MarginCertificate& certificate);

}  // namespace tsp2ec::io
