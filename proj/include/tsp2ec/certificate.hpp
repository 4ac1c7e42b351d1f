#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tsp2ec/instance.hpp"
#include "tsp2ec/oracle.hpp"

namespace tsp2ec {

/// Ordered collection of cuts with a verified-laminarity flag. Laminarity is
/// checked on the canonical sides; complementing any member preserves
/// pairwise compatibility, so the canonical check is faithful.
struct CutFamily {
  std::vector<Cut> cuts;
  bool laminar = false;
};

CutFamily make_family(std::vector<Cut> cuts);

struct CertificateFailure {
  std::string condition;  // "crossing", "uncovered", "nonpositive-margin", ...
  std::string witness;
};

struct CertificateReport {
  bool verified = false;
  std::vector<CertificateFailure> failures;
};

/**
 * (T, C, epsilon) bundle. epsilon is the exact minimum cut margin over the
 * family; an absent epsilon means every family cut is crossed only by tour
 * edges (possible only at n = 3), where the margin condition holds vacuously
 * and the stability radius is unbounded.
 */
struct MarginCertificate {
  HamiltonianCycle tour;
  CutFamily family;
  std::optional<Rat> epsilon;  // nullopt == unbounded (all margins vacuous)

  std::optional<Rat> stability_radius() const {
    if (!epsilon) return std::nullopt;
    return Rat(*epsilon / 2);
  }
};

struct VerifyOutcome {
  CertificateReport report;
  std::optional<MarginCertificate> certificate;  // present iff verified
};

/// Laminarity check; every crossing pair becomes a failure witness.
CertificateReport check_laminar(const CutFamily& family);

/// Lists every non-tour edge crossed by no family cut.
CertificateReport check_coverage(const MetricInstance& instance, const HamiltonianCycle& tour,
                                 const CutFamily& family);

/// min over non-tour crossings of c(f) minus max over tour crossings of
/// c(e); nullopt when delta(S) has no non-tour crossing (vacuous, +infinity
/// under the usual convention; only possible at n = 3).
std::optional<Rat> compute_margin(const MetricInstance& instance, const HamiltonianCycle& tour,
                                  const Cut& cut);

/// Verified iff the family is laminar, covers every non-tour edge, and every
/// margin is positive; epsilon is the exact minimum margin.
VerifyOutcome verify_certificate(const MetricInstance& instance, const HamiltonianCycle& tour,
                                 const CutFamily& family);

// Chain of prefix cuts P_j = S_1 u ... u S_j for pairwise disjoint
// contiguous vertex runs along the tour, enumerated in tour order from the
// root. Nested by construction, hence laminar. Coverage is NOT implied for
// general segment choices; run check_coverage and surface its failures.
CutFamily interval_chain(const HamiltonianCycle& tour, const std::vector<std::vector<int>>& segments,
                         int root = 0);

/// Adds singleton cuts until every non-tour edge is covered; singletons are
/// compatible with any laminar family, so laminarity is preserved.
CutFamily repair_coverage(const MetricInstance& instance, const HamiltonianCycle& tour,
                          const CutFamily& family);

/// true iff linf(original, perturbed) < epsilon/2 (strict). When true, the
/// perturbed instance is re-verified and the new margin must be at least
/// epsilon - 2*distance (asserted; exact arithmetic).
bool stability_check(const MetricInstance& original, const MarginCertificate& certificate,
                     const MetricInstance& perturbed);

/// Parses an "1,2;4"-style segment list (semicolon-separated segments of
/// comma-separated vertices).
std::vector<std::vector<int>> parse_segments_spec(const std::string& spec);

}  // namespace tsp2ec
