#include "tsp2ec/certificate.hpp"

#include <algorithm>
#include <sstream>

namespace tsp2ec {

namespace {

bool compatible(const Cut& a, const Cut& b) {
  std::uint64_t inter = a.mask() & b.mask();
  return inter == 0 || inter == a.mask() || inter == b.mask();
}

}  // namespace

CutFamily make_family(std::vector<Cut> cuts) {
  CutFamily family;
  family.cuts = std::move(cuts);
  family.laminar = check_laminar(family).verified;
  return family;
}

CertificateReport check_laminar(const CutFamily& family) {
  CertificateReport report;
  report.verified = true;
  for (std::size_t i = 0; i < family.cuts.size(); ++i)
    for (std::size_t j = i + 1; j < family.cuts.size(); ++j)
      if (!compatible(family.cuts[i], family.cuts[j])) {
        report.verified = false;
        report.failures.push_back(
            {"crossing", family.cuts[i].str() + " crosses " + family.cuts[j].str()});
      }
  return report;
}

CertificateReport check_coverage(const MetricInstance& instance, const HamiltonianCycle& tour,
                                 const CutFamily& family) {
  if (tour.n() != instance.n()) fail(Errc::dimension_mismatch, "tour does not match instance");
  CertificateReport report;
  report.verified = true;
  int n = instance.n();
  for (int k = 0; k < edge_count(n); ++k) {
    EdgeId e = edge_at(n, k);
    if (tour.has_edge(e)) continue;
    bool covered = false;
    for (const Cut& cut : family.cuts)
      if (cut.crosses(e)) {
        covered = true;
        break;
      }
    if (!covered) {
      report.verified = false;
      report.failures.push_back({"uncovered", "non-tour edge " + e.str() + " crosses no family cut"});
    }
  }
  return report;
}

std::optional<Rat> compute_margin(const MetricInstance& instance, const HamiltonianCycle& tour,
                                  const Cut& cut) {
  if (tour.n() != instance.n() || cut.n() != instance.n())
    fail(Errc::dimension_mismatch, "margin inputs disagree on n");
  std::optional<Rat> min_nontour;
  std::optional<Rat> max_tour;
  int n = instance.n();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (cut.contains(u) == cut.contains(v)) continue;
      const Rat& c = instance.cost(u, v);
      if (tour.has_edge(u, v)) {
        if (!max_tour || c > *max_tour) max_tour = c;
      } else {
        if (!min_nontour || c < *min_nontour) min_nontour = c;
      }
    }
  if (!max_tour) fail(Errc::internal, "a tour crosses every proper cut at least twice");
  if (!min_nontour) return std::nullopt;  // vacuous: min over an empty set is +infinity
  return Rat(*min_nontour - *max_tour);
}

VerifyOutcome verify_certificate(const MetricInstance& instance, const HamiltonianCycle& tour,
                                 const CutFamily& family) {
  VerifyOutcome outcome;
  CertificateReport laminar = check_laminar(family);
  CertificateReport coverage = check_coverage(instance, tour, family);
  outcome.report.failures = laminar.failures;
  outcome.report.failures.insert(outcome.report.failures.end(), coverage.failures.begin(),
                                 coverage.failures.end());

  std::optional<Rat> epsilon;
  bool margins_ok = true;
  for (const Cut& cut : family.cuts) {
    std::optional<Rat> margin = compute_margin(instance, tour, cut);
    if (!margin) continue;  // vacuously satisfied (n = 3)
    if (*margin <= 0) {
      margins_ok = false;
      outcome.report.failures.push_back(
          {"nonpositive-margin", "cut " + cut.str() + " has margin " + format_rational(*margin)});
      continue;
    }
    if (!epsilon || *margin < *epsilon) epsilon = margin;
  }

  outcome.report.verified = laminar.verified && coverage.verified && margins_ok;
  if (outcome.report.verified) {
    MarginCertificate certificate;
    certificate.tour = tour;
    certificate.family = family;
    certificate.family.laminar = true;
    certificate.epsilon = epsilon;
    outcome.certificate = std::move(certificate);
  }
  return outcome;
}

CutFamily interval_chain(const HamiltonianCycle& tour, const std::vector<std::vector<int>>& segments,
                         int root) {
  int n = tour.n();
  if (root < 0 || root >= n) fail(Errc::bad_config, "root vertex out of range");
  // Position of each vertex along the tour, measured from the root.
  std::vector<int> position(n, -1);
  int root_at = 0;
  for (int i = 0; i < n; ++i)
    if (tour.order()[i] == root) root_at = i;
  for (int i = 0; i < n; ++i) position[tour.order()[(root_at + i) % n]] = i;

  std::vector<bool> used(n, false);
  std::vector<Cut> cuts;
  std::vector<int> prefix;
  int previous_end = 0;
  for (std::size_t s = 0; s < segments.size(); ++s) {
    const std::vector<int>& segment = segments[s];
    if (segment.empty()) fail(Errc::bad_config, "segment " + std::to_string(s) + " is empty");
    std::vector<int> pos;
    for (int v : segment) {
      if (v < 0 || v >= n) fail(Errc::bad_config, "segment vertex " + std::to_string(v) + " out of range");
      if (v == root) fail(Errc::segment_contains_root, "segment " + std::to_string(s));
      if (used[v]) fail(Errc::segments_overlap, "vertex " + std::to_string(v) + " appears twice");
      used[v] = true;
      pos.push_back(position[v]);
    }
    std::sort(pos.begin(), pos.end());
    for (std::size_t i = 1; i < pos.size(); ++i)
      if (pos[i] != pos[i - 1] + 1)
        fail(Errc::segment_not_contiguous, "segment " + std::to_string(s));
    if (pos.front() <= previous_end)
      fail(Errc::segments_out_of_order,
           "segment " + std::to_string(s) + " does not follow its predecessor in tour order");
    previous_end = pos.back();
    for (int v : segment) prefix.push_back(v);
    cuts.emplace_back(n, prefix);
  }
  return make_family(std::move(cuts));
}

CutFamily repair_coverage(const MetricInstance& instance, const HamiltonianCycle& tour,
                          const CutFamily& family) {
  CutFamily repaired = family;
  int n = instance.n();
  for (int k = 0; k < edge_count(n); ++k) {
    EdgeId e = edge_at(n, k);
    if (tour.has_edge(e)) continue;
    bool covered = false;
    for (const Cut& cut : repaired.cuts)
      if (cut.crosses(e)) {
        covered = true;
        break;
      }
    if (!covered) repaired.cuts.emplace_back(n, std::vector<int>{e.u});
  }
  return make_family(std::move(repaired.cuts));
}

bool stability_check(const MetricInstance& original, const MarginCertificate& certificate,
                     const MetricInstance& perturbed) {
  Rat distance = linf_distance(original, perturbed);
  if (certificate.epsilon) {
    if (!(distance < *certificate.epsilon / 2)) return false;
  }
  VerifyOutcome reverified = verify_certificate(perturbed, certificate.tour, certificate.family);
  if (!reverified.report.verified)
    fail(Errc::internal, "perturbation within epsilon/2 must keep the certificate verified");
  if (certificate.epsilon) {
    Rat floor = *certificate.epsilon - distance * 2;
    const auto& new_eps = reverified.certificate->epsilon;
    if (new_eps && *new_eps < floor)
      fail(Errc::internal, "re-verified margin fell below epsilon - 2*distance");
  }
  return true;
}

std::vector<std::vector<int>> parse_segments_spec(const std::string& spec) {
  std::vector<std::vector<int>> segments;
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, ';')) {
    std::vector<int> segment;
    std::stringstream ps(part);
    std::string token;
    while (std::getline(ps, token, ',')) {
      if (token.empty()) fail(Errc::bad_config, "empty vertex token in segment spec");
      try {
        segment.push_back(std::stoi(token));
      } catch (const std::exception&) {
        fail(Errc::bad_config, "bad vertex token '" + token + "'");
      }
    }
    if (!segment.empty()) segments.push_back(std::move(segment));
  }
  if (segments.empty()) fail(Errc::bad_config, "segment spec is empty");
  return segments;
}

}  // namespace tsp2ec
