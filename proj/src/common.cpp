#include <cctype>
#include <cstring>

#include "tsp2ec/error.hpp"
#include "tsp2ec/prng.hpp"
#include "tsp2ec/rational.hpp"

namespace tsp2ec {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::negative_cost: return "NegativeCost";
    case Errc::triangle_violation: return "TriangleViolation";
    case Errc::asymmetric_input: return "AsymmetricInput";
    case Errc::bad_dimension: return "BadDimension";
    case Errc::disconnected_graph: return "DisconnectedGraph";
    case Errc::invalid_cut: return "InvalidCut";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::syntax_error: return "SyntaxError";
    case Errc::too_large: return "TooLarge";
    case Errc::infeasible: return "Infeasible";
    case Errc::no_nontour_crossing: return "NoNonTourCrossing";
    case Errc::not_interval_cut: return "NotIntervalCut";
    case Errc::too_few_nontour_edges: return "TooFewNonTourEdges";
    case Errc::zero_lp_value: return "ZeroLpValue";
    case Errc::segments_overlap: return "SegmentsOverlap";
    case Errc::segment_not_contiguous: return "SegmentNotContiguous";
    case Errc::segment_contains_root: return "SegmentContainsRoot";
    case Errc::segments_out_of_order: return "SegmentsOutOfOrder";
    case Errc::exhausted_resampling: return "ExhaustedResampling";
    case Errc::bad_config: return "BadConfig";
    case Errc::io_error: return "IoError";
    case Errc::internal: return "Internal";
  }
  return "Unknown";
}

std::optional<Rat> parse_rational(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::size_t pos = 0;
  if (text[pos] == '-') ++pos;
  std::size_t digits = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    ++pos;
    ++digits;
  }
  if (digits == 0) return std::nullopt;
  std::string num = text.substr(0, pos);
  std::string den = "1";
  if (pos < text.size()) {
    if (text[pos] != '/') return std::nullopt;
    ++pos;
    std::size_t den_start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == den_start || pos != text.size()) return std::nullopt;
    den = text.substr(den_start, pos - den_start);
  }
  Int p(num), q(den);
  if (q == 0) return std::nullopt;
  Rat r(p, q);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rat& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_str();
}

double approx(const Rat& value) { return value.get_d(); }

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  // Unbiased via rejection.
  std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % bound);
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return x % bound;
}

long SplitMix64::range(long lo, long hi) {
  return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

Rat SplitMix64::rational_in(const Rat& lo, const Rat& hi, unsigned denominator_bound) {
  if (denominator_bound == 0) denominator_bound = 1;
  long q = range(1, static_cast<long>(denominator_bound));
  // p/q in [lo, hi]: p in [ceil(lo*q), floor(hi*q)].
  Rat lo_q = lo * q;
  Rat hi_q = hi * q;
  Int p_lo, p_hi;
  mpz_cdiv_q(p_lo.get_mpz_t(), lo_q.get_num().get_mpz_t(), lo_q.get_den().get_mpz_t());
  mpz_fdiv_q(p_hi.get_mpz_t(), hi_q.get_num().get_mpz_t(), hi_q.get_den().get_mpz_t());
  if (p_hi < p_lo) {
    Rat mid = lo;  // interval too narrow for this denominator; fall back
    return mid;
  }
  Int span = p_hi - p_lo + 1;
  Int offset = static_cast<unsigned long>(below(span.get_ui()));
  Rat r(p_lo + offset, Int(q));
  r.canonicalize();
  return r;
}

std::uint64_t fnv1a64(const void* data, std::size_t size) {
  const unsigned char* bytes = static_cast<const unsigned char*>(data);
  std::uint64_t h = 1469598103934665603ULL;
  for (std::size_t i = 0; i < size; ++i) {
    h ^= bytes[i];
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex64(std::uint64_t value) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[value & 0xf];
    value >>= 4;
  }
  return out;
}

}  // namespace tsp2ec
