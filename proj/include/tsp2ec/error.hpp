#pragma once

#include <stdexcept>
#include <string>

namespace tsp2ec {

enum class Errc {
  negative_cost,
  triangle_violation,
  asymmetric_input,
  bad_dimension,
  disconnected_graph,
  invalid_cut,
  dimension_mismatch,
  syntax_error,
  too_large,
  infeasible,
  no_nontour_crossing,
  not_interval_cut,
  too_few_nontour_edges,
  zero_lp_value,
  segments_overlap,
  segment_not_contiguous,
  segment_contains_root,
  segments_out_of_order,
  exhausted_resampling,
  bad_config,
  io_error,
  internal,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace tsp2ec
