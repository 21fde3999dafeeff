#pragma once

#include <stdexcept>
#include <string>

namespace ifam {

enum class Errc {
  invalid_argument,
  vertex_out_of_range,
  parse_error,
  no_disjoint_edge,
  empty_chain,
  no_extending_edges,
  edge_not_in_family,
  x_in_edge,
  no_disjoint_testing_edge,
  strategy_infeasible,
  invalid_code,
  odd_t,
  budget_exceeded,
  not_intersecting,
};

const char* errc_name(Errc code) noexcept;

// Single exception type for the library. `step` carries the question index
// for codec failures and the line number for parse errors (0 when unused).
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, int step = 0)
      : std::runtime_error(what), code_(code), step_(step) {}

  Errc code() const noexcept { return code_; }
  int step() const noexcept { return step_; }

 private:
  Errc code_;
  int step_;
};

}  // namespace ifam
