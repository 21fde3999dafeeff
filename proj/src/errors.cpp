#include "ifam/errors.hpp"

namespace ifam {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "invalid argument";
    case Errc::vertex_out_of_range: return "vertex out of range";
    case Errc::parse_error: return "parse error";
    case Errc::no_disjoint_edge: return "no disjoint edge";
    case Errc::empty_chain: return "empty chain";
    case Errc::no_extending_edges: return "no extending edges";
    case Errc::edge_not_in_family: return "edge not in family";
    case Errc::x_in_edge: return "x in edge";
    case Errc::no_disjoint_testing_edge: return "no disjoint testing edge";
    case Errc::strategy_infeasible: return "strategy infeasible";
    case Errc::invalid_code: return "invalid code";
    case Errc::odd_t: return "odd t";
    case Errc::budget_exceeded: return "enumeration budget exceeded";
    case Errc::not_intersecting: return "family not intersecting";
  }
  return "unknown";
}

}  // namespace ifam
