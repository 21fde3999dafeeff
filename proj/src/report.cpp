#include "ifam/report.hpp"

#include <sstream>

namespace ifam {

std::string to_decimal(const BigInt& v) { return v.str(); }

std::string to_decimal(const Real& v, int digits) {
  return v.str(digits, std::ios_base::scientific);
}

std::string to_fraction(const Rational& v) {
  return to_decimal(BigInt(boost::multiprecision::numerator(v))) + "/" +
         to_decimal(BigInt(boost::multiprecision::denominator(v)));
}

Json labels_json(const Family& f, std::span<const Vertex> ids) {
  Json out = Json::array();
  for (Vertex v : ids) out.push_back(f.label(v));
  return out;
}

Json labels_json(const Family& f, const VertexSet& s) { return labels_json(f, s.to_vector()); }

Json edge_json(const Family& f, const Edge& e) { return labels_json(f, e.vertices()); }

Json to_json(const Family& f, const ValidationReport& r) {
  Json j;
  j["k"] = f.k();
  j["n"] = f.n();
  j["edges"] = f.size();
  j["uniform"] = r.is_uniform;
  j["intersecting"] = r.is_intersecting;
  if (r.witness) {
    j["witness"] = Json::array({edge_json(f, r.witness->first), edge_json(f, r.witness->second)});
  } else {
    j["witness"] = nullptr;
  }
  j["max_degree"] = r.max_degree;
  j["max_degree_vertex"] = f.n() > 0 ? Json(f.label(r.max_degree_vertex)) : Json(nullptr);
  return j;
}

Json to_json(const Family& f, const CoverCertificate& c) {
  Json j;
  j["tau"] = c.size;
  j["cover"] = labels_json(f, c.cover);
  j["minimum"] = c.is_minimum;
  j["nodes"] = c.nodes_explored;
  return j;
}

namespace {

Json cases_json(const Family& f, const std::vector<DegreeCase>& cases) {
  Json out = Json::array();
  for (const auto& c : cases) out.push_back({{"set", labels_json(f, c.set)}, {"degree", c.degree}});
  return out;
}

}  // namespace

Json to_json(const Family& f, const DegreeBoundReport& r) {
  Json j;
  j["precondition_ok"] = r.precondition_ok;
  if (!r.precondition_ok) j["precondition_failure"] = r.precondition_failure;
  j["u_max"] = r.u_max;
  j["sets_checked"] = r.sets_checked;
  j["violations"] = cases_json(f, r.violations);
  j["tight"] = cases_json(f, r.tight);
  return j;
}

Json to_json(const Family& f, const CodecRun& run, bool with_trace) {
  Json j;
  j["strategy"] = strategy_name(run.code.params.strategy);
  if (run.code.params.strategy != Strategy::basic) j["t"] = run.code.params.t;
  if (run.code.params.strategy == Strategy::monotone) j["x"] = f.label(run.code.params.excluded);
  j["edge"] = edge_json(f, run.edge);
  j["code"] = run.code.answers;
  if (with_trace) {
    Json steps = Json::array();
    for (const TraceStep& s : run.trace) {
      Json st;
      st["step"] = s.index;
      st["kind"] = step_kind_name(s.kind);
      st["testing_edge"] = labels_json(f, s.testing_edge);
      st["answer"] = s.answer;
      st["identified"] = f.label(s.identified);
      st["V"] = labels_json(f, s.identified_set);
      if (s.kind == StepKind::chain) st["U"] = labels_json(f, s.non_vertices);
      if (s.pool_size) st["pool_size"] = *s.pool_size;
      if (s.next_pool_size) st["next_pool_size"] = *s.next_pool_size;
      if (s.size_bound) {
        st["size_bound"] = to_decimal(*s.size_bound, 12);
        st["size_bound_holds"] = s.size_bound_holds;
      }
      if (s.kind == StepKind::paired_first || s.kind == StepKind::paired_forced) {
        st["S"] = labels_json(f, s.chain_set);
      }
      if (s.kind == StepKind::paired_first) st["P"] = labels_json(f, s.forced);
      steps.push_back(std::move(st));
    }
    j["trace"] = std::move(steps);
  }
  return j;
}

Json to_json(const Family& f, const InjectivityReport& r) {
  Json j;
  j["family_size"] = r.family_size;
  j["encoded"] = r.encoded;
  j["codes_distinct"] = r.codes_distinct;
  j["constraints_hold"] = r.constraints_hold;
  j["roundtrip_ok"] = r.roundtrip_ok;
  j["space"] = to_decimal(r.sequence_space_size);
  j["bound_holds"] = r.bound_holds();
  j["passed"] = r.passed();
  Json failures = Json::array();
  for (const auto& fl : r.failures) {
    failures.push_back({{"edge", edge_json(f, fl.edge)}, {"reason", fl.reason}});
  }
  j["failures"] = std::move(failures);
  Json codes = Json::array();
  for (const auto& [edge, code] : r.codes) {
    codes.push_back({{"edge", edge_json(f, edge)},
                     {"code", code ? Json(code->answers) : Json(nullptr)}});
  }
  j["codes"] = std::move(codes);
  return j;
}

Json to_json(const BoundsReport& r) {
  Json j;
  j["k"] = r.k;
  j["alpha"] = to_decimal(r.alpha);
  j["ln_k"] = to_decimal(r.ln_k);
  j["precision_digits"] = r.precision_digits;
  j["t_monotone"] = r.t_monotone;
  j["t_paired"] = r.t_paired;
  j["t_paired_effective"] = r.t_paired_effective;
  j["el_bound"] = to_decimal(r.el_bound);
  j["monotone_binomial"] = to_decimal(r.monotone_binomial);
  j["monotone_space"] = to_decimal(r.monotone_space);
  j["monotone_ratio"] = to_fraction(r.monotone_ratio);
  j["valid_pairs"] = r.pairs.valid;
  j["pairs_u"] = r.pairs.u;
  j["pairs_v"] = r.pairs.v;
  j["pairs_estimate"] = to_fraction(r.pairs_estimate);
  j["pairs_limit"] = to_decimal(r.pairs_paper_limit);
  j["paired_space"] = to_decimal(r.paired_space);
  j["theorem_rhs"] = to_decimal(r.theorem_rhs);
  j["max_degree_small"] = to_decimal(r.max_degree_small);
  j["max_degree_large"] = to_decimal(r.max_degree_large);
  j["max_deg_bound"] = to_decimal(r.max_deg_bound);
  j["high_degree_threshold"] = to_decimal(r.high_degree_threshold);
  return j;
}

Json to_json(const PairScan& s) {
  return {{"k_max", s.k_max},
          {"first_below", s.first_below},
          {"holds_from", s.holds_from},
          {"estimate_dominates", s.estimate_dominates},
          {"estimate_first_failure", s.estimate_first_failure}};
}

Json to_json(const DegreeClassification& c) {
  Json j;
  j["case"] = c.kind == DegreeCaseKind::high_degree ? "high-degree" : "low-degree";
  j["max_degree"] = c.max_degree;
  j["threshold"] = to_decimal(c.threshold);
  j["max_degree_within_cap"] = c.max_degree_within_cap;
  if (c.kind == DegreeCaseKind::low_degree) j["spread_hypothesis"] = c.spread_hypothesis;
  return j;
}

Json to_json(const SearchResult& r) {
  Json j;
  j["k"] = r.k;
  j["n_max"] = r.n_max;
  j["best_size"] = r.best_size;
  j["exhaustive"] = r.exhaustive;
  j["nodes"] = r.nodes;
  Json edges = Json::array();
  for (const Edge& e : r.witness.edges()) edges.push_back(edge_json(r.witness, e));
  j["witness"] = std::move(edges);
  return j;
}

}  // namespace ifam
