#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ifam/family.hpp"

namespace ifam {

struct Extension {
  Vertex vertex = 0;
  std::size_t degree = 0;
  /// The edge of F disjoint from S whose vertices were the candidates.
  Edge source_edge;
};

/// One step of the degree-halving lemma: take the least edge f of `f` disjoint
/// from `s` and return the x in f maximizing deg_sub(s + x), smallest id on
/// ties. Guarantees degree >= ceil(deg_sub(s) / k) when f is intersecting
/// with covering number k and `sub` is a sub-family of it.
///
/// Throws Errc::invalid_argument if |s| >= k and Errc::no_disjoint_edge if `s`
/// covers `f`.
Extension greedy_extension(const Family& f, const Family& sub, const VertexSet& s);

struct ChainStep {
  Vertex vertex = 0;
  VertexSet set;
  std::size_t degree_within = 0;
  Edge source_edge;
};

struct GreedyChain {
  VertexSet start;
  std::size_t start_degree = 0;
  std::vector<ChainStep> steps;

  /// Vertices added, in chain order.
  std::vector<Vertex> added() const;
  const VertexSet& final_set() const { return steps.empty() ? start : steps.back().set; }
  std::size_t final_degree() const { return steps.empty() ? start_degree : steps.back().degree_within; }
};

/// Iterates greedy_extension from `start` until the set has `target_size`
/// vertices. Throws Errc::empty_chain if deg_sub(start) = 0 and propagates
/// Errc::no_disjoint_edge.
GreedyChain greedy_chain(const Family& f, const Family& sub, const VertexSet& start,
                         std::size_t target_size);

struct DegreeCase {
  std::vector<Vertex> set;
  std::size_t degree = 0;
};

struct DegreeBoundReport {
  bool precondition_ok = false;
  std::string precondition_failure;
  std::size_t u_max = 0;
  std::size_t sets_checked = 0;
  /// d(U) > k^(k-|U|). Expected empty.
  std::vector<DegreeCase> violations;
  /// d(U) == k^(k-|U|).
  std::vector<DegreeCase> tight;
};

/// Checks d(U) <= k^(k-|U|) for every U with 1 <= |U| <= u_max contained in
/// at least one edge (other sets have degree 0). Refuses, with
/// precondition_ok = false, unless `f` is intersecting with covering number k.
/// Lists are sorted by (|U|, U).
DegreeBoundReport check_degree_bound(const Family& f, std::size_t u_max);

}  // namespace ifam
