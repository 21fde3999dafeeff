#include "ifam/degree_lemmas.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

#include "ifam/covering.hpp"
#include "ifam/errors.hpp"
#include "ifam/parallel.hpp"

namespace ifam {

Extension greedy_extension(const Family& f, const Family& sub, const VertexSet& s) {
  auto disjoint = find_disjoint_edge(f, s);
  if (!disjoint) {
    throw Error(Errc::no_disjoint_edge, "no edge disjoint from S; S already covers the family");
  }
  if (s.size() >= f.k()) {
    throw Error(Errc::invalid_argument, "greedy extension needs |S| < k");
  }
  Extension best{disjoint->vertices().front(), 0, *disjoint};
  bool first = true;
  for (Vertex x : disjoint->vertices()) {
    VertexSet grown = s;
    grown.insert(x);
    const std::size_t d = degree(f, grown, sub);
    if (first || d > best.degree) {
      best.vertex = x;
      best.degree = d;
      first = false;
    }
  }
  return best;
}

std::vector<Vertex> GreedyChain::added() const {
  std::vector<Vertex> out;
  out.reserve(steps.size());
  for (const auto& step : steps) out.push_back(step.vertex);
  return out;
}

GreedyChain greedy_chain(const Family& f, const Family& sub, const VertexSet& start,
                         std::size_t target_size) {
  if (start.size() > target_size || target_size > f.k()) {
    throw Error(Errc::invalid_argument, "greedy chain needs |S_start| <= target <= k");
  }
  GreedyChain chain;
  chain.start = start;
  chain.start_degree = degree(f, start, sub);
  if (chain.start_degree == 0) {
    throw Error(Errc::empty_chain, "starting set has degree 0 in the sub-family");
  }
  VertexSet current = start;
  while (current.size() < target_size) {
    Extension ext = greedy_extension(f, sub, current);
    current.insert(ext.vertex);
    chain.steps.push_back({ext.vertex, current, ext.degree, std::move(ext.source_edge)});
  }
  return chain;
}

namespace {

// k^e saturated to the size_t range; degrees never exceed |F| anyway.
std::size_t saturating_power(std::size_t base, std::size_t exponent) {
  boost::multiprecision::cpp_int p = boost::multiprecision::pow(
      boost::multiprecision::cpp_int(base), static_cast<unsigned>(exponent));
  const boost::multiprecision::cpp_int cap = std::numeric_limits<std::size_t>::max();
  return p > cap ? std::numeric_limits<std::size_t>::max() : p.convert_to<std::size_t>();
}

void subsets_of_size(std::span<const Vertex> items, std::size_t size,
                     std::vector<std::vector<Vertex>>& out) {
  std::vector<std::size_t> idx(size);
  std::iota(idx.begin(), idx.end(), 0);
  const std::size_t n = items.size();
  if (size > n) return;
  while (true) {
    std::vector<Vertex> subset;
    subset.reserve(size);
    for (std::size_t i : idx) subset.push_back(items[i]);
    out.push_back(std::move(subset));
    std::size_t i = size;
    while (i > 0 && idx[i - 1] == n - size + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

DegreeBoundReport check_degree_bound(const Family& f, std::size_t u_max) {
  DegreeBoundReport report;
  report.u_max = std::min(u_max, f.k());
  if (f.empty()) {
    report.precondition_failure = "family is empty";
    return report;
  }
  const ValidationReport validation = validate_family(f);
  if (!validation.is_intersecting) {
    report.precondition_failure = "family is not intersecting";
    return report;
  }
  const CoverCertificate cert = covering_number(f, f.k());
  if (!(cert.is_minimum && cert.size == f.k())) {
    report.precondition_failure =
        "covering number is " + std::to_string(cert.size) + ", not k = " + std::to_string(f.k());
    return report;
  }
  report.precondition_ok = true;

  std::vector<std::vector<Vertex>> candidates;
  for (std::size_t u = 1; u <= report.u_max; ++u) {
    for (const Edge& e : f.edges()) subsets_of_size(e.vertices(), u, candidates);
  }
  std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  report.sets_checked = candidates.size();

  std::vector<std::size_t> degrees(candidates.size());
  parallel_for(candidates.size(), [&](std::size_t i) {
    degrees[i] = degree(f, f.make_set(candidates[i]));
  });

  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const std::size_t bound = saturating_power(f.k(), f.k() - candidates[i].size());
    if (degrees[i] > bound) {
      report.violations.push_back({candidates[i], degrees[i]});
    } else if (degrees[i] == bound) {
      report.tight.push_back({candidates[i], degrees[i]});
    }
  }
  return report;
}

}  // namespace ifam
