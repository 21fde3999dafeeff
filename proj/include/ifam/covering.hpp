#pragma once

#include <cstdint>
#include <optional>

#include "ifam/family.hpp"

namespace ifam {

struct CoverCertificate {
  VertexSet cover;
  /// |cover| when a cover was found; upper_limit + 1 when the search proved
  /// that no cover of size <= upper_limit exists (cover is then empty).
  std::size_t size = 0;
  bool is_minimum = false;
  std::uint64_t nodes_explored = 0;
};

bool is_cover(const Family& f, const VertexSet& c);

/// Exact covering number by branch-and-bound on the lexicographically least
/// uncovered edge, branching over its vertices in ascending order.
/// Throws Errc::invalid_argument on an empty family.
CoverCertificate covering_number(const Family& f, std::optional<std::size_t> upper_limit = {});

/// covering_number(f, k) == k. Since any edge of a nonempty intersecting
/// family is a cover, tau <= k always holds for the families this targets.
bool verify_tau_equals_k(const Family& f);

}  // namespace ifam
