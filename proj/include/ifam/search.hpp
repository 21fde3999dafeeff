#pragma once

#include <cstdint>
#include <functional>

#include "ifam/family.hpp"

namespace ifam {

struct SearchResult {
  std::size_t k = 0;
  std::size_t n_max = 0;
  std::size_t best_size = 0;
  /// Empty when no family with covering number k exists on n_max vertices.
  Family witness;
  bool exhaustive = false;
  std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

/// Called every `progress_interval` nodes with (nodes, best_size).
using SearchProgress = std::function<void(std::uint64_t, std::size_t)>;

/// Largest k-uniform intersecting family with covering number k on the ground
/// set {0, ..., n_max-1}, by depth-first search over k-subsets in
/// lexicographic order.
///
/// Isomorph pruning: the first edge is {0, ..., k-1}, edges are added in
/// increasing order, and an edge may introduce new vertices only as the next
/// unused ids. Every isomorphism class has such a labeling (take the labeling
/// whose sorted edge list is lexicographically least), so nothing is lost.
/// A branch is cut when its size plus the count of later candidates meeting
/// every chosen edge cannot beat the best. The witness is the first family of
/// maximum size in search order. Results are labeled "on <= n_max vertices";
/// r(k) itself allows any ground set.
SearchResult max_family_size(std::size_t k, std::size_t n_max,
                             std::uint64_t node_budget = kDefaultNodeBudget,
                             const SearchProgress& progress = {},
                             std::uint64_t progress_interval = 1'000'000);

}  // namespace ifam
