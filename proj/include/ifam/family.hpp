#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ifam/vertex_set.hpp"

namespace ifam {

/// A k-subset of the ground set: ascending vertex ids plus their bitset.
class Edge {
 public:
  Edge() = default;
  /// Sorts `vertices`; rejects duplicates and ids >= universe.
  Edge(std::size_t universe, std::vector<Vertex> vertices);

  std::span<const Vertex> vertices() const noexcept { return vertices_; }
  const VertexSet& set() const noexcept { return set_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  bool contains(Vertex v) const noexcept { return set_.contains(v); }

  friend bool operator==(const Edge& a, const Edge& b) { return a.vertices_ == b.vertices_; }
  friend auto operator<=>(const Edge& a, const Edge& b) { return a.vertices_ <=> b.vertices_; }

 private:
  std::vector<Vertex> vertices_;
  VertexSet set_;
};

/// Immutable k-uniform family in canonical form: edges sorted
/// lexicographically, duplicate-free, every vertex in [0, n).
///
/// Each dense id carries an external label (1-based by default) used only for
/// input and output.
class Family {
 public:
  Family() = default;
  /// Canonicalizes `edges`. Throws Errc::invalid_argument on a non-uniform edge
  /// and Errc::vertex_out_of_range on an id >= n. Duplicates are dropped and
  /// counted in duplicates_removed().
  Family(std::size_t k, std::size_t n, std::vector<std::vector<Vertex>> edges,
         std::vector<std::uint64_t> labels = {});

  std::size_t k() const noexcept { return k_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }
  std::size_t duplicates_removed() const noexcept { return duplicates_removed_; }

  std::span<const std::uint64_t> labels() const noexcept { return *labels_; }
  std::uint64_t label(Vertex v) const { return labels_->at(v); }
  /// Dense id of an external label, if the label belongs to the ground set.
  std::optional<Vertex> id_of_label(std::uint64_t label) const;

  std::optional<std::size_t> index_of(const Edge& e) const;
  bool contains(const Edge& e) const { return index_of(e).has_value(); }

  VertexSet make_set(std::span<const Vertex> ids) const { return VertexSet(n_, ids); }
  VertexSet make_set(std::initializer_list<Vertex> ids) const { return VertexSet(n_, ids); }
  Edge make_edge(std::vector<Vertex> vertices) const;

  /// New family over the same ground set and labels. `edges` must already be
  /// canonical (sorted, unique) members of this family's universe.
  Family derive(std::vector<Edge> edges) const;

  friend bool operator==(const Family& a, const Family& b) {
    return a.k_ == b.k_ && a.n_ == b.n_ && a.edges_ == b.edges_ && *a.labels_ == *b.labels_;
  }

 private:
  std::size_t k_ = 0;
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::shared_ptr<const std::vector<std::uint64_t>> labels_ =
      std::make_shared<const std::vector<std::uint64_t>>();
  std::size_t duplicates_removed_ = 0;
};

struct ValidationReport {
  bool is_uniform = true;
  bool is_intersecting = true;
  /// First disjoint pair (i < j) in canonical edge order.
  std::optional<std::pair<Edge, Edge>> witness;
  Vertex max_degree_vertex = 0;
  std::size_t max_degree = 0;
};

ValidationReport validate_family(const Family& f);

/// Number of edges of `f` containing `s`.
std::size_t degree(const Family& f, const VertexSet& s);
/// Number of edges of `within` containing `s`; `within` must be a sub-family
/// of `f` (same k and ground set).
std::size_t degree(const Family& f, const VertexSet& s, const Family& within);

/// {e in f : e contains `require`, e misses `avoid`}.
Family restrict(const Family& f, const VertexSet& require, const VertexSet& avoid);

/// Lexicographically least edge disjoint from `s`; absent iff `s` covers `f`.
std::optional<Edge> find_disjoint_edge(const Family& f, const VertexSet& s);

}  // namespace ifam
