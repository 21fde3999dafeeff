#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace ifam {

using Vertex = std::uint32_t;

/// Fixed-width bitset over a ground set of `universe()` vertices.
///
/// Binary operations require both operands to share the same universe; this
/// is checked and reported as Errc::invalid_argument.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : bits_(universe) {}
  VertexSet(std::size_t universe, std::span<const Vertex> ids);
  VertexSet(std::size_t universe, std::initializer_list<Vertex> ids)
      : VertexSet(universe, std::span<const Vertex>(ids.begin(), ids.size())) {}

  std::size_t universe() const noexcept { return bits_.size(); }
  std::size_t size() const noexcept { return bits_.count(); }
  bool empty() const noexcept { return bits_.none(); }

  bool contains(Vertex v) const noexcept { return v < bits_.size() && bits_.test(v); }
  void insert(Vertex v);
  void erase(Vertex v);

  bool intersects(const VertexSet& other) const;
  bool is_subset_of(const VertexSet& other) const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);

  /// Members in ascending order.
  std::vector<Vertex> to_vector() const;

  friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.bits_ == b.bits_; }

 private:
  void require_same_universe(const VertexSet& other) const;

  boost::dynamic_bitset<std::uint64_t> bits_;
};

inline VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
inline VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
inline VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

}  // namespace ifam
