#include "ifam/vertex_set.hpp"

#include <string>

#include "ifam/errors.hpp"

namespace ifam {

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> ids) : bits_(universe) {
  for (Vertex v : ids) insert(v);
}

void VertexSet::insert(Vertex v) {
  if (v >= bits_.size()) {
    throw Error(Errc::vertex_out_of_range,
                "vertex " + std::to_string(v) + " outside ground set of size " +
                    std::to_string(bits_.size()));
  }
  bits_.set(v);
}

void VertexSet::erase(Vertex v) {
  if (v < bits_.size()) bits_.reset(v);
}

void VertexSet::require_same_universe(const VertexSet& other) const {
  if (other.bits_.size() != bits_.size()) {
    throw Error(Errc::invalid_argument, "vertex sets over different ground sets");
  }
}

bool VertexSet::intersects(const VertexSet& other) const {
  require_same_universe(other);
  return bits_.intersects(other.bits_);
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  require_same_universe(other);
  return bits_.is_subset_of(other.bits_);
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  require_same_universe(other);
  bits_ |= other.bits_;
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  require_same_universe(other);
  bits_ &= other.bits_;
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  require_same_universe(other);
  bits_ -= other.bits_;
  return *this;
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(bits_.count());
  for (auto i = bits_.find_first(); i != decltype(bits_)::npos; i = bits_.find_next(i)) {
    out.push_back(static_cast<Vertex>(i));
  }
  return out;
}

}  // namespace ifam
