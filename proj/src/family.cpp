#include "ifam/family.hpp"

#include <algorithm>
#include <string>

#include "ifam/errors.hpp"

namespace ifam {

Edge::Edge(std::size_t universe, std::vector<Vertex> vertices)
    : vertices_(std::move(vertices)), set_(universe) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw Error(Errc::invalid_argument, "edge has a repeated vertex");
  }
  for (Vertex v : vertices_) set_.insert(v);
}

Family::Family(std::size_t k, std::size_t n, std::vector<std::vector<Vertex>> edges,
               std::vector<std::uint64_t> labels)
    : k_(k), n_(n) {
  if (k == 0) throw Error(Errc::invalid_argument, "uniformity k must be positive");
  if (labels.empty()) {
    labels.resize(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = i + 1;
  }
  if (labels.size() != n) throw Error(Errc::invalid_argument, "label map size differs from n");
  if (!std::is_sorted(labels.begin(), labels.end()) ||
      std::adjacent_find(labels.begin(), labels.end()) != labels.end()) {
    throw Error(Errc::invalid_argument, "labels must be strictly increasing");
  }
  labels_ = std::make_shared<const std::vector<std::uint64_t>>(std::move(labels));

  edges_.reserve(edges.size());
  for (auto& vs : edges) {
    if (vs.size() != k) {
      throw Error(Errc::invalid_argument, "edge of size " + std::to_string(vs.size()) +
                                              " in a " + std::to_string(k) + "-uniform family");
    }
    edges_.emplace_back(n, std::move(vs));
  }
  std::sort(edges_.begin(), edges_.end());
  auto last = std::unique(edges_.begin(), edges_.end());
  duplicates_removed_ = static_cast<std::size_t>(edges_.end() - last);
  edges_.erase(last, edges_.end());
}

std::optional<Vertex> Family::id_of_label(std::uint64_t label) const {
  auto it = std::lower_bound(labels_->begin(), labels_->end(), label);
  if (it == labels_->end() || *it != label) return std::nullopt;
  return static_cast<Vertex>(it - labels_->begin());
}

std::optional<std::size_t> Family::index_of(const Edge& e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

Edge Family::make_edge(std::vector<Vertex> vertices) const {
  if (vertices.size() != k_) {
    throw Error(Errc::invalid_argument, "edge must have exactly " + std::to_string(k_) + " vertices");
  }
  return Edge(n_, std::move(vertices));
}

Family Family::derive(std::vector<Edge> edges) const {
  Family out;
  out.k_ = k_;
  out.n_ = n_;
  out.edges_ = std::move(edges);
  out.labels_ = labels_;
  return out;
}

ValidationReport validate_family(const Family& f) {
  ValidationReport report;
  const auto edges = f.edges();
  for (const Edge& e : edges) {
    if (e.size() != f.k()) report.is_uniform = false;
  }
  for (std::size_t i = 0; i < edges.size() && !report.witness; ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (!edges[i].set().intersects(edges[j].set())) {
        report.is_intersecting = false;
        report.witness = std::make_pair(edges[i], edges[j]);
        break;
      }
    }
  }
  std::vector<std::size_t> deg(f.n(), 0);
  for (const Edge& e : edges) {
    for (Vertex v : e.vertices()) ++deg[v];
  }
  for (std::size_t v = 0; v < deg.size(); ++v) {
    if (deg[v] > report.max_degree) {
      report.max_degree = deg[v];
      report.max_degree_vertex = static_cast<Vertex>(v);
    }
  }
  return report;
}

namespace {

void require_ground_set(const Family& f, const VertexSet& s) {
  if (s.universe() != f.n()) {
    throw Error(Errc::vertex_out_of_range, "vertex set is not over the family's ground set");
  }
}

}  // namespace

std::size_t degree(const Family& f, const VertexSet& s) {
  require_ground_set(f, s);
  return static_cast<std::size_t>(std::count_if(
      f.edges().begin(), f.edges().end(), [&](const Edge& e) { return s.is_subset_of(e.set()); }));
}

std::size_t degree(const Family& f, const VertexSet& s, const Family& within) {
  if (within.k() != f.k() || within.n() != f.n()) {
    throw Error(Errc::invalid_argument, "sub-family does not share the family's k and ground set");
  }
  return degree(within, s);
}

Family restrict(const Family& f, const VertexSet& require, const VertexSet& avoid) {
  require_ground_set(f, require);
  require_ground_set(f, avoid);
  if (require.intersects(avoid)) {
    throw Error(Errc::invalid_argument, "require and avoid sets overlap");
  }
  std::vector<Edge> kept;
  for (const Edge& e : f.edges()) {
    if (require.is_subset_of(e.set()) && !e.set().intersects(avoid)) kept.push_back(e);
  }
  return f.derive(std::move(kept));
}

std::optional<Edge> find_disjoint_edge(const Family& f, const VertexSet& s) {
  require_ground_set(f, s);
  for (const Edge& e : f.edges()) {
    if (!e.set().intersects(s)) return e;
  }
  return std::nullopt;
}

}  // namespace ifam
