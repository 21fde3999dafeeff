#include "ifam/covering.hpp"

#include <algorithm>
#include <vector>

#include "ifam/errors.hpp"

namespace ifam {

bool is_cover(const Family& f, const VertexSet& c) {
  return !find_disjoint_edge(f, c).has_value();
}

namespace {

class CoverSearch {
 public:
  CoverSearch(const Family& f, std::size_t best_bound)
      : edges_(f.edges()), chosen_(f.n()), best_size_(best_bound) {}

  void run() { descend(0); }

  std::uint64_t nodes() const { return nodes_; }
  bool found() const { return found_; }
  std::size_t best_size() const { return best_size_; }
  const VertexSet& best_cover() const { return best_; }

 private:
  // Covers of size >= best_size_ are never recorded, so the first call sees
  // best_size_ = limit + 1 and only strictly better covers update it.
  void descend(std::size_t depth) {
    ++nodes_;
    const Edge* uncovered = nullptr;
    for (const Edge& e : edges_) {
      if (!e.set().intersects(chosen_)) {
        uncovered = &e;
        break;
      }
    }
    if (uncovered == nullptr) {
      if (depth < best_size_) {
        best_size_ = depth;
        best_ = chosen_;
        found_ = true;
      }
      return;
    }
    if (depth + 1 >= best_size_) return;
    for (Vertex v : uncovered->vertices()) {
      chosen_.insert(v);
      descend(depth + 1);
      chosen_.erase(v);
      if (depth + 1 >= best_size_) return;
    }
  }

  std::span<const Edge> edges_;
  VertexSet chosen_;
  VertexSet best_;
  std::size_t best_size_;
  bool found_ = false;
  std::uint64_t nodes_ = 0;
};

}  // namespace

CoverCertificate covering_number(const Family& f, std::optional<std::size_t> upper_limit) {
  if (f.empty()) throw Error(Errc::invalid_argument, "covering number of an empty family");
  // Without a limit, the branch on uncovered edges always terminates within
  // min(n, m) picks.
  const std::size_t trivial = std::min(f.n(), f.size());
  const std::size_t limit = upper_limit ? std::min(*upper_limit, trivial) : trivial;

  CoverSearch search(f, limit + 1);
  search.run();

  CoverCertificate cert;
  cert.nodes_explored = search.nodes();
  if (search.found()) {
    cert.cover = search.best_cover();
    cert.size = search.best_size();
    cert.is_minimum = true;
  } else {
    cert.cover = VertexSet(f.n());
    cert.size = *upper_limit + 1;
    cert.is_minimum = false;
  }
  return cert;
}

bool verify_tau_equals_k(const Family& f) {
  const CoverCertificate cert = covering_number(f, f.k());
  return cert.is_minimum && cert.size == f.k();
}

}  // namespace ifam
