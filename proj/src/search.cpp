#include "ifam/search.hpp"

#include <numeric>

#include "ifam/covering.hpp"
#include "ifam/errors.hpp"

namespace ifam {

namespace {

class ExtremalSearch {
 public:
  ExtremalSearch(std::size_t k, std::size_t n_max, std::uint64_t budget,
                 const SearchProgress& progress, std::uint64_t interval)
      : k_(k), n_(n_max), budget_(budget), progress_(progress), interval_(interval) {
    std::vector<Vertex> combo(k);
    std::iota(combo.begin(), combo.end(), 0);
    while (true) {
      candidates_.emplace_back(n_, combo);
      std::size_t i = k;
      while (i > 0 && combo[i - 1] == n_ - k + (i - 1)) --i;
      if (i == 0) break;
      ++combo[i - 1];
      for (std::size_t j = i; j < k; ++j) combo[j] = combo[j - 1] + 1;
    }
    // Each candidate's largest vertex, for the vertex-introduction rule.
    top_.reserve(candidates_.size());
    for (const Edge& e : candidates_) top_.push_back(e.vertices().back());
  }

  void run() {
    // candidates_[0] is {0, ..., k-1}.
    chosen_.push_back(0);
    std::vector<std::size_t> compat;
    for (std::size_t c = 1; c < candidates_.size(); ++c) {
      if (candidates_[c].set().intersects(candidates_[0].set())) compat.push_back(c);
    }
    descend(compat, k_);
  }

  bool exhausted() const { return exhausted_; }
  std::uint64_t nodes() const { return nodes_; }
  std::size_t best_size() const { return best_.size(); }

  Family witness() const {
    std::vector<std::vector<Vertex>> edges;
    for (std::size_t idx : best_) {
      const auto vs = candidates_[idx].vertices();
      edges.emplace_back(vs.begin(), vs.end());
    }
    return Family(k_, n_, std::move(edges));
  }

 private:
  // `used` = number of vertex ids introduced so far; they are exactly
  // {0, ..., used-1}.
  void descend(const std::vector<std::size_t>& compat, std::size_t used) {
    if (exhausted_) return;
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return;
    }
    if (progress_ && interval_ > 0 && nodes_ % interval_ == 0) progress_(nodes_, best_.size());

    if (chosen_.size() > best_.size() && has_full_cover_number()) best_ = chosen_;

    for (std::size_t pos = 0; pos < compat.size(); ++pos) {
      if (chosen_.size() + (compat.size() - pos) <= best_.size()) return;
      const std::size_t c = compat[pos];
      const Edge& e = candidates_[c];
      std::size_t next_used = used;
      if (!introduces_in_order(e, used, next_used)) continue;

      std::vector<std::size_t> next;
      next.reserve(compat.size() - pos - 1);
      for (std::size_t q = pos + 1; q < compat.size(); ++q) {
        if (candidates_[compat[q]].set().intersects(e.set())) next.push_back(compat[q]);
      }
      chosen_.push_back(c);
      descend(next, next_used);
      chosen_.pop_back();
      if (exhausted_) return;
    }
  }

  // Vertices >= used must be used, used+1, ... in that order.
  bool introduces_in_order(const Edge& e, std::size_t used, std::size_t& next_used) const {
    next_used = used;
    if (top_[&e - candidates_.data()] < used) return true;
    for (Vertex v : e.vertices()) {
      if (v < used) continue;
      if (v != next_used) return false;
      ++next_used;
    }
    return true;
  }

  bool has_full_cover_number() const {
    std::vector<Edge> edges;
    edges.reserve(chosen_.size());
    for (std::size_t idx : chosen_) edges.push_back(candidates_[idx]);
    Family f = Family(k_, n_, {}).derive(std::move(edges));
    return verify_tau_equals_k(f);
  }

  std::size_t k_;
  std::size_t n_;
  std::uint64_t budget_;
  const SearchProgress& progress_;
  std::uint64_t interval_;
  std::vector<Edge> candidates_;
  std::vector<Vertex> top_;
  std::vector<std::size_t> chosen_;
  std::vector<std::size_t> best_;
  bool exhausted_ = false;
  std::uint64_t nodes_ = 0;
};

}  // namespace

SearchResult max_family_size(std::size_t k, std::size_t n_max, std::uint64_t node_budget,
                             const SearchProgress& progress, std::uint64_t progress_interval) {
  if (k < 2) throw Error(Errc::invalid_argument, "search needs k >= 2");
  SearchResult result;
  result.k = k;
  result.n_max = n_max;
  if (n_max < k) {
    result.witness = Family(k, std::max<std::size_t>(n_max, 1), {});
    result.exhaustive = true;
    return result;
  }
  ExtremalSearch search(k, n_max, node_budget, progress, progress_interval);
  search.run();
  result.best_size = search.best_size();
  result.witness = search.best_size() > 0 ? search.witness() : Family(k, n_max, {});
  result.exhaustive = !search.exhausted();
  result.nodes = search.nodes();
  return result;
}

}  // namespace ifam
