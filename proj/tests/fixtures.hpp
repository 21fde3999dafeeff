#pragma once

#include <vector>

#include "ifam/covering.hpp"

#include "ifam/families.hpp"

namespace fixtures {

inline ifam::Family fano() {
  return ifam::Family(3, 7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
}

inline ifam::Family star2() { return ifam::Family(2, 4, {{0, 1}, {0, 2}, {0, 3}}); }

// complete_family(k) is critical: every (k-1)-set misses exactly one edge, so
// dropping any edge lowers the covering number. The two families below are
// intersecting with covering number k and have many removable edges, so
// random sub-families of them can keep covering number k.

/// 3-uniform, 6 vertices, 10 edges; each edge alone is removable.
inline ifam::Family loose3() {
  return ifam::Family(3, 6, {{0, 1, 2}, {0, 1, 3}, {0, 2, 4}, {0, 3, 5}, {0, 4, 5},
                             {1, 2, 5}, {1, 3, 4}, {1, 4, 5}, {2, 3, 4}, {2, 3, 5}});
}

/// 4-uniform, 8 vertices, 35 edges; 30 edges are individually removable.
inline ifam::Family loose4() {
  return ifam::Family(
      4, 8,
      {{0, 1, 2, 3}, {0, 1, 2, 4}, {0, 1, 2, 5}, {0, 1, 3, 4}, {0, 1, 3, 5}, {0, 1, 4, 7},
       {0, 1, 6, 7}, {0, 2, 3, 5}, {0, 2, 3, 6}, {0, 2, 4, 6}, {0, 2, 5, 7}, {0, 2, 6, 7},
       {0, 3, 4, 5}, {0, 3, 4, 6}, {0, 3, 4, 7}, {0, 3, 5, 6}, {0, 4, 5, 7}, {0, 5, 6, 7},
       {1, 2, 3, 5}, {1, 2, 3, 7}, {1, 2, 4, 5}, {1, 2, 4, 6}, {1, 3, 4, 7}, {1, 3, 5, 6},
       {1, 3, 6, 7}, {1, 4, 5, 6}, {1, 5, 6, 7}, {2, 3, 4, 6}, {2, 3, 4, 7}, {2, 3, 5, 7},
       {2, 3, 6, 7}, {2, 4, 5, 6}, {2, 4, 5, 7}, {3, 4, 5, 6}, {3, 4, 5, 7}});
}

/// Proper sub-families of loose3() / loose4() (alternating by seed) that keep
/// covering number k, drawn deterministically from seeds 1, 2, ...
inline std::vector<ifam::Family> tau_k_subfamilies(std::size_t count) {
  const ifam::Family parents[] = {loose3(), loose4()};
  std::vector<ifam::Family> out;
  for (std::uint64_t seed = 1; out.size() < count; ++seed) {
    const ifam::Family& parent = parents[seed % 2];
    const std::size_t m = parent.size() - 1 - seed % 3;
    auto sample = ifam::random_subfamily(parent, m, seed);
    if (sample.tau.is_minimum && sample.tau.size == parent.k()) out.push_back(std::move(sample.family));
  }
  return out;
}

/// Families with covering number k used as sources for randomized checks.
inline std::vector<ifam::Family> tau_k_pool() {
  std::vector<ifam::Family> pool = {ifam::triangle(), ifam::complete_family(3), ifam::complete_family(4),
                                    fano(), loose3(), loose4()};
  for (auto& f : tau_k_subfamilies(20)) pool.push_back(std::move(f));
  return pool;
}

struct ExtensionCase {
  const ifam::Family* family;
  ifam::Family sub;
  ifam::VertexSet s;
};

/// Random (family, sub-family, S) triples with |S| < k. Half of the sets S are
/// drawn inside an edge of the sub-family so that d(S) > 0, the rest are
/// arbitrary vertex sets.
inline std::vector<ExtensionCase> extension_cases(const std::vector<ifam::Family>& pool,
                                                  std::size_t count, std::uint64_t seed) {
  ifam::SplitMix64 rng(seed);
  std::vector<ExtensionCase> out;
  while (out.size() < count) {
    const ifam::Family& f = pool[rng.next() % pool.size()];
    const std::size_t m = 1 + rng.next() % f.size();
    ifam::Family sub = ifam::random_subfamily(f, m, rng.next()).family;
    const std::size_t size = rng.next() % f.k();
    ifam::VertexSet s(f.n());
    if (out.size() % 2 == 0) {
      const auto& verts = sub.edge(rng.next() % sub.size()).vertices();
      std::vector<ifam::Vertex> pick(verts.begin(), verts.end());
      for (std::size_t i = 0; i < size; ++i) {
        std::swap(pick[i], pick[i + rng.next() % (pick.size() - i)]);
        s.insert(pick[i]);
      }
    } else {
      while (s.size() < size) s.insert(static_cast<ifam::Vertex>(rng.next() % f.n()));
    }
    out.push_back({&f, std::move(sub), std::move(s)});
  }
  return out;
}

}  // namespace fixtures
