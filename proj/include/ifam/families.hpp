#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "ifam/covering.hpp"
#include "ifam/family.hpp"

namespace ifam {

/// All k-subsets of a (2k-1)-element ground set. Intersecting with covering
/// number k. Throws Errc::invalid_argument for k < 2.
Family complete_family(std::size_t k);

/// complete_family(2).
Family triangle();

/// SplitMix64. Fixed so that sampled fixtures are reproducible anywhere:
///   state += 0x9e3779b97f4a7c15
///   z = state; z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9
///   z = (z ^ (z >> 27)) * 0x94d049bb133111eb; return z ^ (z >> 31)
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();

 private:
  std::uint64_t state_;
};

struct SampledFamily {
  Family family;
  CoverCertificate tau;
};

/// m edges of `f` chosen by a Fisher-Yates prefix shuffle of the edge indices
/// driven by SplitMix64(seed): for i in [0, m), swap i with
/// i + next() % (|F| - i). The sample is returned in canonical order with its
/// covering number. Throws Errc::invalid_argument if m > |F|.
SampledFamily random_subfamily(const Family& f, std::size_t m, std::uint64_t seed);

/// Parses the .ifam text format: header `k n m`, then m lines of k labels.
/// Blank lines and lines starting with '#' are skipped. Labels in [1, n] map
/// to id = label - 1; if any label exceeds n, the distinct labels are
/// renumbered densely in numeric order and n becomes their count. Duplicate
/// edges are dropped with a warning. Throws Errc::parse_error with the line
/// number.
Family parse_family(std::istream& in, std::vector<std::string>* warnings = nullptr);
Family load_family(const std::filesystem::path& path, std::vector<std::string>* warnings = nullptr);

/// Canonical text: header, then one edge per line in canonical order, single
/// spaces, trailing newline.
std::string serialize_family(const Family& f);
void save_family(const Family& f, const std::filesystem::path& path);

}  // namespace ifam
