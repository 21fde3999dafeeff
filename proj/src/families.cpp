#include "ifam/families.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "ifam/errors.hpp"

namespace ifam {

Family complete_family(std::size_t k) {
  if (k < 2) throw Error(Errc::invalid_argument, "complete family needs k >= 2");
  const std::size_t n = 2 * k - 1;
  std::vector<std::vector<Vertex>> edges;
  std::vector<Vertex> combo(k);
  std::iota(combo.begin(), combo.end(), 0);
  while (true) {
    edges.push_back(combo);
    std::size_t i = k;
    while (i > 0 && combo[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++combo[i - 1];
    for (std::size_t j = i; j < k; ++j) combo[j] = combo[j - 1] + 1;
  }
  return Family(k, n, std::move(edges));
}

Family triangle() { return complete_family(2); }

std::uint64_t SplitMix64::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

SampledFamily random_subfamily(const Family& f, std::size_t m, std::uint64_t seed) {
  if (m > f.size()) throw Error(Errc::invalid_argument, "sample size exceeds family size");
  std::vector<std::size_t> order(f.size());
  std::iota(order.begin(), order.end(), 0);
  SplitMix64 rng(seed);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.next() % (f.size() - i));
    std::swap(order[i], order[j]);
  }
  order.resize(m);
  std::sort(order.begin(), order.end());
  std::vector<Edge> picked;
  picked.reserve(m);
  for (std::size_t idx : order) picked.push_back(f.edge(idx));

  SampledFamily out{f.derive(std::move(picked)), {}};
  if (!out.family.empty()) out.tau = covering_number(out.family);
  return out;
}

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  throw Error(Errc::parse_error, "line " + std::to_string(line) + ": " + what,
              static_cast<int>(line));
}

bool skippable(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

std::vector<std::uint64_t> read_numbers(const std::string& text, std::size_t line_no) {
  std::istringstream ss(text);
  std::vector<std::uint64_t> out;
  std::string token;
  while (ss >> token) {
    if (token.find_first_not_of("0123456789") != std::string::npos) {
      parse_fail(line_no, "'" + token + "' is not a non-negative integer");
    }
    try {
      out.push_back(std::stoull(token));
    } catch (const std::exception&) {
      parse_fail(line_no, "'" + token + "' is out of range");
    }
  }
  return out;
}

}  // namespace

Family parse_family(std::istream& in, std::vector<std::string>* warnings) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint64_t k = 0, n = 0, m = 0;
  std::vector<std::vector<std::uint64_t>> raw;
  std::vector<std::size_t> raw_lines;

  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    auto nums = read_numbers(line, line_no);
    if (!have_header) {
      if (nums.size() != 3) parse_fail(line_no, "header must be 'k n m'");
      k = nums[0];
      n = nums[1];
      m = nums[2];
      if (k == 0 || n == 0) parse_fail(line_no, "k and n must be positive");
      have_header = true;
      continue;
    }
    if (nums.size() != k) {
      parse_fail(line_no, "edge has " + std::to_string(nums.size()) + " vertices, expected " +
                              std::to_string(k));
    }
    for (auto label : nums) {
      if (label == 0) parse_fail(line_no, "labels are 1-based");
    }
    std::vector<std::uint64_t> sorted = nums;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      parse_fail(line_no, "edge repeats a vertex");
    }
    raw.push_back(std::move(nums));
    raw_lines.push_back(line_no);
  }
  if (!have_header) parse_fail(line_no + 1, "missing header");
  if (raw.size() != m) {
    parse_fail(line_no, "header announces " + std::to_string(m) + " edges, found " +
                            std::to_string(raw.size()));
  }

  std::uint64_t max_label = 0;
  for (const auto& e : raw) {
    for (auto label : e) max_label = std::max(max_label, label);
  }
  std::vector<std::uint64_t> labels;
  if (max_label <= n) {
    labels.resize(n);
    std::iota(labels.begin(), labels.end(), std::uint64_t{1});
  } else {
    std::set<std::uint64_t> distinct;
    for (const auto& e : raw) distinct.insert(e.begin(), e.end());
    labels.assign(distinct.begin(), distinct.end());
    if (warnings) {
      warnings->push_back("labels exceed n = " + std::to_string(n) + "; renumbered " +
                          std::to_string(labels.size()) + " distinct labels densely");
    }
  }

  std::vector<std::vector<Vertex>> edges;
  edges.reserve(raw.size());
  for (const auto& e : raw) {
    std::vector<Vertex> ids;
    for (auto label : e) {
      auto it = std::lower_bound(labels.begin(), labels.end(), label);
      ids.push_back(static_cast<Vertex>(it - labels.begin()));
    }
    edges.push_back(std::move(ids));
  }
  const std::size_t ground = labels.size();
  Family f(k, ground, std::move(edges), std::move(labels));
  if (f.duplicates_removed() > 0 && warnings) {
    warnings->push_back("removed " + std::to_string(f.duplicates_removed()) + " duplicate edge(s)");
  }
  return f;
}

Family load_family(const std::filesystem::path& path, std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse_error, "cannot open " + path.string());
  return parse_family(in, warnings);
}

std::string serialize_family(const Family& f) {
  std::ostringstream out;
  out << f.k() << ' ' << f.n() << ' ' << f.size() << '\n';
  for (const Edge& e : f.edges()) {
    bool first = true;
    for (Vertex v : e.vertices()) {
      if (!first) out << ' ';
      out << f.label(v);
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

void save_family(const Family& f, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::invalid_argument, "cannot write " + path.string());
  out << serialize_family(f);
}

}  // namespace ifam
