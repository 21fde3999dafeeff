// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails. Each criterion also produces a JSON payload of its
// results (no timings) so the determinism check can compare runs across
// worker counts byte for byte.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "fixtures.hpp"
#include "ifam/codec.hpp"
#include "ifam/counting.hpp"
#include "ifam/covering.hpp"
#include "ifam/degree_lemmas.hpp"
#include "ifam/families.hpp"
#include "ifam/parallel.hpp"
#include "ifam/report.hpp"
#include "ifam/search.hpp"
#include "oracles.hpp"

using namespace ifam;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  Json payload;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail = what;
      pass = false;
    }
  }
};

struct Criterion {
  int id;
  const char* name;
  double limit_s;  // 0 = no runtime limit
  std::function<Outcome()> run;
};

BigInt ipow(std::uint64_t b, std::uint64_t e) { return boost::multiprecision::pow(BigInt(b), e); }

std::string codes_text(const Family& f, const std::vector<std::vector<std::size_t>>& codes) {
  std::string s;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    if (i) s += "; ";
    for (auto v : f.edge(i).vertices()) s += std::to_string(v);
    s += "->";
    for (auto w : codes[i]) s += std::to_string(w);
  }
  return s;
}

Outcome basic_codec() {
  Outcome o;
  const std::size_t expected_size[] = {0, 0, 3, 10, 35};
  for (std::size_t k = 2; k <= 4; ++k) {
    const Family f = complete_family(k);
    std::set<std::vector<std::size_t>> seen;
    std::vector<std::vector<std::size_t>> codes;
    for (const Edge& e : f.edges()) {
      const auto code = encode_basic(f, e).answers;
      bool in_range = code.size() == k;
      for (auto w : code) in_range = in_range && w >= 1 && w <= k;
      o.require(in_range, "code outside [k]^k for k=" + std::to_string(k));
      o.require(seen.insert(code).second, "repeated code for k=" + std::to_string(k));
      o.require(decode_basic(f, code) == e, "decode does not invert for k=" + std::to_string(k));
      codes.push_back(code);
    }
    const BigInt bound = ipow(k, k);
    o.require(f.size() == expected_size[k], "unexpected family size");
    o.require(BigInt(f.size()) <= bound, "|F| > k^k");
    o.payload[std::to_string(k)] = {{"size", f.size()}, {"k^k", to_decimal(bound)}, {"codes", codes}};
    if (k == 2) o.detail = "k=2 " + codes_text(f, codes);
  }
  if (o.pass) o.detail = "sizes 3, 10, 35 <= 4, 27, 256; " + o.detail;
  return o;
}

// Oracle count of sets U (1 <= |U| <= u_max, inside some edge) with
// d(U) > k^(k-|U|) and with equality.
std::pair<std::size_t, std::size_t> oracle_degree_cases(const Family& f, std::size_t u_max) {
  std::size_t over = 0, tight = 0;
  std::set<oracle::Set> seen;
  for (const auto& e : oracle::edges_of(f)) {
    const std::size_t k = e.size();
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
      oracle::Set u;
      for (std::size_t i = 0; i < k; ++i)
        if (mask >> i & 1) u.push_back(e[i]);
      if (u.size() > u_max || !seen.insert(u).second) continue;
      std::uint64_t bound = 1;
      for (std::size_t i = u.size(); i < k; ++i) bound *= k;
      const std::size_t d = oracle::degree(f, u);
      if (d > bound) ++over;
      if (d == bound) ++tight;
    }
  }
  return {over, tight};
}

Outcome degree_bound_suite() {
  Outcome o;
  std::size_t checked = 0, tight_total = 0;
  for (std::size_t k = 2; k <= 4; ++k) {
    const Family f = complete_family(k);
    const auto r = check_degree_bound(f, k);
    o.require(r.precondition_ok, "precondition refused on complete_family");
    o.require(r.violations.empty(), "violation on complete_family(" + std::to_string(k) + ")");
    std::size_t at_km1 = 0, at_k = 0;
    for (const auto& c : r.tight) {
      if (c.set.size() == k - 1) ++at_km1;
      if (c.set.size() == k) ++at_k;
    }
    // every (k-1)-set has degree k and every edge has degree 1
    o.require(at_km1 == oracle::subsets(2 * k - 1, k - 1).size(), "tight (k-1)-sets missed");
    o.require(at_k == f.size(), "tight k-sets missed");
    const auto [over, tight] = oracle_degree_cases(f, k);
    o.require(over == 0 && tight == r.tight.size(), "disagrees with the oracle");
    checked += r.sets_checked;
    tight_total += r.tight.size();
    o.payload["complete"].push_back(to_json(f, r));
  }
  const auto subs = fixtures::tau_k_subfamilies(50);
  for (const Family& f : subs) {
    o.require(oracle::naive_tau(f) == f.k(), "sampled family lost tau = k");
    const auto r = check_degree_bound(f, f.k());
    o.require(r.precondition_ok, "precondition refused on a sampled family");
    o.require(r.violations.empty(), "violation on a sampled family");
    const auto [over, tight] = oracle_degree_cases(f, f.k());
    o.require(over == 0 && tight == r.tight.size(), "disagrees with the oracle on a sampled family");
    checked += r.sets_checked;
    tight_total += r.tight.size();
    o.payload["sampled"].push_back({{"size", f.size()}, {"checked", r.sets_checked},
                                    {"tight", r.tight.size()}, {"violations", r.violations.size()}});
  }
  if (o.pass) {
    o.detail = "3 complete + " + std::to_string(subs.size()) + " sampled families, " +
               std::to_string(checked) + " sets, 0 violations, " + std::to_string(tight_total) +
               " tight";
  }
  return o;
}

Outcome extension_suite() {
  Outcome o;
  const auto pool = fixtures::tau_k_pool();
  const auto cases = fixtures::extension_cases(pool, 1000, 2024);
  std::size_t positive = 0;
  for (const auto& c : cases) {
    const std::size_t k = c.family->k();
    const std::size_t d = oracle::degree(c.sub, c.s.to_vector());
    const Extension ext = greedy_extension(*c.family, c.sub, c.s);
    oracle::Set grown = c.s.to_vector();
    grown.push_back(ext.vertex);
    o.require(ext.degree == oracle::degree(c.sub, grown), "returned degree is wrong");
    const std::size_t need = (d + k - 1) / k;
    o.require(ext.degree >= need, "degree below ceil(d(S)/k)");
    if (d > 0) ++positive;
    o.payload.push_back({d, ext.vertex, ext.degree});
  }
  if (o.pass) {
    o.detail = std::to_string(cases.size()) + " triples (" + std::to_string(positive) +
               " with d(S) > 0), all degree >= ceil(d(S)/k)";
  }
  return o;
}

Outcome monotone_suite() {
  Outcome o;
  const Family f = complete_family(3);
  const CodecParams p{Strategy::monotone, 1, 0};
  const auto r = verify_injectivity(f, p);
  o.require(r.family_size == 4 && r.encoded == 4, "not all 4 edges avoiding x encoded");
  o.require(r.codes_distinct, "codes collide");
  o.require(r.constraints_hold, "prefix not monotone");
  o.require(r.roundtrip_ok, "roundtrip failed");
  const BigInt space = count_monotone_sequences(3, 1) * ipow(3, 2);
  o.require(space == 27 && r.sequence_space_size == space, "space is not 27");
  o.require(BigInt(r.family_size) <= space, "4 > 27");
  const auto run = encode(f, f.make_edge({1, 2, 3}), p);
  o.require(run.code.answers == std::vector<std::size_t>{2, 2, 2}, "trace for {1,2,3} is not (2,2,2)");
  o.payload = {{"report", to_json(f, r)}, {"trace", to_json(f, run, true)}};
  if (o.pass) o.detail = "4 edges, distinct monotone codes, 4 <= 27, {1,2,3} -> (2,2,2)";
  return o;
}

Outcome paired_suite() {
  Outcome o;
  const Family f = complete_family(3);
  const CodecParams p{Strategy::paired, 2, 0};
  const auto r = verify_injectivity(f, p);
  o.require(r.family_size == 10 && r.encoded == 10, "not all 10 edges encoded");
  o.require(r.codes_distinct, "codes collide");
  o.require(r.roundtrip_ok, "roundtrip failed");
  for (const auto& [edge, code] : r.codes) {
    if (!code) continue;
    const auto& w = code->answers;
    o.require(!(3 * w[0] > 6) || 3 * w[1] > 3, "pair rule broken");
  }
  const BigInt space = count_paired_sequences(3, 2);
  o.require(space == 24, "count_paired_sequences(3,2) != 24");
  o.require(BigInt(r.family_size) <= space, "10 > 24");
  const auto run = encode(f, f.make_edge({2, 3, 4}), p);
  o.require(run.code.answers == std::vector<std::size_t>{3, 3, 3}, "trace for {2,3,4} is not (3,3,3)");
  o.payload = {{"report", to_json(f, r)}, {"trace", to_json(f, run, true)}};
  if (o.pass) o.detail = "10 edges, pair rule holds, 10 <= 24, {2,3,4} -> (3,3,3)";
  return o;
}

Outcome counting_suite() {
  Outcome o;
  std::size_t compared = 0;
  for (std::uint64_t k = 1; k <= 6; ++k) {
    for (std::uint64_t t = 0; t <= 4; ++t) {
      const BigInt formula = count_monotone_sequences(k, t);
      const BigInt enumerated = count_monotone_sequences(k, t, CountMethod::enumerate);
      const BigInt brute = oracle::count_nondecreasing(k, t);
      o.require(formula == enumerated && formula == brute,
                "monotone mismatch at k=" + std::to_string(k) + " t=" + std::to_string(t));
      o.payload["monotone"].push_back(to_decimal(formula));
      ++compared;
      if (t % 2 == 1 || t > k) continue;
      const BigInt pf = count_paired_sequences(k, t);
      const BigInt pe = count_paired_sequences(k, t, CountMethod::enumerate);
      const BigInt pb = oracle::count_paired(k, t);
      o.require(pf == pe && pf == pb,
                "paired mismatch at k=" + std::to_string(k) + " t=" + std::to_string(t));
      o.payload["paired"].push_back(to_decimal(pf));
      ++compared;
    }
  }
  o.require(binomial(103, 4) == 4421275, "C(103,4) != 4421275");
  o.require(count_monotone_sequences(100, 4) == 4421275, "count_monotone_sequences(100,4) != 4421275");
  if (o.pass) o.detail = std::to_string(compared) + " (k,t) cells agree three ways; C(103,4) = 4421275";
  return o;
}

Outcome pair_scan() {
  Outcome o;
  const auto scan = scan_pair_inequality(500);
  // Independent recomputation: brute pair count, long double threshold,
  // estimate compared in integers (9 valid <= 8k^2 + 12k - 36).
  std::uint64_t first_below = 0, estimate_failure = 0;
  bool holds_from_84 = true;
  const long double factor = std::exp(-0.1L);
  for (std::uint64_t k = 1; k <= 500; ++k) {
    const std::uint64_t v = oracle::count_valid_pairs(k);
    const bool below = static_cast<long double>(v) < factor * k * k;
    if (below && first_below == 0) first_below = k;
    if (k >= 84 && !below) holds_from_84 = false;
    if (k >= 6 && 9 * v > 8 * k * k + 12 * k - 36 && estimate_failure == 0) estimate_failure = k;
  }
  o.require(scan.first_below == first_below, "first crossing disagrees with the oracle");
  o.require(scan.first_below != 0, "no crossing found");
  o.require(estimate_failure == 0 && scan.estimate_dominates, "estimate fails to dominate");
  o.require(holds_from_84 && scan.holds_from <= 84, "inequality fails beyond 84");
  o.payload = to_json(scan);
  if (o.pass) {
    o.detail = "smallest k with valid_pairs(k) < e^(-1/10) k^2: " + std::to_string(scan.first_below) +
               "; holds for all k in [" + std::to_string(scan.holds_from) +
               ", 500]; (8/9)k^2 + 4k/3 - 4 dominates for 6 <= k <= 500";
  }
  return o;
}

Outcome covering_suite() {
  Outcome o;
  for (std::size_t k = 2; k <= 5; ++k) {
    const Family f = complete_family(k);
    const auto c = covering_number(f);
    o.require(c.is_minimum && c.size == k, "tau(complete_family) != k");
    o.require(is_cover(f, c.cover), "certificate is not a cover");
    if (k <= 4) o.require(oracle::naive_tau(f) == k, "naive enumeration disagrees");
    o.payload.push_back(to_json(f, c));
  }
  if (o.pass) o.detail = "tau = k for k = 2..5, naive enumeration agrees for k <= 4";
  return o;
}

Outcome extremal_suite() {
  Outcome o;
  const auto r2 = max_family_size(2, 5);
  o.require(r2.exhaustive && r2.best_size == 3, "max_family_size(2,5) != 3");
  const auto lower = static_cast<std::size_t>(std::floor(2.0 * (std::exp(1.0) - 1.0)));
  o.require(lower == 3, "floor(2!(e-1)) != 3");
  const auto r3 = max_family_size(3, 5);
  o.require(r3.best_size == 10 && r3.witness.size() == 10, "no 10-edge witness for k=3");
  o.require(validate_family(r3.witness).is_intersecting, "witness not intersecting");
  o.require(oracle::naive_tau(r3.witness) == 3, "witness tau != 3");
  o.payload = {{"k2", to_json(r2)}, {"k3", to_json(r3)}};
  if (o.pass) {
    o.detail = "k=2: 3 (exhaustive, " + std::to_string(r2.nodes) + " nodes); k=3: 10-edge witness" +
               (r3.exhaustive ? " (exhaustive)" : "");
  }
  return o;
}

Outcome bounds_suite() {
  Outcome o;
  const auto r = theorem_bounds(100, balanced_alpha(100));
  o.require(r.t_monotone == 4, "t_monotone != 4");
  o.require(r.monotone_ratio == Rational(BigInt(4421275), ipow(10, 8)), "ratio != C(103,4)/10^8");
  o.require(Rational(r.monotone_space, r.el_bound) == Rational(BigInt(4421275), ipow(10, 8)),
            "monotone_space/el_bound != C(103,4)/10^8");
  o.payload["k100"] = to_json(r);
  std::size_t checked = 0;
  for (std::uint64_t k = 2; k <= 200; ++k) {
    const auto b = theorem_bounds(k, balanced_alpha(k));
    const std::uint64_t t = b.t_monotone;
    const auto tag = " at k=" + std::to_string(k);
    o.require(t == static_cast<std::uint64_t>(std::floor(std::log(static_cast<double>(k)))),
              "t_monotone" + tag);
    o.require(b.el_bound == ipow(k, k), "el_bound" + tag);
    o.require(b.monotone_space == binomial(k + t - 1, t) * ipow(k, k - t), "monotone_space" + tag);
    o.require(b.monotone_space <= b.el_bound, "monotone_space > el_bound" + tag);
    o.require(b.paired_space <= b.el_bound, "paired_space > el_bound" + tag);
    const std::uint64_t tp = b.t_paired_effective;
    o.require(b.paired_space == ipow(b.pairs.valid, tp / 2) * ipow(k, k - tp), "paired_space" + tag);
    o.require(b.pairs.valid == oracle::count_valid_pairs(k), "valid_pairs" + tag);
    o.require(b.pairs.valid == k * k - b.pairs.u * b.pairs.v, "valid = k^2 - uv" + tag);
    o.require(b.theorem_rhs == ipow(k, k - 1) + b.monotone_space, "theorem_rhs" + tag);
    o.require(b.max_deg_bound == std::max(b.max_degree_small, b.max_degree_large), "max_deg_bound" + tag);
    o.payload["range"].push_back(to_decimal(b.monotone_space));
    ++checked;
  }
  if (o.pass) {
    o.detail = "k=100: t_monotone = 4, ratio = " + to_fraction(r.monotone_ratio) + "; invariants hold for " +
               std::to_string(checked) + " values of k";
  }
  return o;
}

std::vector<Criterion> criteria() {
  return {
      {1, "basic codec soundness", 1, basic_codec},
      {2, "degree bound suite", 10, degree_bound_suite},
      {3, "greedy extension suite", 10, extension_suite},
      {4, "monotone strategy", 0, monotone_suite},
      {5, "paired strategy", 0, paired_suite},
      {6, "counting oracle equivalence", 30, counting_suite},
      {7, "pair-count inequality", 0, pair_scan},
      {8, "covering solver", 30, covering_suite},
      {9, "extremal oracle", 60, extremal_suite},
      {10, "bound calculator", 5, bounds_suite},
  };
}

void print_line(bool pass, int id, const char* name, double seconds, double limit, const std::string& detail) {
  std::string time = std::to_string(seconds);
  time.resize(std::min<std::size_t>(time.size(), 5));
  std::cout << (pass ? "PASS" : "FAIL") << "  " << id << ". " << name << " [" << time << " s";
  if (limit > 0) std::cout << " < " << limit << " s";
  std::cout << "]: " << detail << "\n";
}

std::string run_all_payloads() {
  Json all;
  for (const auto& c : criteria()) all[std::to_string(c.id)] = c.run().payload;
  return all.dump();
}

}  // namespace

int main() {
  bool all_pass = true;
  for (const auto& c : criteria()) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0 && s >= c.limit_s) {
      o.pass = false;
      o.detail = "too slow; " + o.detail;
    }
    print_line(o.pass, c.id, c.name, s, c.limit_s, o.detail);
    all_pass = all_pass && o.pass;
  }

  {
    const auto start = std::chrono::steady_clock::now();
    const std::size_t many = std::max<std::size_t>(std::thread::hardware_concurrency(), 4);
    std::string detail;
    bool pass = false;
    try {
      set_worker_count(1);
      const std::string one = run_all_payloads();
      set_worker_count(many);
      const std::string multi = run_all_payloads();
      set_worker_count(0);
      pass = one == multi;
      detail = "workers 1 vs " + std::to_string(many) + ": " + std::to_string(one.size()) + " bytes, " +
               (pass ? "identical" : "different");
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    print_line(pass, 11, "determinism", s, 0, detail);
    all_pass = all_pass && pass;
  }
  return all_pass ? 0 : 1;
}
