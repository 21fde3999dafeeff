#pragma once

#include <cstddef>
#include <cstdint>

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace ifam {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
/// 50 significant decimal digits.
using Real = boost::multiprecision::cpp_dec_float_50;
inline constexpr int kRealDigits = 50;

enum class CountMethod { formula, enumerate };

/// Largest k^t (monotone) or k^k (paired) the enumerate method will visit.
inline constexpr std::uint64_t kEnumerationBudget = 10'000'000;

BigInt binomial(std::uint64_t n, std::uint64_t r);

/// Non-decreasing sequences in [k]^t: C(k+t-1, t).
BigInt count_monotone_sequences(std::uint64_t k, std::uint64_t t,
                                CountMethod method = CountMethod::formula);

struct PairCount {
  std::uint64_t valid = 0;
  /// #{a in [k] : 3a > 2k}
  std::uint64_t u = 0;
  /// #{b in [k] : 3b <= k}
  std::uint64_t v = 0;
};

/// Pairs (a, b) in [k]^2 that do not have 3a > 2k together with 3b <= k.
PairCount count_valid_pairs(std::uint64_t k);

/// Sequences in [k]^k whose first t coordinates satisfy the pair rule on each
/// (odd, next) pair: valid^(t/2) * k^(k-t). Throws Errc::odd_t or
/// Errc::invalid_argument for t > k.
BigInt count_paired_sequences(std::uint64_t k, std::uint64_t t,
                              CountMethod method = CountMethod::formula);

/// Upper bound on the paired code space's pair count used in the asymptotic
/// argument: (8/9)k^2 + 4k/3 - 4, exact.
Rational pair_estimate(std::uint64_t k);

struct BoundsReport {
  std::uint64_t k = 0;
  Real alpha;
  Real ln_k;
  std::uint64_t t_monotone = 0;
  std::uint64_t t_paired = 0;
  /// t_paired capped at the largest even value <= k; paired_space uses this.
  std::uint64_t t_paired_effective = 0;
  BigInt el_bound;
  BigInt monotone_binomial;
  BigInt monotone_space;
  Rational monotone_ratio;  // monotone_space / el_bound
  PairCount pairs;
  Rational pairs_estimate;
  Real pairs_paper_limit;  // e^(-1/10) k^2
  BigInt paired_space;
  BigInt theorem_rhs;  // k^(k-1) + monotone_space
  Real max_degree_small;  // 2 k^(2k/3)
  Real max_degree_large;  // e k^(k-alpha)
  Real max_deg_bound;
  Real high_degree_threshold;  // (ln k) k^(k-2)
  int precision_digits = kRealDigits;
};

/// k / (40 ln^2 k), the choice of alpha that balances the two cases of the
/// main theorem.
Real balanced_alpha(std::uint64_t k);

/// Throws Errc::invalid_argument unless k >= 2 and alpha > 0.
BoundsReport theorem_bounds(std::uint64_t k, const Real& alpha);

struct PairScan {
  std::uint64_t k_max = 0;
  /// Smallest k with valid_pairs(k) < e^(-1/10) k^2, 0 if none.
  std::uint64_t first_below = 0;
  /// Smallest k0 such that the inequality holds for every k in [k0, k_max].
  std::uint64_t holds_from = 0;
  /// Every scanned k >= 6 had valid_pairs(k) <= (8/9)k^2 + 4k/3 - 4.
  bool estimate_dominates = true;
  std::uint64_t estimate_first_failure = 0;
};

PairScan scan_pair_inequality(std::uint64_t k_max);

enum class DegreeCaseKind { high_degree, low_degree };

struct DegreeClassification {
  DegreeCaseKind kind = DegreeCaseKind::low_degree;
  std::uint64_t max_degree = 0;
  Real threshold;                // (ln k) k^(k-2)
  bool max_degree_within_cap = true;  // Delta <= k^(k-1)
  /// Low-degree case only: Delta <= |F| / (40 alpha ln k).
  bool spread_hypothesis = false;
};

/// Case split of the main theorem for a family with the given size and
/// maximum degree.
DegreeClassification classify_degree_case(std::uint64_t k, std::uint64_t family_size,
                                          std::uint64_t max_degree, const Real& alpha);

}  // namespace ifam
