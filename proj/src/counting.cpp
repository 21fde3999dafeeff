#include "ifam/counting.hpp"

#include <atomic>
#include <string>
#include <vector>

#include "ifam/errors.hpp"
#include "ifam/parallel.hpp"

namespace ifam {

namespace mp = boost::multiprecision;

BigInt binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  BigInt result = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    // Exact at every step: result * (n - r + i) is divisible by i.
    result *= n - r + i;
    result /= i;
  }
  return result;
}

namespace {

BigInt ipow(std::uint64_t base, std::uint64_t exponent) {
  return mp::pow(BigInt(base), static_cast<unsigned>(exponent));
}

// base^exponent if it fits in the enumeration budget, otherwise 0.
std::uint64_t budgeted_power(std::uint64_t base, std::uint64_t exponent) {
  std::uint64_t p = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (base != 0 && p > kEnumerationBudget / base) return 0;
    p *= base;
  }
  return p <= kEnumerationBudget ? p : 0;
}

// Splits [k]^len on its first coordinate and counts, per slice, the tuples
// accepted by `keep`. The slices are summed in order.
template <typename Pred>
std::uint64_t enumerate_tuples(std::uint64_t k, std::uint64_t len, Pred keep) {
  if (len == 0) return keep(std::vector<std::uint64_t>{}) ? 1 : 0;
  std::vector<std::uint64_t> per_first(k, 0);
  parallel_for(k, [&](std::size_t first) {
    std::vector<std::uint64_t> tuple(len, 1);
    tuple[0] = first + 1;
    std::uint64_t count = 0;
    while (true) {
      if (keep(tuple)) ++count;
      std::size_t pos = len;
      while (pos > 1 && tuple[pos - 1] == k) {
        tuple[pos - 1] = 1;
        --pos;
      }
      if (pos == 1) break;
      ++tuple[pos - 1];
    }
    per_first[first] = count;
  });
  std::uint64_t total = 0;
  for (std::uint64_t c : per_first) total += c;
  return total;
}

bool pair_rule_holds(std::uint64_t k, std::uint64_t a, std::uint64_t b) {
  return !(3 * a > 2 * k && 3 * b <= k);
}

}  // namespace

BigInt count_monotone_sequences(std::uint64_t k, std::uint64_t t, CountMethod method) {
  if (k == 0) throw Error(Errc::invalid_argument, "k must be positive");
  if (method == CountMethod::formula) return binomial(k + t - 1, t);
  if (budgeted_power(k, t) == 0) {
    throw Error(Errc::budget_exceeded, "k^t exceeds the enumeration budget of " +
                                           std::to_string(kEnumerationBudget));
  }
  return enumerate_tuples(k, t, [](const std::vector<std::uint64_t>& tuple) {
    for (std::size_t i = 1; i < tuple.size(); ++i) {
      if (tuple[i] < tuple[i - 1]) return false;
    }
    return true;
  });
}

PairCount count_valid_pairs(std::uint64_t k) {
  if (k == 0) throw Error(Errc::invalid_argument, "k must be positive");
  PairCount pc;
  pc.u = k - (2 * k) / 3;
  pc.v = k / 3;
  pc.valid = k * k - pc.u * pc.v;
  return pc;
}

BigInt count_paired_sequences(std::uint64_t k, std::uint64_t t, CountMethod method) {
  if (k == 0) throw Error(Errc::invalid_argument, "k must be positive");
  if (t % 2 != 0) throw Error(Errc::odd_t, "paired strategy needs an even t");
  if (t > k) throw Error(Errc::invalid_argument, "paired strategy needs t <= k");
  if (method == CountMethod::formula) {
    return ipow(count_valid_pairs(k).valid, t / 2) * ipow(k, k - t);
  }
  if (budgeted_power(k, k) == 0) {
    throw Error(Errc::budget_exceeded, "k^k exceeds the enumeration budget of " +
                                           std::to_string(kEnumerationBudget));
  }
  return enumerate_tuples(k, k, [k, t](const std::vector<std::uint64_t>& tuple) {
    for (std::uint64_t i = 0; i + 1 < t; i += 2) {
      if (!pair_rule_holds(k, tuple[i], tuple[i + 1])) return false;
    }
    return true;
  });
}

Rational pair_estimate(std::uint64_t k) {
  const Rational kk(k);
  return Rational(8, 9) * kk * kk + Rational(4, 3) * kk - 4;
}

Real balanced_alpha(std::uint64_t k) {
  const Real ln_k = mp::log(Real(k));
  return Real(k) / (40 * ln_k * ln_k);
}

BoundsReport theorem_bounds(std::uint64_t k, const Real& alpha) {
  if (k < 2) throw Error(Errc::invalid_argument, "bounds need k >= 2");
  if (!(alpha > 0)) throw Error(Errc::invalid_argument, "alpha must be positive");

  BoundsReport r;
  r.k = k;
  r.alpha = alpha;
  r.ln_k = mp::log(Real(k));
  r.t_monotone = mp::floor(r.ln_k).convert_to<std::uint64_t>();
  r.t_paired = 20 * mp::floor(alpha * r.ln_k).convert_to<std::uint64_t>();
  r.t_paired_effective = std::min(r.t_paired, k - k % 2);

  r.el_bound = ipow(k, k);
  // t_monotone = floor(ln k) < k, so k - t never underflows.
  r.monotone_binomial = binomial(k + r.t_monotone - 1, r.t_monotone);
  r.monotone_space = r.monotone_binomial * ipow(k, k - r.t_monotone);
  r.monotone_ratio = Rational(r.monotone_space, r.el_bound);

  r.pairs = count_valid_pairs(k);
  r.pairs_estimate = pair_estimate(k);
  r.pairs_paper_limit = mp::exp(Real(-1) / 10) * Real(k) * Real(k);
  r.paired_space = count_paired_sequences(k, r.t_paired_effective);

  r.theorem_rhs = ipow(k, k - 1) + r.monotone_space;

  const Real kr(k);
  r.max_degree_small = 2 * mp::pow(kr, Real(2 * k) / 3);
  r.max_degree_large = mp::exp(Real(1)) * mp::pow(kr, kr - alpha);
  r.max_deg_bound = r.max_degree_small > r.max_degree_large ? r.max_degree_small
                                                             : r.max_degree_large;
  r.high_degree_threshold = r.ln_k * mp::pow(kr, Real(k) - 2);
  return r;
}

PairScan scan_pair_inequality(std::uint64_t k_max) {
  PairScan scan;
  scan.k_max = k_max;
  const Real limit_factor = mp::exp(Real(-1) / 10);
  bool holding = false;
  for (std::uint64_t k = 1; k <= k_max; ++k) {
    const PairCount pc = count_valid_pairs(k);
    const bool below = Real(pc.valid) < limit_factor * Real(k) * Real(k);
    if (below && scan.first_below == 0) scan.first_below = k;
    if (below && !holding) {
      scan.holds_from = k;
      holding = true;
    } else if (!below) {
      holding = false;
      scan.holds_from = 0;
    }
    // 9 * valid <= 8k^2 + 12k - 36, the estimate scaled to integers.
    if (k >= 6) {
      const std::int64_t lhs = 9 * static_cast<std::int64_t>(pc.valid);
      const std::int64_t kk = static_cast<std::int64_t>(k);
      if (lhs > 8 * kk * kk + 12 * kk - 36 && scan.estimate_dominates) {
        scan.estimate_dominates = false;
        scan.estimate_first_failure = k;
      }
    }
  }
  return scan;
}

DegreeClassification classify_degree_case(std::uint64_t k, std::uint64_t family_size,
                                          std::uint64_t max_degree, const Real& alpha) {
  if (k < 2) throw Error(Errc::invalid_argument, "classification needs k >= 2");
  DegreeClassification c;
  c.max_degree = max_degree;
  const Real ln_k = mp::log(Real(k));
  c.threshold = ln_k * mp::pow(Real(k), Real(k) - 2);
  c.kind = Real(max_degree) >= c.threshold ? DegreeCaseKind::high_degree
                                           : DegreeCaseKind::low_degree;
  c.max_degree_within_cap = BigInt(max_degree) <= ipow(k, k - 1);
  if (c.kind == DegreeCaseKind::low_degree) {
    c.spread_hypothesis = Real(max_degree) * 40 * alpha * ln_k <= Real(family_size);
  }
  return c;
}

}  // namespace ifam
