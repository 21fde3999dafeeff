#include <doctest.h>

#include "ifam/counting.hpp"
#include "ifam/errors.hpp"
#include "oracles.hpp"

using namespace ifam;

TEST_CASE("count_monotone_sequences") {
  CHECK(count_monotone_sequences(3, 2) == 6);
  CHECK(count_monotone_sequences(3, 2, CountMethod::enumerate) == 6);
  CHECK(count_monotone_sequences(7, 0) == 1);
  CHECK(count_monotone_sequences(7, 0, CountMethod::enumerate) == 1);
  CHECK(count_monotone_sequences(100, 4) == 4421275);
  CHECK_THROWS_AS(count_monotone_sequences(100, 4, CountMethod::enumerate), Error);
}

TEST_CASE("formula and enumeration agree with the brute oracle") {
  for (std::uint64_t k = 1; k <= 6; ++k) {
    for (std::uint64_t t = 0; t <= 4; ++t) {
      const auto expected = oracle::count_nondecreasing(k, t);
      CHECK(count_monotone_sequences(k, t) == expected);
      CHECK(count_monotone_sequences(k, t, CountMethod::enumerate) == expected);
      if (t % 2 == 0 && t <= k) {
        const auto paired = oracle::count_paired(k, t);
        CHECK(count_paired_sequences(k, t) == paired);
        CHECK(count_paired_sequences(k, t, CountMethod::enumerate) == paired);
      }
    }
  }
}

TEST_CASE("Pascal identity") {
  for (std::uint64_t k = 2; k <= 40; k += 3) {
    for (std::uint64_t t = 1; t <= 12; ++t) {
      CHECK(binomial(k + t - 1, t) == binomial(k + t - 2, t - 1) + binomial(k + t - 2, t));
    }
  }
}

TEST_CASE("count_valid_pairs") {
  auto p3 = count_valid_pairs(3);
  CHECK(p3.valid == 8);
  CHECK(p3.u == 1);
  CHECK(p3.v == 1);
  auto p1 = count_valid_pairs(1);
  CHECK(p1.valid == 1);
  CHECK(p1.u == 1);
  CHECK(p1.v == 0);
  auto p6 = count_valid_pairs(6);
  CHECK(p6.valid == 32);
  CHECK(p6.u == 2);
  CHECK(p6.v == 2);
  for (std::uint64_t k = 1; k <= 1000; ++k) {
    CHECK(count_valid_pairs(k).valid == oracle::count_valid_pairs(k));
  }
}

TEST_CASE("count_paired_sequences") {
  CHECK(count_paired_sequences(3, 2) == 24);
  CHECK(count_paired_sequences(3, 0) == 27);
  CHECK(count_paired_sequences(6, 2) == 41472);
  try {
    count_paired_sequences(4, 1);
    FAIL("odd t accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::odd_t);
  }
}

TEST_CASE("theorem_bounds") {
  SUBCASE("k = 3") {
    const auto r = theorem_bounds(3, Real(1));
    CHECK(r.t_monotone == 1);
    CHECK(r.el_bound == 27);
    CHECK(r.monotone_space == 27);
    CHECK(r.theorem_rhs == 36);
  }
  SUBCASE("k = 2") {
    const auto r = theorem_bounds(2, Real(1));
    CHECK(r.t_monotone == 0);
    CHECK(r.monotone_space == 4);
  }
  SUBCASE("k = 100 with the balanced alpha") {
    const auto r = theorem_bounds(100, balanced_alpha(100));
    CHECK(r.t_monotone == 4);
    CHECK(r.monotone_binomial == 4421275);
    CHECK(r.monotone_ratio == Rational(4421275, 100000000));
    CHECK(abs(r.alpha - Real("0.11788231063225870576")) < Real("1e-18"));
  }
  CHECK_THROWS_AS(theorem_bounds(1, Real(1)), Error);
  CHECK_THROWS_AS(theorem_bounds(5, Real(0)), Error);
}

TEST_CASE("report invariants over a range of k") {
  for (std::uint64_t k = 2; k <= 200; ++k) {
    const auto r = theorem_bounds(k, balanced_alpha(k));
    CHECK(r.monotone_space <= r.el_bound);
    CHECK(r.paired_space <= r.el_bound);
    CHECK(r.pairs.valid == k * k - r.pairs.u * r.pairs.v);
    // C(k, 1) k^(k-1) = k^k, so the saving starts at t = 2.
    if (r.t_monotone == 1) CHECK(r.monotone_space == r.el_bound);
    if (r.t_monotone >= 2) CHECK(r.monotone_space < r.el_bound);
  }
  // t_paired above k is capped for the paired space
  const auto big = theorem_bounds(10, Real(5));
  CHECK(big.t_paired == 220);
  CHECK(big.t_paired_effective == 10);
  CHECK(big.paired_space == boost::multiprecision::pow(BigInt(count_valid_pairs(10).valid), 5));
}

TEST_CASE("pair inequality scan") {
  const auto scan = scan_pair_inequality(500);
  CHECK(scan.first_below == 3);
  CHECK(scan.holds_from == 9);
  CHECK(scan.estimate_dominates);
  const Real limit = boost::multiprecision::exp(Real(-1) / 10);
  for (std::uint64_t k = 84; k <= 500; ++k) {
    CHECK(Real(count_valid_pairs(k).valid) < limit * Real(k * k));
  }
}

TEST_CASE("classify_degree_case") {
  const auto high = classify_degree_case(3, 10, 6, Real(1));
  // (ln 3) * 3 = 3.29..., 6 >= it
  CHECK(high.kind == DegreeCaseKind::high_degree);
  CHECK(high.max_degree_within_cap);  // 6 <= 9
  const auto low = classify_degree_case(3, 10, 3, Real("0.01"));
  CHECK(low.kind == DegreeCaseKind::low_degree);
  CHECK(low.spread_hypothesis);  // 3 * 40 * 0.01 * 1.0986 = 1.32 <= 10
}
