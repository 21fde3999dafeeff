#pragma once

// Guesser strategies as deterministic edge codecs.
//
// A hidden edge e is identified by k questions. Question i shows a labeled
// testing edge (e^i_1, ..., e^i_k) and its answer is the least position whose
// vertex lies in e. Every choice the Guesser makes depends only on the family
// and on earlier answers, so the decoder replays the exact same testing edges
// from the answers alone. Free choices are resolved by the lexicographically
// least edge, labeled in ascending vertex order, except where a strategy fixes
// positions:
//
//   basic     every testing edge is the least edge missing the vertices
//             identified so far.
//   monotone  for questions 1..t the known non-vertices U come first, followed
//             by a greedy chain inside F_{i-1} = {f : f contains U, f misses V};
//             answers are then non-decreasing. x seeds U.
//   paired    for odd i <= t a greedy chain S of size floor(k/3) comes first,
//             then the vertices P forced by S, then the rest; an answer
//             3w > 2k is followed by an edge that also starts with S, which
//             forces 3w' > k on the next answer.
//
// Questions after t fall back to the basic rule.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ifam/counting.hpp"
#include "ifam/family.hpp"

namespace ifam {

enum class Strategy { basic, monotone, paired };

const char* strategy_name(Strategy s) noexcept;
std::optional<Strategy> parse_strategy(const std::string& name);

struct CodecParams {
  Strategy strategy = Strategy::basic;
  /// Length of the constrained prefix (monotone, paired).
  std::size_t t = 0;
  /// Vertex known to lie outside the hidden edge (monotone).
  Vertex excluded = 0;
};

std::size_t default_monotone_t(std::size_t k);
std::size_t default_paired_t(std::size_t k, const Real& alpha);

struct AnswerSequence {
  std::vector<std::size_t> answers;
  CodecParams params;

  friend bool operator==(const AnswerSequence& a, const AnswerSequence& b) {
    return a.answers == b.answers;
  }
};

enum class StepKind {
  basic,           // least edge missing V
  chain,           // monotone prefix question
  paired_first,    // odd paired question: S, then P, then the rest
  paired_forced,   // even paired question after 3w > 2k: S first, avoids the hit
  paired_free,     // even paired question otherwise
};

const char* step_kind_name(StepKind kind) noexcept;

/// Per-question state, in ground-set ids.
struct TraceStep {
  std::size_t index = 0;
  StepKind kind = StepKind::basic;
  std::vector<Vertex> testing_edge;  // position order
  std::size_t answer = 0;
  Vertex identified = 0;
  std::vector<Vertex> identified_set;  // V_i, ascending
  std::vector<Vertex> non_vertices;    // U_i in position order (monotone)
  /// Size of the pool the testing edge came from: F_{i-1}.
  std::optional<std::size_t> pool_size;
  /// |F_i| = |restrict(F, U_i, V_i)| after the answer (monotone).
  std::optional<std::size_t> next_pool_size;
  /// (ln k - i) k^(k - w_i) and whether |F_i| reaches it (monotone).
  std::optional<Real> size_bound;
  bool size_bound_holds = false;
  std::vector<Vertex> chain_set;  // S (paired)
  std::vector<Vertex> forced;     // P (paired)
};

struct CodecRun {
  AnswerSequence code;
  Edge edge;
  std::vector<TraceStep> trace;
};

/// Encodes `e`. Failures are Error with codes edge_not_in_family, x_in_edge,
/// no_disjoint_testing_edge, strategy_infeasible, not_intersecting, odd_t or
/// invalid_argument; Error::step() names the question.
CodecRun encode(const Family& f, const Edge& e, const CodecParams& params);

/// Replays the strategy from the answers. Throws Errc::invalid_code when the
/// answers are out of range, break the strategy's constraint, or do not lead
/// to an edge of `f`. Decoding is total on some codes encode never emits; see
/// is_canonical_code.
CodecRun decode(const Family& f, const AnswerSequence& code);

/// Decoding succeeds and re-encoding the result gives the same answers.
bool is_canonical_code(const Family& f, const AnswerSequence& code);

/// Structural constraint of the strategy on the answers: range [1, k], length
/// k, non-decreasing prefix (monotone, starting from 2 since x sits at
/// position 1), or the pair rule on (w_i, w_{i+1}) for odd i <= t (paired).
std::optional<std::string> check_constraints(const AnswerSequence& code, std::size_t k);

// Convenience wrappers matching each strategy's signature.
inline AnswerSequence encode_basic(const Family& f, const Edge& e) {
  return encode(f, e, {Strategy::basic, 0, 0}).code;
}
inline Edge decode_basic(const Family& f, const std::vector<std::size_t>& answers) {
  return decode(f, {answers, {Strategy::basic, 0, 0}}).edge;
}
AnswerSequence encode_monotone(const Family& f, Vertex x, const Edge& e,
                               std::optional<std::size_t> t = {});
Edge decode_monotone(const Family& f, Vertex x, const std::vector<std::size_t>& answers,
                     std::optional<std::size_t> t = {});
AnswerSequence encode_paired(const Family& f, const Edge& e, std::size_t t);
Edge decode_paired(const Family& f, const std::vector<std::size_t>& answers, std::size_t t);

/// P = vertices outside S lying in every edge of `sub` that contains S.
/// Throws Errc::no_extending_edges when no edge of `sub` contains S.
VertexSet compute_forced_vertices(const Family& f, const Family& sub, const VertexSet& s);

/// Size of the strategy's answer space: k^k, C(k+t-1, t) k^(k-t), or
/// valid_pairs^(t/2) k^(k-t).
BigInt sequence_space_size(std::size_t k, const CodecParams& params);

using EdgeFilter = std::function<bool(const Edge&)>;

struct InjectivityFailure {
  Edge edge;
  std::string reason;
};

struct InjectivityReport {
  std::size_t family_size = 0;  // edges passing the filter
  std::size_t encoded = 0;
  bool codes_distinct = true;
  bool constraints_hold = true;
  bool roundtrip_ok = true;
  std::vector<InjectivityFailure> failures;  // canonical edge order
  BigInt sequence_space_size;
  /// Codes in canonical edge order; absent where encoding failed.
  std::vector<std::pair<Edge, std::optional<AnswerSequence>>> codes;

  bool bound_holds() const { return BigInt(family_size) <= sequence_space_size; }
  bool passed() const { return failures.empty() && bound_holds(); }
};

/// Encodes every edge passing `filter` (for monotone the default filter keeps
/// edges missing x), then checks distinctness, constraints and round trips.
InjectivityReport verify_injectivity(const Family& f, const CodecParams& params,
                                     EdgeFilter filter = {});

}  // namespace ifam
