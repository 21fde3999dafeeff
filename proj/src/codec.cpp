#include "ifam/codec.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "ifam/degree_lemmas.hpp"
#include "ifam/errors.hpp"
#include "ifam/parallel.hpp"

namespace ifam {

namespace mp = boost::multiprecision;

const char* strategy_name(Strategy s) noexcept {
  switch (s) {
    case Strategy::basic: return "basic";
    case Strategy::monotone: return "monotone";
    case Strategy::paired: return "paired";
  }
  return "unknown";
}

std::optional<Strategy> parse_strategy(const std::string& name) {
  if (name == "basic") return Strategy::basic;
  if (name == "monotone") return Strategy::monotone;
  if (name == "paired") return Strategy::paired;
  return std::nullopt;
}

const char* step_kind_name(StepKind kind) noexcept {
  switch (kind) {
    case StepKind::basic: return "basic";
    case StepKind::chain: return "chain";
    case StepKind::paired_first: return "paired-first";
    case StepKind::paired_forced: return "paired-forced";
    case StepKind::paired_free: return "paired-free";
  }
  return "unknown";
}

std::size_t default_monotone_t(std::size_t k) {
  if (k < 2) return 0;
  return mp::floor(mp::log(Real(k))).convert_to<std::size_t>();
}

std::size_t default_paired_t(std::size_t k, const Real& alpha) {
  if (k < 2) return 0;
  return 20 * mp::floor(alpha * mp::log(Real(k))).convert_to<std::size_t>();
}

VertexSet compute_forced_vertices(const Family& f, const Family& sub, const VertexSet& s) {
  if (sub.k() != f.k() || sub.n() != f.n()) {
    throw Error(Errc::invalid_argument, "sub-family does not share the family's k and ground set");
  }
  bool any = false;
  VertexSet common(f.n());
  for (const Edge& e : sub.edges()) {
    if (!s.is_subset_of(e.set())) continue;
    if (!any) {
      common = e.set();
      any = true;
    } else {
      common &= e.set();
    }
  }
  if (!any) throw Error(Errc::no_extending_edges, "no edge of the sub-family contains S");
  return common - s;
}

namespace {

enum class Mode { encode, decode };

std::vector<Vertex> ascending_except(std::span<const Vertex> edge, const VertexSet& skip) {
  std::vector<Vertex> out;
  for (Vertex v : edge) {
    if (!skip.contains(v)) out.push_back(v);
  }
  return out;
}

// Shared replay of a strategy. In encode mode answers come from the hidden
// edge; in decode mode they are read from the code. Testing edges depend only
// on the family and earlier answers, which is what makes the decoder exact.
class Replay {
 public:
  Replay(const Family& f, const CodecParams& params, Mode mode, const Edge* hidden,
         const std::vector<std::size_t>* answers)
      : f_(f), params_(params), mode_(mode), hidden_(hidden), answers_(answers),
        identified_(f.n()) {}

  CodecRun run() {
    switch (params_.strategy) {
      case Strategy::basic: run_basic_from(1); break;
      case Strategy::monotone: run_monotone(); break;
      case Strategy::paired: run_paired(); break;
    }
    CodecRun out;
    out.code.params = params_;
    out.code.answers = given_;
    out.trace = std::move(trace_);
    std::vector<Vertex> vs = identified_.to_vector();
    if (vs.size() != f_.k()) fail(Errc::invalid_code, "replay did not identify k vertices", 0);
    out.edge = f_.make_edge(std::move(vs));
    if (mode_ == Mode::decode && !f_.contains(out.edge)) {
      fail(Errc::invalid_code, "identified vertices do not form an edge of the family", 0);
    }
    if (mode_ == Mode::encode && out.edge != *hidden_) {
      fail(Errc::not_intersecting, "identified vertices differ from the hidden edge", 0);
    }
    return out;
  }

 private:
  [[noreturn]] void fail(Errc code, const std::string& what, std::size_t step) const {
    // A decoder asked to follow an impossible path is looking at a bad code.
    if (mode_ == Mode::decode && code == Errc::no_disjoint_testing_edge) code = Errc::invalid_code;
    std::string msg = what;
    if (step > 0) msg += " (question " + std::to_string(step) + ")";
    throw Error(code, msg, static_cast<int>(step));
  }

  std::size_t k() const { return f_.k(); }

  // Poses a question and records the identified vertex.
  TraceStep& ask(std::size_t step, StepKind kind, std::vector<Vertex> labeled) {
    std::size_t answer = 0;
    if (mode_ == Mode::encode) {
      for (std::size_t p = 0; p < labeled.size(); ++p) {
        if (hidden_->contains(labeled[p])) {
          answer = p + 1;
          break;
        }
      }
      if (answer == 0) fail(Errc::not_intersecting, "testing edge misses the hidden edge", step);
    } else {
      answer = (*answers_)[step - 1];
    }
    const Vertex hit = labeled[answer - 1];
    if (identified_.contains(hit)) fail(Errc::invalid_code, "vertex identified twice", step);
    identified_.insert(hit);
    given_.push_back(answer);

    TraceStep ts;
    ts.index = step;
    ts.kind = kind;
    ts.testing_edge = std::move(labeled);
    ts.answer = answer;
    ts.identified = hit;
    ts.identified_set = identified_.to_vector();
    trace_.push_back(std::move(ts));
    return trace_.back();
  }

  void basic_step(std::size_t step) {
    auto next = find_disjoint_edge(f_, identified_);
    if (!next) {
      fail(Errc::no_disjoint_testing_edge, "identified vertices already cover the family", step);
    }
    const auto vs = next->vertices();
    ask(step, StepKind::basic, std::vector<Vertex>(vs.begin(), vs.end()));
  }

  void run_basic_from(std::size_t first) {
    for (std::size_t i = first; i <= k(); ++i) basic_step(i);
  }

  void run_monotone() {
    const Vertex x = params_.excluded;
    if (x >= f_.n()) throw Error(Errc::vertex_out_of_range, "excluded vertex outside ground set");
    if (mode_ == Mode::encode && hidden_->contains(x)) {
      throw Error(Errc::x_in_edge, "the excluded vertex lies in the edge");
    }
    const Real ln_k = mp::log(Real(k()));
    std::vector<Vertex> non_vertices{x};
    std::size_t previous = 2;
    for (std::size_t i = 1; i <= params_.t; ++i) {
      const VertexSet u_set = f_.make_set(non_vertices);
      const Family pool = restrict(f_, u_set, identified_);
      if (pool.empty()) fail(Errc::strategy_infeasible, "F_{i-1} is empty", i);
      GreedyChain chain;
      try {
        chain = greedy_chain(f_, pool, u_set, k());
      } catch (const Error& err) {
        fail(Errc::strategy_infeasible, err.what(), i);
      }
      if (chain.final_degree() == 0) fail(Errc::strategy_infeasible, "greedy chain died", i);

      std::vector<Vertex> labeled = non_vertices;
      for (Vertex v : chain.added()) labeled.push_back(v);
      if (mode_ == Mode::decode && (*answers_)[i - 1] < previous) {
        fail(Errc::invalid_code, "answer below the known non-vertex prefix", i);
      }
      TraceStep& ts = ask(i, StepKind::chain, labeled);
      if (ts.answer < previous) {
        fail(Errc::not_intersecting, "answer decreased; a known non-vertex was hit", i);
      }
      previous = ts.answer;
      non_vertices.assign(labeled.begin(), labeled.begin() + static_cast<long>(ts.answer - 1));

      ts.non_vertices = non_vertices;
      ts.pool_size = pool.size();
      ts.next_pool_size = restrict(f_, f_.make_set(non_vertices), identified_).size();
      ts.size_bound = (ln_k - Real(i)) * mp::pow(Real(k()), Real(k() - ts.answer));
      ts.size_bound_holds = Real(*ts.next_pool_size) >= *ts.size_bound;
    }
    run_basic_from(params_.t + 1);
  }

  void run_paired() {
    const std::size_t third = k() / 3;
    const std::size_t two_thirds = (2 * k()) / 3;
    for (std::size_t i = 1; i + 1 <= params_.t; i += 2) {
      const Family pool = restrict(f_, VertexSet(f_.n()), identified_);
      if (pool.empty()) fail(Errc::strategy_infeasible, "F_{i-1} is empty", i);
      GreedyChain chain;
      try {
        chain = greedy_chain(f_, pool, VertexSet(f_.n()), third);
      } catch (const Error& err) {
        fail(Errc::strategy_infeasible, err.what(), i);
      }
      const VertexSet s = chain.final_set();
      const std::vector<Vertex> s_order = chain.added();
      const Family extending = restrict(pool, s, VertexSet(f_.n()));
      if (extending.empty()) fail(Errc::strategy_infeasible, "no edge extends the chain", i);
      const VertexSet forced = compute_forced_vertices(f_, extending, s);
      // P must fit in positions floor(k/3)+1 .. floor(2k/3) so that a hit past
      // 2k/3 is never a forced vertex.
      if (forced.size() > two_thirds - third) {
        fail(Errc::strategy_infeasible,
             "forced set has " + std::to_string(forced.size()) + " vertices, more than " +
                 std::to_string(two_thirds - third) + " positions",
             i);
      }

      const Edge& first_edge = extending.edge(0);
      std::vector<Vertex> labeled = s_order;
      for (Vertex v : forced.to_vector()) labeled.push_back(v);
      for (Vertex v : ascending_except(first_edge.vertices(), s | forced)) labeled.push_back(v);
      TraceStep& first = ask(i, StepKind::paired_first, labeled);
      first.pool_size = pool.size();
      first.chain_set = s_order;
      first.forced = forced.to_vector();
      const std::size_t answer = first.answer;
      const Vertex hit = first.identified;

      if (3 * answer > 2 * k()) {
        const Edge* avoiding = nullptr;
        for (const Edge& e : extending.edges()) {
          if (!e.contains(hit)) {
            avoiding = &e;
            break;
          }
        }
        if (avoiding == nullptr) {
          fail(Errc::strategy_infeasible, "every edge extending S contains the hit vertex", i + 1);
        }
        std::vector<Vertex> second = s_order;
        for (Vertex v : ascending_except(avoiding->vertices(), s)) second.push_back(v);
        TraceStep& ts = ask(i + 1, StepKind::paired_forced, second);
        ts.pool_size = extending.size();
        ts.chain_set = s_order;
        if (3 * ts.answer <= k()) {
          fail(Errc::not_intersecting, "forced question answered inside S", i + 1);
        }
      } else {
        auto next = find_disjoint_edge(f_, identified_);
        if (!next) {
          fail(Errc::no_disjoint_testing_edge, "identified vertices already cover the family",
               i + 1);
        }
        const auto vs = next->vertices();
        ask(i + 1, StepKind::paired_free, std::vector<Vertex>(vs.begin(), vs.end()));
      }
    }
    run_basic_from(params_.t + 1);
  }

  const Family& f_;
  CodecParams params_;
  Mode mode_;
  const Edge* hidden_;
  const std::vector<std::size_t>* answers_;
  VertexSet identified_;
  std::vector<std::size_t> given_;
  std::vector<TraceStep> trace_;
};

void check_params(const Family& f, const CodecParams& params) {
  if (params.strategy == Strategy::basic) return;
  if (params.t > f.k()) throw Error(Errc::invalid_argument, "t must not exceed k");
  if (params.strategy == Strategy::paired && params.t % 2 != 0) {
    throw Error(Errc::odd_t, "paired strategy needs an even t");
  }
}

}  // namespace

CodecRun encode(const Family& f, const Edge& e, const CodecParams& params) {
  check_params(f, params);
  if (!f.contains(e)) throw Error(Errc::edge_not_in_family, "edge is not in the family");
  return Replay(f, params, Mode::encode, &e, nullptr).run();
}

std::optional<std::string> check_constraints(const AnswerSequence& code, std::size_t k) {
  const auto& w = code.answers;
  if (w.size() != k) {
    return "code has " + std::to_string(w.size()) + " answers, expected " + std::to_string(k);
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] < 1 || w[i] > k) {
      return "answer " + std::to_string(i + 1) + " = " + std::to_string(w[i]) + " outside [1, " +
             std::to_string(k) + "]";
    }
  }
  const std::size_t t = code.params.t;
  if (code.params.strategy != Strategy::basic && t > k) return "t exceeds k";
  if (code.params.strategy == Strategy::monotone) {
    std::size_t previous = 2;
    for (std::size_t i = 0; i < t; ++i) {
      if (w[i] < previous) return "prefix not non-decreasing at answer " + std::to_string(i + 1);
      previous = w[i];
    }
  }
  if (code.params.strategy == Strategy::paired) {
    if (t % 2 != 0) return "odd t";
    for (std::size_t i = 0; i + 1 < t; i += 2) {
      if (3 * w[i] > 2 * k && 3 * w[i + 1] <= k) {
        return "pair rule broken at answers " + std::to_string(i + 1) + "," + std::to_string(i + 2);
      }
    }
  }
  return std::nullopt;
}

CodecRun decode(const Family& f, const AnswerSequence& code) {
  check_params(f, code.params);
  if (auto problem = check_constraints(code, f.k())) {
    throw Error(Errc::invalid_code, *problem);
  }
  return Replay(f, code.params, Mode::decode, nullptr, &code.answers).run();
}

bool is_canonical_code(const Family& f, const AnswerSequence& code) {
  try {
    const CodecRun decoded = decode(f, code);
    return encode(f, decoded.edge, code.params).code.answers == code.answers;
  } catch (const Error&) {
    return false;
  }
}

AnswerSequence encode_monotone(const Family& f, Vertex x, const Edge& e,
                               std::optional<std::size_t> t) {
  return encode(f, e, {Strategy::monotone, t.value_or(default_monotone_t(f.k())), x}).code;
}

Edge decode_monotone(const Family& f, Vertex x, const std::vector<std::size_t>& answers,
                     std::optional<std::size_t> t) {
  return decode(f, {answers, {Strategy::monotone, t.value_or(default_monotone_t(f.k())), x}}).edge;
}

AnswerSequence encode_paired(const Family& f, const Edge& e, std::size_t t) {
  return encode(f, e, {Strategy::paired, t, 0}).code;
}

Edge decode_paired(const Family& f, const std::vector<std::size_t>& answers, std::size_t t) {
  return decode(f, {answers, {Strategy::paired, t, 0}}).edge;
}

BigInt sequence_space_size(std::size_t k, const CodecParams& params) {
  switch (params.strategy) {
    case Strategy::basic:
      return mp::pow(BigInt(k), static_cast<unsigned>(k));
    case Strategy::monotone:
      return count_monotone_sequences(k, params.t) *
             mp::pow(BigInt(k), static_cast<unsigned>(k - params.t));
    case Strategy::paired:
      return count_paired_sequences(k, params.t);
  }
  return 0;
}

InjectivityReport verify_injectivity(const Family& f, const CodecParams& params,
                                     EdgeFilter filter) {
  if (!filter && params.strategy == Strategy::monotone) {
    const Vertex x = params.excluded;
    filter = [x](const Edge& e) { return !e.contains(x); };
  }
  std::vector<const Edge*> selected;
  for (const Edge& e : f.edges()) {
    if (!filter || filter(e)) selected.push_back(&e);
  }

  InjectivityReport report;
  report.family_size = selected.size();
  report.sequence_space_size = sequence_space_size(f.k(), params);

  struct Outcome {
    std::optional<AnswerSequence> code;
    std::vector<std::string> problems;
    bool constraint_broken = false;
    bool roundtrip_broken = false;
  };
  std::vector<Outcome> outcomes(selected.size());
  parallel_for(selected.size(), [&](std::size_t i) {
    Outcome& out = outcomes[i];
    try {
      out.code = encode(f, *selected[i], params).code;
    } catch (const Error& err) {
      out.problems.push_back(std::string("encode failed: ") + errc_name(err.code()) + ": " +
                             err.what());
      return;
    }
    if (auto problem = check_constraints(*out.code, f.k())) {
      out.constraint_broken = true;
      out.problems.push_back("constraint: " + *problem);
    }
    try {
      const Edge back = decode(f, *out.code).edge;
      if (back != *selected[i]) {
        out.roundtrip_broken = true;
        out.problems.push_back("decode returned a different edge");
      }
    } catch (const Error& err) {
      out.roundtrip_broken = true;
      out.problems.push_back(std::string("decode failed: ") + err.what());
    }
  });

  std::map<std::vector<std::size_t>, std::size_t> first_with_code;
  for (std::size_t i = 0; i < selected.size(); ++i) {
    Outcome& out = outcomes[i];
    if (out.code) {
      ++report.encoded;
      auto [it, inserted] = first_with_code.emplace(out.code->answers, i);
      if (!inserted) {
        report.codes_distinct = false;
        out.problems.push_back("code collides with an earlier edge");
      }
    }
    if (out.constraint_broken) report.constraints_hold = false;
    if (out.roundtrip_broken) report.roundtrip_ok = false;
    for (auto& p : out.problems) report.failures.push_back({*selected[i], std::move(p)});
    report.codes.emplace_back(*selected[i], std::move(out.code));
  }
  return report;
}

}  // namespace ifam
