#include "cli.hpp"

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ifam/codec.hpp"
#include "ifam/counting.hpp"
#include "ifam/covering.hpp"
#include "ifam/degree_lemmas.hpp"
#include "ifam/errors.hpp"
#include "ifam/families.hpp"
#include "ifam/report.hpp"
#include "ifam/search.hpp"

namespace ifam::cli {

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

// Input problems that are the caller's fault, as opposed to a strategy or a
// verification failing on valid input.
bool is_input_error(Errc code) {
  switch (code) {
    case Errc::invalid_argument:
    case Errc::vertex_out_of_range:
    case Errc::parse_error:
    case Errc::edge_not_in_family:
    case Errc::x_in_edge:
    case Errc::invalid_code:
    case Errc::odd_t:
    case Errc::budget_exceeded:
      return true;
    default:
      return false;
  }
}

struct Options {
  std::string file;
  bool json = false;
  bool trace = false;
  // gen
  std::string kind = "complete";
  std::size_t k = 0;
  std::string from;
  std::size_t m = 0;
  std::uint64_t seed = 0;
  std::string output;
  // tau
  std::optional<std::size_t> limit;
  // codecs
  std::string edge;
  std::string code;
  std::string strategy = "basic";
  std::optional<std::uint64_t> x;
  std::optional<std::size_t> t;
  std::string alpha = "auto";
  // count
  bool enumerate = false;
  // bounds
  std::size_t scan = 500;
  // check-lemmas
  std::size_t umax = 0;
  // search
  std::size_t nmax = 0;
  std::uint64_t budget = kDefaultNodeBudget;
};

struct Outcome {
  Json payload;
  std::string text;
  int exit_code = kOk;
};

std::vector<std::uint64_t> parse_numbers(const std::string& text, const char* what) {
  std::istringstream ss(text);
  std::vector<std::uint64_t> out;
  std::string token;
  while (ss >> token) {
    if (token.find_first_not_of("0123456789") != std::string::npos) {
      throw Error(Errc::invalid_argument, std::string("bad ") + what + " entry '" + token + "'");
    }
    out.push_back(std::stoull(token));
  }
  return out;
}

Vertex vertex_of_label(const Family& f, std::uint64_t label) {
  auto id = f.id_of_label(label);
  if (!id) {
    throw Error(Errc::vertex_out_of_range, "label " + std::to_string(label) + " not in ground set");
  }
  return *id;
}

Real parse_alpha(const std::string& text, std::size_t k) {
  if (text == "auto") return balanced_alpha(k);
  try {
    Real a(text);
    if (!(a > 0)) throw Error(Errc::invalid_argument, "alpha must be positive");
    return a;
  } catch (const std::runtime_error&) {
    throw Error(Errc::invalid_argument, "alpha must be a positive decimal or 'auto'");
  }
}

std::string label_list(const Family& f, std::span<const Vertex> ids) {
  std::string s;
  for (Vertex v : ids) {
    if (!s.empty()) s += ' ';
    s += std::to_string(f.label(v));
  }
  return s;
}

Family load_with_warnings(const std::string& path, std::ostream& err) {
  std::vector<std::string> warnings;
  Family f = load_family(path, &warnings);
  for (const auto& w : warnings) err << "warning: " << path << ": " << w << '\n';
  return f;
}

CodecParams codec_params(const Options& o, const Family& f) {
  auto strategy = parse_strategy(o.strategy);
  if (!strategy) throw Error(Errc::invalid_argument, "unknown strategy '" + o.strategy + "'");
  CodecParams p;
  p.strategy = *strategy;
  if (p.strategy == Strategy::monotone) {
    if (!o.x) throw Error(Errc::invalid_argument, "monotone strategy needs --x");
    p.excluded = vertex_of_label(f, *o.x);
    p.t = o.t.value_or(default_monotone_t(f.k()));
  } else if (p.strategy == Strategy::paired) {
    p.t = o.t ? *o.t : default_paired_t(f.k(), parse_alpha(o.alpha, f.k()));
  }
  return p;
}

std::string trace_text(const Family& f, const CodecRun& run) {
  std::ostringstream out;
  for (const TraceStep& s : run.trace) {
    out << "step " << s.index << " [" << step_kind_name(s.kind) << "] edge=("
        << label_list(f, s.testing_edge) << ") answer=" << s.answer
        << " vertex=" << f.label(s.identified) << " V={" << label_list(f, s.identified_set) << "}";
    if (s.kind == StepKind::chain) out << " U={" << label_list(f, s.non_vertices) << "}";
    if (s.pool_size) out << " |F|=" << *s.pool_size;
    if (s.next_pool_size) out << " |F_i|=" << *s.next_pool_size;
    if (s.kind == StepKind::paired_first) {
      out << " S={" << label_list(f, s.chain_set) << "} P={" << label_list(f, s.forced) << "}";
    }
    out << '\n';
  }
  return out.str();
}

Outcome run_gen(const Options& o, std::ostream& err) {
  Family f;
  Outcome res;
  if (o.kind == "complete" || o.kind == "triangle") {
    f = o.kind == "triangle" ? triangle() : complete_family(o.k);
  } else if (o.kind == "sub") {
    if (o.from.empty()) throw Error(Errc::invalid_argument, "--kind sub needs --from");
    const Family parent = load_with_warnings(o.from, err);
    SampledFamily s = random_subfamily(parent, o.m, o.seed);
    f = std::move(s.family);
    if (!f.empty()) res.payload["tau"] = to_json(f, s.tau);
  } else {
    throw Error(Errc::invalid_argument, "unknown kind '" + o.kind + "'");
  }
  if (o.output.empty()) throw Error(Errc::invalid_argument, "gen needs -o");
  save_family(f, o.output);
  res.payload["file"] = o.output;
  res.payload["k"] = f.k();
  res.payload["n"] = f.n();
  res.payload["edges"] = f.size();
  res.text = "wrote " + std::to_string(f.size()) + " edges to " + o.output + "\n";
  if (res.payload.contains("tau")) {
    res.text += "tau = " + res.payload["tau"]["tau"].dump() + "\n";
  }
  return res;
}

Outcome run_tau(const Options& o, std::ostream& err) {
  const Family f = load_with_warnings(o.file, err);
  const CoverCertificate c = covering_number(f, o.limit);
  Outcome res;
  res.payload = to_json(f, c);
  if (c.is_minimum) {
    res.text = "tau = " + std::to_string(c.size) + "\ncover: " +
               label_list(f, c.cover.to_vector()) + "\nnodes: " +
               std::to_string(c.nodes_explored) + "\n";
  } else {
    res.text = "tau > " + std::to_string(*o.limit) + "\nnodes: " +
               std::to_string(c.nodes_explored) + "\n";
  }
  return res;
}

Outcome run_encode(const Options& o, std::ostream& err) {
  const Family f = load_with_warnings(o.file, err);
  const CodecParams p = codec_params(o, f);
  std::vector<Vertex> ids;
  for (auto label : parse_numbers(o.edge, "edge")) ids.push_back(vertex_of_label(f, label));
  const Edge e = f.make_edge(std::move(ids));
  const CodecRun run = encode(f, e, p);
  Outcome res;
  res.payload = to_json(f, run, o.trace);
  std::ostringstream text;
  for (std::size_t i = 0; i < run.code.answers.size(); ++i) {
    text << (i ? " " : "") << run.code.answers[i];
  }
  res.text = (o.trace ? trace_text(f, run) : "") + "code: " + text.str() + "\n";
  return res;
}

Outcome run_decode(const Options& o, std::ostream& err) {
  const Family f = load_with_warnings(o.file, err);
  const CodecParams p = codec_params(o, f);
  AnswerSequence code;
  code.params = p;
  for (auto w : parse_numbers(o.code, "code")) code.answers.push_back(static_cast<std::size_t>(w));
  const CodecRun run = decode(f, code);
  const bool canonical = is_canonical_code(f, code);
  Outcome res;
  res.payload = to_json(f, run, o.trace);
  res.payload["canonical"] = canonical;
  res.text = (o.trace ? trace_text(f, run) : "") + "edge: " + label_list(f, run.edge.vertices()) +
             (canonical ? "\n" : "\n(non-canonical: re-encoding gives a different code)\n");
  return res;
}

Outcome run_verify(const Options& o, std::ostream& err) {
  const Family f = load_with_warnings(o.file, err);
  const CodecParams p = codec_params(o, f);
  const InjectivityReport r = verify_injectivity(f, p);
  Outcome res;
  res.payload = to_json(f, r);
  res.payload["strategy"] = strategy_name(p.strategy);
  if (p.strategy != Strategy::basic) res.payload["t"] = p.t;
  std::ostringstream text;
  text << "strategy " << strategy_name(p.strategy) << ": " << r.encoded << "/" << r.family_size
       << " edges encoded, codes " << (r.codes_distinct ? "distinct" : "COLLIDE")
       << ", constraints " << (r.constraints_hold ? "hold" : "BROKEN") << ", roundtrip "
       << (r.roundtrip_ok ? "ok" : "BROKEN") << "\n"
       << r.family_size << " <= " << to_decimal(r.sequence_space_size) << ": "
       << (r.bound_holds() ? "yes" : "NO") << "\n";
  for (const auto& fl : r.failures) {
    text << "  failure at {" << label_list(f, fl.edge.vertices()) << "}: " << fl.reason << "\n";
  }
  res.text = text.str();
  res.exit_code = r.passed() ? kOk : kFailed;
  return res;
}

Outcome run_count(const Options& o) {
  if (o.k == 0) throw Error(Errc::invalid_argument, "count needs --k");
  const std::size_t t = o.t.value_or(0);
  const CountMethod method = o.enumerate ? CountMethod::enumerate : CountMethod::formula;
  const std::string strategy = o.strategy == "basic" ? "monotone" : o.strategy;
  BigInt value;
  if (strategy == "monotone") {
    value = count_monotone_sequences(o.k, t, method);
  } else if (strategy == "paired") {
    value = count_paired_sequences(o.k, t, method);
  } else {
    throw Error(Errc::invalid_argument, "count supports monotone or paired");
  }
  Outcome res;
  res.payload = {{"k", o.k},
                 {"t", t},
                 {"strategy", strategy},
                 {"method", o.enumerate ? "enumerate" : "formula"},
                 {"count", to_decimal(value)}};
  if (strategy == "paired") {
    const PairCount pc = count_valid_pairs(o.k);
    res.payload["valid_pairs"] = pc.valid;
    res.payload["u"] = pc.u;
    res.payload["v"] = pc.v;
  }
  res.text = to_decimal(value) + "\n";
  return res;
}

Outcome run_bounds(const Options& o) {
  if (o.k < 2) throw Error(Errc::invalid_argument, "bounds needs --k >= 2");
  const BoundsReport r = theorem_bounds(o.k, parse_alpha(o.alpha, o.k));
  Outcome res;
  res.payload = to_json(r);
  res.payload["pair_scan"] = to_json(scan_pair_inequality(o.scan));
  std::ostringstream text;
  for (const auto& [key, value] : res.payload.items()) {
    if (key == "pair_scan") continue;
    text << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
  text << "pair_scan: " << res.payload["pair_scan"].dump() << "\n";
  res.text = text.str();
  return res;
}

Outcome run_check_lemmas(const Options& o, std::ostream& err) {
  const Family f = load_with_warnings(o.file, err);
  const DegreeBoundReport r = check_degree_bound(f, o.umax);
  Outcome res;
  res.payload = to_json(f, r);
  const ValidationReport v = validate_family(f);
  if (f.k() >= 2) {
    res.payload["classification"] =
        to_json(classify_degree_case(f.k(), f.size(), v.max_degree, parse_alpha(o.alpha, f.k())));
  }
  std::ostringstream text;
  if (!r.precondition_ok) {
    text << "precondition failed: " << r.precondition_failure << "\n";
  } else {
    text << "checked " << r.sets_checked << " sets with |U| <= " << r.u_max << ": "
         << r.violations.size() << " violations, " << r.tight.size() << " tight\n";
    for (const auto& c : r.violations) {
      text << "  violation U={" << label_list(f, c.set) << "} d=" << c.degree << "\n";
    }
  }
  res.text = text.str();
  res.exit_code = r.precondition_ok && r.violations.empty() ? kOk : kFailed;
  return res;
}

Outcome run_search(const Options& o, std::ostream& err) {
  if (o.k < 2) throw Error(Errc::invalid_argument, "search needs --k >= 2");
  SearchProgress progress;
  if (!o.json) {
    progress = [&err](std::uint64_t nodes, std::size_t best) {
      err << "progress: " << nodes << " nodes, best " << best << "\n";
    };
  }
  const SearchResult r = max_family_size(o.k, o.nmax, o.budget, progress);
  if (!o.output.empty()) save_family(r.witness, o.output);
  Outcome res;
  res.payload = to_json(r);
  res.text = "best size on <= " + std::to_string(r.n_max) + " vertices: " +
             std::to_string(r.best_size) + (r.exhaustive ? " (exhaustive)" : " (budget exhausted)") +
             "\nnodes: " + std::to_string(r.nodes) + "\n" + serialize_family(r.witness);
  return res;
}

}  // namespace

int dispatch(int argc, char** argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Intersecting families with full covering number"};
  app.require_subcommand(1);

  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "Emit one JSON object"); };
  auto add_codec = [&](CLI::App* sub) {
    sub->add_option("--strategy", o.strategy, "basic|monotone|paired")
        ->check(CLI::IsMember({"basic", "monotone", "paired"}));
    sub->add_option("--x", o.x, "Excluded vertex label (monotone)");
    sub->add_option("--t", o.t, "Constrained prefix length");
    sub->add_option("--alpha", o.alpha, "alpha for the paired default t, or 'auto'");
  };

  auto* gen = app.add_subcommand("gen", "Generate a family file");
  gen->add_option("--kind", o.kind, "complete|triangle|sub");
  gen->add_option("--k", o.k);
  gen->add_option("--from", o.from);
  gen->add_option("--m", o.m);
  gen->add_option("--seed", o.seed);
  gen->add_option("-o,--output", o.output)->required();
  add_json(gen);

  auto* tau = app.add_subcommand("tau", "Exact covering number");
  tau->add_option("file", o.file)->required();
  tau->add_option("--limit", o.limit);
  add_json(tau);

  auto* enc = app.add_subcommand("encode", "Encode an edge as an answer sequence");
  enc->add_option("file", o.file)->required();
  enc->add_option("--edge", o.edge, "Edge labels, space separated")->required();
  enc->add_flag("--trace", o.trace);
  add_codec(enc);
  add_json(enc);

  auto* dec = app.add_subcommand("decode", "Decode an answer sequence");
  dec->add_option("file", o.file)->required();
  dec->add_option("--code", o.code, "Answers, space separated")->required();
  dec->add_flag("--trace", o.trace);
  add_codec(dec);
  add_json(dec);

  auto* ver = app.add_subcommand("verify", "Check that a strategy is injective on a family");
  ver->add_option("file", o.file)->required();
  add_codec(ver);
  add_json(ver);

  auto* cnt = app.add_subcommand("count", "Size of a constrained answer space");
  cnt->add_option("--k", o.k)->required();
  cnt->add_option("--t", o.t);
  cnt->add_option("--strategy", o.strategy, "monotone (default) or paired")->check(CLI::IsMember({"monotone", "paired"}));
  cnt->add_flag("--enumerate", o.enumerate);
  add_json(cnt);

  auto* bnd = app.add_subcommand("bounds", "Evaluate the bound formulas");
  bnd->add_option("--k", o.k)->required();
  bnd->add_option("--alpha", o.alpha, "Decimal alpha or 'auto' for k/(40 ln^2 k)");
  bnd->add_option("--scan", o.scan, "Largest k in the pair-count scan");
  add_json(bnd);

  auto* lem = app.add_subcommand("check-lemmas", "Check d(U) <= k^(k-|U|) on a family");
  lem->add_option("file", o.file)->required();
  lem->add_option("--umax", o.umax)->required();
  lem->add_option("--alpha", o.alpha);
  add_json(lem);

  auto* srch = app.add_subcommand("search", "Exhaustive extremal search");
  srch->add_option("--k", o.k)->required();
  srch->add_option("--nmax", o.nmax)->required();
  srch->add_option("--budget", o.budget);
  srch->add_option("-o,--output", o.output);
  add_json(srch);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  const auto start = std::chrono::steady_clock::now();
  Outcome res;
  try {
    if (command == "gen") res = run_gen(o, err);
    else if (command == "tau") res = run_tau(o, err);
    else if (command == "encode") res = run_encode(o, err);
    else if (command == "decode") res = run_decode(o, err);
    else if (command == "verify") res = run_verify(o, err);
    else if (command == "count") res = run_count(o);
    else if (command == "bounds") res = run_bounds(o);
    else if (command == "check-lemmas") res = run_check_lemmas(o, err);
    else res = run_search(o, err);
  } catch (const Error& e) {
    res.exit_code = is_input_error(e.code()) ? kUsage : kFailed;
    res.payload = {{"error", errc_name(e.code())}, {"message", e.what()}};
    if (e.step() > 0 && e.code() != Errc::parse_error) res.payload["step"] = e.step();
    err << "error: " << e.what() << "\n";
  }
  const auto elapsed = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - start)
                           .count();

  if (o.json) {
    Json inputs;
    for (const CLI::Option* opt : sub->get_options()) {
      if (opt->count() == 0 || opt->get_name() == "--help") continue;
      const auto results = opt->results();
      inputs[opt->get_name()] = results.size() == 1 ? Json(results.front()) : Json(results);
    }
    Json report;
    report["command"] = command;
    report["inputs"] = std::move(inputs);
    report["outcome"] = std::move(res.payload);
    report["elapsed_ms"] = elapsed;
    report["exit_code"] = res.exit_code;
    out << report.dump() << "\n";
  } else {
    out << res.text;
  }
  return res.exit_code;
}

}  // namespace ifam::cli
