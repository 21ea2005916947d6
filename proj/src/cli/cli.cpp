#include "irrlab/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "irrlab/claims.hpp"
#include "irrlab/enumeration.hpp"
#include "irrlab/error.hpp"
#include "irrlab/generators.hpp"
#include "irrlab/graph6.hpp"
#include "irrlab/invariants.hpp"
#include "irrlab/report.hpp"
#include "irrlab/verifier.hpp"

namespace irrlab {

namespace {

struct CorpusFlags {
  std::vector<std::string> trees;
  std::vector<std::string> trees_maxdeg;
  std::vector<std::string> bipartite;
  std::vector<std::string> connected;
  std::vector<std::string> random;
  int bipartite_cells = 0;
};

void add_corpus_flags(CLI::App* app, CorpusFlags& f) {
  app->add_option("--trees", f.trees, "Trees of order n or a..b");
  app->add_option("--trees-maxdeg", f.trees_maxdeg, "n,Delta (either may be a..b)");
  app->add_option("--bipartite", f.bipartite, "n1,n2[,connected]");
  app->add_option("--connected", f.connected, "Connected graphs of order n or a..b");
  app->add_option("--random", f.random, "tree:N,count,seed or bipartite:N1:N2:P,count,seed");
  app->add_option("--bipartite-cells", f.bipartite_cells,
                  "Every bipartite class with n1*n2 <= K, connected and not");
}

[[noreturn]] void bad(const std::string& text, const std::string& why) {
  throw Error(ErrorCode::kBadClassSpec, text + ": " + why);
}

int to_int(const std::string& s, const std::string& whole) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) bad(whole, "bad number '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    bad(whole, "bad number '" + s + "'");
  }
}

std::pair<int, int> range(const std::string& s, const std::string& whole) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const int v = to_int(s, whole);
    return {v, v};
  }
  return {to_int(s.substr(0, dots), whole), to_int(s.substr(dots + 2), whole)};
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

std::vector<GraphClass> build_corpus(const CorpusFlags& f) {
  std::vector<GraphClass> out;
  for (const auto& t : f.trees) {
    auto [a, b] = range(t, t);
    for (int n = a; n <= b; ++n) out.push_back(GraphClass::trees(n));
  }
  for (const auto& t : f.trees_maxdeg) {
    const auto fields = split(t, ',');
    if (fields.size() != 2) bad(t, "expected n,Delta");
    auto [a, b] = range(fields[0], t);
    auto [lo, hi] = range(fields[1], t);
    const bool ranged = lo != hi;
    for (int n = a; n <= b; ++n) {
      for (int d = lo; d <= hi; ++d) {
        if (ranged && d > n - 1) continue;
        out.push_back(GraphClass::trees_max_degree(n, d));
      }
    }
  }
  for (const auto& t : f.bipartite) {
    const auto fields = split(t, ',');
    if (fields.size() < 2 || fields.size() > 3) bad(t, "expected n1,n2[,connected]");
    if (fields.size() == 3 && fields[2] != "connected") bad(t, "third field must be 'connected'");
    out.push_back(GraphClass::bipartite(to_int(fields[0], t), to_int(fields[1], t), fields.size() == 3));
  }
  for (int n1 = 1; n1 <= f.bipartite_cells; ++n1) {
    for (int n2 = 1; n1 * n2 <= f.bipartite_cells; ++n2) {
      out.push_back(GraphClass::bipartite(n1, n2, false));
      out.push_back(GraphClass::bipartite(n1, n2, true));
    }
  }
  for (const auto& t : f.connected) {
    auto [a, b] = range(t, t);
    for (int n = a; n <= b; ++n) out.push_back(GraphClass::connected(n));
  }
  for (const auto& t : f.random) out.push_back(GraphClass::parse("random(" + t + ")"));
  for (const auto& c : out) {
    if (!c.within_budget()) {
      throw Error(ErrorCode::kBudgetExceeded, c.description() + " is outside the enumeration budget");
    }
  }
  return out;
}

Sigma2Mode sigma2_mode(const std::string& s) {
  if (s == "standard") return Sigma2Mode::kStandard;
  if (s == "literal") return Sigma2Mode::kLiteral;
  throw Error(ErrorCode::kInvalidParams, "sigma2 mode must be standard or literal");
}

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string read_all(const std::string& path, std::istream& in) {
  std::ostringstream text;
  if (path == "-") {
    text << in.rdbuf();
    return text.str();
  }
  std::ifstream file(path);
  if (!file) throw Error(ErrorCode::kInvalidParams, "cannot open " + path);
  text << file.rdbuf();
  return text.str();
}

void write_to(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw Error(ErrorCode::kInvalidParams, "cannot write " + path);
  file << text;
}

std::optional<std::pair<int, int>> parse_parts(const std::string& s) {
  if (s.empty()) return std::nullopt;
  const auto fields = split(s, ',');
  if (fields.size() != 2) throw Error(ErrorCode::kInvalidParams, "parts must be n1,n2");
  return std::pair{to_int(fields[0], s), to_int(fields[1], s)};
}

// ---- subcommands ----------------------------------------------------------

struct ComputeArgs {
  std::string input = "-";
  std::vector<std::string> graph6;
  std::string sigma2 = "standard";
};

int cmd_compute(const ComputeArgs& a, std::ostream& out, std::istream& in) {
  const Sigma2Mode mode = sigma2_mode(a.sigma2);
  std::vector<Graph> graphs;
  if (!a.graph6.empty()) {
    for (const auto& s : a.graph6) graphs.push_back(parse_graph6(s));
  } else {
    std::istringstream text(read_all(a.input, in));
    graphs = read_graphs(text);
  }
  for (const auto& g : graphs) out << bundle_to_json(invariant_bundle(g, mode)) << '\n';
  return 0;
}

struct GenArgs {
  std::string family;
  std::vector<std::string> values;
  std::string format = "graph6";
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
  auto arg = [&](std::size_t i) {
    if (i >= a.values.size()) throw Error(ErrorCode::kInvalidParams, a.family + ": missing argument");
    return a.values[i];
  };
  auto int_arg = [&](std::size_t i) { return to_int(arg(i), a.family); };
  Graph g;
  if (a.family == "path") {
    g = generate_path(int_arg(0));
  } else if (a.family == "star") {
    g = generate_star(int_arg(0));
  } else if (a.family == "kst") {
    g = generate_complete_bipartite(int_arg(0), int_arg(1));
  } else if (a.family == "caterpillar") {
    std::vector<int> spine;
    for (const auto& v : a.values) {
      for (const auto& d : split(v, ',')) spine.push_back(to_int(d, v));
    }
    g = generate_caterpillar(spine);
  } else if (a.family == "example") {
    g = generate_example_construction({int_arg(0), int_arg(1)});
  } else if (a.family == "random-tree") {
    g = random_tree(int_arg(0), std::stoull(arg(1)));
  } else if (a.family == "random-bipartite") {
    g = random_bipartite(int_arg(0), int_arg(1), std::stod(arg(2)), std::stoull(arg(3)));
  } else {
    throw Error(ErrorCode::kInvalidParams, "unknown family '" + a.family + "'");
  }
  if (a.format == "edges") {
    out << write_edge_list(g);
  } else {
    out << write_graph6(g) << '\n';
  }
  return 0;
}

int cmd_enum(const CorpusFlags& f, bool count_only, std::ostream& out) {
  for (const auto& cls : build_corpus(f)) {
    const auto graphs = enumerate_class(cls);
    if (count_only) {
      out << cls.description() << ' ' << graphs.size() << '\n';
      continue;
    }
    for (const auto& g : graphs) out << write_graph6(g) << '\n';
  }
  return 0;
}

struct VerifyArgs {
  CorpusFlags corpus;
  std::vector<std::string> claims;
  std::vector<std::string> extremal;
  std::string out;
  std::string format = "json";
  std::string sigma2 = "standard";
  bool list = false;
  bool per_graph = false;
  bool no_timestamp = false;
  int workers = 0;
  std::uint64_t seed = 0;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  if (a.list) {
    out << catalogue_to_json();
    return 0;
  }
  if (a.format != "json" && a.format != "csv") throw Error(ErrorCode::kInvalidParams, "format must be json or csv");
  select_claims(a.claims);
  SuiteOptions options;
  options.eval.per_graph_reading = a.per_graph;
  options.eval.sigma2_mode = sigma2_mode(a.sigma2);
  options.workers = a.workers;
  options.seed = a.seed;
  for (const auto& i : a.extremal) options.extremal_indices.push_back(parse_index(i));
  const auto corpus = build_corpus(a.corpus);
  Report report = run_suite(corpus, a.claims, options);
  if (!a.no_timestamp) report.run.timestamp = utc_now();
  const std::string text = a.format == "json" ? report_to_json(report) : report_to_csv(report);
  write_to(a.out, text, out);
  if (!a.out.empty() && a.out != "-") out << report_to_csv(report);
  return report.summary.fails > 0 ? 1 : 0;
}

int cmd_extremal(const CorpusFlags& f, const std::string& index, std::ostream& out) {
  const Index idx = parse_index(index);
  out << extremal_csv_header();
  for (const auto& cls : build_corpus(f)) out << extremal_to_csv_row(extremal_scan(cls, idx));
  return 0;
}

int cmd_example(int n, int m, std::ostream& out) {
  const Graph g = generate_example_construction({n, m});
  const std::int64_t irr = albertson(g);
  const std::int64_t sig = sigma(g);
  out << "n=" << n << " m=" << m << " vertices=" << g.order() << " edges=" << g.size() << " irr=" << irr
      << " sigma=" << sig << '\n';
  static const std::map<std::pair<int, int>, std::pair<std::int64_t, std::int64_t>> published{
      {{15, 15}, {326, 2394}}, {{15, 17}, {556, 3640}}};
  if (auto it = published.find({n, m}); it != published.end()) {
    const bool match = it->second.first == irr && it->second.second == sig;
    out << "published irr=" << it->second.first << " sigma=" << it->second.second << " computed irr=" << irr
        << " sigma=" << sig << ' ' << (match ? "MATCH" : "MISMATCH") << '\n';
  }
  return 0;
}

int cmd_replay(const std::string& path, bool per_graph, const std::string& sigma2, std::ostream& out,
               std::istream& in) {
  EvalOptions options;
  options.per_graph_reading = per_graph;
  options.sigma2_mode = sigma2_mode(sigma2);
  int bad_replays = 0;
  for (const auto& o : outcomes_from_json(read_all(path, in))) {
    if (!o.witness) continue;
    const ReplayResult r = replay_witness(o, options);
    const bool ok = o.verdict != Verdict::kFails || (r.verdict == Verdict::kFails && r.witness_reproduced);
    if (!ok) ++bad_replays;
    out << o.claim << (o.part.empty() ? "" : "." + o.part) << ' ' << o.subject << ' ' << o.witness->graph6 << ' '
        << to_string(r.verdict) << (r.witness_reproduced ? "" : " witness-not-reproduced") << '\n';
  }
  return bad_replays > 0 ? 1 : 0;
}

struct ShrinkArgs {
  std::string claim;
  std::string graph6;
  std::string parts;
  int alpha = 0;
  int p = 0;
};

int cmd_shrink(const ShrinkArgs& a, std::ostream& out) {
  const Claim& claim = find_claim(a.claim);
  std::optional<ClaimParams> params;
  if (a.alpha > 0) params = ClaimParams{a.alpha, a.p > 0 ? std::optional(a.p) : std::nullopt};
  const auto r = shrink_counterexample(parse_graph6(a.graph6), claim, params, parse_parts(a.parts));
  out << write_graph6(r.graph);
  if (r.parts) out << ' ' << r.parts->first << ',' << r.parts->second;
  out << '\n';
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Degree-based irregularity indices and bound verification", "irrlab"};
  app.require_subcommand(1);

  ComputeArgs compute;
  auto* c_compute = app.add_subcommand("compute", "Invariant bundle per input graph, one JSON object per line");
  c_compute->add_option("input", compute.input, "graph6 lines or edge list; - for stdin");
  c_compute->add_option("--g6", compute.graph6, "Inline graph6 string");
  c_compute->add_option("--sigma2", compute.sigma2, "standard|literal");

  GenArgs gen;
  auto* c_gen = app.add_subcommand("gen", "Generate one graph");
  c_gen->add_option("family", gen.family,
                    "path N | star N | kst S T | caterpillar D1,D2,... | example N M | random-tree N SEED | "
                    "random-bipartite N1 N2 P SEED")
      ->required();
  c_gen->add_option("values", gen.values);
  c_gen->add_option("--format", gen.format, "graph6|edges");

  CorpusFlags enum_flags;
  bool enum_count = false;
  auto* c_enum = app.add_subcommand("enum", "Enumerate classes as graph6 lines");
  add_corpus_flags(c_enum, enum_flags);
  c_enum->add_flag("--count", enum_count, "Print class sizes only");

  VerifyArgs verify;
  auto* c_verify = app.add_subcommand("verify", "Evaluate claims over a corpus");
  add_corpus_flags(c_verify, verify.corpus);
  c_verify->add_option("--claims", verify.claims, "id[,id...] or all")->delimiter(',');
  c_verify->add_option("--extremal", verify.extremal, "Indices to tabulate: irr,sigma,irr_t")->delimiter(',');
  c_verify->add_option("--out", verify.out, "Report path");
  c_verify->add_option("--format", verify.format, "json|csv");
  c_verify->add_option("--sigma2", verify.sigma2, "standard|literal");
  c_verify->add_option("--workers", verify.workers, "Worker threads (default IRRLAB_WORKERS or all cores)");
  c_verify->add_option("--seed", verify.seed, "Seed recorded in the report");
  c_verify->add_flag("--list", verify.list, "Print the claim catalogue");
  c_verify->add_flag("--per-graph", verify.per_graph, "Per-tree reading of the parameterised tree bounds");
  c_verify->add_flag("--no-timestamp", verify.no_timestamp, "Leave the timestamp empty");

  CorpusFlags ext_flags;
  std::string index = "irr";
  auto* c_ext = app.add_subcommand("extremal", "Class minima and maxima with every attainer, as CSV");
  add_corpus_flags(c_ext, ext_flags);
  c_ext->add_option("--index", index, "irr|sigma|irr_t");

  int ex_n = 0;
  int ex_m = 0;
  auto* c_example = app.add_subcommand("example", "Indices of the two-part construction");
  c_example->add_option("n", ex_n)->required();
  c_example->add_option("m", ex_m)->required();

  std::string replay_path;
  bool replay_per_graph = false;
  std::string replay_sigma2 = "standard";
  auto* c_replay = app.add_subcommand("replay", "Re-evaluate every witness in a JSON report");
  c_replay->add_option("report", replay_path)->required();
  c_replay->add_flag("--per-graph", replay_per_graph);
  c_replay->add_option("--sigma2", replay_sigma2);

  ShrinkArgs shrink;
  auto* c_shrink = app.add_subcommand("shrink", "Shrink a failing graph to a local minimum");
  c_shrink->add_option("--claim", shrink.claim)->required();
  c_shrink->add_option("--g6", shrink.graph6)->required();
  c_shrink->add_option("--parts", shrink.parts, "n1,n2");
  c_shrink->add_option("--alpha", shrink.alpha);
  c_shrink->add_option("--p", shrink.p);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_compute->parsed()) return cmd_compute(compute, out, in);
    if (c_gen->parsed()) return cmd_gen(gen, out);
    if (c_enum->parsed()) return cmd_enum(enum_flags, enum_count, out);
    if (c_verify->parsed()) return cmd_verify(verify, out);
    if (c_ext->parsed()) return cmd_extremal(ext_flags, index, out);
    if (c_example->parsed()) return cmd_example(ex_n, ex_m, out);
    if (c_replay->parsed()) return cmd_replay(replay_path, replay_per_graph, replay_sigma2, out, in);
    if (c_shrink->parsed()) return cmd_shrink(shrink, out);
  } catch (const Error& e) {
    err << "irrlab: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "irrlab: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace irrlab
