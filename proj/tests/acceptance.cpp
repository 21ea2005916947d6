// Acceptance runner: one PASS/FAIL line per criterion.
//
//   acceptance                 every criterion
//   acceptance --criterion N   only criterion N
//
// Exit status is 0 when every selected criterion passes.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>
#include <unistd.h>

#include "irrlab/certificate.hpp"
#include "irrlab/claims.hpp"
#include "irrlab/cli.hpp"
#include "irrlab/enumeration.hpp"
#include "irrlab/error.hpp"
#include "irrlab/generators.hpp"
#include "irrlab/graph6.hpp"
#include "irrlab/invariants.hpp"
#include "irrlab/report.hpp"
#include "irrlab/verifier.hpp"
#include "oracles.hpp"

using namespace irrlab;

namespace {

// Wall-clock limits in seconds.
constexpr double kExampleLimit = 1.0;
constexpr double kTreeCountLimit = 30.0;
constexpr double kExtremalLimit = 60.0;
constexpr double kSandwichLimit = 300.0;
constexpr double kBipartiteSweepLimit = 600.0;

struct Result {
  bool pass = true;
  std::string detail;
};

struct CliRun {
  int code = 0;
  std::string out;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  std::istringstream in;
  const int code = run_cli(args, out, err, in);
  return {code, out.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("irrlab_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  return dir / name;
}

void fail(Result& r, const std::string& why) {
  if (r.pass) r.detail.clear();
  r.pass = false;
  if (!r.detail.empty()) r.detail += "; ";
  r.detail += why;
}

void note(Result& r, const std::string& what) {
  if (!r.pass) return;
  if (!r.detail.empty()) r.detail += "; ";
  r.detail += what;
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (coin(rng)) e.emplace_back(a, b);
    }
  }
  return Graph(n, e);
}

// Every FAILS outcome read back from JSON must replay to FAILS.
std::size_t replay_all(const Report& report, const EvalOptions& options, Result& r) {
  std::size_t replayed = 0;
  for (const auto& o : outcomes_from_json(report_to_json(report))) {
    if (o.verdict != Verdict::kFails) continue;
    const auto back = replay_witness(o, options);
    if (back.verdict != Verdict::kFails || !back.witness_reproduced) {
      fail(r, "witness of " + o.claim + " on " + o.subject + " did not replay");
    }
    ++replayed;
  }
  return replayed;
}

Result example_reproduction() {
  Result r;
  static const std::map<std::pair<int, int>, std::pair<std::int64_t, std::int64_t>> published{
      {{15, 15}, {326, 2394}}, {{15, 17}, {556, 3640}}};
  for (const auto& [nm, values] : published) {
    const auto run = cli({"example", std::to_string(nm.first), std::to_string(nm.second)});
    const Graph g = generate_example_construction({nm.first, nm.second});
    const std::string computed = "irr=" + std::to_string(albertson(g)) + " sigma=" + std::to_string(sigma(g));
    if (run.code != 0) fail(r, "example exited " + std::to_string(run.code));
    const bool match = albertson(g) == values.first && sigma(g) == values.second;
    const std::string verdict = match ? "MATCH" : "MISMATCH";
    if (run.out.find(verdict) == std::string::npos || run.out.find(computed) == std::string::npos) {
      fail(r, "example output does not carry the computed values and verdict");
    }
    note(r, "(" + std::to_string(nm.first) + "," + std::to_string(nm.second) + ") " + computed + " " + verdict);
  }
  return r;
}

Result tree_counts() {
  Result r;
  const std::vector<std::size_t> counts{1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235};
  for (int n = 1; n <= 11; ++n) {
    const auto got = enumerate_free_trees(n).size();
    if (got != counts[static_cast<std::size_t>(n - 1)]) fail(r, "n=" + std::to_string(n) + " got " + std::to_string(got));
  }
  for (int n = 1; n <= 9; ++n) {
    const auto got = oracle::pruefer_tree_count(n, oracle::tree_code);
    if (got != counts[static_cast<std::size_t>(n - 1)]) {
      fail(r, "Pruefer oracle n=" + std::to_string(n) + " got " + std::to_string(got));
    }
  }
  note(r, "counts n=1..11 and Pruefer oracle n<=9 agree");
  return r;
}

Result irr_extrema_unique() {
  Result r;
  for (int n = 4; n <= 10; ++n) {
    const auto e = extremal_scan(GraphClass::trees(n), Index::kIrr);
    const std::string tag = "n=" + std::to_string(n);
    if (e.max_value != std::int64_t{n - 1} * (n - 2)) fail(r, tag + " max " + std::to_string(e.max_value));
    if (e.min_value != 2) fail(r, tag + " min " + std::to_string(e.min_value));
    if (e.max_witnesses.size() != 1 || e.max_witnesses[0].certificate != certificate(generate_star(n))) {
      fail(r, tag + " max witness is not the star alone");
    }
    if (e.min_witnesses.size() != 1 || e.min_witnesses[0].certificate != certificate(generate_path(n))) {
      fail(r, tag + " min witness is not the path alone");
    }
  }
  note(r, "n=4..10 max (n-1)(n-2) by star only, min 2 by path only");
  return r;
}

Result total_irregularity_extrema() {
  Result r;
  for (int n = 4; n <= 10; ++n) {
    const auto e = extremal_scan(GraphClass::trees(n), Index::kIrrT);
    if (e.max_value != std::int64_t{n - 1} * (n - 2) || e.min_value != 2 * std::int64_t{n - 2}) {
      fail(r, "n=" + std::to_string(n) + " got [" + std::to_string(e.min_value) + "," + std::to_string(e.max_value) + "]");
    }
  }
  note(r, "n=4..10 irr_t in [2(n-2), (n-1)(n-2)]");
  return r;
}

Result identity_suites() {
  Result r;
  std::mt19937_64 rng(20240601);
  std::size_t graphs = 0;
  for (int i = 0; i < 1000; ++i) {
    const Graph g = random_graph(1 + static_cast<int>(rng() % 30), 0.05 + 0.1 * (i % 9), rng);
    if (total_irregularity_formula(g) != total_irregularity_pairwise(g)) fail(r, "irr_t mismatch on " + write_graph6(g));
    ++graphs;
  }
  for (int n = 1; n <= 10; ++n) {
    for (const auto& t : enumerate_free_trees(n)) {
      if (total_irregularity_formula(t) != total_irregularity_pairwise(t)) fail(r, "irr_t mismatch on " + write_graph6(t));
      ++graphs;
    }
  }
  for (int i = 0; i < 1000; ++i) {
    const int k = 2 + static_cast<int>(rng() % 8);
    std::vector<int> spine(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) {
      spine[static_cast<std::size_t>(j)] = ((j == 0 || j == k - 1) ? 1 : 2) + static_cast<int>(rng() % 7);
    }
    if (caterpillar_irr_closed_form(spine) != albertson(generate_caterpillar(spine))) fail(r, "caterpillar mismatch");
  }
  const auto& c27 = find_claim("C27");
  for (int s = 1; s <= 12; ++s) {
    for (int t = 1; t <= 12; ++t) {
      for (const auto& o : evaluate(c27, GraphSubject::make(generate_complete_bipartite(s, t), std::pair{s, t}))) {
        if (o.verdict != Verdict::kHolds) fail(r, "K_{" + std::to_string(s) + "," + std::to_string(t) + "} " + o.part);
      }
    }
  }
  note(r, std::to_string(graphs) + " irr_t checks, 1000 spines, 144 complete bipartite graphs");
  return r;
}

std::vector<GraphClass> bipartite_cells(int cells) {
  std::vector<GraphClass> out;
  for (int n1 = 1; n1 <= cells; ++n1) {
    for (int n2 = 1; n1 * n2 <= cells; ++n2) {
      out.push_back(GraphClass::bipartite(n1, n2, false));
      out.push_back(GraphClass::bipartite(n1, n2, true));
    }
  }
  return out;
}

Result sandwich_and_variance() {
  Result r;
  std::vector<GraphClass> corpus;
  for (int n = 1; n <= 10; ++n) corpus.push_back(GraphClass::trees(n));
  for (const auto& c : bipartite_cells(20)) corpus.push_back(c);
  for (int n = 1; n <= 7; ++n) corpus.push_back(GraphClass::connected(n));
  const Report rep = run_suite(corpus, {"C26", "C4"});
  std::map<std::string, VerdictCounts> per_claim;
  for (const auto& o : rep.outcomes) per_claim[o.claim].add(o.verdict);
  std::string counts;
  for (const auto& [id, c] : per_claim) {
    counts += id + " holds=" + std::to_string(c.holds) + " fails=" + std::to_string(c.fails) +
              " na=" + std::to_string(c.na) + " ";
    if (c.fails > 0) fail(r, id + " has " + std::to_string(c.fails) + " FAILS");
  }
  if (!r.pass) {
    for (const auto& o : rep.outcomes) {
      if (o.verdict == Verdict::kFails && o.witness) {
        r.detail += "; first " + o.claim + " witness " + o.witness->graph6;
        break;
      }
    }
  }
  if (r.pass) note(r, counts);
  else r.detail += "; " + counts;
  return r;
}

Result sigma_maximum_refuted() {
  Result r;
  std::vector<GraphClass> corpus;
  for (int n = 4; n <= 8; ++n) corpus.push_back(GraphClass::trees(n));
  const Report rep = run_suite(corpus, {"C6"});
  for (int n = 4; n <= 8; ++n) {
    const std::string subject = GraphClass::trees(n).description();
    bool seen = false;
    for (const auto& o : rep.outcomes) {
      if (o.subject != subject || o.part != "max") continue;
      seen = true;
      const std::int64_t brute = extremal_scan(GraphClass::trees(n), Index::kSigma).max_value;
      if (brute != std::int64_t{n - 1} * (n - 2) * (n - 2)) fail(r, subject + " sigma_max " + std::to_string(brute));
      if (o.verdict != Verdict::kFails) fail(r, subject + " verdict " + std::string(to_string(o.verdict)));
      if (!o.witness) {
        fail(r, subject + " has no witness");
        continue;
      }
      const Graph w = parse_graph6(o.witness->graph6);
      if (certificate(w) != certificate(generate_star(n))) fail(r, subject + " witness is not the star");
      if (sigma(w) != brute || sigma(w) <= std::int64_t{n - 1} * (n - 2)) fail(r, subject + " witness sigma wrong");
    }
    if (!seen) fail(r, subject + " missing");
  }
  replay_all(rep, {}, r);
  const auto path = scratch("sigma_max.json");
  const auto run = cli({"verify", "--trees", "4..8", "--claims", "C6", "--out", path.string(), "--no-timestamp"});
  if (run.code != 1) fail(r, "verify exit " + std::to_string(run.code));
  const auto replay = cli({"replay", path.string()});
  if (replay.code != 0) fail(r, "replay exit " + std::to_string(replay.code));
  note(r, "FAILS for n=4..8 with star witnesses, verify exit 1, replay exit 0");
  return r;
}

Result bipartite_sweep() {
  Result r;
  const std::vector<std::string> claims{"C20", "C22", "C23", "C24", "C25"};
  const auto corpus = bipartite_cells(20);
  const Report rep = run_suite(corpus, claims);
  std::set<std::pair<std::string, std::string>> pairs;
  for (const auto& s : rep.claim_summaries) pairs.emplace(s.claim, s.subject);
  for (const auto& cls : corpus) {
    for (const auto& id : claims) {
      if (!pairs.count({id, cls.description()})) fail(r, "no verdict for " + id + " on " + cls.description());
    }
  }
  static const std::set<std::string> guards{"not bipartite", "no edges", "min degree < 2", "max degree < 3",
                                            "m <= 3*max degree"};
  for (const auto& o : rep.outcomes) {
    if (o.verdict == Verdict::kNotApplicable && !guards.count(o.note)) {
      fail(r, "unexpected NOT_APPLICABLE for " + o.claim + ": " + o.note);
      break;
    }
  }
  const auto c20 = evaluate(find_claim("C20"), GraphSubject::make(generate_complete_bipartite(2, 2), std::pair{2, 2}));
  const auto top = extremal_scan(GraphClass::bipartite(2, 2, false), Index::kIrr).max_value;
  if (!c20[0].rhs || !c20[0].rhs->is_exact() || c20[0].rhs->exact() != Rational(64, 27)) fail(r, "C20 bound at (2,2)");
  if (top != 2) fail(r, "enumerated max irr at (2,2) is " + std::to_string(top));
  note(r, std::to_string(pairs.size()) + " (claim, class) verdicts, fails=" + std::to_string(rep.summary.fails) +
              ", C20 at (2,2) bound 64/27 vs max 2");
  return r;
}

Result parameterised_tree_bounds() {
  Result r;
  std::vector<GraphClass> corpus;
  for (int n = 5; n <= 10; ++n) {
    for (int d = 4; d <= n - 1; ++d) corpus.push_back(GraphClass::trees_max_degree(n, d));
  }
  const std::vector<std::string> claims{"C9", "C10", "C11", "C15", "C16", "C17"};
  SuiteOptions one;
  one.workers = 1;
  SuiteOptions many;
  many.workers = 4;
  const Report a = run_suite(corpus, claims, one);
  const Report b = run_suite(corpus, claims, many);
  if (report_to_json(a) != report_to_json(b)) fail(r, "repeat runs differ");
  std::size_t applied = 0, radical = 0;
  for (const auto& o : a.outcomes) {
    if (o.verdict == Verdict::kNotApplicable) continue;
    ++applied;
    if (!o.lhs || !o.rhs || !o.lhs->is_closed_form() || !o.rhs->is_closed_form()) {
      fail(r, o.claim + " on " + o.subject + " lacks an exact side");
    }
    if (o.lhs && o.lhs->is_radical()) ++radical;
    if (o.verdict == Verdict::kMarginal) fail(r, o.claim + " on " + o.subject + " is MARGINAL");
  }
  const std::size_t replayed = replay_all(a, {}, r);
  note(r, std::to_string(corpus.size()) + " classes, " + std::to_string(applied) + " applied outcomes (" +
              std::to_string(radical) + " with an exact square-root side), " + std::to_string(a.summary.fails) +
              " FAILS, " + std::to_string(replayed) + " replayed, repeat runs identical");
  return r;
}

std::string without_timestamp(const std::string& json) {
  auto j = nlohmann::json::parse(json);
  j["run"].erase("timestamp");
  return j.dump();
}

Result determinism_and_exit_codes() {
  Result r;
  const std::vector<std::string> base{"verify", "--trees", "4..9", "--bipartite-cells", "12", "--connected", "5",
                                      "--extremal", "irr", "--workers"};
  auto run_to = [&](const std::string& name, const std::string& workers, bool stamp) {
    auto args = base;
    args.push_back(workers);
    args.push_back("--out");
    args.push_back(scratch(name).string());
    if (!stamp) args.push_back("--no-timestamp");
    const auto run = cli(args);
    return std::pair{run.code, slurp(scratch(name))};
  };
  const auto first = run_to("a.json", "1", false);
  const auto second = run_to("b.json", "3", false);
  if (first.second.empty() || first.second != second.second) fail(r, "JSON differs between identical runs");
  const auto stamped = run_to("c.json", "2", true);
  if (without_timestamp(stamped.second) != without_timestamp(first.second)) fail(r, "JSON differs beyond timestamp");
  const auto ok = cli({"verify", "--trees", "4..8", "--claims", "C1,C3,C26"});
  const auto refuted = cli({"verify", "--trees", "4..8", "--claims", "C6"});
  const auto usage = cli({"verify", "--trees", "4..8", "--claims", "C99"});
  if (ok.code != 0) fail(r, "holding run exited " + std::to_string(ok.code));
  if (refuted.code != 1) fail(r, "failing run exited " + std::to_string(refuted.code));
  if (usage.code != 2) fail(r, "bad claim id exited " + std::to_string(usage.code));
  note(r, "byte-identical JSON, exit codes 0/1/2 as expected");
  return r;
}

using Criterion = std::function<Result()>;

struct Entry {
  int id;
  std::string name;
  Criterion run;
  double limit;  // seconds; 0 for none
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Entry> entries{
      {1, "example construction indices", example_reproduction, kExampleLimit},
      {2, "free tree counts", tree_counts, kTreeCountLimit},
      {3, "irr extrema over trees", irr_extrema_unique, kExtremalLimit},
      {4, "irr_t extrema over trees", total_irregularity_extrema, 0},
      {5, "identity suites", identity_suites, 0},
      {6, "sandwich and variance bounds", sandwich_and_variance, kSandwichLimit},
      {7, "sigma maximum refutation", sigma_maximum_refuted, 0},
      {8, "bipartite bound sweep", bipartite_sweep, kBipartiteSweepLimit},
      {9, "parameterised tree bounds", parameterised_tree_bounds, 0},
      {10, "report determinism and exit codes", determinism_and_exit_codes, 0},
  };
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--criterion N]\n";
      return 2;
    }
  }
  bool all = true;
  for (const auto& e : entries) {
    if (only != 0 && e.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = e.run();
    } catch (const std::exception& ex) {
      r.pass = false;
      r.detail = std::string("exception: ") + ex.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (e.limit > 0 && seconds >= e.limit) fail(r, "took longer than " + std::to_string(e.limit) + " s");
    std::ostringstream time;
    time.precision(3);
    time << std::fixed << seconds;
    std::cout << "criterion " << e.id << " " << (r.pass ? "PASS" : "FAIL") << " " << e.name << " [" << time.str()
              << " s] " << r.detail << '\n';
    all = all && r.pass;
  }
  std::error_code ec;
  std::filesystem::remove_all(scratch("x").parent_path(), ec);
  return all ? 0 : 1;
}
