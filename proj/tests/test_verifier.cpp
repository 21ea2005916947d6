#include <doctest.h>

#include <set>

#include "irrlab/error.hpp"
#include "irrlab/generators.hpp"
#include "irrlab/graph6.hpp"
#include "irrlab/invariants.hpp"
#include "irrlab/report.hpp"
#include "irrlab/verifier.hpp"

using namespace irrlab;

TEST_CASE("extremal scan over trees") {
  const auto r = extremal_scan(GraphClass::trees(6), Index::kIrr);
  CHECK(r.count == 6);
  CHECK(r.min_value == 2);
  CHECK(r.max_value == 20);
  REQUIRE(r.max_witnesses.size() == 1);
  CHECK(r.max_witnesses[0].graph6 == "Esa?");
  CHECK(r.min_witnesses[0].graph6 == "Eh_G");
  const auto s = extremal_scan(GraphClass::trees(5), Index::kSigma);
  CHECK(s.max_value == 36);
  const auto t = extremal_scan(GraphClass::trees(5), Index::kIrrT);
  CHECK(t.max_value == 12);
  CHECK(t.min_value == 6);
  CHECK(extremal_scan(GraphClass::trees_max_degree(5, 5), Index::kIrr).count == 0);
  CHECK_THROWS_AS(extremal_scan(GraphClass::connected(8), Index::kIrr), Error);
  CHECK(parse_index("irr_t") == Index::kIrrT);
  CHECK_THROWS_AS(parse_index("zagreb"), Error);
}

TEST_CASE("counterexample search") {
  std::vector<GraphClass> corpus;
  for (int n = 2; n <= 7; ++n) corpus.push_back(GraphClass::trees(n));
  const auto c6 = find_counterexamples(find_claim("C6"), corpus, 100);
  CHECK(c6.size() == 4);
  for (const auto& o : c6) {
    REQUIRE(o.witness);
    const Graph w = parse_graph6(o.witness->graph6);
    CHECK(w == generate_star(w.order()));
    CHECK(sigma(w) == static_cast<std::int64_t>(w.order() - 1) * (w.order() - 2) * (w.order() - 2));
  }
  CHECK(find_counterexamples(find_claim("C6"), corpus, 2).size() == 2);
  CHECK(find_counterexamples(find_claim("C26"), corpus, 100).empty());
}

TEST_CASE("shrinking") {
  const auto& c4 = find_claim("C4");
  const auto small = shrink_counterexample(generate_star(8), c4, std::nullopt);
  CHECK(small.graph.size() == 3);
  CHECK(albertson(small.graph) == 6);
  const auto again = shrink_counterexample(small.graph, c4, std::nullopt);
  CHECK(again.graph == small.graph);
  try {
    shrink_counterexample(generate_path(5), c4, std::nullopt);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotAFailure);
  }
  CHECK_THROWS_AS(shrink_counterexample(generate_star(5), find_claim("C6"), std::nullopt), Error);
}

TEST_CASE("replay through the JSON report") {
  std::vector<GraphClass> corpus{GraphClass::trees(5), GraphClass::trees(6)};
  const Report rep = run_suite(corpus, {"C6", "C4"});
  const auto back = outcomes_from_json(report_to_json(rep));
  CHECK(back.size() == rep.outcomes.size());
  std::size_t replayed = 0;
  for (const auto& o : back) {
    if (o.verdict != Verdict::kFails) continue;
    const auto r = replay_witness(o);
    CHECK(r.verdict == Verdict::kFails);
    CHECK(r.witness_reproduced);
    ++replayed;
  }
  CHECK(replayed > 2);
  ClaimOutcome none;
  none.claim = "C6";
  CHECK_THROWS_AS(replay_witness(none), Error);
}

TEST_CASE("suite output does not depend on the worker count") {
  std::vector<GraphClass> corpus{GraphClass::trees(8), GraphClass::connected(5), GraphClass::bipartite(2, 3, false),
                                 GraphClass::trees_max_degree(8, 5)};
  SuiteOptions one;
  one.workers = 1;
  one.extremal_indices = {Index::kIrr, Index::kSigma};
  SuiteOptions many = one;
  many.workers = 6;
  const auto a = report_to_json(run_suite(corpus, {}, one));
  const auto b = report_to_json(run_suite(corpus, {}, many));
  CHECK(a == b);
  CHECK(report_to_csv(run_suite(corpus, {"C1"}, one)) == report_to_csv(run_suite(corpus, {"C1"}, many)));
}

TEST_CASE("verdict counts") {
  VerdictCounts v;
  CHECK(v.overall() == Verdict::kNotApplicable);
  v.add(Verdict::kHolds);
  v.add(Verdict::kNotApplicable);
  CHECK(v.overall() == Verdict::kHolds);
  v.add(Verdict::kMarginal);
  CHECK(v.overall() == Verdict::kMarginal);
  v.add(Verdict::kFails);
  CHECK(v.overall() == Verdict::kFails);
  CHECK(select_claims({}).size() == 27);
  CHECK(select_claims({"all"}).size() == 27);
  CHECK_THROWS_AS(select_claims({"C0"}), Error);
  CHECK(worker_count(3) == 3);
  CHECK(worker_count(0) >= 1);
}
