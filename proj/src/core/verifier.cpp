#include "irrlab/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>

#include "irrlab/error.hpp"
#include "irrlab/graph6.hpp"
#include "irrlab/invariants.hpp"

namespace irrlab {

std::string_view to_string(Index index) {
  switch (index) {
    case Index::kIrr: return "irr";
    case Index::kSigma: return "sigma";
    case Index::kIrrT: return "irr_t";
  }
  return "?";
}

Index parse_index(std::string_view text) {
  if (text == "irr") return Index::kIrr;
  if (text == "sigma") return Index::kSigma;
  if (text == "irr_t") return Index::kIrrT;
  throw Error(ErrorCode::kInvalidParams, "unknown index '" + std::string(text) + "'");
}

void VerdictCounts::add(Verdict v) {
  switch (v) {
    case Verdict::kHolds: ++holds; break;
    case Verdict::kFails: ++fails; break;
    case Verdict::kNotApplicable: ++na; break;
    case Verdict::kMarginal: ++marginal; break;
  }
}

Verdict VerdictCounts::overall() const {
  if (fails > 0) return Verdict::kFails;
  if (marginal > 0) return Verdict::kMarginal;
  if (holds > 0) return Verdict::kHolds;
  return Verdict::kNotApplicable;
}

int worker_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("IRRLAB_WORKERS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

std::int64_t index_value(const Graph& g, Index index) {
  switch (index) {
    case Index::kIrr: return albertson(g);
    case Index::kSigma: return sigma(g);
    case Index::kIrrT: return total_irregularity_formula(g);
  }
  return 0;
}

ExtremalWitness witness_of(const Graph& g) {
  ExtremalWitness w;
  if (g.order() <= kCertificateLimit) w.certificate = certificate(g);
  w.graph6 = write_graph6(g);
  return w;
}

// Runs body(i) for i in [0, n) on a pool; each i writes only its own slot.
template <class Body>
void parallel_for(std::size_t n, int workers, Body body) {
  const std::size_t pool = std::min<std::size_t>(static_cast<std::size_t>(std::max(workers, 1)), n);
  if (pool <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  std::vector<std::thread> threads;
  threads.reserve(pool);
  for (std::size_t t = 0; t < pool; ++t) {
    threads.emplace_back([&] {
      for (std::size_t i = next++; i < n && !failed; i = next++) {
        try {
          body(i);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& th : threads) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

ExtremalResult extremal_scan(const GraphClass& cls, Index index) {
  if (!cls.within_budget()) {
    throw Error(ErrorCode::kBudgetExceeded, cls.description() + " is outside the enumeration budget");
  }
  ExtremalResult r;
  r.cls = cls;
  r.index = index;
  const auto graphs = enumerate_class(cls);
  r.count = graphs.size();
  bool first = true;
  for (const auto& g : graphs) {
    const std::int64_t v = index_value(g, index);
    if (first || v < r.min_value) {
      r.min_value = v;
      r.min_witnesses.clear();
    }
    if (first || v > r.max_value) {
      r.max_value = v;
      r.max_witnesses.clear();
    }
    first = false;
    if (v == r.min_value) r.min_witnesses.push_back(witness_of(g));
    if (v == r.max_value) r.max_witnesses.push_back(witness_of(g));
  }
  return r;
}

std::vector<const Claim*> select_claims(const std::vector<std::string>& filter) {
  std::vector<const Claim*> out;
  const bool all = filter.empty() || std::find(filter.begin(), filter.end(), "all") != filter.end();
  if (all) {
    for (const auto& c : registry()) out.push_back(&c);
    return out;
  }
  for (const auto& id : filter) {
    const Claim* c = &find_claim(id);
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  }
  return out;
}

Report run_suite(const std::vector<GraphClass>& corpus, const std::vector<std::string>& claim_filter,
                 const SuiteOptions& options) {
  const auto claims = select_claims(claim_filter);
  for (const auto& cls : corpus) {
    if (!cls.within_budget()) {
      throw Error(ErrorCode::kBudgetExceeded, cls.description() + " is outside the enumeration budget");
    }
  }
  const int workers = worker_count(options.workers);

  Report report;
  report.run.seed = options.seed;
  report.run.per_graph_reading = options.eval.per_graph_reading;
  report.run.sigma2_mode = options.eval.sigma2_mode;
  for (const auto& cls : corpus) report.run.corpus.push_back(cls.description());
  for (const Claim* c : claims) report.run.claims.push_back(c->id);

  std::vector<ClassSubject> subjects(corpus.size());
  parallel_for(corpus.size(), workers,
               [&](std::size_t i) { subjects[i] = ClassSubject::make(corpus[i], options.eval.sigma2_mode); });

  // One task per (class, claim) for class-level claims and per (class, claim,
  // graph) otherwise; slots keep the canonical order.
  struct Task {
    std::size_t cls;
    const Claim* claim;
    std::optional<std::size_t> graph;
  };
  std::vector<Task> tasks;
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    for (const Claim* c : claims) {
      if (c->takes_class(corpus[k].kind, options.eval)) {
        tasks.push_back({k, c, std::nullopt});
      } else if (c->takes_graph(options.eval)) {
        for (std::size_t g = 0; g < subjects[k].graphs.size(); ++g) tasks.push_back({k, c, g});
      }
    }
  }
  std::vector<std::vector<ClaimOutcome>> slots(tasks.size());
  parallel_for(tasks.size(), workers, [&](std::size_t i) {
    const Task& t = tasks[i];
    const ClassSubject& s = subjects[t.cls];
    if (!t.graph) {
      slots[i] = evaluate(*t.claim, s, std::nullopt, options.eval);
      return;
    }
    const auto subject =
        GraphSubject::make(s.graphs[*t.graph], s.cls.declared_parts(), options.eval.sigma2_mode);
    slots[i] = evaluate(*t.claim, subject, std::nullopt, options.eval);
  });

  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const Task& t = tasks[i];
    const std::string desc = corpus[t.cls].description();
    if (report.claim_summaries.empty() || report.claim_summaries.back().claim != t.claim->id ||
        report.claim_summaries.back().subject != desc) {
      report.claim_summaries.push_back({t.claim->id, desc, {}});
    }
    for (auto& o : slots[i]) {
      report.claim_summaries.back().counts.add(o.verdict);
      report.summary.add(o.verdict);
      report.outcomes.push_back(std::move(o));
    }
  }

  for (const auto& cls : corpus) {
    for (Index index : options.extremal_indices) report.extremal.push_back(extremal_scan(cls, index));
  }
  return report;
}

std::vector<ClaimOutcome> find_counterexamples(const Claim& claim, const std::vector<GraphClass>& corpus,
                                               std::size_t limit, const EvalOptions& options) {
  std::vector<ClaimOutcome> out;
  for (const auto& cls : corpus) {
    if (out.size() >= limit) break;
    const ClassSubject s = ClassSubject::make(cls, options.sigma2_mode);
    auto keep = [&](std::vector<ClaimOutcome> batch) {
      for (auto& o : batch) {
        if (o.verdict == Verdict::kFails && out.size() < limit) out.push_back(std::move(o));
      }
    };
    if (claim.takes_class(cls.kind, options)) {
      keep(evaluate(claim, s, std::nullopt, options));
    } else if (claim.takes_graph(options)) {
      for (const auto& g : s.graphs) {
        if (out.size() >= limit) break;
        keep(evaluate(claim, GraphSubject::make(g, cls.declared_parts(), options.sigma2_mode), std::nullopt, options));
      }
    }
  }
  return out;
}

namespace {

bool fails_on(const Claim& claim, const Graph& g, const std::optional<std::pair<int, int>>& parts,
              const std::optional<ClaimParams>& params, const EvalOptions& options) {
  const auto outcomes = evaluate(claim, GraphSubject::make(g, parts, options.sigma2_mode), params, options);
  return std::any_of(outcomes.begin(), outcomes.end(),
                     [](const ClaimOutcome& o) { return o.verdict == Verdict::kFails; });
}

}  // namespace

ShrinkResult shrink_counterexample(const Graph& g, const Claim& claim, const std::optional<ClaimParams>& params,
                                   const std::optional<std::pair<int, int>>& parts, const EvalOptions& options) {
  if (!claim.takes_graph(options)) {
    throw Error(ErrorCode::kKindMismatch, claim.id + " does not take a single graph");
  }
  // Deletions can empty the parameter grid; a fixed point must stay admissible.
  auto still_fails = [&](const Graph& h, const std::optional<std::pair<int, int>>& hp) {
    try {
      return fails_on(claim, h, hp, params, options);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kInadmissibleParams) return false;
      throw;
    }
  };
  if (!still_fails(g, parts)) throw Error(ErrorCode::kNotAFailure, claim.id + " does not fail on the input");
  ShrinkResult cur{g, parts};
  bool moved = true;
  while (moved) {
    moved = false;
    for (const Edge& e : cur.graph.edges()) {
      Graph candidate = delete_edge(cur.graph, e);
      if (still_fails(candidate, cur.parts)) {
        cur.graph = std::move(candidate);
        moved = true;
        break;
      }
    }
    if (moved) continue;
    for (Vertex v = 0; v < cur.graph.order() && cur.graph.order() > 1; ++v) {
      std::optional<std::pair<int, int>> p = cur.parts;
      if (p) {
        if (v < p->first) {
          --p->first;
        } else {
          --p->second;
        }
      }
      Graph candidate = delete_vertex(cur.graph, v);
      if (still_fails(candidate, p)) {
        cur.graph = std::move(candidate);
        cur.parts = p;
        moved = true;
        break;
      }
    }
  }
  return cur;
}

ReplayResult replay_witness(const ClaimOutcome& outcome, const EvalOptions& options) {
  if (!outcome.witness) throw Error(ErrorCode::kNotAFailure, outcome.claim + " outcome carries no witness");
  const Claim& claim = find_claim(outcome.claim);
  const Witness& w = *outcome.witness;
  const bool has_params = claim.param_space != ParamSpace::kNone;
  const std::optional<ClaimParams> params = has_params ? std::optional(w.params) : std::nullopt;
  auto pick = [&](const std::vector<ClaimOutcome>& outs) -> const ClaimOutcome* {
    for (const auto& o : outs) {
      if (o.part == outcome.part) return &o;
    }
    return nullptr;
  };

  ReplayResult r;
  const Graph g = parse_graph6(w.graph6);
  if (!outcome.subject_is_class) {
    const auto outs = evaluate(claim, GraphSubject::make(g, w.parts, options.sigma2_mode), params, options);
    if (const ClaimOutcome* o = pick(outs)) r.verdict = o->verdict;
    r.witness_reproduced = true;
    return r;
  }
  const GraphClass cls = GraphClass::parse(outcome.subject);
  if (!cls.contains(g)) return r;
  const auto outs = evaluate(claim, ClassSubject::make(cls, options.sigma2_mode), params, options);
  if (const ClaimOutcome* o = pick(outs)) {
    r.verdict = o->verdict;
    r.witness_reproduced = o->witness && o->witness->graph6 == w.graph6;
  }
  return r;
}

}  // namespace irrlab
