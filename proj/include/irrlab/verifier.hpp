#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "irrlab/certificate.hpp"
#include "irrlab/claims.hpp"
#include "irrlab/enumeration.hpp"
#include "irrlab/graph.hpp"

namespace irrlab {

inline constexpr std::string_view kVersion = "0.1.0";

enum class Index { kIrr, kSigma, kIrrT };

std::string_view to_string(Index index);
// "irr", "sigma", "irr_t"; Error{kInvalidParams} otherwise.
Index parse_index(std::string_view text);

struct ExtremalWitness {
  std::optional<GraphCertificate> certificate;  // absent above kCertificateLimit
  std::string graph6;
};

struct ExtremalResult {
  GraphClass cls;
  Index index = Index::kIrr;
  std::size_t count = 0;  // graphs scanned
  std::int64_t min_value = 0;
  std::int64_t max_value = 0;
  std::vector<ExtremalWitness> min_witnesses;
  std::vector<ExtremalWitness> max_witnesses;
};

// Full enumeration with every attainer kept. Error{kBudgetExceeded} when the
// class is outside the enumeration budget; an empty class yields count 0.
ExtremalResult extremal_scan(const GraphClass& cls, Index index);

struct VerdictCounts {
  std::size_t holds = 0;
  std::size_t fails = 0;
  std::size_t na = 0;
  std::size_t marginal = 0;

  void add(Verdict v);
  // FAILS over MARGINAL over HOLDS; NOT_APPLICABLE only when nothing applied.
  Verdict overall() const;
};

struct ClaimSummary {
  std::string claim;
  std::string subject;  // class description
  VerdictCounts counts;
};

struct RunInfo {
  std::vector<std::string> corpus;
  std::vector<std::string> claims;
  std::uint64_t seed = 0;
  std::string version{kVersion};
  std::string timestamp;
  bool per_graph_reading = false;
  Sigma2Mode sigma2_mode = Sigma2Mode::kStandard;
};

struct Report {
  RunInfo run;
  std::vector<ClaimOutcome> outcomes;
  std::vector<ExtremalResult> extremal;
  std::vector<ClaimSummary> claim_summaries;
  VerdictCounts summary;
};

struct SuiteOptions {
  EvalOptions eval;
  int workers = 0;  // 0: IRRLAB_WORKERS, else hardware concurrency
  std::vector<Index> extremal_indices;
  std::uint64_t seed = 0;
};

// "all" or an empty filter selects every claim. Error{kUnknownClaimId},
// Error{kBudgetExceeded}.
std::vector<const Claim*> select_claims(const std::vector<std::string>& filter);

// Evaluates every selected claim on every applicable subject: class-level
// claims once per accepted class, the rest once per graph. Output order is
// corpus order, then claim order, then graph order, whatever the worker count.
Report run_suite(const std::vector<GraphClass>& corpus, const std::vector<std::string>& claim_filter,
                 const SuiteOptions& options = {});

std::vector<ClaimOutcome> find_counterexamples(const Claim& claim, const std::vector<GraphClass>& corpus,
                                               std::size_t limit, const EvalOptions& options = {});

struct ShrinkResult {
  Graph graph;
  std::optional<std::pair<int, int>> parts;
};

// Greedy single-edge then single-vertex deletions in lexicographic order,
// restarting after every accepted move, until no move keeps the failure.
// Error{kNotAFailure} when the input does not fail; Error{kKindMismatch}
// for claims that only take classes.
ShrinkResult shrink_counterexample(const Graph& g, const Claim& claim, const std::optional<ClaimParams>& params,
                                   const std::optional<std::pair<int, int>>& parts = std::nullopt,
                                   const EvalOptions& options = {});

struct ReplayResult {
  Verdict verdict = Verdict::kNotApplicable;
  bool witness_reproduced = false;  // class outcomes: same witness graph found again
};

// Re-evaluates an outcome's witness from its serialised form alone.
// Error{kNotAFailure} when the outcome carries no witness.
ReplayResult replay_witness(const ClaimOutcome& outcome, const EvalOptions& options = {});

int worker_count(int requested);

}  // namespace irrlab
