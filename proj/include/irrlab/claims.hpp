#pragma once

// Every bound, identity and extremal statement under test, encoded as data
// plus an exact evaluator. The verifier never interprets a claim itself; all
// readings (class versus per-graph extrema, the sigma2 variant, the iff
// interpretation) are decided here.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "irrlab/enumeration.hpp"
#include "irrlab/graph.hpp"
#include "irrlab/invariants.hpp"
#include "irrlab/number.hpp"

namespace irrlab {

enum class ClaimKind { kPerGraph, kClassExtremal, kIffCharacterization, kIdentity };
enum class Verdict { kHolds, kFails, kNotApplicable, kMarginal };
enum class Relation { kLessEqual, kLess, kGreaterEqual, kGreater, kEqual };

// Admissible (alpha, p) grids.
enum class ParamSpace {
  kNone,
  kAlpha,         // 1 <= alpha <= Delta - 3
  kAlphaP,        // 1 <= p <= alpha <= Delta - 3
  kAlphaPToMax,   // 1 <= p <= alpha <= Delta, excluding 2 Delta == 3 p
};

std::string_view to_string(ClaimKind kind);
std::string_view to_string(Verdict verdict);
std::string_view to_string(Relation relation);

inline constexpr double kMarginalTolerance = 1e-9;

struct ClaimParams {
  std::optional<int> alpha;
  std::optional<int> p;

  bool operator==(const ClaimParams&) const = default;
};

struct EvalOptions {
  // Read irr_min / irr_max / sigma_min in the parameterised tree bounds as
  // the value of each individual tree instead of the class extremum.
  bool per_graph_reading = false;
  Sigma2Mode sigma2_mode = Sigma2Mode::kStandard;
};

struct Witness {
  std::string graph6;
  std::optional<std::pair<int, int>> parts;
  ClaimParams params;
};

struct ClaimOutcome {
  std::string claim;
  std::string part;  // sub-assertion name; empty for single-inequality claims
  std::string subject;  // graph6 for graph subjects, class description otherwise
  bool subject_is_class = false;
  std::optional<std::pair<int, int>> parts;  // declared bipartition sizes of a graph subject
  ClaimParams params;
  std::optional<Number> lhs;
  std::optional<Number> rhs;
  Relation relation = Relation::kLessEqual;
  Verdict verdict = Verdict::kNotApplicable;
  std::optional<Witness> witness;
  std::string note;
  bool interpreted = false;
};

// A graph under test. Declared parts (n1, n2) mean part one is 0..n1-1;
// without them the deterministic bipartition is used.
struct GraphSubject {
  Graph graph;
  std::optional<std::pair<int, int>> declared_parts;
  InvariantBundle bundle;

  static GraphSubject make(Graph g, std::optional<std::pair<int, int>> parts = std::nullopt,
                           Sigma2Mode mode = Sigma2Mode::kStandard);
};

// An enumerated class with its invariants, shared by every class-level claim.
struct ClassSubject {
  GraphClass cls;
  std::vector<Graph> graphs;
  std::vector<InvariantBundle> bundles;

  static ClassSubject make(const GraphClass& cls, Sigma2Mode mode = Sigma2Mode::kStandard);
};

struct Claim;

using GraphEvaluator = std::vector<ClaimOutcome> (*)(const Claim&, const GraphSubject&, const ClaimParams&,
                                                     const EvalOptions&);
using ClassEvaluator = std::vector<ClaimOutcome> (*)(const Claim&, const ClassSubject&, const ClaimParams&,
                                                     const EvalOptions&);

struct Claim {
  std::string id;
  std::string statement;
  ClaimKind kind;
  std::string guard;
  ParamSpace param_space = ParamSpace::kNone;
  std::string source;  // short name of the statement being checked
  std::vector<std::string> parts;
  std::vector<ClassKind> class_kinds;  // accepted classes for class-level claims
  GraphEvaluator on_graph = nullptr;   // per-graph evaluation (or per-graph reading)
  ClassEvaluator on_class = nullptr;
  std::string interpretation;          // non-empty when the reading is a recorded choice

  bool takes_graph(const EvalOptions& options) const;
  bool takes_class(ClassKind kind, const EvalOptions& options) const;
};

const std::vector<Claim>& registry();

// Throws Error{kUnknownClaimId}.
const Claim& find_claim(std::string_view id);

// Full admissible grid for the claim at maximum degree max_degree.
std::vector<ClaimParams> admissible_params(const Claim& claim, int max_degree);

// With params given, evaluates at that point only (Error{kInadmissibleParams}
// if it is outside the grid). Without, sweeps the grid and reports the worst
// point per sub-assertion. Error{kKindMismatch} if the claim does not take
// this kind of subject.
std::vector<ClaimOutcome> evaluate(const Claim& claim, const GraphSubject& subject,
                                   const std::optional<ClaimParams>& params = std::nullopt,
                                   const EvalOptions& options = {});
std::vector<ClaimOutcome> evaluate(const Claim& claim, const ClassSubject& subject,
                                   const std::optional<ClaimParams>& params = std::nullopt,
                                   const EvalOptions& options = {});

// lhs REL rhs; exact when both sides are exact, otherwise within the
// MARGINAL band of 1e-9 relative to max(1, |rhs|).
Verdict decide(const Number& lhs, Relation relation, const Number& rhs);

}  // namespace irrlab
