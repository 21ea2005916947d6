#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "irrlab/graph.hpp"
#include "irrlab/number.hpp"

namespace irrlab {

// Albertson index: sum over edges of |deg(u) - deg(v)|.
std::int64_t albertson(const Graph& g);

// Sigma index: sum over edges of (deg(u) - deg(v))^2.
std::int64_t sigma(const Graph& g);

// (sum over edges |deg(u) - deg(v)|^p)^(1/p). Throws Error{kNonPositiveP} for p <= 0.
double general_albertson(const Graph& g, double p);

// Sum over all unordered vertex pairs of |deg(u) - deg(v)|.
std::int64_t total_irregularity_pairwise(const Graph& g);

// 2(n+1)m - 2 * sum_i i * d_i over the descending degree sequence, i 1-based.
std::int64_t total_irregularity_formula(const Graph& g);

std::int64_t zagreb_m1(const Graph& g);
std::int64_t zagreb_m2(const Graph& g);

enum class Sigma2Mode {
  kStandard,  // min deg(u) + deg(v) over non-adjacent pairs
  kLiteral,   // min deg(u) + deg(u), the set-builder exactly as printed
};

// Minimum degree sum over non-adjacent distinct pairs (including pairs in
// different components). Throws Error{kCompleteGraph} when no such pair exists.
std::int64_t sigma2_min_nonadjacent(const Graph& g, Sigma2Mode mode = Sigma2Mode::kStandard);

// 2m / n, exact.
Rational average_degree(const Graph& g);

// Closed-form Albertson index of the caterpillar whose spine vertices have the
// given degrees (ends d >= 1, interior d >= 2). Throws Error{kInvalidSpine}.
std::int64_t caterpillar_irr_closed_form(std::span<const int> spine);

struct InvariantBundle {
  int n = 0;
  int m = 0;
  int min_degree = 0;
  int max_degree = 0;
  std::int64_t irr = 0;
  std::int64_t sigma = 0;
  std::int64_t irr_t = 0;
  std::int64_t m1 = 0;
  std::int64_t m2 = 0;
  std::optional<std::int64_t> sigma2;  // absent for complete graphs
  Rational deg_ave;
};

InvariantBundle invariant_bundle(const Graph& g, Sigma2Mode mode = Sigma2Mode::kStandard);

// Edge-by-edge evaluation straight from the definitions, bypassing the
// degree kernels. Kept as the independent route for equivalence checks.
namespace definitional {
std::int64_t albertson(const Graph& g);
std::int64_t sigma(const Graph& g);
std::int64_t zagreb_m1(const Graph& g);
std::int64_t zagreb_m2(const Graph& g);
}  // namespace definitional

}  // namespace irrlab
