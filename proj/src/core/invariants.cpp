#include "irrlab/invariants.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>
#include <vector>

#include "irrlab/error.hpp"
#include "irrlab/kernels.hpp"

namespace irrlab {
namespace {

struct EndpointDegrees {
  std::vector<std::int32_t> head;
  std::vector<std::int32_t> tail;
};

EndpointDegrees endpoint_degrees(const Graph& g) {
  EndpointDegrees out;
  out.head.reserve(g.edges().size());
  out.tail.reserve(g.edges().size());
  for (auto [u, v] : g.edges()) {
    out.head.push_back(g.degree(u));
    out.tail.push_back(g.degree(v));
  }
  return out;
}

}  // namespace

std::int64_t albertson(const Graph& g) {
  auto e = endpoint_degrees(g);
  return kernels::active().abs_diff_sum(e.head, e.tail);
}

std::int64_t sigma(const Graph& g) {
  auto e = endpoint_degrees(g);
  return kernels::active().sq_diff_sum(e.head, e.tail);
}

double general_albertson(const Graph& g, double p) {
  if (!(p > 0)) throw Error(ErrorCode::kNonPositiveP, "p must be positive, got " + std::to_string(p));
  if (p == 1.0) return static_cast<double>(albertson(g));
  if (p == 2.0) return std::sqrt(static_cast<double>(sigma(g)));
  long double total = 0;
  for (auto [u, v] : g.edges()) {
    total += std::pow(static_cast<long double>(std::abs(g.degree(u) - g.degree(v))), static_cast<long double>(p));
  }
  return static_cast<double>(std::pow(total, 1.0L / static_cast<long double>(p)));
}

std::int64_t total_irregularity_pairwise(const Graph& g) {
  return kernels::active().pairwise_abs_diff_sum(g.degrees());
}

std::int64_t total_irregularity_formula(const Graph& g) {
  const DegreeSequence seq = degree_sequence(g);
  const std::int64_t n = g.order();
  const std::int64_t m = g.size();
  std::int64_t weighted = 0;
  for (std::size_t i = 0; i < seq.degrees.size(); ++i) {
    weighted += static_cast<std::int64_t>(i + 1) * seq.degrees[i];
  }
  return 2 * (n + 1) * m - 2 * weighted;
}

std::int64_t zagreb_m1(const Graph& g) { return kernels::active().square_sum(g.degrees()); }

std::int64_t zagreb_m2(const Graph& g) {
  auto e = endpoint_degrees(g);
  return kernels::active().product_sum(e.head, e.tail);
}

std::int64_t sigma2_min_nonadjacent(const Graph& g, Sigma2Mode mode) {
  const int n = g.order();
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  bool found = false;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v)) continue;
      found = true;
      if (mode == Sigma2Mode::kStandard) {
        best = std::min<std::int64_t>(best, g.degree(u) + g.degree(v));
      } else {
        best = std::min<std::int64_t>(best, 2 * std::min(g.degree(u), g.degree(v)));
      }
    }
  }
  if (!found) throw Error(ErrorCode::kCompleteGraph, "sigma2 undefined on a complete graph");
  return best;
}

Rational average_degree(const Graph& g) { return Rational(2 * g.size(), g.order()); }

std::int64_t caterpillar_irr_closed_form(std::span<const int> spine) {
  const std::size_t k = spine.size();
  if (k < 2) throw Error(ErrorCode::kInvalidSpine, "spine needs at least two vertices");
  if (spine.front() < 1 || spine.back() < 1) throw Error(ErrorCode::kInvalidSpine, "end degree below 1");
  for (std::size_t i = 1; i + 1 < k; ++i) {
    if (spine[i] < 2) throw Error(ErrorCode::kInvalidSpine, "interior degree below 2 at position " + std::to_string(i));
  }
  auto sq = [](std::int64_t x) { return x * x; };
  std::int64_t total = sq(spine.back() - 1) + sq(spine.front() - 1);
  for (std::size_t i = 1; i + 1 < k; ++i) {
    total += std::int64_t{spine[i] - 1} * (spine[i] - 2);
  }
  for (std::size_t i = 0; i + 1 < k; ++i) total += std::abs(spine[i] - spine[i + 1]);
  return total;
}

InvariantBundle invariant_bundle(const Graph& g, Sigma2Mode mode) {
  InvariantBundle b;
  b.n = g.order();
  b.m = g.size();
  b.min_degree = g.min_degree();
  b.max_degree = g.max_degree();
  auto e = endpoint_degrees(g);
  const auto& k = kernels::active();
  b.irr = k.abs_diff_sum(e.head, e.tail);
  b.sigma = k.sq_diff_sum(e.head, e.tail);
  b.m2 = k.product_sum(e.head, e.tail);
  b.m1 = k.square_sum(g.degrees());
  b.irr_t = k.pairwise_abs_diff_sum(g.degrees());
  if (!is_complete(g)) b.sigma2 = sigma2_min_nonadjacent(g, mode);
  b.deg_ave = average_degree(g);
  return b;
}

namespace definitional {

std::int64_t albertson(const Graph& g) {
  std::int64_t total = 0;
  for (auto [u, v] : g.edges()) total += std::abs(g.degree(u) - g.degree(v));
  return total;
}

std::int64_t sigma(const Graph& g) {
  std::int64_t total = 0;
  for (auto [u, v] : g.edges()) {
    const std::int64_t d = g.degree(u) - g.degree(v);
    total += d * d;
  }
  return total;
}

std::int64_t zagreb_m1(const Graph& g) {
  std::int64_t total = 0;
  for (Vertex v = 0; v < g.order(); ++v) total += std::int64_t{g.degree(v)} * g.degree(v);
  return total;
}

std::int64_t zagreb_m2(const Graph& g) {
  std::int64_t total = 0;
  for (auto [u, v] : g.edges()) total += std::int64_t{g.degree(u)} * g.degree(v);
  return total;
}

}  // namespace definitional

}  // namespace irrlab
