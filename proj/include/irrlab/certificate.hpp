#pragma once

#include <compare>
#include <string>
#include <vector>

#include "irrlab/graph.hpp"

namespace irrlab {

inline constexpr int kCertificateLimit = 12;

// Isomorphism-class identifier: equal iff the graphs are isomorphic.
struct GraphCertificate {
  std::string bytes;

  auto operator<=>(const GraphCertificate&) const = default;
  std::string hex() const;
};

struct CanonicalForm {
  GraphCertificate certificate;
  // order[i] is the vertex of the input graph placed at canonical position i.
  std::vector<Vertex> order;
};

// Individualisation-refinement search over equitable partitions, pruning
// branches on interchangeable twin vertices. Throws Error{kTooLarge} for n > 12.
CanonicalForm canonical_form(const Graph& g);

GraphCertificate certificate(const Graph& g);

// The input relabelled into canonical vertex order.
Graph canonical_graph(const Graph& g);

}  // namespace irrlab
