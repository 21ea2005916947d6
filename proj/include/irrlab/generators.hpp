#pragma once

#include <cstdint>
#include <span>

#include "irrlab/graph.hpp"

namespace irrlab {

Graph generate_path(int n);
// K_{1,n-1}; vertex 0 is the centre.
Graph generate_star(int n);
// Part one is vertices 0..s-1, part two s..s+t-1.
Graph generate_complete_bipartite(int s, int t);
// Spine vertices 0..k-1 in order, pendant leaves numbered after the spine.
Graph generate_caterpillar(std::span<const int> spine);

// Parameters of the two-part construction with rows u_1..u_n against v_1..v_m.
struct ExampleConstructionParams {
  int n = 15;  // |U|
  int m = 15;  // |V|
};

// u_i is vertex i-1 and v_j is vertex n+j-1. Rows whose range is empty
// contribute nothing, and vertices left without edges stay in the graph.
// Throws Error{kInvalidParams} unless n >= 11 and m >= 11.
Graph generate_example_construction(const ExampleConstructionParams& params);

// Uniform labelled tree from a random Pruefer sequence.
Graph random_tree(int n, std::uint64_t seed);

// Each of the n1*n2 cross pairs present independently with probability p.
Graph random_bipartite(int n1, int n2, double edge_prob, std::uint64_t seed);

// Pruefer decoding, shared with tests as an enumeration oracle.
Graph tree_from_pruefer(std::span<const int> sequence);

}  // namespace irrlab
