#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "irrlab/graph.hpp"

namespace irrlab {

inline constexpr int kTreeLimit = 14;
inline constexpr int kBipartiteCellLimit = 25;  // n1 * n2
inline constexpr int kConnectedLimit = 7;

enum class ClassKind { kTrees, kTreesMaxDegree, kBipartite, kConnected, kRandom };

enum class RandomFamily { kTree, kBipartite };

struct RandomSpec {
  RandomFamily family = RandomFamily::kTree;
  int n = 2;        // trees
  int n1 = 1;       // bipartite
  int n2 = 1;
  double edge_prob = 0.5;
  int count = 0;
  std::uint64_t seed = 0;

  bool operator==(const RandomSpec&) const = default;
};

// A corpus descriptor. description() and parse() round-trip, so a class can
// be replayed from its serialised form.
struct GraphClass {
  ClassKind kind = ClassKind::kTrees;
  int n = 1;
  int max_degree = 0;
  int n1 = 0;
  int n2 = 0;
  bool connected_only = false;
  RandomSpec random;

  static GraphClass trees(int n);
  static GraphClass trees_max_degree(int n, int max_degree);
  static GraphClass bipartite(int n1, int n2, bool connected_only);
  static GraphClass connected(int n);
  static GraphClass random_trees(int n, int count, std::uint64_t seed);
  static GraphClass random_bipartite(int n1, int n2, double edge_prob, int count, std::uint64_t seed);

  // "trees(6)", "trees_maxdeg(7,4)", "bipartite(2,3)", "bipartite(2,3,connected)",
  // "connected(5)", "random(tree:8,100,42)", "random(bipartite:3:4:0.5,20,7)".
  std::string description() const;
  static GraphClass parse(std::string_view text);

  // Part sizes the class declares: part one is vertices 0..n1-1.
  std::optional<std::pair<int, int>> declared_parts() const;

  // Does g belong to the class (tree/bipartite/connected predicates, order, parts)?
  bool contains(const Graph& g) const;

  bool within_budget() const;

  bool operator==(const GraphClass&) const = default;
};

// Wright-Richmond-Odlyzko-McKay successor generation over canonical level
// sequences: every unlabelled free tree of order n exactly once, in a fixed
// order. Constant amortised work per tree.
class FreeTreeGenerator {
 public:
  // Throws Error{kTooLarge} above kTreeLimit, Error{kTooSmall} below 1.
  explicit FreeTreeGenerator(int n);

  std::optional<Graph> next();

 private:
  bool advance_to_valid();
  bool next_rooted(std::size_t p);

  int n_;
  std::vector<int> layout_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<Graph> enumerate_free_trees(int n);

// Trees of order n whose maximum degree is exactly max_degree. Empty when
// no such tree exists.
std::vector<Graph> enumerate_trees_with_max_degree(int n, int max_degree);

// One representative per class of biadjacency matrices under row and column
// permutations (and the part swap when n1 == n2). Part one is 0..n1-1.
// Throws Error{kTooLarge} when n1 * n2 > 25.
std::vector<Graph> enumerate_bipartite(int n1, int n2, bool connected_only);

// All connected graphs of order n up to isomorphism, in canonical labelling,
// sorted by certificate. Throws Error{kTooLarge} for n > 7.
std::vector<Graph> enumerate_connected(int n);

// Materialises any class, including seeded random corpora.
std::vector<Graph> enumerate_class(const GraphClass& cls);

}  // namespace irrlab
