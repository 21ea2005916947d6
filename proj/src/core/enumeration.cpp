#include "irrlab/enumeration.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "irrlab/certificate.hpp"
#include "irrlab/error.hpp"
#include "irrlab/generators.hpp"

namespace irrlab {

// ---------------------------------------------------------------------------
// GraphClass

GraphClass GraphClass::trees(int n) {
  GraphClass c;
  c.kind = ClassKind::kTrees;
  c.n = n;
  return c;
}

GraphClass GraphClass::trees_max_degree(int n, int max_degree) {
  GraphClass c;
  c.kind = ClassKind::kTreesMaxDegree;
  c.n = n;
  c.max_degree = max_degree;
  return c;
}

GraphClass GraphClass::bipartite(int n1, int n2, bool connected_only) {
  GraphClass c;
  c.kind = ClassKind::kBipartite;
  c.n1 = n1;
  c.n2 = n2;
  c.n = n1 + n2;
  c.connected_only = connected_only;
  return c;
}

GraphClass GraphClass::connected(int n) {
  GraphClass c;
  c.kind = ClassKind::kConnected;
  c.n = n;
  return c;
}

GraphClass GraphClass::random_trees(int n, int count, std::uint64_t seed) {
  GraphClass c;
  c.kind = ClassKind::kRandom;
  c.n = n;
  c.random = RandomSpec{RandomFamily::kTree, n, 1, 1, 0.5, count, seed};
  return c;
}

GraphClass GraphClass::random_bipartite(int n1, int n2, double edge_prob, int count, std::uint64_t seed) {
  GraphClass c;
  c.kind = ClassKind::kRandom;
  c.n = n1 + n2;
  c.n1 = n1;
  c.n2 = n2;
  c.random = RandomSpec{RandomFamily::kBipartite, n1 + n2, n1, n2, edge_prob, count, seed};
  return c;
}

std::string GraphClass::description() const {
  std::ostringstream out;
  switch (kind) {
    case ClassKind::kTrees: out << "trees(" << n << ")"; break;
    case ClassKind::kTreesMaxDegree: out << "trees_maxdeg(" << n << "," << max_degree << ")"; break;
    case ClassKind::kBipartite:
      out << "bipartite(" << n1 << "," << n2 << (connected_only ? ",connected" : "") << ")";
      break;
    case ClassKind::kConnected: out << "connected(" << n << ")"; break;
    case ClassKind::kRandom:
      if (random.family == RandomFamily::kTree) {
        out << "random(tree:" << random.n << "," << random.count << "," << random.seed << ")";
      } else {
        char prob[32];
        auto end = std::to_chars(prob, prob + sizeof prob, random.edge_prob).ptr;
        out << "random(bipartite:" << random.n1 << ":" << random.n2 << ":" << std::string_view(prob, end - prob) << ","
            << random.count << "," << random.seed << ")";
      }
      break;
  }
  return out.str();
}

namespace {

[[noreturn]] void bad_spec(std::string_view text, std::string_view why) {
  throw Error(ErrorCode::kBadClassSpec, std::string(text) + ": " + std::string(why));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    parts.emplace_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

template <typename T>
T number(std::string_view text, std::string_view whole) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) bad_spec(whole, "bad number '" + std::string(text) + "'");
  return value;
}

double real_number(const std::string& text, std::string_view whole) {
  try {
    std::size_t used = 0;
    double v = std::stod(text, &used);
    if (used != text.size()) bad_spec(whole, "bad number '" + text + "'");
    return v;
  } catch (const std::logic_error&) {
    bad_spec(whole, "bad number '" + text + "'");
  }
}

}  // namespace

GraphClass GraphClass::parse(std::string_view text) {
  const auto open = text.find('(');
  if (open == std::string_view::npos || text.back() != ')') bad_spec(text, "expected name(args)");
  const std::string_view name = text.substr(0, open);
  const auto args = split(text.substr(open + 1, text.size() - open - 2), ',');

  if (name == "trees" && args.size() == 1) return trees(number<int>(args[0], text));
  if (name == "trees_maxdeg" && args.size() == 2) {
    return trees_max_degree(number<int>(args[0], text), number<int>(args[1], text));
  }
  if (name == "connected" && args.size() == 1) return connected(number<int>(args[0], text));
  if (name == "bipartite" && (args.size() == 2 || args.size() == 3)) {
    bool conn = false;
    if (args.size() == 3) {
      if (args[2] != "connected") bad_spec(text, "third argument must be 'connected'");
      conn = true;
    }
    return bipartite(number<int>(args[0], text), number<int>(args[1], text), conn);
  }
  if (name == "random" && args.size() == 3) {
    const auto family = split(args[0], ':');
    const int count = number<int>(args[1], text);
    const auto seed = number<std::uint64_t>(args[2], text);
    if (family[0] == "tree" && family.size() == 2) return random_trees(number<int>(family[1], text), count, seed);
    if (family[0] == "bipartite" && family.size() == 4) {
      return random_bipartite(number<int>(family[1], text), number<int>(family[2], text),
                              real_number(family[3], text), count, seed);
    }
  }
  bad_spec(text, "unknown class");
}

std::optional<std::pair<int, int>> GraphClass::declared_parts() const {
  if (kind == ClassKind::kBipartite) return std::pair{n1, n2};
  if (kind == ClassKind::kRandom && random.family == RandomFamily::kBipartite) return std::pair{n1, n2};
  return std::nullopt;
}

bool GraphClass::contains(const Graph& g) const {
  switch (kind) {
    case ClassKind::kTrees: return g.order() == n && is_tree(g);
    case ClassKind::kTreesMaxDegree: return g.order() == n && is_tree(g) && g.max_degree() == max_degree;
    case ClassKind::kConnected: return g.order() == n && is_connected(g);
    case ClassKind::kBipartite:
    case ClassKind::kRandom: {
      if (g.order() != n) return false;
      if (kind == ClassKind::kRandom && random.family == RandomFamily::kTree) return is_tree(g);
      if (connected_only && !is_connected(g)) return false;
      return std::all_of(g.edges().begin(), g.edges().end(),
                         [&](const Edge& e) { return (e.first < n1) != (e.second < n1); });
    }
  }
  return false;
}

bool GraphClass::within_budget() const {
  switch (kind) {
    case ClassKind::kTrees: return n >= 1 && n <= kTreeLimit;
    case ClassKind::kTreesMaxDegree: return n >= 2 && n <= kTreeLimit;
    case ClassKind::kBipartite: return n1 >= 1 && n2 >= 1 && n1 * n2 <= kBipartiteCellLimit;
    case ClassKind::kConnected: return n >= 1 && n <= kConnectedLimit;
    case ClassKind::kRandom: return random.count >= 0 && random.count <= 1'000'000;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Free trees

namespace {

struct Split {
  std::vector<int> left;
  std::vector<int> rest;
};

// Left subtree of the root (levels shifted up by one) versus the rest.
Split split_tree(const std::vector<int>& layout) {
  std::size_t m = layout.size();
  bool one_found = false;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (layout[i] == 1) {
      if (one_found) {
        m = i;
        break;
      }
      one_found = true;
    }
  }
  Split s;
  for (std::size_t i = 1; i < m; ++i) s.left.push_back(layout[i] - 1);
  s.rest.push_back(0);
  for (std::size_t i = m; i < layout.size(); ++i) s.rest.push_back(layout[i]);
  return s;
}

// In-place successor of a rooted level sequence at position p; false when exhausted.
bool next_rooted_inplace(std::vector<int>& layout, std::size_t p) {
  if (p == 0) return false;
  std::size_t q = p - 1;
  while (layout[q] != layout[p] - 1) --q;
  for (std::size_t i = p; i < layout.size(); ++i) layout[i] = layout[i - p + q];
  return true;
}

Graph layout_to_graph(const std::vector<int>& layout) {
  std::vector<Edge> edges;
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (!stack.empty()) {
      while (layout[stack.back()] >= layout[i]) stack.pop_back();
      edges.emplace_back(static_cast<Vertex>(stack.back()), static_cast<Vertex>(i));
    }
    stack.push_back(i);
  }
  return Graph(static_cast<int>(layout.size()), edges);
}

}  // namespace

FreeTreeGenerator::FreeTreeGenerator(int n) : n_(n) {
  if (n < 1) throw Error(ErrorCode::kTooSmall, "tree order must be at least 1");
  if (n > kTreeLimit) throw Error(ErrorCode::kTooLarge, "free-tree enumeration limited to n <= 14");
  if (n >= 2) {
    // Start from the path rooted at its centre.
    for (int i = 0; i <= n / 2; ++i) layout_.push_back(i);
    for (int i = 1; i < (n + 1) / 2; ++i) layout_.push_back(i);
  }
}

bool FreeTreeGenerator::next_rooted(std::size_t p) { return next_rooted_inplace(layout_, p); }

bool FreeTreeGenerator::advance_to_valid() {
  const Split s = split_tree(layout_);
  const int left_height = *std::max_element(s.left.begin(), s.left.end());
  const int rest_height = *std::max_element(s.rest.begin(), s.rest.end());
  bool valid = rest_height >= left_height;
  if (valid && rest_height == left_height) {
    if (s.left.size() > s.rest.size()) {
      valid = false;
    } else if (s.left.size() == s.rest.size() && s.rest < s.left) {
      valid = false;
    }
  }
  if (valid) return true;

  const std::size_t p = s.left.size();
  const int old_value = layout_[p];
  if (!next_rooted(p)) return false;
  if (old_value > 2) {
    const Split fresh = split_tree(layout_);
    const int height = *std::max_element(fresh.left.begin(), fresh.left.end());
    const std::size_t len = static_cast<std::size_t>(height) + 1;
    for (std::size_t k = 0; k < len; ++k) layout_[layout_.size() - len + k] = static_cast<int>(k) + 1;
  }
  return true;
}

std::optional<Graph> FreeTreeGenerator::next() {
  if (done_) return std::nullopt;
  if (n_ == 1) {
    done_ = true;
    return Graph(1, {});
  }
  if (started_) {
    std::size_t p = layout_.size() - 1;
    while (layout_[p] == 1) --p;
    if (!next_rooted(p)) {
      done_ = true;
      return std::nullopt;
    }
  }
  started_ = true;
  if (!advance_to_valid()) {
    done_ = true;
    return std::nullopt;
  }
  return layout_to_graph(layout_);
}

std::vector<Graph> enumerate_free_trees(int n) {
  std::vector<Graph> out;
  FreeTreeGenerator gen(n);
  while (auto t = gen.next()) out.push_back(std::move(*t));
  return out;
}

std::vector<Graph> enumerate_trees_with_max_degree(int n, int max_degree) {
  std::vector<Graph> out;
  FreeTreeGenerator gen(n);
  while (auto t = gen.next()) {
    if (t->max_degree() == max_degree) out.push_back(std::move(*t));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Bipartite

namespace {

using Rows = std::vector<std::uint32_t>;

// Rows index the larger side; each row is a bit mask over the smaller side
// (at most 5 vertices since n1 * n2 <= 25).
struct BiadjacencyCanon {
  int small;
  int large;
  bool square;
  std::vector<std::vector<std::uint32_t>> permuted;  // [perm][mask]

  BiadjacencyCanon(int small_side, int large_side)
      : small(small_side), large(large_side), square(small_side == large_side) {
    std::vector<int> perm(static_cast<std::size_t>(small));
    std::iota(perm.begin(), perm.end(), 0);
    const std::uint32_t masks = 1u << small;
    do {
      std::vector<std::uint32_t> table(masks);
      for (std::uint32_t mask = 0; mask < masks; ++mask) {
        std::uint32_t out = 0;
        for (int b = 0; b < small; ++b) {
          if (mask >> b & 1u) out |= 1u << perm[static_cast<std::size_t>(b)];
        }
        table[mask] = out;
      }
      permuted.push_back(std::move(table));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  Rows min_over_columns(const Rows& rows) const {
    Rows best;
    Rows work(rows.size());
    for (const auto& table : permuted) {
      for (std::size_t i = 0; i < rows.size(); ++i) work[i] = table[rows[i]];
      std::sort(work.begin(), work.end());
      if (best.empty() || work < best) best = work;
    }
    return best;
  }

  Rows transpose(const Rows& rows) const {
    Rows t(static_cast<std::size_t>(small), 0);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (int b = 0; b < small; ++b) {
        if (rows[i] >> b & 1u) t[static_cast<std::size_t>(b)] |= 1u << i;
      }
    }
    return t;
  }

  Rows canonical(const Rows& rows) const {
    Rows best = min_over_columns(rows);
    if (square) best = std::min(best, min_over_columns(transpose(rows)));
    return best;
  }
};

}  // namespace

std::vector<Graph> enumerate_bipartite(int n1, int n2, bool connected_only) {
  if (n1 < 1 || n2 < 1) throw Error(ErrorCode::kTooSmall, "bipartite parts must be non-empty");
  if (n1 * n2 > kBipartiteCellLimit) {
    throw Error(ErrorCode::kTooLarge, "bipartite enumeration limited to n1 * n2 <= 25");
  }
  const bool rows_are_part1 = n1 >= n2;
  const int large = std::max(n1, n2);
  const int small = std::min(n1, n2);
  const BiadjacencyCanon canon(small, large);
  const std::uint32_t masks = 1u << small;

  auto to_graph = [&](const Rows& rows) {
    std::vector<Edge> edges;
    for (int r = 0; r < large; ++r) {
      for (int c = 0; c < small; ++c) {
        if (!(rows[static_cast<std::size_t>(r)] >> c & 1u)) continue;
        if (rows_are_part1) {
          edges.emplace_back(r, n1 + c);
        } else {
          edges.emplace_back(c, n1 + r);
        }
      }
    }
    return Graph(n1 + n2, edges);
  };

  std::vector<Graph> out;
  // Non-decreasing row sequences enumerate every row multiset once.
  Rows rows(static_cast<std::size_t>(large), 0);
  while (true) {
    if (canon.canonical(rows) == rows) {
      Graph g = to_graph(rows);
      if (!connected_only || is_connected(g)) out.push_back(std::move(g));
    }
    int i = large - 1;
    while (i >= 0 && rows[static_cast<std::size_t>(i)] == masks - 1) --i;
    if (i < 0) break;
    const std::uint32_t next = rows[static_cast<std::size_t>(i)] + 1;
    for (int k = i; k < large; ++k) rows[static_cast<std::size_t>(k)] = next;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Connected graphs

std::vector<Graph> enumerate_connected(int n) {
  if (n < 1) throw Error(ErrorCode::kTooSmall, "order must be at least 1");
  if (n > kConnectedLimit) throw Error(ErrorCode::kTooLarge, "connected enumeration limited to n <= 7");

  // All graphs of order k, grown one vertex at a time with every neighbourhood.
  std::vector<Graph> level{Graph(1, {})};
  for (int k = 2; k <= n; ++k) {
    std::map<GraphCertificate, Graph> seen;
    for (const Graph& g : level) {
      const Vertex fresh = k - 1;
      for (std::uint32_t nbrs = 0; nbrs < (1u << (k - 1)); ++nbrs) {
        std::vector<Edge> edges = g.edges();
        for (Vertex v = 0; v < k - 1; ++v) {
          if (nbrs >> v & 1u) edges.emplace_back(v, fresh);
        }
        Graph candidate(k, edges);
        CanonicalForm form = canonical_form(candidate);
        if (!seen.contains(form.certificate)) {
          seen.emplace(std::move(form.certificate), canonical_graph(candidate));
        }
      }
    }
    level.clear();
    for (auto& [cert, g] : seen) level.push_back(std::move(g));
  }
  std::vector<Graph> out;
  for (Graph& g : level) {
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<Graph> enumerate_class(const GraphClass& cls) {
  if (!cls.within_budget()) throw Error(ErrorCode::kBudgetExceeded, cls.description() + " is outside the enumeration budget");
  switch (cls.kind) {
    case ClassKind::kTrees: return enumerate_free_trees(cls.n);
    case ClassKind::kTreesMaxDegree: return enumerate_trees_with_max_degree(cls.n, cls.max_degree);
    case ClassKind::kBipartite: return enumerate_bipartite(cls.n1, cls.n2, cls.connected_only);
    case ClassKind::kConnected: return enumerate_connected(cls.n);
    case ClassKind::kRandom: {
      std::vector<Graph> out;
      std::mt19937_64 seeds(cls.random.seed);
      for (int i = 0; i < cls.random.count; ++i) {
        const std::uint64_t s = seeds();
        if (cls.random.family == RandomFamily::kTree) {
          out.push_back(random_tree(cls.random.n, s));
        } else {
          out.push_back(random_bipartite(cls.random.n1, cls.random.n2, cls.random.edge_prob, s));
        }
      }
      return out;
    }
  }
  return {};
}

}  // namespace irrlab
