#include "irrlab/certificate.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>

#include "irrlab/error.hpp"

namespace irrlab {
namespace {

using Mask = std::uint32_t;
using Cell = std::vector<int>;
using Partition = std::vector<Cell>;

struct Search {
  int n;
  std::vector<Mask> adj;
  std::optional<std::string> best_code;
  std::vector<int> best_order;

  // Split every cell by its vertices' neighbour counts into each cell, until
  // nothing changes. Sub-cells are ordered by signature, which keeps the
  // resulting ordered partition isomorphism-invariant.
  void refine(Partition& p) const {
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<Mask> cell_masks(p.size(), 0);
      for (std::size_t c = 0; c < p.size(); ++c) {
        for (int v : p[c]) cell_masks[c] |= Mask{1} << v;
      }
      Partition next;
      next.reserve(p.size());
      for (const Cell& cell : p) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<std::vector<int>, int>> keyed;
        keyed.reserve(cell.size());
        for (int v : cell) {
          std::vector<int> sig(p.size());
          for (std::size_t c = 0; c < p.size(); ++c) {
            sig[c] = __builtin_popcount(adj[static_cast<std::size_t>(v)] & cell_masks[c]);
          }
          keyed.emplace_back(std::move(sig), v);
        }
        std::stable_sort(keyed.begin(), keyed.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        std::size_t start = 0;
        for (std::size_t i = 1; i <= keyed.size(); ++i) {
          if (i == keyed.size() || keyed[i].first != keyed[start].first) {
            Cell sub;
            for (std::size_t k = start; k < i; ++k) sub.push_back(keyed[k].second);
            next.push_back(std::move(sub));
            start = i;
          }
        }
      }
      if (next.size() != p.size()) changed = true;
      p = std::move(next);
    }
  }

  std::string code_for(const std::vector<int>& order) const {
    std::string code((static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2 + 7) / 8, '\0');
    std::size_t bit = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j, ++bit) {
        if (adj[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] >>
                order[static_cast<std::size_t>(j)] & 1u) {
          code[bit / 8] = static_cast<char>(code[bit / 8] | (1 << (7 - bit % 8)));
        }
      }
    }
    return code;
  }

  bool twins(int u, int v) const {
    Mask mu = adj[static_cast<std::size_t>(u)] & ~(Mask{1} << v);
    Mask mv = adj[static_cast<std::size_t>(v)] & ~(Mask{1} << u);
    return mu == mv;
  }

  void run(Partition p) {
    refine(p);
    auto target = std::find_if(p.begin(), p.end(), [](const Cell& c) { return c.size() > 1; });
    if (target == p.end()) {
      std::vector<int> order;
      order.reserve(static_cast<std::size_t>(n));
      for (const Cell& c : p) order.push_back(c.front());
      std::string code = code_for(order);
      if (!best_code || code < *best_code) {
        best_code = std::move(code);
        best_order = std::move(order);
      }
      return;
    }
    const auto index = static_cast<std::size_t>(target - p.begin());
    const Cell cell = *target;
    std::vector<int> representatives;
    for (int v : cell) {
      bool covered = std::any_of(representatives.begin(), representatives.end(),
                                 [&](int r) { return twins(r, v); });
      if (!covered) representatives.push_back(v);
    }
    for (int v : representatives) {
      Partition child;
      child.reserve(p.size() + 1);
      child.insert(child.end(), p.begin(), p.begin() + static_cast<std::ptrdiff_t>(index));
      child.push_back({v});
      Cell rest;
      for (int w : cell) {
        if (w != v) rest.push_back(w);
      }
      child.push_back(std::move(rest));
      child.insert(child.end(), p.begin() + static_cast<std::ptrdiff_t>(index) + 1, p.end());
      run(std::move(child));
    }
  }
};

}  // namespace

std::string GraphCertificate::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(kDigits[c >> 4]);
    out.push_back(kDigits[c & 15]);
  }
  return out;
}

CanonicalForm canonical_form(const Graph& g) {
  const int n = g.order();
  if (n > kCertificateLimit) {
    throw Error(ErrorCode::kTooLarge, "canonical labelling limited to n <= 12, got " + std::to_string(n));
  }
  Search search{n, std::vector<Mask>(static_cast<std::size_t>(n), 0), std::nullopt, {}};
  for (auto [u, v] : g.edges()) {
    search.adj[static_cast<std::size_t>(u)] |= Mask{1} << v;
    search.adj[static_cast<std::size_t>(v)] |= Mask{1} << u;
  }
  Cell all(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = v;
  search.run(Partition{all});

  CanonicalForm form;
  form.certificate.bytes.push_back(static_cast<char>(n));
  form.certificate.bytes += *search.best_code;
  form.order.assign(search.best_order.begin(), search.best_order.end());
  return form;
}

GraphCertificate certificate(const Graph& g) { return canonical_form(g).certificate; }

Graph canonical_graph(const Graph& g) {
  CanonicalForm form = canonical_form(g);
  std::vector<Vertex> perm(static_cast<std::size_t>(g.order()));
  for (std::size_t i = 0; i < form.order.size(); ++i) {
    perm[static_cast<std::size_t>(form.order[i])] = static_cast<Vertex>(i);
  }
  return relabel(g, perm);
}

}  // namespace irrlab
