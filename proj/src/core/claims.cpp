#include "irrlab/claims.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <utility>

#include "irrlab/error.hpp"
#include "irrlab/graph6.hpp"

namespace irrlab {

namespace mp = boost::multiprecision;

std::string_view to_string(ClaimKind kind) {
  switch (kind) {
    case ClaimKind::kPerGraph: return "PER_GRAPH";
    case ClaimKind::kClassExtremal: return "CLASS_EXTREMAL";
    case ClaimKind::kIffCharacterization: return "IFF_CHARACTERIZATION";
    case ClaimKind::kIdentity: return "IDENTITY";
  }
  return "?";
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kHolds: return "HOLDS";
    case Verdict::kFails: return "FAILS";
    case Verdict::kNotApplicable: return "NOT_APPLICABLE";
    case Verdict::kMarginal: return "MARGINAL";
  }
  return "?";
}

std::string_view to_string(Relation relation) {
  switch (relation) {
    case Relation::kLessEqual: return "<=";
    case Relation::kLess: return "<";
    case Relation::kGreaterEqual: return ">=";
    case Relation::kGreater: return ">";
    case Relation::kEqual: return "==";
  }
  return "?";
}

namespace {

Verdict from_sign(int s, Relation rel) {
  bool ok = false;
  switch (rel) {
    case Relation::kLessEqual: ok = s <= 0; break;
    case Relation::kLess: ok = s < 0; break;
    case Relation::kGreaterEqual: ok = s >= 0; break;
    case Relation::kGreater: ok = s > 0; break;
    case Relation::kEqual: ok = s == 0; break;
  }
  return ok ? Verdict::kHolds : Verdict::kFails;
}

int sign(const Rational& q) { return q < 0 ? -1 : (q > 0 ? 1 : 0); }

// sign(a - c * sqrt(r)) for c >= 0, r >= 0, exactly.
int compare_root(const Rational& a, const Rational& c, const Rational& r) {
  if (c == 0 || r == 0) return sign(a);
  if (a <= 0) return -1;
  return sign(a * a - c * c * r);
}

Number root_value(const Rational& c, const Rational& r) {
  if (auto s = exact_sqrt(r)) return Number(c * *s);
  return Number::radical(c, r, to_float(c) * mp::sqrt(to_float(r)));
}

Number plus(const Rational& a, const Number& b) {
  if (b.is_exact()) return Number(a + b.exact());
  return Number::approximate(to_float(a) + b.approx());
}

Rational q(std::int64_t v) { return Rational(v); }
Rational q(const BigInt& v) { return Rational(v); }

// Positive slack means the relation is satisfied with room to spare.
Float slack(const ClaimOutcome& o) {
  if (!o.lhs || !o.rhs) return Float(0);
  const Float l = o.lhs->approx();
  const Float r = o.rhs->approx();
  switch (o.relation) {
    case Relation::kLessEqual:
    case Relation::kLess: return r - l;
    case Relation::kGreaterEqual:
    case Relation::kGreater: return l - r;
    case Relation::kEqual: return -mp::abs(l - r);
  }
  return Float(0);
}

int severity(Verdict v) {
  switch (v) {
    case Verdict::kFails: return 0;
    case Verdict::kMarginal: return 1;
    case Verdict::kHolds: return 2;
    case Verdict::kNotApplicable: return 3;
  }
  return 3;
}

bool worse(const ClaimOutcome& a, const ClaimOutcome& b) {
  const int sa = severity(a.verdict);
  const int sb = severity(b.verdict);
  if (sa != sb) return sa < sb;
  if (a.verdict == Verdict::kNotApplicable) return false;
  return slack(a) < slack(b);
}

ClaimOutcome compared(std::string part, Number lhs, Relation rel, Number rhs) {
  ClaimOutcome o;
  o.part = std::move(part);
  o.verdict = decide(lhs, rel, rhs);
  o.lhs = std::move(lhs);
  o.rhs = std::move(rhs);
  o.relation = rel;
  return o;
}

// For comparisons settled exactly while one side is only approximable for display.
ClaimOutcome settled(std::string part, Number lhs, Relation rel, Number rhs, int sign_lhs_minus_rhs) {
  ClaimOutcome o;
  o.part = std::move(part);
  o.verdict = from_sign(sign_lhs_minus_rhs, rel);
  o.lhs = std::move(lhs);
  o.rhs = std::move(rhs);
  o.relation = rel;
  return o;
}

ClaimOutcome not_applicable(std::string part, std::string reason) {
  ClaimOutcome o;
  o.part = std::move(part);
  o.verdict = Verdict::kNotApplicable;
  o.note = std::move(reason);
  return o;
}

std::vector<ClaimOutcome> all_not_applicable(const Claim& c, const std::string& reason) {
  std::vector<ClaimOutcome> out;
  for (const auto& part : c.parts) out.push_back(not_applicable(part, reason));
  return out;
}

bool is_star_tree(const Graph& g) { return g.order() >= 2 && g.max_degree() == g.order() - 1; }
bool is_path_tree(const Graph& g) { return g.max_degree() <= 2; }

// ---- bipartite sides ------------------------------------------------------

struct Sides {
  std::vector<Vertex> v1;
  std::vector<Vertex> v2;
  int n1() const { return static_cast<int>(v1.size()); }
  int n2() const { return static_cast<int>(v2.size()); }
};

std::optional<Sides> sides_of(const GraphSubject& s) {
  const Graph& g = s.graph;
  Sides sides;
  if (s.declared_parts) {
    const int n1 = s.declared_parts->first;
    if (n1 < 0 || n1 + s.declared_parts->second != g.order()) return std::nullopt;
    for (const auto& [u, v] : g.edges()) {
      if (!(u < n1 && v >= n1)) return std::nullopt;
    }
    for (Vertex v = 0; v < g.order(); ++v) (v < n1 ? sides.v1 : sides.v2).push_back(v);
    return sides;
  }
  auto parts = find_bipartition(g);
  if (!parts) return std::nullopt;
  sides.v1 = parts->part1;
  sides.v2 = parts->part2;
  return sides;
}

// ---- class extrema --------------------------------------------------------

using Field = std::int64_t InvariantBundle::*;

struct Extreme {
  std::int64_t value = 0;
  std::vector<std::size_t> attainers;
};

template <class Pred>
std::optional<Extreme> extreme(const ClassSubject& s, Field field, bool maximum, Pred keep) {
  std::optional<Extreme> best;
  for (std::size_t i = 0; i < s.bundles.size(); ++i) {
    if (!keep(i)) continue;
    const std::int64_t v = s.bundles[i].*field;
    if (!best || (maximum ? v > best->value : v < best->value)) {
      best = Extreme{v, {i}};
    } else if (v == best->value) {
      best->attainers.push_back(i);
    }
  }
  return best;
}

std::optional<Extreme> extreme(const ClassSubject& s, Field field, bool maximum) {
  return extreme(s, field, maximum, [](std::size_t) { return true; });
}

void attach(ClaimOutcome& o, const ClassSubject& s, std::size_t index) {
  if (o.verdict != Verdict::kFails) return;
  Witness w;
  w.graph6 = write_graph6(s.graphs[index]);
  w.parts = s.cls.declared_parts();
  o.witness = std::move(w);
}

// ---- per-graph evaluators -------------------------------------------------

// Spine of a caterpillar in path order, or nullopt when g is not one.
std::optional<std::vector<int>> caterpillar_spine(const Graph& g) {
  if (!is_tree(g) || g.order() < 2) return std::nullopt;
  if (g.order() == 2) return std::vector<int>{1, 1};
  std::vector<Vertex> inner;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) > 1) inner.push_back(v);
  }
  auto inner_degree = [&](Vertex v) {
    int k = 0;
    for (Vertex w : g.neighbors(v)) k += g.degree(w) > 1 ? 1 : 0;
    return k;
  };
  if (inner.size() == 1) return std::vector<int>{1, g.degree(inner.front())};
  Vertex start = -1;
  for (Vertex v : inner) {
    const int k = inner_degree(v);
    if (k > 2) return std::nullopt;
    if (k == 1 && start < 0) start = v;
  }
  std::vector<int> spine;
  Vertex prev = -1;
  Vertex cur = start;
  while (cur >= 0) {
    spine.push_back(g.degree(cur));
    Vertex next = -1;
    for (Vertex w : g.neighbors(cur)) {
      if (w != prev && g.degree(w) > 1) next = w;
    }
    prev = cur;
    cur = next;
  }
  if (spine.size() != inner.size()) return std::nullopt;
  return spine;
}

std::vector<ClaimOutcome> eval_c2(const Claim& c, const GraphSubject& s, const ClaimParams&, const EvalOptions&) {
  auto spine = caterpillar_spine(s.graph);
  if (!spine) return all_not_applicable(c, "not a caterpillar");
  return {compared("", q(caterpillar_irr_closed_form(*spine)), Relation::kEqual, q(s.bundle.irr))};
}

std::vector<ClaimOutcome> eval_c4(const Claim& c, const GraphSubject& s, const ClaimParams&, const EvalOptions&) {
  const auto& b = s.bundle;
  if (b.m < 1) return all_not_applicable(c, "no edges");
  const Rational m = q(b.m);
  const Rational radicand = m * q(b.m1) - 4 * m * m;
  if (radicand < 0) return all_not_applicable(c, "m*M1 - 4m^2 < 0");
  return {settled("", q(b.irr), Relation::kLessEqual, root_value(1, radicand), compare_root(q(b.irr), 1, radicand))};
}

std::vector<ClaimOutcome> eval_c7(const Claim& c, const GraphSubject& s, const ClaimParams&, const EvalOptions& opt) {
  const Graph& g = s.graph;
  if (g.order() < 3) return all_not_applicable(c, "n < 3");
  if (is_complete(g)) return all_not_applicable(c, "complete graph");
  if (g.order() > kHamiltonianLimit) return all_not_applicable(c, "order above Hamiltonian check limit");
  if (!is_hamiltonian(g)) return all_not_applicable(c, "not Hamiltonian");
  auto o = compared("", q(sigma2_min_nonadjacent(g, opt.sigma2_mode)), Relation::kGreaterEqual, q(2));
  if (opt.sigma2_mode == Sigma2Mode::kLiteral) {
    o.interpreted = true;
    o.note = "sigma2 read as min 2*deg over non-adjacent pairs";
  }
  return {o};
}

std::vector<ClaimOutcome> eval_c13(const Claim& c, const GraphSubject& s, const ClaimParams&, const EvalOptions&) {
  const auto& b = s.bundle;
  if (!is_tree(s.graph)) return all_not_applicable(c, "not a tree");
  const Rational rhs = b.deg_ave - Rational(2 * b.m, b.n);
  return {compared("", q(b.irr), Relation::kGreaterEqual, rhs)};
}

std::vector<ClaimOutcome> eval_c14(const Claim& c, const GraphSubject& s, const ClaimParams&, const EvalOptions&) {
  const auto& b = s.bundle;
  if (!is_tree(s.graph)) return all_not_applicable(c, "not a tree");
  if (b.max_degree < 4) return all_not_applicable(c, "max degree < 4");
  const std::int64_t d = b.max_degree, m = b.m;
  const Rational rhs = Rational(3 * d * m * m + 2 * b.min_degree * m, b.n * (d - 3));
  return {compared("", q(b.irr), Relation::kGreaterEqual, rhs)};
}

std::vector<ClaimOutcome> eval_c19(const Claim& c, const GraphSubject& s, const ClaimParams&, const EvalOptions&) {
  const auto& b = s.bundle;
  if (!is_tree(s.graph)) return all_not_applicable(c, "not a tree");
  const Rational rhs = q(b.irr) + b.deg_ave * b.deg_ave - Rational(2 * std::int64_t{b.m} * b.m, b.n);
  return {compared("", q(b.sigma), Relation::kGreaterEqual, rhs)};
}

template <class T, class Sqrt>
T c20_bound(const T& n1, const T& n2, Sqrt sqrt_of) {
  T u2 = n2;
  if (n1 < 2 * n2) {
    const T radicand = T(28) / 9 * n1 * n1 - T(8) / 3 * n1 * n2;
    u2 = n2 - T(4) / 3 * n1 + sqrt_of(radicand);
  }
  const T u1 = (n2 - u2) / 2;
  return u1 * u2 * (n1 - n2) + u1 * (n2 - u2) * (n2 - u1) + u2 * (n1 - u1) * (n1 - u2);
}

std::optional<Rational> try_exact_c20(const Rational& n1, const Rational& n2) {
  bool exact = true;
  Rational r = c20_bound(n1, n2, [&](const Rational& x) {
    auto s = exact_sqrt(x);
    if (!s) {
      exact = false;
      return Rational(0);
    }
    return *s;
  });
  if (!exact) return std::nullopt;
  return r;
}

std::vector<ClaimOutcome> eval_c20(const Claim& c, const GraphSubject& s, const ClaimParams&, const EvalOptions&) {
  auto sides = sides_of(s);
  if (!sides) return all_not_applicable(c, "not bipartite");
  int a = sides->n1(), b = sides->n2();
  if (a < b) std::swap(a, b);
  Number rhs;
  if (auto exact = try_exact_c20(q(a), q(b))) {
    rhs = Number(*exact);
  } else {
    rhs = Number::approximate(c20_bound(Float(a), Float(b), [](const Float& x) { return mp::sqrt(x); }));
  }
  return {compared("", q(s.bundle.irr), Relation::kLessEqual, rhs)};
}

std::vector<ClaimOutcome> eval_c22(const Claim& c, const GraphSubject& s, const ClaimParams&, const EvalOptions&) {
  auto sides = sides_of(s);
  if (!sides) return all_not_applicable(c, "not bipartite");
  const auto& b = s.bundle;
  if (b.m < 1) return all_not_applicable(c, "no edges");
  const Rational n1 = q(sides->n1()), n2 = q(sides->n2());
  const Rational m = q(b.m);
  std::vector<ClaimOutcome> out;
  out.push_back(compared("irr", q(b.irr), Relation::kLessEqual, Rational(2 * n1 * n2 + n2 * b.min_degree / m)));
  {
    const Rational c0 = n2 * b.min_degree / m;
    const Rational base = 4 * n1 * n2;
    out.push_back(settled("sigma", q(b.sigma), Relation::kLessEqual, plus(base, root_value(c0, 2 * n1)),
                          compare_root(q(b.sigma) - base, c0, 2 * n1)));
  }
  const std::int64_t gap = b.m - 3 * std::int64_t{b.max_degree};
  if (gap <= 0) {
    out.push_back(not_applicable("irr_floor", "m <= 3*max degree"));
    out.push_back(not_applicable("sigma_floor", "m <= 3*max degree"));
    return out;
  }
  auto floor_term = [&](std::int64_t k, const Rational& part) {
    const BigInt f = floor(k * part / q(gap));
    return q(f * f - 1);
  };
  out.push_back(compared("irr_floor", q(b.irr), Relation::kLessEqual, floor_term(2, n1) + floor_term(2, n2)));
  out.push_back(compared("sigma_floor", q(b.sigma), Relation::kLessEqual, floor_term(4, n1) + floor_term(4, n2)));
  return out;
}

std::vector<ClaimOutcome> eval_c23(const Claim& c, const GraphSubject& s, const ClaimParams&, const EvalOptions&) {
  auto sides = sides_of(s);
  if (!sides) return all_not_applicable(c, "not bipartite");
  const auto& b = s.bundle;
  if (b.max_degree < 3) return all_not_applicable(c, "max degree < 3");
  std::int64_t total = 0;
  for (Vertex v : sides->v1) total += std::int64_t{s.graph.degree(v) - 1} * (s.graph.degree(v) - 1);
  for (Vertex v : sides->v2) total += s.graph.degree(v) - 2;
  total += 2 * std::int64_t{sides->n1()} * b.max_degree;
  return {compared("", q(b.irr), Relation::kLessEqual, q(total))};
}

std::vector<ClaimOutcome> eval_c24(const Claim& c, const GraphSubject& s, const ClaimParams&, const EvalOptions&) {
  auto sides = sides_of(s);
  if (!sides) return all_not_applicable(c, "not bipartite");
  const auto& b = s.bundle;
  const std::int64_t rhs = 2 * b.m1 + (sides->n1() - 1) * b.irr + (sides->n2() - 2) * b.irr;
  return {compared("", q(b.sigma), Relation::kLessEqual, q(rhs))};
}

std::vector<ClaimOutcome> eval_c25(const Claim& c, const GraphSubject& s, const ClaimParams&, const EvalOptions&) {
  auto sides = sides_of(s);
  if (!sides) return all_not_applicable(c, "not bipartite");
  const auto& b = s.bundle;
  if (b.min_degree < 2) return all_not_applicable(c, "min degree < 2");
  const Rational n1 = q(sides->n1()), n2 = q(sides->n2());
  const Rational d = q(b.max_degree), delta = q(b.min_degree);
  const Rational irr_rhs = 2 * n1 * n1 + (d * d * (d - 1) + 4 * n2) / (n1 * n2 + 5 * delta);
  const Rational sigma_rhs = 2 * n1 * n1 * n1 + (d * d * d * (d - 1) + 4 * n2 * n2) / (n1 * n2 + 3 * delta * delta);
  return {compared("irr", q(b.irr), Relation::kLessEqual, irr_rhs),
          compared("sigma", q(b.sigma), Relation::kLessEqual, sigma_rhs)};
}

std::vector<ClaimOutcome> eval_c26(const Claim& c, const GraphSubject& s, const ClaimParams&, const EvalOptions&) {
  const auto& b = s.bundle;
  if (b.m < 1) return all_not_applicable(c, "no edges");
  const Rational irr = q(b.irr), sig = q(b.sigma);
  return {settled("lower", root_value(1, sig), Relation::kLessEqual, irr, -compare_root(irr, 1, sig)),
          settled("upper", irr, Relation::kLessEqual, root_value(1, q(b.m) * sig), compare_root(irr, 1, q(b.m) * sig))};
}

std::vector<ClaimOutcome> eval_c27(const Claim& c, const GraphSubject& s, const ClaimParams&, const EvalOptions&) {
  auto sides = sides_of(s);
  if (!sides) return all_not_applicable(c, "not bipartite");
  const std::int64_t a = sides->n1(), t = sides->n2();
  if (a < 1 || t < 1 || s.bundle.m != a * t) return all_not_applicable(c, "not complete bipartite");
  const std::int64_t d = a > t ? a - t : t - a;
  return {compared("irr", q(s.bundle.irr), Relation::kEqual, q(a * t * d)),
          compared("sigma", q(s.bundle.sigma), Relation::kEqual, q(a * t * d * d))};
}

// ---- parameterised tree bounds -------------------------------------------

// Values the bounds are stated in. Under the class reading the extrema range
// over the class; under the per-graph reading all three are the tree's own.
struct TreeBoundInput {
  int n = 0;
  int m = 0;
  int min_degree = 0;
  int max_degree = 0;
  std::int64_t irr_min = 0;
  std::int64_t irr_max = 0;
  std::int64_t sigma_min = 0;
};

BigInt pow2(int e) { return power(2, e); }

std::vector<ClaimOutcome> bound_c9(const TreeBoundInput& t, const ClaimParams& p) {
  const int d = t.max_degree;
  if (t.n - d < 0) return {not_applicable("", "n < max degree")};
  const Rational num = q(pow2(*p.alpha)) * (q(pow2(t.n - d)) + q(ceil(Rational(std::int64_t{t.n} * d * d, 2))));
  const Rational den = q(factorial(d - t.min_degree) + factorial(d - 1));
  return {compared("", q(t.irr_min), Relation::kGreaterEqual, Rational(num / den))};
}

Rational c10_term(const TreeBoundInput& t, const ClaimParams& p) {
  const std::int64_t d = t.max_degree;
  const std::int64_t gap = d - *p.p;
  return q(d * d * (d - 1)) * q(pow2(*p.alpha)) / q(gap * gap);
}

std::vector<ClaimOutcome> bound_c10(const TreeBoundInput& t, const ClaimParams& p) {
  const std::int64_t gap = t.max_degree - *p.p;
  return {compared("a", q(t.irr_min), Relation::kGreaterEqual, q(pow2(*p.alpha)) / q(gap * gap)),
          compared("b", q(t.irr_min), Relation::kGreaterEqual, c10_term(t, p))};
}

std::vector<ClaimOutcome> bound_c11(const TreeBoundInput& t, const ClaimParams& p) {
  const std::int64_t d = t.max_degree;
  const Rational c = Rational(t.irr_max, 2 * (d + 1));
  const Rational r = q(2 * std::int64_t{t.n} * (d * d + 3 * std::int64_t{t.m}));
  const Rational rhs = q(t.irr_min) - c10_term(t, p);
  return {settled("", root_value(c, r), Relation::kGreaterEqual, rhs, -compare_root(rhs, c, r))};
}

std::vector<ClaimOutcome> bound_c15(const TreeBoundInput& t, const ClaimParams& p) {
  const int d = t.max_degree;
  if (t.n - d < 0) return {not_applicable("", "n < max degree")};
  const Rational num =
      q(pow2(*p.alpha)) * (q(pow2(t.n - d)) + q(ceil(Rational(std::int64_t{t.n} * d * d * d, 2))));
  const Rational den = q(d * factorial(d - 2));
  return {compared("", q(t.sigma_min), Relation::kGreaterEqual, Rational(num / den))};
}

std::vector<ClaimOutcome> bound_c16(const TreeBoundInput& t, const ClaimParams& p) {
  const std::int64_t d = t.max_degree;
  if (t.n < 3 * d) return {not_applicable("", "n < 3*max degree")};
  const std::int64_t gap = d - *p.p;
  const Rational num = q(d * d * (d - 1)) * q(power(3, *p.alpha) + power(d, *p.p));
  const Rational den = q(factorial(static_cast<int>(t.n - 3 * d))) + q(gap * gap);
  return {compared("", q(t.sigma_min), Relation::kGreaterEqual, Rational(num / den))};
}

std::vector<ClaimOutcome> bound_c17(const TreeBoundInput& t, const ClaimParams& p) {
  const std::int64_t d = t.max_degree;
  const std::int64_t gap = 2 * d - 3 * *p.p;
  const Rational rhs = q(std::int64_t{t.n} * d * d * (d - 1)) * q(power(3, *p.alpha)) / q(gap * gap);
  return {compared("", q(t.sigma_min), Relation::kGreaterEqual, rhs)};
}

using TreeBound = std::vector<ClaimOutcome> (*)(const TreeBoundInput&, const ClaimParams&);

TreeBound tree_bound(const std::string& id) {
  if (id == "C9") return bound_c9;
  if (id == "C10") return bound_c10;
  if (id == "C11") return bound_c11;
  if (id == "C15") return bound_c15;
  if (id == "C16") return bound_c16;
  return bound_c17;
}

bool minimises_sigma(const std::string& id) { return id == "C15" || id == "C16" || id == "C17"; }

std::vector<ClaimOutcome> eval_tree_bound_graph(const Claim& c, const GraphSubject& s, const ClaimParams& p,
                                                const EvalOptions&) {
  if (!is_tree(s.graph)) return all_not_applicable(c, "not a tree");
  const auto& b = s.bundle;
  const TreeBoundInput in{b.n, b.m, b.min_degree, b.max_degree, b.irr, b.irr, b.sigma};
  return tree_bound(c.id)(in, p);
}

std::vector<ClaimOutcome> eval_tree_bound_class(const Claim& c, const ClassSubject& s, const ClaimParams& p,
                                                const EvalOptions&) {
  if (s.graphs.empty()) return all_not_applicable(c, "empty class");
  TreeBoundInput in;
  in.n = s.cls.n;
  in.m = s.cls.n - 1;
  in.max_degree = s.cls.max_degree;
  in.min_degree = s.bundles.front().min_degree;
  for (const auto& b : s.bundles) in.min_degree = std::min(in.min_degree, b.min_degree);
  const auto irr_min = extreme(s, &InvariantBundle::irr, false);
  const auto irr_max = extreme(s, &InvariantBundle::irr, true);
  const auto sigma_min = extreme(s, &InvariantBundle::sigma, false);
  in.irr_min = irr_min->value;
  in.irr_max = irr_max->value;
  in.sigma_min = sigma_min->value;
  auto out = tree_bound(c.id)(in, p);
  const std::size_t w = minimises_sigma(c.id) ? sigma_min->attainers.front() : irr_min->attainers.front();
  for (auto& o : out) attach(o, s, w);
  return out;
}

// ---- class evaluators -----------------------------------------------------

std::vector<ClaimOutcome> eval_c1(const Claim& c, const ClassSubject& s, const ClaimParams&, const EvalOptions&) {
  const std::int64_t n = s.cls.n;
  if (n < 2 || s.graphs.empty()) return all_not_applicable(c, "n < 2");
  const auto top = extreme(s, &InvariantBundle::irr, true);
  auto value = compared("value", q(top->value), Relation::kEqual, q((n - 1) * (n - 2)));
  attach(value, s, top->attainers.front());
  std::int64_t others = 0;
  std::optional<std::size_t> first_other;
  for (std::size_t i : top->attainers) {
    if (!is_star_tree(s.graphs[i])) {
      ++others;
      if (!first_other) first_other = i;
    }
  }
  auto unique = compared("unique", q(others), Relation::kEqual, q(0));
  unique.note = "attainers: " + std::to_string(top->attainers.size());
  if (first_other) attach(unique, s, *first_other);
  return {value, unique};
}

std::vector<ClaimOutcome> eval_c3(const Claim& c, const ClassSubject& s, const ClaimParams&, const EvalOptions&) {
  const std::int64_t n = s.cls.n;
  if (n < 4) return all_not_applicable(c, "n < 4");
  const auto top = extreme(s, &InvariantBundle::irr_t, true);
  const auto low = extreme(s, &InvariantBundle::irr_t, false);
  auto mx = compared("max", q(top->value), Relation::kEqual, q((n - 1) * (n - 2)));
  auto mn = compared("min", q(low->value), Relation::kEqual, q(2 * (n - 2)));
  attach(mx, s, top->attainers.front());
  attach(mn, s, low->attainers.front());
  return {mx, mn};
}

std::vector<ClaimOutcome> eval_c5(const Claim& c, const ClassSubject& s, const ClaimParams&, const EvalOptions&) {
  if (s.cls.n < 3 || s.graphs.empty()) return all_not_applicable(c, "n < 3");
  const auto top = extreme(s, &InvariantBundle::sigma, true);
  std::vector<ClaimOutcome> best;
  std::vector<std::size_t> best_index(2, 0);
  for (std::size_t i : top->attainers) {
    const auto& b = s.bundles[i];
    if (b.min_degree >= b.max_degree) continue;
    const std::int64_t d = b.max_degree, delta = b.min_degree, n = b.n;
    const std::int64_t gap = d - delta;
    std::vector<ClaimOutcome> here{
        compared("a", q(b.sigma), Relation::kGreater, Rational(delta * gap * gap * gap * n, d + 1)),
        compared("b", q(b.sigma), Relation::kGreater, Rational((d - 1) * (d - 1) * (d - 1) * n, d + 1))};
    if (best.empty()) {
      best = here;
      best_index.assign(2, i);
      continue;
    }
    for (std::size_t k = 0; k < 2; ++k) {
      if (worse(here[k], best[k])) {
        best[k] = here[k];
        best_index[k] = i;
      }
    }
  }
  if (best.empty()) return all_not_applicable(c, "every sigma_max attainer is regular");
  for (std::size_t k = 0; k < 2; ++k) attach(best[k], s, best_index[k]);
  return best;
}

std::vector<ClaimOutcome> eval_c6(const Claim& c, const ClassSubject& s, const ClaimParams&, const EvalOptions&) {
  const std::int64_t n = s.cls.n;
  std::vector<ClaimOutcome> out;
  if (n >= 3 && !s.graphs.empty()) {
    const auto top = extreme(s, &InvariantBundle::sigma, true);
    auto o = compared("max", q(top->value), Relation::kEqual, q((n - 1) * (n - 2)));
    attach(o, s, top->attainers.front());
    out.push_back(o);
  } else {
    out.push_back(not_applicable("max", "n < 3"));
  }
  if (n == 2 && !s.graphs.empty()) {
    const auto low = extreme(s, &InvariantBundle::sigma, false);
    auto o = compared("min", q(low->value), Relation::kEqual, q(0));
    attach(o, s, low->attainers.front());
    out.push_back(o);
  } else {
    out.push_back(not_applicable("min", "n != 2"));
  }
  (void)c;
  return out;
}

constexpr const char* kC8Reading =
    "delta >= 2 iff the graph attains irr_max among connected graphs of the same order and minimum degree";

std::vector<ClaimOutcome> eval_c8(const Claim& c, const ClassSubject& s, const ClaimParams&, const EvalOptions&) {
  if (s.cls.n < 4 || s.graphs.empty()) {
    auto out = all_not_applicable(c, "n < 4");
    for (auto& o : out) {
      o.interpreted = true;
      o.note += "; " + std::string(kC8Reading);
    }
    return out;
  }
  std::int64_t violators = 0;
  std::optional<std::size_t> first;
  for (std::size_t i = 0; i < s.graphs.size(); ++i) {
    const int delta = s.bundles[i].min_degree;
    const auto top = extreme(s, &InvariantBundle::irr, true,
                             [&](std::size_t j) { return s.bundles[j].min_degree == delta; });
    const bool attains = s.bundles[i].irr == top->value;
    const bool condition = 2 * (delta - 1) * (2 * delta - 1) > 0;
    if (attains != condition) {
      ++violators;
      if (!first) first = i;
    }
  }
  auto o = compared("", q(violators), Relation::kEqual, q(0));
  o.interpreted = true;
  o.note = kC8Reading;
  if (first) attach(o, s, *first);
  return {o};
}

std::vector<ClaimOutcome> eval_path_minimum(const Claim& c, const ClassSubject& s, Field field) {
  if (s.cls.n < 4) return all_not_applicable(c, "n < 4");
  auto keep = [&](std::size_t i) { return !is_star_tree(s.graphs[i]); };
  const auto low = extreme(s, field, false, keep);
  std::optional<std::size_t> path;
  for (std::size_t i = 0; i < s.graphs.size(); ++i) {
    if (is_path_tree(s.graphs[i])) path = i;
  }
  if (!low || !path) return all_not_applicable(c, "class has no path or no non-star tree");
  auto a = compared("a", q(s.bundles[*path].*field), Relation::kEqual, q(low->value));
  attach(a, s, low->attainers.front());
  auto b = compared("b", q(low->value), Relation::kEqual, q(2));
  attach(b, s, low->attainers.front());
  std::int64_t others = 0;
  std::optional<std::size_t> first_other;
  for (std::size_t i : low->attainers) {
    if (i != *path) {
      ++others;
      if (!first_other) first_other = i;
    }
  }
  auto cc = compared("c", q(others), Relation::kEqual, q(0));
  if (first_other) attach(cc, s, *first_other);
  return {a, b, cc};
}

std::vector<ClaimOutcome> eval_c12(const Claim& c, const ClassSubject& s, const ClaimParams&, const EvalOptions&) {
  return eval_path_minimum(c, s, &InvariantBundle::irr);
}

std::vector<ClaimOutcome> eval_c18(const Claim& c, const ClassSubject& s, const ClaimParams&, const EvalOptions&) {
  return eval_path_minimum(c, s, &InvariantBundle::sigma);
}

template <class T, class Sqrt>
std::pair<T, T> c21_formulas(const T& n1, const T& n2, Sqrt sqrt_of) {
  const T root = sqrt_of(28 * n1 * n1 - 24 * n1 * n2);  // sqrt(28 n1^2 - 24 n1 n2)
  const T alpha = n2 - T(4) / 3 * n1 + root / 3;
  const T cube = 4 * n1 - root;
  const T irr_max = cube * cube * cube / 108 + alpha * n1 * n1 - alpha * alpha * n1;
  const T irr_min = T(4) / 3 * n1 - sqrt_of(T(28) / 9 * n1 * n1 - T(8) / 3 * n2 * n1);
  return {irr_max, irr_min};
}

std::vector<ClaimOutcome> eval_c21(const Claim& c, const ClassSubject& s, const ClaimParams&, const EvalOptions&) {
  const std::int64_t n1 = s.cls.n1, n2 = s.cls.n2;
  if (n1 > 2 * n2) return all_not_applicable(c, "n1 > 2*n2");
  if (28 * n1 * n1 - 24 * n1 * n2 < 0) return all_not_applicable(c, "28n1^2 - 24n1n2 < 0");
  if (s.graphs.empty()) return all_not_applicable(c, "empty class");
  bool exact = true;
  auto exact_pair = c21_formulas(q(n1), q(n2), [&](const Rational& x) {
    auto r = exact_sqrt(x);
    if (!r) {
      exact = false;
      return Rational(0);
    }
    return *r;
  });
  Number fmax, fmin;
  if (exact) {
    fmax = Number(exact_pair.first);
    fmin = Number(exact_pair.second);
  } else {
    auto approx = c21_formulas(Float(n1), Float(n2), [](const Float& x) { return mp::sqrt(x); });
    fmax = Number::approximate(approx.first);
    fmin = Number::approximate(approx.second);
  }
  const auto top = extreme(s, &InvariantBundle::irr, true);
  const auto low = extreme(s, &InvariantBundle::irr, false);
  auto mx = compared("max", q(top->value), Relation::kEqual, fmax);
  auto mn = compared("min", q(low->value), Relation::kEqual, fmin);
  attach(mx, s, top->attainers.front());
  attach(mn, s, low->attainers.front());
  return {mx, mn};
}

// ---- registry -------------------------------------------------------------

std::vector<Claim> build_registry() {
  using K = ClaimKind;
  using CK = ClassKind;
  const std::vector<CK> trees{CK::kTrees};
  const std::vector<CK> connected{CK::kConnected};
  const std::vector<CK> maxdeg{CK::kTreesMaxDegree};
  const std::vector<CK> bipartite{CK::kBipartite};
  std::vector<Claim> r;
  auto add = [&](Claim c) { r.push_back(std::move(c)); };

  add({"C1", "irr_max(trees of order n) = (n-1)(n-2), attained only by the star", K::kClassExtremal, "n >= 2",
       ParamSpace::kNone, "star uniquely maximises irr among trees", {"value", "unique"}, trees, nullptr, eval_c1, ""});
  add({"C2", "caterpillar closed form (d_k-1)^2 + (d_1-1)^2 + sum (d_i-1)(d_i-2) + sum |d_i-d_{i+1}| = irr",
       K::kIdentity, "caterpillar tree", ParamSpace::kNone, "caterpillar Albertson closed form", {""}, {}, eval_c2,
       nullptr, ""});
  add({"C3", "over trees of order n: max irr_t = (n-1)(n-2), min irr_t = 2(n-2)", K::kClassExtremal, "n >= 4",
       ParamSpace::kNone, "total irregularity extrema among trees", {"max", "min"}, trees, nullptr, eval_c3, ""});
  add({"C4", "irr <= sqrt(m*M1 - 4m^2)", K::kPerGraph, "m >= 1 and m*M1 >= 4m^2", ParamSpace::kNone,
       "variance upper bound on irr", {""}, {}, eval_c4, nullptr, ""});
  add({"C5", "sigma_max attainers: sigma > delta(Delta-delta)^3 n/(Delta+1) and sigma > (Delta-1)^3 n/(Delta+1)",
       K::kClassExtremal, "connected, n >= 3, attainer not regular", ParamSpace::kNone,
       "lower bounds for graphs of maximal sigma", {"a", "b"}, connected, nullptr, eval_c5, ""});
  add({"C6", "over trees of order n: sigma_max = (n-1)(n-2) for n >= 3; sigma_min = 0 at n = 2",
       K::kClassExtremal, "max: n >= 3; min: n = 2", ParamSpace::kNone, "sigma extrema among trees", {"max", "min"},
       trees, nullptr, eval_c6, ""});
  add({"C7", "sigma2 >= 2 for Hamiltonian graphs", K::kPerGraph, "n >= 3, Hamiltonian, not complete",
       ParamSpace::kNone, "sigma2 of Hamiltonian graphs", {""}, {}, eval_c7, nullptr, ""});
  add({"C8", "G attains irr_max (order n >= 4, min degree delta) iff 2(delta-1)(2delta-1) > 0",
       K::kIffCharacterization, "connected, n >= 4", ParamSpace::kNone, "degree condition for maximal irr", {""},
       connected, nullptr, eval_c8, kC8Reading});
  add({"C9", "irr_min >= 2^alpha (2^(n-Delta) + ceil(n Delta^2/2)) / ((Delta-delta)! + (Delta-1)!)",
       K::kClassExtremal, "trees, 1 <= alpha <= Delta-3", ParamSpace::kAlpha, "lower bound on minimum irr",
       {""}, maxdeg, eval_tree_bound_graph, eval_tree_bound_class,
       "d_n - d_1 taken over the increasing degree sequence, i.e. Delta - delta"});
  add({"C10", "irr_min >= 2^alpha/(Delta-p)^2 and irr_min >= Delta^2(Delta-1) 2^alpha/(Delta-p)^2",
       K::kClassExtremal, "trees, 1 <= p <= alpha <= Delta-3", ParamSpace::kAlphaP,
       "lower bounds on minimum irr with parameter p", {"a", "b"}, maxdeg, eval_tree_bound_graph,
       eval_tree_bound_class, ""});
  add({"C11",
       "lambda*irr_max >= irr_min - Delta^2(Delta-1) 2^alpha/(Delta-p)^2, lambda = sqrt(2n(Delta^2+3m))/(2(Delta+1))",
       K::kClassExtremal, "trees, 1 <= p <= alpha <= Delta-3", ParamSpace::kAlphaP,
       "irr_max versus irr_min comparison", {""}, maxdeg, eval_tree_bound_graph, eval_tree_bound_class,
       "lambda read as sqrt(2n(Delta^2+3m)) / (2(Delta+1))"});
  add({"C12", "for non-star trees of order n: irr(T) >= irr(P_n) with equality iff T = P_n",
       K::kIffCharacterization, "trees, n >= 4, star excluded", ParamSpace::kNone, "path minimises irr", {"a", "b", "c"},
       trees, nullptr, eval_c12, ""});
  add({"C13", "irr(T) >= deg_ave - 2m/n", K::kPerGraph, "tree", ParamSpace::kNone, "average-degree bound on irr",
       {""}, {}, eval_c13, nullptr, ""});
  add({"C14", "irr(T) >= (3 Delta m^2 + 2 delta m)/(n(Delta-3))", K::kPerGraph, "tree, Delta >= 4",
       ParamSpace::kNone, "degree bound on irr of trees", {""}, {}, eval_c14, nullptr, ""});
  add({"C15", "sigma_min >= 2^alpha (2^(n-Delta) + ceil(n Delta^3/2)) / (Delta (Delta-2)!)", K::kClassExtremal,
       "trees, 1 <= alpha <= Delta-3", ParamSpace::kAlpha, "lower bound on minimum sigma", {""}, maxdeg,
       eval_tree_bound_graph, eval_tree_bound_class, ""});
  add({"C16", "sigma_min >= Delta^2(Delta-1)(3^alpha + Delta^p) / ((n-3Delta)! + (Delta-p)^2)", K::kClassExtremal,
       "trees, 1 <= p <= alpha <= Delta-3, n >= 3 Delta", ParamSpace::kAlphaP,
       "factorial lower bound on minimum sigma", {""}, maxdeg, eval_tree_bound_graph, eval_tree_bound_class, ""});
  add({"C17", "sigma_min >= n Delta^2 (Delta-1) 3^alpha / (2Delta-3p)^2", K::kClassExtremal,
       "trees, 1 <= p <= alpha <= Delta, 2 Delta != 3p", ParamSpace::kAlphaPToMax,
       "quadratic lower bound on minimum sigma", {""}, maxdeg, eval_tree_bound_graph, eval_tree_bound_class, ""});
  add({"C18", "for non-star trees of order n: sigma(T) >= sigma(P_n) with equality iff T = P_n",
       K::kIffCharacterization, "trees, n >= 4, star excluded", ParamSpace::kNone, "path minimises sigma",
       {"a", "b", "c"}, trees, nullptr, eval_c18, ""});
  add({"C19", "sigma(T) >= irr(T) + deg_ave^2 - 2m^2/n", K::kPerGraph, "tree", ParamSpace::kNone,
       "sigma versus irr for trees", {""}, {}, eval_c19, nullptr, ""});
  add({"C20", "irr <= u1 u2 (n1-n2) + u1 (n2-u2)(n2-u1) + u2 (n1-u1)(n1-u2), n1 >= n2", K::kPerGraph, "bipartite",
       ParamSpace::kNone, "part-size bound on irr of bipartite graphs", {""}, {}, eval_c20, nullptr, ""});
  add({"C21", "bipartite irr_max and irr_min equal the closed forms in lambda and alpha", K::kClassExtremal,
       "bipartite class, n1 <= 2 n2, 28 n1^2 >= 24 n1 n2", ParamSpace::kNone, "bipartite irr extrema",
       {"max", "min"}, bipartite, nullptr, eval_c21, ""});
  add({"C22",
       "irr <= 2 n1 n2 + n2 delta/m; sigma <= 4 n1 n2 + sqrt(2 n1) n2 delta/m; floor bounds when m > 3 Delta",
       K::kPerGraph, "bipartite, m >= 1; floor parts need m > 3 Delta", ParamSpace::kNone,
       "bipartite irr and sigma bounds", {"irr", "sigma", "irr_floor", "sigma_floor"}, {}, eval_c22, nullptr, ""});
  add({"C23", "irr <= sum_V1 (deg-1)^2 + sum_V2 (deg-2) + 2 n1 Delta", K::kPerGraph, "bipartite, Delta >= 3",
       ParamSpace::kNone, "degree-sum bound on bipartite irr", {""}, {}, eval_c23, nullptr, ""});
  add({"C24", "sigma <= 2 M1 + (n1-1) irr + (n2-2) irr", K::kPerGraph, "bipartite", ParamSpace::kNone,
       "Zagreb bound on bipartite sigma", {""}, {}, eval_c24, nullptr, ""});
  add({"C25",
       "irr <= 2 n1^2 + (Delta^2(Delta-1) + 4 n2)/(n1 n2 + 5 delta); "
       "sigma <= 2 n1^3 + (Delta^3(Delta-1) + 4 n2^2)/(n1 n2 + 3 delta^2)",
       K::kPerGraph, "bipartite, delta >= 2", ParamSpace::kNone, "min-degree bounds for bipartite graphs",
       {"irr", "sigma"}, {}, eval_c25, nullptr, ""});
  add({"C26", "sqrt(sigma) <= irr <= sqrt(m sigma)", K::kPerGraph, "m >= 1", ParamSpace::kNone,
       "sigma sandwich for irr", {"lower", "upper"}, {}, eval_c26, nullptr, ""});
  add({"C27", "irr(K_{s,t}) = st|s-t| and sigma(K_{s,t}) = st(s-t)^2", K::kIdentity, "complete bipartite",
       ParamSpace::kNone, "complete bipartite closed forms", {"irr", "sigma"}, {}, eval_c27, nullptr, ""});
  return r;
}

void fill(std::vector<ClaimOutcome>& out, const Claim& c, const std::string& subject, bool is_class,
          const std::optional<std::pair<int, int>>& parts, const ClaimParams& params) {
  for (auto& o : out) {
    o.claim = c.id;
    o.subject = subject;
    o.subject_is_class = is_class;
    o.parts = parts;
    o.params = params;
    if (!c.interpretation.empty() && o.note.empty()) o.note = c.interpretation;
    if (o.witness) o.witness->params = params;
  }
}

template <class Eval>
std::vector<ClaimOutcome> sweep(const Claim& c, int max_degree, const std::optional<ClaimParams>& fixed, Eval eval) {
  if (c.param_space == ParamSpace::kNone) return eval(ClaimParams{});
  std::vector<ClaimParams> points;
  if (fixed) {
    const auto grid = admissible_params(c, max_degree);
    if (std::find(grid.begin(), grid.end(), *fixed) == grid.end()) {
      throw Error(ErrorCode::kInadmissibleParams, c.id + ": parameters outside the admissible grid");
    }
    points.push_back(*fixed);
  } else {
    points = admissible_params(c, max_degree);
  }
  if (points.empty()) return all_not_applicable(c, "no admissible (alpha, p)");
  std::vector<ClaimOutcome> worst;
  for (const auto& p : points) {
    auto here = eval(p);
    if (worst.empty()) {
      worst = std::move(here);
      continue;
    }
    for (std::size_t k = 0; k < here.size() && k < worst.size(); ++k) {
      if (worse(here[k], worst[k])) worst[k] = std::move(here[k]);
    }
  }
  return worst;
}

bool has_params(const Claim& c) { return c.param_space != ParamSpace::kNone; }

}  // namespace

Verdict decide(const Number& lhs, Relation relation, const Number& rhs) {
  if (lhs.is_exact() && rhs.is_exact()) {
    const Rational d = lhs.exact() - rhs.exact();
    return from_sign(sign(d), relation);
  }
  const Float l = lhs.approx();
  const Float r = rhs.approx();
  const Float band = Float(kMarginalTolerance) * std::max(Float(1), Float(mp::abs(r)));
  if (mp::abs(l - r) <= band) return Verdict::kMarginal;
  return from_sign(l < r ? -1 : 1, relation);
}

bool Claim::takes_graph(const EvalOptions& options) const {
  if (on_graph == nullptr) return false;
  if (on_class != nullptr) return options.per_graph_reading;
  return true;
}

bool Claim::takes_class(ClassKind cls, const EvalOptions& options) const {
  if (on_class == nullptr) return false;
  if (on_graph != nullptr && options.per_graph_reading) return false;
  return std::find(class_kinds.begin(), class_kinds.end(), cls) != class_kinds.end();
}

GraphSubject GraphSubject::make(Graph g, std::optional<std::pair<int, int>> parts, Sigma2Mode mode) {
  GraphSubject s{std::move(g), parts, {}};
  s.bundle = invariant_bundle(s.graph, mode);
  return s;
}

ClassSubject ClassSubject::make(const GraphClass& cls, Sigma2Mode mode) {
  ClassSubject s{cls, enumerate_class(cls), {}};
  s.bundles.reserve(s.graphs.size());
  for (const auto& g : s.graphs) s.bundles.push_back(invariant_bundle(g, mode));
  return s;
}

const std::vector<Claim>& registry() {
  static const std::vector<Claim> claims = build_registry();
  return claims;
}

const Claim& find_claim(std::string_view id) {
  for (const auto& c : registry()) {
    if (c.id == id) return c;
  }
  throw Error(ErrorCode::kUnknownClaimId, "unknown claim id '" + std::string(id) + "'");
}

std::vector<ClaimParams> admissible_params(const Claim& claim, int max_degree) {
  std::vector<ClaimParams> out;
  switch (claim.param_space) {
    case ParamSpace::kNone:
      break;
    case ParamSpace::kAlpha:
      for (int a = 1; a <= max_degree - 3; ++a) out.push_back({a, std::nullopt});
      break;
    case ParamSpace::kAlphaP:
      for (int a = 1; a <= max_degree - 3; ++a) {
        for (int p = 1; p <= a; ++p) out.push_back({a, p});
      }
      break;
    case ParamSpace::kAlphaPToMax:
      for (int a = 1; a <= max_degree; ++a) {
        for (int p = 1; p <= a; ++p) {
          if (2 * max_degree != 3 * p) out.push_back({a, p});
        }
      }
      break;
  }
  return out;
}

std::vector<ClaimOutcome> evaluate(const Claim& claim, const GraphSubject& subject,
                                   const std::optional<ClaimParams>& params, const EvalOptions& options) {
  if (!claim.takes_graph(options)) {
    throw Error(ErrorCode::kKindMismatch, claim.id + " does not take a single graph");
  }
  const std::string g6 = write_graph6(subject.graph);
  auto run = [&](const ClaimParams& p) {
    auto out = claim.on_graph(claim, subject, p, options);
    fill(out, claim, g6, false, subject.declared_parts, p);
    return out;
  };
  auto out = sweep(claim, subject.bundle.max_degree, params, run);
  for (auto& o : out) {
    o.claim = claim.id;
    o.subject = g6;
    o.parts = subject.declared_parts;
    if (o.verdict == Verdict::kFails && !o.witness) o.witness = Witness{g6, subject.declared_parts, o.params};
  }
  return out;
}

std::vector<ClaimOutcome> evaluate(const Claim& claim, const ClassSubject& subject,
                                   const std::optional<ClaimParams>& params, const EvalOptions& options) {
  if (!claim.takes_class(subject.cls.kind, options)) {
    throw Error(ErrorCode::kKindMismatch, claim.id + " does not take class " + subject.cls.description());
  }
  const std::string desc = subject.cls.description();
  auto run = [&](const ClaimParams& p) {
    auto out = claim.on_class(claim, subject, p, options);
    fill(out, claim, desc, true, std::nullopt, p);
    return out;
  };
  auto out = sweep(claim, has_params(claim) ? subject.cls.max_degree : 0, params, run);
  for (auto& o : out) {
    o.claim = claim.id;
    o.subject = desc;
    o.subject_is_class = true;
  }
  return out;
}

}  // namespace irrlab
