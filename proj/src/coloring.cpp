#include "dcg/coloring.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace dcg {

namespace {

int distinct_colors(const std::vector<int>& assignment) {
  std::set<int> seen(assignment.begin(), assignment.end());
  return static_cast<int>(seen.size());
}

}  // namespace

Coloring make_coloring(std::vector<int> assignment) {
  Coloring c{std::move(assignment), 0};
  c.colors_used = c.assignment.empty() ? 0 : distinct_colors(c.assignment);
  return c;
}

bool is_proper(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.assignment.size()) != g.order()) return false;
  for (int u = 0; u < g.order(); ++u)
    for (int v : g.neighborhood(u))
      if (v > u && c.assignment[static_cast<std::size_t>(u)] == c.assignment[static_cast<std::size_t>(v)])
        return false;
  return true;
}

// ---------------------------------------------------------------------------
// Exact chromatic number.

namespace {

// DSATUR-ordered backtracking for k-colorability.
struct KColorSearch {
  const Graph& g;
  int n;
  int k;
  std::vector<int> color;

  KColorSearch(const Graph& graph, int limit)
      : g(graph), n(graph.order()), k(limit), color(static_cast<std::size_t>(n), -1) {}

  int pick_vertex() const {
    int best = -1, best_sat = -1, best_deg = -1;
    for (int v = 0; v < n; ++v) {
      if (color[static_cast<std::size_t>(v)] >= 0) continue;
      std::uint64_t sat_mask = 0;
      for (int u : g.neighborhood(v))
        if (color[static_cast<std::size_t>(u)] >= 0) sat_mask |= 1ULL << color[static_cast<std::size_t>(u)];
      const int sat = std::popcount(sat_mask);
      const int deg = g.degree(v);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    return best;
  }

  bool solve(int colored, int max_used) {
    if (colored == n) return true;
    const int v = pick_vertex();
    std::uint64_t forbidden = 0;
    for (int u : g.neighborhood(v))
      if (color[static_cast<std::size_t>(u)] >= 0) forbidden |= 1ULL << color[static_cast<std::size_t>(u)];
    const int limit = std::min(k - 1, max_used + 1);  // new colors in order only
    for (int c = 0; c <= limit; ++c) {
      if ((forbidden >> c) & 1) continue;
      color[static_cast<std::size_t>(v)] = c;
      if (solve(colored + 1, std::max(max_used, c))) return true;
      color[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  }
};

bool k_colorable(const Graph& g, int k) {
  if (g.order() == 0) return true;
  if (k <= 0) return false;
  KColorSearch search(g, k);
  return search.solve(0, -1);
}

int greedy_upper_bound(const Graph& g) {
  std::vector<int> order;
  for (int v = 0; v < g.order(); ++v) order.push_back(v);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
  int used = 0;
  for (int v : order) {
    std::uint64_t forbidden = 0;
    for (int u : g.neighborhood(v))
      if (color[static_cast<std::size_t>(u)] >= 0) forbidden |= 1ULL << color[static_cast<std::size_t>(u)];
    int c = 0;
    while ((forbidden >> c) & 1) ++c;
    color[static_cast<std::size_t>(v)] = c;
    used = std::max(used, c + 1);
  }
  return used;
}

// First proper coloring in lexicographic assignment order, chi colors.
bool lex_witness(const Graph& g, int chi, std::vector<int>& color, int v) {
  if (v == g.order()) return true;
  std::uint64_t forbidden = 0;
  for (int u : g.neighborhood(v))
    if (u < v) forbidden |= 1ULL << color[static_cast<std::size_t>(u)];
  for (int c = 0; c < chi; ++c) {
    if ((forbidden >> c) & 1) continue;
    color[static_cast<std::size_t>(v)] = c;
    if (lex_witness(g, chi, color, v + 1)) return true;
  }
  return false;
}

}  // namespace

int chromatic_count(const Graph& g) {
  if (g.order() == 0) return 0;
  const int lb = clique_number(g);
  const int ub = greedy_upper_bound(g);
  for (int k = lb; k < ub; ++k)
    if (k_colorable(g, k)) return k;
  return ub;
}

ChromaticResult chromatic_number(const Graph& g) {
  ChromaticResult result;
  result.chi = chromatic_count(g);
  std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
  if (g.order() > 0 && !lex_witness(g, result.chi, color, 0))
    throw std::logic_error("chromatic_number: witness search failed");  // unreachable
  result.witness = make_coloring(std::move(color));
  return result;
}

DoubleCriticalResult is_double_critical(const Graph& g) {
  DoubleCriticalResult result;
  if (!g.is_connected()) {
    result.disconnected = true;
    return result;
  }
  const int chi = chromatic_count(g);
  for (int u = 0; u < g.order(); ++u)
    for (int v : g.neighborhood(u)) {
      if (v < u) continue;
      const Graph reduced = g.without(VertexSet({u, v}));
      if (chromatic_count(reduced) != chi - 2) {
        result.failing_edge = std::make_pair(u, v);
        return result;
      }
    }
  result.value = true;
  return result;
}

// ---------------------------------------------------------------------------
// Coloring equivalence and the separator merge.

namespace {

bool partitions_match(const std::vector<int>& a, const std::vector<int>& b,
                      const std::vector<int>& verts) {
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      const int x = verts[i], y = verts[j];
      if ((a[static_cast<std::size_t>(x)] == a[static_cast<std::size_t>(y)]) !=
          (b[static_cast<std::size_t>(x)] == b[static_cast<std::size_t>(y)]))
        return false;
    }
  return true;
}

}  // namespace

bool colorings_equivalent(const Coloring& c1, const Coloring& c2) {
  if (c1.assignment.size() != c2.assignment.size())
    throw std::invalid_argument("colorings_equivalent: domain mismatch");
  std::vector<int> all;
  for (std::size_t v = 0; v < c1.assignment.size(); ++v) all.push_back(static_cast<int>(v));
  return partitions_match(c1.assignment, c2.assignment, all);
}

bool equivalent_on_set(const Graph& g, const Coloring& c1, const Coloring& c2, VertexSet a) {
  if (static_cast<int>(c1.assignment.size()) != g.order() ||
      static_cast<int>(c2.assignment.size()) != g.order())
    throw std::invalid_argument("equivalent_on_set: domain mismatch");
  if (!a.is_subset_of(g.vertices()))
    throw std::invalid_argument("equivalent_on_set: set outside vertex range");
  return partitions_match(c1.assignment, c2.assignment, a.to_vector());
}

namespace {

bool proper_on(const Graph& g, const std::vector<int>& color, VertexSet side) {
  for (int u : side)
    for (int v : g.neighborhood(u) & side)
      if (v > u && color[static_cast<std::size_t>(u)] == color[static_cast<std::size_t>(v)]) return false;
  return true;
}

int colors_on(const std::vector<int>& color, VertexSet side) {
  std::set<int> seen;
  for (int v : side) seen.insert(color[static_cast<std::size_t>(v)]);
  return static_cast<int>(seen.size());
}

int max_color_multiplicity_on(const std::vector<int>& color, VertexSet s) {
  std::map<int, int> counts;
  int best = 0;
  for (int v : s) best = std::max(best, ++counts[color[static_cast<std::size_t>(v)]]);
  return best;
}

int independence_number_within(const Graph& g, VertexSet s) {
  const std::vector<int> verts = s.to_vector();
  int best = 0;
  for (std::uint64_t pick = 0; pick < (1ULL << verts.size()); ++pick) {
    VertexSet sub;
    for (std::size_t i = 0; i < verts.size(); ++i)
      if ((pick >> i) & 1) sub.add(verts[i]);
    if (g.is_independent(sub)) best = std::max(best, sub.size());
  }
  return best;
}

}  // namespace

MergeOutcome merge_colorings_across_separator(const Graph& g, VertexSet s, VertexSet side1,
                                              VertexSet side2, const Coloring& c1,
                                              const Coloring& c2) {
  const int n = g.order();
  if (s.size() != 6) throw std::invalid_argument("merge: separator must have 6 vertices");
  if (!s.is_subset_of(side1) || !s.is_subset_of(side2))
    throw std::invalid_argument("merge: separator must lie in both sides");
  if (!(side1 | side2).is_subset_of(g.vertices()) || !((side1 | side2) == g.vertices()))
    throw std::invalid_argument("merge: sides must cover the graph");
  if (!((side1 - s) & (side2 - s)).empty())
    throw std::invalid_argument("merge: sides may only overlap on the separator");
  if ((g.neighborhood_of_set(side1 - s) & (side2 - s)).size() != 0)
    throw std::invalid_argument("merge: edges cross between the separated sides");
  if (static_cast<int>(c1.assignment.size()) != n || static_cast<int>(c2.assignment.size()) != n)
    throw std::invalid_argument("merge: coloring domains must cover all vertices");
  if (!proper_on(g, c1.assignment, side1)) throw std::invalid_argument("merge: c1 not proper on side1");
  if (!proper_on(g, c2.assignment, side2)) throw std::invalid_argument("merge: c2 not proper on side2");
  if (independence_number_within(g, s) > 4)
    throw std::invalid_argument("merge: separator has independence number above 4");
  if (max_color_multiplicity_on(c1.assignment, s) > 4 ||
      max_color_multiplicity_on(c2.assignment, s) > 4)
    throw std::invalid_argument("merge: a color covers more than four separator vertices");

  const Shape6Result shape = shape6(g, s);
  if (shape.tag != Shape6Tag::Neither) return MergeOutcome{std::nullopt, shape};

  // Fresh colors, one per side.
  int beta1 = 0, beta2 = 0;
  for (int v : side1) beta1 = std::max(beta1, c1.assignment[static_cast<std::size_t>(v)] + 1);
  for (int v : side2) beta2 = std::max(beta2, c2.assignment[static_cast<std::size_t>(v)] + 1);

  // Independent subsets of s, candidates for the fresh color on each side.
  std::vector<VertexSet> indep_subsets;
  {
    const std::vector<int> verts = s.to_vector();
    for (std::uint64_t pick = 0; pick < 64; ++pick) {
      VertexSet sub;
      for (int i = 0; i < 6; ++i)
        if ((pick >> i) & 1) sub.add(verts[static_cast<std::size_t>(i)]);
      if (g.is_independent(sub)) indep_subsets.push_back(sub);
    }
    std::stable_sort(indep_subsets.begin(), indep_subsets.end(),
                     [](VertexSet a, VertexSet b) { return a.size() < b.size(); });
  }

  const std::vector<int> sep_verts = s.to_vector();
  for (const VertexSet& a1 : indep_subsets)
    for (const VertexSet& a2 : indep_subsets) {
      std::vector<int> m1 = c1.assignment, m2 = c2.assignment;
      for (int v : a1) m1[static_cast<std::size_t>(v)] = beta1;
      for (int v : a2) m2[static_cast<std::size_t>(v)] = beta2;
      if (!partitions_match(m1, m2, sep_verts)) continue;

      // Rename side2's classes onto side1's palette: classes meeting s take
      // the matched color, the rest map injectively to unused colors.
      std::map<int, int> rename;
      std::set<int> image;
      for (int v : s) {
        rename[m2[static_cast<std::size_t>(v)]] = m1[static_cast<std::size_t>(v)];
        image.insert(m1[static_cast<std::size_t>(v)]);
      }
      std::set<int> palette;
      for (int v : side1) palette.insert(m1[static_cast<std::size_t>(v)]);
      std::set<int> off_s_colors;
      for (int v : side2 - s)
        if (!rename.count(m2[static_cast<std::size_t>(v)])) off_s_colors.insert(m2[static_cast<std::size_t>(v)]);
      int fresh = 0;
      for (int c : off_s_colors) {
        int pick = -1;
        for (int candidate : palette)
          if (!image.count(candidate)) {
            pick = candidate;
            break;
          }
        if (pick < 0) {
          while (image.count(fresh) || palette.count(fresh)) ++fresh;
          pick = fresh;
        }
        rename[c] = pick;
        image.insert(pick);
      }

      std::vector<int> final_color(static_cast<std::size_t>(n), -1);
      for (int v : side1) final_color[static_cast<std::size_t>(v)] = m1[static_cast<std::size_t>(v)];
      for (int v : side2 - s) final_color[static_cast<std::size_t>(v)] = rename[m2[static_cast<std::size_t>(v)]];
      Coloring merged = make_coloring(std::move(final_color));
      if (!is_proper(g, merged)) continue;
      const int bound = std::max(colors_on(c1.assignment, side1), colors_on(c2.assignment, side2)) + 1;
      if (merged.colors_used > bound) continue;
      return MergeOutcome{merged, std::nullopt};
    }

  throw std::runtime_error(
      "merge: no single-extra-color merge exists for these colorings; the stated "
      "separator hypotheses guarantee one only for the intended separator shapes");
}

}  // namespace dcg
