#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dcg/graph.hpp"
#include "dcg/structure.hpp"

namespace dcg {

/// Proper vertex coloring; colors are small nonnegative ints.
struct Coloring {
  std::vector<int> assignment;
  int colors_used = 0;
};

bool is_proper(const Graph& g, const Coloring& c);
Coloring make_coloring(std::vector<int> assignment);

struct ChromaticResult {
  int chi = 0;
  Coloring witness;  // lexicographically least optimum
};

/// Exact chromatic number with witness. Branch and bound between the clique
/// lower bound and a greedy upper bound; a second pass recovers the
/// lexicographically least optimal assignment.
ChromaticResult chromatic_number(const Graph& g);
/// Just the count (skips the witness pass).
int chromatic_count(const Graph& g);

struct DoubleCriticalResult {
  bool value = false;
  bool disconnected = false;
  std::optional<std::pair<int, int>> failing_edge;
};

/// Connected, and chi(G - {u,v}) == chi(G) - 2 for every edge uv. Edgeless
/// graphs are double-critical iff connected (the edge condition is vacuous).
DoubleCriticalResult is_double_critical(const Graph& g);

/// Same color partition on the whole domain.
bool colorings_equivalent(const Coloring& c1, const Coloring& c2);
/// Restrictions to `a` induce the same partition of `a`.
bool equivalent_on_set(const Graph& g, const Coloring& c1, const Coloring& c2, VertexSet a);

/// Outcome of the 6-separator coloring merge: either a proper coloring of
/// the whole graph, or the shape of G[S] as a principled failure.
struct MergeOutcome {
  std::optional<Coloring> merged;
  std::optional<Shape6Result> shape_failure;
};

/// Combines side colorings across a 6-vertex minimal separator. When G[s]
/// fits in neither K_{3,3} nor K_{2,2,2}, recolors an independent subset of s
/// on each side with one fresh color so the two partitions of s coincide,
/// then permutes side2's colors onto side1's. Preconditions (|s| = 6, s
/// separates, colorings proper per side, alpha(G[s]) <= 4, no color covering
/// more than four vertices of s) are reported via std::invalid_argument.
MergeOutcome merge_colorings_across_separator(const Graph& g, VertexSet s, VertexSet side1,
                                              VertexSet side2, const Coloring& c1,
                                              const Coloring& c2);

}  // namespace dcg
