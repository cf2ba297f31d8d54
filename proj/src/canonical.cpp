#include <algorithm>
#include <cstdint>
#include <vector>

#include "dcg/graph.hpp"

namespace dcg {

namespace {

using Cells = std::vector<std::vector<int>>;

std::uint64_t cell_mask(const std::vector<int>& cell) {
  std::uint64_t m = 0;
  for (int v : cell) m |= 1ULL << v;
  return m;
}

// Equitable refinement: repeatedly split cells by neighbor counts against
// every cell, keeping subcells ordered by count. The resulting cell order
// depends only on the isomorphism type plus prior individualizations.
void refine(const Graph& g, Cells& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t si = 0; si < cells.size() && !changed; ++si) {
      const std::uint64_t splitter = cell_mask(cells[si]);
      for (std::size_t di = 0; di < cells.size(); ++di) {
        if (cells[di].size() < 2) continue;
        auto count = [&](int v) { return std::popcount(g.neighborhood(v).bits() & splitter); };
        const int c0 = count(cells[di][0]);
        bool uniform = true;
        for (int v : cells[di])
          if (count(v) != c0) {
            uniform = false;
            break;
          }
        if (uniform) continue;

        std::vector<std::pair<int, int>> keyed;  // (count, vertex)
        keyed.reserve(cells[di].size());
        for (int v : cells[di]) keyed.emplace_back(count(v), v);
        std::sort(keyed.begin(), keyed.end());
        Cells sub;
        for (auto [c, v] : keyed) {
          if (sub.empty() || count(sub.back()[0]) != c) sub.push_back({});
          sub.back().push_back(v);
        }
        cells.erase(cells.begin() + static_cast<long>(di));
        cells.insert(cells.begin() + static_cast<long>(di), sub.begin(), sub.end());
        changed = true;
        break;
      }
    }
  }
}

struct CanonSearch {
  const Graph& g;
  std::vector<std::uint64_t> best_rows;
  std::vector<int> best_labeling;  // position i -> original vertex
  bool have_best = false;

  void visit_leaf(const Cells& cells) {
    const int n = g.order();
    std::vector<int> labeling(static_cast<std::size_t>(n));
    std::vector<int> position(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      labeling[i] = cells[static_cast<std::size_t>(i)][0];
      position[labeling[i]] = i;
    }
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
    for (int u = 0; u < n; ++u)
      for (int v : g.neighborhood(u)) rows[static_cast<std::size_t>(position[u])] |= 1ULL << position[v];
    if (!have_best || rows < best_rows) {
      best_rows = std::move(rows);
      best_labeling = std::move(labeling);
      have_best = true;
    }
  }

  void descend(Cells cells) {
    refine(g, cells);
    std::size_t target = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (cells[i].size() > 1) {
        target = i;
        break;
      }
    if (target == cells.size()) {
      visit_leaf(cells);
      return;
    }
    for (std::size_t vi = 0; vi < cells[target].size(); ++vi) {
      const int v = cells[target][vi];
      // Twins (same neighborhood apart from each other) are swapped by an
      // automorphism fixing every other vertex, so branching on one
      // representative per twin class covers all leaves.
      bool redundant = false;
      for (std::size_t ui = 0; ui < vi && !redundant; ++ui) {
        const int u = cells[target][ui];
        redundant = (g.neighborhood(u) - VertexSet::single(v)) ==
                    (g.neighborhood(v) - VertexSet::single(u));
      }
      if (redundant) continue;
      Cells next = cells;
      std::vector<int> rest = cells[target];
      rest.erase(std::find(rest.begin(), rest.end(), v));
      next[target] = {v};
      next.insert(next.begin() + static_cast<long>(target) + 1, rest);
      descend(std::move(next));
    }
  }
};

std::vector<int> canonical_labeling_impl(const Graph& g) {
  const int n = g.order();
  if (n == 0) return {};
  // Initial partition by degree.
  std::vector<std::pair<int, int>> keyed;
  for (int v = 0; v < n; ++v) keyed.emplace_back(g.degree(v), v);
  std::sort(keyed.begin(), keyed.end());
  Cells cells;
  for (auto [d, v] : keyed) {
    if (cells.empty() || g.degree(cells.back()[0]) != d) cells.push_back({});
    cells.back().push_back(v);
  }
  CanonSearch search{g};
  search.descend(std::move(cells));
  return search.best_labeling;
}

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) { return canonical_labeling_impl(g); }

Graph canonical_form(const Graph& g) {
  std::vector<int> labeling = canonical_labeling_impl(g);
  std::vector<int> position(labeling.size());
  for (std::size_t i = 0; i < labeling.size(); ++i)
    position[static_cast<std::size_t>(labeling[i])] = static_cast<int>(i);
  return g.relabeled(position);
}

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  auto degrees = [](const Graph& x) {
    std::vector<int> d;
    for (int v = 0; v < x.order(); ++v) d.push_back(x.degree(v));
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degrees(g) != degrees(h)) return false;
  return canonical_form(g) == canonical_form(h);
}

}  // namespace dcg
