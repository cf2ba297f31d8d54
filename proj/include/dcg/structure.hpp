#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dcg/graph.hpp"

namespace dcg {

/// Standard vertex connectivity; n-1 for complete graphs. Minimum vertex cut
/// over nonadjacent pairs via unit-capacity flow.
int vertex_connectivity(const Graph& g);

/// Desk-scale cap for separator enumeration.
constexpr int kSeparatorOrderCap = 16;

/// All inclusion-minimal separating sets of size <= max_size: S separates g
/// and no proper subset of S does. Requires order <= 16.
std::vector<VertexSet> minimal_separators(const Graph& g, int max_size);

/// Partition s = A + B with A independent and B a clique, if one exists.
/// Empty parts are permitted. Deterministic first hit in ascending A-mask order.
std::optional<std::pair<VertexSet, VertexSet>> indep_clique_partition(const Graph& g, VertexSet s);

/// Some x in s with G[s - x] complete, else nothing.
std::optional<int> clique_minus_one(const Graph& g, VertexSet s);

enum class Shape6Tag { FitsK33, FitsK222, Both, Neither };

/// How a 6-set sits inside the two named patterns: FitsK33 iff s splits into
/// two independent triples, FitsK222 iff into three independent pairs.
struct Shape6Result {
  Shape6Tag tag = Shape6Tag::Neither;
  std::optional<std::array<VertexSet, 2>> triple_split;
  std::optional<std::array<VertexSet, 3>> pair_split;
};
Shape6Result shape6(const Graph& g, VertexSet s);
std::string shape6_tag_name(Shape6Tag tag);

/// |N(u) & N(v)| for an edge uv; throws on non-edges.
int edge_triangle_count(const Graph& g, int u, int v);
/// Minimum over all edges; nothing for edgeless graphs.
std::optional<int> min_edge_triangles(const Graph& g);

/// M(x): neighbors of x not adjacent to every other vertex of N(x).
VertexSet non_dominating_neighbors(const Graph& g, int x);

/// The four hypotheses of the (k-3)-connectivity minor theorem, 6 <= k <= 9:
/// connectivity, degree window, per-edge triangles, and the no
/// clique-minus-one condition over all minimal separators.
struct Thm6Hypotheses {
  bool connectivity = false;   // kappa >= k-3
  bool degree_window = false;  // k+1 <= delta <= 2k-5
  bool triangles = false;      // every edge in >= k-2 triangles
  bool separators = false;     // no minimal separator has a clique-minus-one vertex
  bool all() const { return connectivity && degree_window && triangles && separators; }
};
Thm6Hypotheses thm6_hypotheses(const Graph& g, int k);

enum class ExtremalFamily { Mader, Jorgensen, SongThomas };

/// Exact extremal edge thresholds: (p-2)n - C(p-1,2) + 1 for the Mader family
/// (p <= 7), 6n - 20 (Jorgensen), 7n - 27 (Song-Thomas). `p` is only read for
/// the Mader family.
int extremal_threshold(ExtremalFamily family, int p, int n);

/// Recursive build script for (H,k)-cockades: repeatedly glue a fresh copy of
/// the base onto an existing k-clique, identifying it with a k-clique of the
/// copy (paired in order).
struct GlueStep {
  std::vector<int> host_clique;  // vertices in the graph built so far
  std::vector<int> copy_clique;  // vertices of the fresh base copy
};
struct CockadeSpec {
  Graph base;
  int glue_size = 0;
  std::vector<GlueStep> steps;
};

Graph build_cockade(const CockadeSpec& spec);
std::string cockade_spec_to_json(const CockadeSpec& spec);
CockadeSpec cockade_spec_from_json(const std::string& text);

/// Desk-scale cap for cockade recognition.
constexpr int kCockadeOrderCap = 24;

/// True iff g is isomorphic to h, or splits along a separating k-clique into
/// two smaller (h,k)-cockades overlapping exactly on that clique.
bool is_cockade(const Graph& g, const Graph& h, int k);

/// One minimal separator with the shape classifications used by the
/// verifier reports.
struct SeparatorReport {
  VertexSet separator;
  bool is_minimal = false;
  std::optional<int> clique_minus_one_witness;
  std::optional<std::pair<VertexSet, VertexSet>> indep_clique_split;
  std::optional<Shape6Result> shape;  // only when |S| == 6
};
SeparatorReport analyze_separator(const Graph& g, VertexSet s);
std::string separator_report_to_json(const SeparatorReport& report);

}  // namespace dcg
