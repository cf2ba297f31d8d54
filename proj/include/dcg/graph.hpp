#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace dcg {

/// Subset of the vertices 0..63, bit-mask semantics.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> vs) {
    for (int v : vs) add(v);
  }

  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~0ULL : (1ULL << n) - 1);
  }
  static constexpr VertexSet single(int v) { return VertexSet(1ULL << v); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr int lowest() const { return std::countr_zero(bits_); }

  void add(int v) { bits_ |= 1ULL << v; }
  void remove(int v) { bits_ &= ~(1ULL << v); }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr bool operator==(const VertexSet&) const = default;
  constexpr bool is_subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  // Range-for over set bits in ascending order.
  class iterator {
   public:
    explicit iterator(std::uint64_t b) : b_(b) {}
    int operator*() const { return std::countr_zero(b_); }
    iterator& operator++() { b_ &= b_ - 1; return *this; }
    bool operator!=(const iterator& o) const { return b_ != o.b_; }
   private:
    std::uint64_t b_;
  };
  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

 private:
  std::uint64_t bits_ = 0;
};

/// Immutable simple graph on vertices 0..n-1, n <= 64. Adjacency rows are
/// 64-bit masks, so neighborhood queries and set algebra are single-word ops.
/// All "mutators" return new graphs.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  explicit Graph(int n);

  int order() const { return n_; }
  int edge_count() const;
  bool adjacent(int u, int v) const { check_vertex(u); check_vertex(v); return (adj_[u] >> v) & 1; }
  VertexSet neighborhood(int v) const { check_vertex(v); return VertexSet(adj_[v]); }
  VertexSet closed_neighborhood(int v) const { check_vertex(v); return VertexSet(adj_[v] | (1ULL << v)); }
  int degree(int v) const { check_vertex(v); return std::popcount(adj_[v]); }
  int min_degree() const;
  int max_degree() const;
  VertexSet vertices() const { return VertexSet::range(n_); }

  /// Neighbors of any vertex in s, excluding s itself.
  VertexSet neighborhood_of_set(VertexSet s) const;

  /// G+uv per the usual convention: identity when uv already present or u==v.
  Graph with_edge(int u, int v) const;
  Graph complement() const;
  /// Induced subgraph G[s], relabeled to 0..|s|-1 in ascending original order.
  Graph induced(VertexSet s) const;
  /// G - s.
  Graph without(VertexSet s) const;
  Graph without_vertex(int v) const { return without(VertexSet::single(v)); }
  /// Disjoint union, other's vertices shifted by order().
  Graph disjoint_union(const Graph& other) const;
  Graph relabeled(const std::vector<int>& position_of) const;

  bool is_connected() const;
  bool is_connected_within(VertexSet s) const;
  bool is_clique(VertexSet s) const;
  bool is_independent(VertexSet s) const;
  /// Vertices reachable from `start` inside `allowed` (start must be in allowed).
  VertexSet component_of(int start, VertexSet allowed) const;
  std::vector<VertexSet> components(VertexSet within) const;

  // Named constructors.
  static Graph edgeless(int n) { return Graph(n); }
  static Graph complete(int t);
  static Graph complete_multipartite(const std::vector<int>& parts);
  static Graph cycle(int n);
  static Graph path(int n);
  /// Kneser graph on 2-subsets of a 5-set, disjointness adjacency.
  static Graph petersen();
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const;
  friend class GraphBuilder;

  int n_;
  std::vector<std::uint64_t> adj_;
};

/// Mutable staging area for constructing a Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n);
  void add_edge(int u, int v);
  Graph build() &&;

 private:
  Graph g_;
};

// graph6 interchange, one graph per line. Bit-exact with the published
// format: header byte(s) carry n, payload packs the upper triangle
// column-major, 6 bits per printable character offset by 63.
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& text);

// Canonical labeling via equitable partition refinement plus backtracking
// over cell individualizations; the representative is the relabeling with
// lexicographically least adjacency rows.
Graph canonical_form(const Graph& g);
/// Labeling behind canonical_form: result[i] = original vertex at position i.
std::vector<int> canonical_labeling(const Graph& g);
bool is_isomorphic(const Graph& g, const Graph& h);

/// Exact clique number (branch and bound; desk scale).
int clique_number(const Graph& g);
/// Some clique of size t, if one exists.
bool find_clique(const Graph& g, int t, VertexSet* out);

}  // namespace dcg
