#include "dcg/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dcg {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0)), 0) {
  if (n < 0 || n > kMaxVertices)
    throw std::invalid_argument("graph order must be between 0 and 64, got " + std::to_string(n));
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range for order " +
                            std::to_string(n_));
}

int Graph::edge_count() const {
  int twice = 0;
  for (auto row : adj_) twice += std::popcount(row);
  return twice / 2;
}

int Graph::min_degree() const {
  int d = n_;  // n for the empty graph; callers treat order 0 specially
  for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

VertexSet Graph::neighborhood_of_set(VertexSet s) const {
  std::uint64_t acc = 0;
  for (int v : s) {
    check_vertex(v);
    acc |= adj_[v];
  }
  return VertexSet(acc & ~s.bits());
}

Graph Graph::with_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  Graph g = *this;
  if (u != v) {
    g.adj_[u] |= 1ULL << v;
    g.adj_[v] |= 1ULL << u;
  }
  return g;
}

Graph Graph::complement() const {
  Graph g(n_);
  const std::uint64_t all = vertices().bits();
  for (int v = 0; v < n_; ++v) g.adj_[v] = all & ~adj_[v] & ~(1ULL << v);
  return g;
}

Graph Graph::induced(VertexSet s) const {
  if (!s.is_subset_of(vertices()))
    throw std::out_of_range("induced: vertex set not within graph");
  std::vector<int> verts = s.to_vector();
  Graph g(static_cast<int>(verts.size()));
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (adjacent(verts[i], verts[j])) {
        g.adj_[i] |= 1ULL << j;
        g.adj_[j] |= 1ULL << i;
      }
  return g;
}

Graph Graph::without(VertexSet s) const { return induced(vertices() - s); }

Graph Graph::disjoint_union(const Graph& other) const {
  if (n_ + other.n_ > kMaxVertices) throw std::invalid_argument("disjoint_union exceeds 64 vertices");
  Graph g(n_ + other.n_);
  for (int v = 0; v < n_; ++v) g.adj_[v] = adj_[v];
  for (int v = 0; v < other.n_; ++v) g.adj_[n_ + v] = other.adj_[v] << n_;
  return g;
}

Graph Graph::relabeled(const std::vector<int>& position_of) const {
  if (static_cast<int>(position_of.size()) != n_)
    throw std::invalid_argument("relabeled: permutation size mismatch");
  Graph g(n_);
  for (int u = 0; u < n_; ++u)
    for (int v : VertexSet(adj_[u])) {
      g.adj_[position_of[u]] |= 1ULL << position_of[v];
    }
  return g;
}

VertexSet Graph::component_of(int start, VertexSet allowed) const {
  check_vertex(start);
  std::uint64_t seen = 1ULL << start;
  std::uint64_t frontier = seen;
  while (frontier) {
    std::uint64_t next = 0;
    for (int v : VertexSet(frontier)) next |= adj_[v];
    frontier = next & allowed.bits() & ~seen;
    seen |= frontier;
  }
  return VertexSet(seen);
}

bool Graph::is_connected_within(VertexSet s) const {
  if (s.empty()) return true;
  return component_of(s.lowest(), s) == s;
}

bool Graph::is_connected() const { return is_connected_within(vertices()); }

bool Graph::is_clique(VertexSet s) const {
  for (int v : s) {
    check_vertex(v);
    if (!(s - VertexSet::single(v)).is_subset_of(VertexSet(adj_[v]))) return false;
  }
  return true;
}

bool Graph::is_independent(VertexSet s) const {
  for (int v : s) {
    check_vertex(v);
    if (s.intersects(VertexSet(adj_[v]))) return false;
  }
  return true;
}

std::vector<VertexSet> Graph::components(VertexSet within) const {
  std::vector<VertexSet> out;
  VertexSet rest = within;
  while (!rest.empty()) {
    VertexSet c = component_of(rest.lowest(), rest);
    out.push_back(c);
    rest = rest - c;
  }
  return out;
}

Graph Graph::complete(int t) {
  if (t < 0) throw std::invalid_argument("complete: negative order");
  return Graph(t).complement();
}

Graph Graph::complete_multipartite(const std::vector<int>& parts) {
  int total = 0;
  for (int p : parts) {
    if (p < 1) throw std::invalid_argument("complete_multipartite: each part must be >= 1");
    total += p;
  }
  Graph g(total);
  int offset = 0;
  for (int p : parts) {
    VertexSet part(((p >= 64 ? ~0ULL : (1ULL << p) - 1)) << offset);
    for (int v : part) g.adj_[v] = g.vertices().bits() & ~part.bits();
    offset += p;
  }
  return g;
}

Graph Graph::cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle: need at least 3 vertices");
  GraphBuilder b(n);
  for (int v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return std::move(b).build();
}

Graph Graph::path(int n) {
  GraphBuilder b(n);
  for (int v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return std::move(b).build();
}

Graph Graph::petersen() {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) pairs.emplace_back(i, j);
  GraphBuilder b(10);
  for (int a = 0; a < 10; ++a)
    for (int c = a + 1; c < 10; ++c) {
      auto [i, j] = pairs[a];
      auto [k, l] = pairs[c];
      if (i != k && i != l && j != k && j != l) b.add_edge(a, c);
    }
  return std::move(b).build();
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

GraphBuilder::GraphBuilder(int n) : g_(n) {}

void GraphBuilder::add_edge(int u, int v) {
  g_.check_vertex(u);
  g_.check_vertex(v);
  if (u == v) throw std::invalid_argument("add_edge: self-loop");
  g_.adj_[u] |= 1ULL << v;
  g_.adj_[v] |= 1ULL << u;
}

Graph GraphBuilder::build() && { return std::move(g_); }

// ---------------------------------------------------------------------------
// Cliques.

namespace {

bool clique_search(const Graph& g, VertexSet current, VertexSet candidates, int target,
                   VertexSet* out) {
  if (current.size() == target) {
    if (out) *out = current;
    return true;
  }
  while (!candidates.empty()) {
    if (current.size() + candidates.size() < target) return false;
    int v = candidates.lowest();
    candidates.remove(v);
    if (clique_search(g, current | VertexSet::single(v), candidates & g.neighborhood(v), target,
                      out))
      return true;
  }
  return false;
}

}  // namespace

bool find_clique(const Graph& g, int t, VertexSet* out) {
  if (t <= 0) {
    if (out) *out = VertexSet();
    return true;
  }
  return clique_search(g, VertexSet(), g.vertices(), t, out);
}

int clique_number(const Graph& g) {
  int w = 0;
  while (w < g.order() && find_clique(g, w + 1, nullptr)) ++w;
  return w;
}

}  // namespace dcg
