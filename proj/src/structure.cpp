#include "dcg/structure.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include <json.hpp>

namespace dcg {

// ---------------------------------------------------------------------------
// Connectivity.

namespace {

// Minimum s-t vertex cut for nonadjacent s, t: unit-capacity flow on the
// split digraph (v_in -> v_out cap 1, edges with infinite capacity).
int min_vertex_cut(const Graph& g, int s, int t) {
  const int n = g.order();
  const int nodes = 2 * n;
  const int kInf = 1 << 20;
  std::vector<std::vector<int>> cap(static_cast<std::size_t>(nodes),
                                    std::vector<int>(static_cast<std::size_t>(nodes), 0));
  auto in = [](int v) { return 2 * v; };
  auto out = [](int v) { return 2 * v + 1; };
  for (int v = 0; v < n; ++v) cap[static_cast<std::size_t>(in(v))][static_cast<std::size_t>(out(v))] = 1;
  for (int u = 0; u < n; ++u)
    for (int v : g.neighborhood(u)) cap[static_cast<std::size_t>(out(u))][static_cast<std::size_t>(in(v))] = kInf;

  const int source = out(s), sink = in(t);
  int flow = 0;
  while (true) {
    std::vector<int> parent(static_cast<std::size_t>(nodes), -1);
    parent[static_cast<std::size_t>(source)] = source;
    std::vector<int> queue = {source};
    for (std::size_t qi = 0; qi < queue.size() && parent[static_cast<std::size_t>(sink)] < 0; ++qi) {
      const int u = queue[qi];
      for (int v = 0; v < nodes; ++v)
        if (parent[static_cast<std::size_t>(v)] < 0 && cap[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] > 0) {
          parent[static_cast<std::size_t>(v)] = u;
          queue.push_back(v);
        }
    }
    if (parent[static_cast<std::size_t>(sink)] < 0) break;
    for (int v = sink; v != source; v = parent[static_cast<std::size_t>(v)]) {
      const int u = parent[static_cast<std::size_t>(v)];
      cap[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] -= 1;
      cap[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] += 1;
    }
    ++flow;
  }
  return flow;
}

}  // namespace

int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return 0;
  if (!g.is_connected()) return 0;
  if (g.edge_count() == n * (n - 1) / 2) return n - 1;
  int best = n - 1;
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t)
      if (!g.adjacent(s, t)) best = std::min(best, min_vertex_cut(g, s, t));
  return best;
}

// ---------------------------------------------------------------------------
// Separators.

namespace {

bool separates(const Graph& g, VertexSet s) {
  const VertexSet rest = g.vertices() - s;
  if (rest.size() < 2) return false;
  return g.components(rest).size() >= 2;
}

bool inclusion_minimal(const Graph& g, VertexSet s) {
  // All proper subsets, the empty set included (it covers disconnected g).
  const std::uint64_t bits = s.bits();
  for (std::uint64_t sub = (bits - 1) & bits;; sub = (sub - 1) & bits) {
    if (separates(g, VertexSet(sub))) return false;
    if (sub == 0) break;
  }
  return true;
}

}  // namespace

std::vector<VertexSet> minimal_separators(const Graph& g, int max_size) {
  const int n = g.order();
  if (n > kSeparatorOrderCap)
    throw std::invalid_argument("minimal_separators: order " + std::to_string(n) +
                                " exceeds the cap of " + std::to_string(kSeparatorOrderCap));
  std::vector<VertexSet> out;
  const std::uint64_t all = g.vertices().bits();
  for (std::uint64_t mask = 1; mask <= all; ++mask) {
    if ((mask & ~all) != 0) continue;
    const VertexSet s(mask);
    if (s.size() > max_size) continue;
    if (separates(g, s) && inclusion_minimal(g, s)) out.push_back(s);
  }
  return out;
}

std::optional<std::pair<VertexSet, VertexSet>> indep_clique_partition(const Graph& g, VertexSet s) {
  const std::vector<int> verts = s.to_vector();
  const int m = static_cast<int>(verts.size());
  for (std::uint64_t pick = 0; pick < (1ULL << m); ++pick) {
    VertexSet a;
    for (int i = 0; i < m; ++i)
      if ((pick >> i) & 1) a.add(verts[static_cast<std::size_t>(i)]);
    const VertexSet b = s - a;
    if (g.is_independent(a) && g.is_clique(b)) return std::make_pair(a, b);
  }
  return std::nullopt;
}

std::optional<int> clique_minus_one(const Graph& g, VertexSet s) {
  if (s.empty()) throw std::invalid_argument("clique_minus_one: empty set");
  for (int x : s)
    if (g.is_clique(s - VertexSet::single(x))) return x;
  return std::nullopt;
}

namespace {

bool find_pair_split(const Graph& g, VertexSet rest, std::vector<VertexSet>& acc,
                     std::array<VertexSet, 3>* out) {
  if (rest.empty()) {
    std::copy(acc.begin(), acc.end(), out->begin());
    return true;
  }
  const int first = rest.lowest();
  for (int partner : rest - VertexSet::single(first)) {
    if (g.adjacent(first, partner)) continue;
    acc.push_back(VertexSet({first, partner}));
    if (find_pair_split(g, rest - VertexSet({first, partner}), acc, out)) return true;
    acc.pop_back();
  }
  return false;
}

}  // namespace

Shape6Result shape6(const Graph& g, VertexSet s) {
  if (s.size() != 6) throw std::invalid_argument("shape6: set must have exactly 6 vertices");
  Shape6Result result;
  const std::vector<int> verts = s.to_vector();
  // Two independent triples; the first triple holds verts[0].
  for (int i = 1; i < 5 && !result.triple_split; ++i)
    for (int j = i + 1; j < 6 && !result.triple_split; ++j) {
      VertexSet t1({verts[0], verts[static_cast<std::size_t>(i)], verts[static_cast<std::size_t>(j)]});
      VertexSet t2 = s - t1;
      if (g.is_independent(t1) && g.is_independent(t2))
        result.triple_split = std::array<VertexSet, 2>{t1, t2};
    }
  std::vector<VertexSet> acc;
  std::array<VertexSet, 3> pairs;
  if (find_pair_split(g, s, acc, &pairs)) result.pair_split = pairs;

  if (result.triple_split && result.pair_split) result.tag = Shape6Tag::Both;
  else if (result.triple_split) result.tag = Shape6Tag::FitsK33;
  else if (result.pair_split) result.tag = Shape6Tag::FitsK222;
  else result.tag = Shape6Tag::Neither;
  return result;
}

std::string shape6_tag_name(Shape6Tag tag) {
  switch (tag) {
    case Shape6Tag::FitsK33: return "fits-K33";
    case Shape6Tag::FitsK222: return "fits-K222";
    case Shape6Tag::Both: return "both";
    case Shape6Tag::Neither: return "neither";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Local counts.

int edge_triangle_count(const Graph& g, int u, int v) {
  if (!g.adjacent(u, v)) throw std::invalid_argument("edge_triangle_count: uv is not an edge");
  return (g.neighborhood(u) & g.neighborhood(v)).size();
}

std::optional<int> min_edge_triangles(const Graph& g) {
  std::optional<int> best;
  for (int u = 0; u < g.order(); ++u)
    for (int v : g.neighborhood(u)) {
      if (v < u) continue;
      const int count = (g.neighborhood(u) & g.neighborhood(v)).size();
      if (!best || count < *best) best = count;
    }
  return best;
}

VertexSet non_dominating_neighbors(const Graph& g, int x) {
  const VertexSet nx = g.neighborhood(x);
  VertexSet m;
  for (int y : nx)
    if (!(nx - VertexSet::single(y)).is_subset_of(g.neighborhood(y))) m.add(y);
  return m;
}

Thm6Hypotheses thm6_hypotheses(const Graph& g, int k) {
  if (k < 6 || k > 9) throw std::invalid_argument("thm6_hypotheses: k must be in [6,9]");
  Thm6Hypotheses h;
  h.connectivity = vertex_connectivity(g) >= k - 3;
  const int delta = g.min_degree();
  h.degree_window = (k + 1 <= delta) && (delta <= 2 * k - 5);
  const auto tri = min_edge_triangles(g);
  h.triangles = !tri || *tri >= k - 2;
  h.separators = true;
  for (const VertexSet& s : minimal_separators(g, g.order()))
    if (clique_minus_one(g, s)) {
      h.separators = false;
      break;
    }
  return h;
}

int extremal_threshold(ExtremalFamily family, int p, int n) {
  switch (family) {
    case ExtremalFamily::Mader:
      if (p < 1 || p > 7) throw std::invalid_argument("extremal_threshold: Mader requires 1 <= p <= 7");
      if (n < p) throw std::invalid_argument("extremal_threshold: n < p");
      return (p - 2) * n - (p - 1) * (p - 2) / 2 + 1;
    case ExtremalFamily::Jorgensen:
      if (n < 8) throw std::invalid_argument("extremal_threshold: Jorgensen requires n >= 8");
      return 6 * n - 20;
    case ExtremalFamily::SongThomas:
      if (n < 9) throw std::invalid_argument("extremal_threshold: Song-Thomas requires n >= 9");
      return 7 * n - 27;
  }
  throw std::invalid_argument("extremal_threshold: unknown family");
}

// ---------------------------------------------------------------------------
// Cockades.

Graph build_cockade(const CockadeSpec& spec) {
  const int k = spec.glue_size;
  const int base_n = spec.base.order();
  if (k < 1 || k > base_n) throw std::invalid_argument("build_cockade: glue size out of range");
  Graph g = spec.base;
  for (const GlueStep& step : spec.steps) {
    if (static_cast<int>(step.host_clique.size()) != k ||
        static_cast<int>(step.copy_clique.size()) != k)
      throw std::invalid_argument("build_cockade: glue step cliques must have the glue size");
    VertexSet host_set, copy_set;
    for (int v : step.host_clique) host_set.add(v);
    for (int v : step.copy_clique) {
      if (v < 0 || v >= base_n) throw std::invalid_argument("build_cockade: copy vertex out of range");
      copy_set.add(v);
    }
    if (host_set.size() != k || copy_set.size() != k)
      throw std::invalid_argument("build_cockade: repeated vertices in a glue clique");
    if (!g.is_clique(host_set)) throw std::invalid_argument("build_cockade: host set is not a clique");
    if (!spec.base.is_clique(copy_set)) throw std::invalid_argument("build_cockade: copy set is not a clique");

    const int old_n = g.order();
    const int new_n = old_n + base_n - k;
    if (new_n > Graph::kMaxVertices) throw std::invalid_argument("build_cockade: exceeds 64 vertices");
    // Identified copy vertices map onto the host clique (paired in order);
    // the rest of the copy appends in ascending original order.
    std::vector<int> image(static_cast<std::size_t>(base_n), -1);
    for (int i = 0; i < k; ++i)
      image[static_cast<std::size_t>(step.copy_clique[static_cast<std::size_t>(i)])] =
          step.host_clique[static_cast<std::size_t>(i)];
    int next = old_n;
    for (int v = 0; v < base_n; ++v)
      if (image[static_cast<std::size_t>(v)] < 0) image[static_cast<std::size_t>(v)] = next++;

    GraphBuilder b(new_n);
    for (int u = 0; u < old_n; ++u)
      for (int v : g.neighborhood(u))
        if (v > u) b.add_edge(u, v);
    for (int u = 0; u < base_n; ++u)
      for (int v : spec.base.neighborhood(u))
        if (v > u) {
          const int iu = image[static_cast<std::size_t>(u)], iv = image[static_cast<std::size_t>(v)];
          if (iu < old_n && iv < old_n) continue;  // identified clique edges already present
          b.add_edge(iu, iv);
        }
    g = std::move(b).build();
  }
  return g;
}

namespace {

void enumerate_k_cliques(const Graph& g, int k, VertexSet current, VertexSet candidates,
                         std::vector<VertexSet>& out) {
  if (current.size() == k) {
    out.push_back(current);
    return;
  }
  while (!candidates.empty()) {
    if (current.size() + candidates.size() < k) return;
    const int v = candidates.lowest();
    candidates.remove(v);
    enumerate_k_cliques(g, k, current | VertexSet::single(v), candidates & g.neighborhood(v), out);
  }
}

bool is_cockade_impl(const Graph& g, const Graph& h, int k, std::map<std::string, bool>& memo) {
  const std::string key = to_graph6(canonical_form(g));
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  bool result = false;
  if (g.order() == h.order()) {
    result = is_isomorphic(g, h);
  } else if (g.order() > h.order() && h.order() > k &&
             (g.order() - h.order()) % (h.order() - k) == 0) {
    std::vector<VertexSet> cliques;
    enumerate_k_cliques(g, k, VertexSet(), g.vertices(), cliques);
    for (const VertexSet& s : cliques) {
      const std::vector<VertexSet> comps = g.components(g.vertices() - s);
      if (comps.size() < 2) continue;
      const int m = static_cast<int>(comps.size());
      // Both halves of the identification must be nonempty unions of components.
      for (std::uint64_t pick = 0; pick < (1ULL << (m - 1)) && !result; ++pick) {
        VertexSet half1 = s, half2 = s;
        half1 = half1 | comps[0];
        for (int i = 1; i < m; ++i) {
          if ((pick >> (i - 1)) & 1) half1 = half1 | comps[static_cast<std::size_t>(i)];
          else half2 = half2 | comps[static_cast<std::size_t>(i)];
        }
        if (half2 == s) continue;
        result = is_cockade_impl(g.induced(half1), h, k, memo) &&
                 is_cockade_impl(g.induced(half2), h, k, memo);
      }
      if (result) break;
    }
  }
  memo[key] = result;
  return result;
}

}  // namespace

bool is_cockade(const Graph& g, const Graph& h, int k) {
  if (g.order() > kCockadeOrderCap)
    throw std::invalid_argument("is_cockade: order " + std::to_string(g.order()) +
                                " exceeds the cap of " + std::to_string(kCockadeOrderCap));
  if (k < 1 || k > h.order()) throw std::invalid_argument("is_cockade: glue size out of range");
  std::map<std::string, bool> memo;
  return is_cockade_impl(g, h, k, memo);
}

// ---------------------------------------------------------------------------
// Reports and serialization.

SeparatorReport analyze_separator(const Graph& g, VertexSet s) {
  SeparatorReport report;
  report.separator = s;
  report.is_minimal = separates(g, s) && inclusion_minimal(g, s);
  if (!s.empty()) report.clique_minus_one_witness = clique_minus_one(g, s);
  report.indep_clique_split = indep_clique_partition(g, s);
  if (s.size() == 6) report.shape = shape6(g, s);
  return report;
}

std::string separator_report_to_json(const SeparatorReport& report) {
  nlohmann::json j;
  j["separator"] = report.separator.to_vector();
  j["is_minimal"] = report.is_minimal;
  if (report.clique_minus_one_witness) j["clique_minus_one_witness"] = *report.clique_minus_one_witness;
  if (report.indep_clique_split) {
    j["independent_part"] = report.indep_clique_split->first.to_vector();
    j["clique_part"] = report.indep_clique_split->second.to_vector();
  }
  if (report.shape) j["shape6"] = shape6_tag_name(report.shape->tag);
  return j.dump();
}

std::string cockade_spec_to_json(const CockadeSpec& spec) {
  nlohmann::json j;
  j["base"] = to_graph6(spec.base);
  j["glue_size"] = spec.glue_size;
  j["steps"] = nlohmann::json::array();
  for (const GlueStep& step : spec.steps)
    j["steps"].push_back({{"host_clique", step.host_clique}, {"copy_clique", step.copy_clique}});
  return j.dump(2);
}

CockadeSpec cockade_spec_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  CockadeSpec spec{from_graph6(j.at("base").get<std::string>()), j.at("glue_size").get<int>(), {}};
  for (const auto& step : j.value("steps", nlohmann::json::array()))
    spec.steps.push_back({step.at("host_clique").get<std::vector<int>>(),
                          step.at("copy_clique").get<std::vector<int>>()});
  return spec;
}

}  // namespace dcg
