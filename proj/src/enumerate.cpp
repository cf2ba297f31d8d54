#include "dcg/enumerate.hpp"

#include <set>
#include <stdexcept>
#include <string>

namespace dcg {

bool EnumFilter::accepts(const Graph& g) const {
  if (min_edges && max_edges && *min_edges > *max_edges)
    throw std::invalid_argument("EnumFilter: min_edges > max_edges");
  if (min_degree && max_degree && *min_degree > *max_degree)
    throw std::invalid_argument("EnumFilter: min_degree > max_degree");
  if (min_degree && g.min_degree() < *min_degree) return false;
  if (max_degree && g.max_degree() > *max_degree) return false;
  const int e = g.edge_count();
  if (min_edges && e < *min_edges) return false;
  if (max_edges && e > *max_edges) return false;
  if (connected_only && !g.is_connected()) return false;
  return true;
}

namespace {

// Canonical-graph6 keys per level: std::set keeps each level deduplicated
// and in the deterministic output order.
std::set<std::string> augment_level(const std::set<std::string>& prev, int m,
                                    const EnumFilter& filter) {
  std::set<std::string> level;
  for (const std::string& key : prev) {
    const Graph parent = from_graph6(key);
    const int parent_edges = parent.edge_count();
    for (std::uint64_t mask = 0; mask < (1ULL << (m - 1)); ++mask) {
      const int extra = std::popcount(mask);
      if (filter.max_edges && parent_edges + extra > *filter.max_edges) continue;
      Graph child(m);
      {
        GraphBuilder b(m);
        for (int u = 0; u < m - 1; ++u)
          for (int v : parent.neighborhood(u))
            if (v > u) b.add_edge(u, v);
        for (int v : VertexSet(mask)) b.add_edge(v, m - 1);
        child = std::move(b).build();
      }
      // Max-degree violations can never heal under further augmentation.
      if (filter.max_degree && child.max_degree() > *filter.max_degree) continue;
      level.insert(to_graph6(canonical_form(child)));
    }
  }
  return level;
}

}  // namespace

void enumerate_graphs(int n, const EnumFilter& filter,
                      const std::function<void(const Graph&)>& yield, int cap) {
  if (cap > kEnumLongRunCap) cap = kEnumLongRunCap;
  if (n > cap)
    throw std::invalid_argument("enumerate_graphs: n = " + std::to_string(n) +
                                " exceeds the exhaustive cap of " + std::to_string(cap) +
                                " (raise via the long-run flag, hard cap " +
                                std::to_string(kEnumLongRunCap) + ")");
  if (n < 0) throw std::invalid_argument("enumerate_graphs: negative n");
  if (n == 0) return;

  std::set<std::string> level = {to_graph6(Graph(1))};
  for (int m = 2; m <= n; ++m) level = augment_level(level, m, filter);
  for (const std::string& key : level) {
    Graph g = from_graph6(key);
    if (filter.accepts(g)) yield(g);
  }
}

std::vector<Graph> enumerate_all(int n, const EnumFilter& filter, int cap) {
  std::vector<Graph> out;
  enumerate_graphs(n, filter, [&](const Graph& g) { out.push_back(g); }, cap);
  return out;
}

std::vector<EnumTask> partition_work(int n, const EnumFilter& filter, int shards, int cap) {
  if (shards < 1) throw std::invalid_argument("partition_work: shards must be >= 1");
  std::vector<EnumTask> tasks;
  for (int i = 0; i < shards; ++i) tasks.push_back({n, filter, i, shards, cap});
  return tasks;
}

void run_task(const EnumTask& task, const std::function<void(const Graph&)>& yield) {
  long index = 0;
  enumerate_graphs(
      task.n, task.filter,
      [&](const Graph& g) {
        if (index % task.shard_count == task.shard_index) yield(g);
        ++index;
      },
      task.cap);
}

}  // namespace dcg
