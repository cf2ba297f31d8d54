#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "dcg/graph.hpp"

namespace dcg {

/// Hypothesis filters for exhaustive sweeps (degree bounds, connectivity,
/// edge-count window). Degree bounds refer to the final n-vertex graph.
struct EnumFilter {
  std::optional<int> min_degree;
  std::optional<int> max_degree;
  std::optional<int> min_edges;
  std::optional<int> max_edges;
  bool connected_only = false;

  bool accepts(const Graph& g) const;
};

/// Feasibility cap for exhaustive isomorph-free generation. Callers may raise
/// it to kEnumLongRunCap behind an explicit long-run flag.
constexpr int kEnumDefaultCap = 9;
constexpr int kEnumLongRunCap = 10;

/// Yields exactly one representative (in canonical form) per isomorphism
/// class of graphs on n vertices passing the filter, in lexicographic
/// canonical-graph6 order. Generation is by vertex augmentation with
/// per-level canonical deduplication; max_degree and max_edges prune
/// intermediate levels.
void enumerate_graphs(int n, const EnumFilter& filter,
                      const std::function<void(const Graph&)>& yield, int cap = kEnumDefaultCap);

std::vector<Graph> enumerate_all(int n, const EnumFilter& filter, int cap = kEnumDefaultCap);

/// One shard of an enumeration split; running all shards of a split yields
/// the full enumeration as a disjoint union.
struct EnumTask {
  int n = 0;
  EnumFilter filter;
  int shard_index = 0;
  int shard_count = 1;
  int cap = kEnumDefaultCap;
};

std::vector<EnumTask> partition_work(int n, const EnumFilter& filter, int shards,
                                     int cap = kEnumDefaultCap);
void run_task(const EnumTask& task, const std::function<void(const Graph&)>& yield);

}  // namespace dcg
