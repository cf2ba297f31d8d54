#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>

#include "dcg/enumerate.hpp"
#include "oracles.hpp"

using namespace dcg;

namespace {

std::size_t count_all(int n, const EnumFilter& filter = {}, int cap = kEnumDefaultCap) {
  std::size_t count = 0;
  enumerate_graphs(n, filter, [&](const Graph&) { ++count; }, cap);
  return count;
}

}  // namespace

TEST_CASE("isomorphism class counts (OEIS A000088)") {
  CHECK(count_all(1) == 1);
  CHECK(count_all(2) == 2);
  CHECK(count_all(3) == 4);
  CHECK(count_all(4) == 11);
  CHECK(count_all(5) == 34);
  CHECK(count_all(6) == 156);
  CHECK(count_all(7) == 1044);
  CHECK(count_all(8) == 12346);
}

TEST_CASE("counts agree with the brute-force permutation dedupe for n <= 5") {
  for (int n = 1; n <= 5; ++n) CHECK(count_all(n) == oracle::labeled_dedupe_count(n));
}

TEST_CASE("connected class counts (OEIS A001349)") {
  EnumFilter filter;
  filter.connected_only = true;
  CHECK(count_all(4, filter) == 6);
  CHECK(count_all(5, filter) == 21);
  CHECK(count_all(6, filter) == 112);
  CHECK(count_all(7, filter) == 853);
  CHECK(count_all(8, filter) == 11117);
}

TEST_CASE("regular and degree-bounded counts") {
  EnumFilter cubic;
  cubic.min_degree = 3;
  cubic.max_degree = 3;
  CHECK(count_all(4, cubic) == 1);   // K_4
  CHECK(count_all(6, cubic) == 2);   // K_{3,3} and the prism
  CHECK(count_all(8, cubic) == 6);   // cubic graphs on 8 vertices (A005638)

  EnumFilter window;
  window.min_edges = 3;
  window.max_edges = 3;
  CHECK(count_all(5, window) == 4);  // K_3, P_4, K_{1,3}, P_3+K_2 (padded with isolated vertices)
}

TEST_CASE("yields are canonical, filtered, and duplicate-free") {
  EnumFilter filter;
  filter.min_degree = 1;
  std::set<std::string> seen;
  enumerate_graphs(6, filter, [&](const Graph& g) {
    CHECK(g.order() == 6);
    CHECK(g.min_degree() >= 1);
    CHECK(canonical_form(g) == g);
    CHECK(seen.insert(to_graph6(g)).second);
  });
  // graphs on 6 vertices with no isolated vertex: 156 total minus the 34
  // classes with an isolated vertex (graphs on 5 vertices)
  CHECK(seen.size() == 156 - 34);
}

TEST_CASE("filter accepts() agrees with a post-hoc scan") {
  EnumFilter filter;
  filter.min_degree = 2;
  filter.max_degree = 4;
  filter.min_edges = 6;
  filter.max_edges = 10;
  filter.connected_only = true;
  std::size_t direct = 0;
  enumerate_graphs(6, filter, [&](const Graph&) { ++direct; });
  std::size_t scanned = 0;
  enumerate_graphs(6, EnumFilter{}, [&](const Graph& g) {
    if (filter.accepts(g)) ++scanned;
  });
  CHECK(direct == scanned);
  CHECK(direct > 0);
}

TEST_CASE("cap is enforced") {
  CHECK_THROWS_AS(count_all(10), std::invalid_argument);
  CHECK_THROWS_AS(count_all(11, EnumFilter{}, kEnumLongRunCap), std::invalid_argument);
}

TEST_CASE("sharded tasks partition the enumeration") {
  EnumFilter filter;
  const std::vector<EnumTask> tasks = partition_work(7, filter, 4);
  CHECK(tasks.size() == 4);
  std::set<std::string> joint;
  for (const EnumTask& task : tasks) {
    std::size_t before = joint.size(), produced = 0;
    run_task(task, [&](const Graph& g) {
      ++produced;
      joint.insert(to_graph6(g));
    });
    CHECK(joint.size() == before + produced);  // shards are disjoint
  }
  CHECK(joint.size() == 1044);
}
