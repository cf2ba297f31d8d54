#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "dcg/graph.hpp"
#include "oracles.hpp"

using namespace dcg;

namespace {

Graph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) b.add_edge(i, j);
  return std::move(b).build();
}

std::vector<int> random_permutation(int n, std::mt19937& rng) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace

TEST_CASE("VertexSet basics") {
  VertexSet s{1, 3, 63};
  CHECK(s.size() == 3);
  CHECK(s.contains(63));
  CHECK(!s.contains(0));
  CHECK(s.lowest() == 1);
  s.remove(1);
  CHECK(s == VertexSet({3, 63}));
  CHECK((s | VertexSet{3, 4}) == VertexSet({3, 4, 63}));
  CHECK((s & VertexSet{3, 4}) == VertexSet::single(3));
  CHECK((s - VertexSet{3}) == VertexSet::single(63));
  CHECK(VertexSet{1, 2}.is_subset_of(VertexSet{1, 2, 3}));
  CHECK(!VertexSet{1, 4}.is_subset_of(VertexSet{1, 2, 3}));
  CHECK(VertexSet::range(4) == VertexSet({0, 1, 2, 3}));
  CHECK(VertexSet::range(64).size() == 64);
  CHECK(VertexSet{5, 9}.to_vector() == std::vector<int>{5, 9});
  int sum = 0;
  for (int v : VertexSet{2, 4, 8}) sum += v;
  CHECK(sum == 14);
}

TEST_CASE("named constructors") {
  CHECK(Graph::complete(5).edge_count() == 10);
  CHECK(Graph::complete(5).min_degree() == 4);
  CHECK(Graph::cycle(6).edge_count() == 6);
  CHECK(Graph::cycle(6).max_degree() == 2);
  CHECK(Graph::path(4).edge_count() == 3);
  CHECK(Graph::edgeless(7).edge_count() == 0);

  const Graph kmp = Graph::complete_multipartite({2, 2, 2});
  CHECK(kmp.order() == 6);
  CHECK(kmp.edge_count() == 12);
  CHECK(kmp.min_degree() == 4);

  const Graph k333 = Graph::complete_multipartite({3, 3, 3});
  CHECK(k333.edge_count() == 27);
  CHECK(k333.min_degree() == 6);
}

TEST_CASE("petersen graph structure") {
  const Graph p = Graph::petersen();
  CHECK(p.order() == 10);
  CHECK(p.edge_count() == 15);
  CHECK(p.min_degree() == 3);
  CHECK(p.max_degree() == 3);
  // triangle-free and square-free (girth 5)
  for (int u = 0; u < 10; ++u)
    for (int v : p.neighborhood(u)) {
      if (v < u) continue;
      CHECK((p.neighborhood(u) & p.neighborhood(v)).empty());
    }
  for (int u = 0; u < 10; ++u)
    for (int v = u + 1; v < 10; ++v)
      if (!p.adjacent(u, v)) CHECK((p.neighborhood(u) & p.neighborhood(v)).size() <= 1);
  CHECK(clique_number(p) == 2);

  // the complement is the unique SRG(10,6,3,4) (triangular graph T(5))
  const Graph pb = p.complement();
  CHECK(pb.min_degree() == 6);
  CHECK(pb.max_degree() == 6);
  for (int u = 0; u < 10; ++u)
    for (int v = u + 1; v < 10; ++v) {
      const int common = (pb.neighborhood(u) & pb.neighborhood(v)).size();
      CHECK(common == (pb.adjacent(u, v) ? 3 : 4));
    }
  CHECK(clique_number(pb) == 4);
}

TEST_CASE("graph operations") {
  const Graph c5 = Graph::cycle(5);
  CHECK(c5.with_edge(0, 2).edge_count() == 6);
  CHECK(c5.with_edge(0, 1).edge_count() == 5);  // already present
  CHECK(c5.with_edge(3, 3).edge_count() == 5);  // loops ignored
  CHECK(c5.complement().complement() == c5);
  CHECK(c5.complement().edge_count() == 5);

  const Graph sub = Graph::complete(6).induced(VertexSet{1, 3, 4});
  CHECK(sub.order() == 3);
  CHECK(sub.edge_count() == 3);
  CHECK(Graph::cycle(6).induced(VertexSet{0, 1, 2}) == Graph::path(3));

  CHECK(c5.without_vertex(0) == Graph::path(4));
  CHECK(c5.without(VertexSet{0, 2}).edge_count() == 1);

  const Graph du = Graph::complete(3).disjoint_union(Graph::complete(2));
  CHECK(du.order() == 5);
  CHECK(du.edge_count() == 4);
  CHECK(!du.is_connected());
  CHECK(du.components(du.vertices()).size() == 2);
  CHECK(du.component_of(4, du.vertices()) == VertexSet({3, 4}));

  CHECK(c5.is_connected());
  CHECK(c5.is_connected_within(VertexSet{0, 1, 2}));
  CHECK(!c5.is_connected_within(VertexSet{0, 2}));
  CHECK(Graph::complete(4).is_clique(VertexSet{0, 1, 3}));
  CHECK(!c5.is_clique(VertexSet{0, 1, 2}));
  CHECK(c5.is_independent(VertexSet{0, 2}));
  CHECK(c5.neighborhood_of_set(VertexSet{0, 1}) == VertexSet({2, 4}));
}

TEST_CASE("precondition errors") {
  const Graph g(4);
  CHECK_THROWS_AS((void)g.adjacent(0, 4), std::out_of_range);
  CHECK_THROWS_AS((void)g.neighborhood(-1), std::out_of_range);
  CHECK_THROWS_AS(Graph(65), std::invalid_argument);
  CHECK_THROWS_AS(from_graph6(""), std::invalid_argument);
  CHECK_THROWS_AS(from_graph6("D"), std::invalid_argument);       // truncated payload
  CHECK_THROWS_AS(from_graph6("DQc "), std::invalid_argument);    // trailing byte
  CHECK_THROWS_AS(from_graph6("D\x1fc"), std::invalid_argument);  // byte below '?'
}

TEST_CASE("graph6 known strings") {
  CHECK(to_graph6(Graph::complete(5)) == "D~{");
  CHECK(from_graph6("D~{") == Graph::complete(5));
  CHECK(to_graph6(Graph::edgeless(1)) == "@");
  CHECK(to_graph6(Graph::complete(2)) == "A_");
  CHECK(from_graph6("Dhc") == Graph::cycle(5));
  CHECK(to_graph6(Graph::cycle(5)) == "Dhc");
}

TEST_CASE("graph6 round trip, including long form") {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 64);
    const Graph g = random_graph(n, 0.4, rng);
    CHECK(from_graph6(to_graph6(g)) == g);
  }
  const Graph big = Graph::complete(64);
  CHECK(to_graph6(big).front() == '~');  // n >= 63 uses the long header
  CHECK(from_graph6(to_graph6(big)) == big);
}

TEST_CASE("canonical form is a relabeling invariant") {
  std::mt19937 rng(987654);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 9);
    const Graph g = random_graph(n, 0.5, rng);
    const Graph canon = canonical_form(g);
    CHECK(is_isomorphic(g, canon));
    const Graph shuffled = g.relabeled(random_permutation(n, rng));
    CHECK(canonical_form(shuffled) == canon);

    // canonical_labeling gives position -> original vertex; relabeled takes
    // original vertex -> position
    const std::vector<int> lab = canonical_labeling(g);
    std::vector<int> position(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) position[static_cast<std::size_t>(lab[static_cast<std::size_t>(i)])] = i;
    CHECK(g.relabeled(position) == canon);
  }
}

TEST_CASE("isomorphism spot checks") {
  CHECK(is_isomorphic(Graph::cycle(5), Graph::cycle(5).complement()));
  CHECK(!is_isomorphic(Graph::cycle(6), Graph::cycle(6).complement()));
  CHECK(!is_isomorphic(Graph::cycle(6), Graph::path(6)));
  CHECK(is_isomorphic(Graph::complete_multipartite({3, 3}),
                      Graph::complete(3).disjoint_union(Graph::complete(3)).complement()));
}

TEST_CASE("canonical dedupe counts match permutation oracle for n <= 5") {
  // numbers of isomorphism classes: 1, 2, 4, 11, 34
  const std::size_t expected[] = {1, 2, 4, 11, 34};
  for (int n = 1; n <= 5; ++n) {
    CHECK(oracle::labeled_dedupe_count(n) == expected[n - 1]);
    std::set<std::string> classes;
    const int m = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (1ULL << m); ++mask) {
      GraphBuilder b(n);
      int k = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++k)
          if (mask >> k & 1) b.add_edge(i, j);
      classes.insert(to_graph6(canonical_form(std::move(b).build())));
    }
    CHECK(classes.size() == expected[n - 1]);
  }
}

TEST_CASE("clique search") {
  CHECK(clique_number(Graph::complete(7)) == 7);
  CHECK(clique_number(Graph::cycle(5)) == 2);
  CHECK(clique_number(Graph::complete_multipartite({3, 3, 3})) == 3);
  CHECK(clique_number(Graph::edgeless(4)) == 1);
  VertexSet witness;
  CHECK(find_clique(Graph::petersen().complement(), 4, &witness));
  CHECK(witness.size() == 4);
  CHECK(Graph::petersen().complement().is_clique(witness));
  CHECK(!find_clique(Graph::petersen().complement(), 5, &witness));
}
