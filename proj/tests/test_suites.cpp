#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "dcg/coloring.hpp"
#include "dcg/minor.hpp"
#include "dcg/suites.hpp"

using namespace dcg;

namespace {

// elapsed_ms varies between runs; everything else must be bit-identical
nlohmann::json stable_json(const SuiteReport& report) {
  nlohmann::json j = report.to_json();
  j.erase("elapsed_ms");
  return j;
}

}  // namespace

TEST_CASE("petersen-complement suite verifies the refutation and the repair") {
  const SuiteReport report = suite_petersen_complement();
  CHECK(report.suite == "petersen-complement");
  CHECK(report.all_ok());
  // two global items plus a refutation and a repair item per Petersen edge
  CHECK(report.items.size() == 2 + 2 * 15);
  int repairs = 0;
  for (const SuiteItem& item : report.items) {
    CHECK(item.verdict == "verified");
    if (item.id.ends_with("-repair")) {
      ++repairs;
      REQUIRE(item.witness.contains("second_edge"));
      REQUIRE(item.witness.contains("certificate"));
      // the shipped certificate survives a serialization round trip
      const MinorCertificate cert =
          certificate_from_json(item.witness.at("certificate").dump());
      CHECK(cert.target == Graph::complete(7));
      CHECK(cert.branch_sets.size() == 7);
    }
  }
  CHECK(repairs == 15);
}

TEST_CASE("lemma10 suite passes including the sensitivity control") {
  const SuiteReport report = suite_lemma10_forward();
  CHECK(report.all_ok());
  CHECK(report.items.size() == 4);
  CHECK(report.items.back().id == "K_8 (sensitivity control)");
}

TEST_CASE("lemma11 suite is exhaustive and clean for small t") {
  for (int t = 1; t <= 4; ++t) {
    const SuiteReport report = suite_lemma11(t, 9);
    CHECK(report.all_ok());
    for (const SuiteItem& item : report.items) {
      CHECK(item.witness.at("checked").get<int>() > 0);
      CHECK(item.witness.at("violations").empty());
    }
  }
  CHECK_THROWS_AS(suite_lemma11(0, 9), std::invalid_argument);
  CHECK_THROWS_AS(suite_lemma11(6, 9), std::invalid_argument);
}

TEST_CASE("extremal sweep passes and the planted violation trips") {
  const SuiteReport clean = suite_extremal_sweep(7);
  CHECK(clean.all_ok());
  CHECK(clean.items.size() == 5);  // n = 3..7

  const SuiteReport planted = suite_extremal_sweep(6, true);
  REQUIRE(planted.items.size() == 1);
  CHECK(planted.items[0].id == "planted");
  CHECK(planted.all_ok());  // ok here means "violations were detected"
  CHECK(planted.items[0].witness.at("violations_found").get<long>() > 0);
}

TEST_CASE("double-critical search finds only complete graphs") {
  const SuiteReport report = suite_double_critical_search(7);
  CHECK(report.all_ok());
  REQUIRE(report.items.size() == 7);
  for (const SuiteItem& item : report.items) {
    REQUIRE(item.witness.at("survivors").size() == 1);
    CHECK(item.witness.at("survivors")[0].at("complete") == true);
  }
  CHECK_THROWS_AS(suite_double_critical_search(10), std::invalid_argument);
}

TEST_CASE("suite reports are deterministic and carry the schema fields") {
  CHECK(stable_json(suite_lemma10_forward()) == stable_json(suite_lemma10_forward()));
  CHECK(stable_json(suite_lemma11(3, 9)) == stable_json(suite_lemma11(3, 9)));
  CHECK(stable_json(suite_double_critical_search(6)) ==
        stable_json(suite_double_critical_search(6)));

  const nlohmann::json j = suite_lemma10_forward().to_json();
  CHECK(j.at("suite") == "lemma10");
  CHECK(j.at("version") == kToolVersion);
  CHECK(j.contains("elapsed_ms"));
  for (const auto& item : j.at("items")) {
    CHECK(item.contains("id"));
    CHECK(item.contains("claim"));
    CHECK(item.contains("paper_ref"));
    CHECK(item.contains("verdict"));
  }
}

TEST_CASE("property A recognizes K_{1,2,2,2,2} and rejects complete graphs") {
  const PropertyAResult iso = check_lemma12_property_a(Graph::complete_multipartite({1, 2, 2, 2, 2}));
  CHECK(iso.kind == PropertyAResult::Kind::IsK12222);
  CHECK(!iso.witness.has_value());

  // K_9 has no nonadjacent pair, so the four-vertex disjunct cannot fire
  CHECK(check_lemma12_property_a(Graph::complete(9)).kind == PropertyAResult::Kind::Fails);
}

TEST_CASE("property A produces a verifiable four-vertex witness") {
  // K_8 minus the independent edges {0,1} and {2,3}: restoring both gives K_8
  GraphBuilder b(8);
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      if (!((i == 0 && j == 1) || (i == 2 && j == 3))) b.add_edge(i, j);
  const Graph g = std::move(b).build();
  const PropertyAResult result = check_lemma12_property_a(g);
  REQUIRE(result.kind == PropertyAResult::Kind::Witness);
  REQUIRE(result.witness.has_value());
  const LemmaAWitness& w = *result.witness;
  CHECK(g.adjacent(w.a1, w.b1));
  CHECK(g.adjacent(w.a2, w.b2));
  CHECK(!g.adjacent(w.a1, w.a2));
  CHECK(!g.adjacent(w.b1, w.b2));
  CHECK(w.common1 <= 4);
  CHECK(w.common2 <= 4);
  CHECK(w.common1 == (g.neighborhood(w.a1) & g.neighborhood(w.b1)).size());
  const Graph augmented = g.with_edge(w.a1, w.a2).with_edge(w.b1, w.b2);
  CHECK(verify_certificate(augmented, w.k8_certificate).ok);
  CHECK(w.k8_certificate.target == Graph::complete(8));
}

TEST_CASE("property B picks the disjuncts in order") {
  // B1: joining any vertex of K_{2,2,2,2,2} to the rest makes it dominate,
  // and a dominating vertex over a K_7-minor graph yields a K_8 minor
  const Graph h = Graph::complete_multipartite({2, 2, 2, 2, 2});
  const PropertyBResult b1 = check_lemma12_property_b(h, h.vertices(), h.vertices());
  CHECK(b1.tag == PropertyBTag::B1);
  CHECK(b1.witness.contains("k8_certificate"));

  // B2: the Petersen graph is far too sparse for B1, but the halves meet
  // across an edge with few common neighbors
  const Graph p = Graph::petersen();
  const PropertyBResult b2 =
      check_lemma12_property_b(p, VertexSet::range(5), p.vertices() - VertexSet::range(5));
  CHECK(b2.tag == PropertyBTag::B2);
  CHECK(b2.witness.at("common_neighbors").get<int>() <= 5);

  CHECK(property_b_tag_name(PropertyBTag::B1) == "B1");
  CHECK(property_b_tag_name(PropertyBTag::None) == "none");
}

TEST_CASE("property B preconditions are enforced") {
  const Graph g = Graph::complete(10);
  CHECK_THROWS_AS(check_lemma12_property_b(g, VertexSet::range(5), VertexSet::range(5)),
                  std::invalid_argument);  // cliques are excluded
  const Graph p = Graph::petersen();
  CHECK_THROWS_AS(check_lemma12_property_b(p, VertexSet::range(4), p.vertices()),
                  std::invalid_argument);  // |A| < 5
  CHECK_THROWS_AS(
      check_lemma12_property_b(p, VertexSet::range(5), VertexSet::range(5)),
      std::invalid_argument);  // vertices 5..9 have degree 3 <= n-2 but are uncovered
}
