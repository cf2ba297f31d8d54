#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dcg/graph.hpp"
#include "dcg/minor.hpp"

namespace dcg {

inline constexpr const char* kToolVersion = "dcg 0.1.0";

/// One verified (or violated) claim inside a suite, with a machine-checkable
/// witness where the verdict rests on one.
struct SuiteItem {
  std::string id;
  std::string claim;
  std::string ref;
  bool ok = false;
  std::string verdict;
  nlohmann::json witness;
};

struct SuiteReport {
  std::string suite;
  std::vector<SuiteItem> items;
  long long elapsed_ms = 0;

  bool all_ok() const;
  nlohmann::json to_json() const;
};

/// complement(Petersen)+yz >= K_7 for all 15 edges yz of the Petersen graph,
/// while the complement alone has neither a K_7 nor a K_6 u K_1 minor.
SuiteReport suite_petersen_complement();

/// K_{2,2,2,2}, K_{3,3,3} and the Petersen complement: order <= 11, delta >= 6,
/// and G-x has no K_6 minor for every vertex x. K_8 is run as a sensitivity
/// control and must be rejected.
SuiteReport suite_lemma10_forward();

/// Every graph with n <= min(2t-1, cap) vertices and delta >= t has a
/// K_t u K_1 minor; exhaustive over isomorphism classes. 1 <= t <= 5.
SuiteReport suite_lemma11(int t, int exhaustive_cap);

/// Extremal sweep: every graph on n <= n_max vertices meeting the
/// (p-2)n - C(p-1,2) + 1 edge bound has a K_p minor, for 3 <= p <= 7.
/// planted_violation lowers the threshold by one; the suite must then
/// report violations (sensitivity self-test).
SuiteReport suite_extremal_sweep(int n_max, bool planted_violation = false);

/// Exhaustive double-critical search over connected graphs with n <= n_max;
/// every survivor must be complete.
SuiteReport suite_double_critical_search(int n_max);

/// Witness for the four-vertex disjunct: nonadjacent pairs a1a2, b1b2 with
/// edges a_ib_i, at most four common neighbors per pair, and a K_8 minor
/// after adding both missing edges.
struct LemmaAWitness {
  int a1 = -1, b1 = -1, a2 = -1, b2 = -1;
  int common1 = 0, common2 = 0;
  MinorCertificate k8_certificate;
};

struct PropertyAResult {
  enum class Kind { IsK12222, Witness, Fails };
  Kind kind = Kind::Fails;
  std::optional<LemmaAWitness> witness;
};
PropertyAResult check_lemma12_property_a(const Graph& g);

enum class PropertyBTag { B1, B2, B3, None };

struct PropertyBResult {
  PropertyBTag tag = PropertyBTag::None;
  nlohmann::json witness;
};
/// Evaluates the B1/B2/B3 disjuncts in order for vertex sets A, B of size
/// >= 5, neither complete, jointly covering all vertices of degree <= n-2.
/// Precondition breaches raise std::invalid_argument. Degrees are computed
/// in g as given.
PropertyBResult check_lemma12_property_b(const Graph& g, VertexSet a, VertexSet b);
std::string property_b_tag_name(PropertyBTag tag);

}  // namespace dcg
