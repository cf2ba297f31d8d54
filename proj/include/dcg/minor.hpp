#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dcg/graph.hpp"

namespace dcg {

/// Witness for H being a minor of a host graph: one branch set per target
/// vertex, pairwise disjoint, each connected in the host, with a host edge
/// behind every target edge.
struct MinorCertificate {
  Graph target;
  std::vector<VertexSet> branch_sets;
};

/// Independent checker for the certificate invariants; the search paths never
/// self-certify. On failure `violation` names the first broken invariant.
struct CertificateCheck {
  bool ok = false;
  std::string violation;
};
CertificateCheck verify_certificate(const Graph& host, const MinorCertificate& cert);

/// Complete-minor containment. Branch-and-bound assigning host vertices (in
/// decreasing-degree order) to branch sets or discard, pruning by per-set
/// connectivity feasibility and by cross-edge demand, with clique-separator
/// decomposition of the host ahead of the search. First-found certificate
/// under the fixed order, then shrunk to spanning support; deterministic.
std::optional<MinorCertificate> has_kt_minor(const Graph& g, int t);

/// G >= K_t u K_1, via the equivalent "some x with G-x >= K_t". Returns the
/// deleted vertex together with the K_t certificate inside G-x (branch sets
/// in G-x labeling, ascending-order relabeling).
std::optional<std::pair<int, MinorCertificate>> has_kt_plus_k1_minor(const Graph& g, int t);

/// General small targets, |h| <= 10.
constexpr int kGeneralTargetCap = 10;
std::optional<MinorCertificate> has_minor(const Graph& g, const Graph& h);

/// Largest t with G >= K_t.
int hadwiger_number(const Graph& g);

std::string certificate_to_json(const MinorCertificate& cert);
MinorCertificate certificate_from_json(const std::string& text);

}  // namespace dcg
