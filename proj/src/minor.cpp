#include "dcg/minor.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace dcg {

namespace {

// ---------------------------------------------------------------------------
// Branch-set search: every host vertex, taken in decreasing-degree order, is
// assigned to one of the t branch sets or discarded. Sets of a complete
// target are interchangeable, so a fresh set may only be opened with the
// lowest unused label.

struct BranchSearch {
  const Graph& g;
  int n;
  int t;
  std::vector<std::uint64_t> target_adj;  // required neighbor sets, bits over 0..t-1
  bool complete_target;
  std::vector<int> order;

  std::vector<VertexSet> sets;
  std::vector<std::uint64_t> need;  // unrealized target edges, symmetric
  std::vector<VertexSet> solution;
  bool found = false;

  BranchSearch(const Graph& host, const Graph& target)
      : g(host), n(host.order()), t(target.order()) {
    target_adj.resize(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) target_adj[static_cast<std::size_t>(i)] = target.neighborhood(i).bits();
    complete_target = target.edge_count() == t * (t - 1) / 2;
    for (int v = 0; v < n; ++v) order.push_back(v);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    sets.assign(static_cast<std::size_t>(t), VertexSet());
    need = target_adj;
  }

  bool complete() const {
    for (int i = 0; i < t; ++i) {
      if (sets[static_cast<std::size_t>(i)].empty()) return false;
      if (need[static_cast<std::size_t>(i)] != 0) return false;
    }
    for (int i = 0; i < t; ++i)
      if (!g.is_connected_within(sets[static_cast<std::size_t>(i)])) return false;
    return true;
  }

  bool feasible(VertexSet future, int used) const {
    if (t - used > future.size()) return false;
    std::vector<std::uint64_t> reach(static_cast<std::size_t>(t), 0);
    for (int i = 0; i < t; ++i) {
      const VertexSet si = sets[static_cast<std::size_t>(i)];
      if (si.empty()) continue;
      // All of set i must be connectable through the unprocessed vertices.
      if (!si.is_subset_of(g.component_of(si.lowest(), si | future))) return false;
      for (int v : si) reach[static_cast<std::size_t>(i)] |= g.neighborhood(v).bits();
    }
    std::uint64_t future_reach = 0;
    for (int v : future) future_reach |= g.neighborhood(v).bits();
    // Every unrealized target edge still needs a host edge between the two
    // (grown-out) sides; vertices of either side may yet come from `future`.
    for (int i = 0; i < t; ++i)
      for (int j : VertexSet(need[static_cast<std::size_t>(i)] & ~((1ULL << (i + 1)) - 1))) {
        const std::uint64_t side_i = reach[static_cast<std::size_t>(i)] | future_reach;
        const std::uint64_t side_j =
            sets[static_cast<std::size_t>(j)].bits() | future.bits();
        if ((side_i & side_j) == 0) return false;
      }
    return true;
  }

  void dfs(int pos, int used) {
    if (found) return;
    if (complete()) {
      solution = sets;
      found = true;
      return;
    }
    if (pos == n) return;

    VertexSet future;
    for (int k = pos; k < n; ++k) future.add(order[static_cast<std::size_t>(k)]);
    if (!feasible(future, used)) return;

    const int v = order[static_cast<std::size_t>(pos)];
    const std::uint64_t vadj = g.neighborhood(v).bits();
    const int max_label = complete_target ? std::min(used, t - 1) : t - 1;
    for (int s = 0; s <= max_label; ++s) {
      const bool opening = sets[static_cast<std::size_t>(s)].empty();
      sets[static_cast<std::size_t>(s)].add(v);
      std::vector<std::pair<int, int>> cleared;
      for (int j : VertexSet(need[static_cast<std::size_t>(s)])) {
        if (!sets[static_cast<std::size_t>(j)].empty() &&
            (vadj & sets[static_cast<std::size_t>(j)].bits())) {
          need[static_cast<std::size_t>(s)] &= ~(1ULL << j);
          need[static_cast<std::size_t>(j)] &= ~(1ULL << s);
          cleared.emplace_back(s, j);
        }
      }
      dfs(pos + 1, used + (opening ? 1 : 0));
      for (auto [a, b] : cleared) {
        need[static_cast<std::size_t>(a)] |= 1ULL << b;
        need[static_cast<std::size_t>(b)] |= 1ULL << a;
      }
      sets[static_cast<std::size_t>(s)].remove(v);
      if (found) return;
    }
    dfs(pos + 1, used);  // discard v
  }
};

// Drop redundant vertices so certificates stay auditable: a vertex leaves its
// branch set when connectivity and all realized target edges survive.
void minimalize(const Graph& g, const Graph& target, std::vector<VertexSet>& sets) {
  const int t = target.order();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < t; ++i)
      for (int v : sets[static_cast<std::size_t>(i)]) {
        VertexSet candidate = sets[static_cast<std::size_t>(i)] - VertexSet::single(v);
        if (candidate.empty() || !g.is_connected_within(candidate)) continue;
        bool still_ok = true;
        for (int j : target.neighborhood(i))
          if (!g.neighborhood_of_set(candidate).intersects(sets[static_cast<std::size_t>(j)])) {
            still_ok = false;
            break;
          }
        if (still_ok) {
          sets[static_cast<std::size_t>(i)] = candidate;
          changed = true;
        }
      }
  }
}

std::optional<MinorCertificate> branch_set_search(const Graph& g, const Graph& target) {
  if (target.order() == 0) return MinorCertificate{target, {}};
  if (target.order() > g.order()) return std::nullopt;
  BranchSearch search(g, target);
  search.dfs(0, 0);
  if (!search.found) return std::nullopt;
  minimalize(g, target, search.solution);
  return MinorCertificate{target, search.solution};
}

// ---------------------------------------------------------------------------
// Clique-separator decomposition. A K_t minor of a clique sum lives entirely
// in one of the summands, so the search only ever runs inside atoms. MCS-M
// supplies a minimal triangulation whose monotone adjacencies are the
// candidate separators; every split below is verified (clique + actually
// separating) before use, so the decomposition is sound on its own.

struct McsmResult {
  std::vector<std::uint64_t> fill_adj;  // triangulation H
  std::vector<int> elimination;         // elimination[i] = i-th vertex eliminated
};

McsmResult mcs_m(const Graph& g) {
  const int n = g.order();
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  std::vector<bool> numbered(static_cast<std::size_t>(n), false);
  std::vector<int> number(static_cast<std::size_t>(n), 0);
  McsmResult res;
  res.fill_adj.resize(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) res.fill_adj[static_cast<std::size_t>(v)] = g.neighborhood(v).bits();

  for (int i = n; i >= 1; --i) {
    int v = -1;
    for (int u = 0; u < n; ++u)
      if (!numbered[static_cast<std::size_t>(u)] &&
          (v < 0 || weight[static_cast<std::size_t>(u)] > weight[static_cast<std::size_t>(v)]))
        v = u;
    std::uint64_t reached_set = 0;
    for (int u = 0; u < n; ++u) {
      if (u == v || numbered[static_cast<std::size_t>(u)]) continue;
      // Path from v to u in G through unnumbered vertices of weight < w(u).
      std::uint64_t allowed = 0;
      for (int x = 0; x < n; ++x)
        if (x != u && x != v && !numbered[static_cast<std::size_t>(x)] &&
            weight[static_cast<std::size_t>(x)] < weight[static_cast<std::size_t>(u)])
          allowed |= 1ULL << x;
      std::uint64_t reach = g.neighborhood(v).bits() & (allowed | (1ULL << u));
      std::uint64_t frontier = reach & allowed;
      while (frontier) {
        std::uint64_t next = 0;
        for (int x : VertexSet(frontier)) next |= g.neighborhood(x).bits();
        next &= (allowed | (1ULL << u)) & ~reach;
        reach |= next;
        frontier = next & allowed;
      }
      if (reach & (1ULL << u)) reached_set |= 1ULL << u;
    }
    for (int u : VertexSet(reached_set)) {
      weight[static_cast<std::size_t>(u)] += 1;
      res.fill_adj[static_cast<std::size_t>(u)] |= 1ULL << v;
      res.fill_adj[static_cast<std::size_t>(v)] |= 1ULL << u;
    }
    numbered[static_cast<std::size_t>(v)] = true;
    number[static_cast<std::size_t>(v)] = i;
  }
  res.elimination.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) res.elimination[static_cast<std::size_t>(number[static_cast<std::size_t>(v)]) - 1] = v;
  return res;
}

/// Splits g into overlapping pieces along verified clique separators.
/// Returns a single piece (all vertices) when no clique separator is found.
std::vector<VertexSet> atom_split(const Graph& g) {
  const int n = g.order();
  if (n <= 2) return {g.vertices()};
  const McsmResult mm = mcs_m(g);
  std::vector<VertexSet> atoms;
  VertexSet remaining = g.vertices();
  std::uint64_t later = g.vertices().bits();
  for (int i = 0; i < n; ++i) {
    const int x = mm.elimination[static_cast<std::size_t>(i)];
    later &= ~(1ULL << x);
    if (!remaining.contains(x)) continue;
    const VertexSet sep(mm.fill_adj[static_cast<std::size_t>(x)] & later & remaining.bits());
    if (!g.is_clique(sep)) continue;
    const VertexSet component = g.component_of(x, remaining - sep) - sep;
    if ((remaining - sep - component).empty()) continue;  // not separating
    atoms.push_back(component | sep);
    remaining = remaining - component;
  }
  atoms.push_back(remaining);
  return atoms;
}

}  // namespace

CertificateCheck verify_certificate(const Graph& host, const MinorCertificate& cert) {
  const int t = cert.target.order();
  if (static_cast<int>(cert.branch_sets.size()) != t)
    return {false, "branch set count differs from target order"};
  VertexSet used;
  for (int i = 0; i < t; ++i) {
    const VertexSet bs = cert.branch_sets[static_cast<std::size_t>(i)];
    if (bs.empty()) return {false, "branch set " + std::to_string(i) + " is empty"};
    if (!bs.is_subset_of(host.vertices()))
      return {false, "branch set " + std::to_string(i) + " leaves the host vertex range"};
    if (bs.intersects(used)) return {false, "branch set " + std::to_string(i) + " overlaps another"};
    if (!host.is_connected_within(bs))
      return {false, "branch set " + std::to_string(i) + " is disconnected in the host"};
    used = used | bs;
  }
  for (int i = 0; i < t; ++i)
    for (int j : cert.target.neighborhood(i)) {
      if (j < i) continue;
      if (!host.neighborhood_of_set(cert.branch_sets[static_cast<std::size_t>(i)])
               .intersects(cert.branch_sets[static_cast<std::size_t>(j)]))
        return {false, "no host edge for target edge " + std::to_string(i) + "-" + std::to_string(j)};
    }
  return {true, ""};
}

std::optional<MinorCertificate> has_kt_minor(const Graph& g, int t) {
  if (t < 1) throw std::invalid_argument("has_kt_minor: t must be >= 1");
  if (t > g.order()) return std::nullopt;
  const Graph target = Graph::complete(t);
  VertexSet clique;
  if (find_clique(g, t, &clique)) {
    std::vector<VertexSet> sets;
    for (int v : clique) sets.push_back(VertexSet::single(v));
    return MinorCertificate{target, sets};
  }
  const std::vector<VertexSet> atoms = atom_split(g);
  if (atoms.size() == 1) return branch_set_search(g, target);
  for (const VertexSet& atom : atoms) {
    if (atom.size() < t) continue;
    const std::vector<int> verts = atom.to_vector();
    auto sub = has_kt_minor(g.induced(atom), t);
    if (!sub) continue;
    std::vector<VertexSet> mapped;
    for (const VertexSet& bs : sub->branch_sets) {
      VertexSet m;
      for (int v : bs) m.add(verts[static_cast<std::size_t>(v)]);
      mapped.push_back(m);
    }
    return MinorCertificate{target, mapped};
  }
  return std::nullopt;
}

std::optional<std::pair<int, MinorCertificate>> has_kt_plus_k1_minor(const Graph& g, int t) {
  if (t < 1) throw std::invalid_argument("has_kt_plus_k1_minor: t must be >= 1");
  for (int x = 0; x < g.order(); ++x) {
    auto cert = has_kt_minor(g.without_vertex(x), t);
    if (cert) return std::make_pair(x, *cert);
  }
  return std::nullopt;
}

std::optional<MinorCertificate> has_minor(const Graph& g, const Graph& h) {
  if (h.order() > kGeneralTargetCap)
    throw std::invalid_argument("has_minor: target order " + std::to_string(h.order()) +
                                " exceeds the general-target cap of " +
                                std::to_string(kGeneralTargetCap));
  return branch_set_search(g, h);
}

int hadwiger_number(const Graph& g) {
  if (g.order() == 0) return 0;
  int t = clique_number(g);  // lower bound, and K_t monotone above it
  while (t < g.order() && has_kt_minor(g, t + 1)) ++t;
  return t;
}

std::string certificate_to_json(const MinorCertificate& cert) {
  nlohmann::json j;
  j["target"] = to_graph6(cert.target);
  j["branch_sets"] = nlohmann::json::array();
  for (const VertexSet& bs : cert.branch_sets) j["branch_sets"].push_back(bs.to_vector());
  return j.dump();
}

MinorCertificate certificate_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  MinorCertificate cert{from_graph6(j.at("target").get<std::string>()), {}};
  for (const auto& bs : j.at("branch_sets")) {
    VertexSet set;
    for (int v : bs.get<std::vector<int>>()) set.add(v);
    cert.branch_sets.push_back(set);
  }
  return cert;
}

}  // namespace dcg
