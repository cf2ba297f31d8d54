// dcg: verification suites and one-off graph queries for the double-critical
// clique-minor toolkit. Exit codes: 0 verified, 1 claim violated, 2 usage,
// 3 IO failure.
//
// Note: `check property-a` / `check property-b` evaluate one supplied graph
// (and one (A,B) pair). They are per-instance predicates, not exhaustive
// verifiers over all set pairs — that quantification is far beyond desk scale.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dcg/coloring.hpp"
#include "dcg/enumerate.hpp"
#include "dcg/graph.hpp"
#include "dcg/minor.hpp"
#include "dcg/structure.hpp"
#include "dcg/suites.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolated = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

int emit(const nlohmann::json& doc, const std::string& report_path) {
  const std::string text = doc.dump(2);
  if (report_path.empty()) {
    std::cout << text << "\n";
    return kExitOk;
  }
  std::ofstream out(report_path);
  out << text << "\n";
  if (!out) {
    std::cerr << "dcg: cannot write report to " << report_path << "\n";
    return kExitIo;
  }
  return kExitOk;
}

int finish(const dcg::SuiteReport& report, const std::string& report_path) {
  const int io = emit(report.to_json(), report_path);
  if (io != kExitOk) return io;
  for (const dcg::SuiteItem& item : report.items)
    std::cerr << (item.ok ? "  ok  " : " FAIL ") << report.suite << "/" << item.id << "\n";
  return report.all_ok() ? kExitOk : kExitViolated;
}

dcg::VertexSet to_set(const std::vector<int>& vs, int n) {
  dcg::VertexSet s;
  for (int v : vs) {
    if (v < 0 || v >= n) throw CLI::ValidationError("vertex " + std::to_string(v) + " out of range");
    s.add(v);
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of double-critical clique-minor claims"};
  app.require_subcommand(1);
  std::string report_path;
  app.add_option("--report", report_path, "write the JSON report here instead of stdout");

  // verify ...
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->require_subcommand(1);
  auto* v_petersen = verify->add_subcommand("petersen-complement",
                                            "Petersen-complement K_7 / K_6 u K_1 checks");
  auto* v_lemma10 = verify->add_subcommand("lemma10", "order/degree/K_6-contraction checks");
  auto* v_lemma11 = verify->add_subcommand("lemma11", "exhaustive delta >= t forces K_t u K_1");
  int lemma11_t = 4;
  bool lemma11_long = false;
  v_lemma11->add_option("--t", lemma11_t, "clique order t, 1..5")->required();
  v_lemma11->add_flag("--long", lemma11_long, "allow the n = 9 sweep for t = 5");
  auto* v_extremal = verify->add_subcommand("extremal", "edge-threshold K_p minor sweep");
  int extremal_n_max = 8;
  bool extremal_self_test = false;
  v_extremal->add_option("--n-max", extremal_n_max, "largest order to sweep (default 8)");
  v_extremal->add_flag("--self-test", extremal_self_test,
                       "lower thresholds by one and demand violations");

  // search double-critical
  auto* search = app.add_subcommand("search", "desk-scale conjecture searches");
  search->require_subcommand(1);
  auto* s_dc = search->add_subcommand("double-critical", "exhaustive double-critical survivors");
  int dc_n_max = 8;
  bool dc_long = false;
  s_dc->add_option("--n-max", dc_n_max, "largest order (default 8, 9 needs --long)");
  s_dc->add_flag("--long", dc_long, "permit n = 9");

  // check property-a / property-b
  auto* check = app.add_subcommand("check", "per-instance structural predicates");
  check->require_subcommand(1);
  auto* c_a = check->add_subcommand("property-a", "K_{1,2,2,2,2} or a1b1/a2b2 witness");
  std::string a_graph6;
  c_a->add_option("graph6", a_graph6, "graph in graph6")->required();
  auto* c_b = check->add_subcommand("property-b", "B1/B2/B3 disjunct for one (A,B) pair");
  std::string b_graph6;
  std::vector<int> set_a, set_b;
  c_b->add_option("graph6", b_graph6, "graph in graph6")->required();
  c_b->add_option("--A", set_a, "vertices of A (comma separated)")->required()->delimiter(',');
  c_b->add_option("--B", set_b, "vertices of B (comma separated)")->required()->delimiter(',');

  // cockade build
  auto* cockade = app.add_subcommand("cockade", "cockade construction");
  cockade->require_subcommand(1);
  auto* ck_build = cockade->add_subcommand("build", "build a cockade from a JSON spec");
  std::string spec_path;
  ck_build->add_option("spec", spec_path, "path to the CockadeSpec JSON")->required();

  // minor / chromatic one-offs
  auto* minor_cmd = app.add_subcommand("minor", "K_t minor test with certificate");
  std::string minor_graph6;
  int minor_t = 0;
  minor_cmd->add_option("graph6", minor_graph6, "host graph in graph6")->required();
  minor_cmd->add_option("--kt", minor_t, "target clique order")->required();

  auto* chromatic_cmd = app.add_subcommand("chromatic", "exact chromatic number with witness");
  std::string chromatic_graph6;
  chromatic_cmd->add_option("graph6", chromatic_graph6, "graph in graph6")->required();

  for (CLI::App* sub : {verify, v_petersen, v_lemma10, v_lemma11, v_extremal, search, s_dc,
                        check, c_a, c_b, cockade, ck_build, minor_cmd, chromatic_cmd})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*v_petersen) return finish(dcg::suite_petersen_complement(), report_path);
    if (*v_lemma10) return finish(dcg::suite_lemma10_forward(), report_path);
    if (*v_lemma11) {
      if (lemma11_t < 1 || lemma11_t > 5) {
        std::cerr << "dcg: --t must be in 1..5\n";
        return kExitUsage;
      }
      const int cap = lemma11_long ? dcg::kEnumLongRunCap : 7;
      return finish(dcg::suite_lemma11(lemma11_t, cap), report_path);
    }
    if (*v_extremal) return finish(dcg::suite_extremal_sweep(extremal_n_max, extremal_self_test),
                                   report_path);
    if (*s_dc) {
      if (dc_n_max > (dc_long ? 9 : 8)) {
        std::cerr << "dcg: --n-max above " << (dc_long ? 9 : 8) << " (pass --long for 9)\n";
        return kExitUsage;
      }
      return finish(dcg::suite_double_critical_search(dc_n_max), report_path);
    }

    if (*c_a) {
      const dcg::Graph g = dcg::from_graph6(a_graph6);
      if (g.order() < 9 || g.order() > 13 || g.min_degree() < 7)
        std::cerr << "dcg: warning: property (A) is stated for 9 <= n <= 13 with delta >= 7\n";
      const dcg::PropertyAResult result = dcg::check_lemma12_property_a(g);
      nlohmann::json j{{"graph6", a_graph6}};
      switch (result.kind) {
        case dcg::PropertyAResult::Kind::IsK12222:
          j["result"] = "isomorphic to K_{1,2,2,2,2}";
          break;
        case dcg::PropertyAResult::Kind::Witness: {
          const dcg::LemmaAWitness& w = *result.witness;
          j["result"] = "witness";
          j["witness"] = {{"a1", w.a1}, {"b1", w.b1}, {"a2", w.a2}, {"b2", w.b2},
                          {"common_neighbors", {w.common1, w.common2}},
                          {"k8_certificate",
                           nlohmann::json::parse(dcg::certificate_to_json(w.k8_certificate))}};
          break;
        }
        case dcg::PropertyAResult::Kind::Fails:
          j["result"] = "property (A) fails";
          break;
      }
      const int io = emit(j, report_path);
      if (io != kExitOk) return io;
      return result.kind == dcg::PropertyAResult::Kind::Fails ? kExitViolated : kExitOk;
    }
    if (*c_b) {
      const dcg::Graph g = dcg::from_graph6(b_graph6);
      const dcg::PropertyBResult result = dcg::check_lemma12_property_b(
          g, to_set(set_a, g.order()), to_set(set_b, g.order()));
      const nlohmann::json j{{"graph6", b_graph6},
                             {"tag", dcg::property_b_tag_name(result.tag)},
                             {"witness", result.witness}};
      const int io = emit(j, report_path);
      if (io != kExitOk) return io;
      return result.tag == dcg::PropertyBTag::None ? kExitViolated : kExitOk;
    }

    if (*ck_build) {
      std::ifstream in(spec_path);
      if (!in) {
        std::cerr << "dcg: cannot read " << spec_path << "\n";
        return kExitIo;
      }
      std::stringstream buf;
      buf << in.rdbuf();
      const dcg::Graph g = dcg::build_cockade(dcg::cockade_spec_from_json(buf.str()));
      return emit({{"graph6", dcg::to_graph6(g)},
                   {"order", g.order()},
                   {"edges", g.edge_count()}},
                  report_path);
    }

    if (*minor_cmd) {
      const dcg::Graph g = dcg::from_graph6(minor_graph6);
      const auto cert = dcg::has_kt_minor(g, minor_t);
      nlohmann::json j{{"graph6", minor_graph6}, {"t", minor_t}, {"has_minor", cert.has_value()}};
      if (cert) {
        if (!dcg::verify_certificate(g, *cert).ok) {
          std::cerr << "dcg: internal error: certificate failed independent verification\n";
          return kExitViolated;
        }
        j["certificate"] = nlohmann::json::parse(dcg::certificate_to_json(*cert));
      }
      const int io = emit(j, report_path);
      if (io != kExitOk) return io;
      return cert ? kExitOk : kExitViolated;
    }
    if (*chromatic_cmd) {
      const dcg::Graph g = dcg::from_graph6(chromatic_graph6);
      const dcg::ChromaticResult result = dcg::chromatic_number(g);
      return emit({{"graph6", chromatic_graph6},
                   {"chi", result.chi},
                   {"witness", result.witness.assignment}},
                  report_path);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "dcg: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "dcg: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}
