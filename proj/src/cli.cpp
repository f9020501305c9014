#include "pathcx/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <thread>

#include "CLI11.hpp"
#include "pathcx/complex.hpp"
#include "pathcx/errors.hpp"
#include "pathcx/grape.hpp"
#include "pathcx/graph_io.hpp"
#include "pathcx/homology.hpp"
#include "pathcx/path_complex.hpp"
#include "pathcx/verify.hpp"

namespace pathcx::cli {

namespace {

const std::map<std::string, ComplexKind> kComplexNames{{"pm", ComplexKind::PathMissing},
                                                      {"pf", ComplexKind::PathFree}};

struct GraphArgs {
  std::string file;
  std::string complex = "pm";

  [[nodiscard]] ComplexKind kind() const { return kComplexNames.at(complex); }
};

void add_file(CLI::App* cmd, GraphArgs& a) {
  cmd->add_option("file", a.file, "Graph file")->required();
}

void add_complex(CLI::App* cmd, GraphArgs& a) {
  cmd->add_option("--complex", a.complex, "pm or pf")->check(CLI::IsMember({"pm", "pf"}))->capture_default_str();
}

std::string names(const Digraph& g, const std::vector<VertexId>& vs) {
  std::string out;
  for (VertexId v : vs) out += (out.empty() ? "" : " ") + g.vertex_name(v);
  return out.empty() ? "-" : out;
}

int analyze(const GraphArgs& a, std::ostream& out) {
  const Digraph g = load_graph(a.file);
  out << "vertices " << g.vertices().size() << '\n';
  out << "edges " << g.edge_count() << '\n';
  out << "s " << g.vertex_name(g.s()) << '\n';
  out << "t " << g.vertex_name(g.t()) << '\n';
  if (const auto cycle = find_cycle(g)) {
    out << "cycle yes " << format_edge_set(g, cycle->edge_set()) << '\n';
  } else {
    out << "cycle no\n";
  }
  out << "useless " << format_edge_set(g, useless_edges(g)) << '\n';
  out << "nonsinks " << names(g, nonsinks(g)) << '\n';
  const QuasiCyclePacking packing = max_disjoint_quasi_cycles(g);
  out << "quasi-cycles " << packing.count;
  for (const QuasiCycle& q : packing.witness) out << ' ' << format_edge_set(g, q.edges);
  out << '\n';
  if (g.s() == g.t()) {
    out << "min-cut none\n";
  } else {
    out << "min-cut " << min_st_cutset_size(g) << '\n';
  }
  const auto len = shortest_st_path_length(g);
  out << "shortest-path " << (len ? std::to_string(*len) : std::string("none")) << '\n';
  return kSuccess;
}

int fpoly(const GraphArgs& a, const std::string& method, std::ostream& out) {
  const Digraph g = load_graph(a.file);
  const IntPolynomial f =
      method == "dc" ? fpoly_dc(g, a.kind()) : f_polynomial(build_complex(g, a.kind()));
  out << f.to_string() << '\n';
  return kSuccess;
}

int facets(const GraphArgs& a, std::ostream& out) {
  const Digraph g = load_graph(a.file);
  std::vector<EdgeSet> fs = build_complex(g, a.kind()).facets();
  std::sort(fs.begin(), fs.end(), lexicographic_less);
  for (EdgeSet f : fs) out << format_edge_set(g, f) << '\n';
  return kSuccess;
}

int dual_check(const GraphArgs& a, std::ostream& out) {
  const Digraph g = load_graph(a.file);
  const bool ok = alexander_dual(build_pf(g)) == build_pm(g) && alexander_dual(build_pm(g)) == build_pf(g);
  out << (ok ? "dual ok" : "dual mismatch") << '\n';
  return ok ? kSuccess : kCheckFailed;
}

int divis(const GraphArgs& a, std::ostream& out) {
  const Digraph g = load_graph(a.file);
  const DivisibilityReport r = check_divisibility(g);
  out << "kappa " << r.kappa << '\n';
  out << "witness";
  for (const QuasiCycle& q : r.witness) out << ' ' << format_edge_set(g, q.edges);
  out << '\n';
  out << "f_pm " << r.f_pm.to_string() << '\n';
  out << "f_pf " << r.f_pf.to_string() << '\n';
  out << "pm divisible " << (r.pm_ok ? "yes" : "no") << '\n';
  out << "pf divisible " << (r.pf_ok ? "yes" : "no") << '\n';
  out << "pm remainder " << r.pm_remainder.to_string() << '\n';
  out << "pf remainder " << r.pf_remainder.to_string() << '\n';
  return r.pm_ok && r.pf_ok ? kSuccess : kCheckFailed;
}

int grape(const GraphArgs& a, const std::string& mode, std::ostream& out) {
  const Digraph g = load_graph(a.file);
  const SimplicialComplex c = build_complex(g, a.kind(), kDefaultGrapeGroundLimit);
  const auto cert = mode == "strong" ? is_strong_grape(c) : is_combinatorial_grape(c);
  if (!cert) {
    out << "not-a-grape\n";
    return kSuccess;
  }
  out << format_certificate(*cert, [&](int e) { return g.edge_name(e); });
  return kSuccess;
}

int homology(const GraphArgs& a, std::ostream& out) {
  const Digraph g = load_graph(a.file);
  const BettiVector b = gf2_reduced_betti(build_complex(g, a.kind()));
  if (b.all_zero()) out << "zero\n";
  for (const auto& [d, v] : b.nonzero()) out << "dim " << d << ": " << v << '\n';
  return kSuccess;
}

int rgen(const GraphArgs& a, int r, std::ostream& out) {
  const Digraph g = load_graph(a.file);
  const SimplicialComplex c = a.kind() == ComplexKind::PathMissing ? build_pm_r(g, r) : build_pf_r(g, r);
  out << "chi " << reduced_euler_characteristic(c) << '\n';
  out << "facets " << c.facets().size() << '\n';
  return kSuccess;
}

struct VerifyArgs {
  CorpusSpec corpus;
  std::string graph;
  std::string payload_dir;
  unsigned threads = 0;
  bool no_fixtures = false;
};

int verify(const VerifyArgs& a, std::ostream& out) {
  std::vector<Digraph> graphs;
  if (!a.graph.empty()) {
    graphs.push_back(load_graph(a.graph));
  } else {
    CorpusSpec spec = a.corpus;
    spec.include_fixtures = !a.no_fixtures;
    graphs = generate_corpus(spec);
  }
  const unsigned threads = a.threads > 0 ? a.threads : std::max(1U, std::thread::hardware_concurrency());
  const VerificationReport report = verify_corpus(graphs, {}, threads);
  out << report.to_text();

  if (!a.payload_dir.empty() && !report.payloads.empty()) {
    std::filesystem::create_directories(a.payload_dir);
    for (const auto& [index, text] : report.payloads) {
      const auto path = std::filesystem::path(a.payload_dir) / ("graph-" + std::to_string(index) + ".graph");
      std::ofstream file(path);
      if (!file) throw InputError("cannot write payload '" + path.string() + "'");
      file << text;
    }
  }
  return report.failures() == 0 ? kSuccess : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Path-free and path-missing complexes of directed graphs", "pathcx"};
  app.require_subcommand(1);

  GraphArgs g;
  std::string method = "dc";
  std::string mode = "strong";
  int r = 1;
  VerifyArgs va;

  auto* analyze_cmd = app.add_subcommand("analyze", "Structural summary of a graph");
  add_file(analyze_cmd, g);

  auto* fpoly_cmd = app.add_subcommand("fpoly", "f-polynomial of PM(G) or PF(G)");
  add_file(fpoly_cmd, g);
  add_complex(fpoly_cmd, g);
  fpoly_cmd->add_option("--method", method, "dc or brute")->check(CLI::IsMember({"dc", "brute"}))->capture_default_str();

  auto* chi_cmd = app.add_subcommand("chi", "Closed-form reduced Euler characteristic");
  add_file(chi_cmd, g);
  add_complex(chi_cmd, g);

  auto* homotopy_cmd = app.add_subcommand("homotopy", "Predicted homotopy type");
  add_file(homotopy_cmd, g);
  add_complex(homotopy_cmd, g);

  auto* facets_cmd = app.add_subcommand("facets", "Facets, one per line");
  add_file(facets_cmd, g);
  add_complex(facets_cmd, g);

  auto* dual_cmd = app.add_subcommand("dual-check", "Check that PF(G) and PM(G) are Alexander duals");
  add_file(dual_cmd, g);

  auto* divis_cmd = app.add_subcommand("divis", "Divisibility of the f-polynomials by (1+x)^kappa");
  add_file(divis_cmd, g);

  auto* grape_cmd = app.add_subcommand("grape", "Grape certificate");
  add_file(grape_cmd, g);
  add_complex(grape_cmd, g);
  grape_cmd->add_option("--mode", mode, "strong or combinatorial")
      ->check(CLI::IsMember({"strong", "combinatorial"}))
      ->capture_default_str();

  auto* homology_cmd = app.add_subcommand("homology", "GF(2) reduced Betti numbers");
  add_file(homology_cmd, g);
  add_complex(homology_cmd, g);

  auto* rgen_cmd = app.add_subcommand("rgen", "Complexes for r edge-disjoint paths");
  add_file(rgen_cmd, g);
  add_complex(rgen_cmd, g);
  rgen_cmd->add_option("-r", r, "Number of edge-disjoint paths")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run every check over a generated corpus");
  verify_cmd->add_option("--count", va.corpus.graph_count, "Random graphs")->capture_default_str();
  verify_cmd->add_option("--seed", va.corpus.seed, "Seed")->capture_default_str();
  verify_cmd->add_option("--max-edges", va.corpus.max_edges, "Edges per random graph")->capture_default_str();
  verify_cmd->add_option("--max-vertices", va.corpus.max_vertices, "Vertices per random graph")->capture_default_str();
  verify_cmd->add_option("--threads", va.threads, "Worker threads (0: all cores)");
  verify_cmd->add_flag("--no-fixtures", va.no_fixtures, "Skip the hand-built fixtures");
  verify_cmd->add_option("--graph", va.graph, "Verify a single graph file instead of a corpus");
  verify_cmd->add_option("--payload-dir", va.payload_dir, "Write failing graphs here");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*analyze_cmd) return analyze(g, out);
    if (*fpoly_cmd) return fpoly(g, method, out);
    if (*chi_cmd) {
      out << chi_closed(load_graph(g.file), g.kind()).to_string() << '\n';
      return kSuccess;
    }
    if (*homotopy_cmd) {
      out << homotopy_class(load_graph(g.file), g.kind()).to_string() << '\n';
      return kSuccess;
    }
    if (*facets_cmd) return facets(g, out);
    if (*dual_cmd) return dual_check(g, out);
    if (*divis_cmd) return divis(g, out);
    if (*grape_cmd) return grape(g, mode, out);
    if (*homology_cmd) return homology(g, out);
    if (*rgen_cmd) return rgen(g, r, out);
    if (*verify_cmd) return verify(va, out);
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kResourceGuard;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kUsageError;
}

}  // namespace pathcx::cli
