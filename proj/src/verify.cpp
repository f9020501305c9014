#include "pathcx/verify.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <random>
#include <set>
#include <sstream>

#include "pathcx/complex.hpp"
#include "pathcx/errors.hpp"
#include "pathcx/grape.hpp"
#include "pathcx/graph_io.hpp"
#include "pathcx/homology.hpp"
#include "pathcx/path_complex.hpp"

namespace pathcx {

// ---------------------------------------------------------------------------
// Corpus

Digraph example_graph() {
  return Digraph({"s", "p", "q", "r", "t"},
                 {{"a", "s", "p"},
                  {"b", "p", "r"},
                  {"c", "r", "t"},
                  {"d", "s", "q"},
                  {"e", "q", "t"},
                  {"f", "q", "p"},
                  {"g", "r", "q"}},
                 "s", "t");
}

Digraph parallel_graph(int k) {
  if (k < 0) throw InputError("parallel edge count must be nonnegative");
  std::vector<EdgeSpec> edges;
  for (int i = 1; i <= k; ++i) edges.push_back({"e" + std::to_string(i), "s", "t"});
  return Digraph({"s", "t"}, edges, "s", "t");
}

Digraph path_graph(int length) {
  if (length < 1) throw InputError("path length must be positive");
  std::vector<std::string> vertices{"s"};
  for (int i = 1; i < length; ++i) vertices.push_back("v" + std::to_string(i));
  vertices.push_back("t");
  std::vector<EdgeSpec> edges;
  for (int i = 0; i < length; ++i) {
    edges.push_back({"e" + std::to_string(i + 1), vertices[static_cast<std::size_t>(i)],
                     vertices[static_cast<std::size_t>(i) + 1]});
  }
  return Digraph(vertices, edges, "s", "t");
}

std::vector<Digraph> fixture_battery() {
  std::vector<Digraph> out;
  out.push_back(example_graph());
  for (int k = 1; k <= 6; ++k) out.push_back(parallel_graph(k));
  for (int len = 1; len <= 4; ++len) out.push_back(path_graph(len));
  out.push_back(Digraph({"s", "t"}, {}, "s", "t"));
  out.push_back(Digraph({"s"}, {{"l", "s", "s"}}, "s", "s"));
  // One 2-cycle between a and b, every edge on some s-t-path.
  out.push_back(Digraph({"s", "a", "b", "t"},
                        {{"sa", "s", "a"},
                         {"sb", "s", "b"},
                         {"ab", "a", "b"},
                         {"ba", "b", "a"},
                         {"at", "a", "t"},
                         {"bt", "b", "t"}},
                        "s", "t"));
  // Two such gadgets in series: two disjoint 2-cycles, no useless edges.
  out.push_back(Digraph({"s", "a", "b", "m", "c", "d", "t"},
                        {{"sa", "s", "a"},
                         {"sb", "s", "b"},
                         {"ab", "a", "b"},
                         {"ba", "b", "a"},
                         {"am", "a", "m"},
                         {"bm", "b", "m"},
                         {"mc", "m", "c"},
                         {"md", "m", "d"},
                         {"cd", "c", "d"},
                         {"dc", "d", "c"},
                         {"ct", "c", "t"},
                         {"dt", "d", "t"}},
                        "s", "t"));
  return out;
}

namespace {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  // Uniform-ish integer in [0, n); n > 0.
  int below(int n) { return static_cast<int>(rng_() % static_cast<std::uint64_t>(n)); }
  bool chance(double p) { return static_cast<double>(rng_() >> 11) * 0x1.0p-53 < p; }

 private:
  std::mt19937_64 rng_;
};

Digraph random_graph(Sampler& rng, const CorpusSpec& spec) {
  const int n = spec.max_vertices <= 2 ? 2 : 2 + rng.below(spec.max_vertices - 1);
  const bool st_equal = rng.chance(spec.profile.st_equal_probability);
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (i == 0) {
      names.emplace_back("s");
    } else if (i == n - 1 && !st_equal) {
      names.emplace_back("t");
    } else {
      names.push_back("v" + std::to_string(i));
    }
  }

  const int m = rng.below(spec.max_edges + 1);
  std::vector<EdgeSpec> edges;
  std::set<std::pair<int, int>> used;
  for (int i = 0; i < m; ++i) {
    for (int attempt = 0; attempt < 32; ++attempt) {
      int u = rng.below(n);
      int v = rng.below(n);
      if (u == v && !spec.allow_self_loops) continue;
      if (u > v && rng.chance(spec.profile.forward_bias)) std::swap(u, v);
      if (!spec.allow_parallel && !used.insert({u, v}).second) continue;
      edges.push_back({"e" + std::to_string(i), names[static_cast<std::size_t>(u)],
                       names[static_cast<std::size_t>(v)]});
      break;
    }
  }
  const std::string& t = st_equal ? names.front() : names.back();
  return Digraph(names, edges, "s", t);
}

}  // namespace

std::vector<Digraph> generate_corpus(const CorpusSpec& spec) {
  if (spec.max_edges < 0 || spec.max_edges > kDefaultEnumerationLimit) {
    throw InputError("max_edges must lie in [0, " + std::to_string(kDefaultEnumerationLimit) + "]");
  }
  if (spec.max_vertices < 1) throw InputError("max_vertices must be positive");
  std::vector<Digraph> out;
  if (spec.include_fixtures) out = fixture_battery();
  Sampler rng(spec.seed);
  for (std::size_t i = 0; i < spec.graph_count; ++i) out.push_back(random_graph(rng, spec));
  return out;
}

// ---------------------------------------------------------------------------
// Report

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Skip:
      return "skip";
    case CheckStatus::Info:
      return "info";
  }
  return {};
}

namespace {

void count(CheckTally& t, CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      ++t.pass;
      break;
    case CheckStatus::Fail:
      ++t.fail;
      break;
    case CheckStatus::Skip:
      ++t.skip;
      break;
    case CheckStatus::Info:
      ++t.info;
      break;
  }
}

}  // namespace

std::size_t VerificationReport::failures() const { return tally().fail; }

CheckTally VerificationReport::tally() const {
  CheckTally t;
  for (const CheckResult& r : results) count(t, r.status);
  return t;
}

std::map<std::string, CheckTally> VerificationReport::tally_by_check() const {
  std::map<std::string, CheckTally> out;
  for (const CheckResult& r : results) count(out[r.check_id], r.status);
  return out;
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  for (const CheckResult& r : results) {
    out << r.graph_index << ' ' << r.check_id << ' ' << to_string(r.status);
    if (!r.detail.empty()) out << ' ' << r.detail;
    out << '\n';
  }
  const auto by_check = tally_by_check();
  for (const std::string& id : check_manifest()) {
    auto it = by_check.find(id);
    if (it == by_check.end()) continue;
    const CheckTally& t = it->second;
    out << "# check " << id << " pass=" << t.pass << " fail=" << t.fail << " skip=" << t.skip
        << " info=" << t.info << '\n';
  }
  std::set<std::size_t> graphs;
  for (const CheckResult& r : results) graphs.insert(r.graph_index);
  const CheckTally t = tally();
  out << "# summary graphs=" << graphs.size() << " pass=" << t.pass << " fail=" << t.fail
      << " skip=" << t.skip << " info=" << t.info << '\n';
  return out.str();
}

void VerificationReport::append(VerificationReport other) {
  results.insert(results.end(), std::make_move_iterator(other.results.begin()),
                 std::make_move_iterator(other.results.end()));
  payloads.merge(other.payloads);
}

// ---------------------------------------------------------------------------
// Checks

const std::vector<std::string>& check_manifest() {
  static const std::vector<std::string> ids{
      "complex.pm-membership",
      "complex.pf-membership",
      "complex.alexander-duality",
      "complex.useless-edge-cone",
      "complex.pf-minimal-nonfaces",
      "complex.pm-minimal-nonfaces",
      "complex.facet-nonface-duality",
      "complex.pf-codim-min-cut",
      "complex.pm-codim-shortest-path",
      "flow.max-flow-min-cut",
      "complex.star-link-deletion",
      "graph.contraction-path-correspondence",
      "complex.pm-link-is-deletion-graph",
      "complex.pm-deletion-is-contraction-graph",
      "complex.pf-deletion-is-deletion-graph",
      "complex.pf-link-is-contraction-graph",
      "graph.target-s-useless",
      "graph.shared-target-contraction-useless",
      "graph.sole-entry-deletion-useless",
      "graph.no-useless-basics",
      "graph.cycles-survive",
      "graph.clean-contraction",
      "graph.clean-deletion-cycle",
      "graph.useless-shortcut",
      "quasi.useless-deletion",
      "quasi.source-edge",
      "fpoly.recurrence",
      "fpoly.cone",
      "fpoly.dual",
      "fpoly.at-minus-one",
      "chi.recurrence",
      "chi.dual",
      "chi.proper-subsets",
      "chi.full-simplex",
      "chi.cone",
      "chi.suspension",
      "chi.pm-closed-form",
      "chi.pf-closed-form",
      "chi.pm-parity",
      "chi.pf-parity",
      "fpoly.divisibility",
      "dc.pm-matches-brute",
      "dc.pf-matches-brute",
      "dc.cone-shortcut",
      "homology.euler-poincare",
      "homology.pm-classification",
      "homology.pf-classification",
      "grape.pf-strong",
      "grape.pm-strong",
      "grape.strong-implies-combinatorial",
      "grape.graph-guided",
      "rgen.r1-reduction",
      "rgen.nesting",
      "rgen.parallel-chi",
      "rgen.duality-observed",
      "harness.manifest",
  };
  return ids;
}

namespace {

struct Outcome {
  CheckStatus status;
  std::string detail;
};

Outcome pass(std::string detail = {}) { return {CheckStatus::Pass, std::move(detail)}; }
Outcome fail(std::string detail) { return {CheckStatus::Fail, std::move(detail)}; }
Outcome skip(std::string detail) { return {CheckStatus::Skip, std::move(detail)}; }
Outcome info(std::string detail) { return {CheckStatus::Info, std::move(detail)}; }

// Conditional checks: skip when no instance met the hypotheses.
class Instances {
 public:
  void hold() { ++count_; }
  void violate(std::string what) {
    ++count_;
    if (failure_.empty()) failure_ = std::move(what);
  }
  [[nodiscard]] Outcome outcome() const {
    if (!failure_.empty()) return fail(failure_);
    if (count_ == 0) return skip("hypotheses never hold");
    return pass("instances=" + std::to_string(count_));
  }

 private:
  std::size_t count_ = 0;
  std::string failure_;
};

std::string poly_pair(const IntPolynomial& got, const IntPolynomial& want) {
  return "got " + got.to_string() + " want " + want.to_string();
}

std::vector<EdgeId> edges_from_s(const Digraph& g) {
  std::vector<EdgeId> out;
  for (const Edge& e : g.edges()) {
    if (e.source == g.s()) out.push_back(e.id);
  }
  return out;
}

std::vector<EdgeSet> sorted_canonical(std::vector<EdgeSet> v) {
  std::sort(v.begin(), v.end(), CanonicalLess{});
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Everything the checks share, built once per graph.
struct Context {
  const Digraph& g;
  const VerifyOptions& options;
  bool enumerable = false;
  std::vector<EdgeSet> paths;
  EdgeSet useless;
  GraphCase graph_case;
  std::optional<SimplicialComplex> pm;
  std::optional<SimplicialComplex> pf;

  Context(const Digraph& graph, const VerifyOptions& opts) : g(graph), options(opts) {
    enumerable = static_cast<int>(g.edge_count()) <= options.max_enumeration_edges;
    useless = useless_edges(g);
    graph_case = classify(g);
    if (enumerable) {
      for (const PathWitness& p : enumerate_st_paths(g)) paths.push_back(p.edge_set());
      pm = build_pm(g, options.max_enumeration_edges);
      pf = build_pf(g, options.max_enumeration_edges);
    }
  }

  [[nodiscard]] std::string name(int e) const { return g.edge_name(e); }
  [[nodiscard]] std::string set(EdgeSet f) const { return format_edge_set(g, f); }
  [[nodiscard]] const SimplicialComplex& complex(ComplexKind k) const {
    return k == ComplexKind::PathMissing ? *pm : *pf;
  }
};

constexpr ComplexKind kKinds[] = {ComplexKind::PathMissing, ComplexKind::PathFree};

using CheckFn = std::function<Outcome(const Context&)>;

// Wraps a check that needs the enumerated complexes.
CheckFn enumerating(CheckFn fn) {
  return [fn = std::move(fn)](const Context& ctx) {
    if (!ctx.enumerable) {
      return skip("guard: more than " + std::to_string(ctx.options.max_enumeration_edges) + " edges");
    }
    return fn(ctx);
  };
}

Outcome check_membership(const Context& ctx, ComplexKind kind) {
  const bool pm = kind == ComplexKind::PathMissing;
  const Digraph& g = ctx.g;
  const SimplicialComplex brute = SimplicialComplex::from_predicate(
      g.edge_set(),
      [&](EdgeSet f) {
        const EdgeSet avail = pm ? g.edge_set() - f : f;
        const bool has = std::any_of(ctx.paths.begin(), ctx.paths.end(),
                                     [&](EdgeSet p) { return p.subset_of(avail); });
        return pm ? has : !has;
      },
      ctx.options.max_enumeration_edges);
  if (!(brute == ctx.complex(kind))) return fail("complex differs from path-enumeration oracle");
  for (EdgeSet f : brute.faces()) {
    if (!(pm ? pm_member(g, f) : pf_member(g, f))) return fail("member test rejects face " + ctx.set(f));
  }
  return pass("faces=" + std::to_string(brute.size()));
}

Outcome check_duality(const Context& ctx) {
  const SimplicialComplex dual_pf = alexander_dual(*ctx.pf, ctx.options.max_enumeration_edges);
  const SimplicialComplex dual_pm = alexander_dual(*ctx.pm, ctx.options.max_enumeration_edges);
  if (!(dual_pf == *ctx.pm)) return fail("dual of PF differs from PM");
  if (!(dual_pm == *ctx.pf)) return fail("dual of PM differs from PF");
  return pass();
}

Outcome check_useless_cone(const Context& ctx) {
  Instances inst;
  ctx.useless.for_each([&](int e) {
    for (ComplexKind k : kKinds) {
      if (is_cone_with_apex(ctx.complex(k), e)) {
        inst.hold();
      } else {
        inst.violate(to_string(k) + " is not a cone with apex " + ctx.name(e));
      }
    }
  });
  return inst.outcome();
}

Outcome check_pf_minimal_nonfaces(const Context& ctx) {
  if (minimal_nonfaces(*ctx.pf) != sorted_canonical(ctx.paths)) {
    return fail("minimal non-faces differ from path edge sets");
  }
  return pass();
}

Outcome check_pm_minimal_nonfaces(const Context& ctx) {
  // Minimal transversals of the path edge sets, by enumeration.
  std::vector<EdgeSet> transversals;
  ctx.g.edge_set().for_each_subset([&](EdgeSet t) {
    const bool meets_all = std::all_of(ctx.paths.begin(), ctx.paths.end(),
                                       [&](EdgeSet p) { return !p.disjoint(t); });
    if (meets_all) transversals.push_back(t);
  });
  std::vector<EdgeSet> minimal;
  for (EdgeSet t : transversals) {
    const bool is_min = std::none_of(transversals.begin(), transversals.end(),
                                     [&](EdgeSet u) { return u != t && u.subset_of(t); });
    if (is_min) minimal.push_back(t);
  }
  if (minimal_nonfaces(*ctx.pm) != sorted_canonical(minimal)) {
    return fail("minimal non-faces differ from minimal cut-sets");
  }
  return pass();
}

Outcome check_facet_nonface(const Context& ctx) {
  for (ComplexKind k : kKinds) {
    const SimplicialComplex& c = ctx.complex(k);
    std::vector<EdgeSet> complements;
    for (EdgeSet m : minimal_nonfaces(alexander_dual(c, ctx.options.max_enumeration_edges))) {
      complements.push_back(c.ground() - m);
    }
    if (c.facets() != sorted_canonical(complements)) {
      return fail(to_string(k) + " facets are not complements of the dual's minimal non-faces");
    }
  }
  return pass();
}

Outcome check_pf_codim(const Context& ctx) {
  if (ctx.g.s() == ctx.g.t()) return skip("s = t");
  const int codim = codimension(*ctx.pf);
  const int cut = min_st_cutset_size(ctx.g);
  if (codim != cut) return fail("codim " + std::to_string(codim) + " min cut " + std::to_string(cut));
  return pass("value=" + std::to_string(codim));
}

Outcome check_pm_codim(const Context& ctx) {
  if (ctx.g.s() == ctx.g.t()) return skip("s = t");
  if (ctx.pm->is_void()) return skip("PM is empty");
  const int codim = codimension(*ctx.pm);
  const std::optional<int> len = shortest_st_path_length(ctx.g);
  if (!len || codim != *len) return fail("codim " + std::to_string(codim) + " shortest path mismatch");
  return pass("value=" + std::to_string(codim));
}

Outcome check_flow(const Context& ctx) {
  if (ctx.g.s() == ctx.g.t()) {
    if (max_edge_disjoint_st_paths(ctx.g) != kUnboundedPaths) return fail("s = t must be unbounded");
    return pass("unbounded");
  }
  const int flow = max_edge_disjoint_st_paths(ctx.g);
  const int cut = min_st_cutset_size(ctx.g);
  if (flow != cut) return fail("flow " + std::to_string(flow) + " cut " + std::to_string(cut));
  if (ctx.enumerable) {
    // The smallest transversal of the path sets is the smallest non-face of PM.
    int smallest = static_cast<int>(ctx.g.edge_count()) + 1;
    for (EdgeSet m : minimal_nonfaces(*ctx.pm)) smallest = std::min(smallest, m.size());
    if (ctx.paths.empty()) smallest = 0;
    if (smallest != cut) return fail("smallest cut-set " + std::to_string(smallest));
  }
  return pass("value=" + std::to_string(flow));
}

Outcome check_star_link_deletion(const Context& ctx) {
  for (ComplexKind k : kKinds) {
    const SimplicialComplex& c = ctx.complex(k);
    for (int w : c.ground().members()) {
      const SimplicialComplex dl = deletion(c, w);
      const SimplicialComplex st = star(c, w);
      const SimplicialComplex lk = link(c, w);
      const std::string at = to_string(k) + " at " + ctx.name(w);
      if (!same_faces(face_union(dl, st), c)) return fail("dl u st != complex, " + at);
      if (!same_faces(face_intersection(dl, st), lk)) return fail("dl n st != lk, " + at);
      if (!is_cone_with_apex(st, w) && !st.is_void()) return fail("star is not a cone, " + at);
      std::size_t with_w = 0;
      for (EdgeSet f : c.faces()) {
        if (f.contains(w)) {
          ++with_w;
        } else if (!dl.contains(f)) {
          return fail("face without w missing from dl, " + at);
        }
      }
      if (with_w != lk.size() || dl.size() + with_w != c.size()) return fail("face counts disagree, " + at);
    }
  }
  return pass();
}

Outcome check_path_correspondence(const Context& ctx) {
  Instances inst;
  const Digraph& g = ctx.g;
  for (EdgeId e : edges_from_s(g)) {
    const Digraph ge = contract_edge(g, e);
    const EdgeSet others = g.edge_set().without(e);
    others.for_each_subset([&](EdgeSet rest) {
      const EdgeSet i = rest.with(e);
      if (has_st_path(g, i) == has_st_path(ge, rest)) {
        inst.hold();
      } else {
        inst.violate("contracting " + ctx.name(e) + " breaks the correspondence at " + ctx.set(i));
      }
    });
  }
  return inst.outcome();
}

// kind's link (or deletion) at e must equal the complex of the derived graph.
Outcome check_local_identity(const Context& ctx, ComplexKind kind, bool use_link, bool contract,
                             bool source_s_only) {
  Instances inst;
  const Digraph& g = ctx.g;
  const SimplicialComplex& c = ctx.complex(kind);
  for (const Edge& edge : g.edges()) {
    if (source_s_only && edge.source != g.s()) continue;
    const Digraph h = contract ? contract_edge(g, edge.id) : delete_edge(g, edge.id);
    const SimplicialComplex local = use_link ? link(c, edge.id) : deletion(c, edge.id);
    if (local == build_complex(h, kind, ctx.options.max_enumeration_edges)) {
      inst.hold();
    } else {
      inst.violate(std::string(use_link ? "link" : "deletion") + " at " + ctx.name(edge.id) +
                   " differs from the complex of the derived graph");
    }
  }
  return inst.outcome();
}

Outcome check_target_s_useless(const Context& ctx) {
  Instances inst;
  const EdgeSet useless = useless_edges_exhaustive(ctx.g);
  for (const Edge& e : ctx.g.edges()) {
    if (e.target != ctx.g.s()) continue;
    if (useless.contains(e.id)) {
      inst.hold();
    } else {
      inst.violate(ctx.name(e.id) + " enters s but is useful");
    }
  }
  return inst.outcome();
}

Outcome check_shared_target(const Context& ctx) {
  Instances inst;
  const Digraph& g = ctx.g;
  for (EdgeId e : edges_from_s(g)) {
    const VertexId target = g.edge(e).target;
    if (in_degree(g, target) < 2) continue;
    if (!useless_edges(contract_edge(g, e)).empty()) {
      inst.hold();
    } else {
      inst.violate("contracting " + ctx.name(e) + " leaves no useless edge");
    }
  }
  return inst.outcome();
}

Outcome check_sole_entry(const Context& ctx) {
  Instances inst;
  const Digraph& g = ctx.g;
  if (g.edge_count() <= 1) return inst.outcome();
  for (EdgeId e : edges_from_s(g)) {
    if (ctx.useless.contains(e) || in_degree(g, g.edge(e).target) != 1) continue;
    if (!useless_edges(delete_edge(g, e)).empty()) {
      inst.hold();
    } else {
      inst.violate("deleting " + ctx.name(e) + " leaves no useless edge");
    }
  }
  return inst.outcome();
}

Outcome check_no_useless_basics(const Context& ctx) {
  Instances inst;
  const Digraph& g = ctx.g;
  if (!ctx.useless.empty()) return inst.outcome();
  const std::size_t nonsink_count = nonsinks(g).size();
  for (EdgeId e : edges_from_s(g)) {
    const VertexId target = g.edge(e).target;
    if (in_degree(g, g.s()) != 0) {
      inst.violate("an edge enters s, so a cycle may pass through s");
      continue;
    }
    if (target == g.s()) {
      inst.violate(ctx.name(e) + " is a self-loop at s");
      continue;
    }
    if (target == g.t()) {
      inst.hold();
      continue;
    }
    const Digraph without = delete_edge(g, e);
    const bool leaves = std::any_of(without.edges().begin(), without.edges().end(),
                                    [&](const Edge& x) { return x.source == target; });
    if (!leaves) {
      inst.violate("no edge leaves the target of " + ctx.name(e) + " after deleting it");
    } else if (nonsinks(contract_edge(g, e)).size() + 1 != nonsink_count) {
      inst.violate("contracting " + ctx.name(e) + " does not remove exactly one nonsink");
    } else {
      inst.hold();
    }
  }
  return inst.outcome();
}

Outcome check_cycles_survive(const Context& ctx) {
  Instances inst;
  if (!ctx.useless.empty() || !ctx.graph_case.has_cycle) return inst.outcome();
  for (EdgeId e : edges_from_s(ctx.g)) {
    if (has_cycle(delete_edge(ctx.g, e)) && has_cycle(contract_edge(ctx.g, e))) {
      inst.hold();
    } else {
      inst.violate("a cycle disappears at " + ctx.name(e));
    }
  }
  return inst.outcome();
}

Outcome check_clean_contraction(const Context& ctx) {
  Instances inst;
  if (!ctx.useless.empty() || ctx.graph_case.has_cycle) return inst.outcome();
  for (EdgeId e : edges_from_s(ctx.g)) {
    if (useless_edges(delete_edge(ctx.g, e)).empty()) continue;
    const Digraph ge = contract_edge(ctx.g, e);
    if (!has_cycle(ge) && useless_edges(ge).empty()) {
      inst.hold();
    } else {
      inst.violate("contracting " + ctx.name(e) + " creates a cycle or useless edge");
    }
  }
  return inst.outcome();
}

Outcome check_clean_deletion(const Context& ctx) {
  Instances inst;
  if (!ctx.useless.empty()) return inst.outcome();
  const std::vector<VertexId> ns = nonsinks(ctx.g);
  for (EdgeId e : edges_from_s(ctx.g)) {
    if (ctx.g.edge(e).target == ctx.g.t()) continue;
    const Digraph without = delete_edge(ctx.g, e);
    if (!useless_edges(without).empty()) continue;
    if (!has_cycle(contract_edge(ctx.g, e))) {
      inst.violate("contracting " + ctx.name(e) + " gives no cycle");
    } else if (nonsinks(without) != ns) {
      inst.violate("deleting " + ctx.name(e) + " changes the nonsinks");
    } else {
      inst.hold();
    }
  }
  return inst.outcome();
}

Outcome check_useless_shortcut(const Context& ctx) {
  if (ctx.useless != useless_edges_exhaustive(ctx.g)) return fail("shortcut and enumeration disagree");
  return pass();
}

int packing(const Context& ctx, const Digraph& g) {
  return max_disjoint_quasi_cycles(g, ctx.options.packing_limit).count;
}

Outcome check_quasi_useless_deletion(const Context& ctx) {
  Instances inst;
  if (ctx.useless.empty()) return inst.outcome();
  const int kappa = packing(ctx, ctx.g);
  if (kappa < 1) return inst.outcome();
  ctx.useless.for_each([&](int e) {
    if (packing(ctx, delete_edge(ctx.g, e)) >= kappa - 1) {
      inst.hold();
    } else {
      inst.violate("deleting " + ctx.name(e) + " loses more than one quasi-cycle");
    }
  });
  return inst.outcome();
}

Outcome check_quasi_source_edge(const Context& ctx) {
  Instances inst;
  if (!ctx.useless.empty()) return inst.outcome();
  const int kappa = packing(ctx, ctx.g);
  for (EdgeId e : edges_from_s(ctx.g)) {
    if (packing(ctx, delete_edge(ctx.g, e)) >= kappa && packing(ctx, contract_edge(ctx.g, e)) >= kappa) {
      inst.hold();
    } else {
      inst.violate("a quasi-cycle is lost at " + ctx.name(e));
    }
  }
  return inst.outcome();
}

Outcome check_fpoly_recurrence(const Context& ctx) {
  for (ComplexKind k : kKinds) {
    const SimplicialComplex& c = ctx.complex(k);
    const IntPolynomial f = f_polynomial(c);
    for (int w : c.ground().members()) {
      const IntPolynomial rhs = f_polynomial(deletion(c, w)) + f_polynomial(link(c, w)).shifted(1);
      if (!(rhs == f)) return fail(to_string(k) + " at " + ctx.name(w) + ": " + poly_pair(rhs, f));
    }
  }
  return pass();
}

template <typename Fn>
Outcome over_cone_apexes(const Context& ctx, Fn&& fn) {
  Instances inst;
  for (ComplexKind k : kKinds) {
    const SimplicialComplex& c = ctx.complex(k);
    for (int w : c.ground().members()) {
      if (!is_cone_with_apex(c, w)) continue;
      if (std::string why = fn(c, w); why.empty()) {
        inst.hold();
      } else {
        inst.violate(to_string(k) + " at " + ctx.name(w) + ": " + why);
      }
    }
  }
  return inst.outcome();
}

Outcome check_fpoly_cone(const Context& ctx) {
  return over_cone_apexes(ctx, [](const SimplicialComplex& c, int w) -> std::string {
    const SimplicialComplex lk = link(c, w);
    if (!same_faces(deletion(c, w), lk)) return "deletion differs from link";
    if (!(f_polynomial(c) == IntPolynomial{1, 1} * f_polynomial(lk))) return "f is not (1+x) f(link)";
    return {};
  });
}

Outcome check_chi_cone(const Context& ctx) {
  return over_cone_apexes(ctx, [](const SimplicialComplex& c, int) -> std::string {
    return reduced_euler_characteristic(c) == 0 ? std::string{} : "nonzero reduced Euler characteristic";
  });
}

Outcome check_fpoly_dual(const Context& ctx) {
  const int n = static_cast<int>(ctx.g.edge_count());
  if (n == 0) return skip("empty ground set");
  for (ComplexKind k : kKinds) {
    const SimplicialComplex& c = ctx.complex(k);
    const IntPolynomial f = f_polynomial(c);
    const IntPolynomial fd = f_polynomial(alexander_dual(c, ctx.options.max_enumeration_edges));
    for (int i = 0; i <= n; ++i) {
      const long long want = binomial(n, i) - f[static_cast<std::size_t>(n - i)];
      if (fd[static_cast<std::size_t>(i)] != want) {
        return fail(to_string(k) + " coefficient " + std::to_string(i) + " of the dual");
      }
    }
  }
  return pass();
}

Outcome check_f_at_minus_one(const Context& ctx) {
  for (ComplexKind k : kKinds) {
    const SimplicialComplex& c = ctx.complex(k);
    if (f_polynomial(c).evaluate(-1) != -reduced_euler_characteristic(c)) return fail(to_string(k));
  }
  return pass();
}

Outcome check_chi_recurrence(const Context& ctx) {
  for (ComplexKind k : kKinds) {
    const SimplicialComplex& c = ctx.complex(k);
    const long long chi = reduced_euler_characteristic(c);
    for (int w : c.ground().members()) {
      if (chi != reduced_euler_characteristic(deletion(c, w)) - reduced_euler_characteristic(link(c, w))) {
        return fail(to_string(k) + " at " + ctx.name(w));
      }
    }
  }
  return pass();
}

Outcome check_chi_dual(const Context& ctx) {
  const int n = static_cast<int>(ctx.g.edge_count());
  if (n == 0) return skip("empty ground set");
  const long long sign = (n - 1) % 2 == 0 ? 1 : -1;
  for (ComplexKind k : kKinds) {
    const SimplicialComplex& c = ctx.complex(k);
    const long long dual = reduced_euler_characteristic(alexander_dual(c, ctx.options.max_enumeration_edges));
    if (dual != sign * reduced_euler_characteristic(c)) return fail(to_string(k));
  }
  return pass();
}

Outcome check_chi_proper_subsets(const Context& ctx) {
  const EdgeSet w = ctx.g.edge_set();
  if (w.empty()) return skip("empty ground set");
  const long long want = w.size() % 2 == 0 ? 1 : -1;
  const long long got = reduced_euler_characteristic(SimplicialComplex::proper_subsets(w));
  if (got != want) return fail("got " + std::to_string(got));
  return pass();
}

Outcome check_chi_full_simplex(const Context& ctx) {
  const EdgeSet w = ctx.g.edge_set();
  if (w.empty()) return skip("empty ground set");
  const long long got = reduced_euler_characteristic(SimplicialComplex::full_simplex(w));
  if (got != 0) return fail("got " + std::to_string(got));
  return pass();
}

Outcome check_suspension(const Context& ctx) {
  for (ComplexKind k : kKinds) {
    const SimplicialComplex& c = ctx.complex(k);
    const SimplicialComplex sc = suspension(c);
    if (reduced_euler_characteristic(sc) != -reduced_euler_characteristic(c)) {
      return fail(to_string(k) + " reduced Euler characteristic does not change sign");
    }
    const BettiVector b = gf2_reduced_betti(c);
    const BettiVector bs = gf2_reduced_betti(sc);
    BettiVector shifted;
    for (const auto& [d, v] : b.nonzero()) shifted.set(d + 1, v);
    if (!(shifted == bs)) return fail(to_string(k) + " Betti numbers do not shift by one");
  }
  return pass();
}

Outcome check_chi_closed(const Context& ctx, ComplexKind kind) {
  const ChiReport closed = chi_closed(ctx.g, kind);
  const long long brute = reduced_euler_characteristic(ctx.complex(kind));
  if (closed.value != brute) {
    return fail("closed " + std::to_string(closed.value) + " brute " + std::to_string(brute));
  }
  return pass(to_string(closed.case_tag) + " value=" + std::to_string(brute));
}

Outcome check_parity(const Context& ctx, ComplexKind kind) {
  const ChiReport closed = chi_closed(ctx.g, kind);
  const bool odd_faces = ctx.complex(kind).size() % 2 == 1;
  if (odd_faces != (closed.parity == Parity::Odd)) return fail("face count parity disagrees");
  return pass(to_string(closed.parity));
}

Outcome check_divisibility_thm(const Context& ctx) {
  const DivisibilityReport r = check_divisibility(ctx.g, ctx.options.packing_limit);
  if (!r.pm_ok || !r.pf_ok) return fail("kappa=" + std::to_string(r.kappa) + " does not divide");
  return pass("kappa=" + std::to_string(r.kappa));
}

Outcome check_dc(const Context& ctx, ComplexKind kind) {
  const IntPolynomial dc = fpoly_dc(ctx.g, kind);
  const IntPolynomial brute = f_polynomial(ctx.complex(kind));
  if (!(dc == brute)) return fail(poly_pair(dc, brute));
  return pass();
}

Outcome check_dc_shortcut(const Context& ctx) {
  for (ComplexKind k : kKinds) {
    if (!(fpoly_dc(ctx.g, k, {.cone_shortcut = true}) == fpoly_dc(ctx.g, k))) {
      return fail(to_string(k) + " shortcut changes the result");
    }
  }
  return pass();
}

Outcome check_euler_poincare(const Context& ctx) {
  for (ComplexKind k : kKinds) {
    const SimplicialComplex& c = ctx.complex(k);
    if (gf2_reduced_betti(c).alternating_sum() != reduced_euler_characteristic(c)) return fail(to_string(k));
  }
  return pass();
}

Outcome check_homotopy(const Context& ctx, ComplexKind kind) {
  const HomotopyClass predicted = homotopy_class(ctx.g, kind);
  const SimplicialComplex& c = ctx.complex(kind);
  const BettiVector b = gf2_reduced_betti(c);
  bool ok = false;
  switch (predicted.kind()) {
    case HomotopyClass::Kind::EmptyComplex:
      ok = c.is_void();
      break;
    case HomotopyClass::Kind::Contractible:
      ok = !c.is_void() && b.all_zero();
      break;
    case HomotopyClass::Kind::Sphere:
      ok = b.is_sphere_of_dim(predicted.dimension());
      break;
  }
  if (!ok) return fail("predicted " + predicted.to_string() + " but homology disagrees");
  return pass(predicted.to_string());
}

CheckFn grape_check(CheckFn fn) {
  return enumerating([fn = std::move(fn)](const Context& ctx) {
    if (static_cast<int>(ctx.g.edge_count()) > ctx.options.max_grape_edges) {
      return skip("guard: more than " + std::to_string(ctx.options.max_grape_edges) + " edges");
    }
    return fn(ctx);
  });
}

GrapeOptions grape_options(const Context& ctx) {
  GrapeOptions o;
  o.max_ground = ctx.options.max_grape_edges;
  return o;
}

Outcome check_strong_grape(const Context& ctx, ComplexKind kind) {
  const SimplicialComplex& c = ctx.complex(kind);
  const auto cert = is_strong_grape(c, grape_options(ctx));
  if (!cert) return fail("no strong-grape certificate found");
  std::string why;
  if (!replay_certificate(c, *cert, GrapeMode::Strong, &why)) return fail("replay: " + why);
  return pass("splits=" + std::to_string(certificate_splits(*cert)));
}

Outcome check_strong_implies_combinatorial(const Context& ctx) {
  for (ComplexKind k : kKinds) {
    const SimplicialComplex& c = ctx.complex(k);
    const auto strong = is_strong_grape(c, grape_options(ctx));
    if (!strong) return skip("not a strong grape");
    std::string why;
    if (!replay_certificate(c, *strong, GrapeMode::Combinatorial, &why)) {
      return fail(to_string(k) + " strong certificate rejected as combinatorial: " + why);
    }
    const auto comb = is_combinatorial_grape(c, grape_options(ctx));
    if (!comb) return fail(to_string(k) + " combinatorial search failed");
    if (!replay_certificate(c, *comb, GrapeMode::Combinatorial, &why)) return fail("replay: " + why);
  }
  return pass();
}

Outcome check_graph_guided(const Context& ctx) {
  for (ComplexKind k : kKinds) {
    const auto cert = graph_guided_strong_grape(ctx.g, k, grape_options(ctx));
    if (!cert) return fail(to_string(k) + " graph-guided construction failed");
    std::string why;
    if (!replay_certificate(ctx.complex(k), *cert, GrapeMode::Strong, &why)) {
      return fail(to_string(k) + " replay: " + why);
    }
  }
  return pass();
}

Outcome check_r1(const Context& ctx) {
  const int limit = ctx.options.max_enumeration_edges;
  if (!(build_pm_r(ctx.g, 1, limit) == *ctx.pm)) return fail("PM(G,1) differs from PM(G)");
  if (!(build_pf_r(ctx.g, 1, limit) == *ctx.pf)) return fail("PF(G,1) differs from PF(G)");
  return pass();
}

int r_range(const Context& ctx) { return std::max(1, static_cast<int>(ctx.g.edge_count())); }

Outcome check_r_nesting(const Context& ctx) {
  const int limit = ctx.options.max_enumeration_edges;
  const int top = std::min(r_range(ctx), 4);
  for (int r = 1; r < top; ++r) {
    const SimplicialComplex pf_lo = build_pf_r(ctx.g, r, limit);
    const SimplicialComplex pf_hi = build_pf_r(ctx.g, r + 1, limit);
    const SimplicialComplex pm_lo = build_pm_r(ctx.g, r, limit);
    const SimplicialComplex pm_hi = build_pm_r(ctx.g, r + 1, limit);
    for (EdgeSet f : pf_lo.faces()) {
      if (!pf_hi.contains(f)) return fail("PF(G," + std::to_string(r) + ") not inside the next");
    }
    for (EdgeSet f : pm_hi.faces()) {
      if (!pm_lo.contains(f)) return fail("PM(G," + std::to_string(r + 1) + ") not inside the previous");
    }
  }
  return pass();
}

Outcome check_r_parallel(const Context& ctx) {
  const Digraph& g = ctx.g;
  const bool parallel = g.s() != g.t() && g.edge_count() > 0 &&
                        std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
                          return e.source == g.s() && e.target == g.t();
                        });
  if (!parallel) return skip("not a parallel-edge graph");
  const int k = static_cast<int>(g.edge_count());
  for (int r = 1; r <= k; ++r) {
    const long long pf = reduced_euler_characteristic(build_pf_r(g, r, ctx.options.max_enumeration_edges));
    const long long pm = reduced_euler_characteristic(build_pm_r(g, r, ctx.options.max_enumeration_edges));
    if (pf != chi_pf_r_parallel(k, r) || pm != chi_pm_r_parallel(k, r)) {
      return fail("k=" + std::to_string(k) + " r=" + std::to_string(r));
    }
  }
  return pass("k=" + std::to_string(k));
}

Outcome check_r_duality(const Context& ctx) {
  const int limit = ctx.options.max_enumeration_edges;
  const int top = std::min(r_range(ctx), 3);
  std::string holds;
  for (int r = 2; r <= top; ++r) {
    const bool dual = alexander_dual(build_pf_r(ctx.g, r, limit), limit) == build_pm_r(ctx.g, r, limit);
    holds += " r" + std::to_string(r) + "=" + (dual ? "dual" : "not-dual");
  }
  if (holds.empty()) return skip("fewer than 2 edges");
  return info(holds.substr(1));
}

struct Registered {
  std::string id;
  CheckFn fn;
};

const std::vector<Registered>& registry() {
  using K = ComplexKind;
  static const std::vector<Registered> checks{
      {"complex.pm-membership", enumerating([](const Context& c) { return check_membership(c, K::PathMissing); })},
      {"complex.pf-membership", enumerating([](const Context& c) { return check_membership(c, K::PathFree); })},
      {"complex.alexander-duality", enumerating(check_duality)},
      {"complex.useless-edge-cone", enumerating(check_useless_cone)},
      {"complex.pf-minimal-nonfaces", enumerating(check_pf_minimal_nonfaces)},
      {"complex.pm-minimal-nonfaces", enumerating(check_pm_minimal_nonfaces)},
      {"complex.facet-nonface-duality", enumerating(check_facet_nonface)},
      {"complex.pf-codim-min-cut", enumerating(check_pf_codim)},
      {"complex.pm-codim-shortest-path", enumerating(check_pm_codim)},
      {"flow.max-flow-min-cut", check_flow},
      {"complex.star-link-deletion", enumerating(check_star_link_deletion)},
      {"graph.contraction-path-correspondence", enumerating(check_path_correspondence)},
      {"complex.pm-link-is-deletion-graph",
       enumerating([](const Context& c) { return check_local_identity(c, K::PathMissing, true, false, false); })},
      {"complex.pm-deletion-is-contraction-graph",
       enumerating([](const Context& c) { return check_local_identity(c, K::PathMissing, false, true, true); })},
      {"complex.pf-deletion-is-deletion-graph",
       enumerating([](const Context& c) { return check_local_identity(c, K::PathFree, false, false, false); })},
      {"complex.pf-link-is-contraction-graph",
       enumerating([](const Context& c) { return check_local_identity(c, K::PathFree, true, true, true); })},
      {"graph.target-s-useless", check_target_s_useless},
      {"graph.shared-target-contraction-useless", check_shared_target},
      {"graph.sole-entry-deletion-useless", check_sole_entry},
      {"graph.no-useless-basics", check_no_useless_basics},
      {"graph.cycles-survive", check_cycles_survive},
      {"graph.clean-contraction", check_clean_contraction},
      {"graph.clean-deletion-cycle", check_clean_deletion},
      {"graph.useless-shortcut", check_useless_shortcut},
      {"quasi.useless-deletion", check_quasi_useless_deletion},
      {"quasi.source-edge", check_quasi_source_edge},
      {"fpoly.recurrence", enumerating(check_fpoly_recurrence)},
      {"fpoly.cone", enumerating(check_fpoly_cone)},
      {"fpoly.dual", enumerating(check_fpoly_dual)},
      {"fpoly.at-minus-one", enumerating(check_f_at_minus_one)},
      {"chi.recurrence", enumerating(check_chi_recurrence)},
      {"chi.dual", enumerating(check_chi_dual)},
      {"chi.proper-subsets", enumerating(check_chi_proper_subsets)},
      {"chi.full-simplex", enumerating(check_chi_full_simplex)},
      {"chi.cone", enumerating(check_chi_cone)},
      {"chi.suspension", enumerating(check_suspension)},
      {"chi.pm-closed-form", enumerating([](const Context& c) { return check_chi_closed(c, K::PathMissing); })},
      {"chi.pf-closed-form", enumerating([](const Context& c) { return check_chi_closed(c, K::PathFree); })},
      {"chi.pm-parity", enumerating([](const Context& c) { return check_parity(c, K::PathMissing); })},
      {"chi.pf-parity", enumerating([](const Context& c) { return check_parity(c, K::PathFree); })},
      {"fpoly.divisibility", check_divisibility_thm},
      {"dc.pm-matches-brute", enumerating([](const Context& c) { return check_dc(c, K::PathMissing); })},
      {"dc.pf-matches-brute", enumerating([](const Context& c) { return check_dc(c, K::PathFree); })},
      {"dc.cone-shortcut", check_dc_shortcut},
      {"homology.euler-poincare", enumerating(check_euler_poincare)},
      {"homology.pm-classification", enumerating([](const Context& c) { return check_homotopy(c, K::PathMissing); })},
      {"homology.pf-classification", enumerating([](const Context& c) { return check_homotopy(c, K::PathFree); })},
      {"grape.pf-strong", grape_check([](const Context& c) { return check_strong_grape(c, K::PathFree); })},
      {"grape.pm-strong", grape_check([](const Context& c) { return check_strong_grape(c, K::PathMissing); })},
      {"grape.strong-implies-combinatorial", grape_check(check_strong_implies_combinatorial)},
      {"grape.graph-guided", grape_check(check_graph_guided)},
      {"rgen.r1-reduction", enumerating(check_r1)},
      {"rgen.nesting", enumerating(check_r_nesting)},
      {"rgen.parallel-chi", enumerating(check_r_parallel)},
      {"rgen.duality-observed", enumerating(check_r_duality)},
  };
  return checks;
}

Outcome guarded(const CheckFn& fn, const Context& ctx) {
  try {
    return fn(ctx);
  } catch (const ResourceError& e) {
    return skip(std::string("guard: ") + e.what());
  } catch (const std::exception& e) {
    return fail(std::string("exception: ") + e.what());
  }
}

}  // namespace

VerificationReport run_all_checks(const Digraph& g, std::size_t graph_index, const VerifyOptions& options) {
  VerificationReport report;
  auto add = [&](const std::string& id, Outcome o) {
    report.results.push_back({graph_index, id, o.status, std::move(o.detail)});
  };

  std::optional<Context> ctx;
  std::string setup_error;
  try {
    ctx.emplace(g, options);
  } catch (const std::exception& e) {
    setup_error = e.what();
  }

  std::set<std::string> seen;
  for (const Registered& check : registry()) {
    seen.insert(check.id);
    add(check.id, ctx ? guarded(check.fn, *ctx) : fail("setup: " + setup_error));
  }

  // Every manifest entry except the harness row must have a registered check.
  std::vector<std::string> missing;
  for (const std::string& id : check_manifest()) {
    if (id != "harness.manifest" && !seen.contains(id)) missing.push_back(id);
  }
  add("harness.manifest", missing.empty() ? pass("checks=" + std::to_string(seen.size()))
                                          : fail("unregistered: " + missing.front()));

  if (report.failures() > 0) report.payloads.emplace(graph_index, serialize_graph(g));
  return report;
}

VerificationReport verify_corpus(const std::vector<Digraph>& corpus, const VerifyOptions& options,
                                 unsigned threads) {
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, corpus.size()))));
  std::vector<VerificationReport> parts(corpus.size());
  auto work = [&](std::size_t worker) {
    for (std::size_t i = worker; i < corpus.size(); i += threads) parts[i] = run_all_checks(corpus[i], i, options);
  };
  std::vector<std::future<void>> futures;
  for (unsigned w = 1; w < threads; ++w) futures.push_back(std::async(std::launch::async, work, w));
  work(0);
  for (auto& f : futures) f.get();

  VerificationReport merged;
  for (VerificationReport& part : parts) merged.append(std::move(part));
  return merged;
}

}  // namespace pathcx
