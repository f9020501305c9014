#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "corpus.hpp"
#include "pathcx/errors.hpp"
#include "pathcx/grape.hpp"
#include "pathcx/path_complex.hpp"

using namespace pathcx;

namespace {

// Three isolated points: a disjoint union of points, not a sphere.
SimplicialComplex three_points() {
  return SimplicialComplex::from_facets(EdgeSet::prefix(3),
                                        {EdgeSet::of({0}), EdgeSet::of({1}), EdgeSet::of({2})});
}

}  // namespace

TEST_CASE("small ground sets are grapes") {
  CHECK(is_strong_grape(SimplicialComplex::empty(EdgeSet{})).has_value());
  CHECK(is_strong_grape(SimplicialComplex::irrelevant(EdgeSet::prefix(1))).has_value());
}

TEST_CASE("spheres and simplices are strong grapes") {
  for (int n = 2; n <= 6; ++n) {
    const auto sphere = SimplicialComplex::proper_subsets(EdgeSet::prefix(n));
    const auto cert = is_strong_grape(sphere);
    REQUIRE(cert.has_value());
    CHECK(replay_certificate(sphere, *cert, GrapeMode::Strong));
    CHECK(is_strong_grape(SimplicialComplex::full_simplex(EdgeSet::prefix(n))).has_value());
  }
}

TEST_CASE("three points are a combinatorial grape but not a strong one") {
  const auto c = three_points();
  CHECK_FALSE(is_strong_grape(c).has_value());
  const auto cert = is_combinatorial_grape(c);
  REQUIRE(cert.has_value());
  CHECK(replay_certificate(c, *cert, GrapeMode::Combinatorial));
  std::string why;
  CHECK_FALSE(replay_certificate(c, *cert, GrapeMode::Strong, &why));
  CHECK_FALSE(why.empty());
}

TEST_CASE("vacuous sandwich is flagged") {
  const auto cert = is_combinatorial_grape(three_points());
  REQUIRE(cert.has_value());
  // Somewhere below the root a link has no faces.
  bool seen_vacuous = false;
  std::vector<GrapeCertificate> stack{*cert};
  while (!stack.empty()) {
    const GrapeCertificate node = stack.back();
    stack.pop_back();
    if (node->kind != GrapeNode::Kind::Split) continue;
    if (const auto* sw = std::get_if<SandwichWitness>(&node->side)) seen_vacuous = seen_vacuous || sw->vacuous;
    stack.push_back(node->link_child);
    stack.push_back(node->deletion_child);
  }
  CHECK(seen_vacuous);
}

TEST_CASE("tampered certificates fail replay") {
  const Digraph g = example_graph();
  const SimplicialComplex pf = build_pf(g);
  const auto cert = is_strong_grape(pf);
  REQUIRE(cert.has_value());
  REQUIRE((*cert)->kind == GrapeNode::Kind::Split);

  auto bad_apex = std::make_shared<GrapeNode>(**cert);
  bad_apex->apex = 40;
  std::string why;
  CHECK_FALSE(replay_certificate(pf, bad_apex, GrapeMode::Strong, &why));
  CHECK(why.find("apex") != std::string::npos);

  auto bad_side = std::make_shared<GrapeNode>(**cert);
  bad_side->side = std::monostate{};
  CHECK_FALSE(replay_certificate(pf, bad_side, GrapeMode::Strong));

  auto early_base = std::make_shared<GrapeNode>();
  CHECK_FALSE(replay_certificate(pf, early_base, GrapeMode::Strong));
  CHECK_FALSE(replay_certificate(pf, nullptr, GrapeMode::Strong));
}

TEST_CASE("ground limit") {
  GrapeOptions options;
  options.max_ground = 4;
  CHECK_THROWS_AS(is_strong_grape(SimplicialComplex::irrelevant(EdgeSet::prefix(5)), options), ResourceError);
}

TEST_CASE("certificate rendering") {
  const Digraph g = testing_support::fixture("path2.graph");
  const auto cert = graph_guided_strong_grape(g, ComplexKind::PathFree);
  REQUIRE(cert.has_value());
  const std::string text = format_certificate(*cert, [&](int e) { return g.edge_name(e); });
  CHECK(text.rfind("split e1 cone-", 0) == 0);
  CHECK(text.find("  link: ") != std::string::npos);
  CHECK(text.find("  deletion: ") != std::string::npos);
  CHECK(certificate_splits(*cert) >= 1);
}

TEST_CASE("both complexes are strong grapes by both routes") {
  const auto graphs = testing_support::corpus(150, 7, 41);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Digraph& g = graphs[i];
    if (g.edge_count() > 9) continue;
    CAPTURE(i);
    for (ComplexKind k : {ComplexKind::PathFree, ComplexKind::PathMissing}) {
      const SimplicialComplex c = build_complex(g, k);
      const auto searched = is_strong_grape(c);
      REQUIRE(searched.has_value());
      CHECK(replay_certificate(c, *searched, GrapeMode::Strong));
      CHECK(replay_certificate(c, *searched, GrapeMode::Combinatorial));
      const auto guided = graph_guided_strong_grape(g, k);
      REQUIRE(guided.has_value());
      CHECK(replay_certificate(c, *guided, GrapeMode::Strong));
      CHECK(is_combinatorial_grape(c).has_value());
    }
  }
}
