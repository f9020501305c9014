#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "pathcx/errors.hpp"
#include "pathcx/graph_io.hpp"
#include "pathcx/verify.hpp"

using namespace pathcx;

TEST_CASE("fixture battery") {
  const auto fixtures = fixture_battery();
  REQUIRE(fixtures.size() == 15);
  CHECK(fixtures[0].edge_count() == 7);
  for (int k = 1; k <= 6; ++k) CHECK(fixtures[static_cast<std::size_t>(k)].edge_count() == static_cast<std::size_t>(k));
  CHECK(fixtures[11].edge_count() == 0);
  CHECK(fixtures[12].s() == fixtures[12].t());
}

TEST_CASE("corpus is deterministic and respects its bounds") {
  CorpusSpec spec;
  spec.graph_count = 80;
  spec.max_edges = 6;
  spec.max_vertices = 5;
  spec.seed = 99;
  const auto a = generate_corpus(spec);
  const auto b = generate_corpus(spec);
  REQUIRE(a.size() == fixture_battery().size() + 80);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(serialize_graph(a[i]) == serialize_graph(b[i]));
  for (std::size_t i = fixture_battery().size(); i < a.size(); ++i) {
    CHECK(a[i].edge_count() <= 6);
    CHECK(a[i].vertices().size() <= 5);
  }
  spec.seed = 100;
  const auto c = generate_corpus(spec);
  bool differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) differs = differs || serialize_graph(a[i]) != serialize_graph(c[i]);
  CHECK(differs);
}

TEST_CASE("corpus options") {
  CorpusSpec spec;
  spec.graph_count = 60;
  spec.include_fixtures = false;
  spec.allow_self_loops = false;
  spec.allow_parallel = false;
  spec.profile.st_equal_probability = 1.0;
  for (const Digraph& g : generate_corpus(spec)) {
    CHECK(g.s() == g.t());
    std::set<std::pair<int, int>> seen;
    for (const Edge& e : g.edges()) {
      CHECK(e.source != e.target);
      CHECK(seen.insert({e.source, e.target}).second);
    }
  }
  spec.max_edges = 21;
  CHECK_THROWS_AS(generate_corpus(spec), InputError);
}

TEST_CASE("every manifest check runs on every graph") {
  const VerificationReport r = run_all_checks(example_graph(), 4);
  REQUIRE(r.results.size() == check_manifest().size());
  for (std::size_t i = 0; i < r.results.size(); ++i) {
    CHECK(r.results[i].check_id == check_manifest()[i]);
    CHECK(r.results[i].graph_index == 4);
  }
  CHECK(r.failures() == 0);
  CHECK(r.payloads.empty());
}

TEST_CASE("conditional checks skip when hypotheses fail") {
  const VerificationReport r = run_all_checks(Digraph({"s", "t"}, {}, "s", "t"));
  const auto by_check = r.tally_by_check();
  CHECK(by_check.at("graph.sole-entry-deletion-useless").skip == 1);
  CHECK(by_check.at("graph.cycles-survive").skip == 1);
  CHECK(by_check.at("rgen.parallel-chi").skip == 1);
  CHECK(r.failures() == 0);
}

TEST_CASE("enumeration guard skips rather than fails") {
  VerifyOptions options;
  options.max_enumeration_edges = 3;
  const VerificationReport r = run_all_checks(example_graph(), 0, options);
  const auto by_check = r.tally_by_check();
  CHECK(by_check.at("complex.alexander-duality").skip == 1);
  CHECK(by_check.at("flow.max-flow-min-cut").pass == 1);
  CHECK(r.failures() == 0);
}

TEST_CASE("report text and parallel merge") {
  CorpusSpec spec;
  spec.graph_count = 30;
  spec.max_edges = 6;
  const auto corpus = generate_corpus(spec);
  const VerificationReport one = verify_corpus(corpus, {}, 1);
  const VerificationReport four = verify_corpus(corpus, {}, 4);
  CHECK(one.to_text() == four.to_text());
  CHECK(one.failures() == 0);
  const std::string text = one.to_text();
  CHECK(text.rfind("0 complex.pm-membership pass", 0) == 0);
  CHECK(text.find("# summary graphs=" + std::to_string(corpus.size())) != std::string::npos);
  CHECK(text.find("# check graph.target-s-useless") != std::string::npos);
  CHECK(text.find(" info ") != std::string::npos);
}

TEST_CASE("every conditional graph check meets its hypotheses somewhere") {
  // Small, forward-biased, loop-free graphs make the rarer hypotheses common;
  // the fixtures supply cycles without useless edges.
  CorpusSpec spec;
  spec.graph_count = 600;
  spec.max_edges = 9;
  spec.max_vertices = 4;
  spec.seed = 3;
  spec.allow_self_loops = false;
  spec.profile.st_equal_probability = 0.0;
  const VerificationReport r = verify_corpus(generate_corpus(spec), {}, 4);
  CHECK(r.failures() == 0);
  const auto by_check = r.tally_by_check();
  for (const std::string& id : check_manifest()) {
    if (id.rfind("graph.", 0) != 0) continue;
    CAPTURE(id);
    CHECK(by_check.at(id).pass > 0);
  }
}
