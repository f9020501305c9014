#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "corpus.hpp"
#include "pathcx/errors.hpp"
#include "pathcx/graph_io.hpp"
#include "pathcx/verify.hpp"

using namespace pathcx;

namespace {

std::size_t error_line(std::string_view text) {
  try {
    parse_graph(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("running example file") {
  const Digraph g = testing_support::fixture("example12.graph");
  CHECK(g.vertices().size() == 5);
  CHECK(g.edge_count() == 7);
  CHECK(g.edge_name(0) == "a");
  CHECK(g.edge_name(6) == "g");
  CHECK(serialize_graph(g) == serialize_graph(example_graph()));
}

TEST_CASE("self-loops, comments and blank lines") {
  const Digraph g = parse_graph("# loop\n\nvertex s\nvertex t\n  \ns s\nt t\nedge x s s\n");
  CHECK(g.edge_count() == 1);
  CHECK(g.edge(0).source == g.edge(0).target);
}

TEST_CASE("directives in any order") {
  const Digraph g = parse_graph("edge e s t\nt t\nvertex t\ns s\nvertex s\n");
  CHECK(g.edge_count() == 1);
}

TEST_CASE("errors carry line numbers") {
  CHECK(error_line("vertex s\ns s\n") == 2);
  CHECK(error_line("vertex s\nvertex t\ns s\nt t\nedge a s t\nedge a t s\n") == 6);
  CHECK(error_line("vertex s\nvertex s\n") == 2);
  CHECK(error_line("vertex s\nvertex t\ns s\nt t\nedge a s u\n") == 5);
  CHECK(error_line("vertex s\nvertex t\ns s\nt t\nfoo bar\n") == 5);
  CHECK(error_line("vertex s\nvertex t\ns s\ns t\n") == 4);
  CHECK(error_line("vertex s t\n") == 1);
  CHECK(error_line("vertex s\ns x\nt s\n") == 2);
  CHECK_THROWS_AS(parse_graph(""), ParseError);
  CHECK_THROWS_AS(load_graph("/nonexistent/graph"), InputError);
}

TEST_CASE("edge set formatting") {
  const Digraph g = example_graph();
  CHECK(format_edge_set(g, EdgeSet{}) == "{}");
  CHECK(format_edge_set(g, EdgeSet::of({0, 2, 6})) == "{a,c,g}");
}

TEST_CASE("serialization round trip") {
  for (const Digraph& g : testing_support::corpus(100, 8, 3)) {
    const Digraph back = parse_graph(serialize_graph(g));
    CHECK(serialize_graph(back) == serialize_graph(g));
    CHECK(back.edge_count() == g.edge_count());
    CHECK((back.s() == back.t()) == (g.s() == g.t()));
  }
  // Derived graphs have gaps in their id space; names survive renumbering.
  const Digraph g = contract_edge(example_graph(), 0);
  const Digraph back = parse_graph(serialize_graph(g));
  CHECK(back.edge_count() == 6);
  CHECK(back.find_edge("b").has_value());
  CHECK_FALSE(back.find_edge("a").has_value());
}
