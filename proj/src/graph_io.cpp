#include "pathcx/graph_io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "pathcx/errors.hpp"

namespace pathcx {

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> tokens;
  std::istringstream in{std::string(line)};
  for (std::string tok; in >> tok;) tokens.push_back(std::move(tok));
  return tokens;
}

struct PendingEdge {
  std::size_t line;
  EdgeSpec spec;
};

}  // namespace

Digraph parse_graph(std::string_view text) {
  std::vector<std::string> vertices;
  std::map<std::string, std::size_t> vertex_line;
  std::vector<PendingEdge> edges;
  std::map<std::string, std::size_t> edge_line;
  std::optional<std::pair<std::size_t, std::string>> s;
  std::optional<std::pair<std::size_t, std::string>> t;

  std::size_t line_no = 0;
  std::size_t last_content = 1;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    const std::vector<std::string> tok = tokenize(line);
    if (tok.empty() || tok[0].front() == '#') continue;
    last_content = line_no;
    const std::string& directive = tok[0];

    auto arity = [&](std::size_t n) {
      if (tok.size() != n) {
        throw ParseError(line_no, "'" + directive + "' expects " + std::to_string(n - 1) + " argument(s)");
      }
    };
    if (directive == "vertex") {
      arity(2);
      if (!vertex_line.emplace(tok[1], line_no).second) {
        throw ParseError(line_no, "duplicate vertex id '" + tok[1] + "'");
      }
      vertices.push_back(tok[1]);
    } else if (directive == "s" || directive == "t") {
      arity(2);
      auto& slot = directive == "s" ? s : t;
      if (slot) throw ParseError(line_no, "'" + directive + "' declared more than once");
      slot.emplace(line_no, tok[1]);
    } else if (directive == "edge") {
      arity(4);
      if (!edge_line.emplace(tok[1], line_no).second) {
        throw ParseError(line_no, "duplicate edge id '" + tok[1] + "'");
      }
      edges.push_back({line_no, {tok[1], tok[2], tok[3]}});
    } else {
      throw ParseError(line_no, "unknown directive '" + directive + "'");
    }
  }

  auto require_vertex = [&](std::size_t line, const std::string& v) {
    if (!vertex_line.contains(v)) throw ParseError(line, "undeclared vertex '" + v + "'");
  };
  for (const PendingEdge& e : edges) {
    require_vertex(e.line, e.spec.source);
    require_vertex(e.line, e.spec.target);
  }
  // Missing declarations are reported at the last non-blank line.
  if (!s) throw ParseError(last_content, "missing 's' declaration");
  if (!t) throw ParseError(last_content, "missing 't' declaration");
  require_vertex(s->first, s->second);
  require_vertex(t->first, t->second);

  std::vector<EdgeSpec> specs;
  specs.reserve(edges.size());
  for (PendingEdge& e : edges) specs.push_back(std::move(e.spec));
  return Digraph(std::move(vertices), specs, s->second, t->second);
}

Digraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string serialize_graph(const Digraph& g) {
  std::ostringstream out;
  for (VertexId v : g.vertices()) out << "vertex " << g.vertex_name(v) << '\n';
  out << "s " << g.vertex_name(g.s()) << '\n';
  out << "t " << g.vertex_name(g.t()) << '\n';
  for (const Edge& e : g.edges()) {
    out << "edge " << g.edge_name(e.id) << ' ' << g.vertex_name(e.source) << ' '
        << g.vertex_name(e.target) << '\n';
  }
  return out.str();
}

std::string format_edge_set(const Digraph& g, EdgeSet edges) {
  std::string out = "{";
  bool first = true;
  edges.for_each([&](int e) {
    if (!first) out += ',';
    first = false;
    out += g.edge_name(e);
  });
  return out + "}";
}

}  // namespace pathcx
