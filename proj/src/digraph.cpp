#include "pathcx/digraph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <unordered_map>

#include "pathcx/errors.hpp"

namespace pathcx {

namespace {

using Adjacency = std::vector<std::vector<Edge>>;

// Out-edges per vertex id, restricted to `within`, each list in edge-id order.
Adjacency out_adjacency(const Digraph& g, EdgeSet within) {
  Adjacency adj(static_cast<std::size_t>(g.vertex_capacity()));
  for (const Edge& e : g.edges()) {
    if (within.contains(e.id)) adj[static_cast<std::size_t>(e.source)].push_back(e);
  }
  return adj;
}

std::vector<char> forward_reach(const Digraph& g, VertexId from, EdgeSet within) {
  const Adjacency adj = out_adjacency(g, within);
  std::vector<char> seen(adj.size(), 0);
  std::vector<VertexId> stack{from};
  seen[static_cast<std::size_t>(from)] = 1;
  while (!stack.empty()) {
    const VertexId u = stack.back();
    stack.pop_back();
    for (const Edge& e : adj[static_cast<std::size_t>(u)]) {
      if (!seen[static_cast<std::size_t>(e.target)]) {
        seen[static_cast<std::size_t>(e.target)] = 1;
        stack.push_back(e.target);
      }
    }
  }
  return seen;
}

std::vector<char> backward_reach(const Digraph& g, VertexId to) {
  std::vector<std::vector<VertexId>> in(static_cast<std::size_t>(g.vertex_capacity()));
  for (const Edge& e : g.edges()) in[static_cast<std::size_t>(e.target)].push_back(e.source);
  std::vector<char> seen(in.size(), 0);
  std::vector<VertexId> stack{to};
  seen[static_cast<std::size_t>(to)] = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (VertexId u : in[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(u)]) {
        seen[static_cast<std::size_t>(u)] = 1;
        stack.push_back(u);
      }
    }
  }
  return seen;
}

// Unit-capacity max flow by shortest augmenting paths. Self-loops never carry
// flow. After return, `reach` marks the vertices reachable from s in the
// final residual graph (the source side of a minimum cut).
struct UnitFlow {
  struct Arc {
    VertexId to;
    int cap;
    std::size_t rev;
  };

  std::vector<std::vector<Arc>> arcs;
  std::vector<char> reach;
  int value = 0;

  UnitFlow(const Digraph& g, EdgeSet within) : arcs(static_cast<std::size_t>(g.vertex_capacity())) {
    for (const Edge& e : g.edges()) {
      if (!within.contains(e.id) || e.source == e.target) continue;
      auto& from = arcs[static_cast<std::size_t>(e.source)];
      auto& to = arcs[static_cast<std::size_t>(e.target)];
      from.push_back({e.target, 1, to.size()});
      to.push_back({e.source, 0, from.size() - 1});
    }
    run(g.s(), g.t());
  }

  void run(VertexId s, VertexId t) {
    const std::size_t n = arcs.size();
    for (;;) {
      std::vector<std::pair<VertexId, std::size_t>> parent(n, {-1, 0});
      reach.assign(n, 0);
      reach[static_cast<std::size_t>(s)] = 1;
      std::deque<VertexId> queue{s};
      while (!queue.empty() && !reach[static_cast<std::size_t>(t)]) {
        const VertexId u = queue.front();
        queue.pop_front();
        const auto& out = arcs[static_cast<std::size_t>(u)];
        for (std::size_t i = 0; i < out.size(); ++i) {
          const Arc& a = out[i];
          if (a.cap > 0 && !reach[static_cast<std::size_t>(a.to)]) {
            reach[static_cast<std::size_t>(a.to)] = 1;
            parent[static_cast<std::size_t>(a.to)] = {u, i};
            queue.push_back(a.to);
          }
        }
      }
      if (!reach[static_cast<std::size_t>(t)]) return;
      for (VertexId v = t; v != s;) {
        const auto [u, i] = parent[static_cast<std::size_t>(v)];
        Arc& a = arcs[static_cast<std::size_t>(u)][i];
        a.cap -= 1;
        arcs[static_cast<std::size_t>(v)][a.rev].cap += 1;
        v = u;
      }
      ++value;
    }
  }
};

}  // namespace

Digraph::Digraph(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges,
                 std::string_view s, std::string_view t) {
  if (edges.size() > static_cast<std::size_t>(kMaxElements)) {
    throw ResourceError("graph has " + std::to_string(edges.size()) + " edges; the limit is " +
                        std::to_string(kMaxElements));
  }
  std::unordered_map<std::string, VertexId> vertex_ids;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!vertex_ids.emplace(vertices[i], static_cast<VertexId>(i)).second) {
      throw InputError("duplicate vertex id '" + vertices[i] + "'");
    }
  }
  auto lookup = [&](std::string_view name) {
    auto it = vertex_ids.find(std::string(name));
    if (it == vertex_ids.end()) throw InputError("undeclared vertex '" + std::string(name) + "'");
    return it->second;
  };

  auto names = std::make_shared<Names>();
  std::set<std::string> seen_edges;
  for (const EdgeSpec& spec : edges) {
    if (!seen_edges.insert(spec.id).second) throw InputError("duplicate edge id '" + spec.id + "'");
    const auto id = static_cast<EdgeId>(edges_.size());
    edges_.push_back({id, lookup(spec.source), lookup(spec.target)});
    edge_set_.insert(id);
    names->edges.push_back(spec.id);
  }
  s_ = lookup(s);
  t_ = lookup(t);
  vertices_.resize(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) vertices_[i] = static_cast<VertexId>(i);
  names->vertices = std::move(vertices);
  names_ = std::move(names);
}

const Edge& Digraph::edge(EdgeId e) const {
  if (!has_edge(e)) throw InputError("unknown edge id " + std::to_string(e));
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e,
                             [](const Edge& a, EdgeId id) { return a.id < id; });
  return *it;
}

std::optional<EdgeId> Digraph::find_edge(std::string_view name) const {
  for (const Edge& e : edges_) {
    if (names_->edges[static_cast<std::size_t>(e.id)] == name) return e.id;
  }
  return std::nullopt;
}

std::optional<VertexId> Digraph::find_vertex(std::string_view name) const {
  for (VertexId v : vertices_) {
    if (names_->vertices[static_cast<std::size_t>(v)] == name) return v;
  }
  return std::nullopt;
}

Digraph delete_edge(const Digraph& g, EdgeId e) {
  (void)g.edge(e);
  Digraph r = g;
  std::erase_if(r.edges_, [e](const Edge& x) { return x.id == e; });
  r.edge_set_.erase(e);
  return r;
}

Digraph contract_edge(const Digraph& g, EdgeId e) {
  const Edge target_edge = g.edge(e);
  if (target_edge.source == target_edge.target) return delete_edge(g, e);
  const VertexId keep = target_edge.source;
  const VertexId gone = target_edge.target;

  Digraph r = delete_edge(g, e);
  for (Edge& x : r.edges_) {
    if (x.source == gone) x.source = keep;
    if (x.target == gone) x.target = keep;
  }
  std::erase(r.vertices_, gone);
  if (r.s_ == gone) r.s_ = keep;
  if (r.t_ == gone) r.t_ = keep;
  return r;
}

std::vector<PathWitness> enumerate_st_paths(const Digraph& g) {
  if (g.s() == g.t()) return {PathWitness{{g.s()}, {}}};

  const Adjacency adj = out_adjacency(g, g.edge_set());
  std::vector<PathWitness> paths;
  std::vector<char> on_path(adj.size(), 0);
  PathWitness current{{g.s()}, {}};
  on_path[static_cast<std::size_t>(g.s())] = 1;

  // Out-edges are visited in id order, so paths come out lexicographically.
  std::function<void(VertexId)> extend = [&](VertexId u) {
    for (const Edge& e : adj[static_cast<std::size_t>(u)]) {
      const VertexId v = e.target;
      if (on_path[static_cast<std::size_t>(v)]) continue;
      current.vertices.push_back(v);
      current.edges.push_back(e.id);
      if (v == g.t()) {
        paths.push_back(current);
      } else {
        on_path[static_cast<std::size_t>(v)] = 1;
        extend(v);
        on_path[static_cast<std::size_t>(v)] = 0;
      }
      current.vertices.pop_back();
      current.edges.pop_back();
    }
  };
  extend(g.s());
  return paths;
}

bool has_st_path(const Digraph& g) { return has_st_path(g, g.edge_set()); }

bool has_st_path(const Digraph& g, EdgeSet within) {
  if (g.s() == g.t()) return true;
  return forward_reach(g, g.s(), within)[static_cast<std::size_t>(g.t())] != 0;
}

EdgeSet useless_edges_exhaustive(const Digraph& g) {
  EdgeSet useful;
  for (const PathWitness& p : enumerate_st_paths(g)) useful = useful | p.edge_set();
  return g.edge_set() - useful;
}

EdgeSet useless_edges(const Digraph& g) {
  if (has_cycle(g)) return useless_edges_exhaustive(g);
  // Without cycles every s-u walk followed by a v-t walk is already a path.
  const auto from_s = forward_reach(g, g.s(), g.edge_set());
  const auto to_t = backward_reach(g, g.t());
  EdgeSet useless;
  for (const Edge& e : g.edges()) {
    if (!from_s[static_cast<std::size_t>(e.source)] || !to_t[static_cast<std::size_t>(e.target)]) {
      useless.insert(e.id);
    }
  }
  return useless;
}

std::optional<PathWitness> find_cycle(const Digraph& g) {
  const Adjacency adj = out_adjacency(g, g.edge_set());
  enum Color : char { White, Gray, Black };
  std::vector<char> color(adj.size(), White);
  std::vector<VertexId> vstack;
  std::vector<EdgeId> estack;
  std::optional<PathWitness> found;

  std::function<bool(VertexId)> visit = [&](VertexId u) {
    color[static_cast<std::size_t>(u)] = Gray;
    vstack.push_back(u);
    for (const Edge& e : adj[static_cast<std::size_t>(u)]) {
      const VertexId v = e.target;
      if (color[static_cast<std::size_t>(v)] == Gray) {
        auto start = std::find(vstack.begin(), vstack.end(), v);
        const auto offset = static_cast<std::size_t>(start - vstack.begin());
        PathWitness w;
        w.vertices.assign(start, vstack.end());
        w.vertices.push_back(v);
        w.edges.assign(estack.begin() + static_cast<std::ptrdiff_t>(offset), estack.end());
        w.edges.push_back(e.id);
        found = std::move(w);
        return true;
      }
      if (color[static_cast<std::size_t>(v)] == White) {
        estack.push_back(e.id);
        if (visit(v)) return true;
        estack.pop_back();
      }
    }
    color[static_cast<std::size_t>(u)] = Black;
    vstack.pop_back();
    return false;
  };

  for (VertexId v : g.vertices()) {
    if (color[static_cast<std::size_t>(v)] == White && visit(v)) break;
  }
  return found;
}

std::vector<VertexId> nonsinks(const Digraph& g) {
  std::vector<char> has_out(static_cast<std::size_t>(g.vertex_capacity()), 0);
  for (const Edge& e : g.edges()) has_out[static_cast<std::size_t>(e.source)] = 1;
  std::vector<VertexId> out;
  for (VertexId v : g.vertices()) {
    if (has_out[static_cast<std::size_t>(v)]) out.push_back(v);
  }
  return out;
}

std::vector<EdgeSet> simple_cycle_edge_sets(const Digraph& g) {
  const Adjacency adj = out_adjacency(g, g.edge_set());
  std::set<EdgeSet, CanonicalLess> cycles;
  std::vector<char> on_path(adj.size(), 0);

  // Each cycle is found exactly once: rooted at its smallest vertex, and only
  // walking through larger vertices.
  for (VertexId root : g.vertices()) {
    std::function<void(VertexId, EdgeSet)> extend = [&](VertexId u, EdgeSet used) {
      for (const Edge& e : adj[static_cast<std::size_t>(u)]) {
        const VertexId v = e.target;
        if (v == root) {
          cycles.insert(used.with(e.id));
        } else if (v > root && !on_path[static_cast<std::size_t>(v)]) {
          on_path[static_cast<std::size_t>(v)] = 1;
          extend(v, used.with(e.id));
          on_path[static_cast<std::size_t>(v)] = 0;
        }
      }
    };
    on_path[static_cast<std::size_t>(root)] = 1;
    extend(root, EdgeSet{});
    on_path[static_cast<std::size_t>(root)] = 0;
  }
  return {cycles.begin(), cycles.end()};
}

std::vector<QuasiCycle> quasi_cycles(const Digraph& g) {
  std::vector<QuasiCycle> out;
  std::set<EdgeSet, CanonicalLess> seen;
  for (EdgeSet c : simple_cycle_edge_sets(g)) {
    seen.insert(c);
    out.push_back({c, QuasiCycleKind::CycleEdgeSet});
  }
  useless_edges(g).for_each([&](int e) {
    if (seen.insert(EdgeSet::singleton(e)).second) {
      out.push_back({EdgeSet::singleton(e), QuasiCycleKind::SingleUselessEdge});
    }
  });
  std::sort(out.begin(), out.end(),
            [](const QuasiCycle& a, const QuasiCycle& b) { return CanonicalLess{}(a.edges, b.edges); });
  return out;
}

QuasiCyclePacking max_disjoint_quasi_cycles(const Digraph& g, std::size_t limit) {
  const std::vector<QuasiCycle> candidates = quasi_cycles(g);
  if (candidates.size() > limit) {
    throw ResourceError("quasi-cycle packing: " + std::to_string(candidates.size()) +
                        " quasi-cycles exceed the packing limit of " + std::to_string(limit));
  }

  std::vector<std::size_t> best;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t, EdgeSet)> search = [&](std::size_t from, EdgeSet used) {
    if (chosen.size() > best.size()) best = chosen;
    // Bound: even taking every remaining compatible candidate cannot win.
    std::size_t compatible = 0;
    EdgeSet reachable;
    for (std::size_t j = from; j < candidates.size(); ++j) {
      if (candidates[j].edges.disjoint(used)) {
        ++compatible;
        reachable = reachable | candidates[j].edges;
      }
    }
    const auto bound = std::min<std::size_t>(compatible, static_cast<std::size_t>(reachable.size()));
    if (chosen.size() + bound <= best.size()) return;
    for (std::size_t j = from; j < candidates.size(); ++j) {
      if (!candidates[j].edges.disjoint(used)) continue;
      chosen.push_back(j);
      search(j + 1, used | candidates[j].edges);
      chosen.pop_back();
    }
  };
  search(0, EdgeSet{});

  QuasiCyclePacking r;
  r.count = static_cast<int>(best.size());
  for (std::size_t j : best) r.witness.push_back(candidates[j]);
  return r;
}

int max_edge_disjoint_st_paths(const Digraph& g) { return max_edge_disjoint_st_paths(g, g.edge_set()); }

int max_edge_disjoint_st_paths(const Digraph& g, EdgeSet within) {
  if (g.s() == g.t()) return kUnboundedPaths;
  return UnitFlow(g, within).value;
}

int min_st_cutset_size(const Digraph& g) {
  if (g.s() == g.t()) throw DomainError("no s-t cut-set exists when s = t");
  const UnitFlow flow(g, g.edge_set());
  int crossing = 0;
  for (const Edge& e : g.edges()) {
    if (flow.reach[static_cast<std::size_t>(e.source)] && !flow.reach[static_cast<std::size_t>(e.target)]) {
      ++crossing;
    }
  }
  return crossing;
}

std::optional<int> shortest_st_path_length(const Digraph& g) {
  if (g.s() == g.t()) return 0;
  const Adjacency adj = out_adjacency(g, g.edge_set());
  std::vector<int> dist(adj.size(), -1);
  std::deque<VertexId> queue{g.s()};
  dist[static_cast<std::size_t>(g.s())] = 0;
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    for (const Edge& e : adj[static_cast<std::size_t>(u)]) {
      auto& d = dist[static_cast<std::size_t>(e.target)];
      if (d < 0) {
        d = dist[static_cast<std::size_t>(u)] + 1;
        if (e.target == g.t()) return d;
        queue.push_back(e.target);
      }
    }
  }
  return std::nullopt;
}

int in_degree(const Digraph& g, VertexId v) {
  return static_cast<int>(std::count_if(g.edges().begin(), g.edges().end(),
                                        [v](const Edge& e) { return e.target == v; }));
}

}  // namespace pathcx
