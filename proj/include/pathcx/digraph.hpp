#pragma once

#include <climits>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pathcx/edge_set.hpp"

namespace pathcx {

using VertexId = int;
using EdgeId = int;

struct Edge {
  EdgeId id;
  VertexId source;
  VertexId target;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Edge declaration by name, used to build a graph from text or tests.
struct EdgeSpec {
  std::string id;
  std::string source;
  std::string target;
};

/// A walk v0 e1 v1 ... en vn. Produced either as an s-t-path (all vertices
/// distinct) or as a cycle (v0 == vn, all other vertices distinct).
struct PathWitness {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  [[nodiscard]] EdgeSet edge_set() const {
    EdgeSet r;
    for (EdgeId e : edges) r.insert(e);
    return r;
  }
  friend bool operator==(const PathWitness&, const PathWitness&) = default;
};

enum class QuasiCycleKind { CycleEdgeSet, SingleUselessEdge };

struct QuasiCycle {
  EdgeSet edges;
  QuasiCycleKind kind;

  friend bool operator==(const QuasiCycle&, const QuasiCycle&) = default;
};

struct QuasiCyclePacking {
  int count = 0;
  std::vector<QuasiCycle> witness;
};

/// Returned by max_edge_disjoint_st_paths when s = t: the trivial path has no
/// edges, so arbitrarily many edge-disjoint copies exist.
inline constexpr int kUnboundedPaths = INT_MAX;

/// Default refusal threshold for exact quasi-cycle packing.
inline constexpr std::size_t kDefaultPackingLimit = 64;

/// Directed multigraph with distinguished vertices s and t.
///
/// Edge ids are dense indices assigned at construction (declaration order) and
/// survive deletion and contraction unchanged, so edge subsets of G, G\e and
/// G/e live in one id space. Vertex ids work the same way. Values are
/// immutable; all operations return new graphs.
class Digraph {
 public:
  /// Throws InputError on duplicate ids or undeclared endpoints,
  /// ResourceError when more than 64 edges are declared.
  Digraph(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges,
          std::string_view s, std::string_view t);

  [[nodiscard]] const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
  /// Surviving edges, sorted by id.
  [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }
  [[nodiscard]] EdgeSet edge_set() const noexcept { return edge_set_; }
  [[nodiscard]] std::size_t edge_count() const noexcept { return edges_.size(); }
  [[nodiscard]] VertexId s() const noexcept { return s_; }
  [[nodiscard]] VertexId t() const noexcept { return t_; }

  [[nodiscard]] bool has_edge(EdgeId e) const noexcept {
    return e >= 0 && e < kMaxElements && edge_set_.contains(e);
  }
  /// Throws InputError for an unknown id.
  [[nodiscard]] const Edge& edge(EdgeId e) const;

  /// Size of the id spaces (including removed/merged ids).
  [[nodiscard]] int vertex_capacity() const noexcept { return static_cast<int>(names_->vertices.size()); }
  [[nodiscard]] int edge_capacity() const noexcept { return static_cast<int>(names_->edges.size()); }

  [[nodiscard]] const std::string& vertex_name(VertexId v) const { return names_->vertices.at(v); }
  [[nodiscard]] const std::string& edge_name(EdgeId e) const { return names_->edges.at(e); }
  [[nodiscard]] std::optional<EdgeId> find_edge(std::string_view name) const;
  [[nodiscard]] std::optional<VertexId> find_vertex(std::string_view name) const;

  friend Digraph delete_edge(const Digraph& g, EdgeId e);
  friend Digraph contract_edge(const Digraph& g, EdgeId e);

 private:
  struct Names {
    std::vector<std::string> vertices;
    std::vector<std::string> edges;
  };

  Digraph() = default;

  std::shared_ptr<const Names> names_;
  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  EdgeSet edge_set_;
  VertexId s_ = 0;
  VertexId t_ = 0;
};

/// G\e: same vertices and s, t; edge set E\{e}. Throws InputError if e is unknown.
Digraph delete_edge(const Digraph& g, EdgeId e);

/// G/e: source and target of e identified (the merged vertex keeps the
/// source's id and name, and inherits the s/t roles of both endpoints); e is
/// removed. Contracting a self-loop is deletion. Throws InputError if e is unknown.
Digraph contract_edge(const Digraph& g, EdgeId e);

/// All simple s-t-paths, in lexicographic order of their edge-id sequences.
/// When s = t the result is exactly the trivial path.
std::vector<PathWitness> enumerate_st_paths(const Digraph& g);

/// Is t reachable from s?
bool has_st_path(const Digraph& g);
/// Is t reachable from s using only edges in `within`?
bool has_st_path(const Digraph& g, EdgeSet within);

/// Edges lying on no simple s-t-path.
///
/// On acyclic graphs an edge (u, v) is useful iff s reaches u and v reaches t;
/// otherwise the union of enumerated paths is complemented.
EdgeSet useless_edges(const Digraph& g);
/// Always uses simple-path enumeration. Exposed for cross-checking.
EdgeSet useless_edges_exhaustive(const Digraph& g);

/// First cycle found by depth-first search (vertices and out-edges in id
/// order). The witness is closed: vertices.front() == vertices.back().
std::optional<PathWitness> find_cycle(const Digraph& g);
inline bool has_cycle(const Digraph& g) { return find_cycle(g).has_value(); }

/// Vertices with positive out-degree, ascending.
std::vector<VertexId> nonsinks(const Digraph& g);

/// Edge sets of all simple cycles, each listed once, in canonical order.
std::vector<EdgeSet> simple_cycle_edge_sets(const Digraph& g);

/// Cycle edge sets plus singletons of useless edges, deduplicated (a self-loop
/// is reported once, as a cycle), in canonical order.
std::vector<QuasiCycle> quasi_cycles(const Digraph& g);

/// Maximum number of pairwise edge-disjoint quasi-cycles, by branch and bound.
/// Throws ResourceError when more than `limit` quasi-cycles exist.
QuasiCyclePacking max_disjoint_quasi_cycles(const Digraph& g,
                                            std::size_t limit = kDefaultPackingLimit);

/// Maximum number of pairwise edge-disjoint s-t-paths (unit-capacity max
/// flow); kUnboundedPaths when s = t.
int max_edge_disjoint_st_paths(const Digraph& g);
int max_edge_disjoint_st_paths(const Digraph& g, EdgeSet within);

/// Size of a smallest edge set meeting every s-t-path, read off the residual
/// graph of a maximum flow. Throws DomainError when s = t.
int min_st_cutset_size(const Digraph& g);

/// Edge count of a shortest s-t-path (0 when s = t), or nullopt if none.
std::optional<int> shortest_st_path_length(const Digraph& g);

/// Number of edges with the given target.
int in_degree(const Digraph& g, VertexId v);

}  // namespace pathcx
