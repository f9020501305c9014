#include "pathcx/grape.hpp"

#include <map>
#include <sstream>

#include "pathcx/errors.hpp"

namespace pathcx {

namespace {

GrapeCertificate base_case() {
  static const GrapeCertificate base = std::make_shared<const GrapeNode>();
  return base;
}

// First b in W \ {a} with F + b in dl for every F in lk, or -1.
int find_sandwich_element(const SimplicialComplex& lk, const SimplicialComplex& dl) {
  for (int b : lk.ground().members()) {
    bool ok = true;
    for (EdgeSet f : lk.faces()) {
      if (!dl.contains(f.with(b))) {
        ok = false;
        break;
      }
    }
    if (ok) return b;
  }
  return -1;
}

class GrapeSearch {
 public:
  GrapeSearch(GrapeMode mode, const GrapeOptions& options) : mode_(mode), options_(options) {}

  GrapeCertificate solve(const SimplicialComplex& c) {
    if (c.ground().size() <= 1) return base_case();

    Key key{c.ground().bits(), {}};
    key.second.reserve(c.size());
    for (EdgeSet f : c.faces()) key.second.push_back(f.bits());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    GrapeCertificate result;
    for (int a : c.ground().members()) {
      if (options_.apex_filter && !options_.apex_filter(c, a)) continue;
      const SimplicialComplex lk = link(c, a);
      const SimplicialComplex dl = deletion(c, a);

      auto node = std::make_shared<GrapeNode>();
      node->kind = GrapeNode::Kind::Split;
      node->apex = a;
      if (mode_ == GrapeMode::Strong) {
        if (int b = find_cone_apex(lk); b >= 0) {
          node->side = ConeWitness{ConeWitness::Side::Link, b};
        } else if (int b2 = find_cone_apex(dl); b2 >= 0) {
          node->side = ConeWitness{ConeWitness::Side::Deletion, b2};
        } else {
          continue;
        }
      } else {
        const int b = find_sandwich_element(lk, dl);
        if (b < 0) continue;
        node->side = SandwichWitness{b, lk.is_void()};
      }

      node->link_child = solve(lk);
      if (!node->link_child) continue;
      node->deletion_child = solve(dl);
      if (!node->deletion_child) continue;
      result = std::move(node);
      break;
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  using Key = std::pair<std::uint64_t, std::vector<std::uint64_t>>;

  GrapeMode mode_;
  const GrapeOptions& options_;
  std::map<Key, GrapeCertificate> memo_;
};

std::optional<GrapeCertificate> run_search(const SimplicialComplex& c, GrapeMode mode,
                                           const GrapeOptions& options) {
  SimplicialComplex::check_enumerable(c.ground(), options.max_ground);
  GrapeSearch search(mode, options);
  GrapeCertificate cert = search.solve(c);
  if (!cert) return std::nullopt;
  return cert;
}

bool fail(std::string* why, const std::string& message) {
  if (why) *why = message;
  return false;
}

std::optional<GrapeCertificate> guided(const Digraph& g, ComplexKind kind, const GrapeOptions& options) {
  if (g.edge_count() <= 1) return base_case();
  if (g.s() == g.t() || !has_st_path(g)) {
    return is_strong_grape(build_complex(g, kind, options.max_ground), options);
  }

  const EdgeSet useless = useless_edges(g);
  EdgeId e = -1;
  for (const Edge& x : g.edges()) {
    if (x.source == g.s() && !useless.contains(x.id)) {
      e = x.id;
      break;
    }
  }
  if (e < 0) return std::nullopt;

  const Digraph without = delete_edge(g, e);
  const Digraph contracted = contract_edge(g, e);
  const bool pm = kind == ComplexKind::PathMissing;
  // PM: lk(e) = PM(G\e), dl(e) = PM(G/e).  PF: lk(e) = PF(G/e), dl(e) = PF(G\e).
  const Digraph& link_graph = pm ? without : contracted;
  const Digraph& deletion_graph = pm ? contracted : without;

  auto node = std::make_shared<GrapeNode>();
  node->kind = GrapeNode::Kind::Split;
  node->apex = e;
  if (const EdgeSet u = useless_edges(link_graph); !u.empty()) {
    node->side = ConeWitness{ConeWitness::Side::Link, u.first()};
  } else if (const EdgeSet u2 = useless_edges(deletion_graph); !u2.empty()) {
    node->side = ConeWitness{ConeWitness::Side::Deletion, u2.first()};
  } else {
    return std::nullopt;
  }

  auto link_child = guided(link_graph, kind, options);
  auto deletion_child = guided(deletion_graph, kind, options);
  if (!link_child || !deletion_child) return std::nullopt;
  node->link_child = std::move(*link_child);
  node->deletion_child = std::move(*deletion_child);
  return GrapeCertificate(std::move(node));
}

void format_node(const GrapeCertificate& cert, const std::function<std::string(int)>& name,
                 const std::string& indent, const std::string& label, std::ostringstream& out) {
  out << indent << label;
  if (cert->kind == GrapeNode::Kind::BaseCase) {
    out << "base\n";
    return;
  }
  out << "split " << name(cert->apex);
  if (const auto* cone = std::get_if<ConeWitness>(&cert->side)) {
    out << " cone-" << (cone->side == ConeWitness::Side::Link ? "link" : "deletion") << " apex "
        << name(cone->cone_apex);
  } else if (const auto* sw = std::get_if<SandwichWitness>(&cert->side)) {
    out << " sandwich " << name(sw->b);
    if (sw->vacuous) out << " vacuous";
  }
  out << '\n';
  format_node(cert->link_child, name, indent + "  ", "link: ", out);
  format_node(cert->deletion_child, name, indent + "  ", "deletion: ", out);
}

}  // namespace

std::optional<GrapeCertificate> is_strong_grape(const SimplicialComplex& c, const GrapeOptions& options) {
  return run_search(c, GrapeMode::Strong, options);
}

std::optional<GrapeCertificate> is_combinatorial_grape(const SimplicialComplex& c,
                                                       const GrapeOptions& options) {
  return run_search(c, GrapeMode::Combinatorial, options);
}

bool replay_certificate(const SimplicialComplex& c, const GrapeCertificate& cert, GrapeMode mode,
                        std::string* why) {
  if (!cert) return fail(why, "missing certificate node");
  if (cert->kind == GrapeNode::Kind::BaseCase) {
    if (c.ground().size() > 1) return fail(why, "base case on a ground set of size > 1");
    return true;
  }
  const int a = cert->apex;
  if (a < 0 || a >= kMaxElements || !c.ground().contains(a)) return fail(why, "split apex not in ground set");
  const SimplicialComplex lk = link(c, a);
  const SimplicialComplex dl = deletion(c, a);

  if (const auto* cone = std::get_if<ConeWitness>(&cert->side)) {
    const SimplicialComplex& side = cone->side == ConeWitness::Side::Link ? lk : dl;
    const int b = cone->cone_apex;
    if (b < 0 || b >= kMaxElements || !side.ground().contains(b) || !is_cone_with_apex(side, b)) {
      return fail(why, "cone witness does not hold at apex " + std::to_string(a));
    }
  } else if (const auto* sw = std::get_if<SandwichWitness>(&cert->side)) {
    if (mode == GrapeMode::Strong) return fail(why, "sandwich witness in a strong-grape certificate");
    const int b = sw->b;
    if (b < 0 || b >= kMaxElements || !lk.ground().contains(b)) return fail(why, "sandwich element not in W\\{a}");
    for (EdgeSet f : lk.faces()) {
      if (!dl.contains(f.with(b))) return fail(why, "sandwich witness does not hold at apex " + std::to_string(a));
    }
  } else {
    return fail(why, "split without a side condition");
  }
  return replay_certificate(lk, cert->link_child, mode, why) &&
         replay_certificate(dl, cert->deletion_child, mode, why);
}

std::optional<GrapeCertificate> graph_guided_strong_grape(const Digraph& g, ComplexKind kind,
                                                          const GrapeOptions& options) {
  return guided(g, kind, options);
}

std::size_t certificate_splits(const GrapeCertificate& cert) {
  if (!cert || cert->kind == GrapeNode::Kind::BaseCase) return 0;
  return 1 + certificate_splits(cert->link_child) + certificate_splits(cert->deletion_child);
}

std::string format_certificate(const GrapeCertificate& cert, const std::function<std::string(int)>& name) {
  std::ostringstream out;
  format_node(cert, name, "", "", out);
  return out.str();
}

}  // namespace pathcx
