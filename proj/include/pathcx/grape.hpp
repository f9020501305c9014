#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "pathcx/complex.hpp"
#include "pathcx/digraph.hpp"
#include "pathcx/path_complex.hpp"

namespace pathcx {

inline constexpr int kDefaultGrapeGroundLimit = 12;

enum class GrapeMode { Strong, Combinatorial };

/// Strong side condition: the link or the deletion of the split apex is a
/// cone with apex `cone_apex`.
struct ConeWitness {
  enum class Side { Link, Deletion };
  Side side;
  int cone_apex;
  friend bool operator==(const ConeWitness&, const ConeWitness&) = default;
};

/// Combinatorial side condition: F + b lies in the deletion for every face F
/// of the link. `vacuous` records that the link had no faces.
struct SandwichWitness {
  int b;
  bool vacuous;
  friend bool operator==(const SandwichWitness&, const SandwichWitness&) = default;
};

struct GrapeNode;
/// Certificates share memoized subtrees, so they form a DAG of immutable nodes.
using GrapeCertificate = std::shared_ptr<const GrapeNode>;

struct GrapeNode {
  enum class Kind { BaseCase, Split };
  Kind kind = Kind::BaseCase;
  int apex = -1;
  std::variant<std::monostate, ConeWitness, SandwichWitness> side;
  GrapeCertificate link_child;
  GrapeCertificate deletion_child;
};

struct GrapeOptions {
  int max_ground = kDefaultGrapeGroundLimit;
  /// Restricts which elements may be tried as split apexes (all by default).
  std::function<bool(const SimplicialComplex&, int)> apex_filter;
};

/// Certificate that c is a strong grape, or nullopt if exhaustive apex search
/// fails. Throws ResourceError when |W| > options.max_ground.
std::optional<GrapeCertificate> is_strong_grape(const SimplicialComplex& c,
                                                const GrapeOptions& options = {});

/// Certificate that c is a combinatorial grape, or nullopt.
///
/// The existential "a cone G on W\{a} with lk(a) <= G <= dl(a)" is decided by:
/// some b in W\{a} has F + b in dl(a) for every face F of lk(a). If such b
/// exists, G = lk(a) u {F + b : F in lk(a)} is downward closed, a cone with
/// apex b, contains lk(a), and lies in dl(a). Conversely, if G is such a cone
/// with apex b, each F in lk(a) is in G, so F + b is in G and hence in dl(a).
/// An empty link passes vacuously (with G empty) once W\{a} is nonempty.
std::optional<GrapeCertificate> is_combinatorial_grape(const SimplicialComplex& c,
                                                       const GrapeOptions& options = {});

/// Re-verifies every step of a certificate against c. In Strong mode only
/// cone witnesses are accepted; in Combinatorial mode both kinds are (a cone
/// link or deletion is itself a valid sandwich). On failure, `why` (if given)
/// receives a description.
bool replay_certificate(const SimplicialComplex& c, const GrapeCertificate& cert, GrapeMode mode,
                        std::string* why = nullptr);

/// Strong-grape certificate for PF(G) or PM(G) built from the graph alone:
/// split on a non-useless edge e leaving s, whose link/deletion are the
/// complexes of G\e and G/e, one of which has a useless edge and hence is a
/// cone. Falls back to exhaustive search when no such edge exists (then the
/// complex is a full simplex or empty). nullopt if a step fails.
std::optional<GrapeCertificate> graph_guided_strong_grape(const Digraph& g, ComplexKind kind,
                                                          const GrapeOptions& options = {});

/// Number of split nodes along the tree (shared subtrees counted once per use).
std::size_t certificate_splits(const GrapeCertificate& cert);

/// Indented, line-oriented rendering; `name` maps element ids to labels.
std::string format_certificate(const GrapeCertificate& cert,
                               const std::function<std::string(int)>& name);

}  // namespace pathcx
