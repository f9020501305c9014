#pragma once

#include <string>
#include <vector>

#include "pathcx/complex.hpp"
#include "pathcx/digraph.hpp"
#include "pathcx/polynomial.hpp"

namespace pathcx {

/// PM(G) = {F : E\F contains an s-t-path}; PF(G) = {F : F contains no s-t-path}.
enum class ComplexKind { PathMissing, PathFree };

std::string to_string(ComplexKind kind);

/// Homotopy type predicted for PF(G) / PM(G). Sphere(-1) is the irrelevant
/// complex {{}} and is kept apart from Contractible (their reduced Euler
/// characteristics differ).
class HomotopyClass {
 public:
  enum class Kind { EmptyComplex, Contractible, Sphere };

  static HomotopyClass empty() { return HomotopyClass(Kind::EmptyComplex, 0); }
  static HomotopyClass contractible() { return HomotopyClass(Kind::Contractible, 0); }
  static HomotopyClass sphere(int dim) { return HomotopyClass(Kind::Sphere, dim); }

  [[nodiscard]] Kind kind() const noexcept { return kind_; }
  /// Sphere dimension (>= -1); 0 for the other kinds.
  [[nodiscard]] int dimension() const noexcept { return dim_; }
  /// `empty` | `contractible` | `sphere <d>`.
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const HomotopyClass&, const HomotopyClass&) = default;

 private:
  HomotopyClass(Kind kind, int dim) : kind_(kind), dim_(dim) {}
  Kind kind_;
  int dim_;
};

enum class ChiCase { UselessOrCycle, EmptyEdgeSet, GenericAcyclic };
enum class Parity { Even, Odd };

std::string to_string(ChiCase c);
std::string to_string(Parity p);

/// Closed-form reduced Euler characteristic with the case that produced it.
/// The parity is that of the value, hence of the number of faces.
struct ChiReport {
  long long value = 0;
  ChiCase case_tag = ChiCase::GenericAcyclic;
  Parity parity = Parity::Even;

  /// `<value> <case> <parity>`, e.g. `0 useless-or-cycle even`.
  [[nodiscard]] std::string to_string() const;
  friend bool operator==(const ChiReport&, const ChiReport&) = default;
};

/// Does E\F contain an s-t-path? Throws InputError unless F is a subset of E.
bool pm_member(const Digraph& g, EdgeSet f);
/// Is F free of s-t-paths? Throws InputError unless F is a subset of E.
bool pf_member(const Digraph& g, EdgeSet f);

/// Explicit complexes on ground set E by subset enumeration. Throws
/// ResourceError when |E| > max_edges.
SimplicialComplex build_pm(const Digraph& g, int max_edges = kDefaultEnumerationLimit);
SimplicialComplex build_pf(const Digraph& g, int max_edges = kDefaultEnumerationLimit);
SimplicialComplex build_complex(const Digraph& g, ComplexKind kind,
                                int max_edges = kDefaultEnumerationLimit);

struct DcOptions {
  /// When some edge e is useless, both complexes are cones with apex e and
  /// f(G) = (1+x) f(G\e). Off by default; results must agree either way.
  bool cone_shortcut = false;
};

/// f-polynomials by deletion-contraction on the lowest-id edge e leaving s:
///   f_PM(G) = f_PM(G/e) + x f_PM(G\e),  f_PF(G) = f_PF(G\e) + x f_PF(G/e).
IntPolynomial fpoly_pm_dc(const Digraph& g, DcOptions options = {});
IntPolynomial fpoly_pf_dc(const Digraph& g, DcOptions options = {});
IntPolynomial fpoly_dc(const Digraph& g, ComplexKind kind, DcOptions options = {});

/// Structural facts the closed forms branch on. Cycles are checked before
/// useless edges so acyclic graphs get the reachability shortcut.
struct GraphCase {
  bool has_cycle = false;
  bool has_useless_edge = false;
  int edge_count = 0;
  int nonsink_count = 0;
  bool s_equals_t = false;
  [[nodiscard]] bool useless_or_cycle() const noexcept { return has_cycle || has_useless_edge; }
};
GraphCase classify(const Digraph& g);

ChiReport chi_pm_closed(const Digraph& g);
ChiReport chi_pf_closed(const Digraph& g);
ChiReport chi_closed(const Digraph& g, ComplexKind kind);

HomotopyClass homotopy_pm(const Digraph& g);
HomotopyClass homotopy_pf(const Digraph& g);
HomotopyClass homotopy_class(const Digraph& g, ComplexKind kind);

struct DivisibilityReport {
  int kappa = 0;
  std::vector<QuasiCycle> witness;
  IntPolynomial f_pm;
  IntPolynomial f_pf;
  bool pm_ok = false;
  bool pf_ok = false;
  /// Remainders modulo (1+x)^(kappa+1); reported, not interpreted.
  IntPolynomial pm_remainder;
  IntPolynomial pf_remainder;
};

/// Checks that (1+x)^kappa divides both f-polynomials, kappa being the exact
/// maximum number of disjoint quasi-cycles.
DivisibilityReport check_divisibility(const Digraph& g,
                                      std::size_t packing_limit = kDefaultPackingLimit);

/// PM(G, r): E\F contains r edge-disjoint s-t-paths. PF(G, r): F does not.
/// Decided by unit-capacity max flow. When s = t every subset counts as
/// containing r such paths. Throws InputError for r < 1 or F not in E.
bool pm_r_member(const Digraph& g, EdgeSet f, int r);
bool pf_r_member(const Digraph& g, EdgeSet f, int r);

SimplicialComplex build_pm_r(const Digraph& g, int r, int max_edges = kDefaultEnumerationLimit);
SimplicialComplex build_pf_r(const Digraph& g, int r, int max_edges = kDefaultEnumerationLimit);

/// Known values for the graph of k parallel s->t edges, 1 <= r <= k:
///   chi(PF(G, r)) = (-1)^r C(k-1, r-1),  chi(PM(G, r)) = (-1)^(k+r-1) C(k-1, r-1).
long long chi_pf_r_parallel(int k, int r);
long long chi_pm_r_parallel(int k, int r);

long long binomial(int n, int k);

}  // namespace pathcx
