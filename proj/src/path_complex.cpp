#include "pathcx/path_complex.hpp"

#include "pathcx/errors.hpp"

namespace pathcx {

namespace {

void require_subset(const Digraph& g, EdgeSet f) {
  if (!f.subset_of(g.edge_set())) throw InputError("edge set is not a subset of the graph's edges");
}

void require_positive(int r) {
  if (r < 1) throw InputError("r must be a positive integer, got " + std::to_string(r));
}

Parity parity_of(long long v) { return (v % 2 == 0) ? Parity::Even : Parity::Odd; }

long long sign_pow(long long exponent) { return (exponent % 2 == 0) ? 1 : -1; }

EdgeId lowest_edge_from_s(const Digraph& g) {
  for (const Edge& e : g.edges()) {
    if (e.source == g.s()) return e.id;
  }
  return -1;
}

}  // namespace

std::string to_string(ComplexKind kind) { return kind == ComplexKind::PathMissing ? "pm" : "pf"; }

std::string HomotopyClass::to_string() const {
  switch (kind_) {
    case Kind::EmptyComplex:
      return "empty";
    case Kind::Contractible:
      return "contractible";
    case Kind::Sphere:
      return "sphere " + std::to_string(dim_);
  }
  return {};
}

std::string to_string(ChiCase c) {
  switch (c) {
    case ChiCase::UselessOrCycle:
      return "useless-or-cycle";
    case ChiCase::EmptyEdgeSet:
      return "empty-edge-set";
    case ChiCase::GenericAcyclic:
      return "generic-acyclic";
  }
  return {};
}

std::string to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

std::string ChiReport::to_string() const {
  return std::to_string(value) + " " + pathcx::to_string(case_tag) + " " + pathcx::to_string(parity);
}

bool pm_member(const Digraph& g, EdgeSet f) {
  require_subset(g, f);
  return has_st_path(g, g.edge_set() - f);
}

bool pf_member(const Digraph& g, EdgeSet f) {
  require_subset(g, f);
  return !has_st_path(g, f);
}

SimplicialComplex build_pm(const Digraph& g, int max_edges) {
  return SimplicialComplex::from_predicate(
      g.edge_set(), [&](EdgeSet f) { return has_st_path(g, g.edge_set() - f); }, max_edges);
}

SimplicialComplex build_pf(const Digraph& g, int max_edges) {
  return SimplicialComplex::from_predicate(
      g.edge_set(), [&](EdgeSet f) { return !has_st_path(g, f); }, max_edges);
}

SimplicialComplex build_complex(const Digraph& g, ComplexKind kind, int max_edges) {
  return kind == ComplexKind::PathMissing ? build_pm(g, max_edges) : build_pf(g, max_edges);
}

IntPolynomial fpoly_dc(const Digraph& g, ComplexKind kind, DcOptions options) {
  const bool pm = kind == ComplexKind::PathMissing;
  const int n = static_cast<int>(g.edge_count());
  // Base cases: every subset contains the trivial path, or none contains a path.
  if (g.s() == g.t()) return pm ? IntPolynomial::one_plus_x_pow(n) : IntPolynomial{};
  if (!has_st_path(g)) return pm ? IntPolynomial{} : IntPolynomial::one_plus_x_pow(n);

  if (options.cone_shortcut) {
    const EdgeSet useless = useless_edges(g);
    if (!useless.empty()) {
      return IntPolynomial{1, 1} * fpoly_dc(delete_edge(g, useless.first()), kind, options);
    }
  }

  // s != t and t is reachable, so some edge leaves s.
  const EdgeId pivot = lowest_edge_from_s(g);
  const IntPolynomial contracted = fpoly_dc(contract_edge(g, pivot), kind, options);
  const IntPolynomial deleted = fpoly_dc(delete_edge(g, pivot), kind, options);
  // PM: dl(e) = PM(G/e), lk(e) = PM(G\e).  PF: dl(e) = PF(G\e), lk(e) = PF(G/e).
  return pm ? contracted + deleted.shifted(1) : deleted + contracted.shifted(1);
}

IntPolynomial fpoly_pm_dc(const Digraph& g, DcOptions options) {
  return fpoly_dc(g, ComplexKind::PathMissing, options);
}

IntPolynomial fpoly_pf_dc(const Digraph& g, DcOptions options) {
  return fpoly_dc(g, ComplexKind::PathFree, options);
}

GraphCase classify(const Digraph& g) {
  GraphCase c;
  c.edge_count = static_cast<int>(g.edge_count());
  c.nonsink_count = static_cast<int>(nonsinks(g).size());
  c.s_equals_t = g.s() == g.t();
  c.has_cycle = has_cycle(g);
  c.has_useless_edge = !useless_edges(g).empty();
  return c;
}

ChiReport chi_pm_closed(const Digraph& g) {
  const GraphCase c = classify(g);
  ChiReport r;
  if (c.useless_or_cycle()) {
    r.value = 0;
    r.case_tag = ChiCase::UselessOrCycle;
  } else if (c.edge_count == 0 && !c.s_equals_t) {
    r.value = 0;
    r.case_tag = ChiCase::EmptyEdgeSet;
  } else {
    r.value = sign_pow(c.edge_count - c.nonsink_count + 1);
    r.case_tag = ChiCase::GenericAcyclic;
  }
  r.parity = parity_of(r.value);
  return r;
}

ChiReport chi_pf_closed(const Digraph& g) {
  const GraphCase c = classify(g);
  ChiReport r;
  if (c.edge_count == 0) {
    r.value = c.s_equals_t ? 0 : -1;
    r.case_tag = ChiCase::EmptyEdgeSet;
  } else if (c.useless_or_cycle()) {
    r.value = 0;
    r.case_tag = ChiCase::UselessOrCycle;
  } else {
    r.value = sign_pow(c.nonsink_count);
    r.case_tag = ChiCase::GenericAcyclic;
  }
  r.parity = parity_of(r.value);
  return r;
}

ChiReport chi_closed(const Digraph& g, ComplexKind kind) {
  return kind == ComplexKind::PathMissing ? chi_pm_closed(g) : chi_pf_closed(g);
}

HomotopyClass homotopy_pm(const Digraph& g) {
  if (!has_st_path(g)) return HomotopyClass::empty();
  const GraphCase c = classify(g);
  if (c.useless_or_cycle()) return HomotopyClass::contractible();
  return HomotopyClass::sphere(c.edge_count - c.nonsink_count - 1);
}

HomotopyClass homotopy_pf(const Digraph& g) {
  if (g.s() == g.t()) return HomotopyClass::empty();
  if (g.edge_count() == 0) return HomotopyClass::sphere(-1);
  const GraphCase c = classify(g);
  if (c.useless_or_cycle()) return HomotopyClass::contractible();
  return HomotopyClass::sphere(c.nonsink_count - 2);
}

HomotopyClass homotopy_class(const Digraph& g, ComplexKind kind) {
  return kind == ComplexKind::PathMissing ? homotopy_pm(g) : homotopy_pf(g);
}

DivisibilityReport check_divisibility(const Digraph& g, std::size_t packing_limit) {
  QuasiCyclePacking packing = max_disjoint_quasi_cycles(g, packing_limit);
  DivisibilityReport r;
  r.kappa = packing.count;
  r.witness = std::move(packing.witness);
  r.f_pm = fpoly_pm_dc(g);
  r.f_pf = fpoly_pf_dc(g);
  r.pm_ok = poly_divisibility(r.f_pm, r.kappa).divisible;
  r.pf_ok = poly_divisibility(r.f_pf, r.kappa).divisible;
  r.pm_remainder = poly_divisibility(r.f_pm, r.kappa + 1).remainder;
  r.pf_remainder = poly_divisibility(r.f_pf, r.kappa + 1).remainder;
  return r;
}

bool pm_r_member(const Digraph& g, EdgeSet f, int r) {
  require_positive(r);
  require_subset(g, f);
  return max_edge_disjoint_st_paths(g, g.edge_set() - f) >= r;
}

bool pf_r_member(const Digraph& g, EdgeSet f, int r) {
  require_positive(r);
  require_subset(g, f);
  return max_edge_disjoint_st_paths(g, f) < r;
}

SimplicialComplex build_pm_r(const Digraph& g, int r, int max_edges) {
  require_positive(r);
  return SimplicialComplex::from_predicate(
      g.edge_set(), [&](EdgeSet f) { return max_edge_disjoint_st_paths(g, g.edge_set() - f) >= r; },
      max_edges);
}

SimplicialComplex build_pf_r(const Digraph& g, int r, int max_edges) {
  require_positive(r);
  return SimplicialComplex::from_predicate(
      g.edge_set(), [&](EdgeSet f) { return max_edge_disjoint_st_paths(g, f) < r; }, max_edges);
}

long long binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long long chi_pf_r_parallel(int k, int r) { return sign_pow(r) * binomial(k - 1, r - 1); }

long long chi_pm_r_parallel(int k, int r) { return sign_pow(k + r - 1) * binomial(k - 1, r - 1); }

}  // namespace pathcx
