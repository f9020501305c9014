#pragma once

// Brute-force reference implementations used only by the tests. They share
// no code with the library beyond reading a Digraph's edge list, and they
// use different algorithms: fixpoint reachability, degree-pattern subset
// enumeration for paths and cycles, dense GF(2) elimination.

#include <cstdint>
#include <map>
#include <vector>

#include "pathcx/digraph.hpp"

namespace oracle {

using Bits = std::uint64_t;

/// Is t reachable from s using only edges in `within`? Fixpoint iteration.
bool reaches(const pathcx::Digraph& g, Bits within);

/// Edge sets of simple s-t-paths, found by checking degree patterns of every
/// subset of E. {0} when s = t.
std::vector<Bits> path_sets(const pathcx::Digraph& g);
/// Edge sets of simple cycles (including self-loops), by subset checks.
std::vector<Bits> cycle_sets(const pathcx::Digraph& g);

Bits useless(const pathcx::Digraph& g);
int nonsink_count(const pathcx::Digraph& g);
int kappa(const pathcx::Digraph& g);
/// Smallest subset whose removal leaves no s-t-path.
int min_cut(const pathcx::Digraph& g);
/// Largest number of pairwise disjoint path edge sets inside `within`.
int max_disjoint_paths(const pathcx::Digraph& g, Bits within);
/// Fewest edges on an s-t-path, -1 if none.
int shortest_path(const pathcx::Digraph& g);

std::vector<Bits> pm_faces(const pathcx::Digraph& g);
std::vector<Bits> pf_faces(const pathcx::Digraph& g);
std::vector<Bits> pm_r_faces(const pathcx::Digraph& g, int r);
std::vector<Bits> pf_r_faces(const pathcx::Digraph& g, int r);

/// f_0, f_1, ... where f_k counts faces with k elements.
std::vector<long long> f_vector(const std::vector<Bits>& faces);
long long reduced_chi(const std::vector<Bits>& faces);
/// Reduced Betti numbers over GF(2), dense boundary matrices. Nonzero only.
std::map<int, long long> reduced_betti(const std::vector<Bits>& faces);
std::vector<Bits> alexander_dual(const std::vector<Bits>& faces, Bits ground);

/// Faces as a sorted vector, for order-free comparison.
std::vector<Bits> sorted(std::vector<Bits> faces);

}  // namespace oracle
