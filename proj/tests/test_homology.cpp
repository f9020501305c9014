#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "corpus.hpp"
#include "oracles.hpp"
#include "pathcx/errors.hpp"
#include "pathcx/homology.hpp"

using namespace pathcx;

namespace {

std::map<int, long long> as_map(const BettiVector& b) {
  std::map<int, long long> out;
  for (const auto& [d, v] : b.nonzero()) out[d] = static_cast<long long>(v);
  return out;
}

}  // namespace

TEST_CASE("dimension -1 conventions") {
  CHECK(gf2_reduced_betti(SimplicialComplex::irrelevant(EdgeSet::prefix(2))).is_sphere_of_dim(-1));
  CHECK(gf2_reduced_betti(SimplicialComplex::empty(EdgeSet::prefix(2))).all_zero());
}

TEST_CASE("spheres and balls") {
  for (int n = 1; n <= 6; ++n) {
    const EdgeSet w = EdgeSet::prefix(n);
    CHECK(gf2_reduced_betti(SimplicialComplex::full_simplex(w)).all_zero());
    CHECK(gf2_reduced_betti(SimplicialComplex::proper_subsets(w)).is_sphere_of_dim(n - 2));
  }
}

TEST_CASE("wedge of two circles and three points") {
  // Two triangles' boundaries sharing the vertex 0.
  const auto c = SimplicialComplex::from_facets(
      EdgeSet::prefix(5), {EdgeSet::of({0, 1}), EdgeSet::of({1, 2}), EdgeSet::of({0, 2}), EdgeSet::of({0, 3}),
                           EdgeSet::of({3, 4}), EdgeSet::of({0, 4})});
  const auto b = gf2_reduced_betti(c);
  CHECK(b.at(1) == 2);
  CHECK(b.nonzero().size() == 1);
  const auto points = SimplicialComplex::from_facets(
      EdgeSet::prefix(3), {EdgeSet::of({0}), EdgeSet::of({1}), EdgeSet::of({2})});
  CHECK(gf2_reduced_betti(points).at(0) == 2);
}

TEST_CASE("face limit guard") {
  CHECK_THROWS_AS(gf2_reduced_betti(SimplicialComplex::full_simplex(EdgeSet::prefix(6)), 10), ResourceError);
}

TEST_CASE("sparse reduction agrees with dense elimination") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const EdgeSet ground = EdgeSet::prefix(n);
    std::vector<EdgeSet> facets;
    const int count = static_cast<int>(rng() % 6);
    for (int i = 0; i < count; ++i) facets.push_back(EdgeSet(rng() & rng() & ground.bits()));
    const auto c = SimplicialComplex::from_facets(ground, facets);
    const auto b = gf2_reduced_betti(c);
    CHECK(as_map(b) == oracle::reduced_betti(testing_support::face_bits(c)));
    CHECK(b.alternating_sum() == reduced_euler_characteristic(c));
  }
}
