#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "corpus.hpp"
#include "oracles.hpp"
#include "pathcx/complex.hpp"
#include "pathcx/errors.hpp"

using namespace pathcx;

namespace {

const EdgeSet kABC = EdgeSet::prefix(3);

// Random downward-closed family: closure of a few random sets.
SimplicialComplex random_complex(std::mt19937_64& rng, int n) {
  const EdgeSet ground = EdgeSet::prefix(n);
  std::vector<EdgeSet> facets;
  const int count = static_cast<int>(rng() % 4);
  for (int i = 0; i < count; ++i) facets.push_back(EdgeSet(rng() & ground.bits()));
  return SimplicialComplex::from_facets(ground, facets);
}

std::vector<oracle::Bits> bits(const std::vector<EdgeSet>& v) {
  std::vector<oracle::Bits> out;
  for (EdgeSet e : v) out.push_back(e.bits());
  return out;
}

}  // namespace

TEST_CASE("validation") {
  CHECK_THROWS_AS(SimplicialComplex(kABC, {EdgeSet::of({0, 1})}), InputError);
  CHECK_THROWS_AS(SimplicialComplex(EdgeSet::of({0}), {EdgeSet{}, EdgeSet::of({3})}), InputError);
  const SimplicialComplex c(kABC, {EdgeSet::of({0}), EdgeSet{}, EdgeSet::of({0})});
  CHECK(c.size() == 2);
  CHECK(c.faces().front() == EdgeSet{});
}

TEST_CASE("empty and irrelevant complexes differ") {
  const auto empty = SimplicialComplex::empty(kABC);
  const auto irrelevant = SimplicialComplex::irrelevant(kABC);
  CHECK(empty.is_void());
  CHECK_FALSE(irrelevant.is_void());
  CHECK_FALSE(empty == irrelevant);
  CHECK(reduced_euler_characteristic(empty) == 0);
  CHECK(reduced_euler_characteristic(irrelevant) == -1);
  CHECK(f_polynomial(empty).is_zero());
  CHECK(f_polynomial(irrelevant) == IntPolynomial{1});
}

TEST_CASE("full simplex and proper subsets") {
  for (int n = 1; n <= 6; ++n) {
    const EdgeSet w = EdgeSet::prefix(n);
    CHECK(reduced_euler_characteristic(SimplicialComplex::full_simplex(w)) == 0);
    CHECK(reduced_euler_characteristic(SimplicialComplex::proper_subsets(w)) == (n % 2 == 0 ? 1 : -1));
    CHECK(f_polynomial(SimplicialComplex::full_simplex(w)) == IntPolynomial::one_plus_x_pow(n));
  }
  CHECK(reduced_euler_characteristic(SimplicialComplex::full_simplex(EdgeSet{})) == -1);
}

TEST_CASE("deletion, link and star") {
  // Path a - b - c as a 1-dimensional complex.
  const auto c = SimplicialComplex::from_facets(kABC, {EdgeSet::of({0, 1}), EdgeSet::of({1, 2})});
  const auto lk = link(c, 1);
  CHECK(lk.ground() == EdgeSet::of({0, 2}));
  CHECK(lk.faces() == std::vector<EdgeSet>{EdgeSet{}, EdgeSet::of({0}), EdgeSet::of({2})});
  const auto dl = deletion(c, 1);
  CHECK(dl.faces() == std::vector<EdgeSet>{EdgeSet{}, EdgeSet::of({0}), EdgeSet::of({2})});
  const auto st = star(c, 1);
  CHECK(st.ground() == kABC);
  CHECK(st == c);
  CHECK(is_cone_with_apex(c, 1));
  CHECK_FALSE(is_cone_with_apex(c, 0));
  CHECK(find_cone_apex(c) == 1);
  CHECK_THROWS_AS(link(c, 5), InputError);
  CHECK_THROWS_AS(deletion(c, 5), InputError);
}

TEST_CASE("the empty complex is a cone with every apex") {
  const auto empty = SimplicialComplex::empty(kABC);
  CHECK(is_cone_with_apex(empty, 0));
  CHECK(find_cone_apex(SimplicialComplex::empty(EdgeSet{})) == -1);
}

TEST_CASE("alexander dual") {
  const auto c = SimplicialComplex::from_facets(kABC, {EdgeSet::of({0, 1})});
  const auto d = alexander_dual(c);
  // W \ F is a face iff W \ F is a subset of {a, b} iff c is in F.
  for (EdgeSet f : d.faces()) CHECK_FALSE(c.contains(kABC - f));
  CHECK(alexander_dual(d) == c);
  CHECK(alexander_dual(SimplicialComplex::empty(kABC)) == SimplicialComplex::full_simplex(kABC));
  CHECK(alexander_dual(SimplicialComplex::irrelevant(kABC)) == SimplicialComplex::proper_subsets(kABC));
}

TEST_CASE("minimal non-faces and codimension") {
  const auto c = SimplicialComplex::from_facets(kABC, {EdgeSet::of({0, 1}), EdgeSet::of({2})});
  CHECK(minimal_nonfaces(c) == std::vector<EdgeSet>{EdgeSet::of({0, 2}), EdgeSet::of({1, 2})});
  CHECK(codimension(c) == 1);
  CHECK(minimal_nonfaces(SimplicialComplex::empty(kABC)) == std::vector<EdgeSet>{EdgeSet{}});
  CHECK(minimal_nonfaces(SimplicialComplex::full_simplex(kABC)).empty());
  CHECK(codimension(SimplicialComplex::irrelevant(kABC)) == 3);
  CHECK_THROWS_AS(codimension(SimplicialComplex::empty(kABC)), DomainError);
}

TEST_CASE("suspension") {
  const auto s0 = suspension(SimplicialComplex::irrelevant(EdgeSet{}));
  CHECK(s0.ground() == EdgeSet::prefix(2));
  CHECK(s0.size() == 3);
  CHECK(reduced_euler_characteristic(s0) == 1);
  CHECK(suspension(SimplicialComplex::empty(kABC)).is_void());
  const auto c = SimplicialComplex::from_facets(kABC, {EdgeSet::of({0, 1}), EdgeSet::of({2})});
  CHECK(reduced_euler_characteristic(suspension(c)) == -reduced_euler_characteristic(c));
  CHECK(suspension(c).ground() == EdgeSet::prefix(5));
}

TEST_CASE("enumeration guards") {
  CHECK_THROWS_AS(SimplicialComplex::from_predicate(EdgeSet::prefix(21), [](EdgeSet) { return true; }),
                  ResourceError);
  CHECK_THROWS_AS(alexander_dual(SimplicialComplex::irrelevant(EdgeSet::prefix(8)), 7), ResourceError);
}

TEST_CASE("identities on random complexes") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const SimplicialComplex c = random_complex(rng, n);
    std::vector<oracle::Bits> faces = testing_support::face_bits(c);
    CHECK(reduced_euler_characteristic(c) == oracle::reduced_chi(faces));
    const auto fv = oracle::f_vector(faces);
    for (std::size_t k = 0; k < fv.size(); ++k) CHECK(f_polynomial(c)[k] == fv[k]);
    CHECK(testing_support::face_bits(alexander_dual(c)) ==
          oracle::sorted(oracle::alexander_dual(faces, c.ground().bits())));
    CHECK(f_polynomial(c).evaluate(-1) == -reduced_euler_characteristic(c));
    for (int w : c.ground().members()) {
      CHECK(f_polynomial(c) == f_polynomial(deletion(c, w)) + f_polynomial(link(c, w)).shifted(1));
      CHECK(same_faces(face_union(deletion(c, w), star(c, w)), c));
      CHECK(same_faces(face_intersection(deletion(c, w), star(c, w)), link(c, w)));
    }
    // Facets are complements of the dual's minimal non-faces.
    std::vector<oracle::Bits> complements;
    for (EdgeSet m : minimal_nonfaces(alexander_dual(c))) complements.push_back((c.ground() - m).bits());
    CHECK(oracle::sorted(complements) == oracle::sorted(bits(c.facets())));
  }
}
