#pragma once

#include <cstddef>
#include <string>
#include <unordered_set>
#include <vector>

#include "pathcx/edge_set.hpp"
#include "pathcx/errors.hpp"
#include "pathcx/polynomial.hpp"

namespace pathcx {

/// Largest number of faces a complex may hold.
inline constexpr std::size_t kDefaultFaceLimit = std::size_t{1} << 20;
/// Largest ground set for which all 2^|W| subsets are enumerated.
inline constexpr int kDefaultEnumerationLimit = 20;

/// A finite abstract simplicial complex (W, Delta): a downward-closed family of
/// subsets of the ground set W. Ground elements in no face are allowed.
///
/// The empty complex (no faces) and the irrelevant complex {{}} are distinct
/// values. Faces are kept in canonical order (size, then bit pattern) with a
/// hash index for membership.
class SimplicialComplex {
 public:
  /// Empty complex on the empty ground set.
  SimplicialComplex() = default;

  /// Throws InputError if a face is not inside `ground` or the family is not
  /// downward closed; ResourceError beyond kDefaultFaceLimit faces.
  SimplicialComplex(EdgeSet ground, std::vector<EdgeSet> faces);

  static SimplicialComplex empty(EdgeSet ground);
  /// {{}}: the sphere of dimension -1.
  static SimplicialComplex irrelevant(EdgeSet ground);
  /// All subsets of the ground set.
  static SimplicialComplex full_simplex(EdgeSet ground);
  /// All proper subsets of the ground set.
  static SimplicialComplex proper_subsets(EdgeSet ground);
  /// Downward closure of the given sets.
  static SimplicialComplex from_facets(EdgeSet ground, const std::vector<EdgeSet>& facets);

  /// Every subset F of `ground` with is_face(F). The predicate must describe a
  /// downward-closed family (checked). Throws ResourceError when |ground|
  /// exceeds `max_ground`.
  template <typename Pred>
  static SimplicialComplex from_predicate(EdgeSet ground, Pred&& is_face,
                                          int max_ground = kDefaultEnumerationLimit) {
    check_enumerable(ground, max_ground);
    std::vector<EdgeSet> faces;
    ground.for_each_subset([&](EdgeSet f) {
      if (is_face(f)) faces.push_back(f);
    });
    return SimplicialComplex(ground, std::move(faces));
  }

  [[nodiscard]] EdgeSet ground() const noexcept { return ground_; }
  /// Faces in canonical order.
  [[nodiscard]] const std::vector<EdgeSet>& faces() const noexcept { return faces_; }
  [[nodiscard]] std::size_t size() const noexcept { return faces_.size(); }
  /// True for the complex with no faces (not for {{}}).
  [[nodiscard]] bool is_void() const noexcept { return faces_.empty(); }
  [[nodiscard]] bool contains(EdgeSet f) const { return index_.contains(f); }

  /// Inclusion-maximal faces, canonical order.
  [[nodiscard]] std::vector<EdgeSet> facets() const;

  /// Equal ground sets and equal face families.
  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.ground_ == b.ground_ && a.faces_ == b.faces_;
  }

  static void check_enumerable(EdgeSet ground, int max_ground);

 private:
  struct Trusted {};
  // Skips validation; `faces` must be deduplicated and downward closed.
  SimplicialComplex(Trusted, EdgeSet ground, std::vector<EdgeSet> faces);
  void index_faces();

  EdgeSet ground_;
  std::vector<EdgeSet> faces_;
  std::unordered_set<EdgeSet, EdgeSetHash> index_;

  friend SimplicialComplex deletion(const SimplicialComplex&, int);
  friend SimplicialComplex link(const SimplicialComplex&, int);
  friend SimplicialComplex star(const SimplicialComplex&, int);
  friend SimplicialComplex suspension(const SimplicialComplex&);
};

/// Same face family, ground sets ignored.
bool same_faces(const SimplicialComplex& a, const SimplicialComplex& b);

/// dl(w): ground W\{w}, faces not containing w. Throws InputError if w is not in W.
SimplicialComplex deletion(const SimplicialComplex& c, int w);

/// lk(w): ground W\{w}, faces F with F+w a face. Throws InputError if w is not in W.
SimplicialComplex link(const SimplicialComplex& c, int w);

/// st(w): ground W, faces F with F+w a face. Always a cone with apex w.
SimplicialComplex star(const SimplicialComplex& c, int w);

/// Is F+w a face for every face F? Vacuously true for the empty complex.
bool is_cone_with_apex(const SimplicialComplex& c, int w);

/// Some ground element that is a cone apex of c, or -1.
int find_cone_apex(const SimplicialComplex& c);

/// Faces F of W with W\F not a face of c. Enumerates 2^|W| subsets.
SimplicialComplex alexander_dual(const SimplicialComplex& c,
                                 int max_ground = kDefaultEnumerationLimit);

/// sum over faces of x^|F|.
IntPolynomial f_polynomial(const SimplicialComplex& c);

/// sum over faces of (-1)^(|F|-1).
long long reduced_euler_characteristic(const SimplicialComplex& c);

/// Join with two fresh points y, z (the two smallest ids outside W): faces
/// A + U for A a face and U a proper subset of {y, z}.
SimplicialComplex suspension(const SimplicialComplex& c);

/// Inclusion-minimal subsets of W that are not faces, canonical order.
std::vector<EdgeSet> minimal_nonfaces(const SimplicialComplex& c);

/// |W| - (size of a largest face). Throws DomainError for the empty complex.
int codimension(const SimplicialComplex& c);

/// Faces of either complex, on the union of the ground sets.
SimplicialComplex face_union(const SimplicialComplex& a, const SimplicialComplex& b);
/// Faces common to both complexes, on the intersection of the ground sets.
SimplicialComplex face_intersection(const SimplicialComplex& a, const SimplicialComplex& b);

}  // namespace pathcx
