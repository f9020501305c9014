#include "pathcx/complex.hpp"

#include <algorithm>

namespace pathcx {

namespace {

void require_element(const SimplicialComplex& c, int w) {
  if (w < 0 || w >= kMaxElements || !c.ground().contains(w)) {
    throw InputError("element " + std::to_string(w) + " is not in the ground set");
  }
}

void sort_canonical(std::vector<EdgeSet>& v) {
  std::sort(v.begin(), v.end(), CanonicalLess{});
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

SimplicialComplex::SimplicialComplex(EdgeSet ground, std::vector<EdgeSet> faces)
    : ground_(ground), faces_(std::move(faces)) {
  if (faces_.size() > kDefaultFaceLimit) {
    throw ResourceError("complex has " + std::to_string(faces_.size()) +
                        " faces; the face limit is " + std::to_string(kDefaultFaceLimit));
  }
  sort_canonical(faces_);
  index_faces();
  for (EdgeSet f : faces_) {
    if (!f.subset_of(ground_)) throw InputError("face is not contained in the ground set");
    f.for_each([&](int x) {
      if (!contains(f.without(x))) throw InputError("face family is not downward closed");
    });
  }
}

SimplicialComplex::SimplicialComplex(Trusted, EdgeSet ground, std::vector<EdgeSet> faces)
    : ground_(ground), faces_(std::move(faces)) {
  sort_canonical(faces_);
  index_faces();
}

void SimplicialComplex::index_faces() {
  index_.clear();
  index_.reserve(faces_.size());
  index_.insert(faces_.begin(), faces_.end());
}

void SimplicialComplex::check_enumerable(EdgeSet ground, int max_ground) {
  if (ground.size() > max_ground) {
    throw ResourceError("ground set of size " + std::to_string(ground.size()) +
                        " exceeds the enumeration limit of " + std::to_string(max_ground));
  }
}

SimplicialComplex SimplicialComplex::empty(EdgeSet ground) { return {Trusted{}, ground, {}}; }

SimplicialComplex SimplicialComplex::irrelevant(EdgeSet ground) { return {Trusted{}, ground, {EdgeSet{}}}; }

SimplicialComplex SimplicialComplex::full_simplex(EdgeSet ground) {
  check_enumerable(ground, kDefaultEnumerationLimit);
  std::vector<EdgeSet> faces;
  ground.for_each_subset([&](EdgeSet f) { faces.push_back(f); });
  return {Trusted{}, ground, std::move(faces)};
}

SimplicialComplex SimplicialComplex::proper_subsets(EdgeSet ground) {
  check_enumerable(ground, kDefaultEnumerationLimit);
  std::vector<EdgeSet> faces;
  ground.for_each_subset([&](EdgeSet f) {
    if (f != ground) faces.push_back(f);
  });
  return {Trusted{}, ground, std::move(faces)};
}

SimplicialComplex SimplicialComplex::from_facets(EdgeSet ground, const std::vector<EdgeSet>& facets) {
  std::unordered_set<EdgeSet, EdgeSetHash> all;
  for (EdgeSet f : facets) {
    if (!f.subset_of(ground)) throw InputError("facet is not contained in the ground set");
    check_enumerable(f, kDefaultEnumerationLimit);
    f.for_each_subset([&](EdgeSet sub) { all.insert(sub); });
  }
  return {Trusted{}, ground, std::vector<EdgeSet>(all.begin(), all.end())};
}

std::vector<EdgeSet> SimplicialComplex::facets() const {
  std::vector<EdgeSet> out;
  for (EdgeSet f : faces_) {
    bool maximal = true;
    (ground_ - f).for_each([&](int x) {
      if (maximal && contains(f.with(x))) maximal = false;
    });
    if (maximal) out.push_back(f);
  }
  return out;
}

bool same_faces(const SimplicialComplex& a, const SimplicialComplex& b) { return a.faces() == b.faces(); }

SimplicialComplex deletion(const SimplicialComplex& c, int w) {
  require_element(c, w);
  std::vector<EdgeSet> faces;
  for (EdgeSet f : c.faces()) {
    if (!f.contains(w)) faces.push_back(f);
  }
  return {SimplicialComplex::Trusted{}, c.ground().without(w), std::move(faces)};
}

SimplicialComplex link(const SimplicialComplex& c, int w) {
  require_element(c, w);
  std::vector<EdgeSet> faces;
  for (EdgeSet f : c.faces()) {
    if (f.contains(w)) faces.push_back(f.without(w));
  }
  return {SimplicialComplex::Trusted{}, c.ground().without(w), std::move(faces)};
}

SimplicialComplex star(const SimplicialComplex& c, int w) {
  require_element(c, w);
  std::vector<EdgeSet> faces;
  for (EdgeSet f : c.faces()) {
    if (c.contains(f.with(w))) faces.push_back(f);
  }
  return {SimplicialComplex::Trusted{}, c.ground(), std::move(faces)};
}

bool is_cone_with_apex(const SimplicialComplex& c, int w) {
  require_element(c, w);
  return std::all_of(c.faces().begin(), c.faces().end(),
                     [&](EdgeSet f) { return c.contains(f.with(w)); });
}

int find_cone_apex(const SimplicialComplex& c) {
  for (int w : c.ground().members()) {
    if (is_cone_with_apex(c, w)) return w;
  }
  return -1;
}

SimplicialComplex alexander_dual(const SimplicialComplex& c, int max_ground) {
  const EdgeSet w = c.ground();
  return SimplicialComplex::from_predicate(
      w, [&](EdgeSet f) { return !c.contains(w - f); }, max_ground);
}

IntPolynomial f_polynomial(const SimplicialComplex& c) {
  std::vector<IntPolynomial::Coeff> counts(static_cast<std::size_t>(c.ground().size()) + 1, 0);
  for (EdgeSet f : c.faces()) ++counts[static_cast<std::size_t>(f.size())];
  return IntPolynomial(std::move(counts));
}

long long reduced_euler_characteristic(const SimplicialComplex& c) {
  long long chi = 0;
  for (EdgeSet f : c.faces()) chi += (f.size() % 2 == 0) ? -1 : 1;
  return chi;
}

SimplicialComplex suspension(const SimplicialComplex& c) {
  const EdgeSet outside = EdgeSet::prefix(kMaxElements) - c.ground();
  if (outside.size() < 2) throw ResourceError("no fresh element ids left for the suspension");
  const int y = outside.first();
  const int z = outside.without(y).first();
  std::vector<EdgeSet> faces;
  faces.reserve(c.size() * 3);
  for (EdgeSet a : c.faces()) {
    faces.push_back(a);
    faces.push_back(a.with(y));
    faces.push_back(a.with(z));
  }
  return {SimplicialComplex::Trusted{}, c.ground().with(y).with(z), std::move(faces)};
}

std::vector<EdgeSet> minimal_nonfaces(const SimplicialComplex& c) {
  if (c.is_void()) return {EdgeSet{}};
  // Every minimal non-face is a face plus one element.
  std::vector<EdgeSet> out;
  std::unordered_set<EdgeSet, EdgeSetHash> seen;
  for (EdgeSet f : c.faces()) {
    (c.ground() - f).for_each([&](int x) {
      const EdgeSet cand = f.with(x);
      if (c.contains(cand) || !seen.insert(cand).second) return;
      bool minimal = true;
      cand.for_each([&](int y) {
        if (minimal && !c.contains(cand.without(y))) minimal = false;
      });
      if (minimal) out.push_back(cand);
    });
  }
  sort_canonical(out);
  return out;
}

int codimension(const SimplicialComplex& c) {
  if (c.is_void()) throw DomainError("codimension of the empty complex is undefined");
  return c.ground().size() - c.faces().back().size();
}

SimplicialComplex face_union(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::vector<EdgeSet> faces = a.faces();
  faces.insert(faces.end(), b.faces().begin(), b.faces().end());
  return SimplicialComplex(a.ground() | b.ground(), std::move(faces));
}

SimplicialComplex face_intersection(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::vector<EdgeSet> faces;
  for (EdgeSet f : a.faces()) {
    if (b.contains(f)) faces.push_back(f);
  }
  return SimplicialComplex(a.ground() & b.ground(), std::move(faces));
}

}  // namespace pathcx
