#include "pathcx/homology.hpp"

#include <algorithm>
#include <iterator>
#include <unordered_map>

namespace pathcx {

namespace {

using Column = std::vector<std::size_t>;  // sorted row indices

// Rank over GF(2) of the matrix given by sparse columns, using the standard
// column reduction keyed on the lowest (largest-index) nonzero row.
std::size_t gf2_rank(std::vector<Column> columns) {
  std::unordered_map<std::size_t, std::size_t> pivot_owner;
  std::size_t rank = 0;
  Column scratch;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    Column& col = columns[j];
    while (!col.empty()) {
      auto it = pivot_owner.find(col.back());
      if (it == pivot_owner.end()) break;
      const Column& other = columns[it->second];
      scratch.clear();
      std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(),
                                    std::back_inserter(scratch));
      col.swap(scratch);
    }
    if (!col.empty()) {
      pivot_owner.emplace(col.back(), j);
      ++rank;
    }
  }
  return rank;
}

}  // namespace

BettiVector gf2_reduced_betti(const SimplicialComplex& c, std::size_t face_limit) {
  if (c.size() > face_limit) {
    throw ResourceError("homology: " + std::to_string(c.size()) + " faces exceed the limit of " +
                        std::to_string(face_limit));
  }
  BettiVector betti;
  if (c.is_void()) return betti;

  const int max_size = c.faces().back().size();
  std::vector<std::vector<EdgeSet>> by_size(static_cast<std::size_t>(max_size) + 1);
  std::unordered_map<EdgeSet, std::size_t, EdgeSetHash> position;
  for (EdgeSet f : c.faces()) {
    auto& bucket = by_size[static_cast<std::size_t>(f.size())];
    position.emplace(f, bucket.size());
    bucket.push_back(f);
  }

  // rank_of[j] = rank of the boundary map from size-j faces to size-(j-1) faces.
  std::vector<std::size_t> rank_of(static_cast<std::size_t>(max_size) + 2, 0);
  for (int j = 1; j <= max_size; ++j) {
    std::vector<Column> columns;
    columns.reserve(by_size[static_cast<std::size_t>(j)].size());
    for (EdgeSet f : by_size[static_cast<std::size_t>(j)]) {
      Column col;
      f.for_each([&](int x) { col.push_back(position.at(f.without(x))); });
      std::sort(col.begin(), col.end());
      columns.push_back(std::move(col));
    }
    rank_of[static_cast<std::size_t>(j)] = gf2_rank(std::move(columns));
  }

  for (int size = 0; size <= max_size; ++size) {
    const auto n = by_size[static_cast<std::size_t>(size)].size();
    const auto cycles = n - rank_of[static_cast<std::size_t>(size)];
    const auto boundaries = rank_of[static_cast<std::size_t>(size) + 1];
    betti.set(size - 1, cycles - boundaries);
  }
  return betti;
}

}  // namespace pathcx
