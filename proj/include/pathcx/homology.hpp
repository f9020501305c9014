#pragma once

#include <cstddef>
#include <map>

#include "pathcx/complex.hpp"

namespace pathcx {

/// Largest complex (in faces) for which homology is computed.
inline constexpr std::size_t kDefaultHomologyFaceLimit = std::size_t{1} << 18;

/// Reduced Betti numbers over GF(2), indexed by dimension (>= -1). Only
/// nonzero entries are stored.
class BettiVector {
 public:
  [[nodiscard]] std::size_t at(int dim) const {
    auto it = values_.find(dim);
    return it == values_.end() ? 0 : it->second;
  }
  void set(int dim, std::size_t value) {
    if (value == 0) {
      values_.erase(dim);
    } else {
      values_[dim] = value;
    }
  }
  [[nodiscard]] const std::map<int, std::size_t>& nonzero() const noexcept { return values_; }
  [[nodiscard]] bool all_zero() const noexcept { return values_.empty(); }
  /// True iff the only nonzero entry is a 1 in dimension `dim`.
  [[nodiscard]] bool is_sphere_of_dim(int dim) const {
    return values_.size() == 1 && at(dim) == 1;
  }
  /// sum over d of (-1)^d b_d; equals the reduced Euler characteristic.
  [[nodiscard]] long long alternating_sum() const {
    long long acc = 0;
    for (const auto& [d, b] : values_) acc += ((d % 2 == 0) ? 1 : -1) * static_cast<long long>(b);
    return acc;
  }
  friend bool operator==(const BettiVector&, const BettiVector&) = default;

 private:
  std::map<int, std::size_t> values_;
};

/// Reduced homology over GF(2) from the augmented chain complex (the empty
/// face spans degree -1). Consequently {{}} has b_{-1} = 1, while the empty
/// complex has no chains and all Betti numbers 0. Throws ResourceError above
/// `face_limit` faces.
BettiVector gf2_reduced_betti(const SimplicialComplex& c,
                              std::size_t face_limit = kDefaultHomologyFaceLimit);

}  // namespace pathcx
