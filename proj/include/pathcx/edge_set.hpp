#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace pathcx {

/// Maximum number of distinct element ids (edges, or complex ground elements).
inline constexpr int kMaxElements = 64;

/// A set of element ids in [0, 64), stored as a fixed-width bit mask.
///
/// Used both for edge subsets of a digraph and for faces/ground sets of
/// simplicial complexes. Bit i set <=> element i is a member.
class EdgeSet {
 public:
  constexpr EdgeSet() noexcept = default;
  constexpr explicit EdgeSet(std::uint64_t bits) noexcept : bits_(bits) {}

  static constexpr EdgeSet singleton(int id) noexcept { return EdgeSet(std::uint64_t{1} << id); }
  /// {0, 1, ..., n-1}.
  static constexpr EdgeSet prefix(int n) noexcept {
    return EdgeSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static EdgeSet of(std::initializer_list<int> ids) noexcept {
    EdgeSet r;
    for (int id : ids) r.insert(id);
    return r;
  }

  [[nodiscard]] constexpr std::uint64_t bits() const noexcept { return bits_; }
  [[nodiscard]] constexpr bool empty() const noexcept { return bits_ == 0; }
  [[nodiscard]] constexpr int size() const noexcept { return std::popcount(bits_); }
  [[nodiscard]] constexpr bool contains(int id) const noexcept { return (bits_ >> id) & 1U; }
  [[nodiscard]] constexpr bool subset_of(EdgeSet other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }
  [[nodiscard]] constexpr bool disjoint(EdgeSet other) const noexcept {
    return (bits_ & other.bits_) == 0;
  }
  /// Smallest member; undefined on the empty set.
  [[nodiscard]] constexpr int first() const noexcept { return std::countr_zero(bits_); }

  constexpr void insert(int id) noexcept { bits_ |= std::uint64_t{1} << id; }
  constexpr void erase(int id) noexcept { bits_ &= ~(std::uint64_t{1} << id); }

  [[nodiscard]] constexpr EdgeSet with(int id) const noexcept {
    return EdgeSet(bits_ | (std::uint64_t{1} << id));
  }
  [[nodiscard]] constexpr EdgeSet without(int id) const noexcept {
    return EdgeSet(bits_ & ~(std::uint64_t{1} << id));
  }

  friend constexpr EdgeSet operator|(EdgeSet a, EdgeSet b) noexcept { return EdgeSet(a.bits_ | b.bits_); }
  friend constexpr EdgeSet operator&(EdgeSet a, EdgeSet b) noexcept { return EdgeSet(a.bits_ & b.bits_); }
  /// Set difference.
  friend constexpr EdgeSet operator-(EdgeSet a, EdgeSet b) noexcept { return EdgeSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(EdgeSet a, EdgeSet b) noexcept = default;

  /// Members in increasing order.
  [[nodiscard]] std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  /// Calls fn(id) for every member in increasing order.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) fn(std::countr_zero(b));
  }

  /// Calls fn(subset) for every subset of *this (including empty and *this),
  /// in increasing order of the packed subset index.
  template <typename Fn>
  void for_each_subset(Fn&& fn) const {
    std::uint64_t sub = 0;
    do {
      fn(EdgeSet(sub));
      sub = (sub - bits_) & bits_;
    } while (sub != 0);
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Canonical deterministic order: by size, then by bit pattern.
struct CanonicalLess {
  constexpr bool operator()(EdgeSet a, EdgeSet b) const noexcept {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.bits() < b.bits();
  }
};

/// Lexicographic order on the increasing member sequences.
inline bool lexicographic_less(EdgeSet a, EdgeSet b) noexcept {
  if (a == b) return false;
  const int i = std::countr_zero(a.bits() ^ b.bits());
  const std::uint64_t above = i >= 63 ? 0 : ~std::uint64_t{0} << (i + 1);
  if (a.contains(i)) return (b.bits() & above) != 0;
  return (a.bits() & above) == 0;
}

struct EdgeSetHash {
  std::size_t operator()(EdgeSet s) const noexcept {
    std::uint64_t x = s.bits();
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    return static_cast<std::size_t>(x);
  }
};

}  // namespace pathcx
