#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <climits>

namespace oracle {

namespace {

Bits all_edges(const pathcx::Digraph& g) {
  Bits b = 0;
  for (const pathcx::Edge& e : g.edges()) b |= Bits{1} << e.id;
  return b;
}

template <typename Fn>
void for_subsets(Bits ground, Fn&& fn) {
  Bits sub = 0;
  do {
    fn(sub);
    sub = (sub - ground) & ground;
  } while (sub != 0);
}

struct Degrees {
  std::map<int, int> in;
  std::map<int, int> out;
};

Degrees degrees(const pathcx::Digraph& g, Bits set) {
  Degrees d;
  for (const pathcx::Edge& e : g.edges()) {
    if ((set >> e.id) & 1U) {
      ++d.out[e.source];
      ++d.in[e.target];
    }
  }
  return d;
}

// Follows the unique out-edge inside `set` from `start` for up to |set| steps;
// returns the number of steps taken before getting stuck or returning to `stop`.
int walk(const pathcx::Digraph& g, Bits set, int start, int stop) {
  int v = start;
  int steps = 0;
  const int n = std::popcount(set);
  while (steps < n) {
    const pathcx::Edge* next = nullptr;
    for (const pathcx::Edge& e : g.edges()) {
      if (((set >> e.id) & 1U) && e.source == v) next = &e;
    }
    if (!next) break;
    v = next->target;
    ++steps;
    if (v == stop) break;
  }
  return v == stop ? steps : -1;
}

bool is_path_set(const pathcx::Digraph& g, Bits set) {
  if (set == 0) return false;
  const int s = g.s();
  const int t = g.t();
  Degrees d = degrees(g, set);
  if (d.out[s] != 1 || d.in[s] != 0 || d.in[t] != 1 || d.out[t] != 0) return false;
  for (const int v : g.vertices()) {
    if (v == s || v == t) continue;
    if (d.in[v] != d.out[v] || d.in[v] > 1) return false;
  }
  return walk(g, set, s, t) == std::popcount(set);
}

bool is_cycle_set(const pathcx::Digraph& g, Bits set) {
  if (set == 0) return false;
  Degrees d = degrees(g, set);
  for (const int v : g.vertices()) {
    if (d.in[v] != d.out[v] || d.in[v] > 1) return false;
  }
  const int first = std::countr_zero(set);
  const int start = g.edge(first).source;
  return walk(g, set, start, start) == std::popcount(set);
}

int pack(const std::vector<Bits>& sets, std::size_t i, Bits used) {
  if (i == sets.size()) return 0;
  int best = pack(sets, i + 1, used);
  if ((sets[i] & used) == 0) best = std::max(best, 1 + pack(sets, i + 1, used | sets[i]));
  return best;
}

std::vector<Bits> faces_where(const pathcx::Digraph& g, auto&& is_face) {
  std::vector<Bits> out;
  for_subsets(all_edges(g), [&](Bits f) {
    if (is_face(f)) out.push_back(f);
  });
  return out;
}

// Rank over GF(2) of the given columns (each a bit vector over rows).
long long rank(std::vector<std::vector<Bits>> cols) {
  long long r = 0;
  std::vector<bool> used(cols.size(), false);
  if (cols.empty()) return 0;
  const std::size_t words = cols.front().size();
  for (std::size_t w = 0; w < words; ++w) {
    for (int bit = 0; bit < 64; ++bit) {
      std::size_t pivot = cols.size();
      for (std::size_t c = 0; c < cols.size(); ++c) {
        if (!used[c] && ((cols[c][w] >> bit) & 1U)) {
          pivot = c;
          break;
        }
      }
      if (pivot == cols.size()) continue;
      used[pivot] = true;
      ++r;
      for (std::size_t c = 0; c < cols.size(); ++c) {
        if (c != pivot && ((cols[c][w] >> bit) & 1U)) {
          for (std::size_t k = 0; k < words; ++k) cols[c][k] ^= cols[pivot][k];
        }
      }
    }
  }
  return r;
}

}  // namespace

bool reaches(const pathcx::Digraph& g, Bits within) {
  std::vector<bool> seen(static_cast<std::size_t>(g.vertex_capacity()), false);
  seen[static_cast<std::size_t>(g.s())] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const pathcx::Edge& e : g.edges()) {
      if (((within >> e.id) & 1U) && seen[static_cast<std::size_t>(e.source)] &&
          !seen[static_cast<std::size_t>(e.target)]) {
        seen[static_cast<std::size_t>(e.target)] = true;
        changed = true;
      }
    }
  }
  return seen[static_cast<std::size_t>(g.t())];
}

std::vector<Bits> path_sets(const pathcx::Digraph& g) {
  if (g.s() == g.t()) return {0};
  return faces_where(g, [&](Bits f) { return is_path_set(g, f); });
}

std::vector<Bits> cycle_sets(const pathcx::Digraph& g) {
  return faces_where(g, [&](Bits f) { return is_cycle_set(g, f); });
}

Bits useless(const pathcx::Digraph& g) {
  Bits useful = 0;
  for (Bits p : path_sets(g)) useful |= p;
  return all_edges(g) & ~useful;
}

int nonsink_count(const pathcx::Digraph& g) {
  std::vector<int> sources;
  for (const pathcx::Edge& e : g.edges()) sources.push_back(e.source);
  std::sort(sources.begin(), sources.end());
  return static_cast<int>(std::unique(sources.begin(), sources.end()) - sources.begin());
}

int kappa(const pathcx::Digraph& g) {
  std::vector<Bits> quasi = cycle_sets(g);
  const Bits u = useless(g);
  for (int e = 0; e < 64; ++e) {
    if ((u >> e) & 1U) quasi.push_back(Bits{1} << e);
  }
  std::sort(quasi.begin(), quasi.end());
  quasi.erase(std::unique(quasi.begin(), quasi.end()), quasi.end());
  return pack(quasi, 0, 0);
}

int min_cut(const pathcx::Digraph& g) {
  int best = INT_MAX;
  const Bits e = all_edges(g);
  for_subsets(e, [&](Bits cut) {
    if (!reaches(g, e & ~cut)) best = std::min(best, std::popcount(cut));
  });
  return best;
}

int max_disjoint_paths(const pathcx::Digraph& g, Bits within) {
  if (g.s() == g.t()) return INT_MAX;
  std::vector<Bits> inside;
  for (Bits p : path_sets(g)) {
    if ((p & ~within) == 0) inside.push_back(p);
  }
  return pack(inside, 0, 0);
}

int shortest_path(const pathcx::Digraph& g) {
  int best = -1;
  for (Bits p : path_sets(g)) {
    const int n = std::popcount(p);
    if (best < 0 || n < best) best = n;
  }
  return best;
}

std::vector<Bits> pm_faces(const pathcx::Digraph& g) {
  const Bits e = all_edges(g);
  return faces_where(g, [&](Bits f) { return g.s() == g.t() || reaches(g, e & ~f); });
}

std::vector<Bits> pf_faces(const pathcx::Digraph& g) {
  return faces_where(g, [&](Bits f) { return g.s() != g.t() && !reaches(g, f); });
}

std::vector<Bits> pm_r_faces(const pathcx::Digraph& g, int r) {
  const Bits e = all_edges(g);
  return faces_where(g, [&](Bits f) { return max_disjoint_paths(g, e & ~f) >= r; });
}

std::vector<Bits> pf_r_faces(const pathcx::Digraph& g, int r) {
  return faces_where(g, [&](Bits f) { return max_disjoint_paths(g, f) < r; });
}

std::vector<long long> f_vector(const std::vector<Bits>& faces) {
  std::vector<long long> f;
  for (Bits x : faces) {
    const auto k = static_cast<std::size_t>(std::popcount(x));
    if (f.size() <= k) f.resize(k + 1, 0);
    ++f[k];
  }
  return f;
}

long long reduced_chi(const std::vector<Bits>& faces) {
  long long chi = 0;
  for (Bits x : faces) chi += (std::popcount(x) % 2 == 1) ? 1 : -1;
  return chi;
}

std::map<int, long long> reduced_betti(const std::vector<Bits>& faces) {
  // by_size[k] lists faces with k elements (dimension k - 1).
  std::vector<std::vector<Bits>> by_size;
  for (Bits x : faces) {
    const auto k = static_cast<std::size_t>(std::popcount(x));
    if (by_size.size() <= k) by_size.resize(k + 1);
    by_size[k].push_back(x);
  }
  // boundary_rank[k]: rank of the map from k-element faces to (k-1)-element faces.
  std::vector<long long> boundary_rank(by_size.size() + 1, 0);
  for (std::size_t k = 1; k < by_size.size(); ++k) {
    const std::vector<Bits>& rows = by_size[k - 1];
    std::map<Bits, std::size_t> row_index;
    for (std::size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = i;
    const std::size_t words = (rows.size() + 63) / 64;
    std::vector<std::vector<Bits>> cols;
    for (Bits x : by_size[k]) {
      std::vector<Bits> col(std::max<std::size_t>(words, 1), 0);
      for (int e = 0; e < 64; ++e) {
        if (!((x >> e) & 1U)) continue;
        const std::size_t i = row_index.at(x & ~(Bits{1} << e));
        col[i / 64] ^= Bits{1} << (i % 64);
      }
      cols.push_back(std::move(col));
    }
    boundary_rank[k] = rank(std::move(cols));
  }
  std::map<int, long long> out;
  for (std::size_t k = 0; k < by_size.size(); ++k) {
    const long long b =
        static_cast<long long>(by_size[k].size()) - boundary_rank[k] - boundary_rank[k + 1];
    if (b != 0) out[static_cast<int>(k) - 1] = b;
  }
  return out;
}

std::vector<Bits> alexander_dual(const std::vector<Bits>& faces, Bits ground) {
  std::vector<Bits> sorted_faces = sorted(faces);
  std::vector<Bits> out;
  for_subsets(ground, [&](Bits f) {
    if (!std::binary_search(sorted_faces.begin(), sorted_faces.end(), ground & ~f)) out.push_back(f);
  });
  return out;
}

std::vector<Bits> sorted(std::vector<Bits> faces) {
  std::sort(faces.begin(), faces.end());
  return faces;
}

}  // namespace oracle
