#pragma once

// Named graph families, seeded random connected graphs and exhaustive
// labeled connected-graph enumeration.
//
// All randomness comes from SplitMix64 below, never from the platform, so
// identical (n, edge_prob, seed) triples produce identical graphs on every
// platform and the corpora stay byte-reproducible.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "comfteam/graph.hpp"

namespace comfteam {

/// SplitMix64 (Steele, Lea, Flood; the java.util.SplittableRandom mixer).
/// Derived values are part of the interface contract:
///   next_below(b) = next() % b, next_unit() = (next() >> 11) * 2^-53.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

  double next_unit() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }
};

enum class GraphFamily { kPath, kCycle, kComplete, kStar };

struct FamilySpec {
  GraphFamily family = GraphFamily::kPath;
  int n = 1;
};

/// Canonical family graphs: paths/cycles numbered along the walk, star
/// center at vertex 0.
inline Graph gen_family(const FamilySpec& spec) {
  const int n = spec.n;
  std::vector<std::pair<int, int>> edges;
  switch (spec.family) {
    case GraphFamily::kPath:
      if (n < 1) throw std::invalid_argument("path needs n >= 1");
      for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case GraphFamily::kCycle:
      if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
      for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(0, n - 1);
      break;
    case GraphFamily::kComplete:
      if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      break;
    case GraphFamily::kStar:
      if (n < 2) throw std::invalid_argument("star needs n >= 2");
      for (int leaf = 1; leaf < n; ++leaf) edges.emplace_back(0, leaf);
      break;
  }
  return Graph(n, edges);
}

inline Graph gen_path(int n) { return gen_family({GraphFamily::kPath, n}); }
inline Graph gen_cycle(int n) { return gen_family({GraphFamily::kCycle, n}); }
inline Graph gen_complete(int n) {
  return gen_family({GraphFamily::kComplete, n});
}
inline Graph gen_star(int n) { return gen_family({GraphFamily::kStar, n}); }

/// Bit position of the unordered pair (u,v), u < v, in the edge-mask layout:
/// pairs ordered by u ascending, then v ascending.
inline int pair_bit_index(int u, int v, int n) {
  if (u < 0 || v <= u || v >= n)
    throw std::invalid_argument("pair_bit_index: bad pair (" +
                                std::to_string(u) + "," + std::to_string(v) +
                                ") for n=" + std::to_string(n));
  return u * n - u * (u + 1) / 2 + (v - u - 1);
}

inline Graph graph_from_edge_mask(int n, std::uint64_t mask) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (mask & (1ULL << pair_bit_index(u, v, n))) edges.emplace_back(u, v);
  return Graph(n, edges);
}

/// Seeded Erdos-Renyi draw, retried until connected; after 64 failed
/// attempts a random permutation path is laid down first and the remaining
/// pairs are drawn independently, which forces connectivity.
inline Graph random_connected(int n, double edge_prob, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_connected: n must be >= 1");
  if (edge_prob < 0.0 || edge_prob > 1.0)
    throw std::invalid_argument("random_connected: edge_prob must be in [0,1]");
  SplitMix64 rng(seed);
  constexpr int kAttempts = 64;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng.next_unit() < edge_prob) edges.emplace_back(u, v);
    Graph g(n, edges);
    if (is_connected(g)) return g;
  }
  // Spanning-path patch: Fisher-Yates permutation, path along it, then the
  // non-path pairs drawn independently.
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  for (int i = n - 1; i >= 1; --i) {
    const auto j = static_cast<std::size_t>(
        rng.next_below(static_cast<std::uint64_t>(i) + 1));
    std::swap(perm[static_cast<std::size_t>(i)], perm[j]);
  }
  std::vector<std::vector<char>> on_path(
      static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) {
    const int u = perm[static_cast<std::size_t>(i)];
    const int v = perm[static_cast<std::size_t>(i + 1)];
    edges.emplace_back(u, v);
    on_path[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
    on_path[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (on_path[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) continue;
      if (rng.next_unit() < edge_prob) edges.emplace_back(u, v);
    }
  return Graph(n, edges);
}

/// Streams every connected labeled graph on n vertices, iterating all
/// 2^(n(n-1)/2) edge masks in ascending numeric order. n <= 7.
template <class Visit>
void enumerate_connected_labeled(int n, Visit&& visit) {
  if (n < 1 || n > 7)
    throw std::invalid_argument(
        "enumerate_connected_labeled: n must be in [1,7]");
  const int bits = n * (n - 1) / 2;
  for (std::uint64_t mask = 0; mask < (1ULL << bits); ++mask) {
    Graph g = graph_from_edge_mask(n, mask);
    if (is_connected(g)) visit(g);
  }
}

inline long count_connected_labeled(int n) {
  long count = 0;
  enumerate_connected_labeled(n, [&](const Graph&) { ++count; });
  return count;
}

}  // namespace comfteam
